#include "minrank/canon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>

namespace minrank {

namespace {

// Stable colour refinement restricted to `active` vertices. Vertices outside
// `active` keep their colour and act only as distinguishing context.
void refine(const Graph& g, std::vector<int>& colour, VertexMask active)
{
    const int n = g.order();
    int classes = -1;
    std::vector<std::pair<std::vector<int>, int>> sigs;
    while (true) {
        sigs.clear();
        for (int v = 0; v < n; ++v) {
            if (!((active >> v) & 1u))
                continue;
            std::vector<int> sig;
            sig.push_back(colour[static_cast<std::size_t>(v)]);
            std::vector<int> nb;
            VertexMask m = g.neighbors(v) & active;
            while (m) {
                nb.push_back(colour[static_cast<std::size_t>(std::countr_zero(m))]);
                m &= m - 1;
            }
            std::sort(nb.begin(), nb.end());
            sig.insert(sig.end(), nb.begin(), nb.end());
            sigs.emplace_back(std::move(sig), v);
        }
        std::vector<std::vector<int>> distinct;
        distinct.reserve(sigs.size());
        for (const auto& s : sigs)
            distinct.push_back(s.first);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (const auto& [sig, v] : sigs)
            colour[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), sig) - distinct.begin());
        const int now = static_cast<int>(distinct.size());
        if (now == classes)
            break;
        classes = now;
    }
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order())
    {
        base_.assign(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v)
            base_[static_cast<std::size_t>(v)] = g.degree(v);
        refine(g_, base_, g_.all_vertices());
    }

    CanonicalLabeling run()
    {
        seq_.clear();
        cols_.assign(static_cast<std::size_t>(n_), 0);
        search(0, 0);
        CanonicalLabeling out;
        out.form.n = n_;
        std::uint64_t code = 0;
        for (int k = 1; k < n_; ++k)
            code = (code << k) | best_cols_[static_cast<std::size_t>(k)];
        out.form.code = code;
        out.position.assign(static_cast<std::size_t>(n_), 0);
        for (int k = 0; k < n_; ++k)
            out.position[static_cast<std::size_t>(best_seq_[static_cast<std::size_t>(k)])] = k;
        return out;
    }

private:
    // -1: prefix smaller than best, 0: equal, 1: greater
    int compare_prefix(int depth) const
    {
        if (!have_best_)
            return -1;
        for (int k = 1; k <= depth; ++k) {
            const auto a = cols_[static_cast<std::size_t>(k)];
            const auto b = best_cols_[static_cast<std::size_t>(k)];
            if (a != b)
                return a < b ? -1 : 1;
        }
        return 0;
    }

    std::vector<int> candidate_cell(VertexMask placed) const
    {
        const VertexMask unplaced = g_.all_vertices() & ~placed;
        std::vector<int> colour(static_cast<std::size_t>(n_), 0);
        // colour = (base colour, adjacency to the placed prefix in order)
        std::vector<std::pair<std::pair<int, std::uint32_t>, int>> keys;
        for (int v = 0; v < n_; ++v) {
            if (!((unplaced >> v) & 1u))
                continue;
            std::uint32_t pattern = 0;
            for (int s : seq_)
                pattern = (pattern << 1) | (g_.has_edge(s, v) ? 1u : 0u);
            keys.push_back({{base_[static_cast<std::size_t>(v)], pattern}, v});
        }
        std::vector<std::pair<int, std::uint32_t>> distinct;
        for (const auto& k : keys)
            distinct.push_back(k.first);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (const auto& [key, v] : keys)
            colour[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), key) - distinct.begin());
        refine(g_, colour, unplaced);

        int best = -1;
        for (int v = 0; v < n_; ++v)
            if ((unplaced >> v) & 1u)
                if (best < 0 || colour[static_cast<std::size_t>(v)] < best)
                    best = colour[static_cast<std::size_t>(v)];
        std::vector<int> cell;
        for (int v = 0; v < n_; ++v)
            if (((unplaced >> v) & 1u) && colour[static_cast<std::size_t>(v)] == best)
                cell.push_back(v);
        return cell;
    }

    bool twins(int u, int v) const
    {
        const VertexMask ignore = (VertexMask{1} << u) | (VertexMask{1} << v);
        return ((g_.neighbors(u) ^ g_.neighbors(v)) & ~ignore) == 0;
    }

    void search(int depth, VertexMask placed)
    {
        if (depth == n_) {
            if (compare_prefix(n_ - 1) < 0) {
                best_cols_ = cols_;
                best_seq_ = seq_;
                have_best_ = true;
            }
            return;
        }
        const auto cell = candidate_cell(placed);
        std::vector<int> tried;
        for (int v : cell) {
            if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); }))
                continue;
            tried.push_back(v);
            std::uint32_t col = 0;
            for (int s : seq_)
                col = (col << 1) | (g_.has_edge(s, v) ? 1u : 0u);
            cols_[static_cast<std::size_t>(depth)] = col;
            if (compare_prefix(depth) > 0)
                continue;
            seq_.push_back(v);
            search(depth + 1, placed | (VertexMask{1} << v));
            seq_.pop_back();
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> base_;
    std::vector<int> seq_;
    std::vector<std::uint32_t> cols_;
    std::vector<std::uint32_t> best_cols_;
    std::vector<int> best_seq_;
    bool have_best_ = false;
};

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g)
{
    if (g.order() > kMaxCanonicalVertices)
        throw std::invalid_argument("canonical forms are limited to graphs on at most 10 vertices");
    if (g.order() == 0)
        return {};
    return CanonicalSearch(g).run();
}

CanonicalForm canonical_form(const Graph& g)
{
    return canonical_labeling(g).form;
}

Graph canonical_graph(const Graph& g)
{
    const auto lab = canonical_labeling(g);
    return relabel(g, lab.position);
}

Graph graph_from_form(const CanonicalForm& f)
{
    Graph g(f.n);
    const int total = f.n * (f.n - 1) / 2;
    int k = 0;
    for (int j = 1; j < f.n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((f.code >> (total - 1 - k)) & 1u)
                g.add_edge(i, j);
    return g;
}

bool is_isomorphic(const Graph& g, const Graph& h)
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return false;
    if (degree_sequence(g) != degree_sequence(h))
        return false;
    return canonical_form(g) == canonical_form(h);
}

void for_each_subset_of_size(int n, int k, const std::function<bool(VertexMask)>& visit)
{
    if (k < 0 || k > n)
        return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        VertexMask m = 0;
        for (int i : idx)
            m |= VertexMask{1} << i;
        if (!visit(m))
            return;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

namespace {

template <class OnCopy>
void scan_induced(const Graph& host, const Graph& pattern, OnCopy&& on_copy)
{
    const int k = pattern.order();
    if (host.order() > kMaxCanonicalVertices)
        throw std::invalid_argument("induced subgraph search supports hosts with at most 10 vertices");
    if (k > host.order())
        return;
    const int edges = pattern.edge_count();
    const auto degrees = degree_sequence(pattern);
    const auto lab = canonical_labeling(pattern);

    for_each_subset_of_size(host.order(), k, [&](VertexMask s) {
        std::vector<int> d;
        int twice = 0;
        for (int v = 0; v < host.order(); ++v)
            if ((s >> v) & 1u) {
                const int deg = std::popcount(host.neighbors(v) & s);
                d.push_back(deg);
                twice += deg;
            }
        if (twice != 2 * edges)
            return true;
        std::sort(d.begin(), d.end(), std::greater<>());
        if (d != degrees)
            return true;
        const Graph sub = induced_subgraph(host, s);
        const auto sub_lab = canonical_labeling(sub);
        if (sub_lab.form != lab.form)
            return true;
        std::vector<int> verts;
        for (int v = 0; v < host.order(); ++v)
            if ((s >> v) & 1u)
                verts.push_back(v);
        std::vector<int> at_position(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            at_position[static_cast<std::size_t>(sub_lab.position[static_cast<std::size_t>(i)])] = verts[static_cast<std::size_t>(i)];
        InducedCopy copy{s, std::vector<int>(static_cast<std::size_t>(k))};
        for (int i = 0; i < k; ++i)
            copy.map[static_cast<std::size_t>(i)] = at_position[static_cast<std::size_t>(lab.position[static_cast<std::size_t>(i)])];
        return on_copy(std::move(copy));
    });
}

} // namespace

std::vector<InducedCopy> find_induced_copies(const Graph& host, const Graph& pattern)
{
    std::vector<InducedCopy> out;
    scan_induced(host, pattern, [&](InducedCopy c) {
        out.push_back(std::move(c));
        return true;
    });
    return out;
}

bool contains_induced(const Graph& host, const Graph& pattern)
{
    bool found = false;
    scan_induced(host, pattern, [&](InducedCopy) {
        found = true;
        return false;
    });
    return found;
}

} // namespace minrank
