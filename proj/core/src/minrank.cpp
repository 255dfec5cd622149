#include "minrank/minrank.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <string>

namespace minrank {

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget) :
    std::runtime_error("enumeration needs " + std::to_string(required) + " matrices, budget is "
                       + std::to_string(budget)),
    required_(required), budget_(budget)
{
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_pow_product(std::uint64_t a, int ea, std::uint64_t b, int eb) noexcept
{
    std::uint64_t out = 1;
    auto times = [&](std::uint64_t x) {
        if (x != 0 && out > kSaturated / x)
            out = kSaturated;
        else
            out *= x;
    };
    for (int i = 0; i < ea && out != kSaturated; ++i)
        times(a);
    for (int i = 0; i < eb && out != kSaturated; ++i)
        times(b);
    return out;
}

// BFS spanning forest; returns the set of tree edges as (u, v) pairs.
std::vector<std::pair<int, int>> spanning_forest(const Graph& g)
{
    std::vector<std::pair<int, int>> tree;
    VertexMask seen = 0;
    for (int root = 0; root < g.order(); ++root) {
        if ((seen >> root) & 1u)
            continue;
        seen |= VertexMask{1} << root;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            VertexMask fresh = g.neighbors(u) & ~seen;
            while (fresh) {
                const int w = std::countr_zero(fresh);
                fresh &= fresh - 1;
                seen |= VertexMask{1} << w;
                tree.emplace_back(std::min(u, w), std::max(u, w));
                queue.push_back(w);
            }
        }
    }
    return tree;
}

MinRankResult min_rank_gf2(const Graph& g, const MinRankOptions& opt, int floor)
{
    const int n = g.order();
    const std::uint64_t total = std::uint64_t{1} << n;
    if (total > opt.budget)
        throw BudgetExceeded(total, opt.budget);

    std::array<std::uint64_t, kMaxVertices> base{};
    for (int i = 0; i < n; ++i)
        base[static_cast<std::size_t>(i)] = g.neighbors(i);

    MinRankResult res{n, 0, true};
    std::array<std::uint64_t, kMaxVertices> rows{};
    for (std::uint64_t diag = 0; diag < total; ++diag) {
        for (int i = 0; i < n; ++i)
            rows[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>(i)] | (((diag >> i) & 1u) << i);
        const int r = rank_gf2_inplace(std::span(rows.data(), static_cast<std::size_t>(n)));
        ++res.visited;
        if (r < res.mr) {
            res.mr = r;
            if (r <= floor)
                break;
            if (opt.stop_at >= 0 && r <= opt.stop_at) {
                res.exact = false;
                break;
            }
        }
    }
    return res;
}

MinRankResult min_rank_gfp(FieldSpec field, const Graph& g, const MinRankOptions& opt, int floor)
{
    const int n = g.order();
    const int p = field.p();
    const auto tree = spanning_forest(g);
    std::vector<std::pair<int, int>> free_edges;
    for (const auto& e : g.edges())
        if (std::find(tree.begin(), tree.end(), e) == tree.end())
            free_edges.push_back(e);

    const std::uint64_t total = saturating_pow_product(static_cast<std::uint64_t>(p - 1), static_cast<int>(free_edges.size()),
                                                       static_cast<std::uint64_t>(p), n);
    if (total > opt.budget)
        throw BudgetExceeded(total, opt.budget);

    std::vector<std::uint8_t> base(static_cast<std::size_t>(n * n), 0);
    auto cell = [&](int r, int c) -> std::uint8_t& { return base[static_cast<std::size_t>(r * n + c)]; };
    for (auto [u, v] : g.edges())
        cell(u, v) = cell(v, u) = 1;

    // digits: n diagonal entries (0..p-1), then free edge entries (1..p-1)
    const int ndig = n + static_cast<int>(free_edges.size());
    std::vector<int> digit(static_cast<std::size_t>(ndig), 0);
    for (int k = n; k < ndig; ++k)
        digit[static_cast<std::size_t>(k)] = 1;

    auto write_digit = [&](int k) {
        const auto value = static_cast<std::uint8_t>(digit[static_cast<std::size_t>(k)]);
        if (k < n) {
            cell(k, k) = value;
        } else {
            auto [u, v] = free_edges[static_cast<std::size_t>(k - n)];
            cell(u, v) = cell(v, u) = value;
        }
    };

    MinRankResult res{n, 0, true};
    std::vector<std::uint8_t> scratch(base.size());
    while (true) {
        std::copy(base.begin(), base.end(), scratch.begin());
        const int r = rank_inplace(field, scratch, n, n);
        ++res.visited;
        if (r < res.mr) {
            res.mr = r;
            if (r <= floor)
                break;
            if (opt.stop_at >= 0 && r <= opt.stop_at) {
                res.exact = false;
                break;
            }
        }
        int k = 0;
        for (; k < ndig; ++k) {
            int& d = digit[static_cast<std::size_t>(k)];
            const int lo = k < n ? 0 : 1;
            if (++d < p) {
                write_digit(k);
                break;
            }
            d = lo;
            write_digit(k);
        }
        if (k == ndig)
            break;
    }
    return res;
}

} // namespace

std::uint64_t pattern_count(FieldSpec field, const Graph& g) noexcept
{
    return saturating_pow_product(static_cast<std::uint64_t>(field.p() - 1), g.edge_count(),
                                  static_cast<std::uint64_t>(field.p()), g.order());
}

FMatrix pattern_matrix(FieldSpec field, const Graph& g, std::span<const std::uint8_t> diagonal)
{
    FMatrix m(field, g.order(), g.order());
    for (auto [u, v] : g.edges()) {
        m.set(u, v, 1);
        m.set(v, u, 1);
    }
    for (int i = 0; i < g.order() && static_cast<std::size_t>(i) < diagonal.size(); ++i)
        m.set(i, i, diagonal[static_cast<std::size_t>(i)]);
    return m;
}

// ---------------------------------------------------------------------------

PatternEnumeration::PatternEnumeration(FieldSpec field, const Graph& g, std::uint64_t budget) :
    field_(field), edges_(g.edges()), count_(pattern_count(field, g)), current_(field, g.order(), g.order())
{
    if (count_ > budget)
        throw BudgetExceeded(count_, budget);
    const int n = g.order();
    digits_.assign(static_cast<std::size_t>(n) + edges_.size(), 0);
    for (std::size_t k = static_cast<std::size_t>(n); k < digits_.size(); ++k)
        digits_[k] = 1;
    for (auto [u, v] : edges_) {
        current_.set(u, v, 1);
        current_.set(v, u, 1);
    }
}

bool PatternEnumeration::next()
{
    if (done_)
        return false;
    if (!started_) {
        started_ = true;
        return true;
    }
    const int n = current_.rows();
    const int p = field_.p();
    for (std::size_t k = 0; k < digits_.size(); ++k) {
        const int lo = static_cast<int>(k) < n ? 0 : 1;
        int& d = digits_[k];
        const bool carry = ++d >= p;
        if (carry)
            d = lo;
        if (static_cast<int>(k) < n) {
            current_.set(static_cast<int>(k), static_cast<int>(k), d);
        } else {
            auto [u, v] = edges_[k - static_cast<std::size_t>(n)];
            current_.set(u, v, d);
            current_.set(v, u, d);
        }
        if (!carry)
            return true;
    }
    done_ = true;
    return false;
}

// ---------------------------------------------------------------------------

MinRankResult min_rank_search(FieldSpec field, const Graph& g, const MinRankOptions& options)
{
    if (g.order() == 0)
        return {0, 0, true};
    if (g.edge_count() == 0)
        return {0, 1, true};
    const int floor = std::max(options.lower_bound, 1);
    if (field.p() == 2)
        return min_rank_gf2(g, options, floor);
    return min_rank_gfp(field, g, options, floor);
}

int min_rank(FieldSpec field, const Graph& g, std::uint64_t budget, int lower_bound)
{
    MinRankOptions opt;
    opt.budget = budget;
    opt.lower_bound = lower_bound;
    return min_rank_search(field, g, opt).mr;
}

int MRSet::class_of(int matrix_index) const
{
    for (std::size_t c = 0; c < classes.size(); ++c)
        if (std::find(classes[c].begin(), classes[c].end(), matrix_index) != classes[c].end())
            return static_cast<int>(c);
    return -1;
}

int MRSet::find(const FMatrix& m) const
{
    for (std::size_t i = 0; i < matrices.size(); ++i)
        if (matrices[i] == m)
            return static_cast<int>(i);
    return -1;
}

MRSet min_rank_set(FieldSpec field, const Graph& g, std::uint64_t budget)
{
    PatternEnumeration en(field, g, budget);
    MRSet out{field, g.order(), {}, {}};
    while (en.next()) {
        const int r = rank(en.current());
        if (r < out.mr) {
            out.mr = r;
            out.matrices.clear();
        }
        if (r == out.mr)
            out.matrices.push_back(en.current());
    }
    for (std::size_t i = 0; i < out.matrices.size(); ++i) {
        bool placed = false;
        for (auto& cls : out.classes)
            if (col_space_equal(out.matrices[static_cast<std::size_t>(cls.front())], out.matrices[i])) {
                cls.push_back(static_cast<int>(i));
                placed = true;
                break;
            }
        if (!placed)
            out.classes.push_back({static_cast<int>(i)});
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

int cut_vertex_rank(FieldSpec field, const Graph& g, std::uint64_t budget, CutVertexResult& stats)
{
    if (g.order() <= 1)
        return 0;
    const auto comps = components(g);
    if (comps.size() > 1) {
        stats.decomposed = true;
        int sum = 0;
        for (auto c : comps)
            sum += cut_vertex_rank(field, induced_subgraph(g, c), budget, stats);
        return sum;
    }
    const auto cuts = cut_vertices(g);
    if (cuts.empty()) {
        ++stats.leaves;
        return min_rank(field, g, budget);
    }
    stats.decomposed = true;
    const int v = cuts.front();
    const VertexMask vbit = VertexMask{1} << v;
    int with_v = 0;
    int without_v = 0;
    for (auto piece : components(g, g.all_vertices() & ~vbit)) {
        with_v += cut_vertex_rank(field, induced_subgraph(g, piece | vbit), budget, stats);
        without_v += cut_vertex_rank(field, induced_subgraph(g, piece), budget, stats);
    }
    return std::min(with_v, without_v + 2);
}

} // namespace

CutVertexResult mr_via_cut_vertex_detailed(FieldSpec field, const Graph& g, std::uint64_t budget)
{
    CutVertexResult out;
    out.mr = cut_vertex_rank(field, g, budget, out);
    return out;
}

int mr_via_cut_vertex(FieldSpec field, const Graph& g, std::uint64_t budget)
{
    return mr_via_cut_vertex_detailed(field, g, budget).mr;
}

} // namespace minrank
