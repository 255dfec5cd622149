#include "minrank/profile.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace minrank {

Embedding make_embedding(const Graph& host, const Graph& pattern, std::vector<int> map)
{
    if (static_cast<int>(map.size()) != pattern.order())
        throw std::invalid_argument("embedding map size differs from pattern order");
    VertexMask used = 0;
    for (int v : map) {
        if (v < 0 || v >= host.order())
            throw std::invalid_argument("embedding maps to a vertex outside the host");
        if ((used >> v) & 1u)
            throw std::invalid_argument("embedding map is not injective");
        used |= VertexMask{1} << v;
    }
    for (int i = 0; i < pattern.order(); ++i)
        for (int j = i + 1; j < pattern.order(); ++j)
            if (pattern.has_edge(i, j) != host.has_edge(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]))
                throw std::invalid_argument("embedding is not an induced copy of the pattern");
    Embedding e{host, pattern, std::move(map), {}};
    for (int v = 0; v < host.order(); ++v)
        if (!((used >> v) & 1u))
            e.outside.push_back(v);
    return e;
}

std::vector<Embedding> embeddings(const Graph& host, const Graph& pattern)
{
    std::vector<Embedding> out;
    for (auto& copy : find_induced_copies(host, pattern))
        out.push_back(make_embedding(host, pattern, std::move(copy.map)));
    return out;
}

Weights weights(const Embedding& e, FieldSpec field)
{
    Weights w;
    const auto m = e.outside.size();
    for (int v : e.outside) {
        FVector vec(field, e.map.size());
        for (std::size_t i = 0; i < e.map.size(); ++i)
            vec.set(i, e.host.has_edge(v, e.map[i]) ? 1 : 0);
        w.vertex.push_back(std::move(vec));
    }
    w.pair.assign(m, std::vector<std::uint8_t>(m, 0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (a != b && e.host.has_edge(e.outside[a], e.outside[b]))
                w.pair[a][b] = 1;
    return w;
}

WeightOutsideColumnSpace::WeightOutsideColumnSpace(std::size_t index) :
    std::invalid_argument("weight " + std::to_string(index) + " is not in the column space"), index_(index)
{
}

FMatrix rank_preserving_table(const FMatrix& m, std::span<const FVector> weights)
{
    FMatrix a(m.field(), m.cols(), static_cast<int>(weights.size()));
    for (std::size_t i = 0; i < weights.size(); ++i) {
        auto member = col_space_contains(m, weights[i]);
        if (!member.contains)
            throw WeightOutsideColumnSpace(i);
        for (int r = 0; r < m.cols(); ++r)
            a.set(r, static_cast<int>(i), member.witness[static_cast<std::size_t>(r)]);
    }
    return a.transpose() * m * a;
}

// ---------------------------------------------------------------------------

MatrixMask IncreaseProfile::all() const noexcept
{
    return matrix_count >= 64 ? ~MatrixMask{0} : ((MatrixMask{1} << matrix_count) - 1);
}

MatrixMask IncreaseProfile::vertex_union(VertexMask local) const
{
    MatrixMask out = 0;
    while (local) {
        out |= vertex.at(static_cast<std::size_t>(std::countr_zero(local)));
        local &= local - 1;
    }
    return out;
}

MatrixMask IncreaseProfile::pair_union(std::span<const std::pair<int, int>> pairs) const
{
    MatrixMask out = 0;
    for (auto [a, b] : pairs)
        out |= pair.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b));
    return out;
}

MatrixMask IncreaseProfile::class_mask(int c) const
{
    MatrixMask m = 0;
    for (int i : classes.at(static_cast<std::size_t>(c)))
        m |= MatrixMask{1} << i;
    return m;
}

std::vector<int> IncreaseProfile::classes_within(MatrixMask mask) const
{
    std::vector<int> out;
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
        const auto cm = class_mask(c);
        if ((cm & mask) == cm)
            out.push_back(c);
    }
    return out;
}

bool IncreaseProfile::is_union_of_classes(MatrixMask mask) const
{
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
        const auto cm = class_mask(c);
        const auto hit = cm & mask;
        if (hit != 0 && hit != cm)
            return false;
    }
    return true;
}

IncreaseProfile increase_profile(const Embedding& e, const MRSet& pattern_set)
{
    if (pattern_set.matrices.size() > 64)
        throw std::invalid_argument("increase profiles support at most 64 minimum-rank matrices");
    IncreaseProfile prof;
    prof.matrix_count = static_cast<int>(pattern_set.matrices.size());
    prof.classes = pattern_set.classes;
    prof.outside = e.outside;

    const auto w = weights(e, pattern_set.field);
    const auto m = e.outside.size();
    prof.pair_weight = w.pair;
    prof.vertex.assign(m, 0);
    prof.pair.assign(m, std::vector<MatrixMask>(m, 0));
    for (const auto& vec : w.vertex)
        prof.zero_weight.push_back(vec.is_zero());

    for (std::size_t k = 0; k < pattern_set.matrices.size(); ++k) {
        const auto& mat = pattern_set.matrices[k];
        const MatrixMask bit = MatrixMask{1} << k;
        const int r = rank(mat);
        for (std::size_t a = 0; a < m; ++a)
            if (!col_space_contains(mat, w.vertex[a]).contains)
                prof.vertex[a] |= bit;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                if (bordered_rank(mat, w.vertex[a], w.vertex[b], w.pair[a][b]) > r) {
                    prof.pair[a][b] |= bit;
                    prof.pair[b][a] |= bit;
                }
    }
    return prof;
}

// ---------------------------------------------------------------------------

int OptimalTriple::objective() const noexcept
{
    return 2 * static_cast<int>(pairs.size()) + vertex_count();
}

int OptimalTriple::endpoint_count() const noexcept
{
    return std::popcount(endpoints);
}

int OptimalTriple::vertex_count() const noexcept
{
    return std::popcount(vertices);
}

namespace {

std::vector<int> mask_list(VertexMask m)
{
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

} // namespace

std::optional<OptimalTriple> find_optimal_triple(const IncreaseProfile& profile, PairPolicy policy)
{
    const int m = profile.outside_count();
    if (m > 6)
        throw std::invalid_argument("optimal triple search supports at most 6 vertices outside the pattern");

    std::vector<std::pair<int, int>> candidates;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (policy == PairPolicy::all_pairs || profile.pair_weight[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                candidates.emplace_back(a, b);

    const auto full = profile.all();
    const auto npairs = candidates.size();
    const std::size_t rcount = std::size_t{1} << npairs;
    const std::size_t tcount = std::size_t{1} << m;

    std::vector<MatrixMask> ir(rcount, 0);
    std::vector<VertexMask> endpoints(rcount, 0);
    for (std::size_t r = 1; r < rcount; ++r) {
        const auto low = static_cast<std::size_t>(std::countr_zero(r));
        const auto [a, b] = candidates[low];
        ir[r] = ir[r & (r - 1)] | profile.pair[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        endpoints[r] = endpoints[r & (r - 1)] | (VertexMask{1} << a) | (VertexMask{1} << b);
    }
    std::vector<MatrixMask> it(tcount, 0);
    for (std::size_t t = 1; t < tcount; ++t)
        it[t] = it[t & (t - 1)] | profile.vertex[static_cast<std::size_t>(std::countr_zero(t))];

    if ((ir[rcount - 1] | it[tcount - 1]) != full || profile.matrix_count == 0)
        return std::nullopt;

    struct Key {
        int objective, r, s;
        std::vector<int> rlist, tlist;
        auto operator<=>(const Key&) const = default;
    };
    std::optional<Key> best;
    std::size_t best_r = 0, best_t = 0;
    for (std::size_t r = 0; r < rcount; ++r) {
        const int rsize = std::popcount(r);
        for (std::size_t t = 0; t < tcount; ++t) {
            if ((ir[r] | it[t]) != full)
                continue;
            const int obj = 2 * rsize + std::popcount(t);
            if (best && obj > best->objective)
                continue;
            Key key{obj, rsize, std::popcount(endpoints[r]), mask_list(static_cast<VertexMask>(r)),
                    mask_list(static_cast<VertexMask>(t))};
            if (!best || key < *best) {
                best = std::move(key);
                best_r = r;
                best_t = t;
            }
        }
    }

    OptimalTriple out;
    for (std::size_t k = 0; k < npairs; ++k)
        if ((best_r >> k) & 1u) {
            out.pairs.push_back(candidates[k]);
            if (!profile.pair_weight[static_cast<std::size_t>(candidates[k].first)][static_cast<std::size_t>(candidates[k].second)])
                out.uses_zero_weight_pairs = true;
        }
    out.endpoints = endpoints[best_r];
    out.vertices = static_cast<VertexMask>(best_t);
    return out;
}

// ---------------------------------------------------------------------------

bool PropertyReport::all_hold() const noexcept
{
    auto ok = [](const std::optional<bool>& b) { return !b.has_value() || *b; };
    return edge_incidence && p1_union_of_classes && p2_endpoints_within_pairs && ok(p3_classes_not_covered)
        && ok(p4_class_in_pairs_only) && minimal_vertices && minimal_pairs && endpoints_disjoint_from_vertices && triple_size_bounds
        && ok(size_bound) && ok(vertex_not_increasing_for_all) && ok(pair_not_increasing_for_all)
        && ok(no_zero_weight_vertex);
}

PropertyReport check_properties(const IncreaseProfile& prof, const std::optional<OptimalTriple>& triple,
                                bool relative_member)
{
    PropertyReport rep;
    const int m = prof.outside_count();
    const auto full = prof.all();
    auto at = [&](int a, int b) { return prof.pair[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

    for (int v = 0; v < m; ++v)
        for (int w = 0; w < m; ++w)
            if (v != w && (prof.vertex[static_cast<std::size_t>(v)] & ~at(v, w)) != 0)
                rep.edge_incidence = false;

    if (relative_member && m >= 2) {
        rep.vertex_not_increasing_for_all = std::none_of(prof.vertex.begin(), prof.vertex.end(),
                                                         [&](MatrixMask x) { return x == full; });
    }
    if (relative_member && m >= 3) {
        bool ok = true;
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                if (at(a, b) == full)
                    ok = false;
        rep.pair_not_increasing_for_all = ok;
        rep.no_zero_weight_vertex = std::none_of(prof.zero_weight.begin(), prof.zero_weight.end(), [](bool z) { return z; });
    }

    if (!triple)
        return rep;

    const auto& tr = *triple;
    const auto is_ = prof.vertex_union(tr.endpoints);
    const auto it_ = prof.vertex_union(tr.vertices);
    const auto ir_ = prof.pair_union(tr.pairs);

    rep.p1_union_of_classes = prof.is_union_of_classes(is_) && prof.is_union_of_classes(it_);
    rep.p2_endpoints_within_pairs = (is_ & ~ir_) == 0;
    rep.endpoints_disjoint_from_vertices = (tr.endpoints & tr.vertices) == 0;

    for (int v : mask_list(tr.vertices)) {
        const auto others = prof.vertex_union(tr.vertices & ~(VertexMask{1} << v)) | is_;
        if ((prof.vertex[static_cast<std::size_t>(v)] & ~others) == 0)
            rep.minimal_vertices = false;
    }
    for (std::size_t k = 0; k < tr.pairs.size(); ++k) {
        MatrixMask others = is_ | it_;
        for (std::size_t j = 0; j < tr.pairs.size(); ++j)
            if (j != k)
                others |= at(tr.pairs[j].first, tr.pairs[j].second);
        if ((at(tr.pairs[k].first, tr.pairs[k].second) & ~others) == 0)
            rep.minimal_pairs = false;
    }

    const auto t_only = prof.classes_within(it_ & ~is_).size();
    const auto r_only = std::popcount(ir_ & ~(is_ | it_));
    rep.triple_size_bounds = static_cast<std::size_t>(tr.vertex_count()) <= t_only
                          && static_cast<int>(tr.pairs.size()) <= r_only;

    if (relative_member) {
        rep.size_bound = m <= tr.endpoint_count() + tr.vertex_count()
                      && tr.endpoint_count() + tr.vertex_count() <= tr.objective();
        if (m >= static_cast<int>(prof.classes.size()) + 1) {
            auto covered = prof.classes_within(is_);
            for (int c : prof.classes_within(it_))
                if (std::find(covered.begin(), covered.end(), c) == covered.end())
                    covered.push_back(c);
            rep.p3_classes_not_covered = covered.size() != prof.classes.size();
            bool found = false;
            for (int c = 0; c < static_cast<int>(prof.classes.size()); ++c) {
                const auto cm = prof.class_mask(c);
                if ((cm & ir_ & ~is_) == cm)
                    found = true;
            }
            rep.p4_class_in_pairs_only = found;
        }
    }
    return rep;
}

} // namespace minrank
