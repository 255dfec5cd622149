#pragma once

// Rank-preserving / rank-increasing analysis of the vertices outside an
// embedded pattern graph H with respect to each minimum-rank matrix of H.
//
// The host is treated as a complete graph with 0/1 edge weights. A vertex v
// outside H carries the weight vector of its adjacencies to H (ordered by
// the pattern's labels); v is rank-increasing for M when that vector is not
// in col(M). A pair uv is rank-increasing for M when bordering M by wt(u),
// wt(v) and wt(uv) raises the rank.

#include "minrank/canon.hpp"
#include "minrank/field.hpp"
#include "minrank/graph.hpp"
#include "minrank/minrank.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace minrank {

/// An induced copy of `pattern` inside `host`: pattern vertex i sits at host
/// vertex map[i]. `outside` lists the remaining host vertices in increasing
/// order; profile indices refer to positions in this list.
struct Embedding {
    Graph host;
    Graph pattern;
    std::vector<int> map;
    std::vector<int> outside;
};

/// Throws std::invalid_argument unless `map` is injective and
/// host[map(V(pattern))] equals the pattern under the map.
[[nodiscard]] Embedding make_embedding(const Graph& host, const Graph& pattern, std::vector<int> map);
/// One embedding per induced copy, in lexicographic vertex-set order.
[[nodiscard]] std::vector<Embedding> embeddings(const Graph& host, const Graph& pattern);

struct Weights {
    std::vector<FVector> vertex;
    /// Symmetric 0/1 matrix over the outside vertices; the diagonal is zero.
    std::vector<std::vector<std::uint8_t>> pair;
};

[[nodiscard]] Weights weights(const Embedding& e, FieldSpec field = FieldSpec::gf2());

class WeightOutsideColumnSpace : public std::invalid_argument {
public:
    explicit WeightOutsideColumnSpace(std::size_t index);
    [[nodiscard]] std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// P = A^T M A where M a_i = w_i. Entry (i, j) is the only pair weight that
/// keeps a pair with vertex weights w_i, w_j rank-preserving for M.
[[nodiscard]] FMatrix rank_preserving_table(const FMatrix& m, std::span<const FVector> weights);

/// Bit i stands for matrix i of the pattern's MRSet.
using MatrixMask = std::uint64_t;

struct IncreaseProfile {
    int matrix_count = 0;
    std::vector<std::vector<int>> classes;
    std::vector<int> outside;
    std::vector<bool> zero_weight;
    /// I_v for each outside vertex.
    std::vector<MatrixMask> vertex;
    /// I_uv, symmetric; diagonal entries unused.
    std::vector<std::vector<MatrixMask>> pair;
    std::vector<std::vector<std::uint8_t>> pair_weight;

    [[nodiscard]] int outside_count() const noexcept { return static_cast<int>(outside.size()); }
    [[nodiscard]] MatrixMask all() const noexcept;
    /// I_V over a mask of outside positions.
    [[nodiscard]] MatrixMask vertex_union(VertexMask local) const;
    /// I_R over a list of outside-position pairs.
    [[nodiscard]] MatrixMask pair_union(std::span<const std::pair<int, int>> pairs) const;
    /// Class-level set: indices of classes entirely contained in `mask`.
    [[nodiscard]] std::vector<int> classes_within(MatrixMask mask) const;
    [[nodiscard]] MatrixMask class_mask(int c) const;
    [[nodiscard]] bool is_union_of_classes(MatrixMask mask) const;
};

/// Requires the MRSet to be the one computed for e.pattern under the same
/// labelling; throws when it has more than 64 matrices.
[[nodiscard]] IncreaseProfile increase_profile(const Embedding& e, const MRSet& pattern_set);

enum class PairPolicy {
    /// Every 2-subset of the outside vertices, with its 0/1 weight.
    all_pairs,
    /// Only edges of the host.
    edges_only,
};

struct OptimalTriple {
    /// Outside positions (a, b), a < b, sorted.
    std::vector<std::pair<int, int>> pairs;
    VertexMask endpoints = 0;
    VertexMask vertices = 0;
    bool uses_zero_weight_pairs = false;

    [[nodiscard]] int objective() const noexcept;
    [[nodiscard]] int endpoint_count() const noexcept;
    [[nodiscard]] int vertex_count() const noexcept;
};

/// Lexicographically minimal (2|R|+|T|, |R|, |S|) triple with
/// I_R u I_T = MR(H), ties broken by the sorted pair list and then the sorted
/// vertex list. std::nullopt when no such triple exists, i.e. the host has
/// the same minimum rank as the pattern. Throws for more than 6 outside
/// vertices.
[[nodiscard]] std::optional<OptimalTriple> find_optimal_triple(const IncreaseProfile& profile,
                                                               PairPolicy policy = PairPolicy::all_pairs);

/// Structural facts about a profile and its optimal triple. Entries holding
/// std::nullopt had unmet hypotheses.
struct PropertyReport {
    bool edge_incidence = true;
    bool p1_union_of_classes = true;
    bool p2_endpoints_within_pairs = true;
    std::optional<bool> p3_classes_not_covered;
    std::optional<bool> p4_class_in_pairs_only;
    bool minimal_vertices = true;
    bool minimal_pairs = true;
    bool endpoints_disjoint_from_vertices = true;
    /// |T| <= #classes inside I_T \ I_S and |R| <= |I_R \ (I_S u I_T)|.
    bool triple_size_bounds = true;
    std::optional<bool> size_bound;
    std::optional<bool> vertex_not_increasing_for_all;
    std::optional<bool> pair_not_increasing_for_all;
    std::optional<bool> no_zero_weight_vertex;

    [[nodiscard]] bool all_hold() const noexcept;
};

/// `relative_member` states that the host lies in the relative forbidden set
/// for this embedding (mr(G) > mr(H) and deleting any outside vertex brings
/// the rank back to mr(H)); it enables the membership-conditional checks.
[[nodiscard]] PropertyReport check_properties(const IncreaseProfile& profile,
                                              const std::optional<OptimalTriple>& triple, bool relative_member);

} // namespace minrank
