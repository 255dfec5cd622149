#pragma once

// Minimum rank of the symmetric matrices whose off-diagonal nonzero pattern
// is a given graph, by exact enumeration over a small prime field.

#include "minrank/field.hpp"
#include "minrank/graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace minrank {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget);
    [[nodiscard]] std::uint64_t required() const noexcept { return required_; }
    [[nodiscard]] std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

/// |S(F,G)| = (p-1)^|E| * p^n, saturating at UINT64_MAX.
[[nodiscard]] std::uint64_t pattern_count(FieldSpec field, const Graph& g) noexcept;

/// Streams every matrix of S(F,G) exactly once. The diagonal is the
/// low-order base-p counter (vertex 0 fastest); the edge entries, over the
/// sorted edge list and taking values 1..p-1, form the high-order
/// base-(p-1) counter.
class PatternEnumeration {
public:
    /// Throws BudgetExceeded when pattern_count exceeds the budget.
    PatternEnumeration(FieldSpec field, const Graph& g, std::uint64_t budget = kDefaultBudget);

    [[nodiscard]] std::uint64_t count() const noexcept { return count_; }
    /// Advances to the next matrix; the first call yields the first one.
    bool next();
    [[nodiscard]] const FMatrix& current() const noexcept { return current_; }

private:
    FieldSpec field_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> digits_;
    std::uint64_t count_;
    bool started_ = false;
    bool done_ = false;
    FMatrix current_;
};

struct MinRankOptions {
    std::uint64_t budget = kDefaultBudget;
    /// A proven lower bound; the search stops once it is attained.
    int lower_bound = 0;
    /// When >= 0, stop at the first matrix of rank <= stop_at. The result is
    /// then only an upper bound, flagged by `exact == false`.
    int stop_at = -1;
};

struct MinRankResult {
    int mr = 0;
    std::uint64_t visited = 0;
    bool exact = true;
};

/// Over GF(2) only the 2^n diagonals vary. Over GF(p), p > 2, the entries on
/// a spanning forest are fixed to 1: a diagonal congruence D A D maps every
/// matrix of S(F,G) onto that slice without changing the rank. The budget
/// applies to the number of matrices actually visited.
[[nodiscard]] MinRankResult min_rank_search(FieldSpec field, const Graph& g, const MinRankOptions& options = {});
[[nodiscard]] int min_rank(FieldSpec field, const Graph& g, std::uint64_t budget = kDefaultBudget, int lower_bound = 0);

/// Matrices attaining the minimum rank and their partition by column space.
struct MRSet {
    FieldSpec field;
    int mr = 0;
    std::vector<FMatrix> matrices;
    /// Indices into `matrices`; classes appear in order of first member.
    std::vector<std::vector<int>> classes;

    [[nodiscard]] int class_of(int matrix_index) const;
    /// Index of a matrix equal to m, or -1.
    [[nodiscard]] int find(const FMatrix& m) const;
};

/// Enumerates all of S(F,G); the budget applies to pattern_count.
[[nodiscard]] MRSet min_rank_set(FieldSpec field, const Graph& g, std::uint64_t budget = kDefaultBudget);

struct CutVertexResult {
    int mr = 0;
    /// False when g was itself a 2-connected leaf.
    bool decomposed = false;
    int leaves = 0;
};

/// Splits at components and at the lowest-indexed cut vertex v using
/// mr(G) = min{ sum mr(G_i), sum mr(G_i - v) + 2 }, and brute-forces only
/// the 2-connected pieces.
[[nodiscard]] CutVertexResult mr_via_cut_vertex_detailed(FieldSpec field, const Graph& g,
                                                         std::uint64_t budget = kDefaultBudget);
[[nodiscard]] int mr_via_cut_vertex(FieldSpec field, const Graph& g, std::uint64_t budget = kDefaultBudget);

/// The symmetric matrix with the adjacency of g off the diagonal (all ones)
/// and the given diagonal.
[[nodiscard]] FMatrix pattern_matrix(FieldSpec field, const Graph& g, std::span<const std::uint8_t> diagonal);

} // namespace minrank
