#pragma once

// Canonical forms and induced-subgraph search for graphs on at most ten
// vertices.
//
// The canonical form is the lexicographically smallest upper-triangle
// adjacency string (graph6 bit order: column by column) over all vertex
// orders that respect an isomorphism-invariant colour refinement. The search
// individualizes one vertex per position, re-refines against the placed
// prefix, prunes on the partial string, and skips twins (vertices whose
// neighbourhoods agree outside each other), which are interchangeable.

#include "minrank/graph.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace minrank {

inline constexpr int kMaxCanonicalVertices = 10;

struct CanonicalForm {
    int n = 0;
    /// Upper-triangle bits in graph6 order; the first pair (0,1) is the most
    /// significant of the n(n-1)/2 low bits.
    std::uint64_t code = 0;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const noexcept
    {
        std::uint64_t x = f.code * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(f.n);
        x ^= x >> 31;
        return static_cast<std::size_t>(x * 0xBF58476D1CE4E5B9ull);
    }
};

struct CanonicalLabeling {
    CanonicalForm form;
    /// position[v] = index of vertex v in the canonical graph.
    std::vector<int> position;
};

/// Throws std::invalid_argument when g has more than 10 vertices.
[[nodiscard]] CanonicalLabeling canonical_labeling(const Graph& g);
[[nodiscard]] CanonicalForm canonical_form(const Graph& g);
[[nodiscard]] Graph canonical_graph(const Graph& g);
[[nodiscard]] Graph graph_from_form(const CanonicalForm& f);
[[nodiscard]] bool is_isomorphic(const Graph& g, const Graph& h);

/// An induced copy of `pattern` in a host: vertex i of the pattern maps to
/// host vertex map[i].
struct InducedCopy {
    VertexMask vertices = 0;
    std::vector<int> map;
};

/// One copy per host vertex set inducing a graph isomorphic to the pattern,
/// in increasing lexicographic order of the sorted vertex lists.
[[nodiscard]] std::vector<InducedCopy> find_induced_copies(const Graph& host, const Graph& pattern);
[[nodiscard]] bool contains_induced(const Graph& host, const Graph& pattern);

/// Calls visit(mask) for every k-subset of {0..n-1} in lexicographic order of
/// the sorted element lists. Stops early when visit returns false.
void for_each_subset_of_size(int n, int k, const std::function<bool(VertexMask)>& visit);

} // namespace minrank
