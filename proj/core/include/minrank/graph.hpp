#pragma once

// Simple undirected graphs on at most 16 vertices, stored as one adjacency
// bitmask per vertex, plus the structural operations used throughout the
// engine (unions, joins, vertex sums, induced subgraphs) and the graph6
// text codec.

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace minrank {

inline constexpr int kMaxVertices = 16;

using VertexMask = std::uint32_t;

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Bitmask of neighbours of v.
    [[nodiscard]] VertexMask neighbors(int v) const { return adj_.at(static_cast<std::size_t>(check(v))); }
    [[nodiscard]] int degree(int v) const;
    [[nodiscard]] int edge_count() const noexcept;
    /// Edges (u, v) with u < v, sorted lexicographically.
    [[nodiscard]] std::vector<std::pair<int, int>> edges() const;
    [[nodiscard]] VertexMask all_vertices() const noexcept { return n_ == 0 ? 0u : ((VertexMask{1} << n_) - 1); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    [[nodiscard]] int check(int v) const;

    int n_ = 0;
    std::array<std::uint16_t, kMaxVertices> adj_{};
};

class GraphFormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// graph6 ---------------------------------------------------------------------

[[nodiscard]] std::string graph6_encode(const Graph& g);
/// Accepts a single graph6 record; trailing whitespace is ignored. Throws
/// GraphFormatError for sparse6/digraph6 headers, bytes outside [63,126],
/// truncated or overlong bit fields, and n > 16.
[[nodiscard]] Graph graph6_decode(std::string_view line);

// constructors ---------------------------------------------------------------

[[nodiscard]] Graph empty_graph(int n);
[[nodiscard]] Graph path(int n);
[[nodiscard]] Graph cycle(int n);
[[nodiscard]] Graph complete(int n);
[[nodiscard]] Graph complete_multipartite(std::span<const int> part_sizes);
[[nodiscard]] Graph disjoint_union(const Graph& g, const Graph& h);
[[nodiscard]] Graph join(const Graph& g, const Graph& h);
[[nodiscard]] Graph complement(const Graph& g);
[[nodiscard]] Graph m_copies(int m, const Graph& g);

/// Identifies vertex u of g with vertex v of h. The glued vertex keeps
/// index u; the vertices of h - v follow those of g in their original order.
[[nodiscard]] Graph vertex_sum(const Graph& g, int u, const Graph& h, int v);

/// Vertices of S in increasing index order become 0, 1, ...
[[nodiscard]] Graph induced_subgraph(const Graph& g, VertexMask subset);
[[nodiscard]] Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
[[nodiscard]] Graph delete_vertex(const Graph& g, int v);

/// Vertex i of g becomes vertex perm[i] of the result.
[[nodiscard]] Graph relabel(const Graph& g, std::span<const int> perm);

// connectivity ---------------------------------------------------------------

enum class ConnectivityClass { disconnected, has_cut_vertex, two_connected };

[[nodiscard]] std::string_view to_string(ConnectivityClass c) noexcept;

/// Connected components of g restricted to `within` (all vertices by default).
[[nodiscard]] std::vector<VertexMask> components(const Graph& g, VertexMask within);
[[nodiscard]] std::vector<VertexMask> components(const Graph& g);
[[nodiscard]] bool is_connected(const Graph& g);
/// Cut vertices of a graph, in increasing order. For a disconnected graph, a
/// cut vertex is one whose deletion increases the number of components.
[[nodiscard]] std::vector<int> cut_vertices(const Graph& g);
/// K1 and K2 count as two_connected (no cut vertex, connected); the empty
/// graph counts as disconnected.
[[nodiscard]] ConnectivityClass connectivity_class(const Graph& g);

[[nodiscard]] std::vector<int> degree_sequence(const Graph& g);

} // namespace minrank
