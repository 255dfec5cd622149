#include "minrank/graph.hpp"

#include <algorithm>
#include <bit>

namespace minrank {

Graph::Graph(int n) : n_(n)
{
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, 16]");
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

int Graph::check(int v) const
{
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " + std::to_string(n_));
    return v;
}

bool Graph::has_edge(int u, int v) const
{
    return (adj_[static_cast<std::size_t>(check(u))] >> check(v)) & 1u;
}

void Graph::add_edge(int u, int v)
{
    if (check(u) == check(v))
        throw std::invalid_argument("loops are not allowed in a simple graph");
    adj_[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
    adj_[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
}

void Graph::remove_edge(int u, int v)
{
    (void)check(u);
    (void)check(v);
    adj_[static_cast<std::size_t>(u)] &= static_cast<std::uint16_t>(~(1u << v));
    adj_[static_cast<std::size_t>(v)] &= static_cast<std::uint16_t>(~(1u << u));
}

int Graph::degree(int v) const
{
    return std::popcount(neighbors(v));
}

int Graph::edge_count() const noexcept
{
    int twice = 0;
    for (int i = 0; i < n_; ++i)
        twice += std::popcount(adj_[static_cast<std::size_t>(i)]);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (has_edge(i, j))
                out.emplace_back(i, j);
    return out;
}

// graph6 ---------------------------------------------------------------------

std::string graph6_encode(const Graph& g)
{
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph graph6_decode(std::string_view line)
{
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    if (line.starts_with(">>graph6<<"))
        line.remove_prefix(10);
    if (line.empty())
        throw GraphFormatError("empty graph6 record");
    if (line.front() == ':' || line.front() == ';')
        throw GraphFormatError("sparse6 records are not supported");
    if (line.front() == '&')
        throw GraphFormatError("digraph6 records are not supported");
    for (char ch : line) {
        const auto b = static_cast<unsigned char>(ch);
        if (b < 63 || b > 126)
            throw GraphFormatError("byte " + std::to_string(b) + " outside the graph6 range [63,126]");
    }
    const int n = static_cast<unsigned char>(line.front()) - 63;
    if (n == 63)
        throw GraphFormatError("multi-byte graph6 order field: more than 16 vertices");
    if (n > kMaxVertices)
        throw GraphFormatError("graph6 order " + std::to_string(n) + " exceeds 16 vertices");

    const std::size_t nbits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() - 1 < nbytes)
        throw GraphFormatError("truncated graph6 bit field");
    if (line.size() - 1 > nbytes)
        throw GraphFormatError("graph6 record has trailing bytes");

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = static_cast<unsigned char>(line[1 + k / 6]) - 63;
            if ((byte >> (5 - static_cast<int>(k % 6))) & 1)
                g.add_edge(i, j);
        }
    if (nbits % 6 != 0) {
        const int last = static_cast<unsigned char>(line.back()) - 63;
        const int pad = 6 - static_cast<int>(nbits % 6);
        if (last & ((1 << pad) - 1))
            throw GraphFormatError("nonzero padding bits in graph6 record");
    }
    return g;
}

// constructors ---------------------------------------------------------------

Graph empty_graph(int n)
{
    return Graph(n);
}

Graph path(int n)
{
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n)
{
    Graph g = path(n);
    if (n >= 3)
        g.add_edge(0, n - 1);
    return g;
}

Graph complete(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

Graph complete_multipartite(std::span<const int> part_sizes)
{
    int n = 0;
    std::vector<int> part;
    for (std::size_t k = 0; k < part_sizes.size(); ++k) {
        if (part_sizes[k] < 0)
            throw std::invalid_argument("negative part size");
        n += part_sizes[k];
        part.insert(part.end(), static_cast<std::size_t>(part_sizes[k]), static_cast<int>(k));
    }
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part[static_cast<std::size_t>(i)] != part[static_cast<std::size_t>(j)])
                g.add_edge(i, j);
    return g;
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    const int off = g.order();
    Graph out(off + h.order());
    for (auto [u, v] : g.edges())
        out.add_edge(u, v);
    for (auto [u, v] : h.edges())
        out.add_edge(off + u, off + v);
    return out;
}

Graph join(const Graph& g, const Graph& h)
{
    Graph out = disjoint_union(g, h);
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < h.order(); ++j)
            out.add_edge(i, g.order() + j);
    return out;
}

Graph complement(const Graph& g)
{
    Graph out(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (!g.has_edge(i, j))
                out.add_edge(i, j);
    return out;
}

Graph m_copies(int m, const Graph& g)
{
    if (m < 0)
        throw std::invalid_argument("negative copy count");
    Graph out(0);
    for (int k = 0; k < m; ++k)
        out = disjoint_union(out, g);
    return out;
}

Graph vertex_sum(const Graph& g, int u, const Graph& h, int v)
{
    if (u < 0 || u >= g.order() || v < 0 || v >= h.order())
        throw std::out_of_range("vertex_sum: invalid vertex index");
    if (g.order() < 2 || h.order() < 2)
        throw std::invalid_argument("vertex_sum: both graphs need at least two vertices");
    Graph out(g.order() + h.order() - 1);
    for (auto [a, b] : g.edges())
        out.add_edge(a, b);
    // h-vertex w maps to u when w == v, otherwise to g.order() + (w minus one if w > v)
    auto map = [&](int w) { return w == v ? u : g.order() + (w > v ? w - 1 : w); };
    for (auto [a, b] : h.edges())
        out.add_edge(map(a), map(b));
    return out;
}

Graph induced_subgraph(const Graph& g, VertexMask subset)
{
    if (subset & ~g.all_vertices())
        throw std::out_of_range("induced_subgraph: vertex outside the graph");
    std::vector<int> verts;
    for (int v = 0; v < g.order(); ++v)
        if ((subset >> v) & 1u)
            verts.push_back(v);
    return induced_subgraph(g, verts);
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices)
{
    Graph out(static_cast<int>(vertices.size()));
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (g.has_edge(vertices[a], vertices[b]))
                out.add_edge(static_cast<int>(a), static_cast<int>(b));
    return out;
}

Graph delete_vertex(const Graph& g, int v)
{
    if (v < 0 || v >= g.order())
        throw std::out_of_range("delete_vertex: vertex out of range");
    return induced_subgraph(g, g.all_vertices() & ~(VertexMask{1} << v));
}

Graph relabel(const Graph& g, std::span<const int> perm)
{
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("relabel: permutation size mismatch");
    Graph out(g.order());
    for (auto [u, v] : g.edges())
        out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

// connectivity ---------------------------------------------------------------

std::string_view to_string(ConnectivityClass c) noexcept
{
    switch (c) {
    case ConnectivityClass::disconnected:
        return "disconnected";
    case ConnectivityClass::has_cut_vertex:
        return "has_cut_vertex";
    case ConnectivityClass::two_connected:
        return "two_connected";
    }
    return "unknown";
}

std::vector<VertexMask> components(const Graph& g, VertexMask within)
{
    std::vector<VertexMask> out;
    VertexMask left = within & g.all_vertices();
    while (left) {
        VertexMask comp = left & (~left + 1);
        VertexMask frontier = comp;
        while (frontier) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            const VertexMask fresh = g.neighbors(v) & left & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

std::vector<VertexMask> components(const Graph& g)
{
    return components(g, g.all_vertices());
}

bool is_connected(const Graph& g)
{
    return components(g).size() == 1;
}

std::vector<int> cut_vertices(const Graph& g)
{
    std::vector<int> out;
    const auto base = components(g).size();
    for (int v = 0; v < g.order(); ++v)
        if (components(g, g.all_vertices() & ~(VertexMask{1} << v)).size() > base)
            out.push_back(v);
    return out;
}

ConnectivityClass connectivity_class(const Graph& g)
{
    if (!is_connected(g))
        return ConnectivityClass::disconnected;
    return cut_vertices(g).empty() ? ConnectivityClass::two_connected : ConnectivityClass::has_cut_vertex;
}

std::vector<int> degree_sequence(const Graph& g)
{
    std::vector<int> d;
    d.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        d.push_back(g.degree(v));
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

} // namespace minrank
