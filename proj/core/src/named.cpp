#include "minrank/named.hpp"

#include <cctype>
#include <charconv>

namespace minrank::named {

namespace {

// 1-indexed edge list
Graph from_labels(int n, std::initializer_list<std::pair<int, int>> edges)
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u - 1, v - 1);
    return g;
}

std::optional<int> parse_int(std::string_view s)
{
    if (s.empty())
        return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        return std::nullopt;
    return value;
}

} // namespace

Graph full_house()
{
    return from_labels(5, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

Graph dart()
{
    return from_labels(5, {{1, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 5}});
}

Graph ltimes()
{
    return from_labels(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {4, 5}});
}

Graph p3_join_p3()
{
    return from_labels(6, {{1, 2}, {1, 3}, {1, 4}, {1, 6}, {2, 3}, {2, 4}, {2, 5},
                           {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
}

Graph p3_union_k2()
{
    return disjoint_union(path(3), complete(2));
}

Graph three_k2()
{
    return m_copies(3, complete(2));
}

Graph ladder_p3xp2()
{
    // u=0 v=1 w=2 x=3 y=4 z=5
    return Graph(6, {{5, 4}, {4, 3}, {2, 0}, {0, 1}, {5, 2}, {4, 0}, {3, 1}});
}

Graph p4_with_two_weighted_vertices(bool with_uv)
{
    Graph g = path(4);
    Graph out(6);
    for (auto [a, b] : g.edges())
        out.add_edge(a, b);
    for (int h : {0, 1, 3})
        out.add_edge(4, h);
    for (int h : {0, 2})
        out.add_edge(5, h);
    if (with_uv)
        out.add_edge(4, 5);
    return out;
}

Graph graph38()
{
    return Graph(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {0, 5}, {0, 6}});
}

Graph graph39()
{
    Graph g = from_labels(7, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {5, 6}, {1, 7}});
    return g;
}

Graph mr3_class_g1()
{
    return complement(m_copies(2, path(3)));
}

Graph mr3_class_g2()
{
    return complement(disjoint_union(disjoint_union(path(3), complete(2)), complete(1)));
}

Graph p4_relative_example()
{
    // centres 0,1; lower pair 2,3; upper pair 4,5; side vertices 6,7
    return Graph(8, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 3}, {2, 6}, {2, 7},
                     {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}});
}

std::vector<NamedGraph> rank3_forbidden_family()
{
    return {
        {"3K2", three_k2()},
        {"p3_join_p3", p3_join_p3()},
        {"dart", dart()},
        {"ltimes", ltimes()},
        {"p3_union_k2", p3_union_k2()},
        {"full_house", full_house()},
        {"P4", path(4)},
    };
}

std::optional<Graph> lookup(std::string_view name)
{
    static const std::vector<std::pair<std::string_view, Graph (*)()>> fixed = {
        {"full_house", full_house},
        {"dart", dart},
        {"ltimes", ltimes},
        {"p3_join_p3", p3_join_p3},
        {"p3_union_k2", p3_union_k2},
        {"ladder", ladder_p3xp2},
        {"example_a", [] { return p4_with_two_weighted_vertices(false); }},
        {"example_b", [] { return p4_with_two_weighted_vertices(true); }},
        {"graph38", graph38},
        {"graph39", graph39},
        {"g1", mr3_class_g1},
        {"g2", mr3_class_g2},
        {"p4_relative", p4_relative_example},
    };
    for (const auto& [key, make] : fixed)
        if (key == name)
            return make();

    if (name.size() >= 2 && (name[0] == 'P' || name[0] == 'C' || name[0] == 'E')) {
        auto n = parse_int(name.substr(1));
        if (!n || *n < 0 || *n > kMaxVertices)
            return std::nullopt;
        if (name[0] == 'P')
            return path(*n);
        if (name[0] == 'C')
            return cycle(*n);
        return empty_graph(*n);
    }

    // <m>K<n>
    const auto k = name.find('K');
    if (k != std::string_view::npos && k > 0 && name.find(',') == std::string_view::npos) {
        auto m = parse_int(name.substr(0, k));
        auto n = parse_int(name.substr(k + 1));
        if (!m || !n || *m * *n > kMaxVertices || *m < 0 || *n < 0)
            return std::nullopt;
        return m_copies(*m, complete(*n));
    }
    if (k == 0) {
        std::vector<int> parts;
        std::string_view rest = name.substr(1);
        while (true) {
            const auto comma = rest.find(',');
            auto part = parse_int(rest.substr(0, comma));
            if (!part || *part < 0)
                return std::nullopt;
            parts.push_back(*part);
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
        int total = 0;
        for (int p : parts)
            total += p;
        if (total > kMaxVertices)
            return std::nullopt;
        if (parts.size() == 1)
            return complete(parts[0]);
        return complete_multipartite(parts);
    }
    return std::nullopt;
}

std::vector<std::string> registry_names()
{
    return {"P<n>", "C<n>", "K<n>", "E<n>", "<m>K<n>", "K<a>,<b>[,...]", "full_house", "dart", "ltimes",
            "p3_join_p3", "p3_union_k2", "ladder", "example_a", "example_b", "graph38", "graph39", "g1", "g2",
            "p4_relative"};
}

} // namespace minrank::named
