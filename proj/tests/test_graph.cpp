#include "oracles.hpp"

#include <minrank/graph.hpp>
#include <minrank/named.hpp>

#include <doctest.h>

using namespace minrank;

TEST_CASE("graph6 reference codes")
{
    CHECK(graph6_encode(complete(2)) == "A_");
    CHECK(graph6_encode(path(3)) == "Bg");
    CHECK(graph6_encode(complete(4)) == "C~");
    CHECK(graph6_encode(Graph(0)) == "?");
    CHECK(graph6_encode(Graph(1)) == "@");
    CHECK(graph6_decode("A_") == complete(2));
    CHECK(graph6_decode("Bg") == path(3));
    CHECK(graph6_decode("Bg\n") == path(3));

    // Petersen graph: outer 5-cycle 0..4, spokes i - i+5, inner pentagram.
    Graph petersen(10);
    for (int i = 0; i < 5; ++i) {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(i, i + 5);
        petersen.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    CHECK(graph6_encode(petersen) == "IheA@GUAo");
}

TEST_CASE("graph6 round trip on random graphs")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = static_cast<int>(rng() % 17);
        const auto g = oracle::random_graph(rng, n);
        const auto code = graph6_encode(g);
        CHECK(code.size() == 1 + (static_cast<std::size_t>(n * (n - 1) / 2) + 5) / 6);
        CHECK(graph6_decode(code) == g);
    }
}

TEST_CASE("malformed graph6 is rejected")
{
    CHECK_THROWS_AS((void)graph6_decode(""), GraphFormatError);
    CHECK_THROWS_AS((void)graph6_decode(":Bc"), GraphFormatError);
    CHECK_THROWS_AS((void)graph6_decode("&Bc"), GraphFormatError);
    CHECK_THROWS_AS((void)graph6_decode("B"), GraphFormatError);
    CHECK_THROWS_AS((void)graph6_decode("Bgg"), GraphFormatError);
    CHECK_THROWS_AS((void)graph6_decode("B!"), GraphFormatError);
    CHECK_THROWS_AS((void)graph6_decode("A`"), GraphFormatError);
    CHECK_THROWS_AS((void)graph6_decode("~?@?"), GraphFormatError);
    CHECK_THROWS_AS((void)graph6_decode("Q????????????????????"), GraphFormatError);
}

TEST_CASE("basic constructors")
{
    CHECK(path(5).edge_count() == 4);
    CHECK(cycle(5).edge_count() == 5);
    CHECK(complete(6).edge_count() == 15);
    CHECK(empty_graph(4).edge_count() == 0);
    const int parts[] = {2, 3};
    const auto k23 = complete_multipartite(parts);
    CHECK(k23.edge_count() == 6);
    CHECK_FALSE(k23.has_edge(0, 1));
    CHECK(k23.has_edge(1, 2));
    CHECK(m_copies(3, complete(2)).edge_count() == 3);
    CHECK(complement(complete(4)) == empty_graph(4));
    CHECK(join(empty_graph(2), empty_graph(3)) == k23);
    CHECK(disjoint_union(path(2), path(3)).order() == 5);
    CHECK_THROWS_AS(Graph(17), std::invalid_argument);
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
}

TEST_CASE("vertex sum glues at one vertex")
{
    const auto g = vertex_sum(complete(3), 2, complete(3), 0);
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 6);
    CHECK(g.has_edge(2, 3));
    CHECK(g.has_edge(2, 4));
    CHECK(g.has_edge(3, 4));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK(cut_vertices(g) == std::vector<int>{2});
    CHECK(oracle::isomorphic(vertex_sum(path(3), 2, path(3), 0), path(5)));
}

TEST_CASE("relabel and induced subgraphs")
{
    const auto p = path(4);
    const int perm[] = {3, 2, 1, 0};
    CHECK(relabel(p, perm) == p);
    const int vs[] = {0, 2, 3};
    const auto h = induced_subgraph(p, vs);
    CHECK(h.order() == 3);
    CHECK(h.edge_count() == 1);
    CHECK(h.has_edge(1, 2));
    CHECK(delete_vertex(path(4), 0) == path(3));
    CHECK(induced_subgraph(p, VertexMask{0b1101}) == h);
}

TEST_CASE("connectivity classification agrees with component counting")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const auto g = oracle::random_graph(rng, n, 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0);
        const int comps = oracle::component_count(g);
        CHECK(static_cast<int>(components(g).size()) == comps);
        CHECK(is_connected(g) == (comps == 1));
        std::vector<int> cuts;
        for (int v = 0; v < n; ++v)
            if (oracle::component_count(g, 1u << v) > comps)
                cuts.push_back(v);
        CHECK(cut_vertices(g) == cuts);
        const auto cls = connectivity_class(g);
        if (comps > 1)
            CHECK(cls == ConnectivityClass::disconnected);
        else if (!cuts.empty())
            CHECK(cls == ConnectivityClass::has_cut_vertex);
        else
            CHECK(cls == ConnectivityClass::two_connected);
    }
    CHECK(connectivity_class(complete(1)) == ConnectivityClass::two_connected);
    CHECK(connectivity_class(complete(2)) == ConnectivityClass::two_connected);
    CHECK(connectivity_class(Graph(0)) == ConnectivityClass::disconnected);
}

TEST_CASE("named graphs have the documented shapes")
{
    using namespace named;
    CHECK(full_house().edge_count() == 8);
    CHECK(dart().edge_count() == 6);
    CHECK(ltimes().edge_count() == 5);
    CHECK(oracle::isomorphic(p3_join_p3(), join(path(3), path(3))));
    CHECK(oracle::isomorphic(ladder_p3xp2(), Graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}})));
    CHECK(oracle::isomorphic(full_house(), complement(disjoint_union(path(3), empty_graph(2)))));
    CHECK(oracle::isomorphic(mr3_class_g1(), complement(disjoint_union(path(3), path(3)))));
    CHECK(graph38().order() == 7);
    CHECK(cut_vertices(graph38()) == std::vector<int>{0});
    CHECK(graph39().order() == 7);
    CHECK(connectivity_class(graph39()) == ConnectivityClass::has_cut_vertex);
    CHECK(lookup("P5") == path(5));
    CHECK(lookup("C4") == cycle(4));
    CHECK(lookup("3K2") == m_copies(3, complete(2)));
    CHECK(lookup("K8") == complete(8));
    CHECK(oracle::isomorphic(*lookup("K2,3"), join(empty_graph(2), empty_graph(3))));
    CHECK(lookup("ladder") == ladder_p3xp2());
    CHECK_FALSE(lookup("nonsense").has_value());
    CHECK_FALSE(lookup("P99").has_value());
    for (const auto& ng : rank3_forbidden_family())
        CHECK(ng.graph.order() >= 4);
}
