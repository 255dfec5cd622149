#include "oracles.hpp"

#include <minrank/canon.hpp>
#include <minrank/named.hpp>

#include <doctest.h>

#include <set>

using namespace minrank;

TEST_CASE("canonical forms split labelled graphs into isomorphism classes")
{
    for (int n = 1; n <= 6; ++n) {
        std::set<CanonicalForm> forms;
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits)
            forms.insert(canonical_form(oracle::from_bits(n, bits)));
        CHECK(forms.size() == oracle::isomorphism_class_count(n));
    }
}

TEST_CASE("all 64 labelled graphs on four vertices give 11 forms")
{
    std::set<CanonicalForm> forms;
    for (std::uint64_t bits = 0; bits < 64; ++bits)
        forms.insert(canonical_form(oracle::from_bits(4, bits)));
    CHECK(forms.size() == 11);
}

TEST_CASE("canonical form is invariant under relabelling")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const auto g = oracle::random_graph(rng, n, 0.1 + static_cast<double>(rng() % 80) / 100.0);
        const auto perm = oracle::random_perm(rng, n);
        const auto h = relabel(g, perm);
        CHECK(canonical_form(g) == canonical_form(h));
        const auto lab = canonical_labeling(g);
        CHECK(relabel(g, lab.position) == graph_from_form(lab.form));
        CHECK(canonical_graph(g) == graph_from_form(canonical_form(g)));
    }
}

TEST_CASE("isomorphism test agrees with brute force")
{
    std::mt19937_64 rng(4);
    int agree_true = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const auto g = oracle::random_graph(rng, n);
        auto h = oracle::random_graph(rng, n);
        if (trial % 2 == 0) {
            h = relabel(g, oracle::random_perm(rng, n));
            if (n >= 2 && trial % 4 == 0) {
                // flip one pair; sometimes still isomorphic
                if (h.has_edge(0, 1))
                    h.remove_edge(0, 1);
                else
                    h.add_edge(0, 1);
            }
        }
        const bool truth = oracle::isomorphic(g, h);
        agree_true += truth;
        CHECK(is_isomorphic(g, h) == truth);
    }
    CHECK(agree_true > 100);
}

TEST_CASE("regular and highly symmetric graphs")
{
    CHECK(is_isomorphic(cycle(6), relabel(cycle(6), std::vector<int>{3, 0, 4, 1, 5, 2})));
    CHECK_FALSE(is_isomorphic(cycle(6), m_copies(2, cycle(3))));
    Graph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    const int parts[] = {3, 3};
    CHECK_FALSE(is_isomorphic(prism, complete_multipartite(parts)));
    CHECK(canonical_form(complete(10)) == canonical_form(complete(10)));
    CHECK(canonical_form(complete(10)).code == (std::uint64_t{1} << 45) - 1);
    CHECK(canonical_form(Graph(0)).n == 0);
    CHECK_THROWS_AS((void)canonical_form(Graph(11)), std::invalid_argument);
}

TEST_CASE("induced copies match a naive scan")
{
    std::mt19937_64 rng(12);
    const std::vector<Graph> patterns = {path(3), path(4), complete(3), m_copies(2, complete(2)), cycle(4),
                                         named::dart(), named::ltimes()};
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const auto host = oracle::random_graph(rng, n);
        for (const auto& pat : patterns) {
            if (pat.order() > n)
                continue;
            const auto copies = find_induced_copies(host, pat);
            std::vector<std::uint32_t> sets;
            for (const auto& c : copies) {
                sets.push_back(c.vertices);
                std::vector<int> vs(c.map.begin(), c.map.end());
                // the map is an isomorphism from the pattern onto the copy
                bool ok = true;
                for (int i = 0; i < pat.order(); ++i)
                    for (int j = i + 1; j < pat.order(); ++j)
                        ok = ok && pat.has_edge(i, j) == host.has_edge(vs[i], vs[j]);
                CHECK(ok);
            }
            std::sort(sets.begin(), sets.end());
            auto expected = oracle::induced_copy_sets(host, pat);
            std::sort(expected.begin(), expected.end());
            CHECK(sets == expected);
            CHECK(contains_induced(host, pat) == !expected.empty());
        }
    }
    CHECK(find_induced_copies(path(3), path(4)).empty());
}

TEST_CASE("subset enumeration is lexicographic")
{
    std::vector<VertexMask> seen;
    for_each_subset_of_size(5, 2, [&](VertexMask m) {
        seen.push_back(m);
        return true;
    });
    CHECK(seen.size() == 10);
    CHECK(seen.front() == 0b00011);
    CHECK(seen[1] == 0b00101);
    CHECK(seen.back() == 0b11000);
}
