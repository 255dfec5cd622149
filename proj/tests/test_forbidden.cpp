#include "oracles.hpp"

#include <minrank/catalog_io.hpp>
#include <minrank/forbidden.hpp>
#include <minrank/named.hpp>

#include <doctest.h>

#include <sstream>

using namespace minrank;

namespace {

const FieldSpec F2 = FieldSpec::gf2();

const ForbiddenCatalog& f4()
{
    static const ForbiddenCatalog cat = find_forbidden(F2, 3, 8);
    return cat;
}

bool catalog_has(const ForbiddenCatalog& c, const Graph& g)
{
    const auto f = canonical_form(g);
    for (const auto& m : c.members)
        if (m.form == f)
            return true;
    return false;
}

} // namespace

TEST_CASE("graph generation counts")
{
    const auto levels = generate_levels(7);
    const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n) {
        CHECK(levels[n].n == n);
        CHECK(levels[n].members.size() == expected[n]);
        CHECK(std::is_sorted(levels[n].members.begin(), levels[n].members.end()));
    }
    for (int n = 1; n <= 5; ++n)
        CHECK(levels[n].members.size() == oracle::isomorphism_class_count(n));
    CHECK_THROWS_AS((void)generate_levels(10), std::invalid_argument);
}

TEST_CASE("eight-vertex level is self-consistent")
{
    const auto l7 = generate_graphs(7);
    const auto l8 = augment(l7);
    CHECK(l8.members.size() == 12346);
    CHECK(augment(l7, 3).members == l8.members);
    const std::set<CanonicalForm> seven(l7.members.begin(), l7.members.end());
    const std::set<CanonicalForm> eight(l8.members.begin(), l8.members.end());
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = graph_from_form(l8.members[rng() % l8.members.size()]);
        CHECK(eight.count(canonical_form(complement(g))) == 1);
        CHECK(seven.count(canonical_form(delete_vertex(g, static_cast<int>(rng() % 8)))) == 1);
    }
}

TEST_CASE("forbidden graphs for minimum rank at most 0 and 2")
{
    const auto f1 = find_forbidden(F2, 0, 6);
    REQUIRE(f1.members.size() == 1);
    CHECK(f1.members[0].graph6 == "A_");

    const auto f3 = find_forbidden(F2, 2, 7);
    CHECK(f3.members.size() == 7);
    for (const auto& ng : named::rank3_forbidden_family())
        CHECK(catalog_has(f3, ng.graph));
}

TEST_CASE("rank-4 catalog over GF(2)")
{
    const auto& cat = f4();
    CHECK(cat.members.size() == 62);
    CHECK(cat.provenance.max_n == 8);
    const auto rep = catalog_report(cat);
    CHECK(rep.consistent());
    CHECK(rep.max_order == 8);
    CHECK(rep.total == 62);
    CHECK(rep.disconnected + rep.cut_vertex + rep.two_connected == 62);
    CHECK(catalog_has(cat, path(5)));
    CHECK_FALSE(catalog_has(cat, named::ladder_p3xp2()));
    CHECK(catalog_has(cat, m_copies(4, complete(2))));
}

TEST_CASE("rank-4 members on at most six vertices agree with plain enumeration")
{
    std::set<CanonicalForm> want;
    for (const auto& level : generate_levels(6))
        for (const auto& f : level.members) {
            const auto g = graph_from_form(f);
            if (oracle::min_rank(g, 2) < 4)
                continue;
            bool minimal = true;
            for (int v = 0; v < g.order() && minimal; ++v)
                minimal = oracle::min_rank(delete_vertex(g, v), 2) <= 3;
            if (minimal)
                want.insert(f);
        }
    std::set<CanonicalForm> got;
    for (const auto& m : f4().members)
        if (m.n <= 6)
            got.insert(m.form);
    CHECK(got == want);
}

TEST_CASE("every catalog member is certified minimal")
{
    for (const auto& m : f4().members) {
        const auto cert = certify_minimal(F2, 3, graph_from_form(m.form));
        CHECK(cert.minimal());
        CHECK(cert.mr == 4);
    }
}

TEST_CASE("minimality certificates")
{
    const auto p5 = certify_minimal(F2, 3, path(5));
    CHECK(p5.mr == 4);
    CHECK(p5.minimal());
    CHECK(p5.deletion_mr.size() == 5);

    const auto ladder = certify_minimal(F2, 3, named::ladder_p3xp2());
    CHECK(ladder.rank_exceeds());
    CHECK_FALSE(ladder.deletions_within());

    const auto fh = certify_minimal(F2, 2, named::full_house());
    CHECK(fh.minimal());
    CHECK_FALSE(certify_minimal(FieldSpec(3), 2, named::full_house()).rank_exceeds());
}

TEST_CASE("relative witnesses")
{
    CHECK_FALSE(relative_witness(F2, 3, named::ladder_p3xp2(), path(4)).empty());
    CHECK_FALSE(relative_witness(F2, 3, path(5), path(4)).empty());
    CHECK(relative_witness(F2, 3, path(4), path(4)).empty());
    CHECK(relative_witness(F2, 3, named::p4_relative_example(), path(4)).size() == 4);
    CHECK_FALSE(certify_minimal(F2, 3, named::p4_relative_example()).minimal());
}

TEST_CASE("relative catalog up to seven vertices")
{
    const auto rel = find_relative_forbidden(F2, 3, path(4), 7);
    CHECK(rel.contains(canonical_form(named::ladder_p3xp2())));
    CHECK(rel.contains(canonical_form(path(5))));
    // members of the absolute catalog that contain P4 are relative members
    for (const auto& m : f4().members) {
        if (m.n > 7)
            continue;
        const auto g = graph_from_form(m.form);
        CHECK(rel.contains(m.form) == contains_induced(g, path(4)));
    }
    for (const auto& rm : rel.members) {
        const auto g = graph_from_form(rm.member.form);
        CHECK(min_rank(F2, g) == 4);
        REQUIRE(rm.copy.size() == 4);
        const auto h = induced_subgraph(g, rm.copy);
        CHECK(h == path(4));
        VertexMask in = 0;
        for (int v : rm.copy)
            in |= VertexMask{1} << v;
        for (int v = 0; v < g.order(); ++v)
            if (!((in >> v) & 1u))
                CHECK(min_rank(F2, delete_vertex(g, v)) <= 3);
    }
}

TEST_CASE("recognising minimum rank at most 3")
{
    const auto& cat = f4();
    CHECK(is_mr_le_3(complete(8), cat));
    CHECK_FALSE(is_mr_le_3(named::ladder_p3xp2(), cat));
    CHECK_FALSE(is_mr_le_3(path(5), cat));
    CHECK_THROWS_AS((void)is_mr_le_3(path(3), find_forbidden(F2, 2, 6)), std::invalid_argument);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 5));
        CHECK(is_mr_le_3(g, cat) == (min_rank(F2, g) <= 3));
    }
}

TEST_CASE("catalog files round trip")
{
    const auto f3 = find_forbidden(F2, 2, 6);
    const auto text = catalog_text(f3);
    CHECK(text.rfind("# minrank forbidden catalog", 0) == 0);
    std::istringstream in(text);
    const auto back = read_catalog(in);
    CHECK(back.k == 2);
    CHECK(back.field.p() == 2);
    CHECK(back.members.size() == f3.members.size());
    CHECK(catalog_text(back) == text);

    SearchOptions three;
    three.jobs = 3;
    CHECK(catalog_text(find_forbidden(F2, 2, 6, three)) == text);
}

TEST_CASE("malformed catalog files are rejected")
{
    std::istringstream no_header("Bg\n");
    CHECK_THROWS_AS((void)read_catalog(no_header), CatalogFormatError);
    std::istringstream bad_line("# minrank forbidden catalog\n# field 2\n# k 2\n# source search\n# max_n 6\n"
                                "# budget 100\n# engine x\n# members 1\nB!\n");
    CHECK_THROWS_AS((void)read_catalog(bad_line), CatalogFormatError);
    std::istringstream stream("# comment\nBg\n\nA_\n");
    const auto gs = read_graph6_stream(stream);
    REQUIRE(gs.size() == 2);
    CHECK(gs[0] == path(3));
    std::istringstream broken("Bg\nxx\n");
    try {
        (void)read_graph6_stream(broken);
        FAIL("expected an error");
    } catch (const CatalogFormatError& e) {
        CHECK(std::string(e.what()).find('2') != std::string::npos);
    }
}

TEST_CASE("search over supplied candidates")
{
    std::vector<Graph> cands{path(5), relabel(path(5), std::vector<int>{4, 2, 0, 1, 3}), named::ladder_p3xp2(),
                             complete(5)};
    const auto cat = find_forbidden_among(F2, 3, cands);
    REQUIRE(cat.members.size() == 1);
    CHECK(cat.members[0].form == canonical_form(path(5)));
}

TEST_CASE("budget aborts the search")
{
    SearchOptions tiny;
    tiny.budget = 4;
    try {
        (void)find_forbidden(FieldSpec(3), 2, 5, tiny);
        FAIL("expected SearchAborted");
    } catch (const SearchAborted& e) {
        CHECK_FALSE(e.candidate().empty());
        CHECK(e.order() >= 1);
    }
}

TEST_CASE("connectivity report")
{
    const auto rep = catalog_report(f4());
    CHECK(rep.lines.size() == 62);
    CHECK(rep.stated.size() == reference_splits().size());
    const auto text = rep.text();
    CHECK(text.find("62") != std::string::npos);
    int dis = 0, cut = 0;
    for (const auto& m : f4().members) {
        const auto g = graph_from_form(m.form);
        const int comps = oracle::component_count(g);
        if (comps > 1)
            ++dis;
        else if (oracle::has_cut_vertex(g))
            ++cut;
    }
    CHECK(rep.disconnected == dis);
    CHECK(rep.cut_vertex == cut);
}
