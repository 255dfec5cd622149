#include "commands.hpp"

#include "cache.hpp"

#include <minrank/catalog_io.hpp>
#include <minrank/forbidden.hpp>
#include <minrank/minrank.hpp>
#include <minrank/named.hpp>
#include <minrank/profile.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mrank {

using minrank::FieldSpec;
using minrank::Graph;
using json = nlohmann::ordered_json;

namespace {

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::uint64_t parse_budget(const std::string& text)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0)
        throw InputError("invalid budget: " + text);
    return value;
}

std::uint64_t default_budget()
{
    if (const char* env = std::getenv("MRANK_BUDGET"); env && *env)
        return parse_budget(env);
    return minrank::kDefaultBudget;
}

Graph resolve_graph(const std::string& g6, const std::string& name)
{
    if (!name.empty()) {
        auto g = minrank::named::lookup(name);
        if (!g)
            throw InputError("unknown named graph: " + name);
        return *g;
    }
    if (g6.empty())
        throw InputError("no graph given (pass a graph6 code or --named)");
    return minrank::graph6_decode(g6);
}

Graph resolve_pattern(const std::string& text)
{
    if (auto g = minrank::named::lookup(text))
        return *g;
    return minrank::graph6_decode(text);
}

std::string field_name(FieldSpec f)
{
    return "GF(" + std::to_string(f.p()) + ")";
}

std::string diagonal_of(const minrank::FMatrix& m)
{
    std::string s;
    for (int i = 0; i < m.rows(); ++i)
        s += static_cast<char>('0' + m(i, i));
    return s;
}

json matrix_json(const minrank::FMatrix& m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(static_cast<int>(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

std::vector<int> mask_indices(minrank::MatrixMask mask)
{
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

std::string matrix_set_text(minrank::MatrixMask mask)
{
    std::string s = "{";
    bool first = true;
    for (int i : mask_indices(mask)) {
        s += (first ? "M" : ", M") + std::to_string(i + 1);
        first = false;
    }
    return s + "}";
}

std::string optional_text(const std::optional<bool>& b)
{
    return b ? (*b ? "holds" : "FAILS") : "n/a";
}

json optional_json(const std::optional<bool>& b)
{
    return b ? json(*b) : json(nullptr);
}

// ---------------------------------------------------------------------------

struct MrArgs {
    std::string g6, named;
    int p = 2;
    std::string budget;
    bool cut_vertex = false;
    bool json = false;
    std::string cache;
    bool no_cache = false;
};

int cmd_mr(const MrArgs& a, std::ostream& out, std::ostream& err)
{
    const Graph g = resolve_graph(a.g6, a.named);
    const FieldSpec field(a.p);
    const auto budget = a.budget.empty() ? default_budget() : parse_budget(a.budget);

    std::optional<ResultCache> cache;
    std::string key;
    if (!a.cache.empty() && g.order() <= minrank::kMaxCanonicalVertices) {
        cache.emplace(a.cache);
        key = minrank::graph6_encode(minrank::canonical_graph(g));
    }

    std::optional<int> cached = cache ? cache->lookup(key, a.p) : std::nullopt;
    int mr = 0;
    std::string method;
    json detail = json::object();
    if (cached && !a.no_cache) {
        mr = *cached;
        method = "cache";
    } else if (a.cut_vertex) {
        const auto res = minrank::mr_via_cut_vertex_detailed(field, g, budget);
        mr = res.mr;
        method = res.decomposed ? "cut-vertex" : "brute-force";
        detail["leaves"] = res.leaves;
    } else {
        const auto res = minrank::min_rank_search(field, g, {budget, 0, -1});
        mr = res.mr;
        method = "brute-force";
        detail["visited"] = res.visited;
    }
    if (cache && method != "cache") {
        if (cached && *cached != mr) {
            err << "cache disagreement: stored mr " << *cached << ", recomputed " << mr << "\n";
            return exit_failure;
        }
        if (!cached)
            cache->store(key, a.p, mr);
    }

    if (a.json) {
        json j{{"schema", 1}, {"command", "mr"}, {"graph6", minrank::graph6_encode(g)}, {"n", g.order()},
               {"field", a.p}, {"mr", mr}, {"method", method}};
        for (auto& [k, v] : detail.items())
            j[k] = v;
        if (cache)
            j["cache_checked"] = a.no_cache && cached.has_value();
        out << j.dump() << "\n";
    } else {
        out << "mr = " << mr << " (" << field_name(field) << ", " << method;
        if (detail.contains("visited"))
            out << ", " << detail["visited"].get<std::uint64_t>() << " matrices";
        if (detail.contains("leaves"))
            out << ", " << detail["leaves"].get<int>() << " 2-connected pieces";
        out << ")\n";
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------

struct MrsetArgs {
    std::string g6, named;
    int p = 2;
    std::string budget;
    bool json = false;
};

int cmd_mrset(const MrsetArgs& a, std::ostream& out)
{
    const Graph g = resolve_graph(a.g6, a.named);
    const FieldSpec field(a.p);
    const auto budget = a.budget.empty() ? default_budget() : parse_budget(a.budget);
    const auto set = minrank::min_rank_set(field, g, budget);

    if (a.json) {
        json mats = json::array();
        for (const auto& m : set.matrices)
            mats.push_back(matrix_json(m));
        out << json{{"schema", 1}, {"command", "mrset"}, {"graph6", minrank::graph6_encode(g)}, {"field", a.p},
                    {"mr", set.mr}, {"matrices", mats}, {"classes", set.classes}}
                   .dump()
            << "\n";
        return exit_ok;
    }
    out << "mr = " << set.mr << " over " << field_name(field) << "; " << set.matrices.size() << " matrices in "
        << set.classes.size() << " column-space classes\n";
    for (std::size_t i = 0; i < set.matrices.size(); ++i) {
        out << "M" << i + 1 << " (C" << set.class_of(static_cast<int>(i)) + 1 << ")\n";
        std::istringstream rows(set.matrices[i].to_string());
        std::string row;
        while (std::getline(rows, row))
            out << "  " << row << "\n";
    }
    for (std::size_t c = 0; c < set.classes.size(); ++c) {
        out << "C" << c + 1 << " = {";
        for (std::size_t j = 0; j < set.classes[c].size(); ++j)
            out << (j ? ", M" : "M") << set.classes[c][j] + 1;
        out << "}\n";
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
    int p = 2;
    int k = 3;
    int max_n = 8;
    int jobs = 1;
    std::string out_path;
    std::string budget;
    bool json = false;
    bool quiet = false;
};

json report_json(const minrank::CatalogReport& rep)
{
    json by_order = json::object();
    for (auto [n, c] : rep.by_order)
        by_order[std::to_string(n)] = c;
    json stated = json::array();
    for (const auto& s : rep.stated) {
        json j{{"label", s.label}, {"total", s.total}, {"agrees", s.total == rep.connectivity_at_most_one()}};
        if (s.disconnected >= 0) {
            j["disconnected"] = s.disconnected;
            j["cut_vertex"] = s.cut_vertex;
            j["agrees"] = j["agrees"].get<bool>() && s.disconnected == rep.disconnected
                       && s.cut_vertex == rep.cut_vertex;
        }
        stated.push_back(j);
    }
    return {{"field", rep.p},
            {"k", rep.k},
            {"members", rep.total},
            {"by_order", by_order},
            {"max_order", rep.max_order},
            {"bound_attained", rep.bound_attained},
            {"connectivity",
             {{"disconnected", rep.disconnected}, {"cut_vertex", rep.cut_vertex}, {"two_connected", rep.two_connected}}},
            {"stated", stated},
            {"consistent", rep.consistent()},
            {"lines", rep.lines}};
}

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err)
{
    minrank::SearchOptions opt;
    opt.budget = a.budget.empty() ? default_budget() : parse_budget(a.budget);
    opt.jobs = a.jobs;
    if (!a.quiet)
        opt.on_level = [&](int n, std::size_t graphs, std::size_t members) {
            err << "n=" << n << ": " << graphs << " graphs, " << members << " members\n";
        };
    minrank::ForbiddenCatalog cat;
    try {
        cat = minrank::find_forbidden(FieldSpec(a.p), a.k, a.max_n, opt);
    } catch (const minrank::SearchAborted& e) {
        err << e.what() << "\n";
        if (e.order() > 0)
            err << "orders up to " << e.order() - 1 << " were completed; ";
        err << "no catalog written\n";
        return exit_budget;
    }
    const auto text = minrank::catalog_text(cat);
    const auto rep = minrank::catalog_report(cat);
    if (a.out_path.empty()) {
        out << text;
        if (a.json)
            err << json{{"schema", 1}, {"command", "search"}, {"summary", report_json(rep)}}.dump() << "\n";
        return exit_ok;
    }
    {
        std::ofstream f(a.out_path, std::ios::binary | std::ios::trunc);
        if (!f)
            throw std::runtime_error("cannot write " + a.out_path);
        f << text;
    }
    if (a.json)
        out << json{{"schema", 1}, {"command", "search"}, {"out", a.out_path}, {"summary", report_json(rep)}}.dump()
            << "\n";
    else
        out << rep.text();
    return exit_ok;
}

minrank::ForbiddenCatalog load_catalog(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open catalog " + path);
    return minrank::read_catalog(in);
}

// ---------------------------------------------------------------------------

struct CheckArgs {
    std::string catalog;
    int verify = 0;
    std::string budget;
    bool json = false;
};

int cmd_check(const CheckArgs& a, std::istream& in, std::ostream& out, std::ostream& err)
{
    const auto cat = load_catalog(a.catalog);
    const auto budget = a.budget.empty() ? default_budget() : parse_budget(a.budget);
    const std::string low = "mr<=" + std::to_string(cat.k);
    const std::string high = "mr>=" + std::to_string(cat.k + 1);

    int errors = 0, verified = 0, disagreements = 0;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        json rec{{"input", line}};
        std::string text = line + "\t";
        try {
            const Graph g = minrank::graph6_decode(line);
            const bool below = minrank::avoids_catalog(g, cat);
            rec["verdict"] = below ? low : high;
            text += below ? low : high;
            if (verified < a.verify) {
                ++verified;
                const bool truth = minrank::min_rank(cat.field, g, budget) <= cat.k;
                rec["verified"] = truth == below;
                if (truth != below) {
                    ++disagreements;
                    text += "\tMISMATCH";
                } else {
                    text += "\tverified";
                }
            }
        } catch (const std::exception& e) {
            ++errors;
            rec["verdict"] = "error";
            rec["message"] = e.what();
            text += std::string("error: ") + e.what();
        }
        if (a.json)
            out << rec.dump() << "\n";
        else
            out << text << "\n";
    }
    if (a.verify > 0)
        err << "verified " << verified << " against brute force, " << disagreements << " disagreements\n";
    if (disagreements)
        return exit_failure;
    return errors ? exit_parse : exit_ok;
}

// ---------------------------------------------------------------------------

struct TriplesArgs {
    std::string g6, named, pattern;
    std::vector<int> map;
    int p = 2;
    bool edges_only = false;
    std::string budget;
    bool json = false;
};

int cmd_triples(const TriplesArgs& a, std::ostream& out, std::ostream& err)
{
    const Graph host = resolve_graph(a.g6, a.named);
    if (a.pattern.empty())
        throw InputError("--pattern is required");
    const Graph pattern = resolve_pattern(a.pattern);
    const FieldSpec field(a.p);
    const auto budget = a.budget.empty() ? default_budget() : parse_budget(a.budget);

    std::optional<minrank::Embedding> emb;
    if (!a.map.empty()) {
        emb = minrank::make_embedding(host, pattern, a.map);
    } else {
        auto all = minrank::embeddings(host, pattern);
        if (all.empty()) {
            err << "no induced copy of the pattern (" << minrank::graph6_encode(pattern) << ") in the host\n";
            return exit_failure;
        }
        emb = std::move(all.front());
    }
    if (emb->outside.size() > 6) {
        err << "at most 6 host vertices may lie outside the pattern\n";
        return exit_failure;
    }

    const auto set = minrank::min_rank_set(field, pattern, budget);
    const int k = set.mr;
    const auto prof = minrank::increase_profile(*emb, set);
    const auto policy = a.edges_only ? minrank::PairPolicy::edges_only : minrank::PairPolicy::all_pairs;
    const auto triple = minrank::find_optimal_triple(prof, policy);

    bool relative = minrank::min_rank(field, host, budget) >= k + 1;
    for (int v : emb->outside)
        relative = relative && minrank::min_rank(field, minrank::delete_vertex(host, v), budget) <= k;
    const auto rep = minrank::check_properties(prof, triple, relative);
    const auto w = minrank::weights(*emb, field);
    const auto m = emb->outside.size();

    auto vertex_label = [&](int local) { return emb->outside[static_cast<std::size_t>(local)]; };

    if (a.json) {
        json mats = json::array();
        for (const auto& mat : set.matrices)
            mats.push_back({{"diagonal", diagonal_of(mat)}, {"rows", matrix_json(mat)}});
        json weights_v = json::array();
        json iv = json::array();
        for (std::size_t i = 0; i < m; ++i) {
            json wv = json::array();
            for (auto x : w.vertex[i].entries())
                wv.push_back(static_cast<int>(x));
            weights_v.push_back({{"vertex", vertex_label(static_cast<int>(i))}, {"weight", wv}});
            iv.push_back({{"vertex", vertex_label(static_cast<int>(i))}, {"matrices", mask_indices(prof.vertex[i])}});
        }
        json ip = json::array();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                ip.push_back({{"pair", {vertex_label(static_cast<int>(i)), vertex_label(static_cast<int>(j))}},
                              {"weight", static_cast<int>(w.pair[i][j])},
                              {"matrices", mask_indices(prof.pair[i][j])}});
        json tj = nullptr;
        if (triple) {
            json pairs = json::array();
            for (auto [x, y] : triple->pairs)
                pairs.push_back({vertex_label(x), vertex_label(y)});
            json s = json::array(), t = json::array();
            for (int i = 0; i < static_cast<int>(m); ++i) {
                if ((triple->endpoints >> i) & 1u)
                    s.push_back(vertex_label(i));
                if ((triple->vertices >> i) & 1u)
                    t.push_back(vertex_label(i));
            }
            tj = {{"R", pairs}, {"S", s}, {"T", t}, {"objective", triple->objective()},
                  {"uses_zero_weight_pairs", triple->uses_zero_weight_pairs}};
        }
        json props{{"edge_incidence", rep.edge_incidence},
                   {"P1", rep.p1_union_of_classes},
                   {"P2", rep.p2_endpoints_within_pairs},
                   {"P3", optional_json(rep.p3_classes_not_covered)},
                   {"P4", optional_json(rep.p4_class_in_pairs_only)},
                   {"minimal_vertices", rep.minimal_vertices},
                   {"minimal_pairs", rep.minimal_pairs},
                   {"S_T_disjoint", rep.endpoints_disjoint_from_vertices},
                   {"triple_size_bounds", rep.triple_size_bounds},
                   {"size_bound", optional_json(rep.size_bound)},
                   {"vertex_not_increasing_for_all", optional_json(rep.vertex_not_increasing_for_all)},
                   {"pair_not_increasing_for_all", optional_json(rep.pair_not_increasing_for_all)},
                   {"no_zero_weight_vertex", optional_json(rep.no_zero_weight_vertex)},
                   {"all_hold", rep.all_hold()}};
        out << json{{"schema", 1},
                    {"command", "triples"},
                    {"host", minrank::graph6_encode(host)},
                    {"pattern", minrank::graph6_encode(pattern)},
                    {"field", a.p},
                    {"pattern_mr", k},
                    {"map", emb->map},
                    {"outside", emb->outside},
                    {"matrices", mats},
                    {"classes", set.classes},
                    {"weights", weights_v},
                    {"I_vertex", iv},
                    {"I_pair", ip},
                    {"triple", tj},
                    {"relative_member", relative},
                    {"properties", props}}
                   .dump()
            << "\n";
        return exit_ok;
    }

    out << "host " << minrank::graph6_encode(host) << " (" << host.order() << " vertices), pattern "
        << minrank::graph6_encode(pattern) << " (mr " << k << " over " << field_name(field) << ", "
        << set.matrices.size() << " matrices, " << set.classes.size() << " classes)\n";
    out << "embedding:";
    for (std::size_t i = 0; i < emb->map.size(); ++i)
        out << " " << i << "->" << emb->map[i];
    out << "\noutside:";
    for (int v : emb->outside)
        out << " " << v;
    out << "\n";
    for (std::size_t i = 0; i < set.matrices.size(); ++i)
        out << "M" << i + 1 << " diag " << diagonal_of(set.matrices[i]) << " C"
            << set.class_of(static_cast<int>(i)) + 1 << "\n";
    for (std::size_t i = 0; i < m; ++i) {
        out << "wt(" << vertex_label(static_cast<int>(i)) << ") = (";
        for (std::size_t j = 0; j < w.vertex[i].size(); ++j)
            out << (j ? "," : "") << static_cast<int>(w.vertex[i][j]);
        out << ")  I_" << vertex_label(static_cast<int>(i)) << " = " << matrix_set_text(prof.vertex[i]) << "\n";
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            out << "wt(" << vertex_label(static_cast<int>(i)) << vertex_label(static_cast<int>(j)) << ") = "
                << static_cast<int>(w.pair[i][j]) << "  I_" << vertex_label(static_cast<int>(i))
                << vertex_label(static_cast<int>(j)) << " = " << matrix_set_text(prof.pair[i][j]) << "\n";
    if (!triple) {
        out << "no optimal triple: the host has the same minimum rank as the pattern\n";
    } else {
        out << "optimal triple: R = {";
        for (std::size_t i = 0; i < triple->pairs.size(); ++i)
            out << (i ? ", " : "") << vertex_label(triple->pairs[i].first) << vertex_label(triple->pairs[i].second);
        out << "}, S = {";
        bool first = true;
        for (int i = 0; i < static_cast<int>(m); ++i)
            if ((triple->endpoints >> i) & 1u) {
                out << (first ? "" : ", ") << vertex_label(i);
                first = false;
            }
        out << "}, T = {";
        first = true;
        for (int i = 0; i < static_cast<int>(m); ++i)
            if ((triple->vertices >> i) & 1u) {
                out << (first ? "" : ", ") << vertex_label(i);
                first = false;
            }
        out << "}, 2|R|+|T| = " << triple->objective();
        if (triple->uses_zero_weight_pairs)
            out << " (uses zero-weight pairs)";
        out << "\n";
    }
    out << "relative member: " << (relative ? "yes" : "no") << "\n";
    out << "edge incidence: " << (rep.edge_incidence ? "holds" : "FAILS") << "\n";
    out << "P1: " << (rep.p1_union_of_classes ? "holds" : "FAILS") << "\n";
    out << "P2: " << (rep.p2_endpoints_within_pairs ? "holds" : "FAILS") << "\n";
    out << "P3: " << optional_text(rep.p3_classes_not_covered) << "\n";
    out << "P4: " << optional_text(rep.p4_class_in_pairs_only) << "\n";
    out << "minimality of T and R: " << (rep.minimal_vertices && rep.minimal_pairs ? "holds" : "FAILS") << "\n";
    out << "S and T disjoint: " << (rep.endpoints_disjoint_from_vertices ? "holds" : "FAILS") << "\n";
    out << "|G-H| <= |S|+|T| <= 2|R|+|T|: " << optional_text(rep.size_bound) << "\n";
    out << "no zero-weight vertex: " << optional_text(rep.no_zero_weight_vertex) << "\n";
    return exit_ok;
}

// ---------------------------------------------------------------------------

struct CertifyArgs {
    std::string g6, named;
    int p = 2;
    int k = 3;
    std::string budget;
    bool json = false;
};

int cmd_certify(const CertifyArgs& a, std::ostream& out)
{
    const Graph g = resolve_graph(a.g6, a.named);
    const auto budget = a.budget.empty() ? default_budget() : parse_budget(a.budget);
    const auto cert = minrank::certify_minimal(FieldSpec(a.p), a.k, g, budget);
    if (a.json) {
        out << json{{"schema", 1},      {"command", "certify"},         {"graph6", cert.graph6},
                    {"field", a.p},     {"k", cert.k},                  {"mr", cert.mr},
                    {"deletion_mr", cert.deletion_mr}, {"minimal", cert.minimal()}}
                   .dump()
            << "\n";
        return exit_ok;
    }
    out << cert.graph6 << ": mr = " << cert.mr << "; mr(G-v) =";
    for (int r : cert.deletion_mr)
        out << " " << r;
    out << "\n" << (cert.minimal() ? "minimal" : "not minimal") << " for k = " << cert.k << "\n";
    return exit_ok;
}

struct ReportArgs {
    std::string catalog;
    bool json = false;
};

int cmd_report(const ReportArgs& a, std::ostream& out)
{
    const auto rep = minrank::catalog_report(load_catalog(a.catalog));
    if (a.json)
        out << json{{"schema", 1}, {"command", "report"}, {"summary", report_json(rep)}}.dump() << "\n";
    else
        out << rep.text();
    return exit_ok;
}

int cmd_generate(int n, int jobs, std::ostream& out)
{
    for (const auto& f : minrank::generate_graphs(n, jobs).members)
        out << minrank::graph6_encode(minrank::graph_from_form(f)) << "\n";
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Minimum rank of graphs over small prime fields", "mrank"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(minrank::engine_version()));
    const auto fields = CLI::IsMember({2, 3, 5, 7});

    MrArgs mr;
    auto* c_mr = app.add_subcommand("mr", "Minimum rank of one graph");
    c_mr->add_option("graph", mr.g6, "graph6 code");
    c_mr->add_option("--named", mr.named, "Named graph (see `mrank names`)");
    c_mr->add_option("--field", mr.p, "Field order")->check(fields);
    c_mr->add_option("--budget", mr.budget, "Maximum number of matrices to visit");
    c_mr->add_flag("--cut-vertex", mr.cut_vertex, "Split at cut vertices and components");
    c_mr->add_flag("--json", mr.json);
    c_mr->add_option("--cache", mr.cache, "Append-only result cache file");
    c_mr->add_flag("--no-cache", mr.no_cache, "Recompute and compare against the cache");

    MrsetArgs ms;
    auto* c_ms = app.add_subcommand("mrset", "Matrices attaining the minimum rank and their classes");
    c_ms->add_option("graph", ms.g6, "graph6 code");
    c_ms->add_option("--named", ms.named);
    c_ms->add_option("--field", ms.p)->check(fields);
    c_ms->add_option("--budget", ms.budget);
    c_ms->add_flag("--json", ms.json);

    SearchArgs se;
    auto* c_se = app.add_subcommand("search", "Exhaustive search for minimal forbidden subgraphs");
    c_se->add_option("--field", se.p)->check(fields);
    c_se->add_option("--k", se.k, "Rank bound")->check(CLI::NonNegativeNumber);
    c_se->add_option("--max-n", se.max_n)->check(CLI::Range(0, minrank::kMaxGenerationOrder));
    c_se->add_option("--jobs", se.jobs)->check(CLI::PositiveNumber);
    c_se->add_option("--out", se.out_path, "Catalog file to write");
    c_se->add_option("--budget", se.budget);
    c_se->add_flag("--json", se.json);
    c_se->add_flag("--quiet", se.quiet);

    CheckArgs ch;
    auto* c_ch = app.add_subcommand("check", "Decide mr <= k for graph6 lines on stdin using a catalog");
    c_ch->add_option("--catalog", ch.catalog)->required();
    c_ch->add_option("--verify", ch.verify, "Re-check the first N graphs by brute force")->check(CLI::NonNegativeNumber);
    c_ch->add_option("--budget", ch.budget);
    c_ch->add_flag("--json", ch.json);

    TriplesArgs tr;
    auto* c_tr = app.add_subcommand("triples", "Rank-increasing sets and the optimal triple for an embedded pattern");
    c_tr->add_option("graph", tr.g6, "Host graph6 code");
    c_tr->add_option("--named", tr.named, "Named host graph");
    c_tr->add_option("--pattern", tr.pattern, "Pattern name or graph6 code");
    c_tr->add_option("--map", tr.map, "Host vertex of each pattern vertex")->delimiter(',');
    c_tr->add_option("--field", tr.p)->check(fields);
    c_tr->add_flag("--edges-only", tr.edges_only, "Use only host edges as pairs");
    c_tr->add_option("--budget", tr.budget);
    c_tr->add_flag("--json", tr.json);

    CertifyArgs ce;
    auto* c_ce = app.add_subcommand("certify", "Minimality certificate: mr(G) and mr(G-v) for every v");
    c_ce->add_option("graph", ce.g6);
    c_ce->add_option("--named", ce.named);
    c_ce->add_option("--field", ce.p)->check(fields);
    c_ce->add_option("--k", ce.k)->check(CLI::NonNegativeNumber);
    c_ce->add_option("--budget", ce.budget);
    c_ce->add_flag("--json", ce.json);

    ReportArgs re;
    auto* c_re = app.add_subcommand("report", "Summary of a catalog file");
    c_re->add_option("--catalog", re.catalog)->required();
    c_re->add_flag("--json", re.json);

    int gen_n = 0, gen_jobs = 1;
    auto* c_ge = app.add_subcommand("generate", "All graphs on n vertices up to isomorphism, as graph6");
    c_ge->add_option("--n", gen_n)->required()->check(CLI::Range(0, minrank::kMaxGenerationOrder));
    c_ge->add_option("--jobs", gen_jobs)->check(CLI::PositiveNumber);

    auto* c_na = app.add_subcommand("names", "List the named-graph registry");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        if (c_mr->parsed())
            return cmd_mr(mr, out, err);
        if (c_ms->parsed())
            return cmd_mrset(ms, out);
        if (c_se->parsed())
            return cmd_search(se, out, err);
        if (c_ch->parsed())
            return cmd_check(ch, in, out, err);
        if (c_tr->parsed())
            return cmd_triples(tr, out, err);
        if (c_ce->parsed())
            return cmd_certify(ce, out);
        if (c_re->parsed())
            return cmd_report(re, out);
        if (c_ge->parsed())
            return cmd_generate(gen_n, gen_jobs, out);
        if (c_na->parsed()) {
            for (const auto& name : minrank::named::registry_names())
                out << name << "\n";
            return exit_ok;
        }
    } catch (const minrank::BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return exit_budget;
    } catch (const minrank::SearchAborted& e) {
        err << "error: " << e.what() << "\n";
        return exit_budget;
    } catch (const minrank::GraphFormatError& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const minrank::CatalogFormatError& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_failure;
}

} // namespace mrank
