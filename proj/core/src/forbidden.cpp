#include "minrank/forbidden.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#ifndef MINRANK_VERSION
#define MINRANK_VERSION "0.0.0"
#endif

namespace minrank {

std::string_view engine_version() noexcept
{
    return MINRANK_VERSION;
}

namespace {

// Runs body(worker) on `jobs` threads and rethrows the first exception.
void run_workers(int jobs, const std::function<void(int)>& body)
{
    jobs = std::max(jobs, 1);
    if (jobs == 1) {
        body(0);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w)
        threads.emplace_back([&, w] {
            try {
                body(w);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    for (auto& t : threads)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

int owner(const CanonicalForm& f, int jobs)
{
    return static_cast<int>(CanonicalFormHash{}(f) % static_cast<std::size_t>(std::max(jobs, 1)));
}

Graph with_new_vertex(const Graph& g, VertexMask neighbours)
{
    const int n = g.order();
    Graph h(n + 1);
    for (auto [u, v] : g.edges())
        h.add_edge(u, v);
    while (neighbours) {
        h.add_edge(n, std::countr_zero(neighbours));
        neighbours &= neighbours - 1;
    }
    return h;
}

// mr(g) >= k+1, stopping at the first matrix of rank <= k.
bool rank_exceeds(FieldSpec field, const Graph& g, int k, std::uint64_t budget)
{
    MinRankOptions opt;
    opt.budget = budget;
    opt.stop_at = k;
    return min_rank_search(field, g, opt).mr >= k + 1;
}

struct BudgetFailure {
    CanonicalForm form;
    std::uint64_t required = 0;
    std::uint64_t budget = 0;
};

// For every graph up to some order: whether mr >= k+1.
class ExceedsTable {
public:
    ExceedsTable(FieldSpec field, int k, std::uint64_t budget) : field_(field), k_(k), budget_(budget) {}

    [[nodiscard]] bool exceeds(const Graph& g) const
    {
        const auto f = canonical_form(g);
        return levels_.at(static_cast<std::size_t>(f.n)).at(f.code);
    }

    [[nodiscard]] VertexMask high_deletions(const Graph& g) const
    {
        VertexMask out = 0;
        for (int v = 0; v < g.order(); ++v)
            if (exceeds(delete_vertex(g, v)))
                out |= VertexMask{1} << v;
        return out;
    }

    void add_level(const GenerationLevel& level, int jobs)
    {
        if (static_cast<int>(levels_.size()) != level.n)
            throw std::logic_error("levels must be added in order");
        std::vector<std::vector<std::pair<std::uint64_t, bool>>> found(static_cast<std::size_t>(std::max(jobs, 1)));
        std::vector<std::optional<BudgetFailure>> failures(found.size());
        run_workers(jobs, [&](int w) {
            for (const auto& f : level.members) {
                if (owner(f, jobs) != w)
                    continue;
                const Graph g = graph_from_form(f);
                bool high = level.n > 0 && high_deletions(g) != 0;
                if (!high && g.edge_count() > 0) {
                    try {
                        high = rank_exceeds(field_, g, k_, budget_);
                    } catch (const BudgetExceeded& e) {
                        auto& slot = failures[static_cast<std::size_t>(w)];
                        if (!slot || f < slot->form)
                            slot = BudgetFailure{f, e.required(), e.budget()};
                        continue;
                    }
                }
                found[static_cast<std::size_t>(w)].emplace_back(f.code, high);
            }
        });
        std::optional<BudgetFailure> first;
        for (auto& slot : failures)
            if (slot && (!first || slot->form < first->form))
                first = slot;
        if (first)
            throw SearchAborted(graph6_encode(graph_from_form(first->form)), level.n, first->required, first->budget);
        auto& table = levels_.emplace_back();
        for (auto& part : found)
            for (auto [code, high] : part)
                table.emplace(code, high);
    }

private:
    FieldSpec field_;
    int k_;
    std::uint64_t budget_;
    std::vector<std::unordered_map<std::uint64_t, bool>> levels_;
};

bool member_less(const CatalogMember& a, const CatalogMember& b)
{
    return a.form < b.form;
}

} // namespace

// ---------------------------------------------------------------------------

GenerationLevel augment(const GenerationLevel& level, int jobs)
{
    if (level.n + 1 > kMaxGenerationOrder)
        throw std::invalid_argument("graph generation is limited to " + std::to_string(kMaxGenerationOrder) + " vertices");
    jobs = std::max(jobs, 1);
    std::vector<std::unordered_set<CanonicalForm, CanonicalFormHash>> seen(static_cast<std::size_t>(jobs));
    run_workers(jobs, [&](int w) {
        auto& mine = seen[static_cast<std::size_t>(w)];
        for (std::size_t i = static_cast<std::size_t>(w); i < level.members.size(); i += static_cast<std::size_t>(jobs)) {
            const Graph g = graph_from_form(level.members[i]);
            const VertexMask limit = VertexMask{1} << level.n;
            for (VertexMask nb = 0; nb < limit; ++nb)
                mine.insert(canonical_form(with_new_vertex(g, nb)));
        }
    });
    std::unordered_set<CanonicalForm, CanonicalFormHash> all;
    for (auto& s : seen)
        all.merge(s);
    GenerationLevel out{level.n + 1, {all.begin(), all.end()}};
    std::sort(out.members.begin(), out.members.end());
    return out;
}

std::vector<GenerationLevel> generate_levels(int max_n, int jobs)
{
    if (max_n < 0 || max_n > kMaxGenerationOrder)
        throw std::invalid_argument("graph generation is limited to " + std::to_string(kMaxGenerationOrder) + " vertices");
    std::vector<GenerationLevel> levels;
    levels.push_back({0, {canonical_form(Graph(0))}});
    for (int n = 1; n <= max_n; ++n)
        levels.push_back(augment(levels.back(), jobs));
    return levels;
}

GenerationLevel generate_graphs(int n, int jobs)
{
    return std::move(generate_levels(n, jobs).back());
}

// ---------------------------------------------------------------------------

SearchAborted::SearchAborted(std::string candidate, int order, std::uint64_t required, std::uint64_t budget) :
    std::runtime_error("search aborted at order " + std::to_string(order) + ": candidate " + candidate + " needs "
                       + std::to_string(required) + " matrices, budget is " + std::to_string(budget)),
    candidate_(std::move(candidate)), order_(order)
{
}

std::vector<Graph> ForbiddenCatalog::graphs() const
{
    std::vector<Graph> out;
    out.reserve(members.size());
    for (const auto& m : members)
        out.push_back(graph_from_form(m.form));
    return out;
}

CatalogMember make_member(const Graph& g)
{
    const auto f = canonical_form(g);
    const Graph c = graph_from_form(f);
    return {f, graph6_encode(c), c.order(), connectivity_class(c)};
}

ForbiddenCatalog find_forbidden(FieldSpec field, int k, int max_n, const SearchOptions& options)
{
    if (k < 0)
        throw std::invalid_argument("rank bound must be non-negative");
    ForbiddenCatalog cat{field, k, {}, {"generated", max_n, options.budget, std::string(engine_version())}};
    ExceedsTable table(field, k, options.budget);
    GenerationLevel level{0, {canonical_form(Graph(0))}};
    for (int n = 0; n <= max_n; ++n) {
        if (n > 0)
            level = augment(level, options.jobs);
        table.add_level(level, options.jobs);
        std::size_t before = cat.members.size();
        for (const auto& f : level.members) {
            const Graph g = graph_from_form(f);
            if (table.exceeds(g) && (n == 0 || table.high_deletions(g) == 0))
                cat.members.push_back(make_member(g));
        }
        if (options.on_level)
            options.on_level(n, level.members.size(), cat.members.size() - before);
    }
    std::sort(cat.members.begin(), cat.members.end(), member_less);
    return cat;
}

ForbiddenCatalog find_forbidden_among(FieldSpec field, int k, std::span<const Graph> candidates,
                                      const SearchOptions& options)
{
    ForbiddenCatalog cat{field, k, {}, {"ingested", 0, options.budget, std::string(engine_version())}};
    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    for (const auto& raw : candidates) {
        const auto f = canonical_form(raw);
        if (!seen.insert(f).second)
            continue;
        cat.provenance.max_n = std::max(cat.provenance.max_n, f.n);
        const Graph g = graph_from_form(f);
        try {
            bool ok = true;
            for (int v = 0; v < g.order() && ok; ++v)
                ok = !rank_exceeds(field, delete_vertex(g, v), k, options.budget);
            if (ok && rank_exceeds(field, g, k, options.budget))
                cat.members.push_back(make_member(g));
        } catch (const BudgetExceeded& e) {
            throw SearchAborted(graph6_encode(g), g.order(), e.required(), e.budget());
        }
    }
    std::sort(cat.members.begin(), cat.members.end(), member_less);
    return cat;
}

// ---------------------------------------------------------------------------

bool MinimalityCertificate::deletions_within() const noexcept
{
    return std::all_of(deletion_mr.begin(), deletion_mr.end(), [&](int r) { return r <= k; });
}

MinimalityCertificate certify_minimal(FieldSpec field, int k, const Graph& g, std::uint64_t budget)
{
    MinimalityCertificate cert;
    cert.graph6 = graph6_encode(g);
    cert.k = k;
    cert.mr = min_rank(field, g, budget);
    for (int v = 0; v < g.order(); ++v)
        cert.deletion_mr.push_back(min_rank(field, delete_vertex(g, v), budget));
    return cert;
}

// ---------------------------------------------------------------------------

bool RelativeCatalog::contains(const CanonicalForm& f) const
{
    return std::any_of(members.begin(), members.end(), [&](const RelativeMember& m) { return m.member.form == f; });
}

namespace {

std::vector<int> covering_copy(const Graph& g, const Graph& pattern, VertexMask must_cover)
{
    if (std::popcount(must_cover) > pattern.order() || pattern.order() > g.order())
        return {};
    for (auto& copy : find_induced_copies(g, pattern))
        if ((copy.vertices & must_cover) == must_cover)
            return std::move(copy.map);
    return {};
}

} // namespace

std::vector<int> relative_witness(FieldSpec field, int k, const Graph& g, const Graph& pattern, std::uint64_t budget)
{
    if (!rank_exceeds(field, g, k, budget))
        return {};
    VertexMask high = 0;
    for (int v = 0; v < g.order(); ++v)
        if (rank_exceeds(field, delete_vertex(g, v), k, budget))
            high |= VertexMask{1} << v;
    return covering_copy(g, pattern, high);
}

RelativeCatalog find_relative_forbidden(FieldSpec field, int k, const Graph& pattern, int max_n,
                                        const SearchOptions& options)
{
    RelativeCatalog cat{field, k, pattern, {}, {"generated", max_n, options.budget, std::string(engine_version())}};
    ExceedsTable table(field, k, options.budget);
    GenerationLevel level{0, {canonical_form(Graph(0))}};
    for (int n = 0; n <= max_n; ++n) {
        if (n > 0)
            level = augment(level, options.jobs);
        table.add_level(level, options.jobs);
        const std::size_t before = cat.members.size();
        if (n >= pattern.order()) {
            for (const auto& f : level.members) {
                const Graph g = graph_from_form(f);
                if (!table.exceeds(g))
                    continue;
                const VertexMask high = n == 0 ? 0 : table.high_deletions(g);
                auto copy = covering_copy(g, pattern, high);
                if (!copy.empty() || pattern.order() == 0)
                    cat.members.push_back({make_member(g), std::move(copy)});
            }
        }
        if (options.on_level)
            options.on_level(n, level.members.size(), cat.members.size() - before);
    }
    std::sort(cat.members.begin(), cat.members.end(),
              [](const RelativeMember& a, const RelativeMember& b) { return a.member.form < b.member.form; });
    return cat;
}

// ---------------------------------------------------------------------------

bool avoids_catalog(const Graph& g, const ForbiddenCatalog& catalog)
{
    if (g.order() > kMaxCanonicalVertices)
        throw std::invalid_argument("catalog lookup supports at most 10 vertices");
    for (const auto& m : catalog.members)
        if (m.n <= g.order() && contains_induced(g, graph_from_form(m.form)))
            return false;
    return true;
}

bool is_mr_le_3(const Graph& g, const ForbiddenCatalog& catalog)
{
    if (catalog.field.p() != 2 || catalog.k != 3)
        throw std::invalid_argument("is_mr_le_3 needs the GF(2) catalog for k = 3");
    return avoids_catalog(g, catalog);
}

// ---------------------------------------------------------------------------

std::vector<StatedSplit> reference_splits()
{
    return {
        {"summary total", -1, -1, 29},
        {"itemized breakdown", 8, 22, 30},
    };
}

CatalogReport catalog_report(const ForbiddenCatalog& catalog)
{
    CatalogReport rep;
    rep.p = catalog.field.p();
    rep.k = catalog.k;
    rep.total = catalog.members.size();
    for (const auto& m : catalog.members) {
        ++rep.by_order[m.n];
        rep.max_order = std::max(rep.max_order, m.n);
        switch (m.connectivity) {
        case ConnectivityClass::disconnected: ++rep.disconnected; break;
        case ConnectivityClass::has_cut_vertex: ++rep.cut_vertex; break;
        case ConnectivityClass::two_connected: ++rep.two_connected; break;
        }
        rep.lines.push_back(m.graph6 + " " + std::to_string(m.n) + " " + std::string(to_string(m.connectivity)));
    }
    rep.bound_attained = catalog.provenance.max_n > 0 && rep.by_order.count(catalog.provenance.max_n) > 0;
    if (rep.p == 2 && rep.k == 3)
        rep.stated = reference_splits();
    return rep;
}

bool CatalogReport::consistent() const
{
    int sum = 0;
    for (auto [n, c] : by_order)
        sum += c;
    if (static_cast<std::size_t>(sum) != total || lines.size() != total)
        return false;
    if (static_cast<std::size_t>(disconnected + cut_vertex + two_connected) != total)
        return false;
    int d = 0, c = 0, t = 0;
    for (const auto& line : lines) {
        const auto cls = line.substr(line.rfind(' ') + 1);
        if (cls == to_string(ConnectivityClass::disconnected))
            ++d;
        else if (cls == to_string(ConnectivityClass::has_cut_vertex))
            ++c;
        else if (cls == to_string(ConnectivityClass::two_connected))
            ++t;
    }
    return d == disconnected && c == cut_vertex && t == two_connected;
}

std::string CatalogReport::text() const
{
    std::ostringstream os;
    os << "field GF(" << p << "), k = " << k << ": " << total << " minimal forbidden graphs\n";
    os << "by order:";
    for (auto [n, c] : by_order)
        os << " n=" << n << ":" << c;
    os << "\nlargest order: " << max_order << (bound_attained ? " (search bound attained)" : "") << "\n";
    os << "connectivity: " << disconnected << " disconnected, " << cut_vertex << " with a cut vertex, "
       << two_connected << " 2-connected\n";
    os << "vertex connectivity <= 1: " << connectivity_at_most_one() << "\n";
    for (const auto& s : stated) {
        os << "reference " << s.label << ": ";
        if (s.disconnected >= 0)
            os << s.disconnected << " + " << s.cut_vertex << " = ";
        os << s.total << "; computed ";
        if (s.disconnected >= 0)
            os << disconnected << " + " << cut_vertex << " = ";
        os << connectivity_at_most_one();
        const bool agrees = s.total == connectivity_at_most_one()
                         && (s.disconnected < 0 || (s.disconnected == disconnected && s.cut_vertex == cut_vertex));
        os << (agrees ? " (agrees)" : " (differs)") << "\n";
    }
    for (const auto& line : lines)
        os << line << "\n";
    return os.str();
}

} // namespace minrank
