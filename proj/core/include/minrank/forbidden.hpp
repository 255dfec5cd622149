#pragma once

// Exhaustive generation of small graphs up to isomorphism and the searches
// for minimal forbidden induced subgraphs, absolute and relative to a fixed
// pattern.

#include "minrank/canon.hpp"
#include "minrank/field.hpp"
#include "minrank/graph.hpp"
#include "minrank/minrank.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace minrank {

inline constexpr int kMaxGenerationOrder = 9;

[[nodiscard]] std::string_view engine_version() noexcept;

/// One canonical form per isomorphism class on n vertices, sorted.
struct GenerationLevel {
    int n = 0;
    std::vector<CanonicalForm> members;
};

/// Adds a vertex with every possible neighbourhood to each member and keeps
/// one graph per canonical form.
[[nodiscard]] GenerationLevel augment(const GenerationLevel& level, int jobs = 1);
/// Levels 0..max_n. Throws std::invalid_argument for max_n > 9.
[[nodiscard]] std::vector<GenerationLevel> generate_levels(int max_n, int jobs = 1);
[[nodiscard]] GenerationLevel generate_graphs(int n, int jobs = 1);

struct SearchOptions {
    std::uint64_t budget = kDefaultBudget;
    int jobs = 1;
    /// Called after each order is finished.
    std::function<void(int n, std::size_t graphs, std::size_t members)> on_level;
};

/// Raised when a candidate needs more matrices than the budget allows. No
/// partial result is produced.
class SearchAborted : public std::runtime_error {
public:
    SearchAborted(std::string candidate, int order, std::uint64_t required, std::uint64_t budget);
    [[nodiscard]] const std::string& candidate() const noexcept { return candidate_; }
    /// Every order below this one was fully processed.
    [[nodiscard]] int order() const noexcept { return order_; }

private:
    std::string candidate_;
    int order_;
};

struct CatalogMember {
    CanonicalForm form;
    std::string graph6;
    int n = 0;
    ConnectivityClass connectivity = ConnectivityClass::disconnected;
};

struct Provenance {
    std::string source;
    int max_n = 0;
    std::uint64_t budget = 0;
    std::string engine;
};

struct ForbiddenCatalog {
    FieldSpec field = FieldSpec::gf2();
    int k = 0;
    /// Sorted by (n, form).
    std::vector<CatalogMember> members;
    Provenance provenance;

    [[nodiscard]] std::vector<Graph> graphs() const;
};

[[nodiscard]] CatalogMember make_member(const Graph& g);

/// All graphs on at most max_n vertices with mr >= k+1 whose single-vertex
/// deletions all have mr <= k.
[[nodiscard]] ForbiddenCatalog find_forbidden(FieldSpec field, int k, int max_n, const SearchOptions& options = {});
/// The same test applied to externally supplied graphs; isomorphic inputs
/// are merged.
[[nodiscard]] ForbiddenCatalog find_forbidden_among(FieldSpec field, int k, std::span<const Graph> candidates,
                                                    const SearchOptions& options = {});

struct MinimalityCertificate {
    std::string graph6;
    int k = 0;
    int mr = 0;
    /// deletion_mr[v] = mr(G - v).
    std::vector<int> deletion_mr;

    [[nodiscard]] bool rank_exceeds() const noexcept { return mr >= k + 1; }
    [[nodiscard]] bool deletions_within() const noexcept;
    [[nodiscard]] bool minimal() const noexcept { return rank_exceeds() && deletions_within(); }
};

[[nodiscard]] MinimalityCertificate certify_minimal(FieldSpec field, int k, const Graph& g,
                                                    std::uint64_t budget = kDefaultBudget);

struct RelativeMember {
    CatalogMember member;
    /// Host vertices (in the canonical labelling of the member) of the first
    /// induced copy of the pattern meeting the condition, pattern order.
    std::vector<int> copy;
};

struct RelativeCatalog {
    FieldSpec field = FieldSpec::gf2();
    int k = 0;
    Graph pattern;
    std::vector<RelativeMember> members;
    Provenance provenance;

    [[nodiscard]] bool contains(const CanonicalForm& f) const;
};

/// mr(G) >= k+1 and some induced copy of H has mr(G - v) <= k for every v
/// outside it. Returns the first such copy or an empty vector.
[[nodiscard]] std::vector<int> relative_witness(FieldSpec field, int k, const Graph& g, const Graph& pattern,
                                                std::uint64_t budget = kDefaultBudget);

[[nodiscard]] RelativeCatalog find_relative_forbidden(FieldSpec field, int k, const Graph& pattern, int max_n,
                                                      const SearchOptions& options = {});

/// True iff no catalog member is an induced subgraph of g, i.e. mr(g) <= k
/// when the catalog is complete.
[[nodiscard]] bool avoids_catalog(const Graph& g, const ForbiddenCatalog& catalog);
/// Requires the catalog for GF(2) and k = 3 and at most 10 vertices.
[[nodiscard]] bool is_mr_le_3(const Graph& g, const ForbiddenCatalog& catalog);

/// Figures against which the computed connectivity split is compared: a
/// summary total of graphs with vertex connectivity at most one, and a
/// breakdown into disconnected and cut-vertex graphs.
struct StatedSplit {
    std::string label;
    int disconnected = -1;
    int cut_vertex = -1;
    int total = 0;
};

struct CatalogReport {
    int p = 2;
    int k = 0;
    std::size_t total = 0;
    std::map<int, int> by_order;
    int disconnected = 0;
    int cut_vertex = 0;
    int two_connected = 0;
    int max_order = 0;
    /// Some member has exactly the search bound as its order.
    bool bound_attained = false;
    std::vector<std::string> lines;
    std::vector<StatedSplit> stated;

    [[nodiscard]] int connectivity_at_most_one() const noexcept { return disconnected + cut_vertex; }
    /// The class counts add up and match a member-by-member recount of lines.
    [[nodiscard]] bool consistent() const;
    [[nodiscard]] std::string text() const;
};

[[nodiscard]] CatalogReport catalog_report(const ForbiddenCatalog& catalog);

/// Reference figures for the GF(2), k = 3 catalog.
[[nodiscard]] std::vector<StatedSplit> reference_splits();

} // namespace minrank
