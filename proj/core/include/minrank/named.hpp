#pragma once

// Named graphs. Labelled constructors reproduce the exact vertex numbering
// of the reference matrices (1-indexed labels i stored as vertex i-1), so
// attaining-matrix sets can be compared entry for entry.

#include "minrank/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace minrank::named {

/// Edges {12,13,23,24,25,34,35,45}.
[[nodiscard]] Graph full_house();
/// Edges {12,23,24,25,34,45}.
[[nodiscard]] Graph dart();
/// The "ltimes" graph: edges {12,13,14,15,45}.
[[nodiscard]] Graph ltimes();
/// P3 v P3 labelled so that {3,4} is the pair adjacent to everything:
/// edges {12,13,14,16,23,24,25,34,35,36,45,46,56}.
[[nodiscard]] Graph p3_join_p3();
[[nodiscard]] Graph p3_union_k2();
[[nodiscard]] Graph three_k2();

/// The 2x3 grid P3 x P2 with vertices u,v,w,x,y,z = 0..5:
/// rows z-y-x and w-u-v, rungs z-w, y-u, x-v. Both {w,u,v,x} and {z,y,u,v}
/// induce P4; deleting y leaves P5.
[[nodiscard]] Graph ladder_p3xp2();

/// P4 on 0..3 plus u = 4 adjacent to {0,1,3} and v = 5 adjacent to {0,2};
/// the `with_uv` variant also has the edge uv.
[[nodiscard]] Graph p4_with_two_weighted_vertices(bool with_uv);

/// Two triangles and two pendant edges glued at vertex 0 (7 vertices).
[[nodiscard]] Graph graph38();
/// K_{2,4} plus an edge inside the 4-side, with a pendant at a vertex of the
/// 2-side (7 vertices).
[[nodiscard]] Graph graph39();
/// Complement of 2P3.
[[nodiscard]] Graph mr3_class_g1();
/// Complement of P3 u K2 u K1.
[[nodiscard]] Graph mr3_class_g2();
/// An 8-vertex member of the P4-relative forbidden set whose deletion of
/// either centre vertex (0 or 1) still has minimum rank 4.
[[nodiscard]] Graph p4_relative_example();

/// The seven minimal forbidden graphs for minimum rank at most 2 over GF(2),
/// in the labelled forms above: 3K2, P3vP3, dart, ltimes, P3uK2, full house, P4.
struct NamedGraph {
    std::string name;
    Graph graph;
};
[[nodiscard]] std::vector<NamedGraph> rank3_forbidden_family();

/// Resolves a registry name: P<n>, C<n>, K<n>, E<n> (edgeless), <m>K<n>,
/// K<a>,<b>[,<c>...], full_house, dart, ltimes, p3_join_p3, p3_union_k2,
/// ladder, example_a, example_b, graph38, graph39, g1, g2, p4_relative.
[[nodiscard]] std::optional<Graph> lookup(std::string_view name);
[[nodiscard]] std::vector<std::string> registry_names();

} // namespace minrank::named
