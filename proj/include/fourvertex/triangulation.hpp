#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "fourvertex/polygon.hpp"

namespace fourvertex {

/// Index pair with a < b.
using Diagonal = std::pair<std::size_t, std::size_t>;

using Triangle = std::array<std::size_t, 3>;  // sorted indices

/// Triangulation of a convex polygon: n-3 pairwise non-crossing diagonals,
/// n-2 triangles.
struct Triangulation {
    Polygon polygon;
    std::vector<Diagonal> diagonals;   // sorted
    std::vector<Triangle> triangles;   // sorted triples, sorted list

    bool has_diagonal(std::size_t a, std::size_t b) const;
};

enum class EdgeKind { Delaunay, AntiDelaunay, Neither, Both };

/// Unique triangulation whose triangle circumcircles are all empty, by edge
/// flipping from a fan with exact predicates. `flip_seed` shuffles the flip
/// scan order (the result must not depend on it). Throws NotConvex /
/// NotGeneric.
Triangulation delaunay(const Polygon& p, std::uint64_t flip_seed = 0);

/// Same flip machinery with the acceptance reversed: every triangle
/// circumcircle is full.
Triangulation anti_delaunay(const Polygon& p, std::uint64_t flip_seed = 0);

/// Kind of the segment (i, j): boundary edges belong to both
/// triangulations; a diagonal is classified by membership.
EdgeKind edge_kind(const Polygon& p, std::size_t i, std::size_t j);

/// A diagonal of `t` whose two sides keep >= 4 vertices each. Throws
/// NoBalancedDiagonal (reachable for n = 6, by design).
Diagonal balanced_diagonal(const Triangulation& t);

/// True when both sides of diagonal (a, b) of an n-gon keep >= 4 vertices.
bool diagonal_is_balanced(std::size_t n, std::size_t a, std::size_t b);

/// All triangulations of a convex n-gon as diagonal sets (Catalan many).
std::vector<std::vector<Diagonal>> enumerate_triangulations(std::size_t n);

std::vector<Diagonal> fan_diagonals(std::size_t n, std::size_t apex);

/// Triangles induced by a non-crossing diagonal set of a convex n-gon.
std::vector<Triangle> triangles_from_diagonals(std::size_t n,
                                               const std::vector<Diagonal>& diagonals);

}  // namespace fourvertex
