#pragma once

#include <cstdint>
#include <optional>

#include "polysum/minkowski_dual.hpp"

namespace polysum {

// Fixed default stream for the seed-direction generator; override through
// the seed parameters (the CLI maps POLYSUM_SEED onto them).
inline constexpr std::uint64_t kDefaultSeed = 0x705f5eedULL;

// Index of the vertex maximizing <direction, .>, or nullopt on a tie.
std::optional<std::size_t> uniqueArgmax(const Polytope& p, const Vector& direction);

// Draws deterministic pseudo-random integer directions of growing magnitude
// until one has a unique argmax on both summands; that argmax pair is a
// Minkowski vertex by sup-additivity.
std::pair<std::size_t, std::size_t> seedMinkowskiVertex(
    const Polytope& A, const Polytope& B, std::uint64_t seed = kDefaultSeed);

// The primal cone of the sum at c = a + b: the convex hull of the two
// summand vertex cones translated to c. Its supports are facets of the sum
// through c and its extreme rays are the edge directions of the sum at c.
// Throws NotMinkowskiVertex when the hull cone is not pointed.
Cone minkowskiVertexCone(const Polytope& A, const Polytope& B, std::size_t a,
                         std::size_t b);

// The witness pair of the neighbouring Minkowski vertex across an edge of
// the sum: the edge is parallel to an edge of A at a, of B at b, or both,
// and the matching indices advance.
std::pair<std::size_t, std::size_t> neighbourCandidates(const Polytope& A,
                                                        const Polytope& B,
                                                        std::size_t a, std::size_t b,
                                                        const Vector& edgeDir);

// Breadth-first edge traversal of the sum from a seeded Minkowski vertex,
// entirely in the primal space. Canonically equal to the dual algorithms.
MinkowskiDecomposition sumPrimal(const Polytope& A, const Polytope& B,
                                 std::uint64_t seed = kDefaultSeed);

}  // namespace polysum
