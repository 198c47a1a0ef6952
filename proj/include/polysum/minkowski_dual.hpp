#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polysum/cone.hpp"

namespace polysum {

// Sum polytope plus, for every vertex of it, the unique witness pair of
// summand vertex indices with c = a + b.
struct MinkowskiDecomposition {
    Polytope sum;
    std::vector<std::pair<std::size_t, std::size_t>> witnesses;  // per sum vertex
    std::string method;
    std::uint64_t coneIntersections = 0;  // dual methods only
};

// The Minkowski vertex criterion: a + b is a vertex of A + B exactly when
// the dual cones of a and b intersect full-dimensionally. Returns the
// decision together with the refined cone.
std::pair<bool, Cone> isMinkowskiVertexPair(const Polytope& A, const Polytope& B,
                                            std::size_t a, std::size_t b);

// One supporting facet half-space of the sum per extreme ray of the refined
// cone, passing through the Minkowski vertex. Requires a full-dimensional
// cone apexed at the origin.
std::vector<HalfSpace> facetsFromRefinedCone(const Cone& refined,
                                             const Vector& sumPoint);

// All |V_A| * |V_B| dual-cone intersections.
MinkowskiDecomposition sumDualBrute(const Polytope& A, const Polytope& B);

// Vertices of B whose pairing with the anchor vertex of A yields a vertex of
// the sum. Always non-empty, and connected in B's edge graph.
struct PolyhedralCap {
    std::size_t anchor;                // vertex index in A
    std::vector<std::size_t> members;  // vertex indices of B, sorted
};

PolyhedralCap polyhedralCap(const Polytope& A, const Polytope& B, std::size_t anchor);

bool connectedInGraph(const Polytope& p, const std::vector<std::size_t>& members);

// Neighbour-propagating variant: per anchor vertex of A, scans B in canonical
// order until the first full-dimensional intersection, then explores B's
// dual-cone adjacency across shared refined-cone facets, visiting the whole
// cap. Output is canonically identical to sumDualBrute; coneIntersections
// records the work. verifyCaps re-checks every cap against the definition
// and throws CapDisconnected on a miss (a bug signal, not a data error).
MinkowskiDecomposition sumDualOptimized(const Polytope& A, const Polytope& B,
                                        bool verifyCaps = false);

}  // namespace polysum
