#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polysum/minkowski_dual.hpp"

namespace polysum::detail {

struct WitnessedVertex {
    Vector point;
    std::pair<std::size_t, std::size_t> witness;
};

// Shared tail of all summation algorithms: asserts witness uniqueness,
// deduplicates facets, assembles and cross-checks the sum polytope, and
// aligns witnesses with the canonical vertex order. A double-description
// mismatch is reported as TraversalIncomplete for the primal traversal and
// as InternalInconsistency otherwise.
MinkowskiDecomposition assembleDecomposition(
    std::size_t dim, std::vector<HalfSpace> facets,
    std::vector<WitnessedVertex> vertexWitness, std::string method,
    std::uint64_t coneIntersections, bool primalTraversal);

}  // namespace polysum::detail
