#pragma once

#include "polysum/polytope.hpp"

namespace polysum {

// Reference Minkowski sum straight from the definition: the convex hull of
// all pairwise vertex sums. Accepts raw point lists so it also handles
// degenerate summands (segments, single points) that Polytope rejects; the
// only failure is a degenerate hull. Exponential and desk-scale by design.
Polytope oracleSum(std::size_t dim, const std::vector<Vector>& ptsA,
                   const std::vector<Vector>& ptsB);

Polytope oracleSum(const Polytope& A, const Polytope& B);

bool oracleMembership(const Polytope& sum, const Vector& x);
bool oracleMembership(const Polytope& A, const Polytope& B, const Vector& x);

}  // namespace polysum
