#include "polysum/oracle.hpp"

#include <algorithm>

namespace polysum {

Polytope oracleSum(std::size_t dim, const std::vector<Vector>& ptsA,
                   const std::vector<Vector>& ptsB) {
    if (ptsA.empty() || ptsB.empty())
        throw std::invalid_argument("oracle needs non-empty point lists");
    std::vector<Vector> sums;
    sums.reserve(ptsA.size() * ptsB.size());
    for (const auto& a : ptsA)
        for (const auto& b : ptsB) sums.push_back(a + b);
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return Polytope::fromVertices(dim, sums);
}

Polytope oracleSum(const Polytope& A, const Polytope& B) {
    if (A.dim() != B.dim())
        throw DimensionMismatch("summands live in different dimensions");
    return oracleSum(A.dim(), A.vertices(), B.vertices());
}

bool oracleMembership(const Polytope& sum, const Vector& x) {
    return sum.contains(x);
}

bool oracleMembership(const Polytope& A, const Polytope& B, const Vector& x) {
    return oracleSum(A, B).contains(x);
}

}  // namespace polysum
