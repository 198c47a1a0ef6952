#include "polysum/minkowski_dual.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "polysum/minkowski_internal.hpp"

namespace polysum {

namespace detail {

MinkowskiDecomposition assembleDecomposition(
    std::size_t dim, std::vector<HalfSpace> facets,
    std::vector<WitnessedVertex> vertexWitness, std::string method,
    std::uint64_t coneIntersections, bool primalTraversal) {
    std::sort(vertexWitness.begin(), vertexWitness.end(),
              [](const WitnessedVertex& x, const WitnessedVertex& y) {
                  return x.point < y.point;
              });
    for (std::size_t i = 1; i < vertexWitness.size(); ++i) {
        if (vertexWitness[i].point == vertexWitness[i - 1].point) {
            std::ostringstream os;
            os << "Minkowski vertex " << str(vertexWitness[i].point)
               << " has two witness decompositions";
            throw InternalInconsistency(os.str());
        }
    }

    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    std::vector<Vector> verts;
    verts.reserve(vertexWitness.size());
    for (const auto& w : vertexWitness) verts.push_back(w.point);

    MinkowskiDecomposition out;
    try {
        out.sum = Polytope::fromDoubleDescription(dim, facets, verts);
    } catch (const InternalInconsistency& e) {
        if (primalTraversal)
            throw TraversalIncomplete(std::string("primal traversal: ") + e.what());
        throw;
    }
    // fromDoubleDescription keeps the sorted vertex order, so witnesses align.
    out.witnesses.reserve(vertexWitness.size());
    for (const auto& w : vertexWitness) out.witnesses.push_back(w.witness);
    out.method = std::move(method);
    out.coneIntersections = coneIntersections;
    return out;
}

}  // namespace detail

std::pair<bool, Cone> isMinkowskiVertexPair(const Polytope& A, const Polytope& B,
                                            std::size_t a, std::size_t b) {
    if (A.dim() != B.dim())
        throw DimensionMismatch("summands live in different dimensions");
    Cone refined = intersectCones(dualCone(A, a), dualCone(B, b));
    return {refined.coneDim() == A.dim(), refined};
}

std::vector<HalfSpace> facetsFromRefinedCone(const Cone& refined,
                                             const Vector& sumPoint) {
    if (!refined.fullDimensional())
        throw NotFullDimensional("refined cone has dimension " +
                                 std::to_string(refined.coneDim()) + " < " +
                                 std::to_string(refined.dim()));
    if (sumPoint.dim() != refined.dim())
        throw DimensionMismatch("sum point of wrong dimension");
    std::vector<HalfSpace> out;
    out.reserve(refined.rays().size());
    for (const auto& r : refined.rays()) out.emplace_back(r, dot(r, sumPoint));
    std::sort(out.begin(), out.end());
    return out;
}

MinkowskiDecomposition sumDualBrute(const Polytope& A, const Polytope& B) {
    if (A.dim() != B.dim())
        throw DimensionMismatch("summands live in different dimensions");
    const std::size_t n = A.dim();
    NormalFan fanA = normalFan(A);
    NormalFan fanB = normalFan(B);

    std::vector<HalfSpace> facets;
    std::vector<detail::WitnessedVertex> found;
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < fanA.cones.size(); ++i) {
        for (std::size_t j = 0; j < fanB.cones.size(); ++j) {
            Cone refined = intersectCones(fanA.cones[i], fanB.cones[j]);
            ++count;
            if (refined.coneDim() != n) continue;
            Vector c = A.vertices()[i] + B.vertices()[j];
            auto fs = facetsFromRefinedCone(refined, c);
            facets.insert(facets.end(), fs.begin(), fs.end());
            found.push_back({std::move(c), {i, j}});
        }
    }
    return detail::assembleDecomposition(n, std::move(facets), std::move(found),
                                         "dual", count, false);
}

PolyhedralCap polyhedralCap(const Polytope& A, const Polytope& B,
                            std::size_t anchor) {
    if (A.dim() != B.dim())
        throw DimensionMismatch("summands live in different dimensions");
    if (anchor >= A.vertices().size())
        throw IndexOutOfRange("anchor vertex index " + std::to_string(anchor));
    Cone ca = dualCone(A, anchor);
    PolyhedralCap cap;
    cap.anchor = anchor;
    for (std::size_t j = 0; j < B.vertices().size(); ++j) {
        if (intersectCones(ca, dualCone(B, j)).coneDim() == A.dim())
            cap.members.push_back(j);
    }
    return cap;
}

bool connectedInGraph(const Polytope& p, const std::vector<std::size_t>& members) {
    if (members.empty()) return false;
    std::vector<bool> inSet(p.vertices().size(), false);
    for (std::size_t m : members) {
        if (m >= p.vertices().size())
            throw IndexOutOfRange("member vertex index " + std::to_string(m));
        inSet[m] = true;
    }
    std::vector<bool> seen(p.vertices().size(), false);
    std::vector<std::size_t> stack{members[0]};
    seen[members[0]] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        ++reached;
        for (std::size_t w : p.neighbours(v))
            if (inSet[w] && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return reached == members.size();
}

MinkowskiDecomposition sumDualOptimized(const Polytope& A, const Polytope& B,
                                        bool verifyCaps) {
    if (A.dim() != B.dim())
        throw DimensionMismatch("summands live in different dimensions");
    const std::size_t n = A.dim();
    NormalFan fanA = normalFan(A);
    NormalFan fanB = normalFan(B);

    // A facet of the refined cone lying on the boundary of C_D(b_j) is a
    // support of C_D(b_j); its normal is the edge direction of B towards the
    // neighbour whose dual cone shares that facet.
    std::vector<std::map<Vector, std::size_t>> edgeTarget(B.vertices().size());
    for (std::size_t j = 0; j < B.vertices().size(); ++j)
        for (std::size_t k : B.neighbours(j))
            edgeTarget[j].emplace(
                canonicalDirection(B.vertices()[k] - B.vertices()[j]), k);

    std::vector<HalfSpace> facets;
    std::vector<detail::WitnessedVertex> found;
    std::uint64_t count = 0;

    enum : std::uint8_t { kUntested = 0, kNotMember = 1, kMember = 2 };
    std::vector<std::uint8_t> state;

    for (std::size_t i = 0; i < fanA.cones.size(); ++i) {
        state.assign(B.vertices().size(), kUntested);

        auto tryPair = [&](std::size_t j) -> std::pair<bool, Cone> {
            Cone refined = intersectCones(fanA.cones[i], fanB.cones[j]);
            ++count;
            if (refined.coneDim() == n) return {true, std::move(refined)};
            state[j] = kNotMember;
            return {false, std::move(refined)};
        };

        auto record = [&](std::size_t j, const Cone& refined) {
            state[j] = kMember;
            Vector c = A.vertices()[i] + B.vertices()[j];
            auto fs = facetsFromRefinedCone(refined, c);
            facets.insert(facets.end(), fs.begin(), fs.end());
            found.push_back({std::move(c), {i, j}});
        };

        // Scan in canonical vertex order until the first Minkowski vertex,
        // then walk the cap through shared refined-cone facets.
        for (std::size_t j = 0; j < B.vertices().size(); ++j) {
            auto [hit, refined] = tryPair(j);
            if (!hit) continue;
            record(j, refined);
            std::vector<std::pair<std::size_t, Cone>> work;
            work.emplace_back(j, std::move(refined));
            while (!work.empty()) {
                auto [cur, cone] = std::move(work.back());
                work.pop_back();
                for (const auto& h : cone.supports()) {
                    auto it = edgeTarget[cur].find(canonicalDirection(h.normal()));
                    if (it == edgeTarget[cur].end()) continue;  // facet from A's side
                    std::size_t next = it->second;
                    if (state[next] != kUntested) continue;
                    auto [hit2, refined2] = tryPair(next);
                    if (!hit2) continue;
                    record(next, refined2);
                    work.emplace_back(next, std::move(refined2));
                }
            }
            break;
        }

        if (verifyCaps) {
            for (std::size_t j = 0; j < B.vertices().size(); ++j) {
                bool member =
                    intersectCones(fanA.cones[i], fanB.cones[j]).coneDim() == n;
                if (member != (state[j] == kMember)) {
                    std::ostringstream os;
                    os << "cap of anchor " << i << " missed member " << j
                       << "; neighbour propagation is broken";
                    throw CapDisconnected(os.str());
                }
            }
        }
    }
    return detail::assembleDecomposition(n, std::move(facets), std::move(found),
                                         "dual-opt", count, false);
}

}  // namespace polysum
