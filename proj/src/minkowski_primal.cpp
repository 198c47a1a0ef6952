#include "polysum/minkowski_primal.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "polysum/minkowski_internal.hpp"

namespace polysum {

std::optional<std::size_t> uniqueArgmax(const Polytope& p, const Vector& direction) {
    const auto& verts = p.vertices();
    std::size_t best = 0;
    Rational bestVal = dot(direction, verts[0]);
    bool unique = true;
    for (std::size_t i = 1; i < verts.size(); ++i) {
        Rational val = dot(direction, verts[i]);
        int c = cmp(val, bestVal);
        if (c > 0) {
            best = i;
            bestVal = val;
            unique = true;
        } else if (c == 0) {
            unique = false;
        }
    }
    return unique ? std::optional<std::size_t>(best) : std::nullopt;
}

std::pair<std::size_t, std::size_t> seedMinkowskiVertex(const Polytope& A,
                                                        const Polytope& B,
                                                        std::uint64_t seed) {
    if (A.dim() != B.dim())
        throw DimensionMismatch("summands live in different dimensions");
    std::mt19937_64 rng(seed);
    for (unsigned attempt = 0;; ++attempt) {
        const std::int64_t bound = std::int64_t(8) << std::min(attempt, 24u);
        std::uniform_int_distribution<std::int64_t> draw(-bound, bound);
        Vector u(A.dim());
        for (std::size_t i = 0; i < A.dim(); ++i)
            u[i] = Rational(static_cast<long>(draw(rng)));
        if (u.isZero()) continue;
        auto a = uniqueArgmax(A, u);
        auto b = uniqueArgmax(B, u);
        if (a && b) return {*a, *b};  // ties rerolled, never returned
    }
}

Cone minkowskiVertexCone(const Polytope& A, const Polytope& B, std::size_t a,
                         std::size_t b) {
    if (A.dim() != B.dim())
        throw DimensionMismatch("summands live in different dimensions");
    if (a >= A.vertices().size() || b >= B.vertices().size())
        throw IndexOutOfRange("vertex pair (" + std::to_string(a) + ", " +
                              std::to_string(b) + ")");
    Vector c = A.vertices()[a] + B.vertices()[b];
    Cone hull = convexHullOfCones(primalCone(A, a).translatedTo(c),
                                  primalCone(B, b).translatedTo(c), c);
    if (!hull.pointed() || !hull.fullDimensional()) {
        std::ostringstream os;
        os << "pair (" << a << ", " << b << ") is not a Minkowski vertex: hull cone "
           << (hull.pointed() ? "is not full-dimensional" : "contains a line");
        throw NotMinkowskiVertex(os.str());
    }
    return hull;
}

namespace {

std::optional<std::size_t> parallelNeighbour(const Polytope& p, std::size_t v,
                                             const Vector& dir) {
    for (std::size_t w : p.neighbours(v))
        if (canonicalDirection(p.vertices()[w] - p.vertices()[v]) == dir) return w;
    return std::nullopt;
}

}  // namespace

std::pair<std::size_t, std::size_t> neighbourCandidates(const Polytope& A,
                                                        const Polytope& B,
                                                        std::size_t a, std::size_t b,
                                                        const Vector& edgeDir) {
    Vector dir = canonicalDirection(edgeDir);
    if (dir.isZero()) throw std::invalid_argument("zero edge direction");
    auto a2 = parallelNeighbour(A, a, dir);
    auto b2 = parallelNeighbour(B, b, dir);
    if (!a2 && !b2) {
        std::ostringstream os;
        os << "edge direction " << str(dir) << " at pair (" << a << ", " << b
           << ") is parallel to no summand edge";
        throw NoParallelEdge(os.str());
    }
    return {a2.value_or(a), b2.value_or(b)};
}

MinkowskiDecomposition sumPrimal(const Polytope& A, const Polytope& B,
                                 std::uint64_t seed) {
    if (A.dim() != B.dim())
        throw DimensionMismatch("summands live in different dimensions");
    const std::size_t n = A.dim();

    auto [a0, b0] = seedMinkowskiVertex(A, B, seed);
    Vector c0 = A.vertices()[a0] + B.vertices()[b0];

    std::map<Vector, std::pair<std::size_t, std::size_t>> processed;
    processed.emplace(c0, std::make_pair(a0, b0));
    std::map<Vector, std::pair<std::size_t, std::size_t>> frontier = processed;

    std::vector<HalfSpace> facets;
    std::vector<detail::WitnessedVertex> found;

    while (!frontier.empty()) {
        std::map<Vector, std::pair<std::size_t, std::size_t>> next;
        for (const auto& [c, pair] : frontier) {
            auto [a, b] = pair;
            Cone hull = [&] {
                try {
                    return minkowskiVertexCone(A, B, a, b);
                } catch (const NotMinkowskiVertex& e) {
                    throw InternalInconsistency(
                        std::string("primal traversal reached a non-vertex: ") +
                        e.what());
                }
            }();
            facets.insert(facets.end(), hull.supports().begin(),
                          hull.supports().end());
            found.push_back({c, {a, b}});

            for (const auto& r : hull.rays()) {
                auto [a2, b2] = neighbourCandidates(A, B, a, b, r);
                Vector c2 = A.vertices()[a2] + B.vertices()[b2];
                auto [it, fresh] = processed.emplace(c2, std::make_pair(a2, b2));
                if (fresh) {
                    next.emplace(c2, std::make_pair(a2, b2));
                } else if (it->second != std::make_pair(a2, b2)) {
                    throw InternalInconsistency(
                        "two witness decompositions for sum vertex " + str(c2));
                }
            }
        }
        frontier = std::move(next);
    }
    return detail::assembleDecomposition(n, std::move(facets), std::move(found),
                                         "primal", 0, true);
}

}  // namespace polysum
