#pragma once

// Shared helpers for the test suites: literal shorthands, deterministic
// random instances, and small face-lattice oracles kept independent of the
// code paths they check.

#include <random>
#include <vector>

#include "polysum/oracle.hpp"
#include "polysum/polytope.hpp"

namespace polysum::testsupport {

inline Rational Q(long n, long d = 1) { return makeRational(Integer(n), Integer(d)); }

inline Vector vec(std::initializer_list<long> xs) {
    std::vector<Rational> c;
    c.reserve(xs.size());
    for (long x : xs) c.emplace_back(x);
    return Vector(std::move(c));
}

inline Vector randomPoint(std::mt19937_64& rng, std::size_t n, long bound) {
    std::uniform_int_distribution<long> draw(-bound, bound);
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rational(draw(rng));
    return v;
}

// Hull of `points` random integer points, redrawn until full-dimensional.
inline Polytope randomPolytope(std::mt19937_64& rng, std::size_t n,
                               std::size_t points, long bound = 7) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Vector> pts;
        pts.reserve(points);
        for (std::size_t i = 0; i < points; ++i)
            pts.push_back(randomPoint(rng, n, bound));
        try {
            return Polytope::fromVertices(n, pts);
        } catch (const NotFullDimensional&) {
            continue;
        }
    }
    throw std::runtime_error("could not draw a full-dimensional polytope");
}

// Face-lattice adjacency oracle: v and w are adjacent iff the smallest face
// containing both consists of exactly these two vertices.
inline bool bruteAdjacent(const Polytope& p, std::size_t i, std::size_t j) {
    if (i == j) return false;
    std::vector<std::size_t> common;
    for (std::size_t k : p.incidence()[i])
        for (std::size_t l : p.incidence()[j])
            if (k == l) common.push_back(k);
    std::vector<std::size_t> face;
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
        bool onAll = true;
        for (std::size_t k : common)
            if (!p.facets()[k].isTightAt(p.vertices()[v])) {
                onAll = false;
                break;
            }
        if (onAll) face.push_back(v);
    }
    return face.size() == 2 && face[0] == std::min(i, j) && face[1] == std::max(i, j);
}

}  // namespace polysum::testsupport
