#include "polysum/shapes.hpp"

namespace polysum::shapes {

Polytope cube(std::size_t n, const Rational& lo, const Rational& hi) {
    std::vector<HalfSpace> hs;
    hs.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector e(n);
        e[i] = Rational(1);
        hs.emplace_back(e, hi);
        hs.emplace_back(-e, -lo);
    }
    return Polytope::fromHalfSpaces(n, hs);
}

Polytope simplex(std::size_t n) {
    std::vector<Vector> pts;
    pts.reserve(n + 1);
    pts.emplace_back(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector e(n);
        e[i] = Rational(1);
        pts.push_back(std::move(e));
    }
    return Polytope::fromVertices(n, pts);
}

Polytope crossPolytope(std::size_t n) {
    std::vector<Vector> pts;
    pts.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector e(n);
        e[i] = Rational(1);
        pts.push_back(e);
        pts.push_back(-e);
    }
    return Polytope::fromVertices(n, pts);
}

}  // namespace polysum::shapes
