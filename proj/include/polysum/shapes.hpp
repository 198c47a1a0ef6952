#pragma once

#include "polysum/polytope.hpp"

namespace polysum::shapes {

// Axis-aligned cube [lo, hi]^n from its 2n half-spaces.
Polytope cube(std::size_t n, const Rational& lo = Rational(0),
              const Rational& hi = Rational(1));

// conv{0, e_1, ..., e_n}.
Polytope simplex(std::size_t n);

// conv{+-e_i}: the n-dimensional cross-polytope (diamond for n = 2).
Polytope crossPolytope(std::size_t n);

}  // namespace polysum::shapes
