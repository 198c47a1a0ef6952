#pragma once

#include <string>
#include <vector>

#include "polysum/polytope.hpp"

namespace polysum {

enum class Representation { H, V };

// One cdd-style polyhedron file (.ine / .ext dialect). An H-row
// (b, a_1..a_n) encodes b + <a, x> >= 0, i.e. the half-space with outer
// normal -a and offset b; a V-row (1, v_1..v_n) encodes the vertex v.
// Rays (leading 0) are rejected: this library handles polytopes only.
struct PolyhedronFile {
    Representation rep;
    std::size_t dim = 0;                      // ambient dimension n
    std::vector<std::vector<Rational>> rows;  // m rows of n+1 exact entries
    std::string numberType;                   // integer | rational | real
};

// Comments ('*' lines) are tolerated before the representation keyword and
// after "end"; the section between "begin" and "end" is strict. Decimal
// literals are converted to exact rationals. Throws ParseError (with line
// and column) and RayNotSupported.
PolyhedronFile parsePolyhedronFile(const std::string& text);

std::vector<HalfSpace> halfSpacesFromFile(const PolyhedronFile& f);
std::vector<Vector> pointsFromFile(const PolyhedronFile& f);
Polytope polytopeFromFile(const PolyhedronFile& f);

// Canonical text form: sorted rows, exact rational literals; parses back to
// an identical polytope.
std::string writePolyhedronFile(const Polytope& p, Representation rep);

}  // namespace polysum
