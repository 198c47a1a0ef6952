#pragma once

#include <string>

#include "polysum/linalg.hpp"

namespace polysum {

// Closed half-space {x : <normal, x> <= offset} with an outer normal.
// Stored canonically: (normal, offset) jointly scaled by a positive rational
// to coprime integers, orientation preserved, so equality of half-spaces is
// syntactic equality.
class HalfSpace {
public:
    HalfSpace(Vector normal, Rational offset);  // throws on zero normal

    const Vector& normal() const { return normal_; }
    const Rational& offset() const { return offset_; }
    std::size_t dim() const { return normal_.dim(); }

    bool contains(const Vector& x) const { return dot(normal_, x) <= offset_; }
    bool strictlyContains(const Vector& x) const { return dot(normal_, x) < offset_; }
    bool isTightAt(const Vector& x) const { return dot(normal_, x) == offset_; }

    // Same half-space through a different point: keeps the normal, re-derives
    // the offset so the boundary passes through p.
    HalfSpace through(const Vector& p) const { return {normal_, dot(normal_, p)}; }

    bool operator==(const HalfSpace& o) const {
        return normal_ == o.normal_ && offset_ == o.offset_;
    }

private:
    Vector normal_;
    Rational offset_;
};

bool operator<(const HalfSpace& a, const HalfSpace& b);

std::string str(const HalfSpace& h);

}  // namespace polysum
