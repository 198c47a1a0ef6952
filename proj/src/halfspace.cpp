#include "polysum/halfspace.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace polysum {

HalfSpace::HalfSpace(Vector normal, Rational offset)
    : normal_(std::move(normal)), offset_(std::move(offset)) {
    if (normal_.isZero())
        throw std::invalid_argument("half-space with zero normal");
    // Joint canonicalization of (normal, offset).
    std::vector<Rational> all = normal_.coords();
    all.push_back(offset_);
    Vector scaled = canonicalDirection(Vector(std::move(all)));
    for (std::size_t i = 0; i < normal_.dim(); ++i) normal_[i] = scaled[i];
    offset_ = scaled[normal_.dim()];
}

bool operator<(const HalfSpace& a, const HalfSpace& b) {
    int c = compareLex(a.normal(), b.normal());
    if (c != 0) return c < 0;
    return a.offset() < b.offset();
}

std::string str(const HalfSpace& h) {
    std::ostringstream os;
    os << "<" << str(h.normal()) << ", x> <= " << str(h.offset());
    return os.str();
}

}  // namespace polysum
