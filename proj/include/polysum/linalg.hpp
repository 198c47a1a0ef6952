#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "polysum/errors.hpp"
#include "polysum/rational.hpp"

namespace polysum {

// Dense rational vector with a fixed dimension. Immutable in spirit: every
// operation returns a fresh value; binary operations check dimensions.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n) : c_(n, Rational(0)) {}
    Vector(std::initializer_list<Rational> xs) : c_(xs) {}
    explicit Vector(std::vector<Rational> xs) : c_(std::move(xs)) {}

    std::size_t dim() const { return c_.size(); }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Rational>& coords() const { return c_; }

    bool isZero() const;

    Vector operator+(const Vector& o) const;
    Vector operator-(const Vector& o) const;
    Vector operator-() const;
    Vector operator*(const Rational& s) const;
    bool operator==(const Vector& o) const { return c_ == o.c_; }
    bool operator!=(const Vector& o) const { return c_ != o.c_; }

private:
    std::vector<Rational> c_;
};

Rational dot(const Vector& u, const Vector& v);

// Dimension first, then coordinatewise; total order used for all canonical
// sorting in the library.
int compareLex(const Vector& a, const Vector& b);
inline bool operator<(const Vector& a, const Vector& b) { return compareLex(a, b) < 0; }

// Scales v by the unique positive rational making all coordinates coprime
// integers; direction preserved, zero stays zero.
Vector canonicalDirection(const Vector& v);

std::string str(const Vector& v);

class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::vector<Vector> rows);

    std::size_t rowCount() const { return rows_.size(); }
    std::size_t colCount() const { return rows_.empty() ? 0 : rows_[0].dim(); }
    const Vector& row(std::size_t i) const { return rows_[i]; }
    const std::vector<Vector>& rows() const { return rows_; }
    void appendRow(const Vector& r);

private:
    std::vector<Vector> rows_;
};

// Exact rank over the rationals via fraction-free (Bareiss) elimination on
// the denominator-cleared integer matrix. 0 for the empty matrix.
std::size_t rank(const Matrix& m);

enum class SolveStatus { Ok, NoSolution, Underdetermined };

struct SolveResult {
    SolveStatus status;
    Vector solution;  // valid iff status == Ok
    bool ok() const { return status == SolveStatus::Ok; }
};

// Solves m x = rhs exactly. NoSolution when inconsistent, Underdetermined
// when consistent but rank-deficient in the unknowns.
SolveResult solveLinear(const Matrix& m, const Vector& rhs);

// Deterministic basis of {x : m x = 0}, each vector in canonical direction
// form, sorted.
std::vector<Vector> nullspaceBasis(const Matrix& m);

// rank of {p_i - p_0}; 0 for zero or one point.
std::size_t affineRank(const std::vector<Vector>& pts);

}  // namespace polysum
