#include "polysum/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace polysum {

bool Vector::isZero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

namespace {

void requireSameDim(const Vector& a, const Vector& b, const char* what) {
    if (a.dim() != b.dim())
        throw DimensionMismatch(std::string(what) + ": " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
}

}  // namespace

Vector Vector::operator+(const Vector& o) const {
    requireSameDim(*this, o, "vector addition");
    Vector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = c_[i] + o[i];
    return r;
}

Vector Vector::operator-(const Vector& o) const {
    requireSameDim(*this, o, "vector subtraction");
    Vector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = c_[i] - o[i];
    return r;
}

Vector Vector::operator-() const {
    Vector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = -c_[i];
    return r;
}

Vector Vector::operator*(const Rational& s) const {
    Vector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = c_[i] * s;
    return r;
}

Rational dot(const Vector& u, const Vector& v) {
    requireSameDim(u, v, "dot product");
    Rational acc(0);
    for (std::size_t i = 0; i < u.dim(); ++i) acc += u[i] * v[i];
    return acc;
}

int compareLex(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

Vector canonicalDirection(const Vector& v) {
    Integer l = 1;
    for (std::size_t i = 0; i < v.dim(); ++i) l = lcm(l, v[i].get_den());
    std::vector<Integer> ints(v.dim());
    Integer g = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        ints[i] = v[i].get_num() * (l / v[i].get_den());
        g = gcd(g, ints[i]);
    }
    if (g == 0) return Vector(v.dim());  // zero vector
    Vector r(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) r[i] = Rational(ints[i] / g);
    return r;
}

std::string str(const Vector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) os << ", ";
        os << str(v[i]);
    }
    os << ")";
    return os.str();
}

Matrix::Matrix(std::vector<Vector> rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.dim() != rows_[0].dim())
            throw DimensionMismatch("matrix rows of unequal dimension");
}

void Matrix::appendRow(const Vector& r) {
    if (!rows_.empty() && r.dim() != rows_[0].dim())
        throw DimensionMismatch("matrix rows of unequal dimension");
    rows_.push_back(r);
}

namespace {

// Rows as denominator-cleared integers; row scaling preserves rank and the
// solution set (rhs, when present, is scaled with its row).
std::vector<std::vector<Integer>> clearedRows(const Matrix& m, const Vector* rhs) {
    std::vector<std::vector<Integer>> out;
    out.reserve(m.rowCount());
    const std::size_t n = m.colCount();
    for (std::size_t i = 0; i < m.rowCount(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j) l = lcm(l, m.row(i)[j].get_den());
        if (rhs) l = lcm(l, (*rhs)[i].get_den());
        std::vector<Integer> row;
        row.reserve(n + (rhs ? 1 : 0));
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& q = m.row(i)[j];
            row.push_back(q.get_num() * (l / q.get_den()));
        }
        if (rhs) {
            const Rational& q = (*rhs)[i];
            row.push_back(q.get_num() * (l / q.get_den()));
        }
        out.push_back(std::move(row));
    }
    return out;
}

// Fraction-free forward elimination (Bareiss). Pivots only within the first
// coeffCols columns; any extra columns ride along (augmented rhs). Returns
// the pivot (row, col) list; M ends in echelon form with exact integer
// entries throughout.
std::vector<std::pair<std::size_t, std::size_t>> bareissEchelon(
    std::vector<std::vector<Integer>>& M, std::size_t coeffCols) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    if (M.empty()) return pivots;
    const std::size_t rows = M.size();
    const std::size_t cols = M[0].size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < coeffCols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && M[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(M[p], M[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = M[r][c] * M[i][j] - M[i][c] * M[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                M[i][j] = t;
            }
            M[i][c] = 0;
        }
        prev = M[r][c];
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    if (m.rowCount() == 0 || m.colCount() == 0) return 0;
    auto M = clearedRows(m, nullptr);
    return bareissEchelon(M, m.colCount()).size();
}

SolveResult solveLinear(const Matrix& m, const Vector& rhs) {
    if (m.rowCount() != rhs.dim())
        throw DimensionMismatch("solveLinear: rows vs rhs length");
    const std::size_t n = m.colCount();
    if (m.rowCount() == 0)
        return {n == 0 ? SolveStatus::Ok : SolveStatus::Underdetermined, Vector(n)};

    auto M = clearedRows(m, &rhs);
    auto pivots = bareissEchelon(M, n);

    // Non-pivot rows are zero in all coefficient columns; a nonzero rhs there
    // is a contradiction.
    for (std::size_t i = pivots.size(); i < M.size(); ++i)
        if (M[i][n] != 0) return {SolveStatus::NoSolution, Vector()};
    if (pivots.size() < n) return {SolveStatus::Underdetermined, Vector()};

    // Full column rank: pivot i sits at (i, i).
    Vector x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rational acc(M[k][n]);
        for (std::size_t j = k + 1; j < n; ++j) acc -= Rational(M[k][j]) * x[j];
        x[k] = acc / Rational(M[k][k]);
    }
    return {SolveStatus::Ok, std::move(x)};
}

std::vector<Vector> nullspaceBasis(const Matrix& m) {
    const std::size_t n = m.colCount();
    if (m.rowCount() == 0 || n == 0) return {};

    // Rational reduced row echelon form.
    std::vector<std::vector<Rational>> R;
    R.reserve(m.rowCount());
    for (const auto& row : m.rows()) R.push_back(row.coords());

    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < R.size(); ++c) {
        std::size_t p = r;
        while (p < R.size() && R[p][c] == 0) ++p;
        if (p == R.size()) continue;
        std::swap(R[p], R[r]);
        Rational inv = Rational(1) / R[r][c];
        for (std::size_t j = c; j < n; ++j) R[r][j] *= inv;
        for (std::size_t i = 0; i < R.size(); ++i) {
            if (i == r || R[i][c] == 0) continue;
            Rational f = R[i][c];
            for (std::size_t j = c; j < n; ++j) R[i][j] -= f * R[r][j];
        }
        pivots.emplace_back(r, c);
        ++r;
    }

    std::vector<bool> isPivotCol(n, false);
    for (auto [pr, pc] : pivots) isPivotCol[pc] = true;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (isPivotCol[f]) continue;
        Vector x(n);
        x[f] = Rational(1);
        for (auto [pr, pc] : pivots) x[pc] = -R[pr][f];
        basis.push_back(canonicalDirection(x));
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

std::size_t affineRank(const std::vector<Vector>& pts) {
    if (pts.size() <= 1) return 0;
    Matrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.appendRow(pts[i] - pts[0]);
    return rank(diffs);
}

}  // namespace polysum
