#include <doctest.h>

#include <random>

#include "polysum/linalg.hpp"
#include "support.hpp"

using namespace polysum;
using testsupport::Q;
using testsupport::vec;

TEST_CASE("rational parsing and normal form") {
    CHECK(parseRational("42") == Q(42));
    CHECK(parseRational("-7") == Q(-7));
    CHECK(parseRational("3/4") == Q(3, 4));
    CHECK(parseRational("-9/2") == Q(-9, 2));
    CHECK(parseRational("0.25") == Q(1, 4));
    CHECK(parseRational("-.125") == Q(-1, 8));
    CHECK(parseRational("2.") == Q(2));

    CHECK(!tryParseRational("1/0"));
    CHECK(!tryParseRational("abc"));
    CHECK(!tryParseRational("1.2.3"));
    CHECK(!tryParseRational("--3"));
    CHECK(!tryParseRational(""));

    CHECK(makeRational(Integer(2), Integer(4)) == Q(1, 2));
    Rational r = makeRational(Integer(1), Integer(-2));
    CHECK(r == Q(-1, 2));
    CHECK(r.get_den() == 2);  // denominator kept positive

    CHECK(str(Q(-3)) == "-3");
    CHECK(str(Q(5, 10)) == "1/2");
}

TEST_CASE("rational arithmetic is exact") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int t = 0; t < 200; ++t) {
        Rational a = Q(d(rng), 1 + std::abs(d(rng)));
        Rational b = Q(d(rng), 1 + std::abs(d(rng)));
        Rational c = Q(d(rng), 1 + std::abs(d(rng)));
        CHECK((a + b) + c == a + (b + c));
        if (a != 0) CHECK(a * (Rational(1) / a) == 1);
    }
}

TEST_CASE("dot product") {
    CHECK(dot(vec({1, 2}), vec({3, 4})) == Q(11));
    CHECK(dot(vec({5, -3, 2}), Vector(3)) == Q(0));
    CHECK(dot(Vector({Q(1, 2), Q(1, 3)}), vec({2, 3})) == Q(2));
    CHECK_THROWS_AS(dot(vec({1, 2}), vec({1, 2, 3})), DimensionMismatch);
    CHECK_THROWS_AS(vec({1, 2}) + vec({1}), DimensionMismatch);
}

TEST_CASE("canonical direction") {
    CHECK(canonicalDirection(Vector({Q(1, 2), Q(1, 3)})) == vec({3, 2}));
    CHECK(canonicalDirection(vec({2, 4})) == vec({1, 2}));
    CHECK(canonicalDirection(vec({-2, -4})) == vec({-1, -2}));  // no sign flip
    CHECK(canonicalDirection(Vector(3)) == Vector(3));
}

TEST_CASE("rank examples") {
    Matrix id3({vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
    CHECK(rank(id3) == 3);
    CHECK(rank(Matrix({vec({1, 0}), vec({2, 0})})) == 1);
    CHECK(rank(Matrix({vec({1, 1}), vec({1, -1}), vec({1, 0})})) == 2);
    CHECK(rank(Matrix()) == 0);
}

TEST_CASE("rank invariances and rank-nullity") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-5, 5);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int t = 0; t < 100; ++t) {
        std::size_t rows = dim(rng), cols = dim(rng);
        std::vector<Vector> m;
        for (std::size_t i = 0; i < rows; ++i) {
            Vector r(cols);
            for (std::size_t j = 0; j < cols; ++j) r[j] = Rational(d(rng));
            m.push_back(r);
        }
        Matrix mat(m);
        std::size_t rk = rank(mat);

        // permutation invariance
        std::shuffle(m.begin(), m.end(), rng);
        CHECK(rank(Matrix(m)) == rk);

        // scaling by nonzero rationals
        auto scaled = m;
        for (auto& r : scaled) {
            long s = d(rng);
            if (s == 0) s = 3;
            r = r * Q(s, 1 + std::abs(d(rng)));
        }
        CHECK(rank(Matrix(scaled)) == rk);

        // rank-nullity against the independent rref nullspace path
        CHECK(rk + nullspaceBasis(mat).size() == cols);
        for (const auto& null : nullspaceBasis(mat))
            for (const auto& row : m) CHECK(dot(row, null) == 0);
    }
}

TEST_CASE("solveLinear examples") {
    Matrix id2({vec({1, 0}), vec({0, 1})});
    auto r = solveLinear(id2, vec({3, 5}));
    REQUIRE(r.ok());
    CHECK(r.solution == vec({3, 5}));

    r = solveLinear(Matrix({vec({1, 1}), vec({1, -1})}), vec({2, 0}));
    REQUIRE(r.ok());
    CHECK(r.solution == vec({1, 1}));

    r = solveLinear(Matrix({vec({1, 0}), vec({1, 0})}), vec({1, 2}));
    CHECK(r.status == SolveStatus::NoSolution);

    r = solveLinear(Matrix({vec({1, 1}), vec({2, 2})}), vec({3, 6}));
    CHECK(r.status == SolveStatus::Underdetermined);

    CHECK_THROWS_AS(solveLinear(id2, vec({1, 2, 3})), DimensionMismatch);
}

TEST_CASE("solveLinear resubstitution on random systems") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> d(-7, 7);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + t % 5;
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < n; ++i) {
            Vector r(n);
            for (std::size_t j = 0; j < n; ++j) r[j] = Rational(d(rng));
            rows.push_back(r);
        }
        Matrix m(rows);
        Vector rhs(n);
        for (std::size_t j = 0; j < n; ++j) rhs[j] = Q(d(rng), 1 + std::abs(d(rng)));
        auto res = solveLinear(m, rhs);
        if (!res.ok()) continue;
        for (std::size_t i = 0; i < n; ++i)
            CHECK(dot(rows[i], res.solution) == rhs[i]);
    }
}

TEST_CASE("affine rank") {
    CHECK(affineRank({vec({0, 0}), vec({1, 1}), vec({2, 2})}) == 1);
    CHECK(affineRank({vec({0, 0}), vec({1, 0}), vec({0, 1})}) == 2);
    CHECK(affineRank({vec({5, 5})}) == 0);
}
