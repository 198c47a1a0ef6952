#include <doctest.h>

#include <random>

#include "polysum/shapes.hpp"
#include "support.hpp"

using namespace polysum;
using testsupport::Q;
using testsupport::bruteAdjacent;
using testsupport::randomPolytope;
using testsupport::vec;

namespace {

HalfSpace hs(std::initializer_list<long> normal, long offset) {
    return {testsupport::vec(normal), Rational(offset)};
}

}  // namespace

TEST_CASE("unit square from half-spaces") {
    std::vector<HalfSpace> sq{hs({-1, 0}, 0), hs({0, -1}, 0), hs({1, 0}, 1),
                              hs({0, 1}, 1)};
    Polytope p = Polytope::fromHalfSpaces(2, sq);
    std::vector<Vector> want{vec({0, 0}), vec({0, 1}), vec({1, 0}), vec({1, 1})};
    CHECK(p.vertices() == want);
    CHECK(p.facets().size() == 4);
    CHECK(p == shapes::cube(2));
}

TEST_CASE("cube and simplex counting") {
    for (std::size_t n = 2; n <= 5; ++n) {
        Polytope c = shapes::cube(n);
        CHECK(c.vertices().size() == (std::size_t(1) << n));
        CHECK(c.facets().size() == 2 * n);
        Polytope s = shapes::simplex(n);
        CHECK(s.vertices().size() == n + 1);
        CHECK(s.facets().size() == n + 1);
    }
}

TEST_CASE("construction failures") {
    CHECK_THROWS_AS(Polytope::fromHalfSpaces(2, {hs({-1, 0}, 0), hs({0, -1}, 0)}),
                    Unbounded);
    // x <= 0 and x >= 1
    CHECK_THROWS_AS(
        Polytope::fromHalfSpaces(2, {hs({1, 0}, 0), hs({-1, 0}, -1), hs({0, 1}, 1),
                                     hs({0, -1}, 0)}),
        EmptyPolytope);
    // slab x = 0
    CHECK_THROWS_AS(
        Polytope::fromHalfSpaces(2, {hs({1, 0}, 0), hs({-1, 0}, 0), hs({0, 1}, 1),
                                     hs({0, -1}, 0)}),
        NotFullDimensional);
    CHECK_THROWS_AS(
        Polytope::fromVertices(2, {vec({0, 0}), vec({1, 1}), vec({2, 2})}),
        NotFullDimensional);
    CHECK_THROWS_AS(Polytope::fromHalfSpaces(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(HalfSpace(Vector(2), Rational(1)), std::invalid_argument);
}

TEST_CASE("hull drops interior points and duplicates") {
    Polytope p = Polytope::fromVertices(
        2, {vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, 1}),
            Vector({Q(1, 2), Q(1, 2)}), vec({1, 1})});
    CHECK(p == shapes::cube(2));
    CHECK(p.vertices().size() == 4);
}

TEST_CASE("simplex in R^3 has 4 vertices and 4 facets") {
    Polytope s = Polytope::fromVertices(
        3, {vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
    CHECK(s.vertices().size() == 4);
    CHECK(s.facets().size() == 4);
}

TEST_CASE("vertex neighbours") {
    Polytope sq = shapes::cube(2);  // vertices sorted: (0,0),(0,1),(1,0),(1,1)
    CHECK(sq.neighbours(0) == std::vector<std::size_t>{1, 2});
    CHECK(sq.neighbours(3) == std::vector<std::size_t>{1, 2});

    Polytope cube3 = shapes::cube(3);
    for (std::size_t v = 0; v < cube3.vertices().size(); ++v) {
        CHECK(cube3.neighbours(v).size() == 3);
        for (std::size_t w = 0; w < cube3.vertices().size(); ++w)
            CHECK(bruteAdjacent(cube3, v, w) ==
                  (std::find(cube3.neighbours(v).begin(), cube3.neighbours(v).end(),
                             w) != cube3.neighbours(v).end()));
    }

    Polytope tri =
        Polytope::fromVertices(2, {vec({0, 0}), vec({2, 0}), vec({0, 3})});
    for (std::size_t v = 0; v < 3; ++v) CHECK(tri.neighbours(v).size() == 2);

    CHECK_THROWS_AS(sq.neighbours(4), IndexOutOfRange);
}

TEST_CASE("interior point") {
    CHECK(shapes::cube(2).interiorPoint() == Vector({Q(1, 2), Q(1, 2)}));
    CHECK(shapes::simplex(2).interiorPoint() == Vector({Q(1, 3), Q(1, 3)}));
}

TEST_CASE("validation report") {
    Polytope cube3 = shapes::cube(3);
    CHECK(cube3.validate().ok());

    SUBCASE("vertex pushed outside a facet") {
        auto verts = cube3.vertices();
        verts.back() = vec({2, 1, 1});  // (1,1,1) moved outward
        auto rep = validateDoubleDescription(3, cube3.facets(), verts);
        CHECK(!rep.ok());
        bool mentioned = false;
        for (const auto& v : rep.violations)
            if (v.find("outside facet") != std::string::npos) mentioned = true;
        CHECK(mentioned);
    }

    SUBCASE("duplicated half-space") {
        auto facets = cube3.facets();
        facets.push_back(facets.front());
        auto rep = validateDoubleDescription(3, facets, cube3.vertices());
        CHECK(!rep.ok());
        bool mentioned = false;
        for (const auto& v : rep.violations)
            if (v.find("duplicate half-space") != std::string::npos) mentioned = true;
        CHECK(mentioned);
    }

    SUBCASE("genuinely redundant facet") {
        auto facets = cube3.facets();
        facets.push_back(HalfSpace(vec({1, 1, 1}), Rational(3)));  // touches (1,1,1)
        auto rep = validateDoubleDescription(3, facets, cube3.vertices());
        CHECK(!rep.ok());
        bool mentioned = false;
        for (const auto& v : rep.violations)
            if (v.find("redundant facet") != std::string::npos) mentioned = true;
        CHECK(mentioned);
    }
}

TEST_CASE("double description invariants on random instances") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<std::size_t> nPts(6, 14);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 2 + t % 3;
        Polytope p = randomPolytope(rng, n, nPts(rng));
        CAPTURE(t);

        CHECK(p.validate().ok());

        // every point from interiorPoint is strictly inside
        Vector ip = p.interiorPoint();
        for (const auto& f : p.facets()) CHECK(f.strictlyContains(ip));

        // vertex active-normal rank = n
        for (std::size_t v = 0; v < p.vertices().size(); ++v) {
            Matrix active;
            for (std::size_t k : p.incidence()[v])
                active.appendRow(p.facets()[k].normal());
            CHECK(rank(active) == n);
        }

        // round-trip between representations
        CHECK(Polytope::fromHalfSpaces(n, p.facets()) == p);
        CHECK(Polytope::fromVertices(n, p.vertices()) == p);

        // canonicalization of a redundant H-description
        auto noisy = p.facets();
        noisy.push_back(noisy.front());
        Vector far(n);
        for (std::size_t i = 0; i < n; ++i) far[i] = Rational(1);
        noisy.emplace_back(far, Rational(1000));  // slack half-space
        CHECK(Polytope::fromHalfSpaces(n, noisy) == p);

        // adjacency agrees with the face-lattice oracle
        if (t < 10) {
            for (std::size_t v = 0; v < p.vertices().size(); ++v)
                for (std::size_t w = v + 1; w < p.vertices().size(); ++w) {
                    bool adj = std::find(p.neighbours(v).begin(),
                                         p.neighbours(v).end(),
                                         w) != p.neighbours(v).end();
                    CHECK(adj == bruteAdjacent(p, v, w));
                }
        }
    }
}

TEST_CASE("non-simple vertex: square pyramid apex") {
    Polytope pyr = Polytope::fromVertices(
        3, {vec({0, 0, 0}), vec({2, 0, 0}), vec({0, 2, 0}), vec({2, 2, 0}),
            vec({1, 1, 1})});
    CHECK(pyr.vertices().size() == 5);
    CHECK(pyr.facets().size() == 5);
    auto apex = pyr.findVertex(vec({1, 1, 1}));
    REQUIRE(apex.has_value());
    CHECK(pyr.incidence()[*apex].size() == 4);  // non-simple: 4 > n facets
    CHECK(pyr.neighbours(*apex).size() == 4);
    CHECK(pyr.validate().ok());
}
