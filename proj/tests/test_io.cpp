#include <doctest.h>

#include <random>

#include "polysum/io.hpp"
#include "polysum/shapes.hpp"
#include "support.hpp"

using namespace polysum;
using testsupport::Q;
using testsupport::randomPolytope;
using testsupport::vec;

TEST_CASE("parse an H-representation square") {
    std::string text =
        "H-representation\n"
        "begin\n"
        "4 3 integer\n"
        "0 1 0\n"
        "0 0 1\n"
        "1 -1 0\n"
        "1 0 -1\n"
        "end\n";
    PolyhedronFile f = parsePolyhedronFile(text);
    CHECK(f.rep == Representation::H);
    CHECK(f.dim == 2);
    CHECK(f.rows.size() == 4);
    CHECK(polytopeFromFile(f) == shapes::cube(2));
}

TEST_CASE("parse a V-representation square") {
    std::string text =
        "* corners of the unit square\n"
        "V-representation\n"
        "begin\n"
        "4 3 integer\n"
        "1 0 0\n"
        "1 1 0\n"
        "1 0 1\n"
        "1 1 1\n"
        "end\n"
        "* trailing options are ignored\n";
    PolyhedronFile f = parsePolyhedronFile(text);
    CHECK(f.rep == Representation::V);
    CHECK(polytopeFromFile(f) == shapes::cube(2));
}

TEST_CASE("rays are rejected") {
    std::string text =
        "V-representation\nbegin\n2 3 integer\n1 0 0\n0 1 0\nend\n";
    CHECK_THROWS_AS(parsePolyhedronFile(text), RayNotSupported);
}

TEST_CASE("parse errors carry line and column") {
    SUBCASE("bad number") {
        std::string text =
            "H-representation\nbegin\n1 3 integer\n0 x 0\nend\n";
        try {
            parsePolyhedronFile(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 4);
            CHECK(e.col == 3);
        }
    }
    SUBCASE("wrong entry count") {
        std::string text = "H-representation\nbegin\n1 3 integer\n0 1\nend\n";
        CHECK_THROWS_AS(parsePolyhedronFile(text), ParseError);
    }
    SUBCASE("missing keyword") {
        CHECK_THROWS_AS(parsePolyhedronFile("begin\n1 2 integer\n0 1\nend\n"),
                        ParseError);
    }
    SUBCASE("junk before keyword") {
        CHECK_THROWS_AS(
            parsePolyhedronFile("hello\nH-representation\nbegin\nend\n"),
            ParseError);
    }
    SUBCASE("missing end") {
        CHECK_THROWS_AS(
            parsePolyhedronFile("H-representation\nbegin\n1 3 integer\n0 1 0\n"),
            ParseError);
    }
    SUBCASE("unknown number type") {
        CHECK_THROWS_AS(
            parsePolyhedronFile("H-representation\nbegin\n1 3 float\n0 1 0\nend\n"),
            ParseError);
    }
}

TEST_CASE("decimals and fractions are parsed exactly") {
    std::string text =
        "V-representation\n"
        "begin\n"
        "3 3 real\n"
        "1 0.5 0\n"
        "1 -1/2 0\n"
        "1 0 0.25\n"
        "end\n";
    PolyhedronFile f = parsePolyhedronFile(text);
    CHECK(f.rows[0][1] == Q(1, 2));
    CHECK(f.rows[1][1] == Q(-1, 2));
    CHECK(f.rows[2][2] == Q(1, 4));
}

TEST_CASE("writer emits canonical sorted rows and round-trips") {
    Polytope sq = shapes::cube(2);
    std::string h = writePolyhedronFile(sq, Representation::H);
    CHECK(h.find("H-representation") == 0);
    CHECK(h.find("integer") != std::string::npos);
    CHECK(polytopeFromFile(parsePolyhedronFile(h)) == sq);

    std::string v = writePolyhedronFile(sq, Representation::V);
    CHECK(polytopeFromFile(parsePolyhedronFile(v)) == sq);

    // fractional coordinates force the rational number type
    Polytope half = Polytope::fromVertices(
        2, {Vector({Q(1, 2), Q(0)}), Vector({Q(-1, 2), Q(0)}),
            Vector({Q(0), Q(1, 2)}), Vector({Q(0), Q(-1, 2)})});
    std::string hv = writePolyhedronFile(half, Representation::V);
    CHECK(hv.find("rational") != std::string::npos);
    CHECK(hv.find("1/2") != std::string::npos);
    CHECK(polytopeFromFile(parsePolyhedronFile(hv)) == half);
}

TEST_CASE("round-trip on random polytopes") {
    std::mt19937_64 rng(103);
    for (int t = 0; t < 10; ++t) {
        Polytope p = randomPolytope(rng, 2 + t % 3, 7 + t % 5);
        for (Representation rep : {Representation::H, Representation::V}) {
            std::string text = writePolyhedronFile(p, rep);
            PolyhedronFile f = parsePolyhedronFile(text);
            CHECK(polytopeFromFile(f) == p);
            // writing again is byte-identical
            CHECK(writePolyhedronFile(polytopeFromFile(f), rep) == text);
        }
    }
}
