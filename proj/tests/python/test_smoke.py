"""Smoke tests for the polysum extension module."""

from fractions import Fraction

import pytest

import polysum as ps


def test_cube_counting():
    for n in range(2, 6):
        c = ps.cube(n)
        assert len(c.vertices) == 2**n
        assert len(c.facets) == 2 * n
        s = ps.simplex(n)
        assert len(s.vertices) == n + 1
        assert len(s.facets) == n + 1


def test_octagon_all_methods():
    sq, dia = ps.cube(2), ps.cross_polytope(2)
    want = sorted(
        [(2, 1), (1, 2), (0, 2), (-1, 1), (-1, 0), (0, -1), (1, -1), (2, 0)]
    )
    want = [tuple(Fraction(x) for x in v) for v in want]

    results = [
        ps.sum_dual_brute(sq, dia),
        ps.sum_dual_optimized(sq, dia, verify_caps=True),
        ps.sum_primal(sq, dia),
    ]
    for dec in results:
        assert list(dec.sum.vertices) == want
        assert len(dec.sum.facets) == 8
    assert results[0].sum == results[1].sum == results[2].sum
    assert results[0].sum == ps.oracle_sum(sq, dia)
    assert results[1].cone_intersections <= results[0].cone_intersections == 16

    for i, (a, b) in enumerate(results[0].witnesses):
        va, vb, vc = sq.vertices[a], dia.vertices[b], results[0].sum.vertices[i]
        assert tuple(x + y for x, y in zip(va, vb)) == vc


def test_exact_fractions_in_and_out():
    tri = ps.Polytope.from_vertices(
        2, [(0, 0), ("1/2", 0), (0, Fraction(1, 2))]
    )
    assert tri.interior_point() == (Fraction(1, 6), Fraction(1, 6))
    with pytest.raises(TypeError):
        ps.Polytope.from_vertices(2, [(0.5, 0), (1, 0), (0, 1)])


def test_errors():
    with pytest.raises(ps.NotFullDimensional):
        ps.Polytope.from_vertices(2, [(0, 0), (1, 1), (2, 2)])
    with pytest.raises(ps.Unbounded):
        ps.Polytope.from_halfspaces(2, [((-1, 0), 0), ((0, -1), 0)])
    with pytest.raises(ps.DimensionMismatch):
        ps.sum_dual_brute(ps.cube(2), ps.cube(3))


def test_cone_machinery():
    sq, dia = ps.cube(2), ps.cross_polytope(2)
    corner = sq.vertices.index((Fraction(1), Fraction(1)))
    right = dia.vertices.index((Fraction(1), Fraction(0)))

    ok, refined = ps.is_minkowski_vertex_pair(sq, dia, corner, right)
    assert ok and refined.cone_dim == 2

    hull = ps.minkowski_vertex_cone(sq, dia, corner, right)
    linked = ps.polar_dual(refined).translated_to(hull.apex)
    assert linked == hull

    cap = ps.polyhedral_cap(sq, dia, corner)
    assert [dia.vertices[m] for m in cap.members] == [
        (Fraction(0), Fraction(1)),
        (Fraction(1), Fraction(0)),
    ]
    assert ps.connected_in_graph(dia, cap.members)


def test_io_round_trip():
    text = ps.write_polytope(ps.cube(3), "H")
    assert ps.parse_polytope(text) == ps.cube(3)
    ext = ps.write_polytope(ps.cube(3), "V")
    assert ps.parse_polytope(ext) == ps.cube(3)
    with pytest.raises(ps.FileParseError):
        ps.parse_polytope("not a polyhedron file")


def test_validation_report():
    rep = ps.cube(3).validate()
    assert rep.ok() and bool(rep)
    assert rep.violations == []


def test_minkowski_sum_dispatch():
    sq, dia = ps.cube(2), ps.cross_polytope(2)
    dec = ps.minkowski_sum(sq, dia, method="dual-opt")
    assert dec.method == "dual-opt"
    assert dec.sum == ps.oracle_sum(sq, dia)
    with pytest.raises(ValueError):
        ps.minkowski_sum(sq, dia, method="nope")
