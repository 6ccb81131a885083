import itertools
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from scipy.spatial import ConvexHull

from ultranorm import GeometryError
from ultranorm.toric import LatticePolytope, lattice_points
from ultranorm.toric import geometry as geo

POLYTOPES = {
    "segment": LatticePolytope.segment(),
    "segment3": LatticePolytope.segment(3),
    "simplex2": LatticePolytope.simplex(2),
    "simplex2x2": LatticePolytope.simplex(2, 2),
    "square": LatticePolytope.box(1, 1),
    "rect": LatticePolytope.box(2, 1),
    "hexagon": LatticePolytope([(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)]),
    "p112": LatticePolytope([(0, 0), (2, 0), (0, 1)]),
    "simplex3": LatticePolytope.simplex(3),
    "cube": LatticePolytope.box(1, 1, 1),
}

point_sets = st.lists(
    st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=3, max_size=9, unique=True
).filter(lambda pts: geo.affine_rank([geo.as_point(p) for p in pts]) == 2)


def test_lattice_point_examples():
    assert lattice_points(POLYTOPES["segment"], 3) == [(0,), (1,), (2,), (3,)]
    assert POLYTOPES["simplex2"].count(2) == 6
    assert POLYTOPES["cube"].count(2) == 27
    with pytest.raises(ValueError):
        POLYTOPES["segment"].lattice_points(0)


@pytest.mark.parametrize("name", sorted(POLYTOPES))
def test_ehrhart_polynomial(name):
    """Counts for m = 1..n+1 determine the Ehrhart polynomial (constant term 1)."""
    P = POLYTOPES[name]
    m = sympy.Symbol("m")
    data = [(0, 1)] + [(k, P.count(k)) for k in range(1, P.n + 1)]
    poly = sympy.interpolate(data, m)
    for k in range(P.n + 1, P.n + 4):
        assert poly.subs(m, k) == P.count(k)
    lead = sympy.Poly(poly, m).LC()
    assert Fraction(int(lead.p), int(lead.q)) == P.volume


@pytest.mark.parametrize("name", sorted(POLYTOPES))
def test_volume_and_facets_match_scipy(name):
    P = POLYTOPES[name]
    pts = np.array([[float(x) for x in v] for v in P.vertices])
    if P.n == 1:
        assert P.volume == max(pts[:, 0]) - min(pts[:, 0])
        return
    hull = ConvexHull(pts)
    assert float(P.volume) == pytest.approx(hull.volume)
    assert len(hull.vertices) == len(P.vertices)
    # each facet inequality is tight on a face of the scipy hull
    normals = {tuple(np.round(-eq[:-1] / np.linalg.norm(eq[:-1]), 9)) for eq in hull.equations}
    for a, b in P.facets:
        v = np.array([float(x) for x in a])
        assert tuple(np.round(v / np.linalg.norm(v), 9)) in normals
    assert all(P.contains(v) for v in P.vertices)


def test_smoothness():
    for name in ("segment", "simplex2", "simplex2x2", "square", "rect", "hexagon", "simplex3", "cube"):
        assert POLYTOPES[name].smooth, name
    assert not POLYTOPES["p112"].smooth


def test_validation():
    with pytest.raises(GeometryError):
        LatticePolytope([(0, 0), (Fraction(1, 2), 0), (0, 1)])
    with pytest.raises(GeometryError):
        LatticePolytope([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(GeometryError):
        LatticePolytope([(0, 0), (2, 0), (0, 2), (1, 1)])  # (1,1) lies on an edge
    with pytest.raises(GeometryError):
        LatticePolytope([(0, 0), (2, 0), (0, 2), (1, 0)])
    with pytest.raises(GeometryError):
        LatticePolytope([])


def test_json_round_trip():
    P = POLYTOPES["hexagon"]
    Q = LatticePolytope.from_json(P.to_json())
    assert Q.vertices == P.vertices and Q.facets == P.facets


@given(point_sets)
def test_volume_of_random_hulls(pts):
    hull = ConvexHull(np.array(pts, dtype=float))
    assert float(geo.volume([geo.as_point(p) for p in pts])) == pytest.approx(hull.volume)


@given(point_sets, st.fractions(-3, 3, max_denominator=7), st.fractions(-3, 3, max_denominator=7),
       st.fractions(-3, 3, max_denominator=7))
def test_integrate_affine_matches_sympy(pts, a, g1, g2):
    x, y, s, t = sympy.symbols("x y s t")
    P = [geo.as_point(p) for p in pts]
    total = Fraction(0)
    want = sympy.Integer(0)
    for simplex in geo.triangulate(P):
        v0, v1, v2 = (P[i] for i in simplex)
        total += geo.integrate_affine([v0, v1, v2], a, (g1, g2))
        # parametrize the triangle and integrate exactly
        X = v0[0] + s * (v1[0] - v0[0]) + t * (v2[0] - v0[0])
        Y = v0[1] + s * (v1[1] - v0[1]) + t * (v2[1] - v0[1])
        jac = abs((v1[0] - v0[0]) * (v2[1] - v0[1]) - (v2[0] - v0[0]) * (v1[1] - v0[1]))
        f = sympy.Rational(str(a)) + sympy.Rational(str(g1)) * X + sympy.Rational(str(g2)) * Y
        want += sympy.Rational(str(jac)) * sympy.integrate(sympy.integrate(f, (t, 0, 1 - s)), (s, 0, 1))
    assert sympy.Rational(str(total)) == want


@given(st.lists(st.tuples(st.fractions(-2, 2, max_denominator=5),
                          st.fractions(-2, 2, max_denominator=5),
                          st.fractions(-2, 2, max_denominator=5)), min_size=1, max_size=4))
def test_integrate_min_affine_against_grid(pieces):
    """Compare with a fine midpoint rule on the unit square (floats)."""
    hs = POLYTOPES["square"].facets
    exact = geo.integrate_min_affine(hs, [(a, (g1, g2)) for a, g1, g2 in pieces])
    k = 200
    c = (np.arange(k) + 0.5) / k
    X, Y = np.meshgrid(c, c)
    vals = np.min([float(a) + float(g1) * X + float(g2) * Y for a, g1, g2 in pieces], axis=0)
    assert float(exact) == pytest.approx(vals.mean(), abs=2e-3)


def test_vertices_from_hrep():
    verts = geo.vertices_from_hrep(POLYTOPES["simplex2"].facets)
    assert sorted(verts) == sorted(POLYTOPES["simplex2"].vertices)


def test_hyperplane_through_points():
    pts = [geo.as_point(p) for p in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]]
    a, b = geo.hyperplane_through(pts)
    for p in pts:
        assert sum(x * y for x, y in zip(a, p)) == b
    assert geo.affine_rank(pts) == 2
    for combo in itertools.combinations(pts, 2):
        assert geo.affine_rank(list(combo)) == 1
