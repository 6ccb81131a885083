"""Exact convex geometry over Q for small dimensions.

Points are tuples of Fractions.  Everything is brute force over subsets of
points or inequalities, which is plenty for the polytopes and PL data used
here (a few dozen points, n <= 3).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Sequence

from ..errors import GeometryError

Point = tuple


def as_point(p) -> Point:
    return tuple(Fraction(x) for x in p)


def _det(m) -> Fraction:
    m = [list(r) for r in m]
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        d *= m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return d


def _solve(a, b):
    """Solve the square system ``a x = b`` exactly, or return None if singular."""
    n = len(a)
    m = [list(a[i]) + [b[i]] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n] for row in m]


def affine_rank(points: Sequence[Point]) -> int:
    """Dimension of the affine hull."""
    if not points:
        return -1
    p0 = points[0]
    rows = [[x - y for x, y in zip(p, p0)] for p in points[1:]]
    rank, cols = 0, len(p0)
    rows = [r for r in rows if any(r)]
    for c in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def affine_through(points: Sequence[Point], values: Sequence[Fraction]):
    """Affine ``(a, g)`` with ``a + g.u = value`` at n+1 affinely independent points, else None."""
    n = len(points[0])
    rows = [[Fraction(1)] + list(p) for p in points]
    sol = _solve(rows, list(values))
    if sol is None:
        return None
    return sol[0], tuple(sol[1:])


def hyperplane_through(points: Sequence[Point]):
    """Normal ``a`` and offset ``b`` with ``<a, x> = b`` on n affinely independent points in R^n."""
    n = len(points[0])
    p0 = points[0]
    rows = [[x - y for x, y in zip(p, p0)] for p in points[1:]]
    # normal = generalized cross product via cofactors
    normal = []
    for j in range(n):
        minor = [[r[k] for k in range(n) if k != j] for r in rows]
        normal.append((-1) ** j * _det(minor) if minor else Fraction(1))
    if not any(normal):
        return None
    b = sum(a * x for a, x in zip(normal, p0))
    return tuple(normal), b


def _primitive(normal, b):
    """Scale a rational halfspace so the normal is a primitive integer vector."""
    den = 1
    for x in list(normal) + [b]:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in normal]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return tuple(Fraction(x, g) for x in ints), b * den / g


def facets(points: Sequence[Point]):
    """Facets of the convex hull of full-dimensional ``points``.

    Returns a list of ``(a, b, idx)`` with ``<a, x> >= b`` on the hull (``a``
    primitive integral when the data is rational) and ``idx`` the indices of
    points lying on the facet.
    """
    pts = [as_point(p) for p in points]
    n = len(pts[0])
    if affine_rank(pts) != n:
        raise GeometryError("point set is not full dimensional")
    if n == 1:
        xs = [p[0] for p in pts]
        lo, hi = min(xs), max(xs)
        return [
            ((Fraction(1),), lo, tuple(i for i, x in enumerate(xs) if x == lo)),
            ((Fraction(-1),), -hi, tuple(i for i, x in enumerate(xs) if x == hi)),
        ]
    seen, out = set(), []
    for combo in itertools.combinations(range(len(pts)), n):
        h = hyperplane_through([pts[i] for i in combo])
        if h is None:
            continue
        a, b = h
        vals = [sum(x * y for x, y in zip(a, p)) - b for p in pts]
        if all(v >= 0 for v in vals):
            pass
        elif all(v <= 0 for v in vals):
            a, b = tuple(-x for x in a), -b
        else:
            continue
        idx = tuple(i for i, p in enumerate(pts) if sum(x * y for x, y in zip(a, p)) == b)
        if idx in seen:
            continue
        seen.add(idx)
        out.append((*_primitive(a, b), idx))
    return out


def _project(points: Sequence[Point], k: int):
    """Drop coordinates so that ``points`` (spanning a k-flat) keep their affine structure."""
    n = len(points[0])
    p0 = points[0]
    diffs = [[x - y for x, y in zip(p, p0)] for p in points]
    for keep in itertools.combinations(range(n), k):
        if affine_rank([tuple(d[j] for j in keep) for d in diffs]) == k:
            return [tuple(p[j] for j in keep) for p in points]
    raise GeometryError("projection failed")


def triangulate(points: Sequence[Point]) -> list[tuple[int, ...]]:
    """Pulling triangulation of the convex hull of full-dimensional ``points``.

    Returns simplices as tuples of indices into ``points``.  The apex is the
    lexicographically smallest point, which is always a vertex.
    """
    pts = [as_point(p) for p in points]
    n = len(pts[0])
    if n == 0:
        return [(0,)]
    if n == 1:
        xs = [p[0] for p in pts]
        return [(xs.index(min(xs)), xs.index(max(xs)))]
    apex = min(range(len(pts)), key=lambda i: pts[i])
    simplices = []
    for _, _, idx in facets(pts):
        if apex in idx:
            continue
        sub = _project([pts[i] for i in idx], n - 1)
        for s in triangulate(sub):
            simplices.append((apex,) + tuple(idx[i] for i in s))
    return simplices


def simplex_volume(vertices: Sequence[Point]) -> Fraction:
    p0 = vertices[0]
    n = len(p0)
    m = [[x - y for x, y in zip(p, p0)] for p in vertices[1:]]
    return abs(_det(m)) / math.factorial(n)


def volume(points: Sequence[Point]) -> Fraction:
    pts = [as_point(p) for p in points]
    return sum((simplex_volume([pts[i] for i in s]) for s in triangulate(pts)), Fraction(0))


def integrate_affine(simplex: Sequence[Point], a: Fraction, g: Sequence[Fraction]) -> Fraction:
    """Exact integral of ``a + g.u`` over a simplex: volume times the value at the centroid."""
    k = len(simplex)
    centroid = [sum(c) / k for c in zip(*simplex)]
    return simplex_volume(simplex) * (a + sum(x * y for x, y in zip(g, centroid)))


def vertices_from_hrep(halfspaces) -> list[Point]:
    """Vertices of ``{x : <a, x> >= b}`` for a bounded system, by brute-force intersection."""
    hs = [(tuple(Fraction(x) for x in a), Fraction(b)) for a, b in halfspaces]
    n = len(hs[0][0])
    out = []
    for combo in itertools.combinations(hs, n):
        x = _solve([list(a) for a, _ in combo], [b for _, b in combo])
        if x is None:
            continue
        if all(sum(p * q for p, q in zip(a, x)) >= b for a, b in hs):
            x = tuple(x)
            if x not in out:
                out.append(x)
    return out


def integrate_min_affine(halfspaces, pieces) -> Fraction:
    """Exact integral of ``min_j (a_j + g_j.u)`` over the polytope ``{<a, x> >= b}``.

    Each piece's region is cut out by the extra inequalities ``A_k >= A_j``;
    regions of measure zero are skipped.
    """
    pieces = list(dict.fromkeys((Fraction(a), tuple(Fraction(x) for x in g)) for a, g in pieces))
    total = Fraction(0)
    for j, (aj, gj) in enumerate(pieces):
        extra = []
        for k, (ak, gk) in enumerate(pieces):
            if k != j:
                # a_k + g_k.u >= a_j + g_j.u
                extra.append((tuple(x - y for x, y in zip(gk, gj)), aj - ak))
        verts = vertices_from_hrep(list(halfspaces) + extra)
        if len(verts) <= len(gj) or affine_rank(verts) < len(gj):
            continue
        for s in triangulate(verts):
            total += integrate_affine([verts[i] for i in s], aj, gj)
    return total
