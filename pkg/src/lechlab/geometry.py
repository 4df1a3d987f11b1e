"""Exact convex geometry over the rationals for Newton polyhedra."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .rings import AmbientRing, Vector, det, dot, normal_vector

Point2 = tuple[Fraction, Fraction]


def cross(o: Point2, a: Point2, b: Point2) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def shoelace(poly: Sequence[Point2]) -> Fraction:
    """Signed area of a simple polygon (positive when counter-clockwise)."""
    s = Fraction(0)
    for p, q in zip(poly, list(poly[1:]) + [poly[0]]):
        s += Fraction(p[0]) * q[1] - Fraction(q[0]) * p[1]
    return s / 2


def oriented_rays(ring: AmbientRing) -> tuple[Vector, Vector]:
    """The two extreme rays of a 2D cone, ordered counter-clockwise."""
    r1, r2 = ring.rays
    if det([r1, r2]) < 0:
        r1, r2 = r2, r1
    return r1, r2


def ray_coordinates(ring: AmbientRing, p: Sequence[int]) -> Point2:
    """Coordinates ``(u, v)`` with ``p = u*r1 + v*r2``; the cone becomes the quadrant."""
    r1, r2 = oriented_rays(ring)
    D = det([r1, r2])
    return Fraction(det([p, r2]), D), Fraction(det([r1, p]), D)


def newton_chain(points: Sequence[Point2]) -> list[Point2]:
    """Vertices of the compact boundary of ``conv(points) + quadrant``.

    ``points`` must include one on each axis.  The chain runs from the
    ``v``-axis to the ``u``-axis with strictly decreasing ``v``.
    """
    pts = set(points)
    v0 = min(p[1] for p in pts if p[0] == 0)
    u0 = min(p[0] for p in pts if p[1] == 0)
    lowest: dict[Fraction, Fraction] = {}
    for u, v in pts:
        if u <= u0 and v <= v0 and (u not in lowest or v < lowest[u]):
            lowest[u] = v
    chain: list[Point2] = []
    for p in sorted(lowest.items()):
        while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= 0:
            chain.pop()
        chain.append(p)
    return chain


def chain_area(chain: Sequence[Point2]) -> Fraction:
    """Area between the axes and the chain."""
    poly = [(Fraction(0), Fraction(0))] + list(reversed(chain))
    return abs(shoelace(poly))


def facets_by_enumeration(
    points: Sequence[Vector], rays: Sequence[Vector], d: int
) -> list[tuple[Vector, int]]:
    """Facet inequalities ``<a, x> >= c`` (``c > 0``) of ``conv(points) + cone(rays)``.

    Every facet hyperplane passes through a point and is spanned by ``d - 1``
    independent differences of points and rays, so trying all such choices
    and keeping the supporting ones is exhaustive.  Cone facets (``c = 0``)
    are left out.
    """
    found = set()
    objects = [("p", p) for p in points] + [("r", r) for r in rays]
    for combo in itertools.combinations(objects, d):
        base = next((v for kind, v in combo if kind == "p"), None)
        if base is None:
            continue
        vectors = []
        used_base = False
        for kind, v in combo:
            if kind == "p" and v == base and not used_base:
                used_base = True
                continue
            vectors.append(tuple(a - b for a, b in zip(v, base)) if kind == "p" else v)
        a = normal_vector(vectors, d) if d > 1 else (1,)
        if a is None:
            continue
        signs = [dot(a, r) for r in rays]
        if all(s <= 0 for s in signs) and any(s < 0 for s in signs):
            a = tuple(-x for x in a)
        elif any(s < 0 for s in signs):
            continue
        c = dot(a, base)
        if c <= 0:
            continue
        if all(dot(a, p) >= c for p in points):
            found.add((a, c))
    return sorted(found)
