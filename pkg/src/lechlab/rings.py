"""Ambient rings: polynomial rings and normal affine semigroup rings.

A ring is described by its exponent semigroup ``S`` inside ``Z^d``.  For a
polynomial ring ``S = N^d``; for a semigroup ring ``S`` is generated by an
explicit list of lattice points and must be pointed, full dimensional and
normal, so that ``S = L ∩ C`` with ``L`` the group and ``C`` the real cone
spanned by the generators.  Normality is what lets every membership question
reduce to one lattice congruence plus finitely many integer inequalities.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

from .errors import InvalidRing, NotNormal

Vector = tuple[int, ...]


def det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        result *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return int(sign * result)


def primitive(v: Sequence[int]) -> Vector:
    g = 0
    for x in v:
        g = math.gcd(g, x)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def normal_vector(vectors: Sequence[Sequence[int]], d: int) -> Vector | None:
    """Primitive integer vector orthogonal to ``d - 1`` given vectors.

    Computed by cofactor expansion (generalised cross product).  Returns
    ``None`` if the vectors are linearly dependent.
    """
    if d == 1:
        return (1,)
    coords = []
    for i in range(d):
        minor = [[row[j] for j in range(d) if j != i] for row in vectors]
        coords.append((-1) ** i * det(minor))
    if not any(coords):
        return None
    return primitive(coords)


def rank(vectors: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    r = 0
    ncols = len(rows[0])
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col] / rows[r][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def echelon_basis(gens: Sequence[Sequence[int]], d: int) -> list[list[int]]:
    """Integer row-echelon basis of the group generated by ``gens``.

    Uses only unimodular row operations (Euclid on each column), so the
    returned rows generate exactly the same subgroup of ``Z^d``.
    """
    rows = [list(g) for g in gens if any(g)]
    basis = []
    for col in range(d):
        active = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            piv = active[0]
            nxt = [piv]
            for r in active[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                if r[col] != 0:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            active = nxt
        if active:
            piv = active[0]
            if piv[col] < 0:
                piv = [-a for a in piv]
            basis.append(piv)
        rows = rest
    return basis


@dataclass(frozen=True)
class AmbientRing:
    """Exponent semigroup of a polynomial or normal affine semigroup ring.

    Use :meth:`polynomial` or :meth:`semigroup` rather than the constructor.
    """

    kind: str
    dim: int
    generators: tuple[Vector, ...]

    @classmethod
    def polynomial(cls, d: int) -> "AmbientRing":
        if not isinstance(d, int) or d < 1:
            raise InvalidRing(f"polynomial ring needs d >= 1, got {d!r}")
        units = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
        return cls("polynomial", d, units)

    @classmethod
    def semigroup(cls, gens: Sequence[Sequence[int]]) -> "AmbientRing":
        gens = [tuple(int(x) for x in g) for g in gens]
        if not gens:
            raise InvalidRing("semigroup needs at least one generator")
        d = len(gens[0])
        if d < 1 or any(len(g) != d for g in gens):
            raise InvalidRing("semigroup generators must share one positive length")
        if any(not any(g) for g in gens):
            raise InvalidRing("semigroup generators must be nonzero")
        ring = cls("semigroup", d, tuple(sorted(set(gens))))
        ring._validate()
        return ring

    @property
    def is_polynomial(self) -> bool:
        return self.kind == "polynomial"

    def spec(self) -> str:
        if self.is_polynomial:
            return f"poly:{self.dim}"
        return "semigroup:" + json.dumps([list(g) for g in self.generators], separators=(",", ":"))

    def __str__(self):
        return self.spec()

    # -- cone data -------------------------------------------------------

    @cached_property
    def facets(self) -> tuple[Vector, ...]:
        """Primitive inner normals ``a`` with ``C = {x : <a, x> >= 0}``."""
        if self.is_polynomial:
            return self.generators
        d = self.dim
        gens = self.generators
        if d == 1:
            if all(g[0] > 0 for g in gens):
                return ((1,),)
            if all(g[0] < 0 for g in gens):
                return ((-1,),)
            return ()
        found = set()
        for subset in itertools.combinations(gens, d - 1):
            a = normal_vector(subset, d)
            if a is None:
                continue
            vals = [dot(a, g) for g in gens]
            if all(v >= 0 for v in vals):
                found.add(a)
            elif all(v <= 0 for v in vals):
                found.add(tuple(-x for x in a))
        return tuple(sorted(found))

    @cached_property
    def rays(self) -> tuple[Vector, ...]:
        """Primitive integer directions of the extreme rays of the cone."""
        if self.is_polynomial:
            return self.generators
        d = self.dim
        out = set()
        for g in self.generators:
            tight = [a for a in self.facets if dot(a, g) == 0]
            if (rank(tight) if tight else 0) == d - 1:
                out.add(primitive(g))
        return tuple(sorted(out))

    @cached_property
    def grading(self) -> Vector:
        """Integer linear form, positive on every nonzero cone point."""
        d = self.dim
        return tuple(sum(a[i] for a in self.facets) for i in range(d))

    def grade(self, v: Sequence[int]) -> int:
        return dot(self.grading, v)

    # -- lattice data ----------------------------------------------------

    @cached_property
    def lattice_basis(self) -> tuple[Vector, ...]:
        if self.is_polynomial:
            return self.generators
        return tuple(tuple(r) for r in echelon_basis(self.generators, self.dim))

    @cached_property
    def covolume(self) -> int:
        """Index of the group lattice in ``Z^d`` (its fundamental-domain volume)."""
        return abs(det(self.lattice_basis))

    def in_lattice(self, v: Sequence[int]) -> bool:
        if self.is_polynomial:
            return True
        v = list(v)
        for row in self.lattice_basis:
            col = next(i for i, x in enumerate(row) if x != 0)
            q, r = divmod(v[col], row[col])
            if r:
                return False
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        return not any(v)

    def in_cone(self, v: Sequence[int]) -> bool:
        if self.is_polynomial:
            return all(x >= 0 for x in v)
        return all(dot(a, v) >= 0 for a in self.facets)

    def contains(self, v: Sequence[int]) -> bool:
        """Membership of ``v`` in the semigroup ``S = L ∩ C``."""
        if len(v) != self.dim:
            return False
        if self.is_polynomial:
            return all(x >= 0 for x in v)
        return self.in_cone(v) and self.in_lattice(v)

    def divides(self, u: Sequence[int], v: Sequence[int]) -> bool:
        """True iff ``v - u`` lies in ``S``."""
        if self.is_polynomial:
            return all(a <= b for a, b in zip(u, v))
        w = [b - a for a, b in zip(u, v)]
        return self.in_cone(w) and self.in_lattice(w)

    def points_up_to_grade(self, max_grade: int, strict: bool = False) -> Iterator[Vector]:
        """All points of ``S`` with grade ``<= max_grade`` (``<`` if strict).

        Enumerates the bounding box of ``{x in C : grade(x) <= max_grade}``.
        """
        if max_grade < 0 or (strict and max_grade <= 0):
            return
        d = self.dim
        lo = [0] * d
        hi = [0] * d
        for r in self.rays:
            t = Fraction(max_grade, self.grade(r))
            for i in range(d):
                c = r[i] * t
                lo[i] = min(lo[i], math.floor(c))
                hi[i] = max(hi[i], math.ceil(c))
        for p in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
            g = self.grade(p)
            if g > max_grade or (strict and g == max_grade):
                continue
            if self.contains(p):
                yield p

    @cached_property
    def hilbert_basis(self) -> tuple[Vector, ...]:
        """Irreducible elements of ``S``; generators of the maximal ideal."""
        if self.is_polynomial:
            return self.generators
        out = []
        for g in self.generators:
            gg = self.grade(g)
            reducible = any(
                any(s) and self.contains(tuple(a - b for a, b in zip(g, s)))
                for s in self.points_up_to_grade(gg, strict=True)
            )
            if not reducible:
                out.append(g)
        return tuple(sorted(set(out)))

    def _validate(self):
        d = self.dim
        if rank(self.generators) != d:
            raise InvalidRing(f"semigroup {self.spec()} is not full dimensional")
        if not self.facets or rank(self.facets) != d:
            raise InvalidRing(f"cone of {self.spec()} is not pointed")
        if any(g <= 0 for g in map(self.grade, self.generators)):
            raise InvalidRing(f"cone of {self.spec()} is not pointed")
        # Every point of L ∩ C is a nonnegative integer combination of d
        # generators plus a point of a half-open parallelotope spanned by
        # them, whose grade is below d * max grade; checking that window
        # therefore certifies S = L ∩ C.
        bound = d * max(self.grade(g) for g in self.generators)
        reached = {tuple([0] * d)}
        frontier = list(reached)
        while frontier:
            nxt = []
            for p in frontier:
                for g in self.generators:
                    q = tuple(a + b for a, b in zip(p, g))
                    if q not in reached and self.grade(q) <= bound:
                        reached.add(q)
                        nxt.append(q)
            frontier = nxt
        for p in self.points_up_to_grade(bound):
            if p not in reached:
                raise NotNormal(
                    f"semigroup {self.spec()} is not normal: {list(p)} lies in the "
                    "group and the cone but is not a sum of generators"
                )


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def parse_ring(text: str) -> AmbientRing:
    """Parse ``poly:<d>`` or ``semigroup:[[..],..]``."""
    text = text.strip()
    kind, _, rest = text.partition(":")
    kind = kind.strip().lower()
    if kind in ("poly", "polynomial"):
        try:
            d = int(rest)
        except ValueError:
            raise InvalidRing(f"bad polynomial ring spec {text!r}") from None
        return AmbientRing.polynomial(d)
    if kind == "semigroup":
        try:
            gens = json.loads(rest)
        except json.JSONDecodeError as exc:
            raise InvalidRing(f"bad semigroup generator list in {text!r}: {exc}") from None
        if not isinstance(gens, list) or not all(
            isinstance(g, list) and all(isinstance(x, int) for x in g) for g in gens
        ):
            raise InvalidRing(f"semigroup generators must be a list of integer lists: {text!r}")
        return AmbientRing.semigroup(gens)
    raise InvalidRing(f"unknown ring spec {text!r}; expected poly:<d> or semigroup:[[...]]")


VERONESE = "semigroup:[[2,0],[1,1],[0,2]]"
