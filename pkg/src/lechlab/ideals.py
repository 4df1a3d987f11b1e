"""Monomial ideals in an ambient semigroup ring and their exact arithmetic."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    InfiniteColength,
    InvalidGenerator,
    InvalidPoint,
    RingMismatch,
    ZeroIdeal,
)
from .rings import AmbientRing, Vector, primitive

VARIABLES = "xyz"


def _minimal(gens: Iterable[Vector], ring: AmbientRing) -> tuple[Vector, ...]:
    gens = set(gens)
    if ring.is_polynomial and ring.dim == 2:
        out = []
        best = None
        for g in sorted(gens):
            if best is None or g[1] < best:
                out.append(g)
                best = g[1]
        return tuple(out)
    if ring.is_polynomial and ring.dim == 1:
        return (min(gens),) if gens else ()
    kept: list[Vector] = []
    for g in sorted(gens, key=lambda v: (ring.grade(v), v)):
        if not any(ring.divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal generated by monomials, stored as its minimal antichain.

    Two instances compare equal exactly when they are the same ideal, since
    the minimal monomial generating set is unique.
    """

    ambient: AmbientRing
    gens: tuple[Vector, ...]

    def __repr__(self):
        return f"MonomialIdeal({self.ambient.spec()}, {format_ideal(self)})"

    def __str__(self):
        return format_ideal(self)

    @property
    def dim(self) -> int:
        return self.ambient.dim

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __pow__(self, n: int) -> "MonomialIdeal":
        return power(self, n)

    def __le__(self, other: "MonomialIdeal") -> bool:
        """Ideal containment ``self ⊆ other``."""
        _same_ring(self, other)
        return all(member(other, g) for g in self.gens)


@dataclass(frozen=True)
class ComplementSet:
    """Semigroup points outside an ideal (the standard monomials)."""

    ambient: AmbientRing
    points: frozenset

    def __len__(self):
        return len(self.points)

    def __iter__(self) -> Iterator[Vector]:
        return iter(sorted(self.points))

    def is_downward_closed(self) -> bool:
        """Check that every Hilbert-basis predecessor of a point is present."""
        ring = self.ambient
        for p in self.points:
            for h in ring.hilbert_basis:
                q = tuple(a - b for a, b in zip(p, h))
                if ring.contains(q) and q not in self.points:
                    return False
        return True


def minimalize(gens: Iterable[Sequence[int]], ambient: AmbientRing) -> MonomialIdeal:
    """Ideal generated by ``gens``, reduced to its divisibility-minimal antichain."""
    vecs = []
    for g in gens:
        v = tuple(int(x) for x in g)
        if not ambient.contains(v):
            raise InvalidGenerator(f"{list(v)} is not in the semigroup of {ambient.spec()}")
        vecs.append(v)
    if any(not any(v) for v in vecs):
        return unit_ideal(ambient)
    return MonomialIdeal(ambient, _minimal(vecs, ambient))


def ideal(ambient: AmbientRing, *gens: Sequence[int]) -> MonomialIdeal:
    return minimalize(gens, ambient)


def unit_ideal(ambient: AmbientRing) -> MonomialIdeal:
    return MonomialIdeal(ambient, (tuple([0] * ambient.dim),))


def zero_ideal(ambient: AmbientRing) -> MonomialIdeal:
    return MonomialIdeal(ambient, ())


def maximal_ideal(ambient: AmbientRing) -> MonomialIdeal:
    return MonomialIdeal(ambient, _minimal(ambient.hilbert_basis, ambient))


def member(I: MonomialIdeal, v: Vector) -> bool:
    """``contains`` without validating ``v``; for inner loops."""
    ring = I.ambient
    if ring.is_polynomial:
        return any(all(a <= b for a, b in zip(g, v)) for g in I.gens)
    return any(ring.divides(g, v) for g in I.gens)


def contains(I: MonomialIdeal, v: Sequence[int]) -> bool:
    v = tuple(v)
    if not I.ambient.contains(v):
        raise InvalidPoint(f"{list(v)} is not in the semigroup of {I.ambient.spec()}")
    return member(I, v)


def _same_ring(I: MonomialIdeal, J: MonomialIdeal):
    if I.ambient != J.ambient:
        raise RingMismatch(f"ideals live in {I.ambient.spec()} and {J.ambient.spec()}")


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    if I.is_unit or J.is_unit:
        return unit_ideal(I.ambient)
    return MonomialIdeal(I.ambient, _minimal(I.gens + J.gens, I.ambient))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    sums = {tuple(a + b for a, b in zip(g, h)) for g in I.gens for h in J.gens}
    if any(not any(v) for v in sums):
        return unit_ideal(I.ambient)
    return MonomialIdeal(I.ambient, _minimal(sums, I.ambient))


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"power needs a positive integer exponent, got {n!r}")
    out = I
    for _ in range(n - 1):
        out = product(out, I)
    return out


def powers(I: MonomialIdeal, n_max: int) -> Iterator[MonomialIdeal]:
    """Yield ``I, I^2, ..., I^n_max``."""
    cur = I
    for n in range(1, n_max + 1):
        if n > 1:
            cur = product(cur, I)
        yield cur


def min_gens_count(I: MonomialIdeal) -> int:
    if I.is_zero:
        raise ZeroIdeal("the zero ideal has no minimal generators")
    return len(I.gens)


def is_m_primary(I: MonomialIdeal) -> bool:
    """True iff every extreme ray of the cone carries a generator.

    A point off a ray can never divide a point on it, so this is exactly the
    condition that each ray meets the ideal (pure powers, for polynomials).
    """
    if I.is_zero:
        raise ZeroIdeal("the zero ideal is not m-primary")
    if I.is_unit:
        return False
    on_rays = {primitive(g) for g in I.gens}
    return all(r in on_rays for r in I.ambient.rays)


def _require_finite(I: MonomialIdeal):
    if I.is_zero:
        raise ZeroIdeal("colength of the zero ideal is infinite")
    if not I.is_unit and not is_m_primary(I):
        raise InfiniteColength(f"({I}) is not m-primary in {I.ambient.spec()}")


def _colength_poly(gens: Sequence[Vector], d: int) -> int:
    if d == 1:
        return min(g[0] for g in gens)
    if d == 2:
        pts = sorted(gens)
        total = 0
        for (a0, b0), (a1, _) in zip(pts, pts[1:]):
            total += (a1 - a0) * b0
        return total
    # slice along the last variable; each slice is m-primary in d - 1 variables
    top = min(g[-1] for g in gens if not any(g[:-1]))
    total = 0
    for t in range(top):
        sl = {g[:-1] for g in gens if g[-1] <= t}
        ring = AmbientRing.polynomial(d - 1)
        total += _colength_poly(_minimal(sl, ring), d - 1)
    return total


def colength(I: MonomialIdeal) -> int:
    """``ℓ(R/I)``: the number of semigroup points outside ``I``."""
    _require_finite(I)
    if I.is_unit:
        return 0
    if I.ambient.is_polynomial:
        return _colength_poly(I.gens, I.dim)
    return len(complement(I))


def complement(I: MonomialIdeal) -> ComplementSet:
    """Witness set for the colength, found by search from the origin.

    The complement is closed under taking divisors, so it is reached from 0
    by Hilbert-basis steps that never enter the ideal.
    """
    _require_finite(I)
    ring = I.ambient
    origin = tuple([0] * ring.dim)
    if I.is_unit:
        return ComplementSet(ring, frozenset())
    seen = {origin}
    frontier = [origin]
    while frontier:
        nxt = []
        for p in frontier:
            for h in ring.hilbert_basis:
                q = tuple(a + b for a, b in zip(p, h))
                if q not in seen and not member(I, q):
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return ComplementSet(ring, frozenset(seen))


def colength_by_box(I: MonomialIdeal) -> int:
    """Colength by direct enumeration of a bounding region.

    Polynomial: the box bounded by the largest generator exponent in each
    coordinate.  Semigroup: points of grade below the sum, over extreme rays,
    of the grade of the ideal's first point on that ray; a point outside the
    ideal has coordinates below one on each such ray point in any simplicial
    subcone, which bounds its grade.
    """
    _require_finite(I)
    if I.is_unit:
        return 0
    ring = I.ambient
    if ring.is_polynomial:
        bounds = [max(g[i] for g in I.gens) for i in range(ring.dim)]
        pts = itertools.product(*(range(b + 1) for b in bounds))
    else:
        bound = 0
        for r in ring.rays:
            bound += min(ring.grade(g) for g in I.gens if primitive(g) == r)
        pts = ring.points_up_to_grade(bound, strict=True)
    return sum(1 for p in pts if not member(I, p))


def variable_names(d: int) -> list[str]:
    if d <= 3:
        return list(VARIABLES[:d])
    return [f"x{i + 1}" for i in range(d)]


def format_monomial(v: Sequence[int]) -> str:
    names = variable_names(len(v))
    parts = []
    for name, e in zip(names, v):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal(I: MonomialIdeal) -> str:
    """Canonical text: monomials when exponents are natural, else exponent lists."""
    if I.is_zero:
        return "0"
    gens = sorted(I.gens, reverse=True)
    if all(x >= 0 for g in gens for x in g):
        return ", ".join(format_monomial(g) for g in gens)
    return "[" + ",".join("[" + ",".join(map(str, g)) + "]" for g in gens) + "]"
