"""Enumeration of m-primary monomial ideals and sup-ratio curves."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .closure import is_integrally_closed
from .errors import DimensionUnsupported, LechError
from .ideals import MonomialIdeal, colength, complement, maximal_ideal, min_gens_count, minimalize, power
from .inequalities import ideal_stats
from .rings import AmbientRing, Vector

BY_COLENGTH = "by_colength"
BY_GENERATORS = "by_generators"
RANDOM = "random"
ALL = "all"
INTEGRALLY_CLOSED = "integrally_closed"


@dataclass(frozen=True)
class EnumerationSpec:
    ambient: AmbientRing
    mode: str = BY_COLENGTH
    max_colength: int = 5
    max_generators: int = 4
    max_degree: int = 4
    count: int = 50
    seed: int = 0
    filter: str = ALL

    def __post_init__(self):
        if self.mode not in (BY_COLENGTH, BY_GENERATORS, RANDOM):
            raise ValueError(f"unknown enumeration mode {self.mode!r}")
        if self.filter not in (ALL, INTEGRALLY_CLOSED):
            raise ValueError(f"unknown filter {self.filter!r}")
        for name in ("max_colength", "max_generators", "max_degree"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as weakly decreasing tuples, reverse-lexicographic."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partition_count(n: int) -> int:
    """``p(n)`` from Euler's pentagonal recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def staircase_ideal(ring: AmbientRing, parts: Sequence[int]) -> MonomialIdeal:
    """Ideal whose standard monomials are ``x^i y^j`` with ``j < parts[i]``."""
    corners = [(i, parts[i]) for i in range(len(parts))] + [(len(parts), 0)]
    return minimalize(corners, ring)


def ideal_from_order_ideal(ring: AmbientRing, points: Iterable[Vector]) -> MonomialIdeal:
    """The ideal whose complement is the given finite divisor-closed set."""
    pts = set(points)
    cand = {tuple(a + b for a, b in zip(p, h)) for p in pts for h in ring.hilbert_basis}
    return minimalize(cand - pts, ring)


def order_ideals(ring: AmbientRing, n_max: int) -> Iterator[frozenset]:
    """All nonempty divisor-closed finite subsets of ``S`` with at most ``n_max`` points.

    Grown one point at a time; a point may be added once all its
    Hilbert-basis predecessors are present.
    """
    origin = tuple([0] * ring.dim)
    level = {frozenset([origin])}
    for _ in range(n_max):
        yield from sorted(level, key=lambda s: sorted(s))
        nxt = set()
        for D in level:
            for p in D:
                for h in ring.hilbert_basis:
                    q = tuple(a + b for a, b in zip(p, h))
                    if q in D:
                        continue
                    preds = (tuple(a - b for a, b in zip(q, g)) for g in ring.hilbert_basis)
                    if all(r in D for r in preds if ring.contains(r)):
                        nxt.add(D | {q})
        level = nxt


def staircase_key(I: MonomialIdeal):
    return (colength(I), tuple(sorted(complement(I))))


def _exhaustive(spec: EnumerationSpec) -> list[MonomialIdeal]:
    ring = spec.ambient
    if ring.dim != 2:
        raise DimensionUnsupported(
            f"exhaustive enumeration is limited to d = 2 (got d = {ring.dim}); use random mode"
        )
    out = []
    if ring.is_polynomial:
        for n in range(1, spec.max_colength + 1):
            out.extend(staircase_ideal(ring, lam) for lam in partitions(n))
    else:
        out = [ideal_from_order_ideal(ring, D) for D in order_ideals(ring, spec.max_colength)]
    return sorted(out, key=staircase_key)


def _by_generators(spec: EnumerationSpec) -> list[MonomialIdeal]:
    ring = spec.ambient
    if not (ring.is_polynomial and ring.dim == 2):
        raise DimensionUnsupported("generator-bounded enumeration is implemented for k[x,y] only")
    D = spec.max_degree
    out = []
    for n in range(1, D * D + 1):
        for lam in partitions(n, D):
            if len(lam) <= D:
                I = staircase_ideal(ring, lam)
                if min_gens_count(I) <= spec.max_generators:
                    out.append(I)
    return sorted(out, key=staircase_key)


def _first_on_ray(ring: AmbientRing, r: Vector) -> Vector:
    t = 1
    while not ring.contains(tuple(t * x for x in r)):
        t += 1
    return tuple(t * x for x in r)


def random_ideal(ring: AmbientRing, rng: random.Random, max_degree: int) -> MonomialIdeal:
    """Random m-primary ideal: a power of each ray's first point plus a few extra points."""
    gens = []
    for r in ring.rays:
        p = _first_on_ray(ring, r)
        gens.append(tuple(rng.randint(1, max_degree) * x for x in p))
    top = max(ring.grade(g) for g in gens)
    pool = [p for p in ring.points_up_to_grade(top) if any(p)]
    pool.sort()
    for _ in range(rng.randint(0, 3)):
        gens.append(rng.choice(pool))
    return minimalize(gens, ring)


def _random(spec: EnumerationSpec) -> list[MonomialIdeal]:
    rng = random.Random(spec.seed)
    return [random_ideal(spec.ambient, rng, spec.max_degree) for _ in range(spec.count)]


def enumerate_ideals(spec: EnumerationSpec) -> Iterator[MonomialIdeal]:
    """Deterministic stream of m-primary ideals described by ``spec``."""
    if spec.mode == BY_COLENGTH:
        ideals = _exhaustive(spec)
    elif spec.mode == BY_GENERATORS:
        ideals = _by_generators(spec)
    else:
        ideals = _random(spec)
    for I in ideals:
        if spec.filter == INTEGRALLY_CLOSED and not is_integrally_closed(I):
            continue
        yield I


def sup_ratio_curve(spec: EnumerationSpec, cutoffs: Sequence[int], n_max=None) -> list[dict]:
    """Exact maxima of ``e/(d! ℓ)`` up to each colength cutoff and within each band."""
    cutoffs = sorted(set(cutoffs))
    if spec.mode != BY_COLENGTH:
        raise LechError("sup-ratio curves need the exhaustive by-colength mode")
    full = EnumerationSpec(spec.ambient, BY_COLENGTH, max_colength=cutoffs[-1], filter=spec.filter)
    stats = [ideal_stats(I, n_max) for I in enumerate_ideals(full)]
    rows = []
    prev = 0
    for c in cutoffs:
        upto = [s for s in stats if s.ell <= c]
        band = [s for s in upto if s.ell > prev]
        best = _argmax(upto)
        band_best = _argmax(band)
        rows.append({
            "cutoff": c,
            "count": len(upto),
            "max_ratio": best.ratio if best else None,
            "argmax": str(best.ideal) if best else None,
            "band_count": len(band),
            "band_max_ratio": band_best.ratio if band_best else None,
            "band_argmax": str(band_best.ideal) if band_best else None,
        })
        prev = c
    return rows


def _argmax(stats):
    best = None
    for s in stats:
        if best is None or s.ratio > best.ratio:
            best = s
    return best


def _ratio(I: MonomialIdeal) -> Fraction:
    return ideal_stats(I).ratio


def structured_families(ambient: AmbientRing, family: str, **params) -> Iterator[MonomialIdeal]:
    """Deterministic families: ``max_powers`` (n), ``pure_powers`` (exponents), ``hanes_extremal`` (N)."""
    if family == "max_powers":
        m = maximal_ideal(ambient)
        for n in range(1, params.get("n", 4) + 1):
            yield power(m, n)
    elif family == "pure_powers":
        exps = params["exponents"]
        rays = ambient.rays
        if len(exps) != len(rays):
            raise ValueError(f"need {len(rays)} exponents, one per extreme ray")
        yield minimalize(
            [tuple(a * x for x in _first_on_ray(ambient, r)) for a, r in zip(exps, rays)], ambient
        )
    elif family == "hanes_extremal":
        yield from _hanes_extremal(ambient, params["N"], params.get("max_colength", 12))
    else:
        raise ValueError(f"unknown family {family!r}")


def _neighbors(ring: AmbientRing, I: MonomialIdeal) -> Iterator[MonomialIdeal]:
    D = set(complement(I))
    for g in I.gens:  # move a corner into the staircase
        yield ideal_from_order_ideal(ring, D | {g})
    for p in sorted(D):  # or remove a maximal staircase point
        if not any(p):
            continue
        succ = (tuple(a + b for a, b in zip(p, h)) for h in ring.hilbert_basis)
        if not any(q in D for q in succ):
            yield ideal_from_order_ideal(ring, D - {p})


def _hanes_extremal(ring: AmbientRing, N: int, max_colength: int) -> Iterator[MonomialIdeal]:
    """Greedy ascent of the ratio under ``μ <= N``; yields the path, best last.

    Heuristic: a local optimum only, reported as lower-bound evidence.
    """
    m = maximal_ideal(ring)
    cur = m
    k = 1
    while True:  # largest power of m still within the generator budget
        nxt = power(m, k + 1)
        if min_gens_count(nxt) > N or colength(nxt) > max_colength:
            break
        cur, k = nxt, k + 1
    best = _ratio(cur)
    yield cur
    while True:
        cands = []
        for J in _neighbors(ring, cur):
            if min_gens_count(J) <= N and colength(J) <= max_colength:
                cands.append((_ratio(J), staircase_key(J), J))
        if not cands:
            return
        r, _, J = min(cands, key=lambda t: (-t[0], t[1]))
        if r <= best:
            return
        cur, best = J, r
        yield cur

