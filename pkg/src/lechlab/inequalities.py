"""Exact-rational evaluation of Lech-type bounds on monomial ideals.

Every bound is expressed on the ratio scale ``e(I) / (d! ℓ(R/I))``: a bound
with constant ``c`` asserts ``ratio <= c``, equivalently
``e(I) <= d! * c * ℓ(R/I)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .closure import m_full_certificate
from .errors import DimensionUnsupported, HypothesisNotMet
from .ideals import MonomialIdeal, colength, maximal_ideal, min_gens_count, power
from .multiplicity import multiplicity, ring_multiplicity
from .rings import AmbientRing

LECH = "Lech"
LECH_STRICT = "LechStrict"
HANES = "HanesC"
DIM2_MFULL = "Dim2MFull"
DIMD_GENERATORS = "DimDGenerators"
COLENGTH = "ColengthBound"
UNIFORM = "UniformLechEpsilon"

# command-line names
BOUND_ALIASES = {
    "lech": LECH,
    "hanes": HANES,
    "mfull2": DIM2_MFULL,
    "dimd": DIMD_GENERATORS,
    "colength": COLENGTH,
}

ROOT_DENOMINATOR = 10**6


@dataclass(frozen=True)
class IdealStats:
    ideal: MonomialIdeal
    e: int
    ell: int
    mu: int
    e_R: int

    @property
    def d(self) -> int:
        return self.ideal.dim

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.e, math.factorial(self.d) * self.ell)


def ideal_stats(I: MonomialIdeal, n_max: int | None = None) -> IdealStats:
    return IdealStats(I, multiplicity(I, n_max), colength(I), min_gens_count(I), ring_multiplicity(I.ambient))


@dataclass(frozen=True)
class BoundResult:
    name: str
    constant: Fraction | None
    hypothesis_met: bool
    satisfied: bool | None = None
    tight: bool = False
    strict: bool | None = None
    note: str = ""

    def bound_value(self, stats: IdealStats) -> Fraction | None:
        """The bound on the ``e`` scale, ``d! * constant * ℓ``."""
        if self.constant is None:
            return None
        return math.factorial(stats.d) * self.constant * stats.ell


@dataclass
class RatioReport:
    stats: IdealStats
    bounds: list[BoundResult] = field(default_factory=list)

    @property
    def ideal(self) -> MonomialIdeal:
        return self.stats.ideal

    @property
    def violations(self) -> list[BoundResult]:
        return [b for b in self.bounds if b.hypothesis_met and not b.satisfied]

    @property
    def rejections(self) -> list[BoundResult]:
        return [b for b in self.bounds if not b.hypothesis_met]

    @property
    def passed(self) -> bool:
        return not self.violations


def _compare(name, stats: IdealStats, constant: Fraction, note="") -> BoundResult:
    ratio = stats.ratio
    return BoundResult(
        name=name,
        constant=constant,
        hypothesis_met=True,
        satisfied=ratio <= constant,
        tight=ratio == constant,
        strict=ratio < constant,
        note=note,
    )


def _stats(I, stats, n_max):
    return stats if stats is not None else ideal_stats(I, n_max)


def check_lech(I: MonomialIdeal, stats: IdealStats | None = None, n_max=None) -> BoundResult:
    """``e(I) <= d! e(R) ℓ(R/I)``, required strict when ``d >= 2``."""
    s = _stats(I, stats, n_max)
    r = _compare(LECH, s, Fraction(s.e_R))
    if s.d >= 2:
        return BoundResult(LECH, r.constant, True, bool(r.strict), r.tight, r.strict,
                           f"strict={str(r.strict).lower()}")
    return r


def nth_root_upper(N: int, k: int, denominator: int = ROOT_DENOMINATOR) -> Fraction:
    """Smallest ``p / denominator`` with ``(p / denominator)^k >= N``; exact when ``N`` is a perfect power."""
    if k == 1:
        return Fraction(N)
    r = round(N ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand > 0 and cand**k == N:
            return Fraction(cand)
    lo, hi = 0, N * denominator
    target = N * denominator**k
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k >= target:
            hi = mid
        else:
            lo = mid + 1
    return Fraction(lo, denominator)


def hanes_constant(N: int, d: int) -> Fraction:
    """``(1 - 1/N^{1/(d-1)})^{d-1}``, rounded up via a rational root when irrational."""
    root = nth_root_upper(N, d - 1)
    return (1 - 1 / root) ** (d - 1)


def check_hanes(I: MonomialIdeal, N: int | None = None, stats: IdealStats | None = None, n_max=None) -> BoundResult:
    s = _stats(I, stats, n_max)
    if s.d < 2:
        raise DimensionUnsupported("the fixed-generator bound needs d >= 2")
    N = s.mu if N is None else N
    if N < s.mu or N < s.d:
        raise HypothesisNotMet(f"need mu(I) = {s.mu} <= N = {N} and N >= d = {s.d}")
    c = hanes_constant(N, s.d)
    exact = nth_root_upper(N, s.d - 1).denominator == 1
    r = _compare(HANES, s, c * s.e_R, f"N={N}" + ("" if exact else "; conservative rational root"))
    if r.tight:
        r = BoundResult(r.name, r.constant, True, True, True, False, r.note + "; tight")
    return r


def _require_m_full(I: MonomialIdeal):
    cert = m_full_certificate(I)
    if not cert.certified:
        raise HypothesisNotMet(f"({I}) is not certified m-full: {cert.witness}")


def dim2_constant(N: int) -> Fraction:
    return 1 - Fraction(1, 2 * N - 2)


def check_dim2_mfull(I: MonomialIdeal, stats: IdealStats | None = None, n_max=None) -> BoundResult:
    if I.dim != 2:
        raise DimensionUnsupported(f"this bound is for d = 2, got d = {I.dim}")
    _require_m_full(I)
    s = _stats(I, stats, n_max)
    return _compare(DIM2_MFULL, s, dim2_constant(s.mu) * s.e_R, f"N={s.mu}")


def dimd_constant(N: int, d: int) -> Fraction:
    return 1 - Fraction(1, math.factorial(d - 1) * N)


def check_dimd_generators(I: MonomialIdeal, stats: IdealStats | None = None, n_max=None) -> BoundResult:
    if I.dim <= 2:
        raise DimensionUnsupported(f"this bound is for d > 2, got d = {I.dim}")
    _require_m_full(I)
    s = _stats(I, stats, n_max)
    return _compare(DIMD_GENERATORS, s, dimd_constant(s.mu, s.d) * s.e_R, f"N={s.mu}")


def colength_constant(N: int, d: int) -> Fraction:
    return 1 - Fraction(1, math.factorial(d) * N)


def check_colength_bound(I: MonomialIdeal, stats: IdealStats | None = None, n_max=None) -> BoundResult:
    if I.dim < 2:
        raise DimensionUnsupported("the colength bound needs d >= 2")
    s = _stats(I, stats, n_max)
    return _compare(COLENGTH, s, colength_constant(s.ell, s.d) * s.e_R, f"N={s.ell}")


CHECKS = {
    LECH: check_lech,
    HANES: check_hanes,
    DIM2_MFULL: check_dim2_mfull,
    DIMD_GENERATORS: check_dimd_generators,
    COLENGTH: check_colength_bound,
}


def evaluate(I: MonomialIdeal, bounds: Iterable[str] = (LECH,), n_max=None) -> RatioReport:
    """Run the named checks; unmet hypotheses are recorded, not raised."""
    s = ideal_stats(I, n_max)
    report = RatioReport(s)
    for name in bounds:
        name = BOUND_ALIASES.get(name, name)
        try:
            report.bounds.append(CHECKS[name](I, stats=s))
        except (HypothesisNotMet, DimensionUnsupported) as exc:
            report.bounds.append(BoundResult(name, None, False, None, note=f"{exc.kind}: {exc}"))
    return report


@dataclass
class UniformEpsilonReport:
    ring: AmbientRing
    e_R: int
    epsilon: Fraction
    max_ratio: Fraction
    argmax: MonomialIdeal
    count: int
    curve: list[tuple[int, Fraction]]

    @property
    def holds(self) -> bool:
        return self.epsilon > 0


def uniform_epsilon_report(ring: AmbientRing, ideals: Iterable[MonomialIdeal], n_max=None) -> UniformEpsilonReport:
    """``ε = e(R) - max e(I)/(d! ℓ)`` over the given ideals, with the per-colength maxima."""
    e_R = ring_multiplicity(ring)
    if e_R <= 1:
        raise HypothesisNotMet(f"e(R) = {e_R}; uniform improvement needs e(R) > 1")
    best = None
    per_colength: dict[int, Fraction] = {}
    count = 0
    for I in ideals:
        s = ideal_stats(I, n_max)
        count += 1
        if best is None or s.ratio > best.ratio:
            best = s
        per_colength[s.ell] = max(per_colength.get(s.ell, Fraction(0)), s.ratio)
    if best is None:
        raise ValueError("no ideals given")
    s = best
    return UniformEpsilonReport(ring, e_R, e_R - s.ratio, s.ratio, s.ideal, count, sorted(per_colength.items()))


def max_power_curve(ring: AmbientRing, n_values: Iterable[int]) -> list[dict]:
    """Ratios of ``m^n``; in a regular ring they approach ``e(R) = 1``."""
    m = maximal_ideal(ring)
    rows = []
    for n in n_values:
        s = ideal_stats(power(m, n))
        rows.append({"n": n, "e": s.e, "colength": s.ell, "ratio": s.ratio})
    return rows
