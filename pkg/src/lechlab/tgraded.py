"""T-homogeneous ideals ``I_0 + I_1 T + ... + I_{K-1} T^{K-1} + T^K`` of ``R[T]``.

Components are monomial ideals of the base ring ``R`` forming an ascending
chain; every component of index ``>= K`` is the unit ideal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .closure import integral_closure
from .errors import BadGeneratorChoice, BaseMismatch, DimensionUnsupported, InvalidGenerator
from .ideals import (
    MonomialIdeal,
    colength,
    ideal_sum,
    is_m_primary,
    minimalize,
    member,
    product,
    unit_ideal,
    zero_ideal,
)
from .multiplicity import default_n_max, hilbert_samuel_oracle, multiplicity, ring_multiplicity
from .rings import AmbientRing, Vector

STAND_IN_NOTE = (
    "one-variable monomial base used as a stand-in for S/zS with z a generic "
    "hyperplane section; checks the length identities, not the generic-section statement"
)


@dataclass(frozen=True)
class TGradedIdeal:
    base: AmbientRing
    components: tuple[MonomialIdeal, ...]

    @property
    def K(self) -> int:
        return len(self.components)

    @property
    def dim(self) -> int:
        """Dimension of ``R[T]``."""
        return self.base.dim + 1

    def component(self, k: int) -> MonomialIdeal:
        if k < self.K:
            return self.components[k]
        return unit_ideal(self.base)

    def __mul__(self, other):
        return t_product(self, other)

    def __str__(self):
        parts = []
        for k, I in enumerate(self.components):
            t = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
            parts.append(f"({I})" + (f"*{t}" if t else ""))
        parts.append("T" if self.K == 1 else f"T^{self.K}")
        return " + ".join(parts)


def tgraded(base: AmbientRing, components: Sequence[MonomialIdeal | Sequence[Sequence[int]]]) -> TGradedIdeal:
    """Build and validate a T-graded ideal from its components ``I_0..I_{K-1}``."""
    comps = []
    for c in components:
        if isinstance(c, MonomialIdeal):
            if c.ambient != base:
                raise BaseMismatch(f"component in {c.ambient.spec()}, base is {base.spec()}")
            comps.append(c)
        else:
            comps.append(minimalize(c, base))
    if not comps:
        raise InvalidGenerator("a T-graded ideal needs K >= 1 components")
    for k, (a, b) in enumerate(zip(comps, comps[1:])):
        if not a <= b:
            raise InvalidGenerator(f"components {k} and {k + 1} do not form an ascending chain")
    if comps[0].is_zero or not is_m_primary(comps[0]):
        raise InvalidGenerator("component I_0 must be m-primary")
    if comps[-1].is_unit:
        raise InvalidGenerator("component I_{K-1} must not be the unit ideal")
    return TGradedIdeal(base, tuple(comps))


def _normalize(base: AmbientRing, comps: list[MonomialIdeal]) -> TGradedIdeal:
    for k, c in enumerate(comps):
        if c.is_unit:
            comps = comps[:k]
            break
    return TGradedIdeal(base, tuple(comps))


def t_product(I: TGradedIdeal, J: TGradedIdeal) -> TGradedIdeal:
    """Convolution ``(IJ)_k = sum_{i+j=k} I_i J_j``, trimmed at the first unit component."""
    if I.base != J.base:
        raise BaseMismatch(f"bases {I.base.spec()} and {J.base.spec()} differ")
    base = I.base
    comps = []
    for k in range(I.K + J.K):
        acc = zero_ideal(base)
        # terms outside this window are contained in its endpoints (ascending chains)
        for i in range(max(0, k - J.K), min(k, I.K) + 1):
            term = product(I.component(i), J.component(k - i))
            acc = term if acc.is_zero else ideal_sum(acc, term)
            if acc.is_unit:
                break
        comps.append(acc)
    return _normalize(base, comps)


def t_powers(I: TGradedIdeal, n_max: int) -> Iterator[TGradedIdeal]:
    cur = I
    for n in range(1, n_max + 1):
        if n > 1:
            cur = t_product(cur, I)
        yield cur


def t_power(I: TGradedIdeal, n: int) -> TGradedIdeal:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"power needs a positive integer exponent, got {n!r}")
    for P in t_powers(I, n):
        pass
    return P


def t_length(I: TGradedIdeal) -> int:
    return sum(colength(c) for c in I.components)


@dataclass(frozen=True)
class MinGensReport:
    mu: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.mu <= self.bound

    @property
    def tight(self) -> bool:
        return self.mu == self.bound


def minimal_generators(I: TGradedIdeal) -> list[tuple[Vector, int]]:
    """Minimal monomial generators ``u T^k``: ``u`` minimal in ``I_k`` and not in ``I_{k-1}``."""
    out = []
    for k in range(I.K + 1):
        comp = I.component(k)
        prev = I.component(k - 1) if k > 0 else None
        for g in comp.gens:
            if prev is None or not member(prev, g):
                out.append((g, k))
    return out


def t_min_gens(I: TGradedIdeal) -> MinGensReport:
    I0 = I.components[0]
    return MinGensReport(len(minimal_generators(I)), len(I0.gens) + colength(I0))


def monomial_model(I: TGradedIdeal) -> MonomialIdeal:
    """The same ideal as a monomial ideal of the ring ``R[T]`` (T last)."""
    base = I.base
    d = base.dim
    if base.is_polynomial:
        ring = AmbientRing.polynomial(d + 1)
    else:
        ring = AmbientRing.semigroup([g + (0,) for g in base.generators] + [(0,) * d + (1,)])
    return minimalize([g + (k,) for g, k in minimal_generators(I)], ring)


def t_multiplicity_trace(I: TGradedIdeal, n_max: int | None = None):
    d = I.dim
    if n_max is None:
        n_max = default_n_max(d)
    return hilbert_samuel_oracle((t_length(P) for P in t_powers(I, n_max)), d, n_max)


def t_multiplicity(I: TGradedIdeal, n_max: int | None = None) -> int:
    return t_multiplicity_trace(I, n_max).e_value


@dataclass
class DoubleGradedReport:
    t_length: int
    component_sum: int
    model_colength: int
    e: int
    closure_t_length: int
    closure_e: int

    @property
    def lengths_match(self) -> bool:
        return self.t_length == self.component_sum == self.model_colength

    @property
    def holds(self) -> bool:
        return self.lengths_match and self.closure_e == self.e and self.closure_t_length <= self.t_length


def double_graded_decomposition_check(I: TGradedIdeal, n_max: int | None = None) -> DoubleGradedReport:
    """Length bookkeeping for ``in(I) = sum in(I_k) T^k``, plus the componentwise-closure variant.

    For monomial components the initial ideal of each ``I_k`` is ``I_k`` itself.
    Replacing every component by its integral closure keeps the chain ascending,
    cannot raise ``e`` and cannot raise the length.
    """
    closed = _normalize(I.base, [integral_closure(c) for c in I.components])
    return DoubleGradedReport(
        t_length=t_length(I),
        component_sum=sum(colength(c) for c in I.components),
        model_colength=colength(monomial_model(I)),
        e=t_multiplicity(I, n_max),
        closure_t_length=t_length(closed),
        closure_e=t_multiplicity(closed, n_max),
    )


@dataclass
class MumfordReport:
    e: int
    length: int
    component_e: list[int]
    component_lengths: list[int]
    lhs: Fraction
    mid: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs <= self.mid <= self.rhs


def mumford_chain_check(I: TGradedIdeal, n_max: int | None = None) -> MumfordReport:
    """``e(I)/((d+1)! ℓ) <= Σ e(I_k)/(d! Σ ℓ_k) <= max_k e(I_k)/(d! ℓ_k)``, exactly."""
    d = I.base.dim
    e = t_multiplicity(I, n_max)
    ell = t_length(I)
    es = [multiplicity(c) for c in I.components]
    ls = [colength(c) for c in I.components]
    return MumfordReport(
        e=e,
        length=ell,
        component_e=es,
        component_lengths=ls,
        lhs=Fraction(e, math.factorial(d + 1) * ell),
        mid=Fraction(sum(es), math.factorial(d) * sum(ls)),
        rhs=max(Fraction(a, math.factorial(d) * b) for a, b in zip(es, ls)),
    )


# -- bracket powers ---------------------------------------------------------


@dataclass
class BracketPowerTrace:
    generators: list[tuple[Vector, int]]
    N: int
    q_values: list[int] = field(default_factory=list)
    lengths: list[int] = field(default_factory=list)
    formula_lengths: list[int] = field(default_factory=list)
    surjection: list[dict] = field(default_factory=list)
    ratios: list[Fraction] = field(default_factory=list)
    limit_estimate: Fraction | None = None
    target: int = 0
    e_J: int = 0
    lower_bound: Fraction | None = None
    frq_bound: int = 0
    note: str = STAND_IN_NOTE

    @property
    def identity_holds(self) -> bool:
        return self.lengths == self.formula_lengths

    @property
    def surjection_holds(self) -> bool:
        return all(row["holds"] for row in self.surjection)

    @property
    def lower_bound_holds(self) -> bool:
        return self.lower_bound <= self.limit_estimate

    @property
    def frq_holds(self) -> bool:
        return self.target <= self.frq_bound

    @property
    def holds(self) -> bool:
        return self.identity_holds and self.surjection_holds and self.lower_bound_holds and self.frq_holds


def _generated(base: AmbientRing, gens: Sequence[tuple[Vector, int]], k: int) -> MonomialIdeal:
    return minimalize([a for a, j in gens if j <= k], base) if any(j <= k for _, j in gens) else zero_ideal(base)


def bracket_power(J: TGradedIdeal, gens: Sequence[tuple[Vector, int]], q: int) -> TGradedIdeal:
    """``J^[q]``: generated by ``a^q T^{jq}`` over the chosen generators ``a T^j``."""
    powered = [(tuple(q * x for x in a), q * j) for a, j in gens]
    K = min(j for a, j in powered if not any(a))
    return TGradedIdeal(J.base, tuple(_generated(J.base, powered, k) for k in range(K)))


def check_generator_choice(J: TGradedIdeal, gens: Sequence[tuple[Vector, int]]):
    base = J.base
    for a, j in gens:
        if len(a) != base.dim or not base.contains(a) or j < 0:
            raise BadGeneratorChoice(f"{list(a)}*T^{j} is not a monomial of {base.spec()}[T]")
    for k in range(J.K + 1):
        got = _generated(base, gens, k)
        if got != J.component(k):
            raise BadGeneratorChoice(
                f"chosen generators give ({got}) in T-degree {k}, expected ({J.component(k)})"
            )


def bracket_power_experiment(
    J: TGradedIdeal,
    generators: Sequence[tuple[Sequence[int], int]] | None = None,
    q_list: Sequence[int] = (2, 4, 8, 16, 32),
) -> BracketPowerTrace:
    """Bracket-power length identities and bounds over a one-dimensional base."""
    if J.base.dim != 1:
        raise DimensionUnsupported(f"bracket powers need a 1-dimensional base, got d = {J.base.dim}")
    if generators is None:
        gens = minimal_generators(J)
    else:
        gens = [(tuple(int(x) for x in a), int(j)) for a, j in generators]
    check_generator_choice(J, gens)
    N = len(gens)
    if N < 2:
        raise BadGeneratorChoice("need at least two generators")
    e_J = t_multiplicity(J)
    trace = BracketPowerTrace(generators=gens, N=N, e_J=e_J)
    trace.target = sum(multiplicity(c) for c in J.components)
    trace.frq_bound = ring_multiplicity(J.base) * t_length(J)
    trace.lower_bound = Fraction(e_J, 2) * (1 + Fraction(1, 2 * N - 3))
    cache: dict[int, int] = {}

    def power_length(n):
        if n not in cache:
            cache[n] = t_length(t_power(J, n))
        return cache[n]

    for q in q_list:
        Jq = bracket_power(J, gens, q)
        direct = t_length(Jq)
        formula = q * sum(colength(_generated(J.base, [(tuple(q * x for x in a), j) for a, j in gens], i))
                          for i in range(J.K))
        s = -(-q // (2 * N - 3))
        rhs = power_length(q + s) - 2 * (N - 1) * power_length(s)
        trace.q_values.append(q)
        trace.lengths.append(direct)
        trace.formula_lengths.append(formula)
        trace.surjection.append({"q": q, "s": s, "lhs": direct, "rhs": rhs, "holds": direct >= rhs})
        trace.ratios.append(Fraction(direct, q * q))
    trace.limit_estimate = trace.ratios[-1]
    return trace
