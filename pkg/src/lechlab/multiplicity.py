"""Hilbert–Samuel multiplicity of monomial ideals.

Two independent routes: the finite-difference oracle on the colength
sequence of powers, and (in dimension two) twice the lattice-normalised area
of the region of the cone below the Newton polygon.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import DimensionUnsupported, InfiniteColength, NonIntegerResult, NotStabilized, ZeroIdeal
from .geometry import chain_area, newton_chain, ray_coordinates
from .ideals import MonomialIdeal, colength, is_m_primary, maximal_ideal, powers
from .rings import AmbientRing

WINDOW = 3


def default_n_max(d: int) -> int:
    return {1: 8, 2: 12, 3: 8}.get(d, d + 5)


@dataclass
class HilbertSamuelTrace:
    lengths: list[int]
    differences: list[list[int]] = field(default_factory=list)
    stabilized_at: int | None = None
    e_value: int | None = None


def difference_table(values: list[int], order: int) -> list[list[int]]:
    rows = [list(values)]
    for _ in range(order):
        prev = rows[-1]
        rows.append([b - a for a, b in zip(prev, prev[1:])])
    return rows


def hilbert_samuel_oracle(length_of_power, d: int, n_max: int) -> HilbertSamuelTrace:
    """Run the stabilisation rule on ``n -> length_of_power(n)`` (n = 1, 2, ...).

    ``length_of_power`` may also be an iterator of lengths.  The ``d``-th
    difference must repeat over ``WINDOW`` consecutive values.
    """
    if n_max < d + WINDOW:
        raise ValueError(f"n_max must be at least d + {WINDOW} = {d + WINDOW}, got {n_max}")
    source = iter(length_of_power) if not callable(length_of_power) else (
        length_of_power(n) for n in range(1, n_max + 1)
    )
    lengths: list[int] = []
    for n, ell in zip(range(1, n_max + 1), source):
        lengths.append(ell)
        if n < d + WINDOW:
            continue
        top = difference_table(lengths, d)[d]
        tail = top[-WINDOW:]
        if len(set(tail)) == 1:
            return HilbertSamuelTrace(lengths, difference_table(lengths, d), n, tail[0])
    trace = HilbertSamuelTrace(lengths, difference_table(lengths, d))
    raise NotStabilized(
        f"order-{d} differences not constant over {WINDOW} values by n = {n_max}; "
        f"retry with n_max = {2 * n_max}",
        trace,
    )


def _check_primary(I: MonomialIdeal):
    if I.is_zero:
        raise ZeroIdeal("multiplicity of the zero ideal is undefined")
    if I.is_unit or not is_m_primary(I):
        raise InfiniteColength(f"({I}) is not m-primary; multiplicity is undefined")


def multiplicity_oracle(I: MonomialIdeal, n_max: int | None = None) -> HilbertSamuelTrace:
    """``e(I)`` as the eventually constant ``d``-th difference of ``n -> ℓ(R/I^n)``."""
    _check_primary(I)
    d = I.dim
    if n_max is None:
        n_max = default_n_max(d)
    return hilbert_samuel_oracle((colength(P) for P in powers(I, n_max)), d, n_max)


def multiplicity(I: MonomialIdeal, n_max: int | None = None) -> int:
    return multiplicity_oracle(I, n_max).e_value


def newton_area_2d(I: MonomialIdeal) -> Fraction:
    """Euclidean area of the cone minus the Newton polygon of ``I``."""
    if I.dim != 2:
        raise DimensionUnsupported(f"Newton area needs d = 2, got d = {I.dim}")
    _check_primary(I)
    ring = I.ambient
    chain = newton_chain([ray_coordinates(ring, g) for g in I.gens])
    r1, r2 = ring.rays
    return chain_area(chain) * abs(r1[0] * r2[1] - r1[1] * r2[0])


def newton_multiplicity_2d(I: MonomialIdeal) -> int:
    """``e(I) = 2 * area / covolume`` for ``I`` m-primary in a 2D ring."""
    area = newton_area_2d(I)
    e = 2 * area / I.ambient.covolume
    if e.denominator != 1:
        raise NonIntegerResult(f"Newton multiplicity {e} of ({I}) is not an integer")
    return int(e)


@lru_cache(maxsize=None)
def ring_multiplicity(R: AmbientRing, n_max: int | None = None) -> int:
    """``e(R)``, the multiplicity of the maximal ideal."""
    if R.is_polynomial:
        return 1
    return multiplicity_oracle(maximal_ideal(R), n_max).e_value
