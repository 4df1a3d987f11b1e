"""Newton polyhedra, integral closure and m-fullness certificates."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .errors import HypothesisNotMet, InfiniteColength
from .geometry import facets_by_enumeration, newton_chain, oriented_rays, ray_coordinates
from .ideals import MonomialIdeal, complement, is_m_primary, min_gens_count, minimalize, variable_names
from .rings import AmbientRing, Vector, dot

M_FULL_BY_CLOSURE = "MFullByClosure"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class NewtonPolyhedron:
    """``conv(gens) + C`` as ``<a, x> >= c`` for each ``(a, c)`` plus the cone facets."""

    ambient: AmbientRing
    halfspaces: tuple[tuple[Vector, int], ...]

    @property
    def cone(self) -> tuple[Vector, ...]:
        return self.ambient.facets

    def __contains__(self, p) -> bool:
        return self.ambient.in_cone(p) and all(dot(a, p) >= c for a, c in self.halfspaces)

    def describe(self) -> list[str]:
        names = variable_names(self.ambient.dim)
        out = []
        for a, c in self.halfspaces:
            terms = [f"{'' if k == 1 else k}{n}" for k, n in zip(a, names) if k]
            out.append(" + ".join(terms).replace("+ -", "- ") + f" >= {c}")
        return out


def _facets_2d(I: MonomialIdeal) -> list[tuple[Vector, int]]:
    ring = I.ambient
    r1, r2 = oriented_rays(ring)
    D = r1[0] * r2[1] - r1[1] * r2[0]
    chain = newton_chain([ray_coordinates(ring, g) for g in I.gens])
    out = set()
    for (u0, v0), (u1, v1) in zip(chain, chain[1:]):
        # edge normal in ray coordinates, then pulled back: x = u*r1 + v*r2
        nu, nv = v0 - v1, u1 - u0
        c = nu * u0 + nv * v0
        # u = det(x, r2)/D and v = det(r1, x)/D are linear in x
        ax = (nu * r2[1] - nv * r1[1]) / D
        ay = (-nu * r2[0] + nv * r1[0]) / D
        den = 1
        for q in (ax, ay, c):
            den = den * q.denominator // math.gcd(den, q.denominator)
        a = (int(ax * den), int(ay * den))
        cc = int(c * den)
        g = math.gcd(math.gcd(abs(a[0]), abs(a[1])), abs(cc))
        out.add(((a[0] // g, a[1] // g), cc // g))
    return sorted(out)


def newton_polyhedron(I: MonomialIdeal) -> NewtonPolyhedron:
    if I.is_zero or I.is_unit or not is_m_primary(I):
        raise InfiniteColength(f"({I}) is not m-primary")
    ring = I.ambient
    if ring.dim == 2:
        hs = _facets_2d(I)
    else:
        hs = facets_by_enumeration(I.gens, ring.rays, ring.dim)
    return NewtonPolyhedron(ring, tuple(hs))


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    """Monomials whose exponents lie in the Newton polyhedron of ``I``.

    Only points of the (finite) complement can be added, so the search is
    confined to it.
    """
    NP = newton_polyhedron(I)
    extra = [p for p in complement(I) if p in NP]
    if not extra:
        return I
    return minimalize(list(I.gens) + extra, I.ambient)


def is_integrally_closed(I: MonomialIdeal) -> bool:
    return integral_closure(I) == I


@dataclass(frozen=True)
class FullnessCertificate:
    status: str
    witness: str | None = None

    @property
    def certified(self) -> bool:
        return self.status == M_FULL_BY_CLOSURE


def m_full_certificate(I: MonomialIdeal) -> FullnessCertificate:
    """m-fullness, certified only through integral closedness in dimension >= 2."""
    if I.dim < 2:
        return FullnessCertificate(UNKNOWN, "dimension below 2")
    closed = integral_closure(I)
    if closed == I:
        return FullnessCertificate(M_FULL_BY_CLOSURE, "integrally closed and m-primary")
    return FullnessCertificate(UNKNOWN, f"not integrally closed; closure is ({closed})")


@dataclass
class MonotonicityReport:
    ideal: MonomialIdeal
    mu: int
    pairs: list[tuple[MonomialIdeal, int]] = field(default_factory=list)
    violations: list[tuple[MonomialIdeal, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def watanabe_monotonicity_check(I: MonomialIdeal, samples: int, seed: int = 0) -> MonotonicityReport:
    """Sample ideals ``J ⊇ I`` and check ``μ(J) <= μ(I)`` for m-full ``I``."""
    cert = m_full_certificate(I)
    if not cert.certified:
        raise HypothesisNotMet(f"({I}) is not certified m-full: {cert.witness}")
    rng = random.Random(seed)
    pts = sorted(complement(I))
    mu = min_gens_count(I)
    report = MonotonicityReport(I, mu)
    for _ in range(samples):
        k = rng.randint(1, len(pts))
        J = minimalize(list(I.gens) + rng.sample(pts, k), I.ambient)
        nu = min_gens_count(J)
        report.pairs.append((J, nu))
        if nu > mu:
            report.violations.append((J, nu))
    return report
