"""Exact multiplicity computations and Lech-type inequality checks for monomial ideals."""

from .closure import (
    FullnessCertificate,
    NewtonPolyhedron,
    integral_closure,
    is_integrally_closed,
    m_full_certificate,
    newton_polyhedron,
    watanabe_monotonicity_check,
)
from .errors import LechError
from .ideals import (
    ComplementSet,
    MonomialIdeal,
    colength,
    colength_by_box,
    complement,
    contains,
    ideal,
    ideal_sum,
    is_m_primary,
    maximal_ideal,
    min_gens_count,
    minimalize,
    power,
    product,
)
from .inequalities import (
    check_colength_bound,
    check_dim2_mfull,
    check_dimd_generators,
    check_hanes,
    check_lech,
    evaluate,
    uniform_epsilon_report,
)
from .multiplicity import multiplicity, multiplicity_oracle, newton_multiplicity_2d, ring_multiplicity
from .rings import VERONESE, AmbientRing, parse_ring

__version__ = "0.1.0"
