"""Exact log-canonical thresholds of monomial ideals, the blow-up chart
calculus over a curve in a threefold, surface Zariski decomposition and the
algebraic holomorphic Morse bounds."""

from .blowup import (
    BlowupSequence,
    CenterSpec,
    NormalFormIdeal,
    TermIdeal,
    chart_term_ideal,
    compose_charts,
    enumerate_paths,
    prune_minimality,
    pushforward_lelong_verdict,
    reduce_symbolic,
)
from .errors import (
    InputError,
    InvalidCurveConfiguration,
    MathematicalError,
    NotPseudoEffective,
    ReductionStuck,
    ThresholdUndefined,
)
from .exact import LPResult, is_negative_definite, lp_solve, parse_rational, render_rational
from .intersection import ClassBasis, DivisorClass, IntersectionForm, intersect, power_pair
from .morse import (
    BoundReport,
    MorseComponent,
    MorseInput,
    nef_case_bound,
    second_formulation_bound,
    strong_morse_bound,
    surface_morse,
    trapani_s1_bound,
)
from .newton import (
    LctReport,
    MonomialIdeal,
    NewtonPolyhedron,
    contains,
    diagonal_parameter,
    direct_sum,
    interior_contains,
    lct,
    multiplier_ideal_monomials,
    newton_polyhedron,
)
from .sublevel import sublevel_volume_oracle
from .zariski import (
    SurfaceData,
    ZariskiDecomposition,
    nef_criterion,
    positive_product,
    verify_q1_decomposition,
    zariski_decompose,
)

__version__ = "0.1.0"
