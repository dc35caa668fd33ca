"""Exact invariants and equisingularity verdicts for finitely determined
map germs (C^2,0) -> (C^3,0) and their one-parameter unfoldings."""

from .config import AnalysisConfig
from .errors import (
    ColengthUndecided,
    CorankPathUnavailable,
    CrossCheckMismatch,
    MapGermError,
    NotACurve,
    NotFinitelyDetermined,
    ParseError,
    PoleAtSample,
    SpecError,
    TripleSchemeAnomaly,
)
from .family import FamilyVerdict, family_verdict, generic_report, specialize
from .gb import (
    INFINITE,
    GroebnerBasis,
    elimination_ideal,
    groebner_basis,
    is_finite,
    local_colength,
    normal_form,
)
from .germ import CorankData, MapGerm, Unfolding, corank, validate_map_germ
from .invariants import (
    InvariantReport,
    crosscap_count,
    invariant_report,
    milnor_plane_curve,
    multiplicity_m0,
    triple_point_count,
)
from .multipt import (
    AlphaMatrix,
    Corank1D2,
    Corank1D3,
    DoublePointIdeal,
    PlaneCurve,
    alpha_matrix,
    corank1_d2_ideal,
    corank1_d3_ideal,
    d2_plane_curve,
    double_point_ideal,
)
from .parser import GermSpec, load_germ_file, load_germ_spec, parse_polynomial
from .poly import (
    divided_difference,
    resultant_univar,
    squarefree_part,
    strip_unit_factors,
)
from .rings import Ideal, Ring, T, X, XP, Y, Y1, Y2, Y3, YP

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
