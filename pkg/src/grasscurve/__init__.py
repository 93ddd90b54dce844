"""Exact analysis of rational curves in the Grassmannian G(d, 2d)."""

from .curve import Chart, ChartMap, CurveError, HomogeneousCurve, chart_map, load_curve, parse_curve, saturate
from .group import GroupElement, Moebius2
from .morita import (
    CurveReport,
    MoritaVerdict,
    Reason,
    analyze,
    check_hypotheses,
    decide_morita,
    morita_curve,
    recover_group_element,
    verify_equivalence,
)
from .parsing import ParseError
from .pluecker import PlueckerVector, klein_quadric_residual, morita_plane_residuals, pluecker_degree, pluecker_vector
from .schwarzian import SchwarzianTensor, sigma, sigma_matrix
from .splitting import SplittingType, minimal_basis, splitting_type, width

__version__ = "0.1.0"
