"""Codimension calculus for loci of hypersurface tuples with excess
intersection, the derived results on singular hypersurfaces and lines through
points, and an independent finite-field oracle for checking the predictions
on small instances."""

from .combinatorics import INF, ExtInt, binomial, h_min
from .errors import BudgetError, InvariantError, ParameterError
from .strata import (
    AnalysisReport,
    ProblemSpec,
    StratumBound,
    analyze_spans,
    f_lower,
    g_lower,
    h_gap,
    kcl_cone_min,
    nr_hypothesis,
    slope_gap,
    span_stratum_exact,
    worked_example,
)
from .applications import (
    LinesVerdict,
    SingularThresholdReport,
    char2_threshold_report,
    e1_bound,
    lines_verdict,
    primed_span_bound,
    prop2r1_report,
    rnc_singular_conditions,
    rnc_stratum_codim_lower,
    singular_line_codim,
)
from . import fforacle

__version__ = "0.1.0"

__all__ = [
    "INF",
    "ExtInt",
    "binomial",
    "h_min",
    "BudgetError",
    "InvariantError",
    "ParameterError",
    "AnalysisReport",
    "ProblemSpec",
    "StratumBound",
    "analyze_spans",
    "f_lower",
    "g_lower",
    "h_gap",
    "kcl_cone_min",
    "nr_hypothesis",
    "slope_gap",
    "span_stratum_exact",
    "worked_example",
    "LinesVerdict",
    "SingularThresholdReport",
    "char2_threshold_report",
    "e1_bound",
    "lines_verdict",
    "primed_span_bound",
    "prop2r1_report",
    "rnc_singular_conditions",
    "rnc_stratum_codim_lower",
    "singular_line_codim",
    "fforacle",
    "__version__",
]
