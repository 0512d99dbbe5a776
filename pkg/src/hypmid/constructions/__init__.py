"""Compass-and-ruler midpoint constructions, diagnostics, and dispatch."""

from .disk import (
    DISK_METHODS,
    UNIT_CIRCLE,
    PointChain,
    b2_case1,
    b2_equal_moduli,
    b2_method_I,
    b2_methods_II_to_VI,
    bisector_circle,
    scale_sequence,
)
from .dispatch import H2_METHODS, METHOD_NAMES, ORACLE_FLAG_THRESHOLD, midpoint
from .halfplane import AXIS, h2_case1, h2_method_I, h2_method_II, h2_method_III, h2_method_IV
from .reports import (
    CONDITION_NOT_MET,
    FAIL,
    PASS,
    Claim,
    DiagnosticsReport,
    OrthogonalityCheck,
    lemma31_report,
    lemma46_report,
    prop47_report,
    prop48_orthogonality,
    semicircle_residual,
)
from .trace import (
    ConstructionStep,
    ConstructionTrace,
    MidpointResult,
    TraceBuilder,
    replay,
)

__all__ = [
    "AXIS",
    "CONDITION_NOT_MET",
    "Claim",
    "ConstructionStep",
    "ConstructionTrace",
    "DISK_METHODS",
    "DiagnosticsReport",
    "FAIL",
    "H2_METHODS",
    "METHOD_NAMES",
    "MidpointResult",
    "ORACLE_FLAG_THRESHOLD",
    "OrthogonalityCheck",
    "PASS",
    "PointChain",
    "TraceBuilder",
    "UNIT_CIRCLE",
    "b2_case1",
    "b2_equal_moduli",
    "b2_method_I",
    "b2_methods_II_to_VI",
    "bisector_circle",
    "h2_case1",
    "h2_method_I",
    "h2_method_II",
    "h2_method_III",
    "h2_method_IV",
    "lemma31_report",
    "lemma46_report",
    "midpoint",
    "prop47_report",
    "prop48_orthogonality",
    "replay",
    "scale_sequence",
    "semicircle_residual",
]
