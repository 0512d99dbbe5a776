"""Single entry point for midpoint construction with method dispatch.

``auto`` picks the method with the fewest inapplicability cases for the
detected configuration; explicit methods run as requested or raise
:class:`MethodInapplicable`.  Every result is cross-checked against the
bisection oracle and the Euclidean distance between the two is attached.
"""

from __future__ import annotations

import dataclasses

from ..errors import MethodInapplicable
from ..geom2d import DEFAULT_TOL, Point2, Tolerance
from ..hypmetric import Model, midpoint_disk_angles, midpoint_oracle, require_in_domain
from . import disk, halfplane
from .trace import MidpointResult, TraceBuilder, make_midpoint_result

ORACLE_FLAG_THRESHOLD = 1e-8

H2_METHODS = {
    "case1": halfplane.h2_case1,
    "I": halfplane.h2_method_I,
    "II": halfplane.h2_method_II,
    "III": halfplane.h2_method_III,
    "IV": halfplane.h2_method_IV,
}

METHOD_NAMES = ("auto", "case1", "equal", "I", "II", "III", "IV", "V", "VI", "angles")


def _angles_result(x: Point2, y: Point2, tol: Tolerance) -> MidpointResult:
    # closed-form method: record the carrier for rendering, then the formula z
    z = midpoint_disk_angles(x, y, tol)
    b = TraceBuilder(Model.DISK, "b2-angles", {"x": x, "y": y, "unit": disk.UNIT_CIRCLE}, tol)
    b.circle_ortho_xy("x", "y", "carrier", "S¹(a,r_a)")
    b.env["z"] = z
    return make_midpoint_result(b, x, y, "z")


def _run_b2(x: Point2, y: Point2, method: str, tol: Tolerance) -> MidpointResult:
    if method == "case1":
        return disk.b2_case1(x, y, tol)
    if method == "equal":
        return disk.b2_equal_moduli(x, y, tol)
    if method == "angles":
        return _angles_result(x, y, tol)
    if method in disk.DISK_METHODS:
        if abs(x.norm() - y.norm()) <= tol.eps_degenerate:
            # Eq-(4.4)-style methods divide by |y|^2 - |x|^2; refuse and hand
            # the caller the equal-moduli construction instead.
            fallback = disk.b2_equal_moduli(x, y, tol)
            raise MethodInapplicable(
                "EqualModuli",
                f"|x| = |y|: method {method} degenerates; use the equal-moduli construction",
                fallback=fallback,
            )
        if method == "I":
            return disk.b2_method_I(x, y, tol)
        return disk.b2_methods_II_to_VI(x, y, method, tol)
    raise ValueError(f"unknown disk method {method!r}; expected one of {METHOD_NAMES}")


def midpoint(
    model: Model,
    x: Point2,
    y: Point2,
    method: str = "auto",
    tol: Tolerance = DEFAULT_TOL,
) -> MidpointResult:
    """Construct the hyperbolic midpoint of the segment from x to y.

    Returns the construction result with ``oracle_distance`` filled in; a
    distance above 1e-8 marks a disagreement with the independent bisection
    oracle (see :attr:`MidpointResult.oracle_distance`).
    """
    require_in_domain(model, x, y)
    scale = 1.0 + x.norm() + y.norm()
    if model is Model.HALF_PLANE:
        if method == "auto":
            method = "case1" if abs(x.x1 - y.x1) <= tol.eps_degenerate * scale else "III"
        runner = H2_METHODS.get(method)
        if runner is None:
            raise ValueError(f"unknown half-plane method {method!r}; expected auto, case1 or I..IV")
        result = runner(x, y, tol)
    else:
        if method == "auto":
            if abs(x.cross(y)) / (1.0 + x.norm() * y.norm()) <= tol.eps_degenerate:
                method = "case1"
            elif abs(x.norm() - y.norm()) <= tol.eps_degenerate:
                method = "equal"
            else:
                method = "I"
        result = _run_b2(x, y, method, tol)
    oracle = midpoint_oracle(model, x, y, tol)
    return dataclasses.replace(result, oracle_distance=(result.z - oracle).norm())
