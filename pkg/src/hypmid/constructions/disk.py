"""Disk midpoint constructions: diameter case, bisector-circle method, the
five chord methods through an auxiliary point, the equal-moduli case, and the
distance-multiplying chord chain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import (
    ChainSaturated,
    CollinearWithOrigin,
    DegenerateInput,
    EqualModuli,
    MethodInapplicable,
    NotOnDiameter,
    ParallelLines,
)
from ..geom2d import (
    DEFAULT_TOL,
    IN_DISK,
    ORIGIN,
    Circle2,
    Point2,
    Tolerance,
    nearest_to,
)
from ..hypmetric import Model, geodesic_of, require_in_domain, rho_disk
from .trace import ConstructionTrace, MidpointResult, TraceBuilder, make_midpoint_result

UNIT_CIRCLE = Circle2(ORIGIN, 1.0)

DISK_METHODS = ("I", "II", "III", "IV", "V", "VI")

# auxiliary point of each chord method: (label, endpoint names of the two chords)
_METHOD_CHORDS = {
    "II": ("u", ("x", "ysup"), ("y", "xsup")),
    "III": ("v", ("x", "xsub"), ("y", "ysub")),
    "IV": ("s", ("x", "ysub"), ("y", "xsub")),
    "V": ("t", ("xsub", "ysup"), ("ysub", "xsup")),
    "VI": ("k", ("xsub", "xsup"), ("ysub", "ysup")),
}


def _builder(method_id: str, x: Point2, y: Point2, tol: Tolerance) -> TraceBuilder:
    return TraceBuilder(Model.DISK, method_id, {"x": x, "y": y, "unit": UNIT_CIRCLE, "origin": ORIGIN}, tol)


def _check_pair(x: Point2, y: Point2, tol: Tolerance) -> None:
    require_in_domain(Model.DISK, x, y)
    if (x - y).norm() <= tol.eps_degenerate * (1.0 + x.norm() + y.norm()):
        raise DegenerateInput(f"midpoint needs distinct points, got {x} ~ {y}")


def _collinearity_margin(x: Point2, y: Point2) -> float:
    return abs(x.cross(y)) / (1.0 + x.norm() * y.norm())


def _check_generic(x: Point2, y: Point2, tol: Tolerance) -> None:
    """Preconditions shared by the bisector circle and methods I-VI."""
    _check_pair(x, y, tol)
    if x.norm() <= tol.eps_degenerate or y.norm() <= tol.eps_degenerate:
        raise CollinearWithOrigin("x and y must be nonzero")
    if _collinearity_margin(x, y) <= tol.eps_degenerate:
        raise CollinearWithOrigin(f"0, {x}, {y} are collinear")
    if abs(x.norm() - y.norm()) <= tol.eps_degenerate:
        raise EqualModuli(f"|x| = |y| = {x.norm()!r}; the bisector circle degenerates")


def bisector_circle(x: Point2, y: Point2, tol: Tolerance = DEFAULT_TOL) -> tuple[Point2, float]:
    """Center and radius of the circle orthogonal to both S1 and S(a, r_a).

    w = (y(1-|x|^2) - x(1-|y|^2)) / (|y|^2 - |x|^2),
    r_w = |x-y| sqrt((1-|x|^2)(1-|y|^2)) / ||y|^2 - |x|^2|.
    Its intersection with the geodesic carrier is the hyperbolic midpoint.
    """
    _check_generic(x, y, tol)
    nx2, ny2 = x.norm_sq(), y.norm_sq()
    den = ny2 - nx2
    w = (y * (1.0 - nx2) - x * (1.0 - ny2)) * (1.0 / den)
    r_w = (x - y).norm() * math.sqrt((1.0 - nx2) * (1.0 - ny2)) / abs(den)
    return w, r_w


def _ideal_endpoint_refs(b: TraceBuilder, x: Point2, y: Point2) -> None:
    """Record x_*, y_* = carrier n S1 ordered so x_*, x, y, y_* follow the arc."""
    g = geodesic_of(Model.DISK, x, y, b.tol)
    xsub, ysub = g.ideal_endpoints
    b.intersect_unit_ortho("carrier", nearest_to(xsub), "xsub", "x_*")
    b.intersect_unit_ortho("carrier", nearest_to(ysub), "ysub", "y_*")


def b2_case1(x: Point2, y: Point2, tol: Tolerance = DEFAULT_TOL) -> MidpointResult:
    """Diameter case: z = L(m, n-bar) n L(m-bar, n) with chords at x and y.

    m, m-bar (and n, n-bar) are the unit-circle points of the chords through
    x (and y) perpendicular to the diameter; same-side points are paired.
    """
    _check_pair(x, y, tol)
    if _collinearity_margin(x, y) > tol.eps_degenerate:
        raise NotOnDiameter(f"0, {x}, {y} are not collinear")
    b = _builder("b2-case1", x, y, tol)
    ld = b.line("x", "y", "Ld", "L(x,y)")
    side = ld.n  # unit normal; chord roots sit at +/- this direction
    b.perpendicular("Ld", "x", "Lx", "L(x)")
    b.perpendicular("Ld", "y", "Ly", "L(y)")
    b.intersect("Lx", "unit", nearest_to(x + side), "m")
    b.intersect("Lx", "unit", nearest_to(x - side), "mb", "m̄")
    b.intersect("Ly", "unit", nearest_to(y + side), "n")
    b.intersect("Ly", "unit", nearest_to(y - side), "nb", "n̄")
    b.line("m", "nb", "L1", "L(m,n̄)")
    b.line("mb", "n", "L2", "L(m̄,n)")
    b.intersect("L1", "L2", nearest_to(x), "z")
    return make_midpoint_result(b, x, y, "z")


def b2_method_I(x: Point2, y: Point2, tol: Tolerance = DEFAULT_TOL) -> MidpointResult:
    """Bisector-circle method: z = S(w, r_w) n S(a, r_a) inside the disk.

    w is drawn as L(x,y) n L(x*,y*); the radius r_w is taken with the
    compass as the tangent length from w to the unit circle (equivalent to
    orthogonality to S(a, r_a) because w.a = 1).
    """
    _check_generic(x, y, tol)
    b = _builder("b2-I", x, y, tol)
    b.invert_unit("x", "xsup", "x^*")
    b.invert_unit("y", "ysup", "y^*")
    b.circle_ortho_xy("x", "y", "carrier", "S¹(a,r_a)")
    b.line("x", "y", "Lxy", "L(x,y)")
    b.line("xsup", "ysup", "Lsup", "L(x^*,y^*)")
    try:
        b.intersect("Lxy", "Lsup", nearest_to(x), "w")
    except ParallelLines as exc:
        raise MethodInapplicable("EqualModuli", f"chords of method I are parallel: {exc}") from exc
    b.circle_diameter("w", "origin", "Cth", "Thales circle on [w,0]")
    b.intersect("Cth", "unit", nearest_to(x), "ptan", "tangency point")
    b.circle_center_through("w", "ptan", "Cw", "S¹(w,r_w)")
    b.intersect("Cw", "carrier", IN_DISK, "z")
    return make_midpoint_result(b, x, y, "z")


def b2_methods_II_to_VI(x: Point2, y: Point2, which: str, tol: Tolerance = DEFAULT_TOL) -> MidpointResult:
    """Chord methods II-VI: z = L(0, g) n S(a, r_a) inside the disk.

    g is u, v, s, t or k, the intersection of two chords among x, y, the
    ideal points x_*, y_* and the inversion points x^*, y^*.
    """
    if which not in _METHOD_CHORDS:
        raise ValueError(f"method must be one of {sorted(_METHOD_CHORDS)}, got {which!r}")
    _check_generic(x, y, tol)
    label, (p1, q1), (p2, q2) = _METHOD_CHORDS[which]
    b = _builder(f"b2-{which}", x, y, tol)
    needed = {p1, q1, p2, q2}
    if "xsup" in needed:
        b.invert_unit("x", "xsup", "x^*")
    if "ysup" in needed:
        b.invert_unit("y", "ysup", "y^*")
    b.circle_ortho_xy("x", "y", "carrier", "S¹(a,r_a)")
    if needed & {"xsub", "ysub"}:
        _ideal_endpoint_refs(b, x, y)
    pretty = {"x": "x", "y": "y", "xsub": "x_*", "ysub": "y_*", "xsup": "x^*", "ysup": "y^*"}
    b.line(p1, q1, "La", f"L({pretty[p1]},{pretty[q1]})")
    b.line(p2, q2, "Lb", f"L({pretty[p2]},{pretty[q2]})")
    try:
        g = b.intersect("La", "Lb", nearest_to(x), "g", label)
    except ParallelLines as exc:
        raise MethodInapplicable("ParallelLines", f"method {which} chords are parallel: {exc}") from exc
    if g.norm() <= tol.eps_degenerate:
        raise MethodInapplicable("AuxiliaryAtOrigin", f"auxiliary point {label} coincides with 0")
    b.line("origin", "g", "Lg", f"L(0,{label})")
    b.intersect_radius_ortho("Lg", "carrier", IN_DISK, "z")
    return make_midpoint_result(b, x, y, "z")


def b2_equal_moduli(x: Point2, y: Point2, tol: Tolerance = DEFAULT_TOL) -> MidpointResult:
    """Equal-moduli case: z = L(0, a) n S(a, r_a) inside the disk.

    With |x| = |y| the perpendicular to L(x,y) through 0 is exactly L(0, a),
    so no center needs to be extracted.
    """
    _check_pair(x, y, tol)
    require_in_domain(Model.DISK, x, y)
    if x.norm() <= tol.eps_degenerate or y.norm() <= tol.eps_degenerate:
        raise CollinearWithOrigin("x and y must be nonzero")
    if _collinearity_margin(x, y) <= tol.eps_degenerate:
        raise CollinearWithOrigin(f"0, {x}, {y} are collinear")
    if abs(x.norm() - y.norm()) > tol.eps_degenerate:
        raise MethodInapplicable("ModuliDiffer", f"|x| != |y| ({x.norm()!r} vs {y.norm()!r})")
    b = _builder("b2-equal-moduli", x, y, tol)
    b.circle_ortho_xy("x", "y", "carrier", "S¹(a,r_a)")
    b.line("x", "y", "Lxy", "L(x,y)")
    b.perpendicular("Lxy", "origin", "La", "L(0,a)")
    b.intersect_radius_ortho("La", "carrier", IN_DISK, "z")
    return make_midpoint_result(b, x, y, "z")


@dataclass(frozen=True)
class PointChain:
    """Points X_1..X_n on the ray through X_1 with rho(0, X_k) = k * rho(0, X_1)."""

    base: Point2
    points: tuple[Point2, ...]
    c: float
    trace: ConstructionTrace


def scale_sequence(x1: Point2, n: int, tol: Tolerance = DEFAULT_TOL) -> PointChain:
    """Chord construction multiplying the distance from the origin.

    Builds X_{k+1} from the chord through M_{k-1} (top of the perpendicular
    chord at X_{k-1}) and X_k; each step doubles-and-shifts the geodesic
    distance so rho(0, X_k) = k c.  Stops with ChainSaturated when X_k is
    within 1e-12 of the boundary.
    """
    if n < 1:
        raise ValueError(f"chain length must be >= 1, got {n!r}")
    require_in_domain(Model.DISK, x1)
    if x1.norm() <= tol.eps_degenerate:
        raise DegenerateInput("X1 must be distinct from the origin")
    b = TraceBuilder(Model.DISK, "b2-chain", {"X1": x1, "unit": UNIT_CIRCLE, "origin": ORIGIN}, tol)
    axis = b.line("origin", "X1", "L0", "L(0,X₁)")
    side = axis.n
    b.perpendicular("L0", "origin", "K0", "L_{0X₁}(0)")
    b.intersect("K0", "unit", nearest_to(ORIGIN + side), "M0", "M₀")
    points = [x1]
    for k in range(1, n):
        xk = points[-1]
        if 1.0 - xk.norm() < 1e-12:
            raise ChainSaturated(
                f"X_{k} is within 1e-12 of the boundary; cannot continue", last_index=k
            )
        b.perpendicular("L0", f"X{k}", f"K{k}", f"L_{{0X₁}}(X{k})")
        b.intersect(f"K{k}", "unit", nearest_to(xk + side), f"M{k}", f"M{k}")
        b.line(f"M{k - 1}", f"X{k}", f"C{k + 1}", f"L(M{k - 1},X{k})")
        prev_m = b.env[f"M{k - 1}"]
        roots = b.both_roots(f"C{k + 1}", "unit")
        second = max(roots, key=lambda p: (p - prev_m).norm())
        b.intersect(f"C{k + 1}", "unit", nearest_to(second), f"N{k + 1}", f"N{k + 1}")
        b.perpendicular("L0", f"N{k + 1}", f"Kn{k + 1}", f"L_{{0X₁}}(N{k + 1})")
        nxt = b.intersect(f"Kn{k + 1}", "L0", nearest_to(xk), f"X{k + 1}", f"X{k + 1}")
        points.append(nxt)
    trace = b.finish(f"X{n}" if n > 1 else "X1", points[-1])
    return PointChain(base=x1, points=tuple(points), c=rho_disk(ORIGIN, x1), trace=trace)
