"""Recorded compass-and-ruler steps with deterministic replay.

Every midpoint construction records the primitive steps it performs (lines,
circles, intersections, perpendiculars, reflections, inversions) so figures
and audits always reflect the actual construction, not a closed form.

Step inputs are names of previously produced objects or of the initial data.
Where a step needs a point and the named object is a circle, the circle's
center is used: once a circle is drawn its center is known, and the paper's
step tables treat centers the same way.  Selector anchors are stored by value
inside the step so replay is bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import GeometryError, NoIntersection
from ..geom2d import (
    BOTH,
    DEFAULT_TOL,
    Circle2,
    Line2,
    Point2,
    Selector,
    Tolerance,
    _apply_selector,
    circle_on_diameter,
    circle_through,
    dot2,
    intersect_circle_circle,
    intersect_line_circle,
    intersect_line_line,
    invert_unit,
    is_on,
    line_through,
    perpendicular_through,
    reflect_in_line,
)
from ..hypmetric import Model, geodesic_of, ortho_circle_through, rho

LINE = "line"
CIRCLE = "circle"
INTERSECT_LL = "intersect_ll"
INTERSECT_LC = "intersect_lc"
INTERSECT_CC = "intersect_cc"
PERPENDICULAR = "perpendicular"
REFLECT = "reflect"
INVERT = "invert"

# circle-step construction modes carried in ConstructionStep.data
_DIAMETER = "diameter"
_THROUGH3 = "through3"
_CENTER_THROUGH = "center_through"
_ORTHO_XY = "ortho_xy"


@dataclass(frozen=True)
class ConstructionStep:
    kind: str
    inputs: tuple[str, ...]
    produces: str
    label: str
    data: tuple = ()
    result: object = None


@dataclass(frozen=True)
class ConstructionTrace:
    """Ordered steps plus the initial data they act on."""

    model: Model
    initial: tuple[tuple[str, object], ...]
    steps: tuple[ConstructionStep, ...]
    result: Point2
    result_name: str | None
    method_id: str

    def objects(self):
        """All named objects, initial data first, in production order."""
        for name, value in self.initial:
            yield name, value
        for step in self.steps:
            yield step.produces, step.result


@dataclass(frozen=True)
class MidpointResult:
    """A constructed midpoint, its trace, and its defining residuals.

    ``oracle_distance`` is filled in by the dispatching ``midpoint`` entry
    point; direct method calls leave it None.
    """

    z: Point2
    trace: ConstructionTrace
    residual_equal_distance: float
    residual_on_geodesic: float
    oracle_distance: float | None = None

    def oracle_disagrees(self, threshold: float = 1e-8) -> bool:
        """Flag a result whose distance to the independent oracle exceeds threshold."""
        return self.oracle_distance is not None and self.oracle_distance > threshold


def make_midpoint_result(builder: "TraceBuilder", x: Point2, y: Point2, z_name: str) -> MidpointResult:
    z = builder.env[z_name]
    trace = builder.finish(z_name)
    g = geodesic_of(builder.model, x, y, builder.tol)
    return MidpointResult(
        z=z,
        trace=trace,
        residual_equal_distance=abs(rho(builder.model, x, z) - rho(builder.model, z, y)),
        residual_on_geodesic=is_on(z, g.carrier, builder.tol).residual,
    )


def _as_point(value) -> Point2:
    if isinstance(value, Circle2):
        return value.center
    if isinstance(value, Point2):
        return value
    raise GeometryError(f"expected a point (or circle center), got {type(value).__name__}")


class TraceBuilder:
    """Executes geometry operations while recording them as steps."""

    def __init__(self, model: Model, method_id: str, initial: dict, tol: Tolerance = DEFAULT_TOL):
        self.model = model
        self.method_id = method_id
        self.tol = tol
        self.env: dict[str, object] = dict(initial)
        self._initial = tuple(initial.items())
        self.steps: list[ConstructionStep] = []

    def _bind(self, kind, inputs, name, label, data, value):
        if name in self.env:
            raise GeometryError(f"construction name {name!r} already bound")
        self.env[name] = value
        self.steps.append(ConstructionStep(kind, tuple(inputs), name, label or name, tuple(data), value))
        return value

    def point_of(self, ref: str) -> Point2:
        return _as_point(self.env[ref])

    def line(self, p_ref: str, q_ref: str, name: str, label: str | None = None) -> Line2:
        value = line_through(self.point_of(p_ref), self.point_of(q_ref), self.tol)
        return self._bind(LINE, (p_ref, q_ref), name, label, (), value)

    def perpendicular(self, l_ref: str, p_ref: str, name: str, label: str | None = None) -> Line2:
        value = perpendicular_through(self.env[l_ref], self.point_of(p_ref))
        return self._bind(PERPENDICULAR, (l_ref, p_ref), name, label, (), value)

    def circle_diameter(self, p_ref: str, q_ref: str, name: str, label: str | None = None) -> Circle2:
        value = circle_on_diameter(self.point_of(p_ref), self.point_of(q_ref), self.tol)
        return self._bind(CIRCLE, (p_ref, q_ref), name, label, (_DIAMETER,), value)

    def circle_through3(self, p_ref: str, q_ref: str, r_ref: str, name: str, label: str | None = None) -> Circle2:
        value = circle_through(self.point_of(p_ref), self.point_of(q_ref), self.point_of(r_ref), self.tol)
        return self._bind(CIRCLE, (p_ref, q_ref, r_ref), name, label, (_THROUGH3,), value)

    def circle_center_through(self, c_ref: str, t_ref: str, name: str, label: str | None = None) -> Circle2:
        center = self.point_of(c_ref)
        value = Circle2(center, (self.point_of(t_ref) - center).norm())
        return self._bind(CIRCLE, (c_ref, t_ref), name, label, (_CENTER_THROUGH,), value)

    def circle_ortho_xy(self, x_ref: str, y_ref: str, name: str, label: str | None = None) -> Circle2:
        """Circle through x, y, x^*, y^* orthogonal to the unit circle.

        Drawn from its closed-form center (the lemma names the center that
        way), which stays accurate even for near-diameter carriers.
        """
        value = ortho_circle_through(self.point_of(x_ref), self.point_of(y_ref), self.tol).as_circle()
        return self._bind(CIRCLE, (x_ref, y_ref), name, label, (_ORTHO_XY,), value)

    def reflect_real(self, p_ref: str, name: str, label: str | None = None) -> Point2:
        value = reflect_in_line(self.point_of(p_ref), Point2(0.0, 1.0), 0.0)
        return self._bind(REFLECT, (p_ref,), name, label, ((0.0, 1.0), 0.0), value)

    def invert_unit(self, p_ref: str, name: str, label: str | None = None) -> Point2:
        value = invert_unit(self.point_of(p_ref), self.tol)
        return self._bind(INVERT, (p_ref,), name, label, (), value)

    def intersect(self, a_ref: str, b_ref: str, selector: Selector, name: str, label: str | None = None):
        a, b = self.env[a_ref], self.env[b_ref]
        kind, value = _run_intersection(a, b, selector, self.tol)
        return self._bind(kind, (a_ref, b_ref), name, label, (selector,), value)

    def intersect_unit_ortho(self, circle_ref: str, selector: Selector, name: str, label: str | None = None):
        """Intersect a circle orthogonal to S1 with S1 via its radical line p.a = 1.

        Exact for orthogonal circles and scale-free, where the generic
        circle-circle routine hits the representation floor of huge carriers.
        """
        value = _unit_ortho_intersection(self.env[circle_ref], selector, self.tol)
        return self._bind(INTERSECT_CC, (circle_ref, "unit"), name, label, ("unit_ortho", selector), value)

    def intersect_radius_ortho(self, l_ref: str, c_ref: str, selector: Selector, name: str, label: str | None = None):
        """Intersect a line through 0 with a circle orthogonal to S1.

        The intersection points form an inversion pair t, 1/t along the
        line, which sidesteps the half-chord cancellation on near-straight
        carriers.
        """
        value = _radius_ortho_intersection(self.env[l_ref], self.env[c_ref], selector, self.tol)
        return self._bind(INTERSECT_LC, (l_ref, c_ref), name, label, ("radius_ortho", selector), value)

    def both_roots(self, a_ref: str, b_ref: str) -> tuple:
        """Peek at both intersection points without recording a step."""
        a, b = self.env[a_ref], self.env[b_ref]
        _, value = _run_intersection(a, b, BOTH, self.tol)
        return value if isinstance(value, tuple) else (value,)

    def finish(self, result_name: str | None, result: Point2 | None = None) -> ConstructionTrace:
        if result is None:
            result = self.env[result_name]
        return ConstructionTrace(
            model=self.model,
            initial=self._initial,
            steps=tuple(self.steps),
            result=result,
            result_name=result_name,
            method_id=self.method_id,
        )


def _unit_ortho_intersection(circle: Circle2, selector: Selector, tol: Tolerance):
    a = circle.center
    aa = a.norm_sq()
    base = a * (1.0 / aa)
    h = math.sqrt(max(1.0 - 1.0 / aa, 0.0))
    perp = a.perp() * (1.0 / a.norm())
    return _apply_selector([base + perp * h, base - perp * h], selector, tol, 1.0 + circle.radius)


def _radius_ortho_intersection(line: Line2, circle: Circle2, selector: Selector, tol: Tolerance):
    # points t*d on the line through 0 with |t*d - a| = r and |a|^2 - r^2 = 1
    # solve t^2 - 2 t (d.a) + 1 = 0; the roots are an inversion pair t, 1/t
    d = line.direction()
    a = circle.center
    q = dot2(d.x1, a.x1, d.x2, a.x2)
    if abs(q) < 1.0:
        raise NoIntersection("radius line misses the orthogonal circle")
    s = math.sqrt(max((abs(q) - 1.0) * (abs(q) + 1.0), 0.0))
    t_out = math.copysign(abs(q) + s, q)
    candidates = [d * (1.0 / t_out), d * t_out]
    return _apply_selector(candidates, selector, tol, 1.0 + abs(q))


def _run_intersection(a, b, selector: Selector, tol: Tolerance):
    if isinstance(a, Line2) and isinstance(b, Line2):
        value = intersect_line_line(a, b, tol)
        return INTERSECT_LL, _apply_selector([value], selector, tol, 1.0 + value.norm())
    if isinstance(a, Line2) and isinstance(b, Circle2):
        return INTERSECT_LC, intersect_line_circle(a, b, selector, tol)
    if isinstance(a, Circle2) and isinstance(b, Line2):
        return INTERSECT_LC, intersect_line_circle(b, a, selector, tol)
    if isinstance(a, Circle2) and isinstance(b, Circle2):
        return INTERSECT_CC, intersect_circle_circle(a, b, selector, tol)
    raise GeometryError(f"cannot intersect {type(a).__name__} with {type(b).__name__}")


def replay(trace: ConstructionTrace, tol: Tolerance = DEFAULT_TOL):
    """Re-execute the recorded steps; returns the final environment.

    Running the same operations on the same inputs reproduces every produced
    object bit-identically.
    """
    env: dict[str, object] = dict(trace.initial)
    for step in trace.steps:
        values = [env[ref] for ref in step.inputs]
        if step.kind == LINE:
            out = line_through(_as_point(values[0]), _as_point(values[1]), tol)
        elif step.kind == PERPENDICULAR:
            out = perpendicular_through(values[0], _as_point(values[1]))
        elif step.kind == CIRCLE:
            mode = step.data[0]
            if mode == _DIAMETER:
                out = circle_on_diameter(_as_point(values[0]), _as_point(values[1]), tol)
            elif mode == _THROUGH3:
                out = circle_through(_as_point(values[0]), _as_point(values[1]), _as_point(values[2]), tol)
            elif mode == _ORTHO_XY:
                out = ortho_circle_through(_as_point(values[0]), _as_point(values[1]), tol).as_circle()
            else:
                center = _as_point(values[0])
                out = Circle2(center, (_as_point(values[1]) - center).norm())
        elif step.kind == REFLECT:
            (ax, ay), t = step.data
            out = reflect_in_line(_as_point(values[0]), Point2(ax, ay), t)
        elif step.kind == INVERT:
            out = invert_unit(_as_point(values[0]), tol)
        elif step.kind == INTERSECT_CC and step.data[0] == "unit_ortho":
            out = _unit_ortho_intersection(values[0], step.data[1], tol)
        elif step.kind == INTERSECT_LC and step.data[0] == "radius_ortho":
            out = _radius_ortho_intersection(values[0], values[1], step.data[1], tol)
        elif step.kind in (INTERSECT_LL, INTERSECT_LC, INTERSECT_CC):
            _, out = _run_intersection(values[0], values[1], step.data[0], tol)
        else:
            raise GeometryError(f"unknown step kind {step.kind!r}")
        env[step.produces] = out
    return env
