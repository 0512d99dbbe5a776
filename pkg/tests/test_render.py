"""SVG rendering: determinism, structure, clipping."""

import pytest

from hypmid import render, script
from hypmid.constructions import b2_method_I, h2_case1, midpoint
from hypmid.geom2d import Point2
from hypmid.hypmetric import Model


def test_byte_determinism():
    res = b2_method_I(Point2(0.5, 0), Point2(0, 0.25))
    a = render.render_trace(res.trace)
    b = render.render_trace(res.trace)
    assert a == b


def test_disk_figure_contains_expected_objects():
    res = b2_method_I(Point2(0.5, 0), Point2(0, 0.25))
    svg = render.render_trace(res.trace)
    assert svg.startswith("<?xml")
    assert "<svg" in svg and svg.rstrip().endswith("</svg>")
    assert "y axis points up" in svg
    assert "S¹(a,r_a)" in svg  # carrier label
    assert "S¹(w,r_w)" in svg
    assert svg.count("<circle") > 4  # boundary + carriers + point dots


def test_halfplane_figure_has_boundary_segment():
    res = h2_case1(Point2(0, 1), Point2(0, 4))
    svg = render.render_trace(res.trace)
    assert "<line" in svg
    # the three auxiliary circles of the vertical construction are drawn
    assert svg.count("stroke-dasharray") >= 3


def test_angles_method_result_highlighted():
    res = midpoint(Model.DISK, Point2(0.5, 0), Point2(0, 0.25), "angles")
    svg = render.render_trace(res.trace)
    assert "9467bd" in svg  # result style


def test_far_objects_do_not_flatten_viewport():
    # the inversion points can be far outside; the viewport must stay usable
    res = b2_method_I(Point2(0.1, 0.05), Point2(0.3, 0.6))
    svg = render.render_trace(res.trace)
    assert svg  # no exception; clipped geometry is fine


def test_script_render():
    src = (
        "point x = (0.5, 0.0)\n"
        "point y = (0.0, 0.25)\n"
        "zo = midpoint_oracle(b2, x, y)\n"
        "output zo\n"
    )
    result = script.evaluate(script.parse(src))
    svg = render.render_script_result(Model.DISK, result.bindings, result.outputs)
    assert "zo" in svg


def test_zero_canvas_rejected():
    with pytest.raises(ValueError):
        render.RenderSpec(width=0, height=100)


def test_label_toggle():
    res = h2_case1(Point2(0, 1), Point2(0, 4))
    labelled = render.render_trace(res.trace, render.RenderSpec(labels=True))
    bare = render.render_trace(res.trace, render.RenderSpec(labels=False))
    assert "<text" in labelled and "<text" not in bare
