"""Shared strategies and fixtures."""

import os
from datetime import timedelta

from hypothesis import HealthCheck, settings, strategies as st

from hypmid.geom2d import Point2

settings.register_profile(
    "default",
    deadline=timedelta(milliseconds=2000),
    suppress_health_check=[HealthCheck.filter_too_much],
)
settings.register_profile("ci", max_examples=300)
settings.register_profile("dev", max_examples=25)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


def finite_points(span: float = 10.0):
    coord = st.floats(min_value=-span, max_value=span, allow_nan=False, allow_infinity=False)
    return st.builds(Point2, coord, coord)


def disk_points(max_modulus: float = 0.95):
    return finite_points(max_modulus).filter(lambda p: 0.01 < p.norm() < max_modulus)


def halfplane_points(span: float = 5.0):
    x1 = st.floats(min_value=-span, max_value=span, allow_nan=False)
    x2 = st.floats(min_value=0.05, max_value=span, allow_nan=False)
    return st.builds(Point2, x1, x2)
