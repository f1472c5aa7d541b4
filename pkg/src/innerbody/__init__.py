"""Exact inner parallel bodies, form bodies and quermassintegrals of polytopes."""

from .exactnum import NotPythagorean, norm_exact, primitive_direction, rat_parse, rat_str
from .gauge import BallGauge, Gauge, PolytopeGauge, is_regular, support_gauge
from .parallel import (
    InradiusResult,
    form_body,
    inner_parallel,
    inradius,
    minkowski_difference,
    minkowski_sum,
    outer_body,
)
from .polytope import (
    DegeneratePolytope,
    EmptyPolytope,
    Halfspace,
    Polytope,
    UnboundedPolyhedron,
    contains,
    equal,
    surface_area,
    volume,
)
from .quermass import QuermassVector, quermass, quermass_ball, quermass_poly_gauge, steiner_eval

__version__ = "0.1.0"

__all__ = [
    "BallGauge",
    "DegeneratePolytope",
    "EmptyPolytope",
    "Gauge",
    "Halfspace",
    "InradiusResult",
    "NotPythagorean",
    "Polytope",
    "PolytopeGauge",
    "QuermassVector",
    "UnboundedPolyhedron",
    "contains",
    "equal",
    "form_body",
    "inner_parallel",
    "inradius",
    "is_regular",
    "minkowski_difference",
    "minkowski_sum",
    "norm_exact",
    "outer_body",
    "primitive_direction",
    "quermass",
    "quermass_ball",
    "quermass_poly_gauge",
    "rat_parse",
    "rat_str",
    "steiner_eval",
    "support_gauge",
    "surface_area",
    "volume",
]
