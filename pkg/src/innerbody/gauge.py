"""Gauge bodies: a full-dimensional polytope around the origin, or the Euclidean ball."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .exactnum import norm_exact
from .polytope import Polytope, volume


class Gauge:
    dim: int

    def support(self, u: Sequence[int]) -> Fraction:
        raise NotImplementedError

    def is_regular(self) -> bool:
        raise NotImplementedError

    @property
    def volume(self):
        raise NotImplementedError


class BallGauge(Gauge):
    """Euclidean unit ball.  Support values are exact only for Pythagorean normals."""

    def __init__(self, dim: int):
        if dim not in (2, 3):
            raise ValueError("ball gauge is limited to dimensions 2 and 3")
        self.dim = dim

    def support(self, u: Sequence[int]) -> Fraction:
        return norm_exact(u)

    def is_regular(self) -> bool:
        return True

    @property
    def volume(self) -> float:
        return math.pi if self.dim == 2 else 4.0 * math.pi / 3.0

    def __repr__(self) -> str:
        return f"BallGauge({self.dim})"

    def __eq__(self, other):
        return isinstance(other, BallGauge) and other.dim == self.dim

    def __hash__(self):
        return hash(("ball", self.dim))


class PolytopeGauge(Gauge):
    """A full-dimensional polytope containing the origin in its interior."""

    def __init__(self, body: Polytope):
        if not body.is_full_dimensional:
            raise ValueError("gauge polytope must be full-dimensional")
        if any(h.offset <= 0 for h in body.halfspaces):
            raise ValueError("gauge polytope must contain the origin in its interior")
        self.body = body
        self.dim = body.dim

    @classmethod
    def centered(cls, body: Polytope) -> "PolytopeGauge":
        """Translate ``body`` so its vertex centroid sits at the origin."""
        vs = body.vertices
        c = [-sum(v[k] for v in vs) / len(vs) for k in range(body.dim)]
        return cls(body.translate(c))

    def support(self, u: Sequence[int]) -> Fraction:
        return self.body.support(u)

    def is_regular(self) -> bool:
        return False

    @property
    def volume(self) -> Fraction:
        return volume(self.body)

    def __repr__(self) -> str:
        return f"PolytopeGauge({self.body!r})"


def support_gauge(E: Gauge, u: Sequence[int]) -> Fraction:
    return E.support(u)


def is_regular(E: Gauge) -> bool:
    return E.is_regular()


def as_gauge(E) -> Gauge:
    if isinstance(E, Gauge):
        return E
    if isinstance(E, Polytope):
        return PolytopeGauge(E)
    raise TypeError(f"not a gauge: {E!r}")
