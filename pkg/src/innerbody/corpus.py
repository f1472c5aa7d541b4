"""Seeded random polytopes and the built-in named bodies."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from .exactnum import IntVector, primitive_direction
from .gauge import BallGauge, PolytopeGauge
from .polytope import Halfspace, Polytope, check_bounded

MASK64 = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 generator; identical streams for identical seeds."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]`` (rejection sampling, no modulo bias)."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError("empty range")
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % span

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]


def random_polytope(
    rng: SplitMix64, dim: int = 3, n_points: int = 10, denominator: int = 64, half_width: int = 1
) -> Polytope:
    """Hull of ``n_points`` uniform rational points in ``[-w, w]^dim``; degenerate hulls are redrawn."""
    bound = half_width * denominator
    while True:
        pts = [
            tuple(Fraction(rng.randint(-bound, bound), denominator) for _ in range(dim))
            for _ in range(n_points)
        ]
        K = Polytope.from_vertices(pts)
        if K.is_full_dimensional:
            return K


def random_gauge(rng: SplitMix64, dim: int = 3, n_points: int = 8, denominator: int = 16) -> PolytopeGauge:
    return PolytopeGauge.centered(random_polytope(rng, dim, n_points, denominator))


@lru_cache(maxsize=None)
def pythagorean_directions(dim: int, bound: int) -> Tuple[IntVector, ...]:
    """All primitive integer directions with entries in ``[-bound, bound]`` and integer norm."""
    out = set()
    rng = range(-bound, bound + 1)
    if dim == 2:
        cands = ((a, b) for a in rng for b in rng)
    else:
        cands = ((a, b, c) for a in rng for b in rng for c in rng)
    for v in cands:
        if not any(v):
            continue
        sq = sum(c * c for c in v)
        if math.isqrt(sq) ** 2 == sq:
            out.add(primitive_direction(v))
    return tuple(sorted(out))


def random_pythagorean_polytope(
    rng: SplitMix64, dim: int = 3, n_facets: int = 10, bound: int = None, denominator: int = 16
) -> Polytope:
    """Random polytope whose facet normals all have rational Euclidean norm.

    Normals are drawn from :func:`pythagorean_directions`, offsets uniformly
    from ``[1, 2]`` with the given denominator, so the origin is interior.
    """
    if bound is None:
        bound = 8 if dim == 3 else 24
    dirs = pythagorean_directions(dim, bound)
    while True:
        chosen = {}
        while len(chosen) < n_facets or not check_bounded(dim, chosen):
            u = rng.choice(dirs)
            chosen[u] = Fraction(rng.randint(denominator, 2 * denominator), denominator)
        K = Polytope(dim, halfspaces=[Halfspace(u, b) for u, b in chosen.items()])
        if K.is_full_dimensional and len(K.halfspaces) > dim + 1:
            return K


# -- named bodies --------------------------------------------------------------


def body_p() -> Polytope:
    """The polytope with facets ``+-12x1 + 35x3 <= 432``, ``+-12x2 + 5x3 <= 60``, ``x3 >= 0``."""
    return Polytope(
        3,
        halfspaces=[
            ((12, 0, 35), 432),
            ((-12, 0, 35), 432),
            ((0, 12, 5), 60),
            ((0, -12, 5), 60),
            ((0, 0, -1), 0),
        ],
    )


def body_p_star() -> Polytope:
    from .parallel import form_body

    return form_body(body_p(), BallGauge(3))


def cube(half: int = 1) -> Polytope:
    return Polytope.box([-half] * 3, [half] * 3)


def simplex_tangent_ball() -> Polytope:
    """A tetrahedron circumscribed about the unit ball, all normals Pythagorean."""
    normals: List[IntVector] = [(2, 2, 1), (-2, 2, 1), (0, -12, 5), (0, 0, -1)]
    return Polytope(3, halfspaces=[(u, math.isqrt(sum(c * c for c in u))) for u in normals])


def triangle_tangent_disk() -> Polytope:
    return Polytope(2, halfspaces=[((0, -1), 1), ((4, 3), 5), ((-4, 3), 5)])


def box_2x1() -> Polytope:
    return Polytope.box([0, 0], [2, 1])


NAMED_BODIES = {
    "p": body_p,
    "p-star": body_p_star,
    "cube": cube,
    "unit-cube": lambda: Polytope.box([0] * 3, [1] * 3),
    "simplex-tangent-ball": simplex_tangent_ball,
    "triangle-tangent-disk": triangle_tangent_disk,
    "box-2x1": box_2x1,
    "unit-square": lambda: Polytope.box([0, 0], [1, 1]),
    "square": lambda: Polytope.box([-1, -1], [1, 1]),
}
