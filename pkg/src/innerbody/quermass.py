"""Quermassintegrals W_0..W_n of a polytope relative to a gauge.

Polytopal gauges give exact rationals, either by fitting the Steiner
polynomial ``vol(K + mu E)`` at ``mu = 0..n`` or from facet data (mixed
volumes ``V(K[n-i], E[i])``).  The ball gauge uses the classical closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Tuple, Union

from .exactnum import as_rational, cross, dot, norm_squared
from .gauge import BallGauge, PolytopeGauge, as_gauge
from .polytope import (
    DegeneratePolytope,
    Polytope,
    facet_area_over_norm,
    minkowski_sum,
    surface_area,
    volume,
)

Scalar = Union[Fraction, float]


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


@dataclass(frozen=True)
class QuermassVector:
    values: Tuple[Scalar, ...]

    @property
    def n(self) -> int:
        return len(self.values) - 1

    @property
    def exact(self) -> Tuple[bool, ...]:
        return tuple(is_exact(v) for v in self.values)

    def __getitem__(self, i: int) -> Scalar:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def steiner_coefficients(self) -> Tuple[Scalar, ...]:
        """``binom(n, i) * W_i``: the coefficients of ``vol(K + mu E)`` in ``mu``."""
        return tuple(comb(self.n, i) * w for i, w in enumerate(self.values))

    def as_floats(self) -> Tuple[float, ...]:
        return tuple(float(v) for v in self.values)


def _gauge_body(E) -> Polytope:
    if isinstance(E, Polytope):
        return E
    E = as_gauge(E)
    if not isinstance(E, PolytopeGauge):
        raise TypeError("a polytopal gauge is required")
    return E.body


def steiner_eval(K: Polytope, E, mu) -> Fraction:
    """``vol(K + mu E)``, exact."""
    mu = as_rational(mu)
    if mu < 0:
        raise ValueError("mu must be non-negative")
    return volume(minkowski_sum(K, _gauge_body(E).scale(mu)))


def _solve_exact(M: List[List[Fraction]], rhs: List[Fraction]) -> List[Fraction]:
    n = len(M)
    A = [list(map(Fraction, row)) + [Fraction(r)] for row, r in zip(M, rhs)]
    for col in range(n):
        piv = next(i for i in range(col, n) if A[i][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [v / p for v in A[col]]
        for i in range(n):
            if i != col and A[i][col] != 0:
                f = A[i][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[col])]
    return [A[i][n] for i in range(n)]


def quermass_poly_gauge(K: Polytope, E) -> QuermassVector:
    """Exact W_i by interpolating the Steiner polynomial at ``mu = 0, 1, ..., n``."""
    body = _gauge_body(E)
    if K.dim != body.dim:
        raise ValueError("dimension mismatch")
    if not body.is_full_dimensional:
        raise DegeneratePolytope("gauge must be full-dimensional")
    n = K.dim
    nodes = list(range(n + 1))
    vols = [steiner_eval(K, body, mu) for mu in nodes]
    vander = [[Fraction(mu) ** i for i in range(n + 1)] for mu in nodes]
    coeffs = _solve_exact(vander, vols)
    return QuermassVector(tuple(c / comb(n, i) for i, c in enumerate(coeffs)))


def mixed_quermass(K: Polytope, E) -> QuermassVector:
    """Exact W_i from facet areas: ``W_i = V(K[n-i], E[i])``.

    Uses ``V(K,...,K,E) = (1/n) sum_F h(E,u_F) area(F)`` over facets of K and,
    in 3-D, ``V(K,E,E) = (1/3) sum_G h(K,u_G) area(G)`` over facets of E.
    """
    body = _gauge_body(E)
    if not K.is_full_dimensional:
        raise DegeneratePolytope("facet formula needs a full-dimensional body")
    n = K.dim
    w0 = volume(K)
    wn = volume(body)
    w1 = sum((body.support(h.normal) * r for h, r in facet_area_over_norm(K)), Fraction(0)) / n
    if n == 2:
        return QuermassVector((w0, w1, wn))
    w2 = sum((K.support(h.normal) * r for h, r in facet_area_over_norm(body)), Fraction(0)) / 3
    return QuermassVector((w0, w1, w2, wn))


def mean_width_integral(K: Polytope) -> float:
    """``M = 1/2 sum_edges length * exterior dihedral angle`` of a 3-polytope."""
    _, D = K.int_vertices
    total = []
    for p, q, n1, n2 in K.edges():
        d = [a - b for a, b in zip(q, p)]
        length = math.sqrt(norm_squared(d)) / D
        c = cross(n1, n2)
        angle = math.atan2(math.sqrt(norm_squared(c)), dot(n1, n2))
        total.append(length * angle)
    return 0.5 * math.fsum(total)


def quermass_ball(K: Polytope) -> QuermassVector:
    """W_i relative to the unit ball in dimension 2 or 3."""
    if K.dim not in (2, 3):
        raise ValueError("ball quermassintegrals only for n in {2, 3}")
    if not K.is_full_dimensional:
        raise DegeneratePolytope("ball quermassintegrals need a full-dimensional body")
    V = volume(K)
    S = surface_area(K)
    if K.dim == 2:
        return QuermassVector((V, S / 2, math.pi))
    M = mean_width_integral(K)
    return QuermassVector((V, S / 3, M / 3, 4.0 * math.pi / 3.0))


def quermass(K: Polytope, E, method: str = "mixed") -> QuermassVector:
    """Dispatch on the gauge: ball closed forms or exact polytopal routes."""
    if isinstance(E, BallGauge):
        return quermass_ball(K)
    if method == "interpolation":
        return quermass_poly_gauge(K, E)
    if method == "mixed":
        return mixed_quermass(K, E)
    raise ValueError(f"unknown method {method!r}")


# -- inequality suites ------------------------------------------------------


def geq(a: Scalar, b: Scalar, tol: float = 1e-9) -> bool:
    """``a >= b``, exactly for rationals and to relative ``tol`` otherwise."""
    if is_exact(a) and is_exact(b):
        return a >= b
    a, b = float(a), float(b)
    return a >= b - tol * max(abs(a), abs(b), 1e-300)


def af_pairs(n: int, homogeneous: bool = True):
    """Index tuples ``(l, i, j, k)`` with ``0 <= l < i <= j < k <= n``.

    With ``homogeneous`` only tuples with ``i + j == k + l`` are produced;
    without that restriction the inequality is not scale invariant and fails
    for small enough bodies.
    """
    for l in range(n + 1):
        for i in range(l + 1, n + 1):
            for j in range(i, n + 1):
                for k in range(j + 1, n + 1):
                    if not homogeneous or i + j == k + l:
                        yield l, i, j, k


def inequality_suite(W: QuermassVector, vol_e: Scalar, tol: float = 1e-9) -> dict:
    """Check the quermassintegral inequalities; returns ``{name: [violations]}``.

    * ``af``:    ``W_i W_j >= W_k W_l`` for ``l < i <= j < k`` and ``i + j = k + l``
    * ``af_literal``: the same without ``i + j = k + l`` (scale dependent)
    * ``af2``:   ``W_j^(n-i) >= W_i^(n-j) vol(E)^(j-i)`` for ``i <= j``
    * ``general``: ``W_s^(k-l) >= W_l^(k-s) W_k^(s-l)`` for ``l <= s <= k``
    * ``b``:     ``W_(i+1)^(n-j-1) W_(j+1) >= W_i^(n-j-1) vol(E)`` for ``i < j <= n-2``
    """
    n = W.n
    out = {"af": [], "af_literal": [], "af2": [], "general": [], "b": []}
    for l, i, j, k in af_pairs(n, homogeneous=False):
        if not geq(W[i] * W[j], W[k] * W[l], tol):
            out["af_literal"].append((l, i, j, k))
            if i + j == k + l:
                out["af"].append((l, i, j, k))
    for i in range(n + 1):
        for j in range(i, n + 1):
            if not geq(W[j] ** (n - i), W[i] ** (n - j) * vol_e ** (j - i), tol):
                out["af2"].append((i, j))
    for l in range(n + 1):
        for s in range(l, n + 1):
            for k in range(s, n + 1):
                if not geq(W[s] ** (k - l), W[l] ** (k - s) * W[k] ** (s - l), tol):
                    out["general"].append((l, s, k))
    for j in range(n - 1):
        for i in range(j):
            if not geq(W[i + 1] ** (n - j - 1) * W[j + 1], W[i] ** (n - j - 1) * vol_e, tol):
                out["b"].append((i, j))
    return out


def quotient(W: QuermassVector, i: int, j: int) -> Scalar:
    """Isoperimetric quotient of Steiner coefficients ``c_j^(n-i) / c_i^(n-j)``.

    With ``c_k = binom(n, k) W_k`` this is ``S^n / V^(n-1)`` for the ball
    gauge and ``(i, j) = (0, 1)``.
    """
    n = W.n
    c = W.steiner_coefficients()
    return c[j] ** (n - i) / c[i] ** (n - j)


def deficit(W: QuermassVector, i: int, j: int, vol_e: Scalar) -> Scalar:
    """``binom(n,j)^(n-i) * (W_j^(n-i) - W_i^(n-j) vol(E)^(j-i))``.

    For the ball gauge and ``(i, j) = (0, 1)`` this is ``S^n - n^n kappa_n V^(n-1)``.
    """
    n = W.n
    scale = comb(n, j) ** (n - i)
    return scale * (W[j] ** (n - i) - W[i] ** (n - j) * vol_e ** (j - i))
