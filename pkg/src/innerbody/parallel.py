"""Inner parallel bodies, inradius and kernel, form body, outer body K(mu),
and Minkowski sum/difference."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactnum import as_rational
from .gauge import Gauge, PolytopeGauge, as_gauge
from .lp import maximize
from .polytope import EmptyPolytope, Halfspace, Polytope
from .polytope import minkowski_sum as _minkowski_sum


@dataclass(frozen=True)
class InradiusResult:
    r: Fraction
    kernel: Polytope


def _shift_offsets(K: Polytope, E: Gauge, amount: Fraction) -> list:
    """K's facet offsets moved by ``amount * h(E, u)``."""
    return [Halfspace(h.normal, h.offset + amount * E.support(h.normal)) for h in K.halfspaces]


def _resolved(P: Polytope) -> Polytope:
    P.vertices  # forces vertex enumeration, which detects emptiness
    return P


def inner_parallel(K: Polytope, E, lam) -> Polytope:
    """``K_lam = K ~ |lam| E`` for ``-inr(K;E) <= lam <= 0``.

    Raises ``ValueError`` if ``lam > 0`` or the erosion is empty.
    """
    E = as_gauge(E)
    lam = as_rational(lam)
    if lam > 0:
        raise ValueError("inner parallel bodies need lambda <= 0")
    if lam == 0:
        return K
    if not K.is_full_dimensional:
        raise ValueError("erosion of a lower-dimensional polytope is empty")
    try:
        return _resolved(Polytope(K.dim, halfspaces=_shift_offsets(K, E, lam)))
    except EmptyPolytope:
        raise ValueError(f"lambda={lam} is below -inr(K;E): erosion is empty") from None


def inradius(K: Polytope, E) -> InradiusResult:
    """Exact inradius relative to ``E`` and the kernel (set of optimal centres).

    Solves ``max r`` subject to ``<x, u_i> + r h(E, u_i) <= b_i`` exactly; the
    kernel is the erosion of ``K`` at ``-r``.
    """
    E = as_gauge(E)
    if not K.is_full_dimensional:
        raise ValueError("inradius needs a full-dimensional body")
    n = K.dim
    A = [list(h.normal) + [E.support(h.normal)] for h in K.halfspaces]
    b = [h.offset for h in K.halfspaces]
    A.append([0] * n + [-1])
    b.append(Fraction(0))
    vs = K.vertices
    x0 = [sum(v[k] for v in vs) / len(vs) for k in range(n)] + [Fraction(0)]
    c = [0] * n + [1]
    r, _ = maximize(c, A, b, x0)
    kernel = Polytope(n, halfspaces=_shift_offsets(K, E, -r))
    return InradiusResult(r, kernel)


def form_body(K: Polytope, E) -> Polytope:
    """``K* = {x : <x,u> <= h(E,u), u in U(K)}``, a tangential body of ``E``."""
    E = as_gauge(E)
    if not K.is_full_dimensional:
        raise ValueError("form body needs a full-dimensional body")
    return Polytope(K.dim, halfspaces=[Halfspace(h.normal, E.support(h.normal)) for h in K.halfspaces])


def outer_body(K: Polytope, E, mu) -> Polytope:
    """``K(mu) = {x : <x,u> <= h(K,u) + mu h(E,u), u in U(K)}`` for ``mu >= 0``."""
    E = as_gauge(E)
    mu = as_rational(mu)
    if mu < 0:
        raise ValueError("mu must be non-negative")
    if mu == 0:
        return K
    return Polytope(K.dim, halfspaces=_shift_offsets(K, E, mu))


def minkowski_sum(K: Polytope, L: Polytope) -> Polytope:
    return _minkowski_sum(K, L)


def minkowski_difference(K: Polytope, L: Polytope) -> Optional[Polytope]:
    """``K ~ L = {x : x + L in K}``; ``None`` when the difference is empty."""
    if K.dim != L.dim:
        raise ValueError("dimension mismatch")
    hs = [Halfspace(h.normal, h.offset - L.support(h.normal)) for h in K.halfspaces]
    try:
        return _resolved(Polytope(K.dim, halfspaces=hs))
    except EmptyPolytope:
        return None


def gauge_polytope(E, s=1) -> Polytope:
    """``s * E`` as a polytope (polytopal gauges only)."""
    E = as_gauge(E)
    if not isinstance(E, PolytopeGauge):
        raise TypeError("the ball gauge has no polytope representation")
    return E.body.scale(s)
