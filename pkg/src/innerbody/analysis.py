"""Direction-set algebra, inclusion checkers, and quotient/deficit sweeps."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from .exactnum import IntVector, NotPythagorean, as_rational, dot
from .gauge import BallGauge, Gauge, PolytopeGauge, as_gauge
from .parallel import (
    form_body,
    gauge_polytope,
    inner_parallel,
    inradius,
    minkowski_sum,
    outer_body,
)
from .polytope import Polytope, contains, equal, surface_area
from .quermass import QuermassVector, deficit, geq, is_exact, quermass, quotient

DirectionSet = FrozenSet[IntVector]


def extreme_directions(K: Polytope) -> DirectionSet:
    """Primitive outer facet normals, i.e. the 0-extreme directions of a polytope."""
    if not K.is_full_dimensional:
        raise ValueError("direction sets need a full-dimensional polytope")
    return frozenset(K.normals)


def _scaled_gauge_sum(K: Polytope, E: Gauge, s: Fraction) -> Polytope:
    return minkowski_sum(K, gauge_polytope(E, s))


def support_fits(a, E: Gauge, s, u, b) -> bool:
    """Exact test of ``a + s h(E, u) <= b`` for ``s >= 0``.

    For the ball gauge ``h(E, u) = |u|`` may be irrational, so the comparison
    is squared: ``b - a >= 0`` and ``s^2 |u|^2 <= (b - a)^2``.
    """
    if isinstance(E, BallGauge):
        gap = b - a
        return gap >= 0 and s * s * sum(c * c for c in u) <= gap * gap
    return a + s * E.support(u) <= b


def contains_sum_with_gauge(K: Polytope, A: Polytope, E: Gauge, s) -> bool:
    """Exact test of ``A + s E <= K`` through support functions on K's facet normals."""
    s = as_rational(s)
    return all(support_fits(A.support(h.normal), E, s, h.normal, h.offset) for h in K.halfspaces)


# -- the conditions ------------------------------------------------------------------


@dataclass(frozen=True)
class InclusionCheck:
    holds: bool
    inclusion_holds: bool
    equality: bool


def check_sy_condition(K: Polytope, E, lam) -> InclusionCheck:
    """Report ``U(K_l*) == U(K_l + K_l*)`` and ``K <= K_l + |l| K_l*``.

    ``lam = 0`` is accepted as the limiting case, where the direction test
    compares ``U(K*)`` with ``U(K + K*)``.
    """
    E = as_gauge(E)
    lam = as_rational(lam)
    Kl = inner_parallel(K, E, lam)
    Kls = form_body(Kl, E)
    holds = extreme_directions(Kls) == extreme_directions(minkowski_sum(Kl, Kls))
    rhs = minkowski_sum(Kl, Kls.scale(-lam))
    inclusion = contains(rhs, K)
    return InclusionCheck(holds, inclusion, inclusion and equal(K, rhs))


def check_larson_condition(K: Polytope, E) -> bool:
    """``U(K + K*) == U(K)``."""
    E = as_gauge(E)
    return extreme_directions(minkowski_sum(K, form_body(K, E))) == extreme_directions(K)


def planar_equality(K: Polytope, E, lam) -> bool:
    """``K == K_l + |l| K_l*`` (exact)."""
    return check_sy_condition(K, E, lam).equality


# -- sweeps ------------------------------------------------------------------------------


def lambda_grid(r: Fraction, grid_size: int) -> List[Fraction]:
    """``grid_size`` uniform points ``-r (G-1-k)/G``; covers ``(-r, 0]`` with ``0`` included."""
    if grid_size < 1:
        raise ValueError("grid_size must be positive")
    G = grid_size
    return [-r * Fraction(G - 1 - k, G) for k in range(G)]


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if is_exact(x):
        return str(Fraction(x))
    return format(float(x), ".17g")


def non_increasing(values: Sequence, tol: float) -> bool:
    return all(geq(a, b, tol) for a, b in zip(values, values[1:]))


def non_decreasing(values: Sequence, tol: float) -> bool:
    return all(geq(b, a, tol) for a, b in zip(values, values[1:]))


@dataclass
class SweepRow:
    lam: Fraction
    W: QuermassVector
    phi: object
    psi: object
    sy_holds: Optional[bool] = None
    inclusion_holds: Optional[bool] = None


@dataclass
class SweepReport:
    i: int
    j: int
    inradius: Fraction
    rows: List[SweepRow]
    tol: float
    quotient_monotone: bool = field(init=False)
    deficit_monotone: bool = field(init=False)

    def __post_init__(self):
        self.quotient_monotone = non_increasing([r.phi for r in self.rows], self.tol)
        self.deficit_monotone = non_decreasing([r.psi for r in self.rows], self.tol)

    @property
    def grid(self) -> List[Fraction]:
        return [r.lam for r in self.rows]

    @property
    def n(self) -> int:
        return self.rows[0].W.n

    def verdict(self, mode: str) -> bool:
        if mode == "quotient":
            return self.quotient_monotone
        if mode == "deficit":
            return self.deficit_monotone
        raise ValueError(f"unknown mode {mode!r}")

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        n = self.n
        w.writerow(["lambda"] + [f"W_{k}" for k in range(n + 1)]
                   + ["phi", "psi", "sy_holds", "inclusion_holds"])
        for r in self.rows:
            w.writerow([_fmt(r.lam)] + [_fmt(v) for v in r.W]
                       + [_fmt(r.phi), _fmt(r.psi), _fmt(r.sy_holds), _fmt(r.inclusion_holds)])
        return buf.getvalue()


def _check_indices(n: int, i: int, j: int) -> None:
    if not (0 <= i < j < n):
        raise ValueError(f"need 0 <= i < j < n, got i={i}, j={j}, n={n}")


def quermass_at(K: Polytope, E: Gauge, lam) -> QuermassVector:
    """``W(K_lam; E)`` for ``lam <= 0`` and ``W(K + lam E; E)`` for ``lam > 0``."""
    lam = as_rational(lam)
    if lam > 0:
        if not isinstance(E, PolytopeGauge):
            raise ValueError("positive lambda needs a polytopal gauge")
        return quermass(_scaled_gauge_sum(K, E, lam), E)
    return quermass(inner_parallel(K, E, lam), E)


def sweep(
    K: Polytope,
    E,
    i: int = 0,
    j: int = 1,
    grid_size: int = 64,
    tol: float = 1e-9,
    extend_to=None,
    extend_steps: int = 0,
    with_conditions: bool = False,
) -> SweepReport:
    """Tabulate W_i, the quotient phi and the deficit psi over a lambda grid.

    ``extend_to``/``extend_steps`` append ``lam > 0`` points (outer parallel
    bodies ``K + lam E``, polytopal gauges only).  ``with_conditions`` adds the
    per-lambda direction condition and inclusion flags.
    """
    E = as_gauge(E)
    _check_indices(K.dim, i, j)
    r = inradius(K, E).r
    grid = lambda_grid(r, grid_size)
    if extend_to is not None and extend_steps > 0:
        top = as_rational(extend_to)
        grid += [top * Fraction(k, extend_steps) for k in range(1, extend_steps + 1)]
    vol_e = E.volume
    rows = []
    for lam in grid:
        W = quermass_at(K, E, lam)
        row = SweepRow(lam, W, quotient(W, i, j), deficit(W, i, j, vol_e))
        if with_conditions and lam <= 0:
            sy = check_sy_condition(K, E, lam)
            row.sy_holds, row.inclusion_holds = sy.holds, sy.inclusion_holds
        rows.append(row)
    return SweepReport(i, j, r, rows, tol)


def sweep_quotient(K, E, i=0, j=1, grid_size=64, tol=1e-9, **kw) -> SweepReport:
    return sweep(K, E, i, j, grid_size, tol, **kw)


def sweep_deficit(K, E, i=0, j=1, grid_size=64, tol=1e-9, **kw) -> SweepReport:
    return sweep(K, E, i, j, grid_size, tol, **kw)


# -- class R_p diagnostic ---------------------------------------------------------


def _backward_derivative(f: Callable, x, h, order: int):
    """``f'(x^-)`` from the degree-``order`` backward stencil (exact for polynomials)."""
    vals = [f(x - k * h) for k in range(order + 1)]
    return _stencil(vals, order) / h


def _forward_derivative(f: Callable, x, h, order: int):
    vals = [f(x + k * h) for k in range(order + 1)]
    # forward differences: h f'(x) = sum (-1)^(k+1)/k Delta^k f(x)
    total = 0
    diffs = vals
    for k in range(1, order + 1):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        total += Fraction((-1) ** (k + 1), k) * diffs[0] if is_exact(diffs[0]) else (
            (-1) ** (k + 1) / k * diffs[0])
    return total / h


def _stencil(vals, order):
    # backward differences: h f'(x) = sum 1/k nabla^k f(x)
    total = 0
    diffs = vals
    for k in range(1, order + 1):
        diffs = [a - b for a, b in zip(diffs, diffs[1:])]
        total += Fraction(1, k) * diffs[0] if is_exact(diffs[0]) else diffs[0] / k
    return total


def _one_sided(f, x, h, order, side, max_halvings=40):
    """One-sided derivative; for exact values the step is halved until two
    consecutive estimates agree, which happens once the stencil sits inside
    one polynomial piece."""
    deriv = _backward_derivative if side < 0 else _forward_derivative
    d = deriv(f, x, h, order)
    if not is_exact(d):
        return d
    for _ in range(max_halvings):
        h = h / 2
        d2 = deriv(f, x, h, order)
        if d2 == d:
            return d
        d = d2
    return d


@dataclass(frozen=True)
class RpResult:
    member_plausible: bool
    worst_gap: float
    worst_at: Optional[Tuple[Fraction, int]]
    ordering_ok: bool


def class_rp_diagnostic(K: Polytope, E, p: int, grid_size: int = 8, tol: float = 1e-6) -> RpResult:
    """Grid test of ``'W_i = W_i' = (n-i) W_(i+1)`` for ``i <= p``.

    A necessary-condition check only: ``member_plausible`` means no grid
    point contradicted membership.  Also checks ``'W_i >= W_i' >= (n-i)W_(i+1)``.
    """
    E = as_gauge(E)
    n = K.dim
    if not 0 <= p <= n - 1:
        raise ValueError(f"p must lie in [0, {n - 1}]")
    r = inradius(K, E).r
    grid = lambda_grid(r, grid_size)
    h0 = r / (grid_size * 8 * n)
    cache: Dict[Fraction, QuermassVector] = {}

    def W(lam):
        if lam not in cache:
            cache[lam] = quermass(inner_parallel(K, E, lam), E)
        return cache[lam]

    worst = 0.0
    worst_at = None
    ordering_ok = True
    plausible = True
    for lam in grid:
        for i in range(p + 1):
            order = n - i
            target = (n - i) * W(lam)[i + 1]
            fi = lambda t, i=i: W(t)[i]
            left = _one_sided(fi, lam, h0, order, -1)
            derivs = [left]
            if lam < 0:
                right = _one_sided(fi, lam, h0, order, +1)
                derivs.append(right)
                ordering_ok &= geq(left, right, tol) and geq(right, target, tol)
            else:
                ordering_ok &= geq(left, target, tol)
            for d in derivs:
                gap = abs(float(d - target))
                if not (is_exact(d) and is_exact(target) and d == target):
                    if gap > tol * max(1.0, abs(float(target))):
                        plausible = False
                if gap > worst:
                    worst, worst_at = gap, (lam, i)
    return RpResult(plausible, worst, worst_at, ordering_ok)


# -- perimeter bound ------------------------------------------------------------------


@dataclass
class PerimeterRow:
    lam: Fraction
    contained: bool
    equal: bool
    surface: object
    bound: object
    bound_ok: bool


@dataclass
class PerimeterReport:
    inradius: Fraction
    center: Tuple[Fraction, ...]
    rows: List[PerimeterRow]

    @property
    def all_contained(self) -> bool:
        return all(r.contained for r in self.rows)

    @property
    def all_bounds(self) -> bool:
        return all(r.bound_ok for r in self.rows)

    @property
    def all_equal(self) -> bool:
        return all(r.equal for r in self.rows)


def larson_bound_check(K: Polytope, E=None, grid_size: int = 64, tol: float = 1e-9) -> PerimeterReport:
    """Check ``(1 + l/r) K <= K_l`` and ``S(K_l) >= (1 + l/r)^(n-1) S(K)`` on a grid.

    ``K`` is first translated so the lexicographically smallest kernel vertex
    is the origin.
    """
    E = BallGauge(K.dim) if E is None else as_gauge(E)
    ir = inradius(K, E)
    c = min(ir.kernel.vertices)
    Kc = K.translate([-x for x in c])
    S0 = surface_area(Kc)
    n = K.dim
    rows = []
    for lam in lambda_grid(ir.r, grid_size):
        Kl = inner_parallel(Kc, E, lam)
        s = 1 + lam / ir.r
        H = Kc.scale(s)
        inside = contains(Kl, H)
        S = surface_area(Kl)
        bound = s ** (n - 1) * S0
        rows.append(PerimeterRow(lam, inside, inside and equal(Kl, H), S, bound, geq(S, bound, tol)))
    return PerimeterReport(ir.r, c, rows)


@dataclass(frozen=True)
class OuterSurfaceResult:
    outer_surface: object
    candidate_surface: object
    surface_ok: bool
    outer_erodes_back: bool
    candidate_erodes_back: Optional[bool]


def outer_surface_check(K: Polytope, E, lam, tol: float = 1e-9) -> OuterSurfaceResult:
    """Compare ``M = K_l(|l|)`` with ``L = K_l + |l| K*``.

    Both erode back to ``K_l`` and ``M`` should have the larger surface area.
    ``candidate_erodes_back`` is ``None`` when the ball support of a normal of
    ``L`` is irrational.
    """
    E = as_gauge(E)
    lam = as_rational(lam)
    Kl = inner_parallel(K, E, lam)
    M = outer_body(Kl, E, -lam)
    L = minkowski_sum(Kl, form_body(K, E).scale(-lam))
    SM, SL = surface_area(M), surface_area(L)
    try:
        L_back = equal(inner_parallel(L, E, lam), Kl)
    except NotPythagorean:
        # the sum can acquire normals whose ball support is irrational
        L_back = None
    return OuterSurfaceResult(SM, SL, geq(SM, SL, tol), equal(inner_parallel(M, E, lam), Kl), L_back)


# -- homothety ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Homothety:
    scale: Fraction
    translation: Tuple[Fraction, ...]


def is_homothetic(K: Polytope, L: Polytope) -> Optional[Homothety]:
    """``L = s K + t`` with ``s > 0``?  Returns the homothety or ``None``."""
    if K.dim != L.dim:
        return None
    if extreme_directions(K) != extreme_directions(L):
        return None
    n = K.dim
    rows = [([K.support(u)] + list(u), L.support(u)) for u in K.normals]
    # choose n+1 independent equations  h(L,u) = s h(K,u) + <t,u>
    basis: List[Tuple[List[Fraction], Fraction]] = []
    for coeffs, rhs in rows:
        trial = basis + [(coeffs, rhs)]
        if _rank([c for c, _ in trial]) == len(trial):
            basis = trial
        if len(basis) == n + 1:
            break
    if len(basis) < n + 1:
        return None
    sol = _solve([c for c, _ in basis], [b for _, b in basis])
    s, t = sol[0], tuple(sol[1:])
    if s <= 0:
        return None
    if any(s * coeffs[0] + dot(t, coeffs[1:]) != rhs for coeffs, rhs in rows):
        return None
    return Homothety(s, t)


def _rank(rows) -> int:
    M = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncol = len(M[0]) if M else 0
    for col in range(ncol):
        piv = next((i for i in range(rank, len(M)) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for i in range(len(M)):
            if i != rank and M[i][col] != 0:
                f = M[i][col] / M[rank][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def _solve(A, b) -> List[Fraction]:
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(v)] for row, v in zip(A, b)]
    for col in range(n):
        piv = next(i for i in range(col, n) if M[i][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [v / p for v in M[col]]
        for i in range(n):
            if i != col and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * c for a, c in zip(M[i], M[col])]
    return [M[i][n] for i in range(n)]


# -- property suites ------------------------------------------------------------------------


def lemma_suite(K: Polytope, E, L: Polytope, lams: Sequence) -> Dict[str, bool]:
    """The standard relations between K, its erosions, its form body and sums.

    * ``i``:   ``U(K_l) <= U(K)``
    * ``iii``: ``U(K) | U(L) <= U(K+L)`` and ``U(K+L) == U(K+2L)``
    * ``iv``:  ``K_l + |l| E <= K``
    * ``v``:   ``K_l + |l| K* <= K``
    """
    E = as_gauge(E)
    UK = extreme_directions(K)
    Ks = form_body(K, E)
    res = {"i": True, "iii": True, "iv": True, "v": True}
    for lam in lams:
        lam = as_rational(lam)
        Kl = inner_parallel(K, E, lam)
        if Kl.is_full_dimensional:
            res["i"] &= extreme_directions(Kl) <= UK
        if isinstance(E, PolytopeGauge):
            res["iv"] &= contains(K, _scaled_gauge_sum(Kl, E, -lam))
        else:
            res["iv"] &= contains_sum_with_gauge(K, Kl, E, -lam)
        res["v"] &= contains(K, minkowski_sum(Kl, Ks.scale(-lam)))
    KL = minkowski_sum(K, L)
    res["iii"] = (UK | extreme_directions(L)) <= extreme_directions(KL) and (
        extreme_directions(KL) == extreme_directions(minkowski_sum(K, L.scale(2)))
    )
    return res


def outer_body_identities(K: Polytope, E, mu, lams: Sequence) -> Dict[str, bool]:
    """Identities of the outer construction ``K(mu)``.

    * ``inradius``:   ``inr(K(mu)) == mu + inr(K)``
    * ``erosion``:    ``K(mu)_l == K(mu+l)`` for ``-mu <= l <= 0`` and ``K_(l+mu)`` below
    * ``directions``: ``U(K(mu)) == U(K)``
    * ``chain``:      ``K + mu E <= K + mu K* <= K(mu)``
    """
    E = as_gauge(E)
    mu = as_rational(mu)
    Kmu = outer_body(K, E, mu)
    r = inradius(K, E).r
    res = {
        "inradius": inradius(Kmu, E).r == mu + r,
        "directions": extreme_directions(Kmu) == extreme_directions(K),
        "erosion": True,
    }
    for lam in lams:
        lam = as_rational(lam)
        lhs = inner_parallel(Kmu, E, lam)
        rhs = outer_body(K, E, mu + lam) if lam >= -mu else inner_parallel(K, E, lam + mu)
        res["erosion"] &= equal(lhs, rhs)
    KmuKs = minkowski_sum(K, form_body(K, E).scale(mu))
    if isinstance(E, PolytopeGauge):
        first = contains(KmuKs, _scaled_gauge_sum(K, E, mu))
    else:
        first = contains_sum_with_gauge(KmuKs, K, E, mu)
    res["chain"] = first and contains(Kmu, KmuKs)
    return res


# -- scripted reproduction ----------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    name: str
    passed: bool
    detail: str


def reproduce_counterexample() -> List[Certificate]:
    """Certificates showing ``P + P* <= P(1)`` strictly for the built-in polytope P."""
    from .corpus import body_p

    B = BallGauge(3)
    P = body_p()
    Ps = form_body(P, B)
    S = minkowski_sum(P, Ps)
    expected = frozenset({(12, 0, 35), (-12, 0, 35), (0, 12, 5), (0, -12, 5), (0, 0, -1)})
    U_Ps = extreme_directions(Ps)
    U_S = extreme_directions(S)
    P1 = outer_body(P, B, 1)
    h_outer = P1.support((0, 0, 1))
    h_sum = S.support((0, 0, 1))
    gap = h_outer - h_sum
    fmt = lambda U: "{" + ", ".join(str(u) for u in sorted(U)) + "}"
    return [
        Certificate(
            "U(P*) equals the listed facet directions",
            U_Ps == expected and extreme_directions(P) == expected,
            f"U(P*) = {fmt(U_Ps)}",
        ),
        Certificate(
            "(0,0,1) in U(P+P*) but not in U(P*)",
            (0, 0, 1) in U_S and (0, 0, 1) not in U_Ps,
            f"U(P+P*) = {fmt(U_S)}",
        ),
        Certificate(
            "h(P(1), e3) - h(P+P*, e3) = 12/35 > 0",
            gap == Fraction(12, 35) and contains(P1, S) and not contains(S, P1),
            f"h(P(1),e3) = {h_outer}, h(P+P*,e3) = {h_sum}, gap = {gap}",
        ),
    ]
