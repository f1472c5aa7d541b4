"""Exact convex polytopes in dimension 2 and 3.

A :class:`Polytope` keeps an H-representation (halfspaces with primitive
integer normals and rational offsets) and a V-representation (rational
vertices).  Whichever one is missing is computed on first access and
cached.  Lower-dimensional polytopes are allowed; their H-representation is
an affine description (opposite halfspace pairs for the equalities) and
their volume is zero.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import hull
from .exactnum import (
    IntVector,
    as_rational,
    cross,
    dot,
    is_pythagorean,
    norm_squared,
    primitive_direction,
    rat_parse,
    to_integer_points,
)
from .lp import maximize

RationalPoint = Tuple[Fraction, ...]


class EmptyPolytope(ValueError):
    pass


class UnboundedPolyhedron(ValueError):
    pass


class DegeneratePolytope(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Halfspace:
    """The constraint ``<normal, x> <= offset``."""

    normal: IntVector
    offset: Fraction

    @classmethod
    def make(cls, normal: Sequence, offset) -> "Halfspace":
        """Build a halfspace with the normal scaled to a primitive integer vector."""
        normal = [as_rational(c) for c in normal]
        offset = as_rational(offset)
        den = math.lcm(*(c.denominator for c in normal))
        ints = [int(c * den) for c in normal]
        prim = primitive_direction(ints)
        k = next(i for i, c in enumerate(ints) if c)
        scale = Fraction(prim[k], ints[k]) * den
        return cls(prim, offset * scale)

    def value(self, x: Sequence) -> Fraction:
        return dot(self.normal, x)

    def __str__(self) -> str:
        return f"{list(self.normal)} . x <= {self.offset}"


def _as_halfspaces(items) -> List[Halfspace]:
    out = []
    for h in items:
        if isinstance(h, Halfspace):
            out.append(Halfspace.make(h.normal, h.offset))
        else:
            a, b = h
            out.append(Halfspace.make(a, b))
    return out


def _int_rows(halfspaces: Sequence[Halfspace]):
    """Integer rows (A_i, B_i) with A_i . x <= B_i equivalent to each halfspace."""
    rows = []
    for h in halfspaces:
        d = h.offset.denominator
        rows.append((tuple(c * d for c in h.normal), h.offset.numerator))
    return rows


def check_bounded(dim: int, normals: Iterable[IntVector]) -> bool:
    """True iff the normals positively span R^dim (i.e. the polyhedron is bounded)."""
    pts = sorted(set(tuple(n) for n in normals))
    if len(pts) <= dim:
        return False
    if hull.affine_rank(pts) < dim:
        return False
    origin = (0,) * dim
    if dim == 2:
        ring = hull.hull2(pts)
        if len(ring) < 3:
            return False
        return all(
            hull._cross2(ring[i], ring[(i + 1) % len(ring)], origin) > 0
            for i in range(len(ring))
        )
    return all(off > 0 for _, off in hull.hull3(pts))


def h_to_v(dim: int, halfspaces: Sequence[Halfspace]) -> List[RationalPoint]:
    """Vertices of a bounded H-polytope by enumerating facet d-tuples.

    Every choice of ``dim`` constraints with independent normals is solved
    exactly and kept when it satisfies all remaining constraints.
    """
    hs = _as_halfspaces(halfspaces)
    if not check_bounded(dim, (h.normal for h in hs)):
        raise UnboundedPolyhedron("halfspace normals do not positively span the space")
    rows = _int_rows(hs)
    found = set()
    m = len(rows)
    if dim == 2:
        for i in range(m):
            ai, bi = rows[i]
            for j in range(i + 1, m):
                aj, bj = rows[j]
                det = ai[0] * aj[1] - ai[1] * aj[0]
                if det == 0:
                    continue
                X = (bi * aj[1] - bj * ai[1], ai[0] * bj - aj[0] * bi)
                if det < 0:
                    det, X = -det, (-X[0], -X[1])
                if all(a[0] * X[0] + a[1] * X[1] <= b * det for a, b in rows):
                    found.add((X, det))
    elif dim == 3:
        for j in range(m):
            aj, bj = rows[j]
            for k in range(j + 1, m):
                ak, bk = rows[k]
                cjk = cross(aj, ak)
                if not any(cjk):
                    continue
                for i in range(k + 1, m):
                    ai, bi = rows[i]
                    det = ai[0] * cjk[0] + ai[1] * cjk[1] + ai[2] * cjk[2]
                    if det == 0:
                        continue
                    # Cramer's rule with the right-hand side (bi, bj, bk)
                    cki = cross(ak, ai)
                    cij = cross(ai, aj)
                    X = tuple(bi * cjk[t] + bj * cki[t] + bk * cij[t] for t in range(3))
                    if det < 0:
                        det, X = -det, tuple(-c for c in X)
                    if all(
                        a[0] * X[0] + a[1] * X[1] + a[2] * X[2] <= b * det for a, b in rows
                    ):
                        found.add((X, det))
    else:
        raise ValueError("only dimensions 2 and 3 are supported")
    verts = {tuple(Fraction(c, det) for c in X) for X, det in found}
    if not verts:
        raise EmptyPolytope("halfspace system is infeasible")
    return sorted(verts)


def _affine_hrep(dim: int, vertices: Sequence[RationalPoint]) -> List[Halfspace]:
    """Affine description of a lower-dimensional polytope given by its vertices."""
    P, D = to_integer_points(vertices)
    r = hull.affine_rank(P)
    out: List[Tuple[IntVector, int]] = []

    def pair(n, value):
        out.append((n, value))
        out.append((tuple(-c for c in n), -value))

    if r == 0:
        p = P[0]
        for k in range(dim):
            e = tuple(1 if t == k else 0 for t in range(dim))
            pair(e, p[k])
    elif r == 1:
        a = min(P)
        b = max(P)
        d = primitive_direction(hull._sub(b, a))
        if dim == 2:
            n = (-d[1], d[0])
            pair(n, dot(n, a))
        else:
            k = min(range(3), key=lambda t: abs(d[t]))
            e = tuple(1 if t == k else 0 for t in range(3))
            n1 = primitive_direction(cross(d, e))
            n2 = primitive_direction(cross(d, n1))
            pair(n1, dot(n1, a))
            pair(n2, dot(n2, a))
        out.append((d, dot(d, b)))
        out.append((tuple(-c for c in d), -dot(d, a)))
    elif r == 2 and dim == 3:
        base = P[0]
        diffs = [hull._sub(p, base) for p in P[1:]]
        nrm = None
        for i in range(len(diffs)):
            for j in range(i + 1, len(diffs)):
                c = cross(diffs[i], diffs[j])
                if any(c):
                    nrm = primitive_direction(c)
                    break
            if nrm:
                break
        pair(nrm, dot(nrm, base))
        ring = hull.order_polygon3(P, nrm)
        for i, p in enumerate(ring):
            q = ring[(i + 1) % len(ring)]
            w = primitive_direction(cross(hull._sub(q, p), nrm))
            out.append((w, dot(w, p)))
    else:
        raise ValueError("polytope is full-dimensional")
    return sorted(Halfspace(n, Fraction(v, D)) for n, v in out)


def _dedupe(halfspaces: Sequence[Halfspace]) -> List[Halfspace]:
    best: Dict[IntVector, Fraction] = {}
    for h in halfspaces:
        if h.normal not in best or h.offset < best[h.normal]:
            best[h.normal] = h.offset
    return [Halfspace(n, b) for n, b in best.items()]


def _facet_defining(dim, halfspaces, P, D) -> List[Halfspace]:
    keep = []
    for h in halfspaces:
        bD = h.offset * D
        tight = [p for p in P if dot(h.normal, p) == bD]
        if len(tight) >= dim and hull.affine_rank(tight) == dim - 1:
            keep.append(h)
    return keep


def remove_redundant(dim: int, halfspaces: Sequence[Halfspace]) -> List[Halfspace]:
    """Minimal description of the set cut out by ``halfspaces``.

    Redundancy is decided from the exact vertex set: a constraint stays iff
    the vertices it supports span a facet.  For lower-dimensional sets the
    affine description is returned.
    """
    hs = _dedupe(_as_halfspaces(halfspaces))
    verts = h_to_v(dim, hs)
    P, D = to_integer_points(verts)
    if hull.affine_rank(P) < dim:
        return _affine_hrep(dim, verts)
    return sorted(_facet_defining(dim, hs, P, D))


def remove_redundant_lp(dim: int, halfspaces: Sequence[Halfspace]) -> List[Halfspace]:
    """Same as :func:`remove_redundant` for full-dimensional sets, one LP per constraint.

    A constraint is facet-defining iff maximizing its normal over the other
    constraints exceeds its offset.
    """
    hs = sorted(_dedupe(_as_halfspaces(halfspaces)))
    verts = h_to_v(dim, hs)
    x0 = [sum(v[k] for v in verts) / len(verts) for k in range(dim)]
    keep = []
    for i, h in enumerate(hs):
        others = hs[:i] + hs[i + 1:]
        A = [o.normal for o in others] + [h.normal]
        b = [o.offset for o in others] + [h.offset + 1]
        best, _ = maximize(h.normal, A, b, x0)
        if best > h.offset:
            keep.append(h)
    return keep


def v_to_h(points: Sequence[Sequence]) -> Tuple[List[Halfspace], List[RationalPoint], bool]:
    """Exact convex hull.

    Returns ``(halfspaces, vertices, degenerate)``.  For lower-dimensional
    hulls the halfspaces form the affine description and ``degenerate`` is True.
    """
    pts = sorted({tuple(as_rational(c) for c in p) for p in points})
    if not pts:
        raise EmptyPolytope("no points")
    dim = len(pts[0])
    P, D = to_integer_points(pts)
    back = dict(zip(P, pts))
    r = hull.affine_rank(P)
    if r < dim:
        if r == 0:
            verts = [pts[0]]
        elif r == 1:
            verts = [pts[0], pts[-1]]
        else:
            base = P[0]
            nrm = None
            for p in P[1:]:
                for q in P[1:]:
                    c = cross(hull._sub(p, base), hull._sub(q, base))
                    if any(c):
                        nrm = c
                        break
                if nrm:
                    break
            verts = sorted(back[q] for q in hull.order_polygon3(P, nrm))
        return _affine_hrep(dim, verts), verts, True
    if dim == 2:
        ring = hull.hull2(P)
        hs = []
        for i, p in enumerate(ring):
            q = ring[(i + 1) % len(ring)]
            n = primitive_direction((q[1] - p[1], p[0] - q[0]))
            hs.append(Halfspace(n, Fraction(dot(n, p), D)))
        return sorted(hs), sorted(back[p] for p in ring), False
    planes = hull.hull3(P)
    hs = [Halfspace(n, Fraction(off, D)) for n, off in planes]
    corners = set()
    for n, off in planes:
        a, b, c = n
        tight = [p for p in P if a * p[0] + b * p[1] + c * p[2] == off]
        corners.update(hull.order_polygon3(tight, n))
    return sorted(hs), sorted(back[p] for p in corners), False


class Polytope:
    """A bounded, nonempty convex polytope in R^2 or R^3.

    Build with :meth:`from_halfspaces` or :meth:`from_vertices`.  Instances
    are immutable; representation conversions are cached.
    """

    __slots__ = ("dim", "_h", "_v", "_raw_h", "_ints", "_facets", "_affine_dim")

    def __init__(self, dim: int, halfspaces=None, vertices=None):
        if dim not in (2, 3):
            raise ValueError("only dimensions 2 and 3 are supported")
        if halfspaces is None and vertices is None:
            raise ValueError("need halfspaces or vertices")
        self.dim = dim
        self._h: Optional[Tuple[Halfspace, ...]] = None
        self._v: Optional[Tuple[RationalPoint, ...]] = None
        self._raw_h = None
        self._ints = None
        self._facets = None
        self._affine_dim = None
        if vertices is not None:
            if halfspaces is not None:
                self._h = tuple(halfspaces)
                self._v = tuple(sorted(vertices))
            else:
                hs, vs, _ = v_to_h(vertices)
                if len(vs[0]) != dim:
                    raise ValueError("vertex dimension mismatch")
                self._h, self._v = tuple(hs), tuple(vs)
        else:
            self._raw_h = _dedupe(_as_halfspaces(halfspaces))
            if any(len(h.normal) != dim for h in self._raw_h):
                raise ValueError("halfspace dimension mismatch")

    @classmethod
    def from_halfspaces(cls, dim: int, halfspaces) -> "Polytope":
        return cls(dim, halfspaces=halfspaces)

    @classmethod
    def from_vertices(cls, points) -> "Polytope":
        points = list(points)
        if not points:
            raise EmptyPolytope("no points")
        return cls(len(points[0]), vertices=points)

    @classmethod
    def box(cls, lo: Sequence, hi: Sequence) -> "Polytope":
        dim = len(lo)
        hs = []
        for k in range(dim):
            e = tuple(1 if t == k else 0 for t in range(dim))
            hs.append(Halfspace(e, as_rational(hi[k])))
            hs.append(Halfspace(tuple(-c for c in e), -as_rational(lo[k])))
        return cls(dim, halfspaces=hs)

    @classmethod
    def point(cls, p: Sequence) -> "Polytope":
        return cls.from_vertices([p])

    # -- representations -------------------------------------------------

    def _resolve(self) -> None:
        if self._v is not None:
            return
        verts = h_to_v(self.dim, self._raw_h)
        P, D = to_integer_points(verts)
        if hull.affine_rank(P) < self.dim:
            hs = _affine_hrep(self.dim, verts)
        else:
            hs = sorted(_facet_defining(self.dim, self._raw_h, P, D))
        self._v = tuple(verts)
        self._h = tuple(hs)

    @property
    def vertices(self) -> Tuple[RationalPoint, ...]:
        self._resolve()
        return self._v

    @property
    def halfspaces(self) -> Tuple[Halfspace, ...]:
        """Canonical irredundant halfspaces, sorted."""
        self._resolve()
        return self._h

    @property
    def int_vertices(self):
        """Vertices scaled to integers: ``(points, D)`` with ``vertex = point / D``."""
        if self._ints is None:
            self._ints = to_integer_points(self.vertices)
        return self._ints

    @property
    def affine_dim(self) -> int:
        if self._affine_dim is None:
            self._affine_dim = hull.affine_rank(self.int_vertices[0])
        return self._affine_dim

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.dim

    @property
    def normals(self) -> Tuple[IntVector, ...]:
        return tuple(h.normal for h in self.halfspaces)

    def facets(self):
        """Facets as ``(halfspace, polygon)`` pairs; polygons are integer points (scale D), CCW.

        In the plane a facet is an edge with its two endpoints in CCW order.
        """
        if self._facets is None:
            if not self.is_full_dimensional:
                raise DegeneratePolytope("polytope is not full-dimensional")
            P, D = self.int_vertices
            out = []
            for h in self.halfspaces:
                bD = h.offset * D
                tight = [p for p in P if dot(h.normal, p) == bD]
                if self.dim == 3:
                    poly = hull.order_polygon3(tight, h.normal)
                else:
                    d = (-h.normal[1], h.normal[0])
                    poly = sorted(tight, key=lambda p: dot(d, p))
                    poly = [poly[0], poly[-1]]
                out.append((h, poly))
            self._facets = out
        return self._facets

    def edges(self):
        """3-D edges as ``(p, q, normal_1, normal_2)`` with integer endpoints (scale D)."""
        facets = self.facets()
        seen = {}
        for h, poly in facets:
            k = len(poly)
            for i in range(k):
                p, q = poly[i], poly[(i + 1) % k]
                key = (min(p, q), max(p, q))
                seen.setdefault(key, []).append(h.normal)
        return [(p, q, ns[0], ns[1]) for (p, q), ns in seen.items() if len(ns) == 2]

    # -- queries ---------------------------------------------------------

    def support(self, u: Sequence) -> Fraction:
        return support(self, u)

    def contains(self, other: "Polytope") -> bool:
        return contains(self, other)

    def translate(self, t: Sequence) -> "Polytope":
        t = [as_rational(c) for c in t]
        hs = [Halfspace(h.normal, h.offset + dot(h.normal, t)) for h in self.halfspaces]
        vs = [tuple(a + b for a, b in zip(v, t)) for v in self.vertices]
        return Polytope(self.dim, halfspaces=hs, vertices=vs)

    def scale(self, s) -> "Polytope":
        """The homothet ``s * self`` about the origin, ``s >= 0``."""
        s = as_rational(s)
        if s < 0:
            raise ValueError("negative scale")
        if s == 0:
            return Polytope.point((Fraction(0),) * self.dim)
        vs = [tuple(s * c for c in v) for v in self.vertices]
        if self.is_full_dimensional:
            hs = [Halfspace(h.normal, s * h.offset) for h in self.halfspaces]
            return Polytope(self.dim, halfspaces=hs, vertices=vs)
        return Polytope.from_vertices(vs)

    def __add__(self, other: "Polytope") -> "Polytope":
        return minkowski_sum(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polytope):
            return NotImplemented
        return equal(self, other)

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        if self._v is None:
            return f"Polytope(dim={self.dim}, {len(self._raw_h)} halfspaces, unresolved)"
        return f"Polytope(dim={self.dim}, {len(self._h)} halfspaces, {len(self._v)} vertices)"


# -- module-level operations ----------------------------------------------


def support(P: Polytope, u: Sequence) -> Fraction:
    """``h(P, u) = max <v, u>`` over the vertices, exact."""
    pts, D = P.int_vertices
    return Fraction(max(dot(u, p) for p in pts), D)


def contains(P: Polytope, Q: Polytope) -> bool:
    """True iff ``Q`` is a subset of ``P``."""
    if P.dim != Q.dim:
        raise ValueError("dimension mismatch")
    pts, D = Q.int_vertices
    for h in P.halfspaces:
        bD = h.offset * D
        a = h.normal
        for p in pts:
            if dot(a, p) > bD:
                return False
    return True


def equal(P: Polytope, Q: Polytope) -> bool:
    """Set equality via canonical halfspaces (vertex sets for degenerate polytopes)."""
    if P.dim != Q.dim:
        raise ValueError("dimension mismatch")
    if P.is_full_dimensional and Q.is_full_dimensional:
        return P.halfspaces == Q.halfspaces
    return P.vertices == Q.vertices


def volume(P: Polytope) -> Fraction:
    """Exact volume by a fan of simplices from the vertex centroid."""
    if not P.is_full_dimensional:
        return Fraction(0)
    pts, D = P.int_vertices
    k = len(pts)
    c = tuple(sum(p[t] for p in pts) for t in range(P.dim))
    total = 0
    if P.dim == 2:
        for _, (p, q) in P.facets():
            a = tuple(k * x - y for x, y in zip(p, c))
            b = tuple(k * x - y for x, y in zip(q, c))
            total += abs(a[0] * b[1] - a[1] * b[0])
        return Fraction(total, 2 * (k * D) ** 2)
    for _, poly in P.facets():
        q = [tuple(k * x - y for x, y in zip(p, c)) for p in poly]
        for i in range(1, len(q) - 1):
            total += abs(dot(q[0], cross(q[i], q[i + 1])))
    return Fraction(total, 6 * (k * D) ** 3)


def facet_area_over_norm(P: Polytope) -> List[Tuple[Halfspace, Fraction]]:
    """Pairs ``(facet, area(F) / |normal|)``; the ratio is always rational."""
    pts, D = P.int_vertices
    out = []
    for h, poly in P.facets():
        a = h.normal
        aa = norm_squared(a)
        if P.dim == 2:
            p, q = poly
            t = abs((q[0] - p[0]) * -a[1] + (q[1] - p[1]) * a[0])
            out.append((h, Fraction(t, aa * D)))
        else:
            va = (0, 0, 0)
            for i in range(len(poly)):
                c = cross(poly[i], poly[(i + 1) % len(poly)])
                va = (va[0] + c[0], va[1] + c[1], va[2] + c[2])
            out.append((h, Fraction(abs(dot(va, a)), 2 * aa * D * D)))
    return out


def surface_area(P: Polytope):
    """Total facet area (perimeter in the plane).

    Returns a Fraction when every facet normal has a rational norm, a float
    otherwise.
    """
    if not P.is_full_dimensional:
        raise DegeneratePolytope("surface area needs a full-dimensional polytope")
    terms = facet_area_over_norm(P)
    if all(is_pythagorean(h.normal) for h, _ in terms):
        return sum((r * math.isqrt(norm_squared(h.normal)) for h, r in terms), Fraction(0))
    return math.fsum(float(r) * math.sqrt(norm_squared(h.normal)) for h, r in terms)


def minkowski_sum(K: Polytope, L: Polytope) -> Polytope:
    """Convex hull of all pairwise vertex sums."""
    if K.dim != L.dim:
        raise ValueError("dimension mismatch")
    if len(L.vertices) == 1:
        return K.translate(L.vertices[0])
    if len(K.vertices) == 1:
        return L.translate(K.vertices[0])
    pk, dk = K.int_vertices
    pl, dl = L.int_vertices
    D = dk * dl // math.gcd(dk, dl)
    fk, fl = D // dk, D // dl
    sums = {tuple(fk * a + fl * b for a, b in zip(p, q)) for p in pk for q in pl}
    return Polytope.from_vertices([tuple(Fraction(c, D) for c in s) for s in sums])


# -- JSON ----------------------------------------------------------------------


def to_json_dict(P: Polytope) -> dict:
    return {
        "dim": P.dim,
        "halfspaces": [
            {"a": [str(c) for c in h.normal], "b": str(h.offset)} for h in P.halfspaces
        ],
        "vertices": [[str(c) for c in v] for v in P.vertices],
    }


def from_json_dict(data: dict) -> Polytope:
    dim = int(data["dim"])
    if "halfspaces" in data and data["halfspaces"]:
        hs = [
            Halfspace.make([rat_parse(c) for c in h["a"]], rat_parse(h["b"]))
            for h in data["halfspaces"]
        ]
        return Polytope(dim, halfspaces=hs)
    if "vertices" in data and data["vertices"]:
        pts = [tuple(rat_parse(c) for c in v) for v in data["vertices"]]
        if any(len(p) != dim for p in pts):
            raise ValueError("vertex dimension mismatch")
        return Polytope.from_vertices(pts)
    raise ValueError("polytope JSON needs 'halfspaces' or 'vertices'")


def dumps(P: Polytope) -> str:
    return json.dumps(to_json_dict(P), indent=2)


def loads(text: str) -> Polytope:
    return from_json_dict(json.loads(text))
