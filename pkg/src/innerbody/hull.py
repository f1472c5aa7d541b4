"""Exact convex hulls of integer point sets in the plane and in space.

Points are integer tuples (callers scale rationals by a common
denominator first).  Every predicate is an integer sign test, so the
output is exact; coplanar and collinear inputs are handled by dropping
non-extreme points.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Dict, List, Sequence, Tuple

Point = Tuple[int, ...]


def _cross2(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _cross3(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u, v) -> int:
    return sum(x * y for x, y in zip(u, v))


def _primitive(v):
    g = reduce(math.gcd, (abs(c) for c in v))
    return tuple(c // g for c in v)


def hull2(points: Sequence[Point]) -> List[Point]:
    """Counter-clockwise extreme points (Andrew's monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: List[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross2(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross2(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    ring = lower[:-1] + upper[:-1]
    if len(ring) == 2 and ring[0] == ring[1]:
        return ring[:1]
    return ring


def order_polygon3(points: Sequence[Point], normal: Sequence[int]) -> List[Point]:
    """Extreme points of a planar point set in 3-space, CCW about ``normal``."""
    k = max(range(3), key=lambda i: abs(normal[i]))
    i1, i2 = (k + 1) % 3, (k + 2) % 3
    proj = {}
    for p in points:
        proj[(p[i1], p[i2])] = p
    ring = hull2(list(proj))
    out = [proj[q] for q in ring]
    if normal[k] < 0:
        out.reverse()
    return out


def affine_rank(points: Sequence[Point]) -> int:
    """Dimension of the affine hull of a finite integer point set (-1 if empty)."""
    if not points:
        return -1
    base = points[0]
    rows = [list(_sub(p, base)) for p in points[1:]]
    return _rank(rows)


def _rank(rows: List[List[int]]) -> int:
    rows = [r[:] for r in rows if any(r)]
    if not rows:
        return 0
    ncol = len(rows[0])
    rank = 0
    for col in range(ncol):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f, g = rows[i][col], pr[col]
                rows[i] = [g * a - f * b for a, b in zip(rows[i], pr)]
        rank += 1
        if rank == len(rows):
            break
    return rank


class _Face:
    __slots__ = ("verts", "normal", "offset", "outside", "alive")

    def __init__(self, verts, pts):
        a, b, c = (pts[i] for i in verts)
        self.verts = verts
        self.normal = _cross3(_sub(b, a), _sub(c, a))
        self.offset = _dot(self.normal, a)
        self.outside: List[int] = []
        self.alive = True

    def height(self, p) -> int:
        n = self.normal
        return n[0] * p[0] + n[1] * p[1] + n[2] * p[2] - self.offset


def hull3(points: Sequence[Point]):
    """Facets of the 3-D hull of a full-dimensional integer point set.

    Returns a list of ``(normal, offset)`` pairs with primitive integer
    outward normals, ``normal . x <= offset`` for all points, one entry per
    facet.  Raises ``ValueError`` when the points are not full-dimensional.
    """
    pts = sorted(set(points))
    n = len(pts)
    if n < 4:
        raise ValueError("fewer than four points")
    # initial tetrahedron from extreme points
    i0 = 0
    i1 = n - 1
    if pts[i0] == pts[i1]:
        raise ValueError("degenerate point set")
    d01 = _sub(pts[i1], pts[i0])
    i2 = max(range(n), key=lambda i: _norm2(_cross3(d01, _sub(pts[i], pts[i0]))))
    nrm = _cross3(d01, _sub(pts[i2], pts[i0]))
    if not any(nrm):
        raise ValueError("degenerate point set")
    i3 = max(range(n), key=lambda i: abs(_dot(nrm, _sub(pts[i], pts[i0]))))
    vol = _dot(nrm, _sub(pts[i3], pts[i0]))
    if vol == 0:
        raise ValueError("degenerate point set")
    if vol > 0:
        i1, i2 = i2, i1
    tets = [(i0, i1, i2), (i0, i3, i1), (i1, i3, i2), (i2, i3, i0)]
    faces: List[_Face] = [_Face(t, pts) for t in tets]
    edge_face: Dict[Tuple[int, int], _Face] = {}
    for f in faces:
        _register(f, edge_face)

    used = {i0, i1, i2, i3}
    for idx in range(n):
        if idx in used:
            continue
        p = pts[idx]
        for f in faces:
            if f.height(p) > 0:
                f.outside.append(idx)
                break

    stack = [f for f in faces if f.outside]
    while stack:
        f = stack.pop()
        if not f.alive or not f.outside:
            continue
        apex = max(f.outside, key=lambda i: f.height(pts[i]))
        p = pts[apex]
        visible = [f]
        f.alive = False
        horizon = []
        todo = [f]
        while todo:
            g = todo.pop()
            a, b, c = g.verts
            for e in ((a, b), (b, c), (c, a)):
                h = edge_face[(e[1], e[0])]
                if not h.alive:
                    continue
                if h.height(p) > 0:
                    h.alive = False
                    visible.append(h)
                    todo.append(h)
                else:
                    horizon.append(e)
        orphans = []
        for g in visible:
            a, b, c = g.verts
            for e in ((a, b), (b, c), (c, a)):
                if edge_face.get(e) is g:
                    del edge_face[e]
            orphans.extend(g.outside)
        new_faces = []
        for a, b in horizon:
            nf = _Face((a, b, apex), pts)
            _register(nf, edge_face)
            new_faces.append(nf)
        for idx in orphans:
            if idx == apex:
                continue
            q = pts[idx]
            for nf in new_faces:
                if nf.height(q) > 0:
                    nf.outside.append(idx)
                    break
        faces = [g for g in faces if g.alive] + new_faces
        stack.extend(nf for nf in new_faces if nf.outside)

    planes = {}
    for f in faces:
        if not f.alive:
            continue
        g = reduce(math.gcd, (abs(c) for c in f.normal))
        key = tuple(c // g for c in f.normal)
        planes[key] = f.offset // g
    return sorted(planes.items())


def _register(f: _Face, edge_face) -> None:
    a, b, c = f.verts
    edge_face[(a, b)] = f
    edge_face[(b, c)] = f
    edge_face[(c, a)] = f


def _norm2(v) -> int:
    return sum(c * c for c in v)
