"""Independent brute-force oracles used by the tests.

Nothing here imports the package's geometry; each routine recomputes a
quantity the slow, obvious way with Fraction arithmetic.
"""

from fractions import Fraction
from itertools import combinations


def solve(A, b):
    """Gauss-Jordan over Fraction; None if singular."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(v)] for row, v in zip(A, b)]
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [v / p for v in M[col]]
        for i in range(n):
            if i != col and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * c for a, c in zip(M[i], M[col])]
    return [M[i][n] for i in range(n)]


def feasible(A, b, x):
    return all(sum(Fraction(a) * xi for a, xi in zip(row, x)) <= bi for row, bi in zip(A, b))


def vertices(A, b):
    """All feasible points where ``d`` independent constraints are tight."""
    d = len(A[0])
    out = set()
    for rows in combinations(range(len(A)), d):
        x = solve([A[i] for i in rows], [b[i] for i in rows])
        if x is not None and feasible(A, b, x):
            out.add(tuple(x))
    return out


def lp_max(c, A, b):
    """Maximum of ``c.x`` over a bounded polyhedron, by vertex enumeration."""
    return max(sum(Fraction(ci) * xi for ci, xi in zip(c, x)) for x in vertices(A, b))


def lp_argmax_set(c, A, b):
    best = lp_max(c, A, b)
    return best, {x for x in vertices(A, b) if sum(Fraction(ci) * xi for ci, xi in zip(c, x)) == best}


def hull_facets_3d(points):
    """Facet planes of a full-dimensional 3-D hull, as a set of (primitive normal, offset)."""
    from math import gcd

    pts = [tuple(Fraction(c) for c in p) for p in set(map(tuple, points))]
    found = set()
    for p, q, r in combinations(pts, 3):
        u = [q[k] - p[k] for k in range(3)]
        v = [r[k] - p[k] for k in range(3)]
        n = [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
        if not any(n):
            continue
        den = 1
        for x in n:
            den = den * x.denominator // gcd(den, x.denominator)
        n = [int(x * den) for x in n]
        g = gcd(gcd(abs(n[0]), abs(n[1])), abs(n[2]))
        n = tuple(x // g for x in n)
        off = sum(a * b for a, b in zip(n, p))
        vals = [sum(a * b for a, b in zip(n, s)) for s in pts]
        if all(v <= off for v in vals):
            found.add((n, off))
        elif all(v >= off for v in vals):
            found.add((tuple(-x for x in n), -off))
    return found


def hull_facets_2d(points):
    from math import gcd

    pts = [tuple(Fraction(c) for c in p) for p in set(map(tuple, points))]
    found = set()
    for p, q in combinations(pts, 2):
        n = (q[1] - p[1], p[0] - q[0])
        den = n[0].denominator * n[1].denominator
        n = (int(n[0] * den), int(n[1] * den))
        g = gcd(abs(n[0]), abs(n[1]))
        n = (n[0] // g, n[1] // g)
        off = n[0] * p[0] + n[1] * p[1]
        vals = [n[0] * s[0] + n[1] * s[1] for s in pts]
        if all(v <= off for v in vals):
            found.add((n, off))
        elif all(v >= off for v in vals):
            found.add(((-n[0], -n[1]), -off))
    return found


def poly_integral(coeffs, a, b):
    """Integral over [a, b] of the polynomial with ascending ``coeffs``."""
    a, b = Fraction(a), Fraction(b)
    return sum(Fraction(c) * (b ** (k + 1) - a ** (k + 1)) / (k + 1) for k, c in enumerate(coeffs))


def poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += Fraction(a) * b
    return out
