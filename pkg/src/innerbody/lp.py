"""Dense exact simplex for small LPs over the rationals (Bland's rule)."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple


class Unbounded(ArithmeticError):
    pass


class Infeasible(ArithmeticError):
    pass


def maximize(
    c: Sequence, A: Sequence[Sequence], b: Sequence, x0: Sequence
) -> Tuple[Fraction, List[Fraction]]:
    """Maximize ``c.x`` subject to ``A x <= b`` with free variables.

    ``x0`` must be feasible.  It serves as the starting vertex after the
    substitution ``x = x0 + y+ - y-``, so no phase one is needed.
    Returns ``(optimum, x)``; raises :class:`Unbounded` or :class:`Infeasible`.
    """
    m = len(A)
    n = len(c)
    x0 = [Fraction(v) for v in x0]
    slack0 = [Fraction(b[i]) - sum(A[i][k] * x0[k] for k in range(n)) for i in range(m)]
    if any(s < 0 for s in slack0):
        raise Infeasible("starting point violates a constraint")

    # columns: y+ (n), y- (n), slack (m); last entry holds the rhs
    ncol = 2 * n + m
    T = []
    for i in range(m):
        row = [Fraction(A[i][k]) for k in range(n)]
        row += [-v for v in row]
        row += [Fraction(0)] * m
        row[2 * n + i] = Fraction(1)
        row.append(slack0[i])
        T.append(row)
    # reduced costs of the maximisation, stored as  z_j - c_j
    z = [Fraction(-ck) for ck in c] + [Fraction(ck) for ck in c] + [Fraction(0)] * m
    z.append(Fraction(0))
    basis = [2 * n + i for i in range(m)]

    while True:
        enter = next((j for j in range(ncol) if z[j] < 0), None)
        if enter is None:
            break
        best = None
        leave = -1
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave < 0:
            raise Unbounded("objective unbounded")
        _pivot(T, z, leave, enter)
        basis[leave] = enter

    y = [Fraction(0)] * ncol
    for i, j in enumerate(basis):
        y[j] = T[i][-1]
    x = [x0[k] + y[k] - y[n + k] for k in range(n)]
    value = sum(Fraction(c[k]) * x[k] for k in range(n))
    return value, x


def _pivot(T, z, r, s):
    prow = T[r]
    p = prow[s]
    if p != 1:
        prow[:] = [v / p for v in prow]
    for i, row in enumerate(T):
        if i != r:
            f = row[s]
            if f:
                row[:] = [a - f * pv for a, pv in zip(row, prow)]
    f = z[s]
    if f:
        z[:] = [a - f * pv for a, pv in zip(z, prow)]
