"""Exact rational scalars and integer direction vectors."""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Tuple, Union

Rational = Fraction
IntVector = Tuple[int, ...]
Number = Union[int, Fraction]

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class NotPythagorean(ValueError):
    """Raised when a vector's Euclidean norm is irrational."""

    def __init__(self, v: Sequence[int]):
        super().__init__(f"norm of {tuple(v)} is irrational")
        self.vector = tuple(v)


def rat_parse(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a reduced Fraction."""
    if isinstance(text, int):
        return Fraction(text)
    m = _RAT_RE.match(str(text))
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def rat_str(x: Number) -> str:
    return str(Fraction(x))


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return rat_parse(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def _check_nonzero(v: Sequence[int]) -> None:
    if not any(v):
        raise ValueError("zero vector")


def norm_squared(v: Sequence[Number]) -> Number:
    return sum(c * c for c in v)


def norm_exact(v: Sequence[int]) -> Fraction:
    """Euclidean norm of an integer vector, or NotPythagorean if irrational."""
    _check_nonzero(v)
    sq = norm_squared(v)
    root = math.isqrt(sq)
    if root * root != sq:
        raise NotPythagorean(v)
    return Fraction(root)


def is_pythagorean(v: Sequence[int]) -> bool:
    sq = norm_squared(v)
    root = math.isqrt(sq)
    return root * root == sq


def primitive_direction(v: Sequence[int]) -> IntVector:
    """Divide by the gcd of the coordinates; the sign is kept."""
    _check_nonzero(v)
    g = reduce(math.gcd, (abs(int(c)) for c in v))
    return tuple(int(c) // g for c in v)


def integer_direction(v: Sequence[Number]) -> IntVector:
    """Primitive integer vector positively parallel to a rational vector."""
    fr = [Fraction(c) for c in v]
    den = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in fr), 1)
    return primitive_direction([int(c * den) for c in fr])


def dot(u: Sequence[Number], v: Sequence[Number]) -> Number:
    return sum(a * b for a, b in zip(u, v))


def cross(u: Sequence[Number], v: Sequence[Number]):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def lcm_of(values: Iterable[int]) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


def common_denominator(points: Iterable[Sequence[Fraction]]) -> int:
    return lcm_of(c.denominator for p in points for c in p)


def to_integer_points(points: Sequence[Sequence[Fraction]]):
    """Scale rational points by a common denominator D; returns (int points, D)."""
    D = common_denominator(points)
    return [tuple(int(c * D) for c in p) for p in points], D
