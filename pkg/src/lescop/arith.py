"""Exact rational helpers: the sawtooth function and Dedekind sums.

All quantities are :class:`fractions.Fraction`, which already keeps values
in lowest terms with a positive denominator, so equality is structural.
"""
from fractions import Fraction
from math import floor, gcd
from typing import NamedTuple, Union

Rational = Union[int, Fraction]

__all__ = [
    "Fraction",
    "Slope",
    "as_fraction",
    "dedekind_sum",
    "dedekind_sum_direct",
    "dedekind_sum_fast",
    "dedekind_reciprocity_rhs",
    "format_fraction",
    "parse_fraction",
    "sawtooth",
]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def parse_fraction(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"``; decimal or float notation is refused."""
    s = text.strip()
    num, _, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if den else 1
    except ValueError:
        raise ValueError(f"not an exact rational: {text!r}") from None
    if d == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_fraction(x: Rational) -> str:
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Slope(NamedTuple):
    """A surgery slope ``p/q`` with ``q >= 1`` and ``gcd(|p|, q) == 1``."""

    p: int
    q: int

    @classmethod
    def make(cls, p: int, q: int = 1) -> "Slope":
        p, q = int(p), int(q)
        if q < 1:
            raise ValueError(f"slope denominator must be positive, got {p}/{q}")
        if gcd(p, q) != 1:
            raise ValueError(f"slope {p}/{q} is not in lowest terms")
        return cls(p, q)

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def sawtooth(x: Rational) -> Fraction:
    """The sawtooth ``((x))``: zero on integers, ``x - floor(x) - 1/2`` otherwise."""
    x = as_fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - Fraction(1, 2)


def _check_pair(p: int, q: int) -> int:
    if q == 0:
        raise ValueError("Dedekind sum needs a nonzero second argument")
    if gcd(p, q) != 1:
        raise ValueError(f"Dedekind sum arguments ({p}, {q}) are not coprime")
    return abs(q)


def dedekind_sum_direct(p: int, q: int) -> Fraction:
    """Term-by-term ``sum_{i=1}^{|q|} ((i/q)) ((i p / q))``.

    Costs ``O(|q|)`` integer operations; used as the reference value for
    :func:`dedekind_sum_fast`.  Every term has denominator dividing
    ``4 q^2`` (``((a/q)) = (2a - q) / 2q`` for ``0 < a < q``), so the
    numerators are summed as integers.
    """
    q = _check_pair(p, q)
    total = 0
    for i in range(1, q):
        b = (i * p) % q
        if b:
            total += (2 * i - q) * (2 * b - q)
    return Fraction(total, 4 * q * q)


def dedekind_reciprocity_rhs(p: int, q: int) -> Fraction:
    """Right-hand side ``(p^2 + q^2 + 1 - 3pq) / (12pq)`` of the reciprocity law."""
    return Fraction(p * p + q * q + 1 - 3 * p * q, 12 * p * q)


def dedekind_sum_fast(p: int, q: int) -> Fraction:
    """Dedekind sum ``s(p, q)`` in ``O(log q)`` steps.

    Reduces ``p`` modulo ``q`` (periodicity) and then alternates the
    reciprocity law with another reduction, as in Euclid's algorithm.
    The sign of ``q`` is irrelevant: flipping it negates both sawtooth
    factors of every term.
    """
    q = _check_pair(p, q)
    total = Fraction(0)
    sign = 1
    p %= q
    # invariant: s(original) = total + sign * s(p, q) with 0 <= p < q
    while p != 0:
        total += sign * (Fraction(p * p + q * q + 1, 12 * p * q) - Fraction(1, 4))
        sign = -sign
        p, q = q % p, p
    return total


dedekind_sum = dedekind_sum_fast
