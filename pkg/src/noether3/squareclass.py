"""Square classes of rational numbers.

A class in Q^x / Q^x2 is stored as its signed squarefree representative.
Multiplying two classes needs only a gcd, so factorization is confined to
``square_class`` itself, where it is done by bounded trial division.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Union

from .errors import FactorizationLimit, SchemaMismatch, ZeroInput

Rational = Union[int, Fraction, str]

DEFAULT_TRIAL_BOUND = 10**6

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(q: Rational) -> Fraction:
    """Accept ints, Fractions, or strings like ``"-3"`` and ``"8/9"``."""
    if isinstance(q, bool):
        raise SchemaMismatch("booleans are not rationals")
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    if isinstance(q, str):
        m = _RATIONAL_RE.match(q.replace("−", "-"))
        if not m:
            raise SchemaMismatch(f"not a rational number: {q!r}")
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ZeroInput(f"zero denominator in {q!r}")
        return Fraction(int(m.group(1)), den)
    raise SchemaMismatch(f"cannot read {type(q).__name__} as a rational")


def _nonzero(q: Rational) -> Fraction:
    x = parse_rational(q)
    if x == 0:
        raise ZeroInput("zero has no square class")
    return x


def _squarefree_part(n: int, bound: int) -> int:
    """Product of primes dividing ``n > 0`` to an odd power."""
    out = 1
    p = 2
    while p * p <= n:
        if p > bound:
            if isqrt(n) ** 2 == n:
                return out
            raise FactorizationLimit(f"cofactor {n} has no factor up to {bound}")
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e % 2:
                out *= p
        p += 1 if p == 2 else 2
    return out * n if n > 1 else out


def square_class(q: Rational, bound: int = DEFAULT_TRIAL_BOUND) -> int:
    """Signed squarefree integer ``r`` with ``q / r`` a rational square."""
    x = _nonzero(q)
    # n/d and n*d differ by the square d^2
    m = abs(x.numerator) * x.denominator
    r = _squarefree_part(m, bound)
    return -r if x < 0 else r


def class_product(r: int, s: int) -> int:
    """Product of two squarefree representatives, again squarefree."""
    g = gcd(r, s)
    return (r // g) * (s // g)


def is_square(q: Rational) -> bool:
    x = _nonzero(q)
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def _is_fourth_power(n: int) -> bool:
    r = isqrt(n)
    if r * r != n:
        return False
    s = isqrt(r)
    return s * s == r


def in_minus4_fourth_powers(q: Rational) -> bool:
    """True iff ``q = -4 t^4`` for a nonzero rational ``t``."""
    t4 = -_nonzero(q) / 4
    if t4 < 0:
        return False
    # numerator and denominator are coprime, so each must be a fourth power
    return _is_fourth_power(t4.numerator) and _is_fourth_power(t4.denominator)


def class_span(qs: Iterable[Rational], bound: int = DEFAULT_TRIAL_BOUND) -> set[int]:
    """The subgroup of Q^x / Q^x2 generated by the classes of ``qs``."""
    span = {1}
    for q in qs:
        r = square_class(q, bound)
        if r not in span:
            span |= {class_product(r, s) for s in span}
    return span


def multiquadratic_degree(qs: Iterable[Rational], bound: int = DEFAULT_TRIAL_BOUND) -> int:
    """``[Q(sqrt q1, ..., sqrt qn) : Q]``, the order of the class span."""
    return len(class_span(qs, bound))
