# hankel/exact_arith.py
"""
Exact scalar building blocks: shifted factorials, binomials, terminating
hypergeometric sums and the Barnes G-function at positive integers.

Every result is a canonical `Fraction`. Gamma and Barnes-G *ratios* never reach
this module as transcendentals; callers reduce them to shifted factorials first.
"""
import math
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .exceptions import ZeroDenominator
from .models import as_rational


def pochhammer(a, n: int) -> Fraction:
    """(a)_n = a (a+1) ... (a+n-1); (a)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer is only defined here for n >= 0")
    a = as_rational(a)
    result = Fraction(1)
    for j in range(n):
        result *= a + j
    return result


def binomial(n: int, k: int) -> Fraction:
    if n < 0:
        raise ValueError("binomial needs n >= 0")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def factorial(n: int) -> Fraction:
    return Fraction(math.factorial(n))


def barnes_g_int(n: int) -> Fraction:
    """G(n) = 0! 1! ... (n-2)! for n >= 1."""
    if n <= 0:
        raise ValueError(f"barnes_g_int needs a positive integer, got {n}")
    return Fraction(reduce(lambda acc, i: acc * math.factorial(i), range(n - 1), 1))


def hyp_terminating(m: int, upper: Sequence, lower: Sequence, z) -> Fraction:
    """
    Sum of the hypergeometric series with leading upper parameter -m, which
    stops after m+1 terms:

        sum_{k=0}^{m} (-m)_k prod(upper)_k / prod(lower)_k * z^k / k!

    Terms are built by their ratio so no factorial is formed twice.
    """
    if m < 0:
        raise ValueError("hyp_terminating needs m >= 0")
    upper = [as_rational(a) for a in upper]
    lower = [as_rational(b) for b in lower]
    z = as_rational(z)

    for b in lower:
        if b.denominator == 1 and -(m - 1) <= b <= 0:
            raise ZeroDenominator(
                f"lower parameter {b} vanishes a shifted factorial within {m + 1} terms"
            )

    term = Fraction(1)
    total = Fraction(1)
    for k in range(m):
        ratio = Fraction(k - m) * z / (k + 1)
        for a in upper:
            ratio *= a + k
        for b in lower:
            ratio /= b + k
        term *= ratio
        if term == 0:
            break
        total += term
    return total
