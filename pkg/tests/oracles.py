"""Independent oracles used to freeze expected values.

Each oracle deliberately avoids the code path it checks: Bernoulli numbers
via Akiyama-Tanigawa instead of the binomial recurrence, series reversion
via the Lagrange formula instead of Newton iteration, elementary symmetric
polynomials by brute-force subset enumeration, and CP^n Chern numbers by
literal polynomial expansion of (1 + x)^(n+1).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from genusforge.ring import RingElement
from genusforge.series import Series1


def bernoulli_akiyama_tanigawa(n: int) -> Fraction:
    """B_n by the Akiyama-Tanigawa triangle (adjusted to B_1 = -1/2)."""
    A = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        A[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            A[j - 1] = j * (A[j - 1] - A[j])
    value = A[0]  # the triangle yields the B_1 = +1/2 convention
    if n == 1:
        value = -value
    return value


def lagrange_revert(f: Series1) -> Series1:
    """Compositional inverse via [z^n] g = (1/n) [z^(n-1)] (z/f)^n."""
    n = f.order
    shifted = Series1(f.coefficients()[1:], n - 1)  # f / z
    base = Series1.constant(1, n - 1) / shifted
    out = [RingElement.zero()]
    power = Series1.constant(1, n - 1)
    for k in range(1, n + 1):
        power = power * base
        out.append(power[k - 1] * Fraction(1, k))
    return Series1(out, n)


def elementary_bruteforce(k: int, roots) -> RingElement:
    """e_k over an explicit alphabet by subset enumeration."""
    total = RingElement.zero()
    for combo in itertools.combinations(list(roots), k):
        term = RingElement.one()
        for r in combo:
            term = term * r
        total = total + term
    return total


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def cpn_chern_numbers_oracle(n: int) -> "dict[tuple[int, ...], Fraction]":
    """Chern numbers of CP^n by expanding the actual polynomials c_i = C(n+1, i) x^i."""
    from genusforge.genus import partitions

    out = {}
    for lam in partitions(n):
        poly = [Fraction(1)]
        for part in lam:
            c_part = [Fraction(0)] * part + [Fraction(math.comb(n + 1, part))]
            poly = _poly_mul(poly, c_part)
        out[lam] = poly[n] if len(poly) > n else Fraction(0)
    return out


def divisor_sigma(j: int, n: int) -> int:
    return sum(d**j for d in range(1, n + 1) if n % d == 0)


def euler_product_inv_sq(q_order: int) -> "list[Fraction]":
    """Coefficients of Pi_{n>=1} (1 - q^n)^(-2) up to q^q_order."""
    coeffs = [Fraction(1)] + [Fraction(0)] * q_order
    for n in range(1, q_order + 1):
        for _ in range(2):  # two factors of 1/(1-q^n)
            for k in range(n, q_order + 1):
                coeffs[k] += coeffs[k - n]
    return coeffs
