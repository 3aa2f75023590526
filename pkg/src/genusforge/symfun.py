"""Symmetric functions in the elementary / complete / power-sum bases.

Conversions run through the generating-function identities

    sum_k e_k z^k = exp(sum_n (-1)^(n+1) s_n z^n / n),
    sum_k h_k z^k = exp(sum_n s_n z^n / n),
    (sum_k h_k z^k) * (sum_k e_k (-z)^k) = 1,

so a single engine serves basis changes, the zeta-value specialization, the
Chern-to-Pontryagin rewriting in the squared alphabet, and Hirzebruch
multiplicative sequences.  Root expansions over x_1..x_m provide the
independent oracle for all of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from genusforge.fgl import CheckResult
from genusforge.ring import RingElement, generator_info
from genusforge.series import Series1, exp_series, log_series

__all__ = [
    "ChernPolynomial",
    "OddContentError",
    "NotSymmetricError",
    "SymPoly",
    "convert",
    "expand_in_roots",
    "multiplicative_sequence",
    "pontryagin_from_chern",
    "power_sum_over",
    "series_product_over_alphabet",
    "symmetric_in_elementary",
    "symplectic_power_sum_check",
    "truncate_roots",
    "x_degree",
    "zeta_specialize",
]

_ZERO = RingElement.zero()
_ONE = RingElement.one()

_BASIS_PREFIX = {"E": "e", "H": "h", "P": "s"}


class OddContentError(ValueError):
    """An odd power sum survived where only even content is allowed."""


class NotSymmetricError(ValueError):
    """A root polynomial fed to the basis converter is not symmetric."""


@dataclass(frozen=True)
class SymPoly:
    """A symmetric-function expression in one named basis.

    basis "E" uses generators e1, e2, ...; "H" uses h1, h2, ...; "P" uses the
    power sums s1, s2, ....  Coefficients are rational.
    """

    basis: str
    poly: RingElement

    def __post_init__(self):
        basis = self.basis.upper()
        if basis not in _BASIS_PREFIX:
            raise ValueError(f"basis must be one of E, H, P, not {self.basis!r}")
        object.__setattr__(self, "basis", basis)
        prefix = _BASIS_PREFIX[basis]
        for name in self.poly.generators():
            if not (name.startswith(prefix) and name[len(prefix):].isdigit()):
                raise ValueError(f"generator {name!r} invalid in basis {basis}")

    @property
    def degree(self) -> int:
        return max((w for w in (_mono_weight(m) for m, _ in self.poly.terms())), default=0)

    @staticmethod
    def e(k: int) -> "SymPoly":
        return SymPoly("E", RingElement.gen(f"e{k}"))

    @staticmethod
    def h(k: int) -> "SymPoly":
        return SymPoly("H", RingElement.gen(f"h{k}"))

    @staticmethod
    def p(k: int) -> "SymPoly":
        return SymPoly("P", RingElement.gen(f"s{k}"))

    def __add__(self, other: "SymPoly") -> "SymPoly":
        if self.basis != other.basis:
            raise ValueError("mixed bases; convert first")
        return SymPoly(self.basis, self.poly + other.poly)

    def __mul__(self, other: Union["SymPoly", int, Fraction]) -> "SymPoly":
        if isinstance(other, SymPoly):
            if self.basis != other.basis:
                raise ValueError("mixed bases; convert first")
            return SymPoly(self.basis, self.poly * other.poly)
        return SymPoly(self.basis, self.poly * other)

    __rmul__ = __mul__

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + SymPoly(other.basis, -other.poly)

    def to_obj(self) -> dict:
        prefix = _BASIS_PREFIX[self.basis]
        terms = []
        for m, c in self.poly.terms():
            terms.append(
                {
                    "coeff": f"{c.numerator}/{c.denominator}",
                    "exps": {name[len(prefix):]: e for name, e in m},
                }
            )
        return {"basis": self.basis, "terms": terms}

    @staticmethod
    def from_obj(obj: Mapping) -> "SymPoly":
        basis = str(obj["basis"]).upper()
        prefix = _BASIS_PREFIX[basis]
        acc = _ZERO
        for term in obj["terms"]:
            mono = _ONE
            for idx, e in term["exps"].items():
                mono = mono * RingElement.gen(f"{prefix}{int(idx)}", int(e))
            acc = acc + mono * Fraction(term["coeff"])
        return SymPoly(basis, acc)


def _mono_weight(m) -> int:
    return sum(generator_info(name).weight * e for name, e in m)


# -- basis conversion tables ----------------------------------------------------


def _p_series(degree: int, signs: bool) -> Series1:
    """sum_n ((-1)^(n+1) if signs else 1) s_n z^n / n to the given degree."""
    coeffs = [_ZERO]
    for n in range(1, degree + 1):
        sign = (-1) ** (n + 1) if signs else 1
        coeffs.append(RingElement.gen(f"s{n}", coeff=Fraction(sign, n)))
    return Series1(coeffs, degree)


def _conversion_table(src: str, dst: str, degree: int) -> "dict[str, RingElement]":
    """Express src-basis generators up to `degree` in the dst basis."""
    if degree < 1:
        return {}
    if src == "E" and dst == "P":
        series = exp_series(_p_series(degree, signs=True))
        return {f"e{k}": series[k] for k in range(1, degree + 1)}
    if src == "H" and dst == "P":
        series = exp_series(_p_series(degree, signs=False))
        return {f"h{k}": series[k] for k in range(1, degree + 1)}
    if src == "P" and dst == "E":
        egen = Series1([_ONE] + [RingElement.gen(f"e{k}") for k in range(1, degree + 1)], degree)
        lg = log_series(egen)
        return {
            f"s{k}": lg[k] * Fraction((-1) ** (k + 1) * k)
            for k in range(1, degree + 1)
        }
    if src == "P" and dst == "H":
        hgen = Series1([_ONE] + [RingElement.gen(f"h{k}") for k in range(1, degree + 1)], degree)
        lg = log_series(hgen)
        return {f"s{k}": lg[k] * Fraction(k) for k in range(1, degree + 1)}
    if src == "E" and dst == "H":
        # E(z) * H(-z) = 1, so e_k = [z^k] (sum h_j (-z)^j)^(-1)
        hneg = Series1(
            [_ONE] + [RingElement.gen(f"h{k}", coeff=(-1) ** k) for k in range(1, degree + 1)],
            degree,
        )
        inv = Series1.constant(1, degree) / hneg
        return {f"e{k}": inv[k] for k in range(1, degree + 1)}
    if src == "H" and dst == "E":
        eneg = Series1(
            [_ONE] + [RingElement.gen(f"e{k}", coeff=(-1) ** k) for k in range(1, degree + 1)],
            degree,
        )
        inv = Series1.constant(1, degree) / eneg
        return {f"h{k}": inv[k] for k in range(1, degree + 1)}
    raise ValueError(f"no table {src} -> {dst}")


def convert(x: SymPoly, target: str) -> SymPoly:
    """Change basis; mutually inverse across all pairs."""
    target = target.upper()
    if target not in _BASIS_PREFIX:
        raise ValueError(f"unknown basis {target!r}")
    if target == x.basis:
        return x
    table = _conversion_table(x.basis, target, x.degree)
    return SymPoly(target, x.poly.substitute(table))


# -- root expansions (the oracle) ------------------------------------------------


def _roots(m: int) -> "list[RingElement]":
    return [RingElement.gen(f"x{i}") for i in range(1, m + 1)]


def elementary_in_roots(k: int, m: int) -> RingElement:
    """e_k(x_1..x_m) via the product Pi (1 + x_i z)."""
    prod = Series1.constant(1, k)
    for r in _roots(m):
        prod = prod * Series1([_ONE, r], k)
    return prod[k]


def power_sum_over(alphabet: Sequence[RingElement], k: int) -> RingElement:
    """The power sum of an explicit alphabet of ring elements."""
    acc = _ZERO
    for a in alphabet:
        acc = acc + a**k
    return acc


def complete_in_roots(k: int, m: int) -> RingElement:
    """h_k(x_1..x_m) via 1 / Pi (1 - x_i z)."""
    prod = Series1.constant(1, k)
    for r in _roots(m):
        prod = prod * Series1([_ONE, -r], k)
    return (Series1.constant(1, k) / prod)[k]


def expand_in_roots(x: SymPoly, m: int) -> RingElement:
    """Substitute explicit root polynomials for the basis generators."""
    table: "dict[str, RingElement]" = {}
    prefix = _BASIS_PREFIX[x.basis]
    degree = x.degree
    for k in range(1, degree + 1):
        name = f"{prefix}{k}"
        if x.basis == "E":
            table[name] = elementary_in_roots(k, m)
        elif x.basis == "H":
            table[name] = complete_in_roots(k, m)
        else:
            table[name] = power_sum_over(_roots(m), k)
    return x.poly.substitute(table)


# -- symmetric root polynomials back to the e-basis --------------------------------


def x_degree(f: RingElement) -> int:
    """Largest total degree in the root generators x_i."""
    best = 0
    for m, _ in f.terms():
        d = sum(e for name, e in m if name[0] == "x" and name[1:].isdigit())
        best = max(best, d)
    return best


def _split_roots(f: RingElement, m: int):
    """Split into {root exponent vector: coefficient free of roots}."""
    table: "dict[tuple[int, ...], RingElement]" = {}
    for mono, c in f.terms():
        exps = [0] * m
        rest = []
        for name, e in mono:
            if name[0] == "x" and name[1:].isdigit():
                i = int(name[1:])
                if i > m:
                    raise ValueError(f"root {name} outside x1..x{m}")
                exps[i - 1] = e
            else:
                rest.append((name, e))
        key = tuple(exps)
        add = RingElement({tuple(rest): c})
        table[key] = table.get(key, _ZERO) + add
    return {k: v for k, v in table.items() if not v.is_zero()}


def truncate_roots(f: RingElement, cap: int) -> RingElement:
    """Drop monomials of root degree greater than cap."""
    keep = {}
    for mono, c in f.terms():
        d = sum(e for name, e in mono if name[0] == "x" and name[1:].isdigit())
        if d <= cap:
            keep[mono] = c
    return RingElement(keep)


def symmetric_in_elementary(f: RingElement, m: int, out_prefix: str = "e") -> RingElement:
    """Rewrite a symmetric polynomial in x_1..x_m as a polynomial in e_k.

    Classical leading-term elimination: subtract coeff * e_1^(a1-a2) *
    e_2^(a2-a3) * ... for the lex-leading exponent a, which strictly
    decreases the leading term.  Coefficients may involve other generators;
    when they themselves contain e-generators (the universal coefficient
    ring), pass a different out_prefix to keep the alphabets apart.
    Raises NotSymmetricError when the leading exponent is not sorted.
    """
    remaining = _split_roots(f, m)
    result = _ZERO
    expanded_cache: "dict[tuple[int, ...], dict[tuple[int, ...], RingElement]]" = {}
    while remaining:
        lead = max(remaining)
        coeff = remaining[lead]
        if any(lead[i] < lead[i + 1] for i in range(m - 1)):
            raise NotSymmetricError(f"leading exponent {lead} is not dominant")
        lam = tuple(
            lead[i] - (lead[i + 1] if i + 1 < m else 0) for i in range(m)
        )
        emono = _ONE
        for i, a in enumerate(lam):
            if a:
                emono = emono * RingElement.gen(f"{out_prefix}{i + 1}", a)
        if lam not in expanded_cache:
            expansion = _ONE
            for i, a in enumerate(lam):
                if a:
                    expansion = expansion * elementary_in_roots(i + 1, m) ** a
            expanded_cache[lam] = _split_roots(expansion, m)
        for key, v in expanded_cache[lam].items():
            remaining[key] = remaining.get(key, _ZERO) - coeff * v
            if remaining[key].is_zero():
                del remaining[key]
        result = result + coeff * emono
    return result


# -- zeta specialization ------------------------------------------------------------


def zeta_specialize(x: SymPoly, presentation: str = "raw") -> RingElement:
    """Send s_1 to gamma and s_k to zeta(k); normalized variant divides by
    the k-th power of the period and reduces even zetas to rationals."""
    if presentation not in ("raw", "normalized"):
        raise ValueError("presentation must be 'raw' or 'normalized'")
    p = convert(x, "P")
    table: "dict[str, RingElement]" = {}
    for name in p.poly.generators():
        k = int(name[1:])
        if k == 1:
            value = RingElement.gen("gamma")
        else:
            value = RingElement.gen(f"zeta{k}")
        if presentation == "normalized":
            value = value * RingElement.gen("ipi2", -k)
        table[name] = value
    out = p.poly.substitute(table)
    return out.reduce() if presentation == "normalized" else out


# -- Pontryagin rewriting --------------------------------------------------------------


@dataclass(frozen=True)
class ChernPolynomial:
    """A polynomial in Chern classes c_k (weight k) or Pontryagin classes p_k
    (weight 2k), with RingElement coefficients."""

    poly: RingElement
    classes: str = "c"

    def __post_init__(self):
        if self.classes not in ("c", "p"):
            raise ValueError("classes must be 'c' or 'p'")

    def weight_part(self, w: int) -> RingElement:
        keep = {}
        for mono, c in self.poly.terms():
            cw = sum(
                e * (int(name[1:]) * (2 if self.classes == "p" else 1))
                for name, e in mono
                if name[0] == self.classes and name[1:].isdigit()
            )
            if cw == w:
                keep[mono] = c
        return RingElement(keep)

    def to_obj(self) -> dict:
        return {"classes": self.classes, "poly": self.poly.to_obj()}


def pontryagin_from_chern(
    f: Union[SymPoly, RingElement], m: Optional[int] = None
) -> ChernPolynomial:
    """Rewrite an even symmetric expression as a polynomial in p_k = e_k(x_i^2).

    Accepts a SymPoly or a symmetric root polynomial (then m is the root
    count).  Power sums become the squared-alphabet power sums s_{2k} -> s_k,
    the generic converter turns those into elementary symmetric functions,
    and the result is read off in Pontryagin generators.  Raises
    OddContentError when an odd power sum survives.
    """
    if isinstance(f, RingElement):
        if m is None:
            raise ValueError("m (number of roots) required for root input")
        epoly = symmetric_in_elementary(f, m)
        sym = SymPoly("E", epoly) if _only_rational(epoly) else None
        if sym is None:
            raise ValueError("root polynomial must have rational coefficients")
        x = sym
    else:
        x = f
    p = convert(x, "P")
    squared: "dict[str, RingElement]" = {}
    for name in p.poly.generators():
        k = int(name[1:])
        if k % 2:
            raise OddContentError(f"odd power sum s{k} present")
        squared[name] = RingElement.gen(f"s{k // 2}")
    halved = SymPoly("P", p.poly.substitute(squared))
    in_e = convert(halved, "E")
    rename = {
        name: RingElement.gen(f"p{name[1:]}") for name in in_e.poly.generators()
    }
    return ChernPolynomial(in_e.poly.substitute(rename), "p")


def _only_rational(f: RingElement) -> bool:
    return all(
        name[0] == "e" and name[1:].isdigit() for name in f.generators()
    )


def symplectic_power_sum_check(m: int, k: int) -> CheckResult:
    """Power sums of the doubled alphabet {x_i, -x_i}: even ones double,
    odd ones cancel."""
    roots = _roots(m)
    doubled = roots + [-r for r in roots]
    even = power_sum_over(doubled, 2 * k) - 2 * power_sum_over(roots, 2 * k)
    odd = power_sum_over(doubled, 2 * k + 1)
    if not even.is_zero():
        return CheckResult.fail(coefficient=even, detail="even power sum mismatch")
    if not odd.is_zero():
        return CheckResult.fail(coefficient=odd, detail="odd power sum nonzero")
    return CheckResult.ok()


# -- multiplicative sequences ------------------------------------------------------------


def series_product_over_alphabet(
    H: Series1, alphabet: Sequence[RingElement], cap: int
) -> RingElement:
    """Pi_a H(a) truncated to root degree <= cap, for monomial alphabet entries."""
    result = _ONE
    for a in alphabet:
        factor = _ZERO
        apow = _ONE
        for k in range(cap + 1):
            c = H[k]
            if not c.is_zero():
                factor = factor + c * apow
            apow = apow * a
        result = truncate_roots(result * factor, cap)
    return result


def multiplicative_sequence(H: Series1, n: int) -> "list[ChernPolynomial]":
    """The Hirzebruch sequence K_1..K_n of a characteristic series H (H(0)=1).

    K_j is the root-degree-j part of Pi_{i<=n} H(x_i) rewritten in the Chern
    classes c_k = e_k(x_i); n generic roots suffice because e_1..e_n are
    algebraically independent there.
    """
    if not H[0].is_one():
        raise ValueError("characteristic series must have constant term 1")
    prod = series_product_over_alphabet(H.truncate(min(H.order, n)), _roots(n), n)
    out = []
    for j in range(1, n + 1):
        part = RingElement(
            {
                mono: c
                for mono, c in prod.terms()
                if sum(e for name, e in mono if name[0] == "x" and name[1:].isdigit()) == j
            }
        )
        # Emit Chern generators directly: coefficients of H may already carry
        # e-generators (the universal ring), which must stay distinct.
        out.append(ChernPolynomial(symmetric_in_elementary(part, n, out_prefix="c"), "c"))
    return out
