"""Truncated power series over the exact coefficient ring.

Series1 is a dense univariate series c_0 + c_1 z + ... + c_N z^N; Series2 is
a bivariate series truncated by total degree.  All operations truncate to the
order of their inputs and never consult coefficients beyond it, so
truncate_M(op(a, b)) == op(truncate_M(a), truncate_M(b)) for M <= N.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Mapping, Optional, Union

from genusforge.ring import RingElement

__all__ = [
    "Series1",
    "Series2",
    "BadConstantTermError",
    "NonUnitDivisionError",
    "NotRevertibleError",
    "bivariate_from_exp",
    "compose1_2",
    "exp_series",
    "log_series",
    "sqrt_series",
]

Scalar = Union[int, Fraction, RingElement]

_ZERO = RingElement.zero()
_ONE = RingElement.one()


class NonUnitDivisionError(ArithmeticError):
    """Division by a series whose constant term is not invertible."""


class NotRevertibleError(ArithmeticError):
    """Reversion of a series without invertible linear part (or f(0) != 0)."""


class BadConstantTermError(ArithmeticError):
    """exp/log/sqrt/compose input has the wrong constant term."""


def _coerce_elem(value: Scalar) -> RingElement:
    if isinstance(value, RingElement):
        return value
    return RingElement.from_rational(value)


class Series1:
    """Univariate truncated power series with RingElement coefficients."""

    __slots__ = ("order", "_coeffs")

    def __init__(self, coeffs, order: Optional[int] = None):
        coeffs = [_coerce_elem(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        coeffs = coeffs[: order + 1]
        coeffs += [_ZERO] * (order + 1 - len(coeffs))
        self.order = order
        self._coeffs = tuple(coeffs)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zeros(order: int) -> "Series1":
        return Series1([], order)

    @staticmethod
    def constant(value: Scalar, order: int) -> "Series1":
        return Series1([value], order)

    @staticmethod
    def x(order: int) -> "Series1":
        """The identity series z."""
        return Series1([0, 1], order)

    @staticmethod
    def from_function(fn: Callable[[int], Scalar], order: int) -> "Series1":
        return Series1([fn(n) for n in range(order + 1)], order)

    # -- inspection ----------------------------------------------------------

    def __getitem__(self, n: int) -> RingElement:
        if 0 <= n <= self.order:
            return self._coeffs[n]
        return _ZERO

    def coefficients(self) -> "tuple[RingElement, ...]":
        return self._coeffs

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self._coeffs)

    def valuation(self) -> Optional[int]:
        for n, c in enumerate(self._coeffs):
            if not c.is_zero():
                return n
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series1):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.order, self._coeffs))

    def truncate(self, order: int) -> "Series1":
        if order >= self.order:
            return self
        return Series1(self._coeffs[: order + 1], order)

    def map_coefficients(self, fn: Callable[[RingElement], RingElement]) -> "Series1":
        return Series1([fn(c) for c in self._coeffs], self.order)

    # -- arithmetic ----------------------------------------------------------

    def _match(self, other: "Series1") -> int:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        return self.order

    def __add__(self, other) -> "Series1":
        if isinstance(other, Series1):
            n = self._match(other)
            return Series1([a + b for a, b in zip(self._coeffs, other._coeffs)], n)
        other = _coerce_elem(other)
        coeffs = list(self._coeffs)
        coeffs[0] = coeffs[0] + other
        return Series1(coeffs, self.order)

    __radd__ = __add__

    def __neg__(self) -> "Series1":
        return Series1([-c for c in self._coeffs], self.order)

    def __sub__(self, other) -> "Series1":
        return self + (-other if isinstance(other, Series1) else -_coerce_elem(other))

    def __rsub__(self, other) -> "Series1":
        return (-self) + other

    def __mul__(self, other) -> "Series1":
        if not isinstance(other, Series1):
            k = _coerce_elem(other)
            return Series1([c * k for c in self._coeffs], self.order)
        n = self._match(other)
        out = [_ZERO] * (n + 1)
        for i, a in enumerate(self._coeffs):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other._coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Series1(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Series1":
        if k < 0:
            raise ValueError("negative series powers are not supported")
        result = Series1.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other) -> "Series1":
        if not isinstance(other, Series1):
            return self * _coerce_elem(other).inverse()
        n = self._match(other)
        try:
            inv0 = other._coeffs[0].inverse()
        except ArithmeticError as exc:
            raise NonUnitDivisionError(
                "division requires an invertible constant term"
            ) from exc
        out: "list[RingElement]" = []
        for k in range(n + 1):
            acc = self._coeffs[k]
            for j in range(k):
                b = other._coeffs[k - j]
                if not b.is_zero() and not out[j].is_zero():
                    acc = acc - out[j] * b
            out.append(acc * inv0)
        return Series1(out, n)

    # -- calculus ------------------------------------------------------------

    def differentiate(self) -> "Series1":
        """Formal derivative; the result has order one less."""
        if self.order == 0:
            return Series1.zeros(0)
        return Series1(
            [(n + 1) * self._coeffs[n + 1] for n in range(self.order)],
            self.order - 1,
        )

    def integrate(self) -> "Series1":
        """Formal antiderivative with zero constant; order one more."""
        out = [_ZERO]
        for n, c in enumerate(self._coeffs):
            out.append(c * Fraction(1, n + 1))
        return Series1(out, self.order + 1)

    # -- composition ---------------------------------------------------------

    def compose(self, inner: "Series1") -> "Series1":
        """self(inner(z)); inner must have zero constant term."""
        if not inner._coeffs[0].is_zero():
            raise BadConstantTermError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        outer = self.truncate(n)
        inner = inner.truncate(n)
        result = Series1.constant(outer._coeffs[n], n)
        for k in range(n - 1, -1, -1):
            result = result * inner + outer._coeffs[k]
        return result

    def revert(self) -> "Series1":
        """Compositional inverse by order-doubling Newton iteration.

        Requires f(0) = 0 and an invertible linear coefficient.
        """
        if not self._coeffs[0].is_zero():
            raise NotRevertibleError("series must vanish at 0")
        try:
            inv1 = self._coeffs[1].inverse()
        except ArithmeticError as exc:
            raise NotRevertibleError("linear coefficient must be invertible") from exc
        n = self.order
        g = Series1([_ZERO, inv1], 1)
        prec = 1
        ident = Series1.x(n)
        deriv = self.differentiate()
        while prec < n:
            prec = min(2 * prec, n)
            f_t = self.truncate(prec)
            g = Series1(g._coeffs, prec)
            err = f_t.compose(g) - ident.truncate(prec)
            dg = Series1(deriv.truncate(prec - 1)._coeffs, prec).compose(g)
            g = g - err / dg
        return Series1(g._coeffs, n)

    # -- numerics / io ---------------------------------------------------------

    def evaluate(self, z0, overrides=None, precision: int = 15) -> complex:
        """Numeric value of the truncated polynomial at z0 (Horner)."""
        total = 0j
        for c in reversed(self._coeffs):
            total = total * complex(z0) + c.evaluate(overrides, precision)
        return total

    def to_obj(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_obj() for c in self._coeffs]}

    @staticmethod
    def from_obj(obj: Mapping) -> "Series1":
        return Series1([RingElement.from_obj(c) for c in obj["coeffs"]], int(obj["order"]))

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json(text: str) -> "Series1":
        return Series1.from_obj(json.loads(text))

    def __repr__(self) -> str:
        parts = []
        for n, c in enumerate(self._coeffs):
            if c.is_zero():
                continue
            parts.append(f"({c})*z^{n}" if n else f"({c})")
        body = " + ".join(parts) if parts else "0"
        return f"Series1[{body} + O(z^{self.order + 1})]"


class Series2:
    """Bivariate series truncated by total degree, sparse triangular storage."""

    __slots__ = ("order", "_coeffs")

    def __init__(self, coeffs: Mapping["tuple[int, int]", Scalar], order: int):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        clean: "dict[tuple[int, int], RingElement]" = {}
        for (i, j), c in coeffs.items():
            if i < 0 or j < 0 or i + j > order:
                continue
            c = _coerce_elem(c)
            if not c.is_zero():
                clean[(i, j)] = c
        self._coeffs = clean

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zeros(order: int) -> "Series2":
        return Series2({}, order)

    @staticmethod
    def constant(value: Scalar, order: int) -> "Series2":
        return Series2({(0, 0): value}, order)

    @staticmethod
    def z0(order: int) -> "Series2":
        return Series2({(1, 0): 1}, order)

    @staticmethod
    def z1(order: int) -> "Series2":
        return Series2({(0, 1): 1}, order)

    @staticmethod
    def from_series1(f: Series1, variable: int, order: Optional[int] = None) -> "Series2":
        """Lift a univariate series into variable 0 or 1."""
        if order is None:
            order = f.order
        if variable == 0:
            return Series2({(n, 0): f[n] for n in range(order + 1)}, order)
        return Series2({(0, n): f[n] for n in range(order + 1)}, order)

    # -- inspection ------------------------------------------------------------

    def __getitem__(self, ij: "tuple[int, int]") -> RingElement:
        return self._coeffs.get(ij, _ZERO)

    def items(self):
        return sorted(self._coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def is_zero(self) -> bool:
        return not self._coeffs

    def lowest_degree(self) -> Optional[int]:
        if not self._coeffs:
            return None
        return min(i + j for i, j in self._coeffs)

    def is_symmetric(self) -> bool:
        return all(self[(j, i)] == c for (i, j), c in self._coeffs.items())

    def swap(self) -> "Series2":
        return Series2({(j, i): c for (i, j), c in self._coeffs.items()}, self.order)

    def truncate(self, order: int) -> "Series2":
        if order >= self.order:
            return self
        return Series2(self._coeffs, order)

    def map_coefficients(self, fn: Callable[[RingElement], RingElement]) -> "Series2":
        return Series2({ij: fn(c) for ij, c in self._coeffs.items()}, self.order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series2):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.order, frozenset(self._coeffs.items())))

    # -- arithmetic --------------------------------------------------------------

    def _match(self, other: "Series2") -> int:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        return self.order

    def __add__(self, other) -> "Series2":
        if isinstance(other, Series2):
            self._match(other)
            out = dict(self._coeffs)
            for ij, c in other._coeffs.items():
                acc = out.get(ij)
                out[ij] = c if acc is None else acc + c
            return Series2(out, self.order)
        out = dict(self._coeffs)
        out[(0, 0)] = out.get((0, 0), _ZERO) + _coerce_elem(other)
        return Series2(out, self.order)

    __radd__ = __add__

    def __neg__(self) -> "Series2":
        return Series2({ij: -c for ij, c in self._coeffs.items()}, self.order)

    def __sub__(self, other) -> "Series2":
        return self + (-other if isinstance(other, Series2) else -_coerce_elem(other))

    def __rsub__(self, other) -> "Series2":
        return (-self) + other

    def __mul__(self, other) -> "Series2":
        if not isinstance(other, Series2):
            k = _coerce_elem(other)
            return Series2({ij: c * k for ij, c in self._coeffs.items()}, self.order)
        n = self._match(other)
        out: "dict[tuple[int, int], RingElement]" = {}
        for (i1, j1), c1 in self._coeffs.items():
            d1 = i1 + j1
            for (i2, j2), c2 in other._coeffs.items():
                if d1 + i2 + j2 > n:
                    continue
                ij = (i1 + i2, j1 + j2)
                acc = out.get(ij)
                prod = c1 * c2
                out[ij] = prod if acc is None else acc + prod
        return Series2(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Series2":
        if k < 0:
            raise ValueError("negative series powers are not supported")
        result = Series2.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "Series2":
        """Inverse of a series with invertible constant term (Newton)."""
        c0 = self[(0, 0)]
        try:
            inv0 = c0.inverse()
        except ArithmeticError as exc:
            raise NonUnitDivisionError(
                "inversion requires an invertible constant term"
            ) from exc
        g = Series2.constant(inv0, self.order)
        prec = 1
        while prec <= self.order:
            g = g * (2 - self * g)
            prec *= 2
        return g

    def __truediv__(self, other) -> "Series2":
        if not isinstance(other, Series2):
            return self * _coerce_elem(other).inverse()
        return self * other.inverse()

    def compose(self, f: Series1, g: Series1) -> "Series2":
        """self(f(z0), g(z1)) for inner series with zero constant term."""
        if not f[0].is_zero() or not g[0].is_zero():
            raise BadConstantTermError("inner series must have zero constant term")
        n = self.order
        fp = _powers(f.truncate(n), n)
        gp = _powers(g.truncate(n), n)
        out: "dict[tuple[int, int], RingElement]" = {}
        for (i, j), c in self._coeffs.items():
            fi, gj = fp[i], gp[j]
            for p in range(i, n + 1 - j):
                a = fi[p]
                if a.is_zero():
                    continue
                ca = c * a
                for q in range(j, n + 1 - p):
                    b = gj[q]
                    if b.is_zero():
                        continue
                    ij = (p, q)
                    acc = out.get(ij)
                    prod = ca * b
                    out[ij] = prod if acc is None else acc + prod
        return Series2(out, n)

    def eval_at(self, a: Series1, b: Series1) -> Series1:
        """self(a(z), b(z)) as a univariate series (both inner in the same z)."""
        if not a[0].is_zero() or not b[0].is_zero():
            raise BadConstantTermError("inner series must have zero constant term")
        n = min(self.order, a.order, b.order)
        ap = _powers(a.truncate(n), n)
        bp = _powers(b.truncate(n), n)
        out = [_ZERO] * (n + 1)
        for (i, j), c in self._coeffs.items():
            if i + j > n:
                continue
            prod = Series1(ap[i], n) * Series1(bp[j], n)
            for k in range(i + j, n + 1):
                pk = prod[k]
                if not pk.is_zero():
                    out[k] = out[k] + c * pk
        return Series1(out, n)

    # -- io ------------------------------------------------------------------

    def to_obj(self) -> dict:
        return {
            "order": self.order,
            "coeffs": {f"{i},{j}": c.to_obj() for (i, j), c in self.items()},
        }

    @staticmethod
    def from_obj(obj: Mapping) -> "Series2":
        coeffs = {}
        for key, c in obj["coeffs"].items():
            i, j = key.split(",")
            coeffs[(int(i), int(j))] = RingElement.from_obj(c)
        return Series2(coeffs, int(obj["order"]))

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json(text: str) -> "Series2":
        return Series2.from_obj(json.loads(text))

    def __repr__(self) -> str:
        parts = [f"({c})*z0^{i}*z1^{j}" for (i, j), c in self.items()]
        body = " + ".join(parts) if parts else "0"
        return f"Series2[{body} + O(deg {self.order + 1})]"


def _powers(f: Series1, order: int) -> "list[tuple[RingElement, ...]]":
    """Coefficient tuples of f^0 .. f^order, truncated at `order`."""
    out = [Series1.constant(1, order)]
    for _ in range(order):
        out.append(out[-1] * f)
    return [p.coefficients() for p in out]


# -- analytic primitives ------------------------------------------------------


def exp_series(f: Series1) -> "Series1":
    """exp of a series with zero constant term."""
    if not f[0].is_zero():
        raise BadConstantTermError("exp needs f(0) = 0")
    n = f.order
    out = [_ONE] + [_ZERO] * n
    for m in range(1, n + 1):
        acc = _ZERO
        for k in range(1, m + 1):
            fk = f[k]
            if not fk.is_zero() and not out[m - k].is_zero():
                acc = acc + (k * fk) * out[m - k]
        out[m] = acc * Fraction(1, m)
    return Series1(out, n)


def log_series(f: Series1) -> "Series1":
    """log of a series with constant term exactly 1."""
    if not f[0].is_one():
        raise BadConstantTermError("log needs f(0) = 1")
    if f.order == 0:
        return Series1.zeros(0)
    d = f.differentiate() / Series1(f.coefficients(), f.order - 1)
    return d.integrate()


def sqrt_series(f: Series1) -> "Series1":
    """Square root of a series with constant term exactly 1."""
    if not f[0].is_one():
        raise BadConstantTermError("sqrt needs f(0) = 1")
    n = f.order
    out = [_ONE] + [_ZERO] * n
    half = Fraction(1, 2)
    for m in range(1, n + 1):
        acc = f[m]
        for k in range(1, m):
            if not out[k].is_zero() and not out[m - k].is_zero():
                acc = acc - out[k] * out[m - k]
        out[m] = acc * half
    return Series1(out, n)


def compose1_2(outer: Series1, inner: Series2) -> Series2:
    """outer(inner(z0, z1)) for an inner series with zero constant term."""
    if not inner[(0, 0)].is_zero():
        raise BadConstantTermError("inner series must have zero constant term")
    n = inner.order
    outer = outer.truncate(n)
    result = Series2.constant(outer[n], n)
    for k in range(n - 1, -1, -1):
        result = result * inner + outer[k]
    return result


def bivariate_from_exp(exp: Series1) -> Series2:
    """The group law exp(log(z0) + log(z1)) with log the reversion of exp."""
    if not exp[0].is_zero() or not exp[1].is_one():
        raise NotRevertibleError("exponential must be z + O(z^2)")
    log = exp.revert()
    n = exp.order
    inner = Series2.from_series1(log, 0, n) + Series2.from_series1(log, 1, n)
    return compose1_2(exp, inner)
