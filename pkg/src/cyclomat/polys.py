"""Exact polynomial and truncated-series arithmetic.

Four coefficient containers live here:

* ``MPoly`` -- sparse multivariate polynomials over the rationals with a
  fixed variable count.
* ``LPoly`` -- univariate Laurent polynomials (integer exponents of either
  sign) over the rationals.
* ``TuttePoly`` -- bivariate polynomials with integer coefficients keyed by
  exponent pairs; the shape produced by corank-nullity subset sums.
* ``Series2`` -- a two-variable series truncated at orders (M1, M2), whose
  entry at (m1, m2) is the coefficient of z1^m1 z2^m2 / (m1! m2!).  The
  product therefore uses binomial convolution, and log/exp/integer powers
  terminate exactly at the truncation order.

Coefficients of ``Series2`` may be rationals or any of the polynomial
types above; the arithmetic only needs ``+``, ``-``, ``*`` and scalar
multiplication.  Stored coefficient maps never contain zeros, and all
serialization orders terms lexicographically by exponent so that output is
deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Mapping, Sequence

Coeff = int | Fraction


def _norm_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def format_terms(coeffs: Mapping[tuple[int, ...], Coeff], names: Sequence[str]) -> str:
    """Canonical text form: terms in ascending lexicographic exponent
    order, e.g. ``1 + 2*x1 + x1^2*x2``."""
    if not coeffs:
        return "0"
    parts: list[str] = []
    for expo in sorted(coeffs):
        c = coeffs[expo]
        factors = []
        for name, e in zip(names, expo):
            if e == 1:
                factors.append(name)
            elif e != 0:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


class MPoly:
    """Sparse multivariate polynomial over the rationals."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: Mapping[tuple[int, ...], Coeff] | None = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], Coeff] = {}
        if coeffs:
            for expo, c in coeffs.items():
                expo = tuple(expo)
                if len(expo) != nvars:
                    raise ValueError("exponent vector has wrong length")
                if any(e < 0 for e in expo):
                    raise ValueError("negative exponent in polynomial")
                c = _norm_coeff(c)
                if c:
                    clean[expo] = c
        self.coeffs = clean

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, value: Coeff, nvars: int) -> "MPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, index: int, nvars: int) -> "MPoly":
        expo = [0] * nvars
        expo[index] = 1
        return cls(nvars, {tuple(expo): 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def total_degree(self) -> int:
        if not self.coeffs:
            return -1
        return max(sum(e) for e in self.coeffs)

    def _check(self, other: "MPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable-count mismatch")

    def __add__(self, other: "MPoly | Coeff") -> "MPoly":
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(other, self.nvars)
        self._check(other)
        out = dict(self.coeffs)
        for expo, c in other.coeffs.items():
            s = out.get(expo, 0) + c
            if s:
                out[expo] = _norm_coeff(s)
            else:
                out.pop(expo, None)
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "MPoly | Coeff") -> "MPoly":
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other: Coeff) -> "MPoly":
        return MPoly.constant(other, self.nvars) - self

    def __mul__(self, other: "MPoly | Coeff") -> "MPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly.zero(self.nvars)
            return MPoly(self.nvars, {e: c * other for e, c in self.coeffs.items()})
        self._check(other)
        out: dict[tuple[int, ...], Coeff] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Coeff) -> "MPoly":
        return self * Fraction(1, scalar)

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(other, self.nvars)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def coefficient(self, expo: tuple[int, ...]) -> Coeff:
        return self.coeffs.get(tuple(expo), 0)

    def evaluate(self, values: Sequence[Coeff]) -> Coeff:
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        total: Coeff = 0
        for expo, c in self.coeffs.items():
            term = c
            for v, e in zip(values, expo):
                for _ in range(e):
                    term *= v
            total += term
        return _norm_coeff(total)

    def substitute(self, polys: Sequence["MPoly"]) -> "MPoly":
        """Substitute a polynomial for each variable (all sharing one
        variable count)."""
        if len(polys) != self.nvars:
            raise ValueError("wrong number of substitutions")
        nvars = polys[0].nvars if polys else 0
        total = MPoly.zero(nvars)
        for expo, c in self.coeffs.items():
            term = MPoly.constant(c, nvars)
            for p, e in zip(polys, expo):
                if e:
                    term = term * p**e
            total = total + term
        return total

    def divide_exact(self, divisor: "MPoly") -> "MPoly | None":
        """Return q with self == divisor * q, or None when not divisible.

        Lexicographic leading-term reduction: for a true multiple the
        leading monomial of the running remainder is always divisible by
        the divisor's, so failure certifies non-divisibility.
        """
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead_d = max(divisor.coeffs)
        cd = divisor.coeffs[lead_d]
        remainder = dict(self.coeffs)
        quotient: dict[tuple[int, ...], Coeff] = {}
        while remainder:
            lead_r = max(remainder)
            expo = tuple(a - b for a, b in zip(lead_r, lead_d))
            if any(e < 0 for e in expo):
                return None
            q = _norm_coeff(Fraction(remainder[lead_r]) / Fraction(cd))
            quotient[expo] = q
            for e2, c2 in divisor.coeffs.items():
                key = tuple(a + b for a, b in zip(expo, e2))
                s = remainder.get(key, 0) - q * c2
                if s:
                    remainder[key] = _norm_coeff(s)
                else:
                    remainder.pop(key, None)
        return MPoly(self.nvars, quotient)

    def text(self, names: Sequence[str]) -> str:
        if len(names) != self.nvars:
            raise ValueError("wrong number of variable names")
        return format_terms(self.coeffs, names)

    def __repr__(self) -> str:
        names = [f"x{i+1}" for i in range(self.nvars)]
        return f"MPoly({self.text(names)})"


class LPoly:
    """Univariate Laurent polynomial over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Coeff] | None = None):
        clean: dict[int, Coeff] = {}
        if coeffs:
            for e, c in coeffs.items():
                c = _norm_coeff(c)
                if c:
                    clean[int(e)] = c
        self.coeffs = clean

    @classmethod
    def zero(cls) -> "LPoly":
        return cls()

    @classmethod
    def constant(cls, value: Coeff) -> "LPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, value: Coeff = 1) -> "LPoly":
        return cls({exponent: value})

    def is_zero(self) -> bool:
        return not self.coeffs

    def min_exponent(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    def max_exponent(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self.coeffs)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs.values())

    def __add__(self, other: "LPoly | Coeff") -> "LPoly":
        if isinstance(other, (int, Fraction)):
            other = LPoly.constant(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LPoly":
        return LPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "LPoly | Coeff") -> "LPoly":
        if isinstance(other, (int, Fraction)):
            other = LPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: Coeff) -> "LPoly":
        return LPoly.constant(other) - self

    def __mul__(self, other: "LPoly | Coeff") -> "LPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return LPoly.zero()
            return LPoly({e: c * other for e, c in self.coeffs.items()})
        out: dict[int, Coeff] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                key = e1 + e2
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        return LPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Coeff) -> "LPoly":
        return self * Fraction(1, scalar)

    def __pow__(self, k: int) -> "LPoly":
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = LPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LPoly.constant(other)
        if not isinstance(other, LPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def coefficient(self, e: int) -> Coeff:
        return self.coeffs.get(e, 0)

    def evaluate(self, value: Coeff) -> Coeff:
        total: Coeff = 0
        for e, c in self.coeffs.items():
            if e >= 0:
                total += c * value**e
            else:
                total += c * Fraction(1) / Fraction(value) ** (-e)
        return _norm_coeff(total)

    def text(self, name: str = "y") -> str:
        return format_terms({(e,): c for e, c in self.coeffs.items()}, (name,))

    def __repr__(self) -> str:
        return f"LPoly({self.text()})"


class TuttePoly:
    """Bivariate polynomial with integer coefficients keyed by (i, j)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        if coeffs:
            for key, c in coeffs.items():
                if c:
                    clean[(int(key[0]), int(key[1]))] = c
        self.coeffs = clean

    @classmethod
    def one(cls) -> "TuttePoly":
        return cls({(0, 0): 1})

    def __mul__(self, other: "TuttePoly") -> "TuttePoly":
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                key = (i1 + i2, j1 + j2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        return TuttePoly(out)

    def __pow__(self, k: int) -> "TuttePoly":
        if k < 0:
            raise ValueError("negative power")
        result = TuttePoly.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TuttePoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def swap(self) -> "TuttePoly":
        """Exchange the two variables."""
        return TuttePoly({(j, i): c for (i, j), c in self.coeffs.items()})

    def evaluate(self, x: Coeff, y: Coeff) -> Coeff:
        total: Coeff = 0
        for (i, j), c in self.coeffs.items():
            total += c * x**i * y**j
        return _norm_coeff(total)

    def as_mpoly(self) -> MPoly:
        return MPoly(2, {key: c for key, c in self.coeffs.items()})

    def text(self, names: Sequence[str] = ("x", "y")) -> str:
        return format_terms(self.coeffs, names)

    def __repr__(self) -> str:
        return f"TuttePoly({self.text()})"


class Series2:
    """Two-variable truncated series with coefficients against the
    monomials z1^m1 z2^m2 / (m1! m2!).

    ``one`` is the multiplicative identity of the coefficient ring (for
    example ``Fraction(1)``, ``MPoly.constant(1, k)`` or
    ``LPoly.constant(1)``); it fixes the ring for constants created
    internally.
    """

    __slots__ = ("orders", "grid", "one")

    def __init__(self, orders: tuple[int, int], grid: Mapping[tuple[int, int], object], one):
        m1, m2 = orders
        if m1 < 0 or m2 < 0:
            raise ValueError("truncation orders must be nonnegative")
        self.orders = (m1, m2)
        self.one = one
        zero = one * 0
        full = {}
        for i in range(m1 + 1):
            for j in range(m2 + 1):
                full[(i, j)] = grid.get((i, j), zero)
        self.grid = full

    @classmethod
    def constant_one(cls, orders: tuple[int, int], one) -> "Series2":
        return cls(orders, {(0, 0): one}, one)

    @classmethod
    def build(cls, orders: tuple[int, int], fn: Callable[[int, int], object], one) -> "Series2":
        grid = {
            (i, j): fn(i, j) for i in range(orders[0] + 1) for j in range(orders[1] + 1)
        }
        return cls(orders, grid, one)

    def coefficient(self, m1: int, m2: int):
        return self.grid[(m1, m2)]

    def _check(self, other: "Series2") -> None:
        if self.orders != other.orders:
            raise ValueError("truncation-order mismatch")

    def __add__(self, other: "Series2") -> "Series2":
        self._check(other)
        return Series2(
            self.orders,
            {k: self.grid[k] + other.grid[k] for k in self.grid},
            self.one,
        )

    def __sub__(self, other: "Series2") -> "Series2":
        self._check(other)
        return Series2(
            self.orders,
            {k: self.grid[k] - other.grid[k] for k in self.grid},
            self.one,
        )

    def __mul__(self, other: "Series2") -> "Series2":
        self._check(other)
        m1, m2 = self.orders
        out = {}
        for i in range(m1 + 1):
            for j in range(m2 + 1):
                acc = self.one * 0
                for k1 in range(i + 1):
                    b1 = comb(i, k1)
                    for k2 in range(j + 1):
                        a = self.grid[(k1, k2)]
                        b = other.grid[(i - k1, j - k2)]
                        acc = acc + a * b * (b1 * comb(j, k2))
                out[(i, j)] = acc
        return Series2(self.orders, out, self.one)

    def scale(self, scalar) -> "Series2":
        return Series2(self.orders, {k: v * scalar for k, v in self.grid.items()}, self.one)

    def pow_int(self, k: int) -> "Series2":
        if k < 0:
            raise ValueError("negative series power")
        result = Series2.constant_one(self.orders, self.one)
        for _ in range(k):
            result = result * self
        return result

    def is_zero(self) -> bool:
        zero = self.one * 0
        return all(v == zero for v in self.grid.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series2):
            return NotImplemented
        return self.orders == other.orders and all(
            self.grid[k] == other.grid[k] for k in self.grid
        )

    def log(self) -> "Series2":
        """log of a series with unit constant coefficient; terminates
        because (self - 1) is nilpotent at the truncation order."""
        if self.grid[(0, 0)] != self.one:
            raise ValueError("series_log requires constant coefficient 1")
        u = self - Series2.constant_one(self.orders, self.one)
        total = Series2(self.orders, {}, self.one)
        power = Series2.constant_one(self.orders, self.one)
        max_k = self.orders[0] + self.orders[1]
        for k in range(1, max_k + 1):
            power = power * u
            if power.is_zero():
                break
            total = total + power.scale(Fraction((-1) ** (k + 1), k))
        return total

    def exp(self) -> "Series2":
        """exp of a series with zero constant coefficient."""
        zero = self.one * 0
        if self.grid[(0, 0)] != zero:
            raise ValueError("series_exp requires constant coefficient 0")
        total = Series2.constant_one(self.orders, self.one)
        power = Series2.constant_one(self.orders, self.one)
        max_k = self.orders[0] + self.orders[1]
        fact = 1
        for k in range(1, max_k + 1):
            power = power * self
            if power.is_zero():
                break
            fact *= k
            total = total + power.scale(Fraction(1, fact))
        return total
