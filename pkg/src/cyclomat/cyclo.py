"""Number-theoretic constructions around roots of unity.

The matroid of the n-th roots of unity is represented concretely: column j
holds the coordinates of zeta^j in the power basis 1, zeta, ...,
zeta^(phi(n)-1), i.e. the reduction of x^j modulo the n-th cyclotomic
polynomial.  Any rational basis of the field gives the same matroid; the
power basis keeps every entry an integer.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .linalg import Matrix
from .matroids import RepresentedMatroid, mask_from_indices
from .report import VerificationReport

FACTORIZATION_BOUND = 10**9


def factorize(n: int, *, bound: int = FACTORIZATION_BOUND) -> tuple[tuple[int, int], ...]:
    """Prime factorization as ((p1, m1), (p2, m2), ...), primes increasing.

    Trial division only; n must stay below ``bound``.
    """
    if n <= 0:
        raise ValueError("factorize requires a positive integer")
    if n > bound:
        raise ValueError(f"n={n} exceeds the factorization bound {bound}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            m = 0
            while n % p == 0:
                n //= p
                m += 1
            out.append((p, m))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def euler_phi(n: int) -> int:
    if n <= 0:
        raise ValueError("euler_phi requires a positive integer")
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def squarefree_part(n: int) -> tuple[int, int]:
    """(s, t) with s the product of the distinct primes of n and t = n/s."""
    s = 1
    for p, _ in factorize(n):
        s *= p
    return s, n // s


class IntPoly:
    """Dense univariate polynomial with integer coefficients, lowest
    degree first; trailing zeros are trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero() or other.is_zero():
            return IntPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntPoly([x - y for x, y in zip(a, b)])

    def divmod_exact(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Quotient and remainder over Z; each elimination step requires
        the leading coefficient to divide exactly."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dc = divisor.coeffs
        dd = divisor.degree
        lead = dc[-1]
        quo = [0] * max(0, len(rem) - dd)
        while len(rem) - 1 >= dd and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dd:
                break
            c, r = divmod(rem[-1], lead)
            if r:
                raise ValueError("leading coefficient does not divide exactly")
            shift = len(rem) - 1 - dd
            quo[shift] = c
            for i, b in enumerate(dc):
                rem[shift + i] -= c * b
        return IntPoly(quo), IntPoly(rem)

    def evaluate(self, x: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def text(self, name: str = "x") -> str:
        from .polys import format_terms

        return format_terms({(i,): c for i, c in enumerate(self.coeffs) if c}, (name,))

    def __repr__(self) -> str:
        return f"IntPoly({self.text()})"


def _x_pow_minus_one(n: int) -> IntPoly:
    coeffs = [0] * (n + 1)
    coeffs[0] = -1
    coeffs[n] = 1
    return IntPoly(coeffs)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPoly:
    """Monic minimal polynomial of a primitive n-th root of unity,
    computed by dividing x^n - 1 by the polynomials of all proper
    divisors."""
    if n <= 0:
        raise ValueError("cyclotomic_polynomial requires a positive integer")
    poly = _x_pow_minus_one(n)
    for d in range(1, n):
        if n % d == 0:
            quo, rem = poly.divmod_exact(cyclotomic_polynomial(d))
            if not rem.is_zero():
                raise AssertionError("cyclotomic division left a remainder")
            poly = quo
    return poly


def cyclotomic_matroid(n: int) -> RepresentedMatroid:
    """Matroid of 1, zeta, ..., zeta^(n-1) inside the degree-phi(n) field,
    with ground labels 0..n-1 (the exponents)."""
    if n <= 0:
        raise ValueError("cyclotomic_matroid requires a positive integer")
    phi_poly = cyclotomic_polynomial(n)
    phi = phi_poly.degree
    # x^phi = -(lower part of the cyclotomic polynomial), since it is monic
    reduction = [-c for c in phi_poly.coeffs[:phi]]
    col = [0] * phi
    col[0] = 1
    columns = []
    for _ in range(n):
        columns.append(tuple(col))
        top = col[phi - 1]
        shifted = [0] + col[: phi - 1]
        if top:
            shifted = [a + top * b for a, b in zip(shifted, reduction)]
        col = shifted
    return RepresentedMatroid(tuple(range(n)), Matrix.from_columns(columns, nrows=phi))


def primitive_roots_subset(n: int) -> int:
    """Bitmask of the exponents j with gcd(j, n) = 1."""
    if n <= 0:
        raise ValueError("primitive_roots_subset requires a positive integer")
    return mask_from_indices(j for j in range(n) if gcd(j, n) == 1)


def block_decomposition(n: int) -> list[int]:
    """The t = n/s residue blocks {j, j+t, ..., j+(s-1)t} as bitmasks,
    where s is the square-free part of n."""
    if n < 2:
        raise ValueError("block_decomposition requires n >= 2")
    s, t = squarefree_part(n)
    return [mask_from_indices(j + k * t for k in range(s)) for j in range(t)]


def verify_parallel_extension(n: int) -> VerificationReport:
    """For odd n, check that in the matroid of the 2n-th roots each column
    for exponent j+n is a nonzero scalar multiple of the column for j,
    reporting the scalar per pair."""
    if n % 2 == 0:
        raise ValueError("verify_parallel_extension requires odd n")
    if n < 3:
        raise ValueError("verify_parallel_extension requires n >= 3")
    m = cyclotomic_matroid(2 * n)
    pairs = []
    witness = None
    for j in range(n):
        a = m.matrix.column(j)
        b = m.matrix.column(j + n)
        scalar = None
        for x, y in zip(a, b):
            if x:
                scalar = Fraction(y, x)
                break
        proportional = scalar is not None and scalar != 0 and all(
            y == x * scalar for x, y in zip(a, b)
        )
        if not proportional and witness is None:
            witness = {"pair": [j, j + n]}
        pairs.append({"pair": [j, j + n], "scalar": str(scalar) if proportional else None})
    passed = witness is None
    return VerificationReport(
        claim="parallel-extension",
        passed=passed,
        witness=witness,
        stats={"n": n, "pairs": pairs},
    )
