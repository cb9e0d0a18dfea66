"""Complete bipartite graphs: coboundary and chromatic polynomials, the
coboundary generating-function identity, the independence generating
function extracted from a logarithmic series, and forest enumerators.

Conventions.  The graph on part sizes (p, q) has vertices v_1..v_p and
w_1..w_q and all pq edges, listed lexicographically as (i, j) pairs.  The
polynomial variable counting colors is always called q_var to keep it
apart from the part size q.

The coboundary polynomial is computed from the Tutte polynomial by the
substitution

    cob(q_var, t) = q_var^(c-1) * sum_{i,j} T_{i,j}
                    * (q_var + t - 1)^i * (t - 1)^(rank - i) * t^j,

where c is the number of connected components and rank = |V| - c.  The
q_var^(c-1) factor makes the identity with the coloring sum

    cob(q_var, t) = q_var^(-1) * sum_colorings t^(monochromatic edges)

hold for edgeless (disconnected) graphs too, which the generating-function
identity needs for its boundary terms.  For connected graphs the factor is
1 and the usual form is recovered.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .cyclo import cyclotomic_matroid, factorize
from .linalg import Matrix
from .matroids import (
    DEFAULT_SWEEP_LIMIT,
    EnumerationLimitError,
    RepresentedMatroid,
)
from .polys import LPoly, MPoly, Series2
from .report import VerificationReport

DEFAULT_FOREST_LIMIT = 20


def kpq_matroid(p: int, q: int) -> RepresentedMatroid:
    """Graphic matroid of the complete bipartite graph, represented by the
    signed vertex-edge incidence matrix; labels are the edge pairs."""
    if p < 1 or q < 1:
        raise ValueError("part sizes must be at least 1")
    labels = [(i, j) for i in range(p) for j in range(q)]
    grid = [[0] * (p * q) for _ in range(p + q)]
    for col, (i, j) in enumerate(labels):
        grid[i][col] = -1
        grid[p + j][col] = 1
    return RepresentedMatroid(labels, Matrix(grid, ncols=p * q))


def _components(p: int, q: int) -> int:
    # all pq edges present: one component when both sides are occupied,
    # otherwise only isolated vertices
    if p >= 1 and q >= 1:
        return 1
    return p + q


def coboundary_polynomial(
    p: int, q: int, *, limit: int = DEFAULT_SWEEP_LIMIT, threads: int = 1
) -> MPoly:
    """Coboundary polynomial of the complete bipartite graph as a
    two-variable polynomial in (q_var, t)."""
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError("need at least one vertex")
    if p >= 1 and q >= 1:
        tutte = kpq_matroid(p, q).tutte(limit=limit, threads=threads).coeffs
        rank = p + q - 1
    else:
        tutte = {(0, 0): 1}
        rank = 0
    c = _components(p, q)
    q_plus = MPoly(2, {(1, 0): 1, (0, 1): 1, (0, 0): -1})  # q_var + t - 1
    t_minus = MPoly(2, {(0, 1): 1, (0, 0): -1})  # t - 1
    total = MPoly.zero(2)
    for (i, j), cij in tutte.items():
        term = q_plus**i * t_minus ** (rank - i) * MPoly(2, {(0, j): cij})
        total = total + term
    if c > 1:
        total = total * MPoly(2, {(c - 1, 0): 1})
    if any(not isinstance(v, int) for v in total.coeffs.values()):
        raise AssertionError("coboundary polynomial has non-integer coefficients")
    return total


def _compositions(total: int, parts: int):
    """All ways to split ``total`` into ``parts`` nonnegative ordered
    summands, with their multinomial counts."""
    out = []

    def rec(remaining, slot, acc):
        if slot == parts - 1:
            out.append(tuple(acc + [remaining]))
            return
        for v in range(remaining + 1):
            rec(remaining - v, slot + 1, acc + [v])

    if parts == 0:
        return [((), 1)] if total == 0 else []
    rec(total, 0, [])
    result = []
    for vec in out:
        ways = factorial(total)
        for v in vec:
            ways //= factorial(v)
        result.append((vec, ways))
    return result


def coloring_sum(p: int, q: int, colors: int) -> MPoly:
    """Brute-force oracle: q_var^(-1) * sum over all vertex colorings with
    the given number of colors of t^(monochromatic edges), as a polynomial
    in t.  Enumerates color-class size vectors on each side."""
    if colors < 1:
        raise ValueError("need at least one color")
    counts: dict[int, int] = {}
    left = _compositions(p, colors)
    right = _compositions(q, colors)
    for avec, aways in left:
        for bvec, bways in right:
            mono = sum(x * y for x, y in zip(avec, bvec))
            counts[mono] = counts.get(mono, 0) + aways * bways
    coeffs = {}
    for mono, cnt in counts.items():
        value = Fraction(cnt, colors)
        if value.denominator != 1:
            raise AssertionError("coloring sum not divisible by the color count")
        coeffs[(mono,)] = value.numerator
    return MPoly(1, coeffs)


def chromatic_polynomial(
    p: int, q: int, *, limit: int = DEFAULT_SWEEP_LIMIT, threads: int = 1
) -> MPoly:
    """Chromatic polynomial in q_var: q_var times the coboundary
    polynomial at t = 0."""
    cob = coboundary_polynomial(p, q, limit=limit, threads=threads)
    coeffs = {}
    for (a, b), c in cob.coeffs.items():
        if b == 0:
            coeffs[(a + 1,)] = c
    return MPoly(1, coeffs)


def chromatic_from_egf(p: int, q: int, colors: int) -> int:
    """Coefficient of x1^p x2^q / (p! q!) in (e^{x1} + e^{x2} - 1)^colors."""
    one = Fraction(1)

    def coeff(m1, m2):
        if m1 == 0 and m2 == 0:
            return one
        if m1 == 0 or m2 == 0:
            return one
        return Fraction(0)

    series = Series2.build((p, q), coeff, one).pow_int(colors)
    value = series.coefficient(p, q)
    if value.denominator != 1:
        raise AssertionError("chromatic series coefficient is not an integer")
    return value.numerator


def _eval_qvar(poly: MPoly, value: int) -> MPoly:
    """Partially evaluate a (q_var, t) polynomial at an integer q_var,
    leaving a polynomial in t alone."""
    coeffs: dict[tuple[int], int | Fraction] = {}
    for (a, b), c in poly.coeffs.items():
        key = (b,)
        coeffs[key] = coeffs.get(key, 0) + c * value**a
    return MPoly(1, coeffs)


def verify_prop4(
    orders: tuple[int, int],
    q_max: int,
    *,
    limit: int = DEFAULT_SWEEP_LIMIT,
    threads: int = 1,
) -> VerificationReport:
    """Check, for every integer count of colors up to q_max, that the
    coboundary polynomials assemble into the q-th power of the
    two-variable series whose (m1, m2) coefficient is t^(m1 m2), at the
    given truncation orders.

    The coboundary polynomial has q_var-degree at most the vertex count,
    so agreement at q_max >= orders[0] + orders[1] + 1 integer values
    pins the polynomial identity on the whole truncated range.
    """
    p_max, q_max_order = orders
    one = MPoly.constant(1, 1)
    cob: dict[tuple[int, int], MPoly] = {}
    for a in range(p_max + 1):
        for b in range(q_max_order + 1):
            if (a, b) != (0, 0):
                cob[(a, b)] = coboundary_polynomial(a, b, limit=limit, threads=threads)
    inner = Series2.build(
        orders, lambda m1, m2: MPoly(1, {(m1 * m2,): 1}), one
    )
    witness = None
    for q_val in range(q_max + 1):
        rhs = inner.pow_int(q_val)
        lhs_grid = {(0, 0): one}
        for key, poly in cob.items():
            lhs_grid[key] = _eval_qvar(poly, q_val) * q_val
        lhs = Series2(orders, lhs_grid, one)
        if lhs != rhs:
            for m1 in range(orders[0] + 1):
                for m2 in range(orders[1] + 1):
                    if lhs.coefficient(m1, m2) != rhs.coefficient(m1, m2):
                        witness = {
                            "q": q_val,
                            "coefficient": [m1, m2],
                            "lhs": lhs.coefficient(m1, m2).text(("t",)),
                            "rhs": rhs.coefficient(m1, m2).text(("t",)),
                        }
                        break
                if witness:
                    break
            break
    return VerificationReport(
        claim="coboundary-egf",
        passed=witness is None,
        witness=witness,
        stats={"orders": list(orders), "q_max": q_max},
    )


def egf_log_series(orders: tuple[int, int]) -> Series2:
    """log of the series whose (m1, m2) coefficient is
    (y+1)^(m1 m2) / y^(m1+m2), over Laurent polynomials in y."""
    one = LPoly.constant(1)

    def coeff(m1, m2):
        e = m1 * m2
        shift = -(m1 + m2)
        return LPoly({k + shift: comb(e, k) for k in range(e + 1)})

    return Series2.build(orders, coeff, one).log()


def indep_gf_from_egf(p1: int, p2: int) -> LPoly:
    """y times the (p1, p2) coefficient of the logarithmic series above;
    must come out a genuine polynomial in y with integer coefficients."""
    if p1 < 1 or p2 < 1:
        raise ValueError("part sizes must be at least 1")
    coeff = egf_log_series((p1, p2)).coefficient(p1, p2)
    result = coeff * LPoly.monomial(1)
    if not result.is_polynomial():
        raise ValueError("negative powers of y failed to cancel")
    if not result.is_integral():
        raise ValueError("series coefficient is not integral")
    return result


def corollary5_check(
    n: int,
    *,
    limit: int = DEFAULT_SWEEP_LIMIT,
    threads: int = 1,
) -> VerificationReport:
    """For n with exactly two prime factors, compare the independence
    census of the order-n root-of-unity matroid against the extracted
    series coefficient raised to the power n divided by its square-free
    part."""
    factors = factorize(n)
    if len(factors) != 2:
        raise ValueError("corollary5_check requires n with exactly two prime factors")
    (p1, m1), (p2, m2) = factors
    t = p1 ** (m1 - 1) * p2 ** (m2 - 1)
    predicted = indep_gf_from_egf(p1, p2) ** t
    census = cyclotomic_matroid(n).independence_census(limit=limit, threads=threads)
    passed = census == predicted
    witness = None
    if not passed:
        witness = {"census": census.text(), "predicted": predicted.text()}
    return VerificationReport(
        claim="census-power-identity",
        passed=passed,
        witness=witness,
        stats={"n": n, "primes": [p1, p2], "power": t, "census": census.text()},
    )


def _forest_monomials(p: int, q: int, record_w: bool):
    """Iterate over all acyclic edge subsets of the (p, q) complete
    bipartite graph, yielding degree vectors (v-side, and w-side when
    requested)."""
    edges = [(i, p + j) for i in range(p) for j in range(q)]
    nverts = p + q
    parent = list(range(nverts))

    def find(x, par):
        while par[x] != x:
            x = par[x]
        return x

    results = []

    def rec(idx, par, vdeg, wdeg):
        if idx == len(edges):
            results.append((tuple(vdeg), tuple(wdeg) if record_w else None))
            return
        rec(idx + 1, par, vdeg, wdeg)
        a, b = edges[idx]
        ra, rb = find(a, par), find(b, par)
        if ra != rb:
            par2 = list(par)
            par2[ra] = rb
            i = a
            j = b - p
            vdeg[i] += 1
            wdeg[j] += 1
            rec(idx + 1, par2, vdeg, wdeg)
            vdeg[i] -= 1
            wdeg[j] -= 1

    rec(0, parent, [0] * p, [0] * q)
    return results


def forest_enumerator(p: int, q: int, *, limit: int = DEFAULT_FOREST_LIMIT) -> MPoly:
    """Sum over acyclic edge subsets of x1^deg(v1) ... xp^deg(vp)."""
    if p < 1 or q < 1:
        raise ValueError("part sizes must be at least 1")
    if p * q > limit:
        raise EnumerationLimitError(
            f"forest enumeration over {p * q} edges exceeds the limit {limit}"
        )
    coeffs: dict[tuple[int, ...], int] = {}
    for vdeg, _ in _forest_monomials(p, q, record_w=False):
        coeffs[vdeg] = coeffs.get(vdeg, 0) + 1
    return MPoly(p, coeffs)


def restricted_forest_enumerator(p: int, j: int, *, limit: int = DEFAULT_FOREST_LIMIT) -> MPoly:
    """Forest enumerator of the (p, j) complete bipartite graph restricted
    to forests in which every w-side vertex has degree at least 2,
    recording v-side degrees only.  Requires j <= p - 1."""
    if p < 1:
        raise ValueError("p must be at least 1")
    if j < 0 or j > p - 1:
        raise ValueError("the w side must have between 0 and p-1 vertices")
    if j == 0:
        return MPoly.constant(1, p)
    if p * j > limit:
        raise EnumerationLimitError(
            f"forest enumeration over {p * j} edges exceeds the limit {limit}"
        )
    coeffs: dict[tuple[int, ...], int] = {}
    for vdeg, wdeg in _forest_monomials(p, j, record_w=True):
        if all(d >= 2 for d in wdeg):
            coeffs[vdeg] = coeffs.get(vdeg, 0) + 1
    return MPoly(p, coeffs)


def verify_prop6(
    p: int, q: int, *, limit: int = DEFAULT_FOREST_LIMIT
) -> VerificationReport:
    """Check the classification of forests by their set of w-vertices of
    degree >= 2, and the resulting divisibility of the forest enumerator
    by (1 + x1 + ... + xp)^(q - p + 1).

    A forest with j such w-vertices decomposes into a restricted forest on
    those j vertices (choose(q, j) ways to pick them) and at most one edge
    at each remaining w-vertex, giving

        A(p, q) = sum_j choose(q, j) * (1 + x1 + ... + xp)^(q - j) * A~(p, j).
    """
    if p < 1 or q < p:
        raise ValueError("requires q >= p >= 1")
    enumerator = forest_enumerator(p, q, limit=limit)
    base = MPoly.constant(1, p)
    for i in range(p):
        base = base + MPoly.variable(i, p)
    decomposition = MPoly.zero(p)
    for j in range(p):
        restricted = restricted_forest_enumerator(p, j, limit=limit)
        decomposition = decomposition + comb(q, j) * base ** (q - j) * restricted
    decomposition_ok = decomposition == enumerator
    quotient = enumerator.divide_exact(base ** (q - p + 1))
    divisibility_ok = quotient is not None
    witness = None
    if not (decomposition_ok and divisibility_ok):
        names = [f"x{i+1}" for i in range(p)]
        witness = {
            "enumerator": enumerator.text(names),
            "decomposition": decomposition.text(names),
            "divisible": divisibility_ok,
        }
    stats = {
        "p": p,
        "q": q,
        "quotient_degree": quotient.total_degree() if quotient is not None else None,
    }
    return VerificationReport(
        claim="forest-enumerator-factorization",
        passed=witness is None,
        witness=witness,
        stats=stats,
    )
