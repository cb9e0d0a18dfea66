"""The duality between root-of-unity matroids and simplicial matroids.

For n = p1^m1 ... pr^mr with square-free part s and cofactor t = n/s, the
ground set Z_n is identified with t copies of the facet set of the join
complex on (p1, ..., pr): position j splits as j = copy + k*t with
0 <= copy < t, and k maps to the facet (k mod p1, ..., k mod pr) by the
Chinese Remainder Theorem.  Residues are taken against the primes in
increasing order; any fixed coordinate order works equally well.

``verify_theorem1`` checks, under that dictionary, that a subset of Z_n is
a basis of the root-of-unity matroid exactly when the image of its
complement is a basis of the direct sum of t copies of the simplicial
matroid, and that the two Tutte polynomials agree with their variables
exchanged.  The basis families on both sides are produced by exhaustive
sweeps; the direct sum's Tutte polynomial is assembled as the product of
the per-copy sweeps (block-diagonal ranks are additive), which the test
suite cross-checks against a direct sweep at smaller sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .complexes import JoinComplex
from .cyclo import cyclotomic_matroid, euler_phi, factorize, squarefree_part
from .matroids import (
    DEFAULT_BASIS_LIMIT,
    DEFAULT_SWEEP_LIMIT,
    RepresentedMatroid,
    direct_sum,
    indices_from_mask,
)
from .report import VerificationReport


@dataclass(frozen=True)
class DualityDictionary:
    """Bijection from Z_n to (copy index, facet tuple)."""

    n: int
    s: int
    t: int
    primes: tuple[int, ...]
    mapping: tuple[tuple[int, tuple[int, ...]], ...]

    def image(self, j: int) -> tuple[int, tuple[int, ...]]:
        return self.mapping[j]


def duality_dictionary(n: int) -> DualityDictionary:
    if n < 2:
        raise ValueError("duality_dictionary requires n >= 2")
    primes = tuple(p for p, _ in factorize(n))
    s, t = squarefree_part(n)
    mapping = []
    for j in range(n):
        copy, k = j % t, j // t
        facet = tuple(k % p for p in primes)
        mapping.append((copy, facet))
    return DualityDictionary(n=n, s=s, t=t, primes=primes, mapping=tuple(mapping))


def dual_side_matroid(n: int) -> RepresentedMatroid:
    """Direct sum of t copies of the simplicial matroid of the join
    complex on the distinct primes of n; labels are (copy, facet)."""
    dictionary = duality_dictionary(n)
    complex_ = JoinComplex(dictionary.primes)
    copy = complex_.simplicial_matroid()
    return direct_sum([copy] * dictionary.t)


def _label_positions(matroid: RepresentedMatroid) -> dict:
    return {label: i for i, label in enumerate(matroid.labels)}


def qbasis_count(n: int, *, limit: int = DEFAULT_BASIS_LIMIT, threads: int = 1) -> int:
    """Number of phi(n)-subsets of the n-th roots of unity spanning the
    whole field, i.e. the basis count of the root-of-unity matroid."""
    count, _ = cyclotomic_matroid(n).enumerate_bases(limit=limit, threads=threads)
    return count


def corollary2_bound(n: int) -> tuple[int, bool]:
    """Upper bound for the basis count, and whether equality is predicted
    (n has at most two odd prime factors)."""
    if n < 1:
        raise ValueError("corollary2_bound requires a positive integer")
    factors = factorize(n)
    primes = [p for p, _ in factors]
    t = prod(p ** (m - 1) for p, m in factors)
    base = 1
    for i, p in enumerate(primes):
        expo = prod(q - 1 for j, q in enumerate(primes) if j != i)
        base *= p**expo
    odd = sum(1 for p in primes if p % 2)
    return base**t, odd <= 2


def verify_theorem1(
    n: int,
    *,
    exhaustive_limit: int = DEFAULT_SWEEP_LIMIT,
    basis_limit: int = DEFAULT_BASIS_LIMIT,
    threads: int = 1,
) -> VerificationReport:
    """Check the duality between the root-of-unity matroid of order n and
    the direct sum of simplicial matroids, through the explicit bijection.

    In exhaustive mode (n <= exhaustive_limit) the full basis families are
    compared and the Tutte exchange identity is checked; past the cutoff
    only the basis counts are compared (the exchange check needs the same
    full sweep the cutoff guards), and the report says so.
    """
    if n < 2:
        raise ValueError("verify_theorem1 requires n >= 2")
    dictionary = duality_dictionary(n)
    mu = cyclotomic_matroid(n)
    complex_ = JoinComplex(dictionary.primes)
    copy = complex_.simplicial_matroid()
    dual_side = direct_sum([copy] * dictionary.t)
    positions = _label_positions(dual_side)
    image_bit = [
        1 << positions[dictionary.image(j)] for j in range(n)
    ]

    stats: dict = {
        "n": n,
        "s": dictionary.s,
        "t": dictionary.t,
        "phi": euler_phi(n),
        "mode": "exhaustive" if n <= exhaustive_limit else "counts-only",
    }
    witness = None

    if n > basis_limit:
        raise ValueError(f"n={n} exceeds the basis enumeration limit {basis_limit}")

    count_mu, masks_mu = mu.enumerate_bases(listing=True, limit=basis_limit, threads=threads)
    count_dual, masks_dual = dual_side.enumerate_bases(
        listing=True, limit=basis_limit, threads=threads
    )
    stats["bases"] = count_mu
    stats["dual_bases"] = count_dual
    if count_mu != count_dual:
        witness = {"kind": "basis-count", "mu": count_mu, "dual": count_dual}

    if witness is None and n <= exhaustive_limit:
        full = (1 << n) - 1
        mapped = set()
        for mask in masks_mu:
            comp = full & ~mask
            img = 0
            for j in indices_from_mask(comp):
                img |= image_bit[j]
            mapped.add(img)
        dual_family = set(masks_dual)
        if mapped != dual_family:
            bad = min(mapped.symmetric_difference(dual_family))
            witness = {
                "kind": "basis-family",
                "dual_side_mask": bad,
                "dual_side_subset": [
                    [dual_side.labels[i][0], list(dual_side.labels[i][1])]
                    for i in indices_from_mask(bad)
                ],
            }
        stats["family_compared"] = len(mapped)

    if witness is None and n <= exhaustive_limit:
        tutte_mu = mu.tutte(limit=exhaustive_limit, threads=threads)
        tutte_dual = copy.tutte(limit=exhaustive_limit, threads=threads) ** dictionary.t
        if tutte_mu != tutte_dual.swap():
            witness = {
                "kind": "tutte-exchange",
                "mu": tutte_mu.text(),
                "dual": tutte_dual.text(),
            }
        stats["tutte_checked"] = witness is None

    return VerificationReport(
        claim="theorem1",
        passed=witness is None,
        witness=witness,
        stats=stats,
    )
