"""Represented matroids: rank oracle, bases, duality, sums, Tutte."""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclomat.cyclo import cyclotomic_matroid
from cyclomat.linalg import Matrix
from cyclomat.matroids import (
    EnumerationLimitError,
    RepresentedMatroid,
    direct_sum,
    indices_from_mask,
    mask_from_indices,
)
from cyclomat.polys import LPoly, TuttePoly


def coloop():
    return RepresentedMatroid(["e"], Matrix([[1]]))

def loop():
    return RepresentedMatroid(["e"], Matrix([[0]]))

def parallel_pair():
    return RepresentedMatroid(["a", "b"], Matrix([[1, 2]]))

def kpq(p, q):
    from cyclomat.bipartite import kpq_matroid

    return kpq_matroid(p, q)


def brute_rank_histogram(m):
    """Oracle: full 2^n sweep with independent rank computations."""
    hist = {}
    for size in range(m.size + 1):
        for subset in combinations(range(m.size), size):
            key = (size, m.rank_of(mask_from_indices(subset)))
            hist[key] = hist.get(key, 0) + 1
    return hist


class TestRankOf:
    def test_empty_and_full(self):
        m = cyclotomic_matroid(6)
        assert m.rank_of(0) == 0
        assert m.rank_of((1 << 6) - 1) == m.rank == 2

    def test_mu6_antipodal_pair(self):
        # 1 and zeta^3 = -1 are parallel
        m = cyclotomic_matroid(6)
        assert m.rank_of(mask_from_indices([0, 3])) == 1

    def test_mask_out_of_range(self):
        with pytest.raises(ValueError):
            coloop().rank_of(1 << 5)

    def test_rank_axioms_small(self):
        m = cyclotomic_matroid(8)
        full = 1 << m.size
        ranks = {a: m.rank_of(a) for a in range(full)}
        assert ranks[0] == 0
        for a in range(full):
            for e in range(m.size):
                if not (a >> e) & 1:
                    grown = ranks[a | (1 << e)]
                    assert ranks[a] <= grown <= ranks[a] + 1

    @given(st.integers(0, 2**8 - 1), st.integers(0, 2**8 - 1))
    @settings(max_examples=80, deadline=None)
    def test_submodularity_sampled(self, a, b):
        m = cyclotomic_matroid(8)
        assert m.rank_of(a | b) + m.rank_of(a & b) <= m.rank_of(a) + m.rank_of(b)


class TestBases:
    def test_mu4(self):
        count, masks = cyclotomic_matroid(4).enumerate_bases(listing=True)
        assert count == 4
        # pairs with opposite parity exponents
        expected = {
            mask_from_indices(p)
            for p in [(0, 1), (0, 3), (1, 2), (2, 3)]
        }
        assert set(masks) == expected
        assert masks == sorted(masks)

    def test_mu6(self):
        assert cyclotomic_matroid(6).enumerate_bases()[0] == 12

    def test_k23_spanning_trees(self):
        assert kpq(2, 3).enumerate_bases()[0] == 12  # p^{q-1} q^{p-1}

    def test_limit_refusal(self):
        m = cyclotomic_matroid(6)
        with pytest.raises(EnumerationLimitError):
            m.enumerate_bases(limit=5)

    def test_threads_agree(self):
        m = cyclotomic_matroid(12)
        count1, masks1 = m.enumerate_bases(listing=True, threads=1)
        m2 = cyclotomic_matroid(12)
        count2, masks2 = m2.enumerate_bases(listing=True, threads=3)
        assert count1 == count2 == 144
        assert masks1 == masks2


class TestDual:
    def test_coloop_dual_is_loop(self):
        d = coloop().dual()
        assert d.rank == 0 and d.size == 1
        assert d.matrix.ncols == 1

    def test_double_dual_basis_family(self):
        m = cyclotomic_matroid(6)
        assert m.dual().dual().basis_family() == m.basis_family()

    def test_dual_same_basis_count(self):
        m = cyclotomic_matroid(6)
        assert m.dual().enumerate_bases()[0] == 12

    def test_complement_property(self):
        # B is a basis of dual(M) iff the complement of B is a basis of M
        for m in [cyclotomic_matroid(6), kpq(2, 2), parallel_pair()]:
            full = (1 << m.size) - 1
            bases = m.basis_family()
            dual_bases = m.dual().basis_family()
            assert dual_bases == {full & ~b for b in bases}


class TestDirectSum:
    def test_two_coloops(self):
        m = direct_sum([coloop(), coloop()])
        assert m.rank == 2
        assert m.enumerate_bases()[0] == 1

    def test_two_k23_copies(self):
        m = direct_sum([kpq(2, 3)] * 2)
        assert m.enumerate_bases()[0] == 144

    def test_loop_coloop_tutte(self):
        m = direct_sum([loop(), coloop()])
        assert m.tutte() == TuttePoly({(1, 1): 1})

    def test_rank_additive(self):
        m = direct_sum([kpq(2, 2), cyclotomic_matroid(4)])
        assert m.rank == kpq(2, 2).rank + 2

    def test_labels(self):
        m = direct_sum([coloop(), coloop()])
        assert m.labels == ((0, "e"), (1, "e"))


class TestRestriction:
    def test_empty_and_full(self):
        m = cyclotomic_matroid(6)
        assert m.restriction(0).size == 0
        full = m.restriction((1 << 6) - 1)
        assert full.basis_family() == m.basis_family()

    def test_mu12_block_restriction(self):
        # the even-exponent block of order 12 has the same basis family as
        # order 6 under k -> 2k
        m12 = cyclotomic_matroid(12)
        block = m12.restriction(mask_from_indices([0, 2, 4, 6, 8, 10]))
        assert block.basis_family() == cyclotomic_matroid(6).basis_family()
        assert block.enumerate_bases()[0] == 12


class TestTutte:
    def test_coloop_loop(self):
        assert coloop().tutte() == TuttePoly({(1, 0): 1})
        assert loop().tutte() == TuttePoly({(0, 1): 1})

    def test_parallel_pair(self):
        # direct corank-nullity evaluation over the 4 subsets
        assert parallel_pair().tutte() == TuttePoly({(1, 0): 1, (0, 1): 1})

    def test_counting_specializations(self):
        for m in [cyclotomic_matroid(6), kpq(2, 3), cyclotomic_matroid(9)]:
            t = m.tutte()
            assert t.evaluate(1, 1) == m.enumerate_bases()[0]
            hist = brute_rank_histogram(m)
            independent = sum(c for (s, r), c in hist.items() if s == r)
            assert t.evaluate(2, 1) == independent
            assert t.evaluate(2, 2) == 2**m.size

    def test_dual_exchanges_variables(self):
        for m in [cyclotomic_matroid(6), kpq(2, 2), cyclotomic_matroid(5), parallel_pair()]:
            assert m.dual().tutte() == m.tutte().swap()

    def test_multiplicative_over_direct_sum(self):
        a, b = kpq(2, 2), cyclotomic_matroid(4)
        assert direct_sum([a, b]).tutte() == a.tutte() * b.tutte()

    def test_product_matches_direct_sweep_three_blocks(self):
        # the duality checker builds the direct-sum Tutte polynomial as a
        # product of per-copy sweeps; validate against one full sweep
        copy = kpq(2, 2)
        m = direct_sum([copy] * 3)
        assert m.tutte() == copy.tutte() ** 3

    def test_nonnegative_coefficients(self):
        t = cyclotomic_matroid(10).tutte()
        assert all(c > 0 for c in t.coeffs.values())


class TestCensus:
    def test_coloop(self):
        assert coloop().independence_census() == LPoly({1: 1, 0: 1})

    def test_mu6(self):
        assert cyclotomic_matroid(6).independence_census() == LPoly({2: 1, 1: 6, 0: 12})

    def test_mu12_is_square(self):
        base = LPoly({2: 1, 1: 6, 0: 12})
        assert cyclotomic_matroid(12).independence_census() == base**2

    def test_census_equals_tutte_specialization(self):
        for m in [cyclotomic_matroid(6), kpq(2, 3)]:
            census = m.independence_census()
            t = m.tutte()
            for y in (0, 1, 2, 3):
                assert census.evaluate(y) == t.evaluate(y + 1, 1)

    def test_census_matches_brute_histogram(self):
        for m in [cyclotomic_matroid(9), kpq(2, 3), cyclotomic_matroid(10)]:
            hist = brute_rank_histogram(m)
            expected = {}
            for (size, r), cnt in hist.items():
                if size == r:
                    expected[m.rank - size] = expected.get(m.rank - size, 0) + cnt
            assert m.independence_census() == LPoly(expected)

    def test_profile_threads_agree(self):
        p1 = cyclotomic_matroid(10).subset_profile(threads=1)
        p2 = cyclotomic_matroid(10).subset_profile(threads=4)
        assert p1 == p2

    def test_sweep_limit(self):
        m = direct_sum([coloop()] * 21)
        with pytest.raises(EnumerationLimitError):
            m.tutte()


class TestMaskHelpers:
    def test_roundtrip(self):
        assert indices_from_mask(mask_from_indices([0, 3, 5])) == [0, 3, 5]
        assert mask_from_indices([]) == 0

    def test_distinct_labels_required(self):
        with pytest.raises(ValueError):
            RepresentedMatroid(["a", "a"], Matrix([[1, 0], [0, 1]]))
