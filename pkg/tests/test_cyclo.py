"""Euler phi, cyclotomic polynomials, root-of-unity matroids, blocks."""

from math import gcd

import pytest

from cyclomat.cyclo import (
    IntPoly,
    block_decomposition,
    cyclotomic_matroid,
    cyclotomic_polynomial,
    euler_phi,
    factorize,
    primitive_roots_subset,
    squarefree_part,
    verify_parallel_extension,
)
from cyclomat.matroids import indices_from_mask, mask_from_indices


class TestFactorize:
    def test_examples(self):
        assert factorize(1) == ()
        assert factorize(12) == ((2, 2), (3, 1))
        assert factorize(18) == ((2, 1), (3, 2))
        assert factorize(97) == ((97, 1),)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factorize(0)

    def test_bound(self):
        with pytest.raises(ValueError):
            factorize(10**9 + 7, bound=10**6)

    def test_reconstruction(self):
        for n in range(1, 300):
            prod = 1
            for p, m in factorize(n):
                prod *= p**m
            assert prod == n

    def test_squarefree_part(self):
        assert squarefree_part(12) == (6, 2)
        assert squarefree_part(18) == (6, 3)
        assert squarefree_part(30) == (30, 1)


class TestEulerPhi:
    def test_examples(self):
        assert euler_phi(1) == 1
        assert euler_phi(12) == 4
        assert euler_phi(18) == 6

    def test_gcd_count_oracle(self):
        for n in range(1, 120):
            assert euler_phi(n) == sum(1 for j in range(1, n + 1) if gcd(j, n) == 1)


class TestCyclotomicPolynomial:
    def test_small(self):
        assert cyclotomic_polynomial(1) == IntPoly([-1, 1])
        assert cyclotomic_polynomial(4) == IntPoly([1, 0, 1])
        assert cyclotomic_polynomial(6) == IntPoly([1, -1, 1])

    def test_division_oracle(self):
        # (x^4 - 1) / ((x - 1)(x + 1)) leaves x^2 + 1
        num = IntPoly([-1, 0, 0, 0, 1])
        den = IntPoly([-1, 1]) * IntPoly([1, 1])
        quo, rem = num.divmod_exact(den)
        assert rem.is_zero() and quo == cyclotomic_polynomial(4)

    def test_monic_with_phi_degree(self):
        for n in range(1, 80):
            poly = cyclotomic_polynomial(n)
            assert poly.is_monic()
            assert poly.degree == euler_phi(n)

    def test_degree_sum(self):
        for n in range(1, 201):
            total = sum(cyclotomic_polynomial(d).degree for d in range(1, n + 1) if n % d == 0)
            assert total == n

    def test_product_reconstructs(self):
        for n in (1, 2, 6, 12, 30):
            prod = IntPoly([1])
            for d in range(1, n + 1):
                if n % d == 0:
                    prod = prod * cyclotomic_polynomial(d)
            coeffs = [0] * (n + 1)
            coeffs[0], coeffs[n] = -1, 1
            assert prod == IntPoly(coeffs)


class TestCyclotomicMatroid:
    def test_order_one(self):
        m = cyclotomic_matroid(1)
        assert m.matrix.columns() == [(1,)]
        assert m.enumerate_bases()[0] == 1

    def test_order_four_columns(self):
        assert cyclotomic_matroid(4).matrix.columns() == [
            (1, 0), (0, 1), (-1, 0), (0, -1),
        ]

    def test_order_six_columns(self):
        assert cyclotomic_matroid(6).matrix.columns() == [
            (1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1),
        ]

    def test_rank_is_phi(self):
        for n in range(1, 61):
            assert cyclotomic_matroid(n).rank == euler_phi(n)


class TestPrimitiveRoots:
    def test_order_six_is_basis(self):
        m = cyclotomic_matroid(6)
        subset = primitive_roots_subset(6)
        assert indices_from_mask(subset) == [1, 5]
        assert m.rank_of(subset) == 2

    def test_order_four_dependent(self):
        m = cyclotomic_matroid(4)
        subset = primitive_roots_subset(4)
        assert indices_from_mask(subset) == [1, 3]
        assert m.rank_of(subset) == 1

    def test_order_twelve_dependent(self):
        m = cyclotomic_matroid(12)
        subset = primitive_roots_subset(12)
        assert indices_from_mask(subset) == [1, 5, 7, 11]
        assert m.rank_of(subset) < 4

    def test_squarefree_iff_basis(self):
        for n in range(2, 31):
            m = cyclotomic_matroid(n)
            subset = primitive_roots_subset(n)
            squarefree = all(mult == 1 for _, mult in factorize(n))
            assert m.is_independent(subset) == squarefree


class TestBlockDecomposition:
    def test_order_six_single_block(self):
        assert block_decomposition(6) == [mask_from_indices(range(6))]

    def test_order_twelve(self):
        blocks = block_decomposition(12)
        assert [indices_from_mask(b) for b in blocks] == [
            [0, 2, 4, 6, 8, 10],
            [1, 3, 5, 7, 9, 11],
        ]

    def test_order_eighteen(self):
        blocks = block_decomposition(18)
        assert len(blocks) == 3
        assert all(bin(b).count("1") == 6 for b in blocks)

    def test_blocks_partition(self):
        for n in (4, 9, 12, 18, 20):
            blocks = block_decomposition(n)
            union = 0
            for b in blocks:
                assert union & b == 0
                union |= b
            assert union == (1 << n) - 1

    def test_restrictions_match_squarefree_order(self):
        # each block is a copy of the square-free order under k -> j + k*t
        for n in (4, 9, 12, 18):
            s, t = squarefree_part(n)
            mu_n = cyclotomic_matroid(n)
            mu_s_family = cyclotomic_matroid(s).basis_family()
            for block in block_decomposition(n):
                restricted = mu_n.restriction(block)
                assert restricted.basis_family() == mu_s_family

    def test_basis_count_multiplies(self):
        for n in (4, 9, 12, 18):
            s, t = squarefree_part(n)
            count_n = cyclotomic_matroid(n).enumerate_bases()[0]
            count_s = cyclotomic_matroid(s).enumerate_bases()[0]
            assert count_n == count_s**t


class TestParallelExtension:
    @pytest.mark.parametrize("n", [3, 5, 9])
    def test_odd_orders(self, n):
        report = verify_parallel_extension(n)
        assert report.passed
        assert all(pair["scalar"] == "-1" for pair in report.stats["pairs"])

    def test_even_rejected(self):
        with pytest.raises(ValueError):
            verify_parallel_extension(4)
