"""Matroids presented by the columns of an exact rational matrix.

A ``RepresentedMatroid`` owns an ordered tuple of ground-set labels and a
matrix with one column per label.  Subsets of the ground set are plain int
bitmasks (bit j = column j).

The expensive operations -- the Tutte polynomial, the independence census
and basis enumeration -- all reduce to walking the subset tree depth-first
while maintaining an incremental integer elimination state: every tree
edge costs one column reduction against the current pivots.  Once the
chosen columns span the whole column space, the remaining subtree is
closed with binomial counts instead of being walked.  This replaces a
Gray-code walk (removing a column from an elimination state has no cheap
exact update) at the same one-update-per-step cost.

Sweeps can be partitioned over worker processes by fixing the membership
of a prefix of the columns; partial counters merge by addition, so results
are identical for every worker count.
"""

from __future__ import annotations

from math import comb, gcd
from typing import Hashable, Iterable, Sequence

from .linalg import Matrix, integer_row_copy, kernel_basis, rank
from .parallel import run_chunks
from .polys import LPoly, TuttePoly

DEFAULT_BASIS_LIMIT = 32
DEFAULT_SWEEP_LIMIT = 20


class EnumerationLimitError(Exception):
    """Raised when an exhaustive operation would exceed its ground-size
    limit; never a silent truncation."""


def mask_from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def indices_from_mask(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _reduce_column(pivots, col):
    """Reduce ``col`` against the pivot list (entries at all pivot rows are
    eliminated); returns the reduced column, gcd-normalized."""
    for prow, pval, pvec in pivots:
        cv = col[prow]
        if cv:
            col = tuple(pval * x - cv * y for x, y in zip(col, pvec))
            g = 0
            for x in col:
                g = gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                col = tuple(x // g for x in col)
    return col


def _leading_row(col) -> int | None:
    for i, x in enumerate(col):
        if x:
            return i
    return None


def _int_columns(matrix: Matrix) -> list[tuple[int, ...]]:
    rows = integer_row_copy(matrix)
    n = matrix.ncols
    return [tuple(rows[i][j] for i in range(len(rows))) for j in range(n)]


def _profile_from(cols, start, pivots, size, full_rank, profile):
    """DFS over memberships of cols[start:], accumulating (|A|, r(A))
    counts into ``profile``.  ``pivots`` is mutated and restored."""
    n = len(cols)
    r = len(pivots)
    if r == full_rank:
        m = n - start
        for k in range(m + 1):
            key = (size + k, r)
            profile[key] = profile.get(key, 0) + comb(m, k)
        return
    if start == n:
        key = (size, r)
        profile[key] = profile.get(key, 0) + 1
        return
    _profile_from(cols, start + 1, pivots, size, full_rank, profile)
    red = _reduce_column(pivots, cols[start])
    lead = _leading_row(red)
    if lead is None:
        _profile_from(cols, start + 1, pivots, size + 1, full_rank, profile)
    else:
        pivots.append((lead, red[lead], red))
        _profile_from(cols, start + 1, pivots, size + 1, full_rank, profile)
        pivots.pop()


def _profile_prefix_worker(args):
    cols, full_rank, prefix_bits, masks = args
    total: dict[tuple[int, int], int] = {}
    for mask in masks:
        pivots = []
        size = 0
        for i in range(prefix_bits):
            if mask >> i & 1:
                size += 1
                red = _reduce_column(pivots, cols[i])
                lead = _leading_row(red)
                if lead is not None:
                    pivots.append((lead, red[lead], red))
        _profile_from(cols, prefix_bits, pivots, size, full_rank, total)
    return total


def _subset_profile(cols, full_rank, threads=1):
    n = len(cols)
    if threads <= 1 or n < 8:
        profile: dict[tuple[int, int], int] = {}
        _profile_from(cols, 0, [], 0, full_rank, profile)
        return profile
    prefix_bits = min(n, max(4, (threads * 4).bit_length()))
    all_masks = list(range(1 << prefix_bits))
    chunk = max(1, len(all_masks) // (threads * 4))
    jobs = [
        (cols, full_rank, prefix_bits, all_masks[i : i + chunk])
        for i in range(0, len(all_masks), chunk)
    ]
    out: dict[tuple[int, int], int] = {}
    for part in run_chunks(_profile_prefix_worker, jobs, threads):
        for key, cnt in part.items():
            out[key] = out.get(key, 0) + cnt
    return out


def _bases_from(cols, start, pivots, mask, target_rank, out):
    r = len(pivots)
    if r == target_rank:
        out.append(mask)
        return
    if len(cols) - start < target_rank - r:
        return
    red = _reduce_column(pivots, cols[start])
    lead = _leading_row(red)
    if lead is not None:
        pivots.append((lead, red[lead], red))
        _bases_from(cols, start + 1, pivots, mask | (1 << start), target_rank, out)
        pivots.pop()
    _bases_from(cols, start + 1, pivots, mask, target_rank, out)


def _bases_prefix_worker(args):
    cols, target_rank, prefix_bits, masks = args
    found: list[int] = []
    for mask in masks:
        pivots = []
        ok = True
        for i in range(prefix_bits):
            if mask >> i & 1:
                red = _reduce_column(pivots, cols[i])
                lead = _leading_row(red)
                if lead is None:
                    ok = False
                    break
                pivots.append((lead, red[lead], red))
        if not ok or len(pivots) > target_rank:
            continue
        _bases_from(cols, prefix_bits, pivots, mask, target_rank, found)
    return found


def _basis_masks(cols, target_rank, threads=1):
    n = len(cols)
    if threads <= 1 or n < 8:
        out: list[int] = []
        _bases_from(cols, 0, [], 0, target_rank, out)
        return out
    prefix_bits = min(n, max(4, (threads * 4).bit_length()))
    all_masks = list(range(1 << prefix_bits))
    chunk = max(1, len(all_masks) // (threads * 4))
    jobs = [
        (cols, target_rank, prefix_bits, all_masks[i : i + chunk])
        for i in range(0, len(all_masks), chunk)
    ]
    out = []
    for part in run_chunks(_bases_prefix_worker, jobs, threads):
        out.extend(part)
    return out


class RepresentedMatroid:
    """Ground labels plus a representation matrix (one column each)."""

    __slots__ = ("labels", "matrix", "rank", "_cols", "_profile")

    def __init__(self, labels: Sequence[Hashable], matrix: Matrix):
        labels = tuple(labels)
        if len(labels) != matrix.ncols:
            raise ValueError("label count must equal column count")
        if len(set(labels)) != len(labels):
            raise ValueError("ground-set labels must be distinct")
        self.labels = labels
        self.matrix = matrix
        self.rank = rank(matrix)
        self._cols = None
        self._profile = None

    @property
    def size(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"RepresentedMatroid(size={self.size}, rank={self.rank})"

    def _int_cols(self):
        if self._cols is None:
            self._cols = _int_columns(self.matrix)
        return self._cols

    def _check_limit(self, limit: int, what: str) -> None:
        if self.size > limit:
            raise EnumerationLimitError(
                f"{what} needs {self.size} ground elements but the limit is {limit}"
            )

    def rank_of(self, subset_mask: int) -> int:
        """Rank of the column subset selected by the bitmask."""
        if subset_mask < 0 or subset_mask >> self.size:
            raise ValueError("subset mask outside the ground set")
        cols = self._int_cols()
        pivots = []
        for i in indices_from_mask(subset_mask):
            red = _reduce_column(pivots, cols[i])
            lead = _leading_row(red)
            if lead is not None:
                pivots.append((lead, red[lead], red))
        return len(pivots)

    def is_independent(self, subset_mask: int) -> bool:
        return self.rank_of(subset_mask) == bin(subset_mask).count("1")

    def restriction(self, subset_mask: int) -> "RepresentedMatroid":
        idx = indices_from_mask(subset_mask)
        if idx and idx[-1] >= self.size:
            raise ValueError("subset mask outside the ground set")
        return RepresentedMatroid(
            [self.labels[i] for i in idx], self.matrix.take_columns(idx)
        )

    def dual(self) -> "RepresentedMatroid":
        """Same labels; representation is the transpose of a kernel basis
        of this matroid's representation."""
        ker = kernel_basis(self.matrix)
        return RepresentedMatroid(self.labels, ker.transpose())

    def subset_profile(self, *, limit: int = DEFAULT_SWEEP_LIMIT, threads: int = 1):
        """Counts of subsets by (cardinality, rank), over all 2^n subsets."""
        self._check_limit(limit, "subset sweep")
        if self._profile is None:
            self._profile = _subset_profile(self._int_cols(), self.rank, threads)
        return dict(self._profile)

    def enumerate_bases(
        self,
        *,
        listing: bool = False,
        limit: int = DEFAULT_BASIS_LIMIT,
        threads: int = 1,
    ):
        """Number of bases, and optionally the sorted list of basis masks."""
        self._check_limit(limit, "basis enumeration")
        masks = _basis_masks(self._int_cols(), self.rank, threads)
        if listing:
            return len(masks), sorted(masks)
        return len(masks), None

    def tutte(self, *, limit: int = DEFAULT_SWEEP_LIMIT, threads: int = 1) -> TuttePoly:
        """Corank-nullity sum over all subsets of the ground set."""
        profile = self.subset_profile(limit=limit, threads=threads)
        coeffs: dict[tuple[int, int], int] = {}
        R = self.rank
        for (size, r), cnt in profile.items():
            a, b = R - r, size - r
            for i in range(a + 1):
                ci = comb(a, i) * (-1) ** (a - i)
                for j in range(b + 1):
                    term = cnt * ci * comb(b, j) * (-1) ** (b - j)
                    key = (i, j)
                    s = coeffs.get(key, 0) + term
                    if s:
                        coeffs[key] = s
                    else:
                        coeffs.pop(key, None)
        poly = TuttePoly(coeffs)
        if any(c < 0 for c in poly.coeffs.values()):
            raise AssertionError("Tutte polynomial produced a negative coefficient")
        return poly

    def independence_census(
        self, *, limit: int = DEFAULT_SWEEP_LIMIT, threads: int = 1
    ) -> LPoly:
        """Sum of y^(rank - |I|) over independent subsets I; equals the
        Tutte polynomial evaluated at (y+1, 1)."""
        profile = self.subset_profile(limit=limit, threads=threads)
        coeffs: dict[int, int] = {}
        R = self.rank
        for (size, r), cnt in profile.items():
            if size == r:
                e = R - size
                coeffs[e] = coeffs.get(e, 0) + cnt
        return LPoly(coeffs)

    def spanning_census(self, *, limit: int = DEFAULT_SWEEP_LIMIT, threads: int = 1) -> LPoly:
        """Sum of y^(|A| - rank) over spanning subsets A; equals the Tutte
        polynomial evaluated at (1, y+1)."""
        profile = self.subset_profile(limit=limit, threads=threads)
        coeffs: dict[int, int] = {}
        R = self.rank
        for (size, r), cnt in profile.items():
            if r == R:
                e = size - R
                coeffs[e] = coeffs.get(e, 0) + cnt
        return LPoly(coeffs)

    def basis_family(self, *, limit: int = DEFAULT_BASIS_LIMIT, threads: int = 1) -> frozenset[int]:
        _, masks = self.enumerate_bases(listing=True, limit=limit, threads=threads)
        return frozenset(masks)


def direct_sum(matroids: Sequence[RepresentedMatroid]) -> RepresentedMatroid:
    """Block-diagonal direct sum; labels become (block_index, label)."""
    labels = []
    for i, m in enumerate(matroids):
        labels.extend((i, lab) for lab in m.labels)
    total_rows = sum(m.matrix.nrows for m in matroids)
    total_cols = sum(m.matrix.ncols for m in matroids)
    row_offset = 0
    col_offset = 0
    grid = [[0] * total_cols for _ in range(total_rows)]
    for m in matroids:
        for i, row in enumerate(m.matrix.rows):
            for j, x in enumerate(row):
                if x:
                    grid[row_offset + i][col_offset + j] = x
        row_offset += m.matrix.nrows
        col_offset += m.matrix.ncols
    return RepresentedMatroid(labels, Matrix(grid, ncols=total_cols))
