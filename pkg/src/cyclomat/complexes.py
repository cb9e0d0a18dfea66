"""Join complexes of point sets, their boundary maps and tree homology.

A join complex on part sizes (n1, ..., nr) has one vertex set per part; a
face picks at most one vertex from each part.  Facets pick one vertex from
every part and are listed in lexicographic order of their vertex tuples.

Vertices are ordered part by part, faces are written with vertices in that
global order, and boundary maps use the standard alternating-sign rule on
it.  The chain complex is reduced (augmented): dimension -1 has the single
empty face, so the 0-th boundary map is the all-ones augmentation row.

A basis T of the top boundary map's column matroid spans a complex built
by attaching the facets in T to the codimension-2 skeleton.  Its integer
homology in codimension 1 is finite; the order is the product of the
invariant factors of the top boundary matrix restricted to T, because the
integer kernel of the next boundary map is a saturated lattice containing
the restricted image with equal rank.  ``tree_homology`` uses that route;
``tree_homology_kernel_route`` recomputes the order from an explicit
kernel-lattice basis and a determinant, and the tests require both to
agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import prod

from .linalg import Matrix, determinant, integer_kernel_lattice, rank, smith_normal_form, solve_exact
from .matroids import (
    DEFAULT_BASIS_LIMIT,
    RepresentedMatroid,
    indices_from_mask,
)
from .parallel import run_chunks


@dataclass(frozen=True)
class HomologySummary:
    """Codimension-1 homology of an attached-tree complex."""

    free_rank: int
    torsion_order: int

    def __post_init__(self):
        if self.torsion_order < 1:
            raise ValueError("torsion order must be positive")


class JoinComplex:
    """Simplicial join of r point sets with the given sizes."""

    def __init__(self, part_sizes):
        sizes = tuple(int(n) for n in part_sizes)
        if not sizes or any(n < 1 for n in sizes):
            raise ValueError("part sizes must be positive integers")
        self.part_sizes = sizes
        self.r = len(sizes)
        self._face_cache: dict[int, list[tuple[tuple[int, int], ...]]] = {}

    def __repr__(self) -> str:
        return f"JoinComplex{self.part_sizes}"

    def faces(self, dim: int) -> list[tuple[tuple[int, int], ...]]:
        """Faces of the given dimension as tuples of (part, vertex) pairs
        sorted by part; dimension -1 is the single empty face."""
        if dim < -1 or dim > self.r - 1:
            raise ValueError(f"dimension {dim} out of range for r={self.r}")
        if dim not in self._face_cache:
            if dim == -1:
                faces = [()]
            else:
                faces = []
                for parts in combinations(range(self.r), dim + 1):
                    for verts in product(*(range(self.part_sizes[p]) for p in parts)):
                        faces.append(tuple(zip(parts, verts)))
            self._face_cache[dim] = faces
        return self._face_cache[dim]

    @property
    def facets(self) -> list[tuple[int, ...]]:
        """Facet vertex tuples (one vertex per part), lexicographic."""
        return [tuple(v for _, v in f) for f in self.faces(self.r - 1)]

    def facet_count(self) -> int:
        return prod(self.part_sizes)

    def boundary_matrix(self, d: int) -> Matrix:
        """Boundary map from d-faces to (d-1)-faces of the reduced chain
        complex; entries are 0 or +-1."""
        if d < 0 or d > self.r - 1:
            raise ValueError(f"boundary dimension {d} out of range")
        return self._boundary(d)

    def _boundary(self, d: int) -> Matrix:
        # d = -1 is allowed internally: the map from the empty face to the
        # (empty) dimension -2 chain group.
        cols = self.faces(d)
        if d - 1 < -1:
            return Matrix([], ncols=len(cols))
        rows = self.faces(d - 1)
        index = {f: i for i, f in enumerate(rows)}
        grid = [[0] * len(cols) for _ in rows]
        for j, face in enumerate(cols):
            for i in range(len(face)):
                sub = face[:i] + face[i + 1 :]
                grid[index[sub]][j] = (-1) ** i
        return Matrix(grid, ncols=len(cols))

    def simplicial_matroid(self) -> RepresentedMatroid:
        """Matroid of the top boundary map's columns, one per facet."""
        return RepresentedMatroid(self.facets, self.boundary_matrix(self.r - 1))


def bolker_bound(part_sizes) -> int:
    """prod_i n_i^(prod_{j != i} (n_j - 1))."""
    sizes = tuple(int(n) for n in part_sizes)
    if not sizes or any(n < 1 for n in sizes):
        raise ValueError("part sizes must be positive integers")
    total = 1
    for i, n in enumerate(sizes):
        expo = prod(m - 1 for j, m in enumerate(sizes) if j != i)
        total *= n**expo
    return total


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def star_tree(part_sizes) -> int:
    """Facet mask of the union of the stars of the vertices labeled 0 in
    each part; requires the parts to be distinct primes."""
    sizes = tuple(int(n) for n in part_sizes)
    if len(set(sizes)) != len(sizes) or not all(_is_prime(n) for n in sizes):
        raise ValueError("star_tree requires distinct prime part sizes")
    complex_ = JoinComplex(sizes)
    mask = 0
    for idx, facet in enumerate(complex_.facets):
        if any(v == 0 for v in facet):
            mask |= 1 << idx
    return mask


def _restricted_top_boundary(complex_: JoinComplex, facet_mask: int) -> Matrix:
    top = complex_.boundary_matrix(complex_.r - 1)
    return top.take_columns(indices_from_mask(facet_mask))


def _kernel_dim_below_top(complex_: JoinComplex) -> int:
    lower = complex_._boundary(complex_.r - 2)
    return lower.ncols - rank(lower)


def _check_basis(complex_: JoinComplex, facet_mask: int, restricted: Matrix) -> int:
    matroid_rank = rank(complex_.boundary_matrix(complex_.r - 1))
    size = bin(facet_mask).count("1")
    if size != matroid_rank or rank(restricted) != size:
        raise ValueError("facet set is not a basis of the simplicial matroid")
    return matroid_rank


def tree_homology(complex_: JoinComplex, facet_mask: int) -> HomologySummary:
    """Codimension-1 integer homology of the complex obtained by attaching
    the facets in ``facet_mask`` to the codimension-2 skeleton; the mask
    must be a basis of the simplicial matroid."""
    restricted = _restricted_top_boundary(complex_, facet_mask)
    _check_basis(complex_, facet_mask, restricted)
    snf = smith_normal_form(restricted)
    free_rank = _kernel_dim_below_top(complex_) - snf.rank
    return HomologySummary(free_rank=free_rank, torsion_order=snf.torsion_order)


def tree_homology_kernel_route(complex_: JoinComplex, facet_mask: int) -> HomologySummary:
    """Same group computed differently: express the restricted columns in
    an integer basis of the next boundary map's kernel lattice and take
    the determinant."""
    restricted = _restricted_top_boundary(complex_, facet_mask)
    _check_basis(complex_, facet_mask, restricted)
    lower = complex_._boundary(complex_.r - 2)
    lattice = integer_kernel_lattice(lower)
    coords = solve_exact(lattice, restricted)
    if not coords.is_integral():
        raise AssertionError("restricted boundary not integral over the kernel lattice")
    free_rank = lattice.ncols - rank(restricted)
    torsion = abs(determinant(coords)) if lattice.ncols == restricted.ncols else 0
    if torsion == 0:
        raise AssertionError("kernel-lattice route expects a square full-rank system")
    return HomologySummary(free_rank=free_rank, torsion_order=int(torsion))


def _torsion_chunk(args):
    part_sizes, masks = args
    complex_ = JoinComplex(part_sizes)
    total = 0
    for mask in masks:
        total += tree_homology(complex_, mask).torsion_order ** 2
    return total


def adin_sum(part_sizes, *, limit: int = DEFAULT_BASIS_LIMIT, threads: int = 1) -> int:
    """Sum of squared codimension-1 torsion orders over all bases of the
    simplicial matroid."""
    complex_ = JoinComplex(part_sizes)
    matroid = complex_.simplicial_matroid()
    _, masks = matroid.enumerate_bases(listing=True, limit=limit, threads=threads)
    if threads <= 1 or len(masks) < 64:
        return _torsion_chunk((complex_.part_sizes, masks))
    chunk = max(1, len(masks) // (threads * 4))
    jobs = [
        (complex_.part_sizes, masks[i : i + chunk]) for i in range(0, len(masks), chunk)
    ]
    return sum(run_chunks(_torsion_chunk, jobs, threads))
