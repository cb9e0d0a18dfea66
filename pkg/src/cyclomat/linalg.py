"""Exact dense linear algebra over the rationals and the integers.

Scalars are Python ints and ``fractions.Fraction`` values, so every result
here is exact; nothing is ever rounded.  Matrices are small (at most a few
hundred columns) and stored densely and immutably as tuples of row tuples.

Rank and kernel computations first scale each row to integers -- row
scaling changes neither the rank nor the kernel -- and then run integer
elimination, dividing each updated row by its gcd to keep entries small.
``smith_normal_form`` reduces an integer matrix by the classic
minimal-pivot row/column reduction and returns the invariant factors only.
``integer_kernel_lattice`` returns a basis of the full integer kernel
lattice (not merely a rational basis scaled to integers), which is what
torsion computations downstream require.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Scalar = int | Fraction


class Matrix:
    """Immutable dense matrix with int or Fraction entries.

    ``ncols`` must be passed explicitly for matrices with zero rows, since
    it cannot be inferred from an empty row list.
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Iterable[Iterable[Scalar]], *, ncols: int | None = None):
        rows = tuple(tuple(row) for row in rows)
        if rows:
            width = len(rows[0])
            if any(len(row) != width for row in rows):
                raise ValueError("rows have unequal lengths")
            if ncols is not None and ncols != width:
                raise ValueError(f"ncols={ncols} does not match row width {width}")
            ncols = width
        elif ncols is None:
            ncols = 0
        if ncols < 0:
            raise ValueError("ncols must be nonnegative")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]], *, nrows: int) -> "Matrix":
        for col in columns:
            if len(col) != nrows:
                raise ValueError("column length does not match nrows")
        return cls([[col[i] for col in columns] for i in range(nrows)], ncols=len(columns))

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[tuple[Scalar, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def take_columns(self, indices: Sequence[int]) -> "Matrix":
        return Matrix([[row[j] for j in indices] for row in self.rows], ncols=len(indices))

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.ncols)], ncols=self.nrows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in matrix product")
        cols = other.ncols
        out = []
        for row in self.rows:
            out.append(
                [sum(row[k] * other.rows[k][j] for k in range(self.ncols)) for j in range(cols)]
            )
        return Matrix(out, ncols=cols)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def is_integral(self) -> bool:
        return all(_is_integral(x) for row in self.rows for x in row)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.ncols, self.rows))

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols}, {list(map(list, self.rows))!r})"


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors of an integer matrix, in a divisibility chain."""

    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion_order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out


def _is_integral(x: Scalar) -> bool:
    return isinstance(x, int) or x.denominator == 1


def _as_int(x: Scalar) -> int:
    if isinstance(x, int):
        return x
    if x.denominator != 1:
        raise ValueError(f"entry {x} is not an integer")
    return x.numerator


def integer_row_copy(matrix: Matrix) -> list[list[int]]:
    """Mutable row copies with each row scaled to integers by the lcm of
    its denominators.  Rank and kernel are unchanged by this scaling."""
    out = []
    for row in matrix.rows:
        mult = 1
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                mult = lcm(mult, x.denominator)
        if mult == 1:
            out.append([x if isinstance(x, int) else x.numerator for x in row])
        else:
            out.append([_as_int(x * mult) for x in row])
    return out


def _normalize_row(row: list[int], start: int) -> None:
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return
    if g > 1:
        for j in range(start, len(row)):
            row[j] //= g


def _echelon(rows: list[list[int]], ncols: int) -> list[int]:
    """In-place integer row echelon form; returns the pivot column list.

    Pivots are chosen with minimal absolute value and updated rows are
    divided by their gcd, which keeps entries small without any division
    exactness requirement.
    """
    m = len(rows)
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = None
        best = None
        for i in range(r, m):
            v = rows[i][c]
            if v and (best is None or abs(v) < best):
                piv, best = i, abs(v)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pivot_row = rows[r]
        pv = pivot_row[c]
        for i in range(r + 1, m):
            row = rows[i]
            vi = row[c]
            if vi:
                for j in range(c, ncols):
                    row[j] = pv * row[j] - vi * pivot_row[j]
                _normalize_row(row, c)
        pivot_cols.append(c)
        r += 1
    return pivot_cols


def rank(matrix: Matrix) -> int:
    """Dimension of the column span."""
    rows = integer_row_copy(matrix)
    return len(_echelon(rows, matrix.ncols))


def kernel_basis(matrix: Matrix) -> Matrix:
    """Integer-scaled basis of the (right) kernel, one column per free
    variable of the echelon form.  The column count always equals
    ``ncols - rank(matrix)``."""
    n = matrix.ncols
    rows = integer_row_copy(matrix)
    pivot_cols = _echelon(rows, n)
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(n) if c not in pivot_set]
    columns = []
    for f in free_cols:
        x: list[Fraction | int] = [0] * n
        x[f] = 1
        for i in range(len(pivot_cols) - 1, -1, -1):
            c = pivot_cols[i]
            row = rows[i]
            s = sum(row[j] * x[j] for j in range(c + 1, n) if x[j])
            x[c] = Fraction(-s, row[c])
        mult = 1
        for v in x:
            if isinstance(v, Fraction) and v.denominator != 1:
                mult = lcm(mult, v.denominator)
        ints = [_as_int(v * mult) if mult != 1 else _as_int(v) for v in x]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        columns.append(ints)
    return Matrix.from_columns(columns, nrows=n)


def determinant(matrix: Matrix) -> Scalar:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if matrix.nrows != matrix.ncols:
        raise ValueError("determinant requires a square matrix")
    n = matrix.nrows
    if n == 0:
        return 1
    scale = 1
    rows = []
    for row in matrix.rows:
        mult = 1
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                mult = lcm(mult, x.denominator)
        scale *= mult
        rows.append([_as_int(x * mult) if mult != 1 else _as_int(x) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = None
        for i in range(k, n):
            if rows[i][k]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        pv = rows[k][k]
        for i in range(k + 1, n):
            vi = rows[i][k]
            for j in range(k + 1, n):
                rows[i][j] = (pv * rows[i][j] - vi * rows[k][j]) // prev
        prev = pv
    det = sign * rows[n - 1][n - 1]
    if scale == 1:
        return det
    result = Fraction(det, scale)
    return result.numerator if result.denominator == 1 else result


def smith_normal_form(matrix: Matrix) -> SmithForm:
    """Invariant factors d1 | d2 | ... | dk of an integer matrix.

    Only the factors are returned; callers needing the transforms should
    use ``integer_kernel_lattice`` for the kernel side.
    """
    a = [[_as_int(x) for x in row] for row in matrix.rows]
    m, n = len(a), matrix.ncols
    diag: list[int] = []
    t = 0
    while t < min(m, n):
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v and (best is None or abs(v) < best):
                    piv, best = (i, j), abs(v)
        if piv is None:
            break
        while True:
            i0, j0 = piv
            if i0 != t:
                a[t], a[i0] = a[i0], a[t]
            if j0 != t:
                for row in a:
                    row[t], row[j0] = row[j0], row[t]
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
            p = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        clean = False
            if clean:
                break
            piv = None
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    v = a[i][j]
                    if v and (best is None or abs(v) < best):
                        piv, best = (i, j), abs(v)
        diag.append(a[t][t])
        t += 1
    factors = [abs(d) for d in diag]
    changed = True
    while changed:
        changed = False
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                x, y = factors[i], factors[j]
                if y % x:
                    g = gcd(x, y)
                    factors[i], factors[j] = g, x * y // g
                    changed = True
    factors.sort()
    for x, y in zip(factors, factors[1:]):
        if y % x:
            raise AssertionError("divisibility chain failed")
    return SmithForm(tuple(factors))


def integer_kernel_lattice(matrix: Matrix) -> Matrix:
    """Basis of ``{x in Z^n : A x = 0}`` as a lattice, via unimodular
    column reduction of A stacked over an identity block."""
    a = [[_as_int(x) for x in row] for row in matrix.rows]
    m, n = len(a), matrix.ncols
    cols: list[list[int]] = []
    for j in range(n):
        col = [a[i][j] for i in range(m)] + [0] * n
        col[m + j] = 1
        cols.append(col)
    active = list(range(n))
    for i in range(m):
        while True:
            nz = [j for j in active if cols[j][i]]
            if len(nz) <= 1:
                break
            j0 = min(nz, key=lambda j: (abs(cols[j][i]), j))
            if cols[j0][i] < 0:
                cols[j0] = [-x for x in cols[j0]]
            v0 = cols[j0][i]
            for j in nz:
                if j == j0:
                    continue
                q = cols[j][i] // v0
                if q:
                    cols[j] = [x - q * y for x, y in zip(cols[j], cols[j0])]
        nz = [j for j in active if cols[j][i]]
        if nz:
            active.remove(nz[0])
    kernel_cols = [cols[j][m:] for j in active]
    return Matrix.from_columns(kernel_cols, nrows=n)


def solve_exact(basis: Matrix, targets: Matrix) -> Matrix:
    """Solve ``basis @ X = targets`` where the columns of ``basis`` are
    linearly independent; raises if any target is outside their span."""
    if basis.nrows != targets.nrows:
        raise ValueError("row count mismatch")
    k = basis.ncols
    aug = [list(brow) + list(trow) for brow, trow in zip(basis.rows, targets.rows)]
    rows = integer_row_copy(Matrix(aug, ncols=k + targets.ncols))
    pivot_cols = _echelon(rows, k + targets.ncols)
    lead = [c for c in pivot_cols if c < k]
    if len(lead) != k or len(pivot_cols) != k:
        raise ValueError("targets are not in the span of the basis columns")
    width = targets.ncols
    x_rows: list[list[Fraction | int]] = [[0] * width for _ in range(k)]
    for i in range(k - 1, -1, -1):
        c = pivot_cols[i]
        row = rows[i]
        for col in range(width):
            s = row[k + col]
            for j in range(i + 1, k):
                cj = pivot_cols[j]
                if row[cj]:
                    s -= row[cj] * x_rows[j][col]
            val = Fraction(s, row[c])
            x_rows[i][col] = val.numerator if val.denominator == 1 else val
    return Matrix(x_rows, ncols=width)
