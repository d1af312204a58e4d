"""Dense exact linear algebra over a finite field.

Matrices are immutable: entries live in a tuple of row tuples and every
operation returns a fresh Matrix.  All arithmetic goes through the
field's methods, so an instrumented field sees every operation.
"""

from __future__ import annotations

from itertools import combinations

from .gf import Field


class Matrix:
    """A rows × cols matrix of field-element encodings."""

    __slots__ = ("field", "data", "cols")

    def __init__(self, field: Field, rows, cols: int | None = None, check: bool = True):
        data = tuple(tuple(r) for r in rows)
        if data:
            cols = len(data[0])
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        self.field = field
        self.data = data
        self.cols = cols
        if check:
            for r in data:
                if len(r) != cols:
                    raise ValueError("ragged rows")
                for e in r:
                    field.check(e)

    @property
    def rows(self) -> int:
        return len(self.data)

    def row(self, i):
        return self.data[i]

    def column(self, j):
        return tuple(r[j] for r in self.data)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.data)), cols=self.rows, check=False)

    def to_lists(self):
        return [list(r) for r in self.data]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.field, self.data, self.cols))

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.rows}x{self.cols})"


def identity(field: Field, n: int) -> Matrix:
    return Matrix(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)],
                  check=False)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.field != b.field:
        raise ValueError("field mismatch")
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch: {a.rows}x{a.cols} @ {b.rows}x{b.cols}")
    F = a.field
    bt = list(zip(*b.data))
    out = []
    for ar in a.data:
        row = []
        for bc in bt:
            acc = 0
            for x, y in zip(ar, bc):
                if x and y:
                    acc = F.add(acc, F.mul(x, y))
            row.append(acc)
        out.append(row)
    return Matrix(F, out, cols=b.cols, check=False)


def vstack(a: Matrix, b: Matrix) -> Matrix:
    if a.field != b.field or a.cols != b.cols:
        raise ValueError("incompatible stack")
    return Matrix(a.field, list(a.data) + list(b.data), cols=a.cols, check=False)


def submatrix(m: Matrix, row_idx, col_idx) -> Matrix:
    rows = [[m.data[i][j] for j in col_idx] for i in row_idx]
    return Matrix(m.field, rows, cols=len(tuple(col_idx)), check=False)


def is_zero(m: Matrix) -> bool:
    return all(e == 0 for r in m.data for e in r)


def echelonize(m: Matrix):
    """Reduced row echelon form with pivots forced into columns 0..rows-1.

    Returns (M, ok).  ok is True iff the leading rows × rows block is
    invertible; then M = [I | B].  No column permutation is ever applied,
    so a failure is itself a verdict about the leading block.  On failure
    the returned matrix is the unmodified input.
    """
    k, n = m.rows, m.cols
    if k > n:
        raise ValueError("more rows than columns")
    F = m.field
    a = [list(r) for r in m.data]
    for c in range(k):
        piv = None
        for r in range(c, k):
            if a[r][c] != 0:
                piv = r
                break
        if piv is None:
            return m, False
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
        inv = F.inv(a[c][c])
        if inv != 1:
            a[c] = [F.mul(inv, x) for x in a[c]]
        row_c = a[c]
        for r in range(k):
            f = a[r][c]
            if r != c and f != 0:
                a[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[r], row_c)]
    return Matrix(F, a, cols=n, check=False), True


def rref(m: Matrix):
    """General reduced row echelon form.  Returns (M, pivot_columns)."""
    F = m.field
    k, n = m.rows, m.cols
    a = [list(r) for r in m.data]
    pivots = []
    r = 0
    for c in range(n):
        if r == k:
            break
        piv = None
        for i in range(r, k):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        inv = F.inv(a[r][c])
        if inv != 1:
            a[r] = [F.mul(inv, x) for x in a[r]]
        row_r = a[r]
        for i in range(k):
            f = a[i][c]
            if i != r and f != 0:
                a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], row_r)]
        pivots.append(c)
        r += 1
    return Matrix(F, a, cols=n, check=False), tuple(pivots)


def rank(m: Matrix) -> int:
    if m.rows == 0:
        return 0
    return len(rref(m)[1])


def det(m: Matrix):
    """Determinant by Gaussian elimination; exact over the field."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    F = m.field
    n = m.rows
    a = [list(r) for r in m.data]
    d = 1
    for c in range(n):
        piv = None
        for r in range(c, n):
            if a[r][c] != 0:
                piv = r
                break
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = F.neg(d)
        d = F.mul(d, a[c][c])
        inv = F.inv(a[c][c])
        row_c = a[c]
        for r in range(c + 1, n):
            f = a[r][c]
            if f != 0:
                f = F.mul(f, inv)
                a[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[r], row_c)]
    return d


def minor(m: Matrix, row_idx, col_idx):
    row_idx = tuple(row_idx)
    col_idx = tuple(col_idx)
    if len(row_idx) != len(col_idx):
        raise ValueError("minor needs equal-size index sets")
    return det(submatrix(m, row_idx, col_idx))


def right_kernel(m: Matrix) -> Matrix:
    """Basis matrix K with m @ K^T = 0 and rank(K) = cols - rank(m)."""
    F = m.field
    n = m.cols
    red, pivots = rref(m)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        vec = [0] * n
        vec[f] = 1
        for i, pc in enumerate(pivots):
            e = red.data[i][f]
            if e != 0:
                vec[pc] = F.neg(e)
        basis.append(vec)
    return Matrix(F, basis, cols=n, check=False)


def all_minors_nonzero(m: Matrix, size: int) -> bool:
    """True iff every size × size minor of m is nonzero (early exit)."""
    if m.rows < size or m.cols < size:
        return True
    for ri in combinations(range(m.rows), size):
        for ci in combinations(range(m.cols), size):
            if det(submatrix(m, ri, ci)) == 0:
                return False
    return True
