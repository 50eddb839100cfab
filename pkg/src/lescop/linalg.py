"""Exact symmetric rational matrices: determinant, inertia, bordered minors."""
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, NamedTuple, Sequence

from .arith import as_fraction

__all__ = [
    "Inertia",
    "SymRatMatrix",
    "bareiss_det",
    "bordered_diag_matrix",
    "bordered_submatrix",
    "det",
    "inertia",
]


class Inertia(NamedTuple):
    n_pos: int
    n_neg: int
    n_zero: int

    @property
    def signature(self) -> int:
        return self.n_pos - self.n_neg

    @property
    def b_minus(self) -> int:
        return self.n_neg

    @property
    def dim(self) -> int:
        return self.n_pos + self.n_neg + self.n_zero


class SymRatMatrix:
    """Immutable symmetric matrix of exact rationals.

    ``SymRatMatrix([])`` is the empty matrix, whose determinant is 1.
    """

    __slots__ = ("_rows", "_det", "_inertia")

    def __init__(self, rows: Iterable[Iterable] = ()):
        rows = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")
        self._rows = rows
        self._det = None
        self._inertia = None

    @classmethod
    def diagonal(cls, entries: Sequence) -> "SymRatMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __len__(self) -> int:
        return len(self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymRatMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._rows)
        return f"SymRatMatrix([{body}])"

    def trace(self) -> Fraction:
        return sum((self._rows[i][i] for i in range(self.n)), Fraction(0))

    def principal(self, indices: Sequence[int]) -> "SymRatMatrix":
        """Principal submatrix on ``indices`` (kept in the given order)."""
        return SymRatMatrix([[self._rows[i][j] for j in indices] for i in indices])

    def det(self) -> Fraction:
        if self._det is None:
            self._det = _rational_det(self._rows)
        return self._det

    def inertia(self) -> Inertia:
        if self._inertia is None:
            self._inertia = _congruence_inertia(self._rows)
        return self._inertia

    @property
    def signature(self) -> int:
        return self.inertia().signature

    @property
    def b_minus(self) -> int:
        return self.inertia().n_neg


def bareiss_det(m: Sequence[Sequence[int]]) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _rational_det(rows) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    # scale each row to integers; det picks up the product of row scales
    scales = [reduce(lcm, (x.denominator for x in row), 1) for row in rows]
    ints = [[int(x * s) for x in row] for row, s in zip(rows, scales)]
    denom = 1
    for s in scales:
        denom *= s
    return Fraction(bareiss_det(ints), denom)


def _congruence_inertia(rows) -> Inertia:
    """Sign counts of a symmetric matrix by symmetric Gaussian elimination.

    Row and column operations are applied in pairs (``M -> P M P^T``), so by
    Sylvester's law of inertia the signs of the final diagonal are the
    eigenvalue signs.
    """
    a = [list(row) for row in rows]
    n = len(a)
    pos = neg = zero = 0
    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                a[k], a[j] = a[j], a[k]
                for row in a:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    zero += 1
                    continue
                # row_k += row_j, col_k += col_j: new pivot is 2 a[k][j] != 0
                for c in range(n):
                    a[k][c] += a[j][c]
                for r in range(n):
                    a[r][k] += a[r][j]
        piv = a[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = a[i][k] / piv
            if f == 0:
                continue
            for c in range(k, n):
                a[i][c] -= f * a[k][c]
            for r in range(k, n):
                a[r][i] -= f * a[r][k]
    return Inertia(pos, neg, zero)


def det(m: SymRatMatrix) -> Fraction:
    return m.det()


def inertia(m: SymRatMatrix) -> Inertia:
    return m.inertia()


def bordered_submatrix(e: SymRatMatrix, subset: Iterable[int]) -> SymRatMatrix:
    """Principal submatrix on the complement of ``subset`` with bordered diagonal.

    Entry ``(i, i)`` becomes ``e[i, i] + sum_{k in subset} e[k, i]``;
    off-diagonal entries are copied.  With ``subset`` the full index set
    the result is the empty matrix.
    """
    subset = set(subset)
    rest = [i for i in range(e.n) if i not in subset]
    rows = []
    for i in rest:
        row = []
        for j in rest:
            if i == j:
                row.append(e[i, i] + sum((e[k, i] for k in subset), Fraction(0)))
            else:
                row.append(e[i, j])
        rows.append(row)
    return SymRatMatrix(rows)


def bordered_diag_matrix(pres, subset: Iterable[int]) -> SymRatMatrix:
    """``E(L_{N-J}; J)`` for a surgery presentation (anything with ``linking_matrix()``)."""
    return bordered_submatrix(pres.linking_matrix(), subset)
