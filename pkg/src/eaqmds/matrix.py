"""Dense exact linear algebra over a FieldSpec."""

from __future__ import annotations

import numpy as np

from . import kernels
from .errors import DimensionMismatch, FieldMismatch, NoSolution
from .field import FieldElem, FieldSpec


class Matrix:
    """A rows x cols grid of element codes over ``field``."""

    __slots__ = ("data", "field")

    def __init__(self, field: FieldSpec, data):
        data = np.array(data, dtype=np.int64, copy=True)
        if data.ndim == 1:
            data = data[None, :]
        if data.ndim != 2:
            raise DimensionMismatch("matrix data must be two-dimensional")
        if data.size and (data.min() < 0 or data.max() >= field.order):
            raise ValueError("entry codes out of range for the field")
        self.field = field
        self.data = data

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> Matrix:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> Matrix:
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def random(cls, field: FieldSpec, rows: int, cols: int, rng: np.random.Generator) -> Matrix:
        return cls(field, rng.integers(0, field.order, size=(rows, cols)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def __getitem__(self, idx) -> FieldElem:
        return FieldElem(self.field, int(self.data[idx]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.data, other.data)

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols} over GF({self.field.order}))"

    def __matmul__(self, other: Matrix) -> Matrix:
        return matmul(self, other)

    @property
    def T(self) -> Matrix:
        return Matrix(self.field, self.data.T)

    def is_zero(self) -> bool:
        return not self.data.any()

    def nonzero_positions(self) -> set[tuple[int, int]]:
        return {(int(r), int(c)) for r, c in zip(*np.nonzero(self.data))}


def _same_field(*ms: Matrix) -> FieldSpec:
    F = ms[0].field
    for M in ms[1:]:
        if M.field != F:
            raise FieldMismatch("matrices over different fields")
    return F


def matmul(A: Matrix, B: Matrix) -> Matrix:
    F = _same_field(A, B)
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    return Matrix(F, kernels.matmul(A.data, B.data, *F.tables))


def echelon(M: Matrix) -> tuple[Matrix, list[int]]:
    """Row-echelon form by fraction-free elimination, first-nonzero pivoting."""
    R, piv = kernels.echelon(M.data, *M.field.tables)
    return Matrix(M.field, R), [int(c) for c in piv]


def rank(M: Matrix) -> int:
    if M.data.size == 0:
        return 0
    return len(echelon(M)[1])


def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form with unit pivots."""
    F = M.field
    E, piv = echelon(M)
    R = E.data
    for r, c in enumerate(piv):
        R[r] = F.vmul(R[r], F.inv(int(R[r, c])))
    for r in range(len(piv) - 1, -1, -1):
        c = piv[r]
        above = np.flatnonzero(R[:r, c])
        if above.size:
            f = R[above, c][:, None]
            R[above] = F.vsub(R[above], F.vmul(f, R[r][None, :]))
    return Matrix(F, R), piv


def solve_linear(A: Matrix, b) -> np.ndarray:
    """One solution of ``A x = b`` (free variables set to zero).

    ``b`` is a sequence of codes of length ``A.rows``.  The returned
    solution is checked by substitution before it is handed back.
    """
    F = A.field
    b = np.asarray(b, dtype=np.int64).ravel()
    if b.shape[0] != A.rows:
        raise DimensionMismatch(f"right side has length {b.shape[0]}, expected {A.rows}")
    aug = Matrix(F, np.hstack([A.data, b[:, None]]))
    R, piv = rref(aug)
    if A.cols in piv:
        raise NoSolution("inconsistent system")
    x = np.zeros(A.cols, dtype=np.int64)
    for r, c in enumerate(piv):
        x[c] = R.data[r, -1]
    check = kernels.matmul(A.data, x[:, None], *F.tables)[:, 0]
    if not np.array_equal(check, b):  # pragma: no cover - would be an elimination bug
        raise RuntimeError("substitution check failed")
    return x


def nullspace(M: Matrix) -> Matrix:
    """Basis of the right nullspace ``{x : M x = 0}``, one vector per row."""
    F = M.field
    R, piv = rref(M)
    free = [c for c in range(M.cols) if c not in set(piv)]
    basis = np.zeros((len(free), M.cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, c in enumerate(piv):
            basis[i, c] = F.neg(int(R.data[r, f]))
    return Matrix(F, basis.reshape(len(free), M.cols))


def conj_transpose(M: Matrix) -> Matrix:
    """``(M^dagger)_{ij} = (M_{ji})^q``."""
    return Matrix(M.field, M.field.vfrob(M.data).T)


def gram(G: Matrix) -> Matrix:
    """``G G^dagger``; entry (r, c) is the Hermitian product of rows r and c."""
    return matmul(G, conj_transpose(G))


def vstack(*ms: Matrix) -> Matrix:
    F = _same_field(*ms)
    return Matrix(F, np.vstack([M.data for M in ms]))


def row_space_intersection_dim(M1: Matrix, M2: Matrix) -> int:
    _same_field(M1, M2)
    if M1.cols != M2.cols:
        raise DimensionMismatch("row spaces live in different ambient dimensions")
    return rank(M1) + rank(M2) - rank(vstack(M1, M2))


def is_hermitian(M: Matrix) -> bool:
    """True iff ``M^dagger == M``."""
    return M.rows == M.cols and np.array_equal(conj_transpose(M).data, M.data)
