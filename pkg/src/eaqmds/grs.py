"""Generalized Reed-Solomon codes over GF(q^2) and small-scale oracles."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from dataclasses import field as dc_field

import numpy as np

from . import kernels
from .errors import CapExceeded, DimensionMismatch, DuplicateEvaluationPoint, InvalidCode
from .field import FieldSpec
from .matrix import Matrix, gram, nullspace, rank, row_space_intersection_dim

DEFAULT_ENUM_CAP = 2**20
DEFAULT_MINOR_CAP = 20_000


@dataclass(eq=False)
class GrsCode:
    """``GRS_k(a, v)``: evaluations of polynomials of degree < k at ``a``, scaled by ``v``.

    ``a`` and ``v`` hold element codes.  Duplicate evaluation points are
    rejected unless ``allow_duplicates`` is set; relaxed objects still
    support generator and Gram computations but are not GRS codes (and
    not MDS), which ``points_distinct`` reports.
    """

    field: FieldSpec
    a: np.ndarray
    v: np.ndarray
    k: int
    allow_duplicates: bool = False
    points_distinct: bool = dc_field(init=False)

    def __post_init__(self):
        self.a = np.asarray(self.a, dtype=np.int64).ravel()
        self.v = np.asarray(self.v, dtype=np.int64).ravel()
        if self.a.shape != self.v.shape:
            raise DimensionMismatch("a and v must have equal length")
        if not 1 <= self.k <= self.n:
            raise InvalidCode(f"dimension k = {self.k} outside 1..{self.n}")
        if np.any(self.v == 0):
            raise InvalidCode("column multipliers must be nonzero")
        self.points_distinct = np.unique(self.a).size == self.n
        if not self.points_distinct and not self.allow_duplicates:
            raise DuplicateEvaluationPoint(f"{self.n - np.unique(self.a).size} repeated evaluation points")

    @property
    def n(self) -> int:
        return int(self.a.shape[0])

    def with_dimension(self, k: int) -> GrsCode:
        return GrsCode(self.field, self.a, self.v, k, allow_duplicates=self.allow_duplicates)


def generator_matrix(code: GrsCode) -> Matrix:
    """k x n matrix with entry (r, i) = v_i * a_i^r; row 0 is ``v`` itself."""
    F = code.field
    rows = np.empty((code.k, code.n), dtype=np.int64)
    rows[0] = code.v
    for r in range(1, code.k):
        rows[r] = F.vmul(rows[r - 1], code.a)
    return Matrix(F, rows)


def hermitian_inner(field: FieldSpec, x, y) -> int:
    """``sum_i x_i y_i^q`` as an element code."""
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    if x.shape != y.shape:
        raise DimensionMismatch("vectors of different length")
    return int(field.vsum(field.vmul(x, field.vfrob(y))))


def power_inner(field: FieldSpec, a, v, i: int, j: int) -> int:
    """``<a^(qi+j), v^(q+1)>`` computed coordinate by coordinate, with 0^0 = 1."""
    a = np.asarray(a, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if a.shape != v.shape:
        raise DimensionMismatch("vectors of different length")
    q = field._need_q()
    w = field.vnorm(v)
    return int(kernels.power_sums(a, w, np.array([q * i + j]), *field.tables)[0])


def min_distance_bruteforce(code: GrsCode | Matrix, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Exact minimum weight over all nonzero codewords of the row space.

    Enumerates one message per projective point; the cap applies to the
    full message space ``order^k``.
    """
    G = generator_matrix(code) if isinstance(code, GrsCode) else code
    F = G.field
    if F.order**G.rows > cap:
        raise CapExceeded(f"{F.order}^{G.rows} messages exceed the cap {cap}")
    if rank(G) < G.rows:
        return 0
    return kernels.min_weight(G.data, F.order, *F.tables)


def mds_minor_check(
    code: GrsCode,
    mode: str = "exhaustive",
    count: int = 100,
    seed: int = 0,
    cap: int = DEFAULT_MINOR_CAP,
) -> bool:
    """True iff every tested k x k minor of the generator is nonzero.

    ``mode="sample"`` tests ``count`` seeded random column subsets; a count
    of 0 is vacuously true.
    """
    G = generator_matrix(code)
    n, k = code.n, code.k
    if mode == "exhaustive":
        if math.comb(n, k) > cap:
            raise CapExceeded(f"C({n},{k}) minors exceed the cap {cap}")
        subsets = itertools.combinations(range(n), k)
    elif mode == "sample":
        rng = np.random.default_rng(seed)
        subsets = (np.sort(rng.choice(n, size=k, replace=False)) for _ in range(count))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    for cols in subsets:
        if rank(Matrix(G.field, G.data[:, list(cols)])) < k:
            return False
    return True


def hermitian_dual_generator(G: Matrix) -> Matrix:
    """Generator of the Hermitian dual: the right nullspace of ``G^(q)``."""
    return nullspace(Matrix(G.field, G.field.vfrob(G.data)))


def hull_dim(code: GrsCode | Matrix) -> int:
    """``dim(C ∩ C^{⊥H})`` from a row-space intersection."""
    G = generator_matrix(code) if isinstance(code, GrsCode) else code
    D = hermitian_dual_generator(G)
    if D.rows == 0:
        return 0
    return row_space_intersection_dim(G, D)


def gram_rank(code: GrsCode) -> int:
    return rank(gram(generator_matrix(code)))


def random_grs(field: FieldSpec, n: int, k: int, rng: np.random.Generator) -> GrsCode:
    """A GRS code with distinct random points and random nonzero multipliers."""
    a = rng.choice(field.order, size=n, replace=False)
    v = rng.integers(1, field.order, size=n)
    return GrsCode(field, a, v, k)
