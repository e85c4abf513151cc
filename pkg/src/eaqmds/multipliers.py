"""Search for block multipliers ``u`` in GF(q)* with prescribed nonzero sums.

Both constructions need a vector ``u`` over the subfield GF(q)* such that
every row of a small coefficient matrix (entries in GF(q^2)) has a nonzero
product with ``u``.  The rows come in conjugate pairs, so for a square
system a right-hand side with matching conjugate symmetry forces the
unique solution into GF(q); that is the fast path.  Otherwise the space
(GF(q)*)^h is enumerated when small, or sampled with a seeded generator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import NoSolution, SearchExhausted
from .field import FieldSpec
from .matrix import Matrix, rank, solve_linear

EXHAUSTIVE_LIMIT = 10**6
FAST_TRIES = 64
RANDOM_TRIES = 200_000


@dataclass(frozen=True)
class MultiplierSearch:
    u: np.ndarray
    xi: np.ndarray
    method: str  # "trivial" | "vandermonde" | "exhaustive" | "random"


def row_products(field: FieldSpec, rows: np.ndarray, u: np.ndarray) -> np.ndarray:
    return field.vsum(field.vmul(rows, np.asarray(u)[None, :]), axis=1)


def satisfies(field: FieldSpec, rows: np.ndarray, u: np.ndarray) -> bool:
    u = np.asarray(u, dtype=np.int64)
    if np.any(u == 0) or not all(field.in_subfield(int(x)) for x in u):
        return False
    return bool(np.all(row_products(field, rows, u) != 0))


def conjugate_pairing(field: FieldSpec, rows: np.ndarray) -> list[int] | None:
    """``pair[i] = j`` when row i raised to the q-th power equals row j."""
    conj = field.vfrob(rows)
    pair = []
    for i in range(rows.shape[0]):
        hits = np.flatnonzero((rows == conj[i][None, :]).all(axis=1))
        if hits.size == 0:
            return None
        pair.append(int(hits[0]))
    return pair


def _symmetric_rhs(field: FieldSpec, pair: list[int], rng: np.random.Generator) -> np.ndarray:
    sub = field.subfield_codes()[1:]
    xi = np.zeros(len(pair), dtype=np.int64)
    for i, j in enumerate(pair):
        if j == i:
            xi[i] = rng.choice(sub)
        elif i < j:
            xi[i] = rng.integers(1, field.order)
            xi[j] = field.frob(int(xi[i]))
    return xi


def _fast_path(field, rows, rng, tries):
    R, h = rows.shape
    if R != h:
        return None
    pair = conjugate_pairing(field, rows)
    if pair is None:
        return None
    A = Matrix(field, rows)
    if rank(A) < h:
        return None
    for _ in range(tries):
        xi = _symmetric_rhs(field, pair, rng)
        try:
            u = solve_linear(A, xi)
        except NoSolution:  # pragma: no cover - A is invertible here
            return None
        if satisfies(field, rows, u):
            return u, xi
    return None


def find_multipliers(
    field: FieldSpec,
    rows: np.ndarray,
    seed: int = 0,
    *,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
    fast_tries: int = FAST_TRIES,
    random_tries: int = RANDOM_TRIES,
) -> MultiplierSearch:
    rows = np.asarray(rows, dtype=np.int64)
    h = rows.shape[1]
    rng = np.random.default_rng(seed)
    if h == 1:
        # any nonzero scalar works as well as any other, so take 1
        one = np.ones(1, dtype=np.int64)
        if satisfies(field, rows, one):
            return MultiplierSearch(one, row_products(field, rows, one), "trivial")
    fast = _fast_path(field, rows, rng, fast_tries)
    if fast is not None:
        u, xi = fast
        return MultiplierSearch(u, xi, "vandermonde")

    q = field.q
    cands = field.subfield_codes()[1:]
    if (q - 1) ** h <= exhaustive_limit:
        idx = kernels.first_feasible(cands, rows, *field.tables)
        if idx[0] < 0:
            raise SearchExhausted("no u in (GF(q)*)^h makes every row sum nonzero")
        u = cands[idx]
        method = "exhaustive"
    else:
        u = None
        batch = 4096
        for _ in range(0, random_tries, batch):
            trial = rng.choice(cands, size=(batch, h))
            sums = field.vsum(field.vmul(rows[None, :, :], trial[:, None, :]), axis=2)
            good = np.flatnonzero((sums != 0).all(axis=1))
            if good.size:
                u = trial[good[0]]
                break
        if u is None:
            raise SearchExhausted(f"random search over (GF({q})*)^{h} found nothing")
        method = "random"
    if not satisfies(field, rows, u):  # pragma: no cover - defensive
        raise RuntimeError("search returned an infeasible vector")
    return MultiplierSearch(np.asarray(u, dtype=np.int64), row_products(field, rows, u), method)
