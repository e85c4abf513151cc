"""Hot loops over GF(p^m) element codes.

Every kernel exists twice: a numba version written as plain loops and a
numpy version written with whole-array operations.  Both take the same
raw arguments (int64 code arrays plus the field's ``p``, ``m``, ``exp``
and ``log`` tables) so they can be swapped and cross-checked.  The
module-level names dispatch to whichever backend ``_backend`` selected.

Element codes are the integers ``sum(c_i * p**i)`` for coefficient
vectors ``(c_0, ..., c_{m-1})``.  ``exp`` has length ``2 * (order - 1)``
so that ``exp[log[a] + log[b]]`` needs no reduction; ``log[0]`` is an
unused sentinel equal to 0.
"""

from __future__ import annotations

import numpy as np

from ._backend import USE_NUMBA, njit

# ---------------------------------------------------------------------------
# numba kernels
# ---------------------------------------------------------------------------


@njit
def _add(a, b, p, m):
    if m == 1:
        return (a + b) % p
    res = 0
    place = 1
    for _ in range(m):
        res += ((a % p + b % p) % p) * place
        a //= p
        b //= p
        place *= p
    return res


@njit
def _neg(a, p, m):
    res = 0
    place = 1
    for _ in range(m):
        res += ((p - a % p) % p) * place
        a //= p
        place *= p
    return res


@njit
def _mul(a, b, exp, log):
    if a == 0 or b == 0:
        return 0
    return exp[log[a] + log[b]]


@njit
def echelon_numba(A, p, m, exp, log):
    R = A.copy()
    rows, cols = R.shape
    pivots = np.full(min(rows, cols), -1, dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if R[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = R[r, j]
                R[r, j] = R[piv, j]
                R[piv, j] = tmp
        pv = R[r, c]
        for i in range(r + 1, rows):
            f = R[i, c]
            if f == 0:
                continue
            # fraction-free: row_i <- pv * row_i - f * row_r
            for j in range(c, cols):
                x = _mul(pv, R[i, j], exp, log)
                y = _mul(f, R[r, j], exp, log)
                R[i, j] = _add(x, _neg(y, p, m), p, m)
        pivots[r] = c
        r += 1
    return R, pivots[:r]


@njit
def matmul_numba(A, B, p, m, exp, log):
    rows, inner = A.shape
    cols = B.shape[1]
    C = np.zeros((rows, cols), dtype=np.int64)
    for i in range(rows):
        for j in range(cols):
            acc = 0
            for t in range(inner):
                acc = _add(acc, _mul(A[i, t], B[t, j], exp, log), p, m)
            C[i, j] = acc
    return C


@njit
def power_sums_numba(a, w, exps, p, m, exp, log):
    N = exp.shape[0] // 2
    out = np.zeros(exps.shape[0], dtype=np.int64)
    for k in range(exps.shape[0]):
        e = exps[k]
        acc = 0
        for t in range(a.shape[0]):
            wt = w[t]
            if wt == 0:
                continue
            at = a[t]
            if at == 0:
                term = wt if e == 0 else 0
            else:
                term = exp[(log[at] * e) % N + log[wt]]
            acc = _add(acc, term, p, m)
        out[k] = acc
    return out


@njit
def min_weight_numba(G, order, p, m, exp, log):
    k, n = G.shape
    total = 1
    for _ in range(k):
        total *= order
    best = n + 1
    msg = np.zeros(k, dtype=np.int64)
    for code in range(1, total):
        x = code
        for r in range(k):
            msg[r] = x % order
            x //= order
        # one representative per projective point: leading nonzero is 1
        lead = 0
        for r in range(k - 1, -1, -1):
            if msg[r] != 0:
                lead = msg[r]
                break
        if lead != 1:
            continue
        weight = 0
        for i in range(n):
            acc = 0
            for r in range(k):
                acc = _add(acc, _mul(msg[r], G[r, i], exp, log), p, m)
            if acc != 0:
                weight += 1
                if weight >= best:
                    break
        best = min(best, weight)
    return best


@njit
def first_feasible_numba(cands, rows, p, m, exp, log):
    S = cands.shape[0]
    R, h = rows.shape
    idx = np.zeros(h, dtype=np.int64)
    total = 1
    for _ in range(h):
        total *= S
    for _ in range(total):
        ok = True
        for r in range(R):
            acc = 0
            for k in range(h):
                acc = _add(acc, _mul(rows[r, k], cands[idx[k]], exp, log), p, m)
            if acc == 0:
                ok = False
                break
        if ok:
            return idx.copy()
        # increment, last position fastest
        pos = h - 1
        while pos >= 0:
            idx[pos] += 1
            if idx[pos] < S:
                break
            idx[pos] = 0
            pos -= 1
    return np.full(h, -1, dtype=np.int64)


# ---------------------------------------------------------------------------
# numpy kernels
# ---------------------------------------------------------------------------


def np_add(a, b, p, m):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if m == 1:
        return (a + b) % p
    res = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    place = 1
    for _ in range(m):
        res += ((a % p + b % p) % p) * place
        a = a // p
        b = b // p
        place *= p
    return res


def np_neg(a, p, m):
    a = np.asarray(a, dtype=np.int64)
    res = np.zeros(a.shape, dtype=np.int64)
    place = 1
    for _ in range(m):
        res += ((p - a % p) % p) * place
        a = a // p
        place *= p
    return res


def np_mul(a, b, exp, log):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    out = exp[log[a] + log[b]]
    return np.where((a == 0) | (b == 0), 0, out)


def np_sum(x, axis, p, m):
    """Field sum of ``x`` along ``axis``."""
    x = np.asarray(x, dtype=np.int64)
    res = 0
    place = 1
    for _ in range(m):
        res = res + ((x // place) % p).sum(axis=axis) % p * place
        place *= p
    return np.asarray(res, dtype=np.int64)


def echelon_numpy(A, p, m, exp, log):
    R = np.array(A, dtype=np.int64, copy=True)
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        below = np.flatnonzero(R[r + 1 :, c]) + r + 1
        if below.size:
            f = R[below, c][:, None]
            x = np_mul(R[r, c], R[below, c:], exp, log)
            y = np_mul(f, R[r, c:][None, :], exp, log)
            R[below, c:] = np_add(x, np_neg(y, p, m), p, m)
        pivots.append(c)
        r += 1
    return R, np.array(pivots, dtype=np.int64)


def matmul_numpy(A, B, p, m, exp, log):
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    C = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for i in range(A.shape[0]):
        prod = np_mul(A[i][:, None], B, exp, log)
        C[i] = np_sum(prod, 0, p, m)
    return C


def power_sums_numpy(a, w, exps, p, m, exp, log, chunk=256):
    a = np.asarray(a, dtype=np.int64)
    w = np.asarray(w, dtype=np.int64)
    exps = np.asarray(exps, dtype=np.int64)
    N = exp.shape[0] // 2
    out = np.zeros(exps.shape[0], dtype=np.int64)
    la = log[a]
    lw = log[w]
    for lo in range(0, exps.shape[0], chunk):
        e = exps[lo : lo + chunk][:, None]
        terms = exp[(la[None, :] * e) % N + lw[None, :]]
        at_zero = (a == 0)[None, :]
        terms = np.where(at_zero, np.where(e == 0, w[None, :], 0), terms)
        terms = np.where((w == 0)[None, :], 0, terms)
        out[lo : lo + chunk] = np_sum(terms, 1, p, m)
    return out


def min_weight_numpy(G, order, p, m, exp, log, chunk=4096):
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    total = order**k
    best = n + 1
    places = order ** np.arange(k, dtype=np.int64)
    for lo in range(1, total, chunk):
        codes = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        msg = (codes[:, None] // places[None, :]) % order
        nz = msg != 0
        last = k - 1 - np.argmax(nz[:, ::-1], axis=1)
        msg = msg[msg[np.arange(msg.shape[0]), last] == 1]
        if msg.shape[0] == 0:
            continue
        prod = np_mul(msg[:, :, None], G[None, :, :], exp, log)
        cw = np_sum(prod, 1, p, m)
        best = min(best, int((cw != 0).sum(axis=1).min()))
    return best


def first_feasible_numpy(cands, rows, p, m, exp, log, chunk=8192):
    cands = np.asarray(cands, dtype=np.int64)
    rows = np.asarray(rows, dtype=np.int64)
    S = cands.shape[0]
    h = rows.shape[1]
    total = S**h
    places = S ** np.arange(h - 1, -1, -1, dtype=np.int64)
    for lo in range(0, total, chunk):
        codes = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        idx = (codes[:, None] // places[None, :]) % S
        u = cands[idx]
        sums = np_sum(np_mul(rows[None, :, :], u[:, None, :], exp, log), 2, p, m)
        good = np.flatnonzero((sums != 0).all(axis=1))
        if good.size:
            return idx[good[0]]
    return np.full(h, -1, dtype=np.int64)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

IMPLEMENTATIONS = {
    "numba": {
        "echelon": echelon_numba,
        "matmul": matmul_numba,
        "power_sums": power_sums_numba,
        "min_weight": min_weight_numba,
        "first_feasible": first_feasible_numba,
    },
    "numpy": {
        "echelon": echelon_numpy,
        "matmul": matmul_numpy,
        "power_sums": power_sums_numpy,
        "min_weight": min_weight_numpy,
        "first_feasible": first_feasible_numpy,
    },
}

_ACTIVE = IMPLEMENTATIONS["numba" if USE_NUMBA else "numpy"]


def _i64(x):
    return np.ascontiguousarray(x, dtype=np.int64)


def echelon(A, p, m, exp, log):
    return _ACTIVE["echelon"](_i64(A), p, m, exp, log)


def matmul(A, B, p, m, exp, log):
    return _ACTIVE["matmul"](_i64(A), _i64(B), p, m, exp, log)


def power_sums(a, w, exps, p, m, exp, log):
    return _ACTIVE["power_sums"](_i64(a), _i64(w), _i64(exps), p, m, exp, log)


def min_weight(G, order, p, m, exp, log):
    return int(_ACTIVE["min_weight"](_i64(G), order, p, m, exp, log))


def first_feasible(cands, rows, p, m, exp, log):
    return _ACTIVE["first_feasible"](_i64(cands), _i64(rows), p, m, exp, log)
