"""Time the numba kernels against their numpy twins on realistic inputs.

    python benchmarks/bench_kernels.py [--repeat 5] [--json]

Each case checks that both backends return identical arrays before it
is timed; the first numba call (compilation or cache load) is excluded.
"""

import argparse
import json
import time

import numpy as np

from eaqmds import kernels
from eaqmds.construction_a import ParamsA, assemble_code_a, condition_rows_a, solve_multipliers_a
from eaqmds.field import field_for_q
from eaqmds.grs import generator_matrix

NB = kernels.IMPLEMENTATIONS["numba"]
NP = kernels.IMPLEMENTATIONS["numpy"]


def cases():
    F19 = field_for_q(19)
    p = ParamsA(19, 4, 6, 2, 2)
    code = assemble_code_a(p, solve_multipliers_a(p, field=F19), 12, F19)
    G = generator_matrix(code).data
    d = 12
    r, c = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
    exps = (19 * c + r).ravel().astype(np.int64)
    w = F19.vnorm(code.v)

    F5 = field_for_q(5)
    rng = np.random.default_rng(0)
    small = rng.integers(0, F5.order, size=(3, 10)).astype(np.int64)
    mid = rng.integers(0, F5.order, size=(4, 12)).astype(np.int64)

    F13 = field_for_q(13)
    rows = condition_rows_a(F13, ParamsA(13, 14, 4, 6, 2))
    cands = F13.subfield_codes()[1:]

    return {
        "echelon 12x300 GF(361)": ("echelon", (G, *F19.tables)),
        "matmul G G^T 12x300": ("matmul", (G, np.ascontiguousarray(F19.vfrob(G).T), *F19.tables)),
        "power_sums n=300 144 exps": ("power_sums", (code.a, w, exps, *F19.tables)),
        "min_weight 3x10 GF(25)": ("min_weight", (small, F5.order, *F5.tables)),
        "min_weight 4x12 GF(25)": ("min_weight", (mid, F5.order, *F5.tables)),
        "first_feasible 12^6 GF(169)": ("first_feasible", (cands, rows, *F13.tables)),
    }


def _same(x, y):
    if isinstance(x, tuple):
        return all(_same(a, b) for a, b in zip(x, y))
    return np.array_equal(np.asarray(x), np.asarray(y))


def bench(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    ns = ap.parse_args()

    results = []
    for label, (name, args) in cases().items():
        nb_out = NB[name](*args)  # warm-up
        np_out = NP[name](*args)
        if not _same(nb_out, np_out):
            raise SystemExit(f"{label}: backends disagree")
        t_nb = bench(NB[name], args, ns.repeat)
        t_np = bench(NP[name], args, ns.repeat)
        results.append({"case": label, "numba_s": t_nb, "numpy_s": t_np, "speedup": t_np / t_nb})

    if ns.json:
        print(json.dumps(results, indent=2))
        return
    print(f"{'case':32s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}")
    for r in results:
        print(f"{r['case']:32s} {r['numba_s'] * 1e3:9.2f}ms {r['numpy_s'] * 1e3:9.2f}ms {r['speedup']:7.1f}x")


if __name__ == "__main__":
    main()
