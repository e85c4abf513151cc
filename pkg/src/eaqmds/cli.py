"""Command-line front end.

Exit codes: 0 when a certificate passes, 2 when a code was built but its
certificate is partial or failed, 1 on a hard parameter violation or a
usage error.  ``audit`` always exits 0 unless the table or row does not
exist.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from typing import Any

from .certify import Certificate, verify_small_scale
from .construction_a import ParamsA, assemble_code_a, emit_params_a, solve_multipliers_a
from .construction_b import B0_MODES, CASES, ParamsB, assemble_code_b, emit_params_b, solve_multipliers_b
from .eaqec import EaqecParams
from .errors import EaqmdsError, HardConstraintViolation, RangeViolation, UnknownRow, UnknownTable
from .field import factorize, field_for_q, format_poly, prime_power
from .grs import DEFAULT_ENUM_CAP, DEFAULT_MINOR_CAP
from .sweep import sweep
from .tables import audit_summary, audit_table, audit_table_row

log = logging.getLogger("eaqmds")

CSV_COLUMNS = ["q", "n", "kappa", "d", "c_computed", "c_claimed", "construction", "verdict"]

EXIT_OK, EXIT_HARD, EXIT_PARTIAL = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    fmt: str = "json"
    b0_mode: str = "zero"
    cap_enum: int = DEFAULT_ENUM_CAP
    cap_minors: int = DEFAULT_MINOR_CAP
    battery: bool = False
    verbosity: int = 0

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> RunConfig:
        return cls(ns.seed, ns.format, ns.b0_mode, ns.cap_enum, ns.cap_minors, ns.battery, ns.verbose)


def record(params: EaqecParams, cert: Certificate) -> dict[str, Any]:
    prov = params.provenance
    return {
        "q": params.q,
        "n": params.n,
        "kappa": params.kappa,
        "d": params.d,
        "c_computed": params.c,
        "c_claimed": cert.c_claimed,
        "construction": cert.construction,
        "inputs": prov.get("inputs", cert.inputs),
        "certificate": {**cert.to_dict(), "verdict": cert.verdict},
        "primitive_element": prov.get("primitive_element", ""),
        "seed": prov.get("seed", 0),
    }


def _dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True)


def _csv_lines(records: list[dict[str, Any]], header: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow([r["certificate"]["verdict"] if c == "verdict" else r[c] for c in CSV_COLUMNS])
    return buf.getvalue()


def _text(r: dict[str, Any]) -> str:
    cert = r["certificate"]
    lines = [
        f"[[{r['n']}, {r['kappa']}, {r['d']}; {r['c_computed']}]]_{r['q']}  construction {r['construction']}  {r['inputs']}",
        (
            f"  verdict {cert['verdict']}: rank {cert['rank']} (claimed {r['c_claimed']}), "
            f"pattern match {cert['pattern_match']}, largest verified {cert['largest_verified']}"
        ),
        f"  found {cert['pattern_found']}",
    ]
    lines += [f"  warning: {w}" for w in cert["warnings"]]
    if "battery" in r:
        lines.append(f"  battery: {r['battery']}")
    return "\n".join(lines)


def _emit(records: list[dict[str, Any]], cfg: RunConfig, out) -> None:
    if cfg.fmt == "csv":
        out.write(_csv_lines(records))
    elif cfg.fmt == "text":
        for r in records:
            out.write(_text(r) + "\n")
    else:
        for r in records:
            out.write(_dumps(r) + "\n")


def _exit_for(cert: Certificate) -> int:
    return EXIT_OK if cert.verdict == "pass" else EXIT_PARTIAL


def cmd_field(ns, cfg: RunConfig, out) -> int:
    p, _ = prime_power(ns.q)
    F = field_for_q(ns.q)
    fac = factorize(ns.q**2 - 1)
    report = {
        "q": ns.q,
        "p": p,
        "m": F.m,
        "order": F.order,
        "modulus": format_poly(F.modulus),
        "primitive_element": F.format(F.g),
        "q2_minus_1": ns.q**2 - 1,
        "factorization": {str(k): v for k, v in sorted(fac.items())},
        "factorization_str": " * ".join(f"{k}^{v}" if v > 1 else str(k) for k, v in sorted(fac.items())),
    }
    if cfg.fmt == "text":
        out.write(
            f"GF({ns.q}^2): p = {p}, m = {F.m}, modulus {report['modulus']}, primitive element {report['primitive_element']}\n"
            f"q^2-1 = {report['q2_minus_1']} = {report['factorization_str']}\n"
        )
    else:
        out.write(_dumps(report) + "\n")
    return EXIT_OK


def _battery(code, cfg: RunConfig) -> dict[str, Any]:
    return verify_small_scale(code, cfg.cap_enum, cfg.cap_minors).to_dict()


def cmd_construct_a(ns, cfg: RunConfig, out) -> int:
    p = ParamsA(ns.q, ns.s, ns.t, ns.h, ns.r)
    params, cert = emit_params_a(p, ns.d, cfg.seed)
    rec = record(params, cert)
    if cfg.battery:
        code = assemble_code_a(p, solve_multipliers_a(p, cfg.seed), ns.d, allow_duplicates=True)
        rec["battery"] = _battery(code, cfg)
    _emit([rec], cfg, out)
    return _exit_for(cert)


def cmd_construct_b(ns, cfg: RunConfig, out) -> int:
    p = ParamsB(ns.q, ns.s, ns.e, ns.case)
    params, cert = emit_params_b(p, ns.k, cfg.b0_mode, cfg.seed)
    rec = record(params, cert)
    if cfg.battery:
        code = assemble_code_b(p, solve_multipliers_b(p, cfg.b0_mode, cfg.seed), ns.k)
        rec["battery"] = _battery(code, cfg)
    _emit([rec], cfg, out)
    return _exit_for(cert)


def cmd_audit(ns, cfg: RunConfig, out) -> int:
    tables = [ns.table] if ns.table is not None else [2, 3]
    rows = []
    for t in tables:
        if ns.row is not None:
            rows.append(audit_table_row(t, ns.row, cfg.seed, cfg.b0_mode))
        else:
            rows.extend(audit_table(t, cfg.seed, cfg.b0_mode))
    summary = audit_summary(rows)
    if cfg.fmt == "text":
        for r in rows:
            d = r.to_dict()
            out.write(f"table {r.table} row {r.row}: printed {d['printed']}, recomputed {r.recomputed}, verdict {d['verdict']}\n")
            for note in r.notes:
                out.write(f"  - {note}\n")
        out.write(" ".join(f"{k}={v}" for k, v in summary.items()) + "\n")
    else:
        out.write(_dumps({"rows": [r.to_dict() for r in rows], "summary": summary}) + "\n")
    return EXIT_OK


def cmd_sweep(ns, cfg: RunConfig, out) -> int:
    records = []
    for params, cert in sweep(ns.q, ns.max_n, cfg.seed, cfg.b0_mode):
        log.info("%s %s %s", params, cert.inputs, cert.verdict)
        records.append(record(params, cert))
    if cfg.battery:
        log.warning("--battery is ignored by sweep; use construct-a/construct-b on single tuples")
    _emit(records, cfg, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for all randomized searches")
    common.add_argument("--format", choices=["json", "csv", "text"], default="json")
    common.add_argument("--b0-mode", choices=B0_MODES, default="zero", help="multiplier at the point 0 (construction B)")
    common.add_argument("--cap-enum", type=int, default=DEFAULT_ENUM_CAP, help="max messages for brute-force distance")
    common.add_argument("--cap-minors", type=int, default=DEFAULT_MINOR_CAP, help="max minors for the MDS check")
    common.add_argument("--battery", action="store_true", help="also run the brute-force oracle battery")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="eaqmds", description="EAQMDS codes from GRS codes over GF(q^2)")
    sub = parser.add_subparsers(dest="command", required=True)

    f = sub.add_parser("field", parents=[common], help="describe GF(q^2)")
    f.add_argument("--q", type=int, required=True)
    f.set_defaults(func=cmd_field)

    a = sub.add_parser("construct-a", parents=[common], help="two unions of cosets")
    for name in ("q", "s", "t", "h", "r", "d"):
        a.add_argument(f"--{name}", type=int, required=True)
    a.set_defaults(func=cmd_construct_a)

    b = sub.add_parser("construct-b", parents=[common], help="cosets of <g^M> plus the point 0")
    for name in ("q", "s", "e", "k"):
        b.add_argument(f"--{name}", type=int, required=True)
    b.add_argument("--case", choices=CASES, default="odd")
    b.set_defaults(func=cmd_construct_b)

    au = sub.add_parser("audit", parents=[common], help="recompute the published tables")
    au.add_argument("--table", type=int)
    au.add_argument("--row", type=int)
    au.set_defaults(func=cmd_audit)

    sw = sub.add_parser("sweep", parents=[common], help="all admissible tuples for one q")
    sw.add_argument("--q", type=int, required=True)
    sw.add_argument("--max-n", type=int, required=True)
    sw.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig.from_args(ns)
    logging.basicConfig(level=logging.WARNING - 10 * min(cfg.verbosity, 2), stream=sys.stderr)
    out = out or sys.stdout
    try:
        return ns.func(ns, cfg, out)
    except (UnknownTable, UnknownRow) as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_HARD
    except HardConstraintViolation as exc:
        print(f"hard constraint violated: {exc}", file=sys.stderr)
        return EXIT_HARD
    except (RangeViolation, EaqmdsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HARD


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
