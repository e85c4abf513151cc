"""Enumerate every admissible tuple of both constructions for one q."""

from __future__ import annotations

from collections.abc import Iterator

from .certify import Certificate
from .construction_a import ParamsA, emit_params_a, max_d, validate_params_a
from .construction_b import CASES, ParamsB, emit_params_b, validate_params_b
from .eaqec import EaqecParams
from .errors import HardConstraintViolation
from .field import divisors


def params_a_for(q: int, max_n: int) -> Iterator[ParamsA]:
    for s in divisors(q + 1):
        for t in divisors(q - 1):
            for h in range(1, s // 2 + 1):
                for r in range(2, t // 2 + 1):
                    p = ParamsA(q, s, t, h, r)
                    if p.n > max_n:
                        continue
                    try:
                        validate_params_a(p)
                    except HardConstraintViolation:
                        continue
                    if max_d(p) >= 1:
                        yield p


def params_b_for(q: int, max_n: int) -> Iterator[ParamsB]:
    for case in CASES:
        for s in range(1, (q + 1) // 2 + 1):
            for e in range(s):
                p = ParamsB(q, s, e, case)
                if (q + 1) % p.M or p.n > max_n:
                    continue
                try:
                    validate_params_b(p)
                except HardConstraintViolation:
                    continue
                if p.k_max >= 1:
                    yield p


def sweep(q: int, max_n: int, seed: int = 0, b0_mode: str = "zero") -> Iterator[tuple[EaqecParams, Certificate]]:
    """Construction A tuples first, then B, each at its largest distance parameter."""
    for p in params_a_for(q, max_n):
        yield emit_params_a(p, max_d(p), seed)
    for p in params_b_for(q, max_n):
        yield emit_params_b(p, p.k_max, b0_mode, seed)
