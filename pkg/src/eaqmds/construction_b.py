"""Lengths ``n = 1 + B (q^2-1)/M`` from cosets of ``<g^M>`` plus the point 0.

Three cases, all with ``M | q+1``:

==========  ========  =========  ===========  ==================================
case        M         blocks B   claimed c    k_max
==========  ========  =========  ===========  ==================================
odd         2s+1      2e+1       2e           (s+1+e)(q+1)/M - 1
even-long   2s        2e+2       2e+1         (s+1+e)(q+1)/M - 1
even-short  2s        2e+1       2e           (s+e)(q+1)/M - 2
==========  ========  =========  ===========  ==================================

Block ``i`` (``1 <= i <= B``) holds the points ``g^i gamma^j`` with
``gamma = g^M`` and constant multiplier ``b_i``; the extra coordinate is
the point 0 with multiplier ``b0``.  Gram entries away from (0, 0) can
only be nonzero at ``(l(q+1)/M - 1, q - l(q+1)/M)``; entry (0, 0) is
``b0^(q+1) + T * sum(u)`` with ``T = (q^2-1)/M``, and ``b0`` decides
whether it vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .certify import Certificate, certify_gram_pattern, oracle_inner_sums
from .eaqec import EaqecParams, ea_singleton, eaqec_from_classical
from .errors import HardConstraintViolation, KOutOfRange, NotPrime
from .field import FieldSpec, field_for_q, prime_power
from .grs import GrsCode, generator_matrix
from .matrix import gram, rank
from .multipliers import find_multipliers

CASES = ("odd", "even-long", "even-short")
B0_MODES = ("zero", "nonzero")


@dataclass(frozen=True)
class ParamsB:
    q: int
    s: int
    e: int
    case: str = "odd"

    def __post_init__(self):
        if self.case not in CASES:
            raise ValueError(f"case must be one of {CASES}, got {self.case!r}")

    @property
    def M(self) -> int:
        return 2 * self.s + 1 if self.case == "odd" else 2 * self.s

    @property
    def t_blocks(self) -> int:
        return (self.q**2 - 1) // self.M

    @property
    def blocks(self) -> int:
        return 2 * self.e + 2 if self.case == "even-long" else 2 * self.e + 1

    @property
    def n(self) -> int:
        return 1 + self.blocks * self.t_blocks

    @property
    def c_claimed(self) -> int:
        return 2 * self.e + 1 if self.case == "even-long" else 2 * self.e

    @property
    def k_max(self) -> int:
        w = (self.q + 1) // self.M
        if self.case == "even-short":
            return (self.s + self.e) * w - 2
        return (self.s + 1 + self.e) * w - 1

    def as_dict(self) -> dict:
        return {"q": self.q, "s": self.s, "e": self.e, "case": self.case}


@dataclass(frozen=True)
class MultiplierSolutionB:
    u: np.ndarray
    b_lift: np.ndarray
    b0: int
    b0_mode: str
    xi: np.ndarray
    method: str


def validate_params_b(p: ParamsB, k: int | None = None) -> list[str]:
    q, s, e = p.q, p.s, p.e
    try:
        base, _ = prime_power(q)
    except NotPrime:
        raise HardConstraintViolation(f"q = {q} is not a prime power") from None
    if base == 2:
        raise HardConstraintViolation(f"q = {q} is even")
    if s < 1 or (q + 1) % p.M:
        raise HardConstraintViolation(f"M = {p.M} does not divide q+1 = {q + 1}")
    e_max = s - 2 if p.case == "even-long" else s - 1
    if not 0 <= e <= e_max:
        raise HardConstraintViolation(f"e = {e} outside 0..{e_max}")
    if p.blocks > p.M - 1:
        raise HardConstraintViolation(f"{p.blocks} blocks exceed M-1 = {p.M - 1}")
    warnings = []
    if k is not None and k > p.k_max:
        warnings.append(f"k-range: k = {k} exceeds k_max = {p.k_max}")
    return warnings


def l_window(p: ParamsB, k: int | None = None) -> list[int]:
    """Indices l whose position ``(l(q+1)/M - 1, q - l(q+1)/M)`` fits in a k x k Gram."""
    k = p.k_max if k is None else k
    w = (p.q + 1) // p.M
    return [l for l in range(1, p.M) if l * w - 1 <= k - 1 and p.q - l * w <= k - 1]


def expected_pattern_b(p: ParamsB, k: int, b0_mode: str = "zero") -> set[tuple[int, int]]:
    if not 1 <= k <= p.k_max:
        raise KOutOfRange(f"k = {k} outside 1..{p.k_max}")
    w = (p.q + 1) // p.M
    out = {(l * w - 1, p.q - l * w) for l in l_window(p, k)}
    if b0_mode == "nonzero":
        out.add((0, 0))
    return out


def condition_rows_b(field: FieldSpec, p: ParamsB) -> np.ndarray:
    i = np.arange(1, p.blocks + 1)
    rows = [np.ones(p.blocks, dtype=np.int64)]
    for l in l_window(p):
        rows.append(field.exp[(i * l * p.t_blocks) % field.N])
    return np.array(rows, dtype=np.int64)


def _b0_for(field: FieldSpec, p: ParamsB, u: np.ndarray, mode: str) -> int:
    target = field.neg(field.mul(field.from_int(p.t_blocks), int(field.vsum(u))))
    if mode == "zero":
        return field.norm_preimage(target)
    if mode == "nonzero":
        for x in range(field.N):
            if field.norm(field.g_pow(x)) != target:
                return field.g_pow(x)
    raise ValueError(f"b0 mode must be one of {B0_MODES}, got {mode!r}")


def solve_multipliers_b(p: ParamsB, b0_mode: str = "zero", seed: int = 0, field: FieldSpec | None = None) -> MultiplierSolutionB:
    validate_params_b(p)
    F = field or field_for_q(p.q)
    res = find_multipliers(F, condition_rows_b(F, p), seed)
    b_lift = np.array([F.norm_preimage(int(x)) for x in res.u], dtype=np.int64)
    b0 = _b0_for(F, p, res.u, b0_mode)
    return MultiplierSolutionB(res.u, b_lift, b0, b0_mode, res.xi, res.method)


def assemble_code_b(p: ParamsB, sol: MultiplierSolutionB, k: int, field: FieldSpec | None = None) -> GrsCode:
    if not 1 <= k <= p.k_max:
        raise KOutOfRange(f"k = {k} outside 1..{p.k_max}")
    F = field or field_for_q(p.q)
    j = np.arange(p.t_blocks)
    a = [np.zeros(1, dtype=np.int64)]
    v = [np.array([sol.b0], dtype=np.int64)]
    for i in range(1, p.blocks + 1):
        a.append(F.exp[(i + p.M * j) % F.N])
        v.append(np.full(p.t_blocks, sol.b_lift[i - 1], dtype=np.int64))
    return GrsCode(F, np.concatenate(a), np.concatenate(v), k)


def emit_params_b(p: ParamsB, k: int, b0_mode: str = "zero", seed: int = 0) -> tuple[EaqecParams, Certificate]:
    """Full pipeline for one tuple; the certificate also reports c under the other b0 mode."""
    warnings = validate_params_b(p, k)
    if not 1 <= k <= p.k_max:
        raise KOutOfRange(f"k = {k} outside 1..{p.k_max}")
    F = field_for_q(p.q)
    sol = solve_multipliers_b(p, b0_mode, seed, F)
    code = assemble_code_b(p, sol, k, F)
    gm = gram(generator_matrix(code))
    c = rank(gm)
    inputs = {**p.as_dict(), "k": k, "b0_mode": b0_mode}
    cert = certify_gram_pattern(
        code,
        expected_pattern_b(p, k, b0_mode),
        p.c_claimed,
        k,
        gram_matrix=gm,
        construction="B",
        inputs=inputs,
        warnings=warnings,
    )
    if b0_mode == "nonzero":
        cert.warnings.append(
            f"b0-divergence: nonzero (0,0) Gram entry gives c = {c}, the claimed c = {p.c_claimed} assumes it vanishes"
        )
    other = "nonzero" if b0_mode == "zero" else "zero"
    alt = code.a, code.v.copy()
    alt[1][0] = _b0_for(F, p, sol.u, other)
    alt_rank = rank(oracle_inner_sums(GrsCode(F, alt[0], alt[1], k), k))
    w = (p.q + 1) // p.M
    cert.notes.update(
        {
            "multiplier_method": sol.method,
            "l_window_predicted": l_window(p, k),
            "l_window_found": sorted((i + 1) // w for i, j in cert.pattern_found if (i, j) != (0, 0)),
            "b0_mode": b0_mode,
            f"c_with_b0_{other}": alt_rank,
        }
    )
    params = eaqec_from_classical(
        p.n, p.n - k, k + 1, c, q=p.q, construction="B", inputs=inputs, primitive_element=F.format(F.g), seed=seed
    )
    if not ea_singleton(params).saturated:  # pragma: no cover
        raise RuntimeError("emitted parameters do not saturate the EA-Singleton bound")
    return params, cert
