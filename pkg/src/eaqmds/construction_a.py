"""Lengths ``n = l*h + m*r`` from two unions of multiplicative cosets.

Parameters ``(q, s, t, h, r)`` with ``s | q+1`` and ``t | q-1``; put
``l = (q^2-1)/s``, ``m = (q^2-1)/t``, ``delta = g^s`` and ``theta = g^t``.
The first part of the code has ``h`` cosets ``g^(2k+1) <delta>`` with
multipliers ``v_k delta^e``; the second part has ``r`` cosets
``g^(2k) <theta>`` with multipliers ``g^(nu t/2)``.  Only the first part
contributes to the Gram matrix inside the admissible range, at the
positions ``(mu(q+1)/s - 2, q - mu(q+1)/s - 1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .certify import Certificate, certify_gram_pattern
from .eaqec import EaqecParams, ea_singleton, eaqec_from_classical
from .errors import DOutOfRange, HardConstraintViolation, NotPrime
from .field import FieldSpec, field_for_q, prime_power
from .grs import GrsCode, generator_matrix
from .matrix import gram, rank
from .multipliers import find_multipliers


@dataclass(frozen=True)
class ParamsA:
    q: int
    s: int
    t: int
    h: int
    r: int

    @property
    def l(self) -> int:
        return (self.q**2 - 1) // self.s

    @property
    def m(self) -> int:
        return (self.q**2 - 1) // self.t

    @property
    def n(self) -> int:
        return self.l * self.h + self.m * self.r

    @property
    def c_claimed(self) -> int:
        return self.h - 1

    def as_dict(self) -> dict[str, int]:
        return {"q": self.q, "s": self.s, "t": self.t, "h": self.h, "r": self.r}


@dataclass(frozen=True)
class MultiplierSolutionA:
    u: np.ndarray
    v_lift: np.ndarray
    xi: np.ndarray
    method: str


def validate_params_a(p: ParamsA) -> list[str]:
    """Raise on hard violations; return the soft ones as warnings."""
    q, s, t, h, r = p.q, p.s, p.t, p.h, p.r
    try:
        base, _ = prime_power(q)
    except NotPrime:
        raise HardConstraintViolation(f"q = {q} is not a prime power") from None
    if base == 2:
        raise HardConstraintViolation(f"q = {q} is even")
    if q <= 3:
        raise HardConstraintViolation(f"q = {q} must exceed 3")
    if s < 1 or (q + 1) % s:
        raise HardConstraintViolation(f"s = {s} does not divide q+1 = {q + 1}")
    if t < 1 or (q - 1) % t:
        raise HardConstraintViolation(f"t = {t} does not divide q-1 = {q - 1}")
    if not 1 <= h <= s // 2:
        raise HardConstraintViolation(f"h = {h} outside 1..floor(s/2) = {s // 2}")
    if not 2 <= r <= t // 2:
        raise HardConstraintViolation(f"r = {r} outside 2..floor(t/2) = {t // 2}")
    if p.n > q * q - 1:
        raise HardConstraintViolation(f"n = {p.n} exceeds q^2-1 = {q * q - 1}")
    warnings = []
    if t % 2:
        warnings.append(f"t-odd: t = {t} violates the hypothesis that t is even")
    if (s - h) % 2:
        warnings.append(f"parity: s = {s} and h = {h} differ in parity, so (s-h)/2 is not an integer")
    return warnings


def max_d(p: ParamsA) -> int:
    """``min{(s+h)/2 * (q+1)/s - 2, (q+1)/2 + (q-1)/t - 1}``, floored."""
    first = Fraction(p.s + p.h, 2) * Fraction(p.q + 1, p.s) - 2
    second = Fraction(p.q + 1, 2) + Fraction(p.q - 1, p.t) - 1
    return math.floor(min(first, second))


def mu_window(p: ParamsA) -> list[int]:
    """Integers strictly between (s-h)/2 and (s+h)/2."""
    return list(range((p.s - p.h) // 2 + 1, (p.s + p.h + 1) // 2))


def expected_pattern_a(p: ParamsA, d: int) -> set[tuple[int, int]]:
    if not 1 <= d <= max_d(p):
        raise DOutOfRange(f"d = {d} outside 1..{max_d(p)}")
    w = (p.q + 1) // p.s
    out = set()
    for mu in mu_window(p):
        i, j = mu * w - 2, p.q - mu * w - 1
        if 0 <= i <= d - 1 and 0 <= j <= d - 1:
            out.add((i, j))
    return out


def condition_rows_a(field: FieldSpec, p: ParamsA) -> np.ndarray:
    """Coefficient rows of the multiplier system: all ones, then one row per mu."""
    q, l = p.q, p.l
    k = np.arange(p.h)
    rows = [np.ones(p.h, dtype=np.int64)]
    for mu in mu_window(p):
        rows.append(field.exp[((2 * k + 1) * (mu * l - q - 1)) % field.N])
    return np.array(rows, dtype=np.int64)


def solve_multipliers_a(p: ParamsA, seed: int = 0, field: FieldSpec | None = None) -> MultiplierSolutionA:
    validate_params_a(p)
    F = field or field_for_q(p.q)
    res = find_multipliers(F, condition_rows_a(F, p), seed)
    v_lift = np.array([F.norm_preimage(int(x)) for x in res.u], dtype=np.int64)
    return MultiplierSolutionA(res.u, v_lift, res.xi, res.method)


def blocks_a(p: ParamsA, sol: MultiplierSolutionA, field: FieldSpec | None = None):
    """Return ``(a1, v1, a2, v2)`` as code arrays."""
    F = field or field_for_q(p.q)
    s, t, l, m = p.s, p.t, p.l, p.m
    e = np.arange(l)
    a1 = np.concatenate([F.exp[(2 * k + 1 + s * e) % F.N] for k in range(p.h)])
    v1 = np.concatenate([F.vmul(sol.v_lift[k], F.exp[(s * e) % F.N]) for k in range(p.h)])
    nu = np.arange(m)
    a2 = np.concatenate([F.exp[(2 * k + t * nu) % F.N] for k in range(p.r)])
    # floor(nu*t/2) equals nu*(t/2) for even t; odd t has no exact analogue
    v2 = np.tile(F.exp[(nu * t // 2) % F.N], p.r)
    return a1, v1, a2, v2


def assemble_code_a(
    p: ParamsA,
    sol: MultiplierSolutionA,
    d: int,
    field: FieldSpec | None = None,
    allow_duplicates: bool = False,
) -> GrsCode:
    if not 1 <= d <= max_d(p):
        raise DOutOfRange(f"d = {d} outside 1..{max_d(p)}")
    F = field or field_for_q(p.q)
    a1, v1, a2, v2 = blocks_a(p, sol, F)
    return GrsCode(F, np.concatenate([a1, a2]), np.concatenate([v1, v2]), d, allow_duplicates=allow_duplicates)


def emit_params_a(p: ParamsA, d: int, seed: int = 0) -> tuple[EaqecParams, Certificate]:
    """Full pipeline: solve, assemble, compute c from the Gram matrix, certify.

    Repeated evaluation points do not stop the pipeline; they are reported
    in the certificate, whose verdict can then not be ``pass``.
    """
    warnings = validate_params_a(p)
    if not 1 <= d <= max_d(p):
        raise DOutOfRange(f"d = {d} outside 1..{max_d(p)}")
    F = field_for_q(p.q)
    sol = solve_multipliers_a(p, seed, F)
    code = assemble_code_a(p, sol, d, F, allow_duplicates=True)
    G = generator_matrix(code)
    gm = gram(G)
    c = rank(gm)
    inputs = {**p.as_dict(), "d": d}
    cert = certify_gram_pattern(
        code,
        expected_pattern_a(p, d),
        p.c_claimed,
        d,
        gram_matrix=gm,
        construction="A",
        inputs=inputs,
        warnings=warnings,
    )
    cert.notes["multiplier_method"] = sol.method
    cert.notes["mu_window"] = mu_window(p)
    params = eaqec_from_classical(
        p.n, p.n - d, d + 1, c, q=p.q, construction="A", inputs=inputs, primitive_element=F.format(F.g), seed=seed
    )
    if not ea_singleton(params).saturated:  # pragma: no cover - guaranteed by the parameter map
        raise RuntimeError("emitted parameters do not saturate the EA-Singleton bound")
    return params, cert
