"""EAQEC parameters from classical codes and the EA-Singleton bound."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import RangeViolation
from .matrix import Matrix, gram, rank


@dataclass(frozen=True)
class EaqecParams:
    """``[[n, kappa, d; c]]_q`` plus where it came from."""

    q: int
    n: int
    kappa: int
    d: int
    c: int
    k_classical: int
    provenance: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not 0 <= self.c <= self.n - 1:
            raise RangeViolation(f"c = {self.c} outside 0..{self.n - 1}")
        if self.kappa != 2 * self.k_classical - self.n + self.c:
            raise RangeViolation("kappa inconsistent with the classical dimension")

    def __str__(self) -> str:
        return f"[[{self.n}, {self.kappa}, {self.d}; {self.c}]]_{self.q}"


@dataclass(frozen=True)
class SingletonCheck:
    status: str  # "saturated" | "slack" | "violated"
    amount: int
    hypothesis_met: bool

    @property
    def saturated(self) -> bool:
        return self.status == "saturated"


def eaqec_from_classical(n: int, k_cl: int, d_cl: int, c: int, q: int = 0, **provenance) -> EaqecParams:
    """``[n, k, d]_{q^2}`` with ``c = rank(H H^dagger)`` gives ``[[n, 2k - n + c, d; c]]_q``."""
    if not 1 <= k_cl <= n:
        raise RangeViolation(f"classical dimension {k_cl} outside 1..{n}")
    if d_cl < 1:
        raise RangeViolation(f"distance {d_cl} < 1")
    if not 0 <= c <= n - 1:
        raise RangeViolation(f"c = {c} outside 0..{n - 1}")
    return EaqecParams(q, n, 2 * k_cl - n + c, d_cl, c, k_cl, dict(provenance))


def ea_singleton(params: EaqecParams) -> SingletonCheck:
    """Compare ``2(d-1)`` against ``n - kappa + c``.

    The bound is only proven when ``d <= (n+2)/2``; that hypothesis is
    reported separately and does not turn a violation into an error.
    """
    lhs = 2 * (params.d - 1)
    rhs = params.n - params.kappa + params.c
    hyp = 2 * params.d <= params.n + 2
    if lhs == rhs:
        return SingletonCheck("saturated", 0, hyp)
    if lhs < rhs:
        return SingletonCheck("slack", rhs - lhs, hyp)
    return SingletonCheck("violated", lhs - rhs, hyp)


def derive_c(G: Matrix, code=None) -> int:
    """Entanglement count ``rank(G G^dagger)``.

    When the GrsCode behind ``G`` is given, the value is cross-checked
    against ``k - hull_dim``.
    """
    c = rank(gram(G))
    if code is not None:
        from .grs import hull_dim

        h = hull_dim(code)
        if G.rows - h != c:
            raise RuntimeError(f"hull identity failed: k - hull = {G.rows - h}, rank = {c}")
    return c
