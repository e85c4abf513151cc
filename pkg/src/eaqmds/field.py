"""Finite fields GF(p^m) with discrete-log tables.

Elements are stored as integer codes ``c_0 + c_1 p + ... + c_{m-1} p^{m-1}``
of their coefficient vectors in the polynomial basis.  Multiplication goes
through exp/log tables built from the least primitive element; addition is
digit-wise mod p.  Fields of even degree ``m`` are treated as GF(q^2) with
``q = p^(m/2)``, which is what conjugation and the norm map need.
"""

from __future__ import annotations

import functools
import math
from collections.abc import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import (
    FieldDivisionByZero,
    FieldMismatch,
    NoIrreducibleFound,
    NotAQuadraticExtension,
    NotInSubfield,
    NotPrime,
    TableCapExceeded,
    ZeroInput,
)

DEFAULT_TABLE_CAP = 2**20


# ---------------------------------------------------------------------------
# integers
# ---------------------------------------------------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``; raise NotPrime otherwise."""
    fac = factorize(q) if q > 1 else {}
    if len(fac) != 1:
        raise NotPrime(f"{q} is not a prime power")
    ((p, e),) = fac.items()
    return p, e


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# ---------------------------------------------------------------------------
# polynomials over GF(p), coefficient lists low -> high
# ---------------------------------------------------------------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - coef * fc) % p
        _trim(a)
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(list(a), f, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), f, p)
        base = _poly_mod(_poly_mul(base, base, p), f, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    if _poly_sub(_poly_powmod(x, p**m, f, p), x, p):
        return False
    for r in factorize(m):
        h = _poly_sub(_poly_powmod(x, p ** (m // r), f, p), x, p)
        if len(_poly_gcd(list(f), h, p)) != 1:
            return False
    return True


def _code_to_coeffs(code: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(code % p)
        code //= p
    return out


def _coeffs_to_code(coeffs: Sequence[int], p: int) -> int:
    code = 0
    for c in reversed(coeffs):
        code = code * p + (c % p)
    return code


def least_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible polynomial of degree m."""
    for low in range(p**m):
        f = _code_to_coeffs(low, p, m) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise NoIrreducibleFound(f"no irreducible polynomial of degree {m} over GF({p})")


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if c == 0:
            continue
        if deg == 0:
            terms.append(str(c))
        else:
            mono = var if deg == 1 else f"{var}^{deg}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------


class FieldSpec:
    """A materialized GF(p^m).

    Attributes
    ----------
    p, m, order : int
        Characteristic, degree and number of elements.
    modulus : tuple of int
        Monic irreducible defining polynomial, low degree first.
    g : int
        Code of the designated primitive element.
    exp, log : ndarray
        ``exp[i] = g^i`` for ``0 <= i < 2(order-1)``; ``log[exp[i]] = i``.
    q : int or None
        ``p^(m/2)`` when ``m`` is even, else None.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...], g: int, exp: np.ndarray, log: np.ndarray):
        self.p = p
        self.m = m
        self.order = p**m
        self.N = self.order - 1
        self.modulus = modulus
        self.g = g
        self.exp = exp
        self.log = log
        self.q = p ** (m // 2) if m % 2 == 0 else None
        codes = np.arange(self.order, dtype=np.int64)
        self._neg = kernels.np_neg(codes, p, m)
        if self.q is not None:
            self._frob = self.vpow(codes, self.q)

    def __repr__(self) -> str:
        return f"FieldSpec(GF({self.p}^{self.m}), modulus={format_poly(self.modulus)}, g={self.format(self.g)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.m, self.modulus, self.g) == (other.p, other.m, other.modulus, other.g)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus, self.g))

    @property
    def tables(self) -> tuple:
        """``(p, m, exp, log)`` as passed to the kernels."""
        return self.p, self.m, self.exp, self.log

    # -- element construction -------------------------------------------------

    def __call__(self, code: int) -> FieldElem:
        return self.elem(code)

    def elem(self, code: int) -> FieldElem:
        code = int(code)
        if not 0 <= code < self.order:
            raise ValueError(f"code {code} out of range for GF({self.order})")
        return FieldElem(self, code)

    def from_int(self, k: int) -> int:
        """Code of the prime-field element ``k mod p``."""
        return int(k) % self.p

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.m:
            coeffs = _poly_mod(list(coeffs), self.modulus, self.p)
        return _coeffs_to_code(coeffs, self.p)

    def coeffs(self, code: int) -> list[int]:
        return _code_to_coeffs(int(code), self.p, self.m)

    def format(self, code: int) -> str:
        return format_poly(self.coeffs(code))

    def g_pow(self, k: int) -> int:
        """Code of ``g^k`` for any integer k."""
        return int(self.exp[k % self.N])

    @property
    def gen(self) -> FieldElem:
        return FieldElem(self, self.g)

    def elements(self) -> Iterable[FieldElem]:
        return (FieldElem(self, c) for c in range(self.order))

    # -- scalar arithmetic on codes ------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(kernels.np_add(a, b, self.p, self.m))

    def neg(self, a: int) -> int:
        return int(self._neg[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldDivisionByZero("inverse of zero")
        return int(self.exp[(self.N - self.log[a]) % self.N])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """``a^e`` with ``0^0 = 1``; negative exponents invert."""
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise FieldDivisionByZero("zero to a negative power")
            return 0
        return int(self.exp[(int(self.log[a]) * e) % self.N])

    def discrete_log(self, a: int) -> int:
        if a == 0:
            raise ZeroInput("log of zero")
        return int(self.log[a])

    # -- vectorized arithmetic ---------------------------------------------

    def vadd(self, a, b) -> np.ndarray:
        return kernels.np_add(a, b, self.p, self.m)

    def vneg(self, a) -> np.ndarray:
        return self._neg[np.asarray(a, dtype=np.int64)]

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        return kernels.np_mul(a, b, self.exp, self.log)

    def vpow(self, a, e) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        e = np.asarray(e, dtype=np.int64)
        if np.any((a == 0) & (e < 0)):
            raise FieldDivisionByZero("zero to a negative power")
        out = self.exp[(self.log[a] * e) % self.N]
        return np.where(a == 0, np.where(e == 0, 1, 0), out)

    def vsum(self, a, axis=None) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if axis is None:
            a, axis = a.ravel(), 0
        return kernels.np_sum(a, axis, self.p, self.m)

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise FieldDivisionByZero("inverse of zero")
        return self.exp[(self.N - self.log[a]) % self.N]

    # -- quadratic-extension structure -------------------------------------

    def _need_q(self) -> int:
        if self.q is None:
            raise NotAQuadraticExtension(f"GF({self.p}^{self.m}) has odd degree")
        return self.q

    def frob(self, a: int) -> int:
        self._need_q()
        return int(self._frob[a])

    def vfrob(self, a) -> np.ndarray:
        self._need_q()
        return self._frob[np.asarray(a, dtype=np.int64)]

    def norm(self, a: int) -> int:
        return self.pow(a, self._need_q() + 1)

    def vnorm(self, a) -> np.ndarray:
        return self.vpow(a, self._need_q() + 1)

    def in_subfield(self, a: int) -> bool:
        q = self._need_q()
        return a == 0 or int(self.log[a]) % (q + 1) == 0

    def subfield_codes(self) -> np.ndarray:
        """Codes of GF(q), zero first then ``g^{(q+1)k}`` for increasing k."""
        q = self._need_q()
        return np.concatenate([[0], self.exp[: self.N : q + 1]]).astype(np.int64)

    def norm_preimage(self, u: int) -> int:
        """The preimage of ``u`` under the norm with least discrete log."""
        q = self._need_q()
        if u == 0:
            raise ZeroInput("norm preimage of zero")
        if not self.in_subfield(u):
            raise NotInSubfield(f"{self.format(u)} is not in GF({q})")
        return self.g_pow(int(self.log[u]) // (q + 1))


class FieldElem:
    """One element of a FieldSpec, compared by code."""

    __slots__ = ("code", "field")

    def __init__(self, field: FieldSpec, code: int):
        self.field = field
        self.code = int(code)

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("elements belong to different fields")
            return other.code
        if isinstance(other, (int, np.integer)):
            return self.field.from_int(int(other))
        return NotImplemented

    def _wrap(self, code: int) -> FieldElem:
        return FieldElem(self.field, code)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.code, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.code))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.code, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.code, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(o, self.code))

    def __neg__(self):
        return self._wrap(self.field.neg(self.code))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.code, int(e)))

    def inv(self) -> FieldElem:
        return self._wrap(self.field.inv(self.code))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElem):
            return self.field == other.field and self.code == other.code
        if isinstance(other, (int, np.integer)):
            return self.code == self.field.from_int(int(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.order, self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __int__(self) -> int:
        return self.code

    def __repr__(self) -> str:
        return f"FieldElem({self.field.format(self.code)})"

    def __str__(self) -> str:
        return self.field.format(self.code)


# ---------------------------------------------------------------------------
# constructors and element-level operations
# ---------------------------------------------------------------------------


def _find_primitive(p: int, m: int, f: tuple[int, ...]) -> int:
    order = p**m
    N = order - 1
    exps = [N // r for r in factorize(N)] if N > 1 else []
    for code in range(1, order):
        a = _code_to_coeffs(code, p, m)
        if all(_poly_powmod(a, e, f, p) != [1] for e in exps):
            return code
    raise NoIrreducibleFound("no primitive element found")  # pragma: no cover


def _build_tables(p: int, m: int, f: tuple[int, ...], g: int) -> tuple[np.ndarray, np.ndarray]:
    order = p**m
    N = order - 1
    # multiplication by g as an m x m matrix over GF(p), column j = g * x^j
    gpoly = _code_to_coeffs(g, p, m)
    cols = []
    for j in range(m):
        prod = _poly_mod(_poly_mul([0] * j + [1], gpoly, p), f, p)
        cols.append(prod + [0] * (m - len(prod)))
    mat = np.array(cols, dtype=np.int64).T
    places = p ** np.arange(m, dtype=np.int64)
    exp = np.empty(2 * N, dtype=np.int64)
    log = np.zeros(order, dtype=np.int64)
    vec = np.zeros(m, dtype=np.int64)
    vec[0] = 1
    for i in range(N):
        code = int(vec @ places)
        exp[i] = code
        log[code] = i
        vec = mat @ vec % p
    exp[N:] = exp[:N]
    return exp, log


@functools.cache
def create_field(p: int, m: int = 1, cap: int = DEFAULT_TABLE_CAP) -> FieldSpec:
    """Build GF(p^m) for an odd prime p.

    The modulus is the lexicographically least monic irreducible of degree
    m and the primitive element is the least code whose multiplicative order
    is ``p^m - 1``, so repeated calls give identical fields.
    """
    if not is_prime(p) or p == 2:
        raise NotPrime(f"{p} is not an odd prime")
    if m < 1:
        raise ValueError("degree must be at least 1")
    if p**m > cap:
        raise TableCapExceeded(f"GF({p}^{m}) has {p**m} elements, cap is {cap}")
    f = least_irreducible(p, m)
    g = _find_primitive(p, m, f)
    exp, log = _build_tables(p, m, f, g)
    return FieldSpec(p, m, f, g, exp, log)


def field_for_q(q: int, cap: int = DEFAULT_TABLE_CAP) -> FieldSpec:
    """GF(q^2) for an odd prime power q."""
    p, e = prime_power(q)
    if p == 2:
        raise NotPrime(f"q = {q} is even")
    return create_field(p, 2 * e, cap)


def multiplicative_order(x: FieldElem) -> int:
    F = x.field
    if x.code == 0:
        raise ZeroInput("zero has no multiplicative order")
    return F.N // math.gcd(F.N, int(F.log[x.code]))


def arithmetic(x: FieldElem, y: FieldElem, op: str) -> FieldElem:
    """Apply ``add``, ``sub``, ``mul`` or ``div`` to two elements."""
    ops = {
        "add": lambda a, b: a + b,
        "sub": lambda a, b: a - b,
        "mul": lambda a, b: a * b,
        "div": lambda a, b: a / b,
    }
    if op not in ops:
        raise ValueError(f"unknown op {op!r}")
    if x.field != y.field:
        raise FieldMismatch("elements belong to different fields")
    return ops[op](x, y)


def frobenius(x: FieldElem) -> FieldElem:
    return FieldElem(x.field, x.field.frob(x.code))


def norm(x: FieldElem) -> FieldElem:
    return FieldElem(x.field, x.field.norm(x.code))


def norm_preimage(u: FieldElem) -> FieldElem:
    return FieldElem(u.field, u.field.norm_preimage(u.code))


def is_in_subfield(x: FieldElem) -> bool:
    return x.field.in_subfield(x.code)
