import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from eaqmds.errors import (
    FieldDivisionByZero,
    FieldMismatch,
    NotInSubfield,
    NotPrime,
    TableCapExceeded,
    ZeroInput,
)
from eaqmds.field import (
    create_field,
    divisors,
    factorize,
    field_for_q,
    format_poly,
    is_irreducible,
    least_irreducible,
    multiplicative_order,
    prime_power,
)


def test_prime_power():
    assert prime_power(13) == (13, 1)
    assert prime_power(9) == (3, 2)
    assert prime_power(125) == (5, 3)
    with pytest.raises(NotPrime):
        prime_power(12)
    with pytest.raises(NotPrime):
        prime_power(1)


def test_factorize_and_divisors():
    assert factorize(168) == {2: 3, 3: 1, 7: 1}
    assert factorize(840) == {2: 3, 3: 1, 5: 1, 7: 1}
    assert divisors(14) == [1, 2, 7, 14]


def test_field_conventions():
    F = field_for_q(13)
    assert (F.p, F.m, F.order) == (13, 2, 169)
    assert format_poly(F.modulus) == "x^2 + 2"
    assert F.format(F.g) == "x + 2"
    assert create_field(13).g == 2
    assert format_poly(create_field(3, 2).modulus) == "x^2 + 1"
    assert format_poly(create_field(3, 4).modulus) == "x^4 + x + 2"


def test_fields_are_cached():
    assert create_field(3, 2) is create_field(3, 2)
    assert field_for_q(13) == create_field(13, 2)


def test_rejects_bad_inputs():
    with pytest.raises(NotPrime):
        create_field(2, 3)
    with pytest.raises(NotPrime):
        field_for_q(4)
    with pytest.raises(TableCapExceeded):
        create_field(101, 4, cap=10**6)


@pytest.mark.parametrize("p,m", [(3, 1), (3, 2), (5, 2), (7, 2), (3, 3)])
def test_least_irreducible(p, m):
    f = least_irreducible(p, m)
    assert is_irreducible(f, p)
    assert f[-1] == 1 and len(f) == m + 1


@pytest.mark.parametrize("p,m", [(3, 2), (5, 2), (7, 2), (13, 2)])
def test_generator_is_primitive(p, m):
    F = create_field(p, m)
    assert multiplicative_order(F.gen) == F.N
    assert len(set(F.exp[: F.N].tolist())) == F.N


def test_division_by_zero(gf9):
    with pytest.raises(FieldDivisionByZero):
        gf9.inv(0)
    with pytest.raises(ZeroDivisionError):
        gf9(1) / gf9(0)


def test_mismatched_fields():
    with pytest.raises(FieldMismatch):
        create_field(3, 2)(1) + create_field(5, 2)(1)


def test_pow_conventions(gf9):
    assert gf9.pow(0, 0) == 1
    assert gf9.pow(0, 5) == 0
    x = gf9.g
    assert gf9.mul(gf9.pow(x, -1), x) == 1


elems25 = st.integers(min_value=0, max_value=24)


@given(elems25, elems25, elems25)
def test_ring_axioms(a, b, c):
    F = field_for_q(5)
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    if b:
        assert F.mul(F.div(a, b), b) == a


@given(elems25, elems25)
def test_frobenius_is_additive_and_multiplicative(a, b):
    F = field_for_q(5)
    assert F.frob(F.add(a, b)) == F.add(F.frob(a), F.frob(b))
    assert F.frob(F.mul(a, b)) == F.mul(F.frob(a), F.frob(b))
    assert F.frob(F.frob(a)) == a


def test_norm_and_subfield(gf169):
    F = gf169
    sub = F.subfield_codes()
    assert sub.size == 13 and sub[0] == 0
    assert all(F.frob(int(x)) == x for x in sub)
    norms = {F.norm(x) for x in range(1, F.order)}
    assert norms == set(sub[1:].tolist())
    for u in sub[1:]:
        b = F.norm_preimage(int(u))
        assert F.norm(b) == u
    with pytest.raises(ZeroInput):
        F.norm_preimage(0)
    with pytest.raises(NotInSubfield):
        F.norm_preimage(F.g)


def test_vector_ops_match_scalar(gf25):
    F = gf25
    rng = np.random.default_rng(0)
    a = rng.integers(0, 25, 200)
    b = rng.integers(0, 25, 200)
    assert F.vadd(a, b).tolist() == [F.add(int(x), int(y)) for x, y in zip(a, b)]
    assert F.vmul(a, b).tolist() == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
    assert F.vpow(a, 7).tolist() == [F.pow(int(x), 7) for x in a]
    total = 0
    for x in a:
        total = F.add(total, int(x))
    assert int(F.vsum(a)) == total


def test_elem_wrapper(gf9):
    x = gf9.gen
    assert int(x**8) == 1
    assert x * x.inv() == 1
    assert (-x) + x == 0
    assert (x + 1) - 1 == x
