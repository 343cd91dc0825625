import numpy as np
import pytest
from hypothesis import given, strategies as st

from hoplattice import gf
from hoplattice.errors import DivisionByZero, IndexOutOfRange, NotPrime, SizeCapExceeded

SMALL_FIELDS = [(p, k) for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61)
                for k in range(1, 7) if p**k <= 64]


def test_prime_fields_have_no_modulus():
    F = gf.field_new(2, 1)
    assert F.q == 2 and F.modulus is None


def test_f4_modulus():
    # the only monic irreducible quadratic over F_2
    assert gf.field_new(2, 2).modulus == (1, 1, 1)


@pytest.mark.parametrize("p", [4, 1, 0, 9, 15])
def test_not_prime(p):
    with pytest.raises(NotPrime):
        gf.field_new(p, 1)


def test_size_cap(monkeypatch):
    with pytest.raises(SizeCapExceeded):
        gf.field_new(2, 21)
    monkeypatch.setenv("HOPLATTICE_CAP", "8")
    with pytest.raises(SizeCapExceeded):
        gf.field_new(2, 4)
    assert gf.field_new(2, 3).q == 8


def test_canonical_modulus_is_deterministic():
    assert gf.field_new(3, 2) == gf.field_new(3, 2)
    # x^2 + 1 is the first irreducible monic quadratic over F_3
    assert gf.field_new(3, 2).modulus == (1, 0, 1)
    assert gf.field_new(2, 3).modulus == (1, 1, 0, 1)


def test_add_examples():
    F3, F2, F4 = gf.field_new(3), gf.field_new(2), gf.field_new(2, 2)
    assert gf.add(F3, (2,), (2,)) == (1,)
    for a in F2.elements():
        assert gf.add(F2, a, a) == (0,)
    assert gf.add(F4, (1, 1), (0, 1)) == (1, 0)
    assert gf.sub(F3, (0,), (1,)) == (2,)
    assert gf.neg(F4, (1, 1)) == (1, 1)


def test_mul_examples():
    F3, F4 = gf.field_new(3), gf.field_new(2, 2)
    assert gf.mul(F3, (2,), (2,)) == (1,)
    assert gf.mul(F4, (0, 1), (0, 1)) == (1, 1)  # x*x = x + 1
    for a in F4.elements():
        assert gf.mul(F4, a, F4.one) == a


def test_inv_examples():
    F5, F4 = gf.field_new(5), gf.field_new(2, 2)
    assert gf.inv(F5, (2,)) == (3,)
    assert gf.inv(F4, (0, 1)) == (1, 1)
    assert gf.inv(F5, (1,)) == (1,)
    with pytest.raises(DivisionByZero):
        gf.inv(F5, (0,))


def test_index_examples():
    F4, F5 = gf.field_new(2, 2), gf.field_new(5)
    assert gf.element_from_index(F4, 3) == (1, 1)
    assert gf.element_from_index(F5, 0) == (0,)
    with pytest.raises(IndexOutOfRange):
        gf.element_from_index(F5, 5)


def test_element_validation():
    F4 = gf.field_new(2, 2)
    assert gf.element(F4, [1, 0]) == (1, 0)
    with pytest.raises(ValueError):
        gf.element(F4, [2, 0])
    with pytest.raises(ValueError):
        gf.element(F4, [1])


@pytest.mark.parametrize("p,k", SMALL_FIELDS, ids=lambda v: str(v))
def test_index_bijection(p, k):
    F = gf.field_new(p, k)
    elems = [gf.element_from_index(F, i) for i in range(F.q)]
    assert len(set(elems)) == F.q
    assert [gf.element_to_index(F, e) for e in elems] == list(range(F.q))


@pytest.mark.parametrize("p,k", SMALL_FIELDS, ids=lambda v: str(v))
def test_tables_match_element_ops(p, k):
    F = gf.field_new(p, k)
    t = F.tables
    elems = F.elements()
    for a, ea in enumerate(elems):
        for b, eb in enumerate(elems):
            assert t.add[a, b] == gf.element_to_index(F, gf.add(F, ea, eb))
            assert t.mul[a, b] == gf.element_to_index(F, gf.mul(F, ea, eb))
            assert t.sub[a, b] == gf.element_to_index(F, gf.sub(F, ea, eb))


@pytest.mark.parametrize("p,k", SMALL_FIELDS, ids=lambda v: str(v))
def test_field_axioms_exhaustive(p, k):
    F = gf.field_new(p, k)
    t = F.tables
    q = F.q
    a = np.arange(q)[:, None, None]
    b = np.arange(q)[None, :, None]
    c = np.arange(q)[None, None, :]
    add, mul = t.add, t.mul
    assert np.array_equal(add[add[a, b], c], add[a, add[b, c]])
    assert np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]])
    assert np.array_equal(mul[a, add[b, c]], add[mul[a, b], mul[a, c]])
    assert np.array_equal(add, add.T) and np.array_equal(mul, mul.T)
    assert np.all(add[0] == np.arange(q)) and np.all(mul[1] == np.arange(q))
    assert np.all(add[np.arange(q), t.neg] == 0)
    assert np.all(mul[np.arange(1, q), t.inv[1:]] == 1)


@pytest.mark.parametrize("p,k", SMALL_FIELDS, ids=lambda v: str(v))
def test_multiplicative_group_order(p, k):
    F = gf.field_new(p, k)
    for e in F.elements()[1:]:
        assert gf.power(F, e, F.q - 1) == F.one


@given(st.sampled_from([(2, 4), (3, 3), (5, 2), (2, 6), (7, 2)]), st.data())
def test_inverse_property(pk, data):
    F = gf.field_new(*pk)
    i = data.draw(st.integers(1, F.q - 1))
    a = gf.element_from_index(F, i)
    assert gf.mul(F, a, gf.inv(F, a)) == F.one
