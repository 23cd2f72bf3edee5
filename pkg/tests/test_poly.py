from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nsymm import NCPoly, Tensor2, is_integral, ncp_add, ncp_mul, ncp_scale, tensor_mul

Z1 = NCPoly.generator(1)
Z2 = NCPoly.generator(2)

words = st.lists(st.integers(1, 4), max_size=3).map(tuple)
coeffs = st.fractions(min_value=-40, max_value=40, max_denominator=12)
polys = st.dictionaries(words, coeffs, max_size=4).map(NCPoly)


def test_add_cancels_to_zero():
    assert Z1 + (-1) * Z1 == NCPoly.zero()
    assert not (Z1 - Z1)
    assert len(Z1 - Z1) == 0


def test_scale():
    assert ncp_scale(Fraction(1, 2), 2 * Z2) == Z2
    assert ncp_scale(0, Z2) == NCPoly.zero()
    assert (2 * Z2) / 2 == Z2
    with pytest.raises(ZeroDivisionError):
        Z1 / 0


def test_mixed_degrees():
    p = Z1 + Z1 * Z1
    assert len(p) == 2
    assert p.degree == 2
    assert sorted(map(len, p.support())) == [1, 2]


def test_mul_is_concatenation():
    assert Z1 * Z2 == NCPoly.word((1, 2))
    q = NCPoly.one() + Z1
    assert q * q == NCPoly.one() + 2 * Z1 + NCPoly.word((1, 1))


def test_noncommutativity_witness():
    assert Z1 * Z2 != Z2 * Z1


def test_canonical_form_idempotent():
    p = NCPoly({(1,): Fraction(1, 3), (2, 1): Fraction(-4, 6)})
    again = NCPoly(dict(p.items()))
    assert again == p
    assert p.coeff((2, 1)) == Fraction(-2, 3)
    # zero coefficients are never stored
    q = NCPoly({(1,): 0, (2,): 1})
    assert q.support() == ((2,),)


def test_degree_of_zero_and_scalar():
    assert NCPoly.zero().degree == -1
    assert NCPoly.scalar("5/2").degree == 0
    assert NCPoly.scalar("5/2").constant_term() == Fraction(5, 2)


def test_is_integral():
    assert is_integral(NCPoly({(2,): 2, (1, 1): -1}))
    assert not is_integral(NCPoly({(2,): "1/2"}))
    assert is_integral(NCPoly.zero())


def test_pow():
    p = NCPoly.one() + Z1
    assert p**0 == NCPoly.one()
    assert p**2 == p * p


def test_reverse_words():
    p = NCPoly({(1, 2): 1, (3,): 2})
    assert p.reverse_words() == NCPoly({(2, 1): 1, (3,): 2})


def test_substitute_identity_and_doubling():
    p = NCPoly({(1, 2): 3, (2,): "1/2", (): 1})
    assert p.substitute(NCPoly.generator) == p
    doubled = p.substitute(lambda k: 2 * NCPoly.generator(k))
    assert doubled.coeff((1, 2)) == 12
    assert doubled.coeff((2,)) == 1
    assert doubled.coeff(()) == 1


def test_bad_inputs():
    with pytest.raises(ValueError):
        NCPoly({(0,): 1})
    with pytest.raises(TypeError):
        NCPoly({(1,): 1.5})
    with pytest.raises(ValueError):
        NCPoly.generator(0)


@settings(max_examples=60)
@given(polys, polys, polys)
def test_mul_associative_and_unital(p, q, r):
    assert (p * q) * r == p * (q * r)
    one = NCPoly.one()
    assert one * p == p
    assert p * one == p


@given(polys, polys)
def test_add_commutes_mul_distributes(p, q):
    assert p + q == q + p
    r = Z1 + Z2
    assert r * (p + q) == r * p + r * q


# --- tensor square ---------------------------------------------------------


def t(left, right, coeff=1):
    return Tensor2({(tuple(left), tuple(right)): coeff})


def test_tensor_products():
    assert t((1,), ()) * t((), (1,)) == t((1,), (1,))
    assert t((), (1,)) * t((1,), ()) == t((1,), (1,))
    s = t((1,), ()) + t((), (1,))
    assert s * s == t((1, 1), ()) + 2 * t((1,), (1,)) + t((), (1, 1))


def test_tensor_outer_and_unit():
    p = Z1 + 2 * Z2
    assert Tensor2.outer(p, NCPoly.one()) == t((1,), ()) + 2 * t((2,), ())
    assert tensor_mul(Tensor2.one(), t((2,), (1,))) == t((2,), (1,))
    assert t((2,), (1,)).degree == 3


tensors = st.dictionaries(st.tuples(words, words), coeffs, max_size=3).map(Tensor2)


@settings(max_examples=40)
@given(tensors, tensors, tensors)
def test_tensor_mul_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


def test_functional_aliases():
    assert ncp_add(Z1, Z2) == Z1 + Z2
    assert ncp_mul(Z1, Z2) == Z1 * Z2
