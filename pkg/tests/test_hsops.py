from fractions import Fraction

import pytest

from nsymm import (
    HSFamily,
    LinMap,
    NotADerivationError,
    TestAlgebra,
    d_from_delta,
    d_from_partial,
    delta_from_d,
    derivation_defect,
    free_hs_extend,
    free_word_algebra,
    hs_defect,
    inner_derivation,
    is_derivation,
    is_hs,
    operator_from_word_poly,
    partial_from_d,
    taylor_hs,
    truncated_polynomial_algebra,
    upper_triangular_algebra,
    u_of_z,
    z_in_pprime,
)
from nsymm.hsops import ddx_matrix

F = Fraction


# --- algebra construction ---------------------------------------------------


def test_truncated_polynomial_algebra():
    A = truncated_polynomial_algebra(3)
    assert A.dim == 4
    assert A.labels == ("1", "x", "x^2", "x^3")
    x = A.element({"x": 1})
    x2 = A.mul(x, x)
    assert x2 == A.element({"x^2": 1})
    assert A.mul(x2, x2) == A.zero()  # x^4 == 0


def test_upper_triangular_algebra():
    A = upper_triangular_algebra(2)
    assert A.dim == 3
    e12 = A.element({"E12": 1})
    assert A.mul(e12, e12) == A.zero()
    assert A.mul(A.element({"E11": 1}), e12) == e12
    assert A.mul(e12, A.element({"E11": 1})) == A.zero()


def test_free_word_algebra():
    A = free_word_algebra(2)
    assert A.dim == 7  # 1, x, y, xx, xy, yx, yy
    xy = A.mul(A.element({"x": 1}), A.element({"y": 1}))
    assert xy == A.element({"xy": 1})
    assert A.mul(xy, A.element({"x": 1})) == A.zero()  # overflows the cutoff


def test_association_failure_is_caught():
    # a*a = b, a*b = 1 is not associative: (aa)b = b^2 = 0 but a(ab) = a
    products = {
        (0, 0): (1, 0, 0), (0, 1): (0, 1, 0), (0, 2): (0, 0, 1),
        (1, 0): (0, 1, 0), (2, 0): (0, 0, 1),
        (1, 1): (0, 0, 1), (1, 2): (1, 0, 0),
    }
    with pytest.raises(ValueError, match="associativity"):
        TestAlgebra.from_products(("1", "a", "b"), (1, 0, 0), products)


def test_unit_failure_is_caught():
    products = {(0, 0): (1, 0), (0, 1): (0, 1), (1, 0): (0, 1), (1, 1): (0, 0)}
    with pytest.raises(ValueError, match="unit"):
        TestAlgebra.from_products(("1", "a"), (0, 1), products)


def test_element_coercion():
    A = truncated_polynomial_algebra(2)
    assert A.element(["1/2", 0, 3]) == (F(1, 2), F(0), F(3))
    with pytest.raises(ValueError):
        A.element({"nope": 1})
    with pytest.raises(ValueError):
        A.element([1, 2])


# --- derivation checks ------------------------------------------------------


def test_zero_map_is_derivation():
    A = upper_triangular_algebra(3)
    assert is_derivation(LinMap.zero(A.dim), A)


def test_identity_is_not_derivation():
    A = truncated_polynomial_algebra(2)
    d = LinMap.identity(A.dim)
    assert not is_derivation(d, A)
    assert derivation_defect(d, A) == (0, 0)  # id(1*1) = 1 but the law gives 2


def test_inner_derivations():
    A = upper_triangular_algebra(2)
    for element in ({"E12": 1}, {"E11": 2, "E12": -1}, {"E22": "1/3"}):
        assert is_derivation(inner_derivation(A, element), A)


def test_plain_ddx_is_not_a_derivation_on_the_quotient():
    # the top-degree Leibniz pair breaks: d(x * x^t) = 0 but the law gives
    # (t+1) x^t != 0, which is why the shipped Taylor family uses x^2 d/dx
    for trunc in (1, 4, 6):
        A = truncated_polynomial_algebra(trunc)
        assert not is_derivation(ddx_matrix(trunc), A)


# --- the Taylor family ------------------------------------------------------


def symbolic_substitution_family(trunc, n, k):
    """Oracle: coefficient of t^n in (x/(1-tx))^k, truncated at x^trunc."""
    # (x/(1-tx))^k = sum_{m>=0} C(k+m-1, m) x^(k+m) t^m
    from math import comb

    if k == 0:
        return {0: F(1)} if n == 0 else {}
    degree = k + n
    if degree > trunc:
        return {}
    return {degree: F(comb(k + n - 1, n))}


def test_taylor_values_match_oracle():
    fam = taylor_hs(6)
    for n in range(1, 7):
        for k in range(7):
            column = fam.d(n).columns[k]
            expected = symbolic_substitution_family(6, n, k)
            assert {i: c for i, c in enumerate(column) if c} == expected


def test_taylor_small_values():
    fam = taylor_hs(6)
    x2 = fam.algebra.element({"x^2": 1})
    assert fam.d(1).apply(x2) == fam.algebra.element({"x^3": 2})
    assert fam.d(2).apply(x2) == fam.algebra.element({"x^4": 3})
    assert fam.d(1).apply(fam.algebra.unit) == fam.algebra.zero()


def test_taylor_is_hs():
    fam = taylor_hs(5)
    assert is_hs(fam.algebra, fam.maps)


def test_perturbed_family_reports_witness():
    fam = taylor_hs(6)
    maps = list(fam.maps)
    columns = [list(col) for col in maps[1].columns]
    columns[3] = tuple(c + 1 for c in columns[3])
    maps[1] = LinMap(tuple(tuple(col) for col in [tuple(c) for c in columns]))
    defect = hs_defect(fam.algebra, maps)
    assert defect is not None
    n, i, j = defect
    assert n >= 1 and 0 <= i < 7 and 0 <= j < 7
    with pytest.raises(ValueError, match="law fails"):
        HSFamily(fam.algebra, tuple(maps))


def x2ddx(trunc):
    # the derivation x^2 d/dx: x^k -> k x^(k+1)
    return LinMap(
        tuple(
            tuple(F(k) if t == k + 1 else F(0) for t in range(trunc + 1))
            for k in range(trunc + 1)
        )
    )


def test_delta_extraction_on_taylor():
    fam = taylor_hs(6)
    deltas = delta_from_d(fam)
    assert deltas[0] == x2ddx(6)
    assert all(d.is_zero() for d in deltas[1:])
    assert all(is_derivation(d, fam.algebra) for d in deltas)


def test_partial_extraction_on_taylor():
    fam = taylor_hs(6)
    partials = partial_from_d(fam)
    assert partials[0] == x2ddx(6)
    assert all(d.is_zero() for d in partials[1:])


def test_build_from_single_derivation_recovers_taylor():
    A = truncated_polynomial_algebra(6)
    deltas = (x2ddx(6),) + tuple(LinMap.zero(7) for _ in range(5))
    assert d_from_delta(deltas, A) == taylor_hs(6)
    assert d_from_partial(deltas, A) == taylor_hs(6)


def test_zero_inputs_give_zero_family():
    A = upper_triangular_algebra(3)
    zeros = tuple(LinMap.zero(A.dim) for _ in range(4))
    fam = d_from_delta(zeros, A)
    assert all(m.is_zero() for m in fam.maps)
    assert delta_from_d(fam) == zeros
    assert partial_from_d(fam) == zeros
    assert d_from_partial(zeros, A) == fam


def test_non_derivation_is_rejected():
    A = truncated_polynomial_algebra(4)
    bad = (ddx_matrix(4),)
    with pytest.raises(NotADerivationError):
        d_from_delta(bad, A)
    with pytest.raises(NotADerivationError):
        d_from_partial(bad, A)


# --- round-trips on noncommutative algebras ---------------------------------


@pytest.fixture(scope="module")
def inner_family():
    A = upper_triangular_algebra(3)
    ad1 = inner_derivation(A, {"E12": 1})
    ad2 = inner_derivation(A, {"E23": 1, "E11": 2})
    assert ad1 @ ad2 != ad2 @ ad1  # order sensitivity is really exercised
    return d_from_partial((ad1, ad2, ad1, ad2), A)


def test_arbitrary_derivations_exponentiate_to_hs(inner_family):
    assert is_hs(inner_family.algebra, inner_family.maps)


def test_delta_round_trip(inner_family):
    deltas = delta_from_d(inner_family)
    assert all(is_derivation(d, inner_family.algebra) for d in deltas)
    assert d_from_delta(deltas, inner_family.algebra) == inner_family


def test_partial_round_trip(inner_family):
    partials = partial_from_d(inner_family)
    assert all(is_derivation(d, inner_family.algebra) for d in partials)
    assert d_from_partial(partials, inner_family.algebra) == inner_family


def test_degree_one_extractions_agree(inner_family):
    assert delta_from_d(inner_family)[0] == inner_family.d(1)
    assert partial_from_d(inner_family)[0] == inner_family.d(1)


# --- free extension ---------------------------------------------------------


def test_free_extend_zero():
    A = free_word_algebra(3)
    fam = free_hs_extend({}, A)
    assert fam.order == 3
    assert all(m.is_zero() for m in fam.maps)


def test_free_extend_exponential_sample():
    # d_1(x) = y and nothing else: the family is exp of one derivation,
    # so the second Newton extraction vanishes
    A = free_word_algebra(4)
    fam = free_hs_extend({("x", 1): {"y": 1}}, A)
    deltas = delta_from_d(fam)
    assert not deltas[0].is_zero()
    assert deltas[1].is_zero()
    d1 = fam.d(1)
    xx = A.element({"xx": 1})
    assert d1.apply(xx) == A.element({"yx": 1, "xy": 1})


def test_free_extend_non_exponential_sample():
    A = free_word_algebra(4)
    fam = free_hs_extend({("x", 1): {"y": 1}, ("x", 2): {"x": 1}}, A)
    deltas = delta_from_d(fam)
    assert not deltas[1].is_zero()
    assert all(is_derivation(d, A) for d in deltas)
    assert d_from_delta(deltas, A) == fam


def test_free_extend_rejects_unit_component():
    A = free_word_algebra(3)
    with pytest.raises(ValueError, match="unit"):
        free_hs_extend({("x", 1): {"1": 1}}, A)


def test_free_extend_rejects_non_word_algebra():
    A = truncated_polynomial_algebra(3)
    with pytest.raises(ValueError, match="word algebra"):
        free_hs_extend({}, A)


def test_free_extend_rejects_unknown_generator():
    A = free_word_algebra(3)
    with pytest.raises(ValueError, match="unknown generator"):
        free_hs_extend({("z", 1): {"x": 1}}, A)


# --- symbolic/operator bridge -----------------------------------------------


@pytest.fixture(scope="module")
def bridge_family():
    A = free_word_algebra(4)
    return free_hs_extend(
        {("x", 1): {"y": 1}, ("x", 2): {"x": 1}, ("y", 1): {"xy": 1}, ("y", 3): {"x": 2}},
        A,
    )


def test_operator_words_reproduce_family(bridge_family):
    deltas = delta_from_d(bridge_family)
    dim = bridge_family.algebra.dim
    for n in range(1, 5):
        assert operator_from_word_poly(z_in_pprime(n), deltas, dim) == bridge_family.d(n)


def test_log_series_acts_like_partial_extraction(bridge_family):
    partials = partial_from_d(bridge_family)
    dim = bridge_family.algebra.dim
    for n in range(1, 5):
        assert operator_from_word_poly(u_of_z(n), bridge_family.maps, dim) == partials[n - 1]


def test_family_accessors(inner_family):
    assert inner_family.order == 4
    assert inner_family.d(0) == LinMap.identity(inner_family.algebra.dim)
    assert inner_family.d(2) == inner_family.maps[1]
