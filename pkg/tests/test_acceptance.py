"""Acceptance gate: the exit criteria, verified exactly (zero tolerance).

Every test prints one `[PASS]`/`[FAIL]` line (pytest -s or look at the
captured output); each runs its full check before reporting so a
failure still names the criterion.
"""

import time
from itertools import product

from nsymm import (
    HopfFamily,
    NCPoly,
    QSPoly,
    coassociativity_defect,
    compositions_up_to,
    coproduct,
    counit_law_defects,
    d_from_delta,
    d_from_partial,
    delta_from_d,
    expand_u_in_z,
    expand_z_in_u,
    free_hs_extend,
    free_word_algebra,
    inner_derivation,
    is_derivation,
    is_hs,
    is_primitive,
    newton_p_explicit,
    newton_p_left,
    newton_p_right,
    operator_from_word_poly,
    partial_from_d,
    quasi_shuffle,
    quasi_shuffle_by_duality,
    taylor_hs,
    upper_triangular_algebra,
    u_of_z,
    verify_hs_qsymm,
    verify_iso,
    weight,
    z_in_pprime,
    z_in_pprime_via_c,
    z_of_u,
)

NS, LH = HopfFamily.NSYMM, HopfFamily.LIEHOPF


def check(ok, label):
    print(f"[{'PASS' if ok else 'FAIL'}] {label}")
    assert ok, label


def shipped_families():
    """The test-family catalog the derivation-calculus criteria quantify over."""
    families = [("taylor", taylor_hs(6))]
    A4 = free_word_algebra(4)
    families.append(
        ("free-extension exp sample", free_hs_extend({("x", 1): {"y": 1}}, A4))
    )
    families.append(
        (
            "free-extension generic sample",
            free_hs_extend(
                {("x", 1): {"y": 1}, ("x", 2): {"x": 1}, ("y", 1): {"xy": 1}, ("y", 3): {"x": 2}},
                A4,
            ),
        )
    )
    ut = upper_triangular_algebra(3)
    ad1 = inner_derivation(ut, {"E12": 1})
    ad2 = inner_derivation(ut, {"E23": 1, "E11": 2})
    families.append(("inner-derivation build", d_from_partial((ad1, ad2, ad1, ad2), ut)))
    return families


def test_criterion_01_newton_primitivity():
    start = time.perf_counter()
    ok = all(
        is_primitive(p(n, 8), NS, 8)
        for n in range(1, 9)
        for p in (newton_p_left, newton_p_right)
    )
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 10.0
    check(ok, f"criterion 1: P_n and P'_n primitive for n <= 8 ({elapsed:.2f}s < 10s)")


def test_criterion_02_closed_form_equals_recursion():
    ok = all(
        newton_p_explicit(n, 10) == newton_p_left(n, 10) for n in range(1, 11)
    )
    check(ok, "criterion 2: closed form == left recursion for n <= 10, exact")


def test_criterion_03_worked_example_and_two_paths():
    ok = z_in_pprime(2) == NCPoly({(2,): "1/2", (1, 1): "1/2"})
    ok = ok and all(z_in_pprime_via_c(n, 8) == z_in_pprime(n, 8) for n in range(1, 9))
    check(ok, "criterion 3: Z_2 = (P'_2 + P'_1^2)/2 and both expansion paths agree, n <= 8")


def test_criterion_04_denominators_needed():
    ok = all(not z_in_pprime(n, 8).is_integral() for n in range(2, 9))
    check(ok, "criterion 4: generator expansions are non-integral for 2 <= n <= 8")


def test_criterion_05_change_of_generators_is_iso():
    start = time.perf_counter()
    ok = all(
        expand_u_in_z(z_of_u(n, 8), 8) == NCPoly.generator(n)
        and expand_z_in_u(u_of_z(n, 8), 8) == NCPoly.generator(n)
        for n in range(1, 9)
    )
    report = verify_iso(6)
    ok = ok and report.passed
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60.0
    check(
        ok,
        f"criterion 5: Z<->U round-trips exact for n <= 8, coalgebra law for n <= 6 ({elapsed:.2f}s < 60s)",
    )


def test_criterion_06_newton_calculus_round_trip():
    ok = True
    for name, family in shipped_families():
        deltas = delta_from_d(family)
        ok = ok and all(is_derivation(d, family.algebra) for d in deltas)
        ok = ok and d_from_delta(deltas, family.algebra) == family
    check(ok, "criterion 6: delta extraction derives + exact reconstruction, all shipped families")


def test_criterion_07_log_exp_calculus_round_trip():
    ok = True
    for name, family in shipped_families():
        partials = partial_from_d(family)
        ok = ok and all(is_derivation(d, family.algebra) for d in partials)
        ok = ok and d_from_partial(partials, family.algebra) == family
    # arbitrary derivation sequences exponentiate to valid families
    ut = upper_triangular_algebra(3)
    ads = [
        inner_derivation(ut, {"E12": 1}),
        inner_derivation(ut, {"E23": 1}),
        inner_derivation(ut, {"E13": "1/2", "E22": 3}),
        inner_derivation(ut, {"E12": -2, "E23": 1}),
        inner_derivation(ut, {"E11": 1}),
        inner_derivation(ut, {"E12": 1, "E13": 1}),
    ]
    built = d_from_partial(ads, ut)
    ok = ok and is_hs(built.algebra, built.maps)
    check(ok, "criterion 7: partial calculus round-trips; any derivation sequence builds a valid family")


def test_criterion_08_qsymm_family_and_duality():
    report = verify_hs_qsymm(6)
    ok = report.passed
    basis = compositions_up_to(6)
    for a, b in product(basis, repeat=2):
        if weight(a) + weight(b) > 6:
            continue
        ma, mb = QSPoly.monomial(a), QSPoly.monomial(b)
        if quasi_shuffle(ma, mb, 6) != quasi_shuffle_by_duality(ma, mb, 6):
            ok = False
            break
    check(ok, "criterion 8: dual family satisfies the convolution law; shuffle == duality oracle, weight <= 6")


def test_criterion_09_hopf_laws():
    import random

    ok = True
    words = compositions_up_to(6)
    for family in (NS, LH):
        for w in words:
            p = NCPoly.word(w)
            if coassociativity_defect(p, family, 6):
                ok = False
            left, right = counit_law_defects(p, family, 6)
            if left or right:
                ok = False
        for i in range(1, 6):
            for j in range(1, 7 - i):
                p, q = NCPoly.generator(i), NCPoly.generator(j)
                if coproduct(p * q, family, 6) != coproduct(p, family, 6) * coproduct(q, family, 6):
                    ok = False
        rng = random.Random(90210)
        for _ in range(6):
            terms_p = {rng.choice(words[:32]): rng.randint(-3, 3) for _ in range(2)}
            p = NCPoly({k: v for k, v in terms_p.items() if sum(k) <= 3})
            terms_q = {rng.choice(words[:32]): rng.randint(-3, 3) for _ in range(2)}
            q = NCPoly({k: v for k, v in terms_q.items() if sum(k) <= 3})
            if coproduct(p * q, family, 6) != coproduct(p, family, 6) * coproduct(q, family, 6):
                ok = False
    check(ok, "criterion 9: coassociativity, counit laws, multiplicativity up to degree 6, both families")


def test_criterion_10_symbolic_operator_agreement():
    A = free_word_algebra(5)
    family = free_hs_extend(
        {("x", 1): {"y": 1}, ("x", 2): {"x": 1}, ("y", 1): {"xy": 1}, ("y", 3): {"x": 2, "yy": -1}},
        A,
    )
    deltas = delta_from_d(family)
    ok = all(
        operator_from_word_poly(z_in_pprime(n, 8), deltas, A.dim) == family.d(n)
        for n in range(1, 6)
    )
    check(ok, "criterion 10: generator expansions act as operators exactly like d_n, n <= 5")
