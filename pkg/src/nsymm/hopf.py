"""The two coproducts, the counit, and primitivity testing.

NSYMM sends the degree-n generator to sum_{i+j=n} Z_i (x) Z_j (index 0
meaning the unit); LIEHOPF makes every generator primitive.  Both
extend to words multiplicatively and to polynomials linearly, which is
exactly how :func:`coproduct` computes them.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache

from ._backend import kernels as _k
from .config import resolve_limit, DegreeOverflowError
from .poly import NCPoly, Tensor2


class HopfFamily(enum.Enum):
    NSYMM = "nsymm"
    LIEHOPF = "liehopf"


@lru_cache(maxsize=None)
def _generator_coproduct(n: int, family: HopfFamily) -> dict:
    if family is HopfFamily.NSYMM:
        terms = {}
        for i in range(n + 1):
            left = (i,) if i else ()
            right = (n - i,) if n - i else ()
            terms[(left, right)] = (1, 1)
        return terms
    return {((n,), ()): (1, 1), ((), (n,)): (1, 1)}


@lru_cache(maxsize=65536)
def _word_coproduct(word, family: HopfFamily) -> dict:
    if not word:
        return {((), ()): (1, 1)}
    out = _generator_coproduct(word[0], family)
    for letter in word[1:]:
        out = _k.mul_tensor_terms(out, _generator_coproduct(letter, family))
    return out


def _check_degree(p: NCPoly, max_degree):
    bound = resolve_limit(max_degree)
    if p.degree > bound:
        raise DegreeOverflowError(
            f"polynomial degree {p.degree} exceeds the degree limit {bound}"
        )


def coproduct(p: NCPoly, family: HopfFamily, max_degree=None) -> Tensor2:
    """Comultiplication, as an algebra morphism into the tensor square."""
    _check_degree(p, max_degree)
    acc: dict = {}
    for word, pair in p._terms.items():
        _k.add_scaled_into(acc, _word_coproduct(word, family), pair)
    return Tensor2._raw(acc)


def counit(p: NCPoly) -> Fraction:
    """The coefficient of the empty word."""
    return p.constant_term()


def primitivity_defect(p: NCPoly, family: HopfFamily, max_degree=None) -> Tensor2:
    """coproduct(p) - p (x) 1 - 1 (x) p; zero exactly when p is primitive."""
    defect = coproduct(p, family, max_degree)
    unit = NCPoly.one()
    return defect - Tensor2.outer(p, unit) - Tensor2.outer(unit, p)


def is_primitive(p: NCPoly, family: HopfFamily, max_degree=None) -> bool:
    return not primitivity_defect(p, family, max_degree)


def coassociativity_defect(p: NCPoly, family: HopfFamily, max_degree=None) -> dict:
    """(mu (x) id)mu(p) - (id (x) mu)mu(p) on triple-word keys.

    Returns a dict (a, b, c) -> Fraction of the nonzero discrepancies;
    empty means coassociativity holds for p.
    """
    two = coproduct(p, family, max_degree)
    acc: dict = {}
    for (left, right), pair in two._terms.items():
        for (a, b), inner in _word_coproduct(left, family).items():
            _k.add_scaled_into(acc, {(a, b, right): inner}, pair)
        for (b, c), inner in _word_coproduct(right, family).items():
            _k.add_scaled_into(acc, {(left, b, c): (-inner[0], inner[1])}, pair)
    return {key: Fraction(*pair) for key, pair in acc.items()}


def counit_law_defects(p: NCPoly, family: HopfFamily, max_degree=None):
    """Residuals of (eps (x) id)mu(p) = p = (id (x) eps)mu(p).

    Returns the pair of NCPoly residuals (left law, right law); both are
    zero exactly when the counit laws hold for p.
    """
    two = coproduct(p, family, max_degree)
    left_acc: dict = {}
    right_acc: dict = {}
    for (left, right), pair in two._terms.items():
        if not left:
            _k.add_scaled_into(left_acc, {right: (1, 1)}, pair)
        if not right:
            _k.add_scaled_into(right_acc, {left: (1, 1)}, pair)
    recovered_left = NCPoly._raw(left_acc)
    recovered_right = NCPoly._raw(right_acc)
    return recovered_left - p, recovered_right - p
