"""Noncommutative polynomials and tensor squares over exact rationals.

An :class:`NCPoly` is a finite rational-linear combination of words
(compositions); the product is bilinear word concatenation, so this is
the free associative algebra.  The same container serves every word
alphabet in this package (Z, U, P'); which alphabet a value lives in is
a property of the operation that produced it, not of the container.

A :class:`Tensor2` is a combination of *pairs* of words: an element of
the tensor square, with the componentwise product
(v (x) w)(v' (x) w') = vv' (x) ww'.

Values are immutable after construction; all operations return fresh
objects.  Internally coefficients are normalized (num, den) int pairs
handled by the kernel backend; the public face is fractions.Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ._backend import kernels as _k
from .words import check_composition, term_order_key, weight


def coeff_pair(value) -> tuple[int, int]:
    """Coerce an int / Fraction / "n/d" string / (num, den) pair."""
    if isinstance(value, int) and not isinstance(value, bool):
        return (value, 1)
    if isinstance(value, Fraction):
        return (value.numerator, value.denominator)
    if isinstance(value, str):
        f = Fraction(value)
        return (f.numerator, f.denominator)
    if isinstance(value, tuple) and len(value) == 2:
        return _k.rat_norm(int(value[0]), int(value[1]))
    raise TypeError(f"not an exact rational: {value!r}")


def _fraction(pair) -> Fraction:
    # pairs are already normalized; Fraction re-checks cheaply
    return Fraction(pair[0], pair[1])


class _TermMap:
    """Shared plumbing for canonical linear combinations."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        mapping = {} if terms is None else dict(terms)
        clean = {}
        for key, value in mapping.items():
            pair = coeff_pair(value)
            if pair[0] != 0:
                clean[self._check_key(key)] = pair
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict):
        # internal fast path: terms already canonical
        self = object.__new__(cls)
        self._terms = terms
        return self

    @classmethod
    def zero(cls):
        return cls._raw({})

    @staticmethod
    def _check_key(key):
        raise NotImplementedError

    @staticmethod
    def _sort_key(key):
        raise NotImplementedError

    def items(self):
        """Term-ordered list of (key, Fraction) pairs."""
        return [
            (key, _fraction(self._terms[key]))
            for key in sorted(self._terms, key=self._sort_key)
        ]

    def support(self):
        return tuple(sorted(self._terms, key=self._sort_key))

    def coeff(self, key) -> Fraction:
        pair = self._terms.get(self._check_key(key))
        return _fraction(pair) if pair is not None else Fraction(0)

    def is_integral(self) -> bool:
        """True iff every coefficient has denominator 1."""
        return all(pair[1] == 1 for pair in self._terms.values())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self._terms.items())))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)._raw(_k.add_terms(self._terms, other._terms))

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)._raw(_k.sub_terms(self._terms, other._terms))

    def __neg__(self):
        return type(self)._raw(_k.neg_terms(self._terms))

    def scale(self, value):
        return type(self)._raw(_k.scale_terms(self._terms, coeff_pair(value)))

    def __rmul__(self, value):
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return self.scale(value)
        return NotImplemented

    def __truediv__(self, value):
        pair = coeff_pair(value)
        if pair[0] == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self.scale((pair[1], pair[0]))

    def __repr__(self):
        body = " + ".join(
            f"{coeff}*{list(key)}" for key, coeff in self.items()
        )
        return f"{type(self).__name__}({body or '0'})"


class NCPoly(_TermMap):
    """Element of the free associative algebra on positive-integer letters."""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        return check_composition(key)

    @staticmethod
    def _sort_key(key):
        return term_order_key(key)

    @classmethod
    def one(cls):
        return cls._raw({(): (1, 1)})

    @classmethod
    def scalar(cls, value):
        pair = coeff_pair(value)
        return cls._raw({(): pair} if pair[0] else {})

    @classmethod
    def word(cls, parts, coefficient=1):
        pair = coeff_pair(coefficient)
        if pair[0] == 0:
            return cls.zero()
        return cls._raw({check_composition(parts): pair})

    @classmethod
    def generator(cls, n: int):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"generator index must be an integer >= 1, got {n!r}")
        return cls._raw({(n,): (1, 1)})

    @property
    def degree(self) -> int:
        """Max weight over stored words; -1 for the zero polynomial."""
        return max(map(weight, self._terms), default=-1)

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return NCPoly._raw(_k.mul_word_terms(self._terms, other._terms))
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be an integer >= 0")
        result = NCPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def constant_term(self) -> Fraction:
        return self.coeff(())

    def reverse_words(self) -> "NCPoly":
        """Reverse every word (the concatenation anti-automorphism)."""
        return NCPoly._raw({key[::-1]: pair for key, pair in self._terms.items()})

    def substitute(self, images) -> "NCPoly":
        """Apply the algebra morphism sending letter n to images(n).

        ``images`` is a callable or mapping from letter to NCPoly; the
        image of a word is the product of its letters' images.
        """
        lookup = images.__getitem__ if isinstance(images, Mapping) else images
        acc: dict = {}
        for word, pair in self._terms.items():
            product = _ONE_TERMS
            for letter in word:
                product = _k.mul_word_terms(product, lookup(letter)._terms)
            _k.add_scaled_into(acc, product, pair)
        return NCPoly._raw(acc)


_ONE_TERMS = {(): (1, 1)}


class Tensor2(_TermMap):
    """Element of the tensor square of the free algebra."""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        left, right = key
        return (check_composition(left), check_composition(right))

    @staticmethod
    def _sort_key(key):
        return (term_order_key(key[0]), term_order_key(key[1]))

    @classmethod
    def one(cls):
        return cls._raw({((), ()): (1, 1)})

    @classmethod
    def outer(cls, left: NCPoly, right: NCPoly):
        """The tensor product left (x) right."""
        out: dict = {}
        for lw, lp in left._terms.items():
            for rw, rp in right._terms.items():
                out[(lw, rw)] = _k.rat_mul(lp, rp)
        return cls._raw(out)

    @property
    def degree(self) -> int:
        """Max total weight over stored pairs; -1 for zero."""
        return max((weight(l) + weight(r) for l, r in self._terms), default=-1)

    def __mul__(self, other):
        if isinstance(other, Tensor2):
            return Tensor2._raw(_k.mul_tensor_terms(self._terms, other._terms))
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented


def ncp_add(p: NCPoly, q: NCPoly) -> NCPoly:
    return p + q


def ncp_scale(value, p: NCPoly) -> NCPoly:
    return p.scale(value)


def ncp_mul(p: NCPoly, q: NCPoly) -> NCPoly:
    return p * q


def tensor_mul(s: Tensor2, t: Tensor2) -> Tensor2:
    return s * t


def is_integral(p) -> bool:
    return p.is_integral()
