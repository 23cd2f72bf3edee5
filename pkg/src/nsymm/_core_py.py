"""Hot-loop kernels over raw term maps, pure-Python edition.

A raw term map is a plain dict from an opaque hashable key (a word
tuple, or a pair of word tuples for tensors) to a normalized rational
pair ``(num, den)``: arbitrary-precision ints, ``den >= 1``,
``gcd(num, den) == 1``, and no stored pair has ``num == 0``.

``nsymm._core`` is the compiled twin of this module; the two must stay
behaviorally identical (tests/test_backends.py checks them against each
other).  Everything here is exact integer arithmetic — no floats.
"""

from math import gcd


def rat_norm(num, den):
    """Reduce num/den to canonical form (den >= 1, lowest terms)."""
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    if num == 0:
        return (0, 1)
    if den < 0:
        num, den = -num, -den
    g = gcd(num, den)
    if g > 1:
        num //= g
        den //= g
    return (num, den)


def rat_add(a, b):
    an, ad = a
    bn, bd = b
    n = an * bd + bn * ad
    if n == 0:
        return (0, 1)
    d = ad * bd
    g = gcd(n, d)
    return (n // g, d // g)


def rat_mul(a, b):
    an, ad = a
    bn, bd = b
    if an == 0 or bn == 0:
        return (0, 1)
    g1 = gcd(an, bd)
    g2 = gcd(bn, ad)
    return ((an // g1) * (bn // g2), (ad // g2) * (bd // g1))


def add_terms(a, b):
    if not b:
        return dict(a)
    if not a:
        return dict(b)
    out = dict(a)
    for k, v in b.items():
        p = out.get(k)
        if p is None:
            out[k] = v
        else:
            n = p[0] * v[1] + v[0] * p[1]
            if n == 0:
                del out[k]
            else:
                d = p[1] * v[1]
                g = gcd(n, d)
                out[k] = (n // g, d // g)
    return out


def sub_terms(a, b):
    out = dict(a)
    for k, v in b.items():
        p = out.get(k)
        if p is None:
            out[k] = (-v[0], v[1])
        else:
            n = p[0] * v[1] - v[0] * p[1]
            if n == 0:
                del out[k]
            else:
                d = p[1] * v[1]
                g = gcd(n, d)
                out[k] = (n // g, d // g)
    return out


def neg_terms(a):
    return {k: (-v[0], v[1]) for k, v in a.items()}


def scale_terms(a, c):
    cn, cd = c
    if cn == 0:
        return {}
    out = {}
    for k, v in a.items():
        vn, vd = v
        g1 = gcd(vn, cd)
        g2 = gcd(cn, vd)
        out[k] = ((vn // g1) * (cn // g2), (vd // g2) * (cd // g1))
    return out


def add_scaled_into(acc, terms, c):
    """acc += c * terms, in place; acc stays canonical."""
    cn, cd = c
    if cn == 0 or not terms:
        return
    for k, v in terms.items():
        vn, vd = v
        g1 = gcd(vn, cd)
        g2 = gcd(cn, vd)
        wn = (vn // g1) * (cn // g2)
        wd = (vd // g2) * (cd // g1)
        p = acc.get(k)
        if p is None:
            acc[k] = (wn, wd)
        else:
            n = p[0] * wd + wn * p[1]
            if n == 0:
                del acc[k]
            else:
                d = p[1] * wd
                g = gcd(n, d)
                acc[k] = (n // g, d // g)


def mul_word_terms(a, b):
    """Bilinear concatenation product of word-keyed term maps."""
    out = {}
    for ka, va in a.items():
        an, ad = va
        for kb, vb in b.items():
            g1 = gcd(an, vb[1])
            g2 = gcd(vb[0], ad)
            wn = (an // g1) * (vb[0] // g2)
            wd = (ad // g2) * (vb[1] // g1)
            k = ka + kb
            p = out.get(k)
            if p is None:
                out[k] = (wn, wd)
            else:
                n = p[0] * wd + wn * p[1]
                if n == 0:
                    del out[k]
                else:
                    d = p[1] * wd
                    g = gcd(n, d)
                    out[k] = (n // g, d // g)
    return out


def mul_tensor_terms(a, b):
    """Componentwise concatenation product of pair-keyed term maps."""
    out = {}
    for ka, va in a.items():
        an, ad = va
        la, ra = ka
        for kb, vb in b.items():
            g1 = gcd(an, vb[1])
            g2 = gcd(vb[0], ad)
            wn = (an // g1) * (vb[0] // g2)
            wd = (ad // g2) * (vb[1] // g1)
            k = (la + kb[0], ra + kb[1])
            p = out.get(k)
            if p is None:
                out[k] = (wn, wd)
            else:
                n = p[0] * wd + wn * p[1]
                if n == 0:
                    del out[k]
                else:
                    d = p[1] * wd
                    g = gcd(n, d)
                    out[k] = (n // g, d // g)
    return out


def quasi_shuffle_words(u, v):
    """Overlapping shuffle of two compositions; integer coefficients."""
    if not u:
        return {v: (1, 1)}
    if not v:
        return {u: (1, 1)}
    out = {}
    for head, sub in (
        (u[:1], quasi_shuffle_words(u[1:], v)),
        (v[:1], quasi_shuffle_words(u, v[1:])),
        ((u[0] + v[0],), quasi_shuffle_words(u[1:], v[1:])),
    ):
        for k, c in sub.items():
            kk = head + k
            p = out.get(kk)
            out[kk] = (p[0] + c[0], 1) if p is not None else c
    return out
