# cython: language_level=3
"""Compiled twin of nsymm._core_py — same contract, same semantics.

Coefficients stay arbitrary-precision Python ints; the win comes from
compiling the merge loops and from a C fast path for gcd when both
operands fit in 64 bits (they almost always do), with a transparent
fallback to math.gcd beyond that.
"""

from cpython.long cimport PyLong_AsLongLongAndOverflow
from libc.limits cimport LLONG_MIN

from math import gcd as _py_gcd


cdef inline long long _ll_gcd(long long a, long long b):
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef object gcd(object a, object b):
    cdef int of_a = 0, of_b = 0
    cdef long long la, lb
    la = PyLong_AsLongLongAndOverflow(a, &of_a)
    if of_a == 0 and la != LLONG_MIN:
        lb = PyLong_AsLongLongAndOverflow(b, &of_b)
        if of_b == 0 and lb != LLONG_MIN:
            return _ll_gcd(la, lb)
    return _py_gcd(a, b)


cdef object _ONE = 1


def rat_norm(num, den):
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
    cdef object an = a[0], ad = a[1], bn = b[0], bd = b[1]
    n = an * bd + bn * ad
    if n == 0:
        return (0, 1)
    d = ad * bd
    g = gcd(n, d)
    return (n // g, d // g)


def rat_mul(a, b):
    cdef object an = a[0], ad = a[1], bn = b[0], bd = b[1]
    if an == 0 or bn == 0:
        return (0, 1)
    g1 = gcd(an, bd)
    g2 = gcd(bn, ad)
    return ((an // g1) * (bn // g2), (ad // g2) * (bd // g1))


cdef inline void _acc_pair(dict out, object k, object wn, object wd):
    # out[k] += wn/wd, dropping exact zeros
    cdef tuple p = <tuple> out.get(k)
    if p is None:
        out[k] = (wn, wd)
        return
    pd = p[1]
    if pd is _ONE and wd is _ONE:  # integer fast path
        n = p[0] + wn
        if n == 0:
            del out[k]
        else:
            out[k] = (n, _ONE)
        return
    n = p[0] * wd + wn * pd
    if n == 0:
        del out[k]
    else:
        d = pd * wd
        g = gcd(n, d)
        out[k] = (n // g, d // g)


def add_terms(dict a, dict b):
    if not b:
        return dict(a)
    if not a:
        return dict(b)
    cdef dict out = dict(a)
    cdef tuple v
    for k, v in b.items():
        _acc_pair(out, k, v[0], v[1])
    return out


def sub_terms(dict a, dict b):
    cdef dict out = dict(a)
    cdef tuple v
    for k, v in b.items():
        _acc_pair(out, k, -v[0], v[1])
    return out


def neg_terms(dict a):
    cdef dict out = {}
    cdef tuple v
    for k, v in a.items():
        out[k] = (-v[0], v[1])
    return out


def scale_terms(dict a, c):
    cdef object cn = c[0], cd = c[1]
    if cn == 0:
        return {}
    cdef dict out = {}
    cdef tuple v
    for k, v in a.items():
        vn = v[0]
        vd = v[1]
        g1 = gcd(vn, cd)
        g2 = gcd(cn, vd)
        out[k] = ((vn // g1) * (cn // g2), (vd // g2) * (cd // g1))
    return out


def add_scaled_into(dict acc, dict terms, c):
    cdef object cn = c[0], cd = c[1]
    if cn == 0 or not terms:
        return
    cdef tuple v
    for k, v in terms.items():
        vn = v[0]
        vd = v[1]
        g1 = gcd(vn, cd)
        g2 = gcd(cn, vd)
        _acc_pair(acc, k, (vn // g1) * (cn // g2), (vd // g2) * (cd // g1))


def mul_word_terms(dict a, dict b):
    cdef dict out = {}
    cdef tuple ka, kb, va, vb
    cdef bint int_a
    for ka, va in a.items():
        an = va[0]
        ad = va[1]
        int_a = ad is _ONE
        for kb, vb in b.items():
            if int_a and vb[1] is _ONE:
                _acc_pair(out, ka + kb, an * vb[0], _ONE)
            else:
                g1 = gcd(an, vb[1])
                g2 = gcd(vb[0], ad)
                _acc_pair(out, ka + kb,
                          (an // g1) * (vb[0] // g2),
                          (ad // g2) * (vb[1] // g1))
    return out


def mul_tensor_terms(dict a, dict b):
    cdef dict out = {}
    cdef tuple ka, kb, va, vb
    cdef bint int_a
    for ka, va in a.items():
        an = va[0]
        ad = va[1]
        int_a = ad is _ONE
        la = ka[0]
        ra = ka[1]
        for kb, vb in b.items():
            if int_a and vb[1] is _ONE:
                _acc_pair(out, (la + kb[0], ra + kb[1]), an * vb[0], _ONE)
            else:
                g1 = gcd(an, vb[1])
                g2 = gcd(vb[0], ad)
                _acc_pair(out, (la + kb[0], ra + kb[1]),
                          (an // g1) * (vb[0] // g2),
                          (ad // g2) * (vb[1] // g1))
    return out


def quasi_shuffle_words(tuple u, tuple v):
    if not u:
        return {v: (1, 1)}
    if not v:
        return {u: (1, 1)}
    cdef dict out = {}
    cdef dict sub
    cdef tuple head, kk, c, p
    cdef int branch
    for branch in range(3):
        if branch == 0:
            head = u[:1]
            sub = quasi_shuffle_words(u[1:], v)
        elif branch == 1:
            head = v[:1]
            sub = quasi_shuffle_words(u, v[1:])
        else:
            head = (u[0] + v[0],)
            sub = quasi_shuffle_words(u[1:], v[1:])
        for k, c in sub.items():
            kk = head + <tuple> k
            p = <tuple> out.get(kk)
            out[kk] = (p[0] + c[0], 1) if p is not None else c
    return out
