# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled arithmetic kernel for radical-term tuples.

Same representation and contract as ``pycore``: a scalar is a tuple of
``(rad, num, den)`` terms, ``rad`` squarefree ascending, ``num/den`` in
lowest terms with positive ``den``, empty tuple for zero.  Outputs must
match ``pycore`` bit-for-bit on every input.

Coefficient arithmetic runs on C int64 with explicit overflow guards and
falls back to Python integers per step, so values of any size remain
exact.
"""

from math import gcd as _pygcd

cdef extern from "Python.h":
    long long PyLong_AsLongLongAndOverflow(object, int*) except? -1

IMPLEMENTATION = "c"

# int64 inputs below this bound keep every intermediate product within
# 63 bits (products of two bounded values plus one addition).
cdef long long _BOUND = (<long long>1) << 31

cdef dict _SPLIT_CACHE = {}


cdef inline long long _cgcd(long long a, long long b) noexcept:
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


def squarefree_split(n):
    """Return ``(outer, core)`` with ``n == outer**2 * core``, core squarefree.

    Requires ``n >= 1``.
    """
    cached = _SPLIT_CACHE.get(n)
    if cached is not None:
        return cached
    if n < 1:
        raise ValueError("squarefree_split requires a positive integer")
    cdef long long m, d, outer, core
    cdef int e, h
    if n < ((<long long>1) << 62):
        m = n
        outer = 1
        core = 1
        d = 2
        while d * d <= m:
            if m % d == 0:
                e = 0
                while m % d == 0:
                    m //= d
                    e += 1
                h = e >> 1
                while h > 0:
                    outer *= d
                    h -= 1
                if e & 1:
                    core *= d
            d += 1 if d == 2 else 2
        result = (outer, core * m)
    else:
        result = _split_big(n)
    if len(_SPLIT_CACHE) < 65536:
        _SPLIT_CACHE[n] = result
    return result


cdef tuple _split_big(n):
    m = n
    outer = 1
    core = 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            outer *= d ** (e >> 1)
            if e & 1:
                core *= d
        d += 1 if d == 2 else 2
    return (outer, core * m)


def is_squarefree(n):
    """True if no prime square divides ``n`` (``n >= 1``)."""
    return squarefree_split(n)[0] == 1


def make_terms(num, den, rad):
    """Canonical terms for ``num/den * sqrt(rad)``; ``rad >= 1, den != 0``."""
    if rad < 1:
        raise ValueError("radicand must be a positive integer")
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if num == 0:
        return ()
    outer, core = squarefree_split(rad)
    num = num * outer
    if den < 0:
        num, den = -num, -den
    g = _pygcd(num, den)
    if g > 1:
        num //= g
        den //= g
    return ((core, num, den),)


def neg_terms(t):
    return tuple((r, -n, d) for r, n, d in t)


cdef tuple _add_coeff(na, da, nb, db):
    """(na/da + nb/db) reduced, or None when the sum is zero."""
    cdef long long a, b, c, d, num, den, g
    cdef int o1, o2, o3, o4
    a = PyLong_AsLongLongAndOverflow(na, &o1)
    b = PyLong_AsLongLongAndOverflow(da, &o2)
    c = PyLong_AsLongLongAndOverflow(nb, &o3)
    d = PyLong_AsLongLongAndOverflow(db, &o4)
    if not (o1 | o2 | o3 | o4):
        if (-_BOUND < a < _BOUND and b < _BOUND and
                -_BOUND < c < _BOUND and d < _BOUND):
            num = a * d + c * b
            if num == 0:
                return None
            den = b * d
            g = _cgcd(num, den)
            return (num / g, den / g)
    pnum = na * db + nb * da
    if pnum == 0:
        return None
    pden = da * db
    pg = _pygcd(pnum, pden)
    return (pnum // pg, pden // pg)


def add_terms(a, b):
    """Sum of two canonical term tuples (sorted merge)."""
    if not a:
        return b
    if not b:
        return a
    cdef list out = []
    cdef Py_ssize_t i = 0, j = 0, la = len(a), lb = len(b)
    while i < la and j < lb:
        ta = a[i]
        tb = b[j]
        ra = ta[0]
        rb = tb[0]
        if ra < rb:
            out.append(ta)
            i += 1
        elif rb < ra:
            out.append(tb)
            j += 1
        else:
            coeff = _add_coeff(ta[1], ta[2], tb[1], tb[2])
            if coeff is not None:
                out.append((ra, coeff[0], coeff[1]))
            i += 1
            j += 1
    while i < la:
        out.append(a[i])
        i += 1
    while j < lb:
        out.append(b[j])
        j += 1
    return tuple(out)


def scale_terms(t, num, den):
    """Multiply a canonical tuple by the rational ``num/den``."""
    if num == 0:
        return ()
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        num, den = -num, -den
    cdef list out = []
    cdef long long a, b, c, d, nn, nd, g
    cdef int o1, o2, o3, o4
    c = PyLong_AsLongLongAndOverflow(num, &o3)
    d = PyLong_AsLongLongAndOverflow(den, &o4)
    for term in t:
        a = PyLong_AsLongLongAndOverflow(term[1], &o1)
        b = PyLong_AsLongLongAndOverflow(term[2], &o2)
        if not (o1 | o2 | o3 | o4):
            if (-_BOUND < a < _BOUND and b < _BOUND and
                    -_BOUND < c < _BOUND and d < _BOUND):
                nn = a * c
                nd = b * d
                g = _cgcd(nn, nd)
                out.append((term[0], nn / g, nd / g))
                continue
        pn = term[1] * num
        pd = term[2] * den
        pg = _pygcd(pn, pd)
        out.append((term[0], pn // pg, pd // pg))
    return tuple(out)


cdef void _acc_pair(dict acc, tuple ta, tuple tb):
    """Accumulate the product of two term tuples into ``acc``."""
    cdef long long a, b, c, d, o, num, den, g, cn, cd, nn, nd
    cdef int o1, o2, o3, o4, o5, o6, slow
    cdef Py_ssize_t ia, ib, la = len(ta), lb = len(tb)
    for ia in range(la):
        terma = ta[ia]
        ra = terma[0]
        for ib in range(lb):
            termb = tb[ib]
            rb = termb[0]
            if ra == rb:
                outer = ra
                core = 1
            else:
                outer, core = squarefree_split(ra * rb)
            slow = 1
            a = PyLong_AsLongLongAndOverflow(terma[1], &o1)
            b = PyLong_AsLongLongAndOverflow(terma[2], &o2)
            c = PyLong_AsLongLongAndOverflow(termb[1], &o3)
            d = PyLong_AsLongLongAndOverflow(termb[2], &o4)
            o = PyLong_AsLongLongAndOverflow(outer, &o5)
            if not (o1 | o2 | o3 | o4 | o5):
                if (-_BOUND < a < _BOUND and b < _BOUND and
                        -_BOUND < c < _BOUND and d < _BOUND):
                    num = a * c
                    if o == 1 or (o < _BOUND and
                                  -_BOUND < num < _BOUND):
                        num = num * o
                        den = b * d
                        g = _cgcd(num, den)
                        num = num / g
                        den = den / g
                        if -_BOUND < num < _BOUND and den < _BOUND:
                            slow = 0
            if slow:
                pnum = terma[1] * termb[1] * outer
                pden = terma[2] * termb[2]
                pg = _pygcd(pnum, pden)
                _acc_obj(acc, core, pnum // pg, pden // pg)
                continue
            cur = acc.get(core)
            if cur is None:
                acc[core] = (num, den)
                continue
            cn = PyLong_AsLongLongAndOverflow(cur[0], &o5)
            cd = PyLong_AsLongLongAndOverflow(cur[1], &o6)
            if (o5 | o6) or not (-_BOUND < cn < _BOUND and cd < _BOUND):
                _acc_obj(acc, core, num, den)
                continue
            nn = cn * den + num * cd
            if nn == 0:
                del acc[core]
                continue
            nd = cd * den
            g = _cgcd(nn, nd)
            acc[core] = (nn / g, nd / g)


cdef void _acc_obj(dict acc, core, num, den):
    """Object-integer accumulate step (no magnitude limits)."""
    cur = acc.get(core)
    if cur is None:
        acc[core] = (num, den)
        return
    cn, cd = cur
    nn = cn * den + num * cd
    if nn == 0:
        del acc[core]
        return
    nd = cd * den
    g = _pygcd(nn, nd)
    acc[core] = (nn // g, nd // g)


cdef tuple _canon(dict acc):
    cdef list out = []
    for r in sorted(acc):
        coeff = acc[r]
        out.append((r, coeff[0], coeff[1]))
    return tuple(out)


def mul_terms(a, b):
    """Product of two canonical term tuples."""
    if not a or not b:
        return ()
    cdef dict acc = {}
    _acc_pair(acc, a, b)
    return _canon(acc)


def dot_terms(u, v):
    """Inner product of two equal-length sequences of term tuples."""
    cdef dict acc = {}
    for ta, tb in zip(u, v):
        if ta and tb:
            _acc_pair(acc, <tuple>ta, <tuple>tb)
    return _canon(acc)


def matmul_terms(a, b):
    """Row-major matrix product of two nested lists of term tuples."""
    cols = list(zip(*b))
    cdef list out = []
    cdef list orow
    cdef dict acc
    for arow in a:
        orow = []
        for bcol in cols:
            acc = {}
            for ta, tb in zip(arow, bcol):
                if ta and tb:
                    _acc_pair(acc, <tuple>ta, <tuple>tb)
            orow.append(_canon(acc))
        out.append(orow)
    return out
