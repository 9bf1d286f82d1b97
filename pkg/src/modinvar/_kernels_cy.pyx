# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-dict kernels.

Twin of _kernels_py; same function surface, selected in _kernels at import.
Packed monomial keys exceed 64 bits for wide rings, so keys stay Python
integers; the win comes from compiled dict traffic and coefficient loops.
"""

import heapq

BACKEND = "cython"

CHUNK = 16
MASK = 0xFFFF


def mul_terms(dict A, dict B, long p, long q, mul_flat, add_flat):
    """Term-merge product of two term dicts over GF(p) or a tabled GF(q)."""
    cdef dict out = {}
    cdef long ca, cb, v, c, prev, cq
    if not A or not B:
        return out
    if len(B) < len(A):
        A, B = B, A
    if mul_flat is None:
        for ka, ca in A.items():
            for kb, cb in B.items():
                k = ka + kb
                v = (out.get(k, 0) + ca * cb) % p
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
    else:
        for ka, ca in A.items():
            cq = ca * q
            for kb, cb in B.items():
                k = ka + kb
                c = mul_flat[cq + cb]
                prev = out.get(k, 0)
                v = add_flat[prev * q + c]
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
    return out


def add_terms(dict A, dict B, long p, long q, add_flat, neg_flat,
              bint subtract):
    """A + B (or A - B) as a fresh dict."""
    cdef dict out = dict(A)
    cdef long cb, v
    if add_flat is None:
        for k, cb in B.items():
            if subtract:
                cb = p - cb
            v = (out.get(k, 0) + cb) % p
            if v:
                out[k] = v
            elif k in out:
                del out[k]
    else:
        for k, cb in B.items():
            if subtract:
                cb = neg_flat[cb]
            v = add_flat[out.get(k, 0) * q + cb]
            if v:
                out[k] = v
            elif k in out:
                del out[k]
    return out


def scale_terms(dict A, long c, kshift, long p, long q, mul_flat):
    """c * monomial(kshift) * A as a fresh dict; c must be nonzero."""
    cdef dict out = {}
    cdef long v, cq
    if mul_flat is None:
        for k, v in A.items():
            out[k + kshift] = v * c % p
    else:
        cq = c * q
        for k, v in A.items():
            out[k + kshift] = mul_flat[cq + v]
    return out


def iadd_scaled(dict acc, dict A, long c, kshift, long p, long q,
                mul_flat, add_flat):
    """acc += c * monomial(kshift) * A, in place; c nonzero."""
    cdef long v, w, cq
    if mul_flat is None:
        for k, v in A.items():
            kk = k + kshift
            w = (acc.get(kk, 0) + c * v) % p
            if w:
                acc[kk] = w
            elif kk in acc:
                del acc[kk]
    else:
        cq = c * q
        for k, v in A.items():
            kk = k + kshift
            w = add_flat[acc.get(kk, 0) * q + mul_flat[cq + v]]
            if w:
                acc[kk] = w
            elif kk in acc:
                del acc[kk]


def neg_terms(dict A, long p, neg_flat):
    cdef dict out = {}
    cdef long v
    if neg_flat is None:
        for k, v in A.items():
            out[k] = p - v
    else:
        for k, v in A.items():
            out[k] = neg_flat[v]
    return out


def grevlex_okey(k, int n):
    """Order key whose integer comparison realizes weighted grevlex.

    Ties on wdeg break by the complemented exponents of the LAST variable
    first, so that chunk sits highest below the degree chunk.
    """
    cdef int i
    cdef int shift = CHUNK * (n - 1)
    o = 0
    rest = k >> (CHUNK * n)  # wdeg chunk
    for i in range(n):
        o |= (MASK - (k & MASK)) << shift  # e_{n-1} lands highest
        k >>= CHUNK
        shift -= CHUNK
    return (rest << (CHUNK * n)) | o


def leading_key(dict terms, int n, int order_code):
    """Packed key of the leading monomial; order_code 0=grlex 1=grevlex 2=lex."""
    if order_code == 0:
        return max(terms)
    if order_code == 2:
        lexmask = (1 << (CHUNK * n)) - 1
        best = None
        bestk = -1
        for k in terms:
            kk = k & lexmask
            if kk > bestk:
                bestk = kk
                best = k
        return best
    best = None
    besto = -1
    for k in terms:
        o = grevlex_okey(k, n)
        if o > besto:
            besto = o
            best = k
    return best


def normal_form_terms(dict f, lt_keys, tails, int n, int order_code, guard,
                      long p, long q, mul_flat, add_flat, neg_flat,
                      bint track):
    """Complete reduction of f by a monic basis given as (lt_keys, tails).

    tails[i] holds basis[i] minus its leading term (leading coefficient 1).
    Returns (remainder_dict, cofactors) where cofactors[i] is a term dict with
    f = sum_i cofactors[i] * basis[i] + remainder (None unless track).
    """
    cdef Py_ssize_t nb = len(lt_keys)
    cdef Py_ssize_t i, hit
    cdef dict pending = dict(f)
    cdef dict remainder = {}
    cdef dict tail, d
    cdef long c, ct, v, cneg, cq
    cdef list heap
    cdef list lts = list(lt_keys)
    if order_code == 0:
        heap = [-k for k in pending]
    elif order_code == 1:
        heap = [(-grevlex_okey(k, n), k) for k in pending]
    else:
        lexmask = (1 << (CHUNK * n)) - 1
        heap = [(-(k & lexmask), k) for k in pending]
    heapq.heapify(heap)
    cof = [None] * nb if track else None
    while heap:
        if order_code == 0:
            k = -heapq.heappop(heap)
        else:
            k = heapq.heappop(heap)[1]
        if k not in pending:
            continue
        c = pending.pop(k)
        if not c:
            continue
        hit = -1
        kg = k | guard
        for i in range(nb):
            if (kg - lts[i]) & guard == guard:
                hit = i
                break
        if hit < 0:
            remainder[k] = c
            continue
        kq = k - lts[hit]
        if track:
            d = cof[hit]
            if d is None:
                d = cof[hit] = {}
            d[kq] = c  # leading monomials strictly decrease, so kq is fresh
        tail = tails[hit]
        if not tail:
            continue
        if mul_flat is None:
            cneg = p - c
            for kt, ct in tail.items():
                kk = kt + kq
                fresh = kk not in pending
                v = (pending.get(kk, 0) + cneg * ct) % p
                pending[kk] = v
                if fresh:
                    if order_code == 0:
                        heapq.heappush(heap, -kk)
                    elif order_code == 1:
                        heapq.heappush(heap, (-grevlex_okey(kk, n), kk))
                    else:
                        heapq.heappush(heap, (-(kk & lexmask), kk))
        else:
            cneg = neg_flat[c]
            cq = cneg * q
            for kt, ct in tail.items():
                kk = kt + kq
                fresh = kk not in pending
                v = add_flat[pending.get(kk, 0) * q + mul_flat[cq + ct]]
                pending[kk] = v
                if fresh:
                    if order_code == 0:
                        heapq.heappush(heap, -kk)
                    elif order_code == 1:
                        heapq.heappush(heap, (-grevlex_okey(kk, n), kk))
                    else:
                        heapq.heappush(heap, (-(kk & lexmask), kk))
    return remainder, cof
