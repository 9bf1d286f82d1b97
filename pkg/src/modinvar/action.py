"""GL2(F_q) acting on F_q[x1,x2,y1,y2], plus the twisted Frobenius and the
swap involution.

Convention (validated by u0 = x1*y1 + x2*y2 staying fixed): g sends
y_i -> sum_j g[j][i] y_j and x_i -> sum_j inv(g)[i][j] x_j, which makes
act(g, act(h, f)) == act(g @ h, f) a left action.
"""

from __future__ import annotations

import itertools

from . import _kernels as K
from .gf import FieldMismatch
from .mpoly import CHUNK, MASK, Polynomial, PolyRing, RingMismatch

R4_NAMES = ("x1", "x2", "y1", "y2")


class ActionError(Exception):
    pass


class SingularMatrix(ActionError):
    pass


class Mat2:
    """2x2 matrix over a FieldParams; entries stored as coefficient indices."""

    __slots__ = ("field", "e")

    def __init__(self, field, entries):
        self.field = field
        self.e = tuple(field.elem(v).i for v in entries)
        if len(self.e) != 4:
            raise ActionError("need 4 entries")

    @classmethod
    def from_indices(cls, field, indices):
        """Internal constructor from coefficient indices (not literals)."""
        m = cls.__new__(cls)
        m.field = field
        m.e = tuple(indices)
        return m

    @classmethod
    def identity(cls, field):
        return cls.from_indices(field, (1, 0, 0, 1))

    def entry(self, i, j):
        return self.field.from_index(self.e[2 * i + j])

    def det(self):
        f = self.field
        a, b, c, d = self.e
        return f.from_index(f.add_i(f.mul_i(a, d), f.neg_i(f.mul_i(b, c))))

    def inverse(self):
        f = self.field
        det = self.det()
        if not det.i:
            raise SingularMatrix("matrix %s is singular" % self)
        di = f.inv_i(det.i)
        a, b, c, d = self.e
        return Mat2.from_indices(
            f, (f.mul_i(di, d), f.mul_i(di, f.neg_i(b)),
                f.mul_i(di, f.neg_i(c)), f.mul_i(di, a)))

    def __matmul__(self, other):
        if not isinstance(other, Mat2) or other.field != self.field:
            raise FieldMismatch("matrix product across fields")
        f = self.field
        a, b, c, d = self.e
        e, g, h, i = other.e
        mul, add = f.mul_i, f.add_i
        return Mat2.from_indices(
            f, (add(mul(a, e), mul(b, h)), add(mul(a, g), mul(b, i)),
                add(mul(c, e), mul(d, h)), add(mul(c, g), mul(d, i))))

    def __eq__(self, other):
        return (isinstance(other, Mat2) and self.field == other.field
                and self.e == other.e)

    def __hash__(self):
        return hash((self.field.q, self.e))

    def __repr__(self):
        lit = self.field.literal
        fe = self.field.from_index
        a, b, c, d = (lit(fe(v)) for v in self.e)
        return "[[%s,%s],[%s,%s]]" % (a, b, c, d)


def enumerate_gl2(field):
    """All invertible 2x2 matrices, lexicographic by entry indices."""
    out = []
    q = field.q
    for a, b, c, d in itertools.product(range(q), repeat=4):
        if field.add_i(field.mul_i(a, d), field.neg_i(field.mul_i(b, c))):
            out.append(Mat2.from_indices(field, (a, b, c, d)))
    return out


def enumerate_sl2(field):
    out = []
    q = field.q
    for a, b, c, d in itertools.product(range(q), repeat=4):
        det = field.add_i(field.mul_i(a, d), field.neg_i(field.mul_i(b, c)))
        if det == 1:
            out.append(Mat2.from_indices(field, (a, b, c, d)))
    return out


def multiplicative_generator(field):
    """Smallest-index generator of F_q^*."""
    q = field.q
    for idx in range(1, q):
        e = field.from_index(idx)
        seen = 1
        acc = e
        while acc.i != 1:
            acc = acc * e
            seen += 1
        if seen == q - 1:
            return e
    raise ActionError("no multiplicative generator found")


def generating_set_gl2(field):
    """Transvection, diagonal torus element, swap; generates GL2(F_q)."""
    zeta = multiplicative_generator(field)
    return [Mat2(field, (1, 1, 0, 1)),
            Mat2(field, (zeta, 0, 0, 1)),
            Mat2(field, (0, 1, 1, 0))]


def _require_r4(ring):
    if ring.names != R4_NAMES:
        raise RingMismatch("action needs variables %s" % (R4_NAMES,))


def action_images(g, ring):
    """Substitution images of x1,x2,y1,y2 under g."""
    _require_r4(ring)
    if g.field != ring.field:
        raise FieldMismatch("group element field differs from ring field")
    gi = g.inverse()
    f = ring.field
    x1, x2, y1, y2 = (ring.var(nm) for nm in R4_NAMES)
    fe = f.from_index
    return {
        "x1": x1 * fe(gi.e[0]) + x2 * fe(gi.e[1]),
        "x2": x1 * fe(gi.e[2]) + x2 * fe(gi.e[3]),
        "y1": y1 * fe(g.e[0]) + y2 * fe(g.e[2]),
        "y2": y1 * fe(g.e[1]) + y2 * fe(g.e[3]),
    }


def act(g, f):
    """Image of f under the group element g (exact expansion)."""
    return f.substitute(action_images(g, f.ring))


def frobenius_star(f):
    """The twisted Frobenius: x_i -> x_i, y_i -> y_i^q."""
    _require_r4(f.ring)
    q = f.ring.field.q
    ring = f.ring
    out = {}
    for k, c in f.terms.items():
        e1, e2, e3, e4 = ring.unpack(k)
        out[ring.pack((e1, e2, q * e3, q * e4))] = c
    return Polynomial(ring, out)


def involution_star(f):
    """The order-2 swap x1<->y2, x2<->y1 (exponent tuple reversal)."""
    _require_r4(f.ring)
    ring = f.ring
    out = {}
    for k, c in f.terms.items():
        e1, e2, e3, e4 = ring.unpack(k)
        out[ring.pack((e4, e3, e2, e1))] = c
    return Polynomial(ring, out)


def is_invariant(f, elements):
    """(True, None) if every listed element fixes f, else (False, witness)."""
    for g in elements:
        if act(g, f) != f:
            return False, g
    return True, None


def invariant_bidegree_dimension(field, a, b, use_full_group=False):
    """dim of the GL2-invariants of x-degree a and y-degree b.

    The action maps x-monomials to x-polynomials and y-monomials to
    y-polynomials, so each bidegree block is an independent kernel problem
    of size (a+1)(b+1).
    """
    from . import linalg

    ring = PolyRing(field, R4_NAMES)
    mons = [(i, a - i, j, b - j) for i in range(a + 1) for j in range(b + 1)]
    ncols = len(mons)
    index = {ring.pack(e): col for col, e in enumerate(mons)}
    gens = enumerate_gl2(field) if use_full_group \
        else generating_set_gl2(field)
    fld = field
    mat = [[0] * ncols for _ in range(len(gens) * ncols)]
    for bi, g in enumerate(gens):
        imgs = action_images(g, ring)
        xpow1 = [ring.one, imgs["x1"]]
        xpow2 = [ring.one, imgs["x2"]]
        ypow1 = [ring.one, imgs["y1"]]
        ypow2 = [ring.one, imgs["y2"]]
        for lst in (xpow1, xpow2, ypow1, ypow2):
            while len(lst) <= max(a, b):
                lst.append(lst[-1] * lst[1])
        xcache = {}
        ycache = {}
        base = bi * ncols
        for col, (e1, e2, e3, e4) in enumerate(mons):
            xk = xcache.get(e1)
            if xk is None:
                xk = xcache[e1] = (xpow1[e1] * xpow2[e2]).terms
            yk = ycache.get(e3)
            if yk is None:
                yk = ycache[e3] = (ypow1[e3] * ypow2[e4]).terms
            prod = K.mul_terms(xk, yk, fld.p, fld.q, fld.mul_flat,
                               fld.add_flat)
            for kk, cc in prod.items():
                mat[base + index[kk]][col] = cc
            row = mat[base + col]
            row[col] = fld.add_i(row[col], fld.neg_i(1))
    return ncols - linalg.rank_field(mat, fld)


def invariant_dimension(field, d, use_full_group=False):
    """dim of the degree-d GL2-invariants of F_q[x1,x2,y1,y2], summed over
    the (x-degree, y-degree) blocks."""
    return sum(invariant_bidegree_dimension(field, xd, d - xd, use_full_group)
               for xd in range(d + 1))
