"""The two term-dict kernel backends must be observationally identical."""

import os
import random
import subprocess
import sys

import pytest

from modinvar import _kernels, _kernels_py
from modinvar.gens import context_for_q
from modinvar.groebner import buchberger, normal_form

cy = pytest.importorskip("modinvar._kernels_cy")


def test_backend_identities():
    assert _kernels_py.BACKEND == "python"
    assert cy.BACKEND == "cython"
    assert _kernels.BACKEND in ("python", "cython")


def test_env_override_forces_python():
    out = subprocess.run(
        [sys.executable, "-c",
         "from modinvar import _kernels; print(_kernels.BACKEND)"],
        env={**os.environ, "MODINVAR_PURE_PY": "1"},
        capture_output=True, text=True)
    assert out.stdout.strip() == "python"


def random_terms(ring, rng, nterms, maxexp):
    fld = ring.field
    out = {}
    for _ in range(nterms):
        exps = tuple(rng.randrange(maxexp) for _ in range(ring.n))
        out[ring.pack(exps)] = rng.randrange(1, fld.q)
    return out


@pytest.mark.parametrize("q", (2, 3, 4, 9))
def test_arithmetic_parity(q):
    ctx = context_for_q(q)
    R = ctx.R4
    fld = R.field
    rng = random.Random(q)
    args = (fld.p, fld.q, fld.mul_flat, fld.add_flat)
    for trial in range(6):
        A = random_terms(R, rng, 12, 5)
        B = random_terms(R, rng, 9, 5)
        assert _kernels_py.mul_terms(A, B, *args) == \
            cy.mul_terms(A, B, *args)
        for sub in (False, True):
            assert _kernels_py.add_terms(A, B, fld.p, fld.q, fld.add_flat,
                                         fld.neg_flat, sub) == \
                cy.add_terms(A, B, fld.p, fld.q, fld.add_flat,
                             fld.neg_flat, sub)
        c = rng.randrange(1, fld.q)
        shift = R.pack((1, 0, 2, 0))
        assert _kernels_py.scale_terms(A, c, shift, fld.p, fld.q,
                                       fld.mul_flat) == \
            cy.scale_terms(A, c, shift, fld.p, fld.q, fld.mul_flat)
        acc1, acc2 = dict(B), dict(B)
        _kernels_py.iadd_scaled(acc1, A, c, shift, fld.p, fld.q,
                                fld.mul_flat, fld.add_flat)
        cy.iadd_scaled(acc2, A, c, shift, fld.p, fld.q,
                       fld.mul_flat, fld.add_flat)
        assert acc1 == acc2
        assert _kernels_py.neg_terms(A, fld.p, fld.neg_flat) == \
            cy.neg_terms(A, fld.p, fld.neg_flat)
        for oc in (0, 1, 2):
            assert _kernels_py.leading_key(A, R.n, oc) == \
                cy.leading_key(A, R.n, oc)


def test_normal_form_parity_with_tracking():
    ctx = context_for_q(3)
    gb = buchberger(ctx.ideal_generators(), bound=20, track=True)
    R = gb.ring
    fld = R.field
    f = (ctx.relation("T1") * ctx.S7var("U1")
         + ctx.w_poly() ** 2 + ctx.S7var("C1", 3))
    for track in (False, True):
        out1 = _kernels_py.normal_form_terms(
            f.terms, gb.lt_keys, gb.tails, R.n, R.order_code, R.guard,
            fld.p, fld.q, fld.mul_flat, fld.add_flat, fld.neg_flat, track)
        out2 = cy.normal_form_terms(
            f.terms, gb.lt_keys, gb.tails, R.n, R.order_code, R.guard,
            fld.p, fld.q, fld.mul_flat, fld.add_flat, fld.neg_flat, track)
        assert out1 == out2
        rem, cof = out1
        assert isinstance(rem, dict)
        if track:
            assert cof is not None
        else:
            assert cof is None


def test_division_invariant_holds_on_both():
    # f = sum cof_i * basis_i + remainder, checked through the public API
    ctx = context_for_q(2)
    gb = buchberger(ctx.ideal_generators(), bound=14, track=True)
    f = ctx.w_poly() * ctx.S7var("U0") + ctx.relation("T00")
    rem, cof = normal_form(f, gb, track=True)
    assert sum((c * b for c, b in zip(cof, gb.basis)), rem) == f
