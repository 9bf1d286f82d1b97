"""Check suites, report format, and reduction certificates."""

import json
import time

import pytest

from modinvar.gens import BasisSpec, context_for_q
from modinvar.gf import ff_from_q
from modinvar.verify import (
    check_hilbert,
    elimination_crosscheck,
    check_invariance,
    check_kernel,
    check_products,
    check_relations,
    hilbert_series_from_basis,
    negative_controls,
    reduce_product,
    verify_certificate,
)

# brute-force invariant dimensions, frozen
H_Q2 = [1, 0, 3, 4, 6, 10, 17, 18, 31, 38, 48, 62, 81, 90, 119, 138, 162,
        192, 229, 252, 303, 340, 384, 436, 497]
H_Q3 = [1, 0, 1, 0, 3, 0, 5, 0, 10, 0, 14, 0, 23, 0, 31, 0, 46]


@pytest.mark.parametrize("q", (2, 3))
def test_relations_suite(q):
    rep = check_relations(ff_from_q(q))
    assert rep.overall == "pass"
    assert rep.suite == "relations"
    names = {it.name for it in rep.items}
    assert {"T0", "T1", "T1s", "K00", "T00", "T10", "T01",
            "delta", "hboundary"} <= names
    assert all(it.status == "pass" for it in rep.items)


def test_invariance_suite():
    rep = check_invariance(ff_from_q(2))
    assert rep.overall == "pass"
    names = [it.name for it in rep.items]
    assert names.count("d2-control") == 1


def test_hilbert_suite_and_series():
    rep = check_hilbert(ff_from_q(2), 14)
    assert rep.overall == "pass"
    assert rep.params == {"max_degree": 14}
    series = hilbert_series_from_basis(context_for_q(2), 24)
    assert series == H_Q2
    series3 = hilbert_series_from_basis(context_for_q(3), 16)
    assert series3 == H_Q3


def test_kernel_suite():
    rep = check_kernel(ff_from_q(2), 12)
    assert rep.overall == "pass"
    names = {it.name for it in rep.items}
    assert {"relations-in-kernel", "groebner", "standard-monomials",
            "d=12"} <= names


def test_products_suite_all_pairs():
    rep = check_products(ff_from_q(2), sample="all")
    assert rep.overall == "pass"
    reduces = [it for it in rep.items if it.name.startswith("reduce(")]
    assert len(reduces) == 21  # upper triangle of 6 basis elements
    names = {it.name for it in rep.items}
    assert {"congruence:base", "congruence:exponent-carry",
            "congruence:products"} <= names


def test_products_suite_seeded_sample():
    rep1 = check_products(ff_from_q(3), sample="5", seed=11)
    rep2 = check_products(ff_from_q(3), sample="5", seed=11)
    assert rep1.overall == "pass"
    assert rep1.to_json(include_volatile=False) == \
        rep2.to_json(include_volatile=False)
    assert rep1.params["sample"] == "5"
    assert rep1.params["seed"] == 11


def test_reduction_certificate_trivial():
    field = ff_from_q(2)
    one = BasisSpec.parse("A:0,0,0")
    cert = reduce_product(field, one, one)
    assert list(cert.ell) == [one]
    ok, detail = verify_certificate(field, cert)
    assert ok, detail
    assert all(not c for c in cert.cofactors)


def test_reduction_certificate_frozen_example():
    # the A:1,1,0 self-product at q=2 lands on four module coordinates
    field = ff_from_q(2)
    spec = BasisSpec.parse("A:1,1,0")
    cert = reduce_product(field, spec, spec)
    doc = cert.to_dict()
    assert sorted(doc["ell"]) == \
        ["A:0,0,0", "A:1,1,0", "B:0,0,1,0", "B:0,0,2,0"]
    assert doc["ell"]["A:1,1,0"] == "C0*C0s"
    assert doc["ell"]["A:0,0,0"] == "C1^3*C0s^2 + C0^2*C1s^3"
    assert doc["cofactors"]["T00"] == "0"
    ok, detail = verify_certificate(field, cert)
    assert ok, detail


def test_certificate_corruption_detected():
    field = ff_from_q(2)
    spec = BasisSpec.parse("B:0,0,1,0")
    cert = reduce_product(field, spec, spec)
    assert verify_certificate(field, cert)[0]
    ctx = context_for_q(2)
    # corrupt one module coordinate
    key = next(iter(cert.ell))
    cert.ell[key] = cert.ell[key] + ctx.S7var("C0")
    ok, detail = verify_certificate(field, cert)
    assert not ok


def test_starred_pair_certificate():
    field = ff_from_q(3)
    cert = reduce_product(field, BasisSpec.parse("Cs:1,0,0"),
                          BasisSpec.parse("A:0,1,0"))
    ok, detail = verify_certificate(field, cert)
    assert ok, detail


@pytest.mark.parametrize("q", (2, 3))
def test_elimination_crosscheck_full_kernel(q):
    # an order-based elimination recomputes the kernel with no degree bound
    rep = elimination_crosscheck(ff_from_q(q))
    assert rep.overall == "pass", [it.detail for it in rep.items]
    assert rep.items[-1].name == "ideal-equality"
    assert "identical" in rep.items[-1].detail


@pytest.mark.parametrize("q", (2, 3))
def test_negative_controls_detect(q):
    rep = negative_controls(ff_from_q(q))
    assert rep.overall == "pass"
    names = {it.name for it in rep.items}
    assert {"corrupted-T1", "dropped-T10", "noninvariant-witness",
            "nonmember-nonzero"} <= names


def test_report_json_stable_and_schema():
    rep1 = check_relations(ff_from_q(2))
    rep2 = check_relations(ff_from_q(2))
    assert rep1.to_json(include_volatile=False) == \
        rep2.to_json(include_volatile=False)
    doc = json.loads(rep1.to_json())
    assert set(doc) == {"suite", "q", "params", "items", "overall",
                        "volatile"}
    assert set(doc["volatile"]) == {"timings", "version"}
    for it in doc["items"]:
        assert set(it) == {"name", "status", "detail"}
        assert it["status"] in ("pass", "fail", "skipped", "timeout")
    text = rep1.to_text()
    assert text.endswith("overall: pass")


def test_deadline_marks_timeout_then_skips():
    rep = check_relations(ff_from_q(2), deadline=time.monotonic() - 1)
    assert rep.timed_out
    assert rep.overall == "fail"
    assert rep.items[0].status == "timeout"
    assert all(it.status == "skipped" for it in rep.items[1:])
