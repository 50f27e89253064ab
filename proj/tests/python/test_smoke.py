"""Smoke tests for the compiled module: the bindings hand back the same
exact values the C++ suites pin down."""

import json

import abptk


def test_version():
    assert abptk.__version__


def test_figure1_expands_exactly():
    prog = json.loads(abptk.family_emit("fig1"))
    assert prog["widths"] == [1, 2, 2, 1]
    val = json.loads(abptk.abp_validate(json.dumps(prog)))
    assert val["ok"] and val["size"] == 4
    poly = json.loads(abptk.abp_expand(json.dumps(prog)))
    terms = [(t["coeff"], t["exps"]) for t in poly["terms"]]
    assert terms == [("1", [3, 0]), ("-1", [2, 1]), ("-3/2", [1, 2])]


def test_poly_eval_is_exact():
    s45 = abptk.family_emit("S", n=4, d=5)
    assert abptk.poly_eval(s45, ["1", "1", "1", "1", "1", "1"]) == "6"
    assert abptk.poly_eval(s45, ["2", "0", "-3", "0", "0", "0"]) == "0"


def test_shioda_decomposition_verifies():
    s45 = abptk.family_emit("S", n=4, d=5)
    dec = abptk.shioda_decomposition(4, 5)
    res = json.loads(abptk.decomp_verify(s45, dec))
    assert res["ok"] and res["summands"] == 4


def test_p_restricted_decomposition():
    p = abptk.family_emit("P", n=2, d=5)
    dec = abptk.p_restricted_decomposition(2, 5, 3)
    res = json.loads(abptk.decomp_verify(p, dec))
    assert res["ok"] and res["summands"] == 3


def test_bounds_totals():
    rep = json.loads(abptk.bounds_compute("S", 4, 5))
    assert rep["total"] == 14 and rep["status"] == "proven"
    rep = json.loads(abptk.bounds_compute("S", 6, 5))
    assert rep["status"] == "conjecture"
    rep = json.loads(abptk.bounds_compute("powersum", 6, 5))
    assert rep["total"] == 16


def test_sing_compute():
    rep = json.loads(abptk.sing_compute(abptk.family_emit("P", n=1, d=4)))
    assert rep["status"] == "reduced"
    assert rep["codim"] == 2


def test_chain_round_trip():
    prog = abptk.family_emit("fig1")
    chain = abptk.chain_extract(prog)
    back = json.loads(abptk.chain_synthesize(chain))
    assert back["widths"] == [1, 2, 2, 1]
    assert json.loads(abptk.abp_expand(json.dumps(back))) == json.loads(abptk.abp_expand(prog))


def test_finite_field_search():
    p13 = abptk.family_emit("P", n=1, d=3, field="Fp:2")
    res = json.loads(abptk.search_subspaces(p13, 1))
    assert res["status"] == "none-found" and res["candidates"] == 7

    s45 = abptk.family_emit("S", n=4, d=5, field="Fp:2")
    res = json.loads(abptk.search_subspaces(s45, 4))
    assert res["status"] == "found" and res["candidates"] == 651


def test_rational_refuter():
    p15 = abptk.family_emit("P", n=1, d=5)
    assert json.loads(abptk.refute_rational(p15, 1))["status"] == "refuted"
    fermat = abptk.family_emit("powersum", n=2, d=3)
    assert json.loads(abptk.refute_rational(fermat, 1))["status"] == "inconclusive"
