import json

import pytest

from fockr import verify as vf
from fockr.fock import FockBlock
from fockr.ratfunc import EvalContext


def test_sixvertex():
    r = vf.verify_sixvertex()
    assert r.passed and r.counterexample is None


@pytest.mark.parametrize("check, arg", [("symmetry", 3), ("askew", 3)])
def test_table_checks(check, arg):
    r = getattr(vf, f"verify_{check}")(arg)
    assert r.passed, r.counterexample


def test_macdonald_check():
    assert vf.verify_macdonald(3).passed


@pytest.mark.parametrize("n", range(4))
def test_coproduct_symbolic(n):
    assert vf.verify_coproduct(n).passed


def test_coproduct_sides_degree_zero(P):
    lhs, rhs = vf.coproduct_sides(0, P)
    assert all(x.is_zero() for x in lhs.values()) and all(x.is_zero() for x in rhs.values())


def test_coproduct_modp():
    ctx = EvalContext.random("prime-field", 4, variables=("q", "t", "u"))
    assert vf.verify_coproduct(3, ctx).passed


def test_ybe_symbolic_weight_one():
    r = vf.verify_ybe(1)
    assert r.passed and r.details["orientation"] == "row=in,col=out"


def test_ybe_modp():
    ctx = EvalContext.random("prime-field", 9, variables=("q", "t", "u", "v"))
    assert vf.verify_ybe(2, ctx).passed


def test_ybe_detects_tampering(monkeypatch):
    real = vf.assemble_full_block

    def tampered(w, params):
        blk = real(w, params)
        if w != 1:
            return blk
        entries = dict(blk.entries)
        key = (blk.basis[0], blk.basis[1])
        entries[key] = entries[key] * 2
        return FockBlock(w, blk.basis, entries)

    monkeypatch.setattr(vf, "assemble_full_block", tampered)
    r = vf.verify_ybe(1, EvalContext.random("rational-point", 1))
    assert not r.passed
    assert r.counterexample["weight"] == 1


def test_coproduct_detects_tampering(monkeypatch, P):
    real = vf._pp_component

    def tampered(w, params):
        comp = dict(real(w, params))
        if w == 2:
            comp[((2,), (2,))] = comp[((2,), (2,))] + 1
        return comp

    monkeypatch.setattr(vf, "_pp_component", tampered)
    r = vf.verify_coproduct(3)
    assert not r.passed
    assert r.counterexample["degree"] == 2


def test_report_json():
    r = vf.verify_symmetry(1)
    obj = json.loads(json.dumps(r.to_json()))
    assert obj["verdict"] == "pass" and obj["name"] == "symmetry"


def test_ybe_weight_three_rational():
    assert vf.verify_ybe(3, EvalContext.random("rational-point", 5)).passed
