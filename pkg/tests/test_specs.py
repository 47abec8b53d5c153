import json

import pytest
from hypothesis import given, settings

import oracles
from nilclean import SpecSyntaxError, build_ring, parse_ring_spec
from nilclean.specs import Morita, Product, Triangular, Zn


@pytest.mark.parametrize("text,canonical", [
    ("Z6", "Z6"),
    ("Z2xZ3", "Z2 x Z3"),
    ("(Z2 x Z3) x Z4", "Z2 x Z3 x Z4"),
    ("T2( Z4 )", "T2(Z4)"),
    ("T2(Z2 x Z2)", "T2(Z2 x Z2)"),
    ("Quot(Z12; 4)", "Quot(Z12; 4)"),
    ("Corner(T2(Z2); [[1,0],[0,0]])", "Corner(T2(Z2); [[1,0],[0,0]])"),
    ("Idealization(Z4,Z2)", "Idealization(Z4, Z2)"),
    ("Morita(Z2,Z2,Z2,Z2)", "Morita(Z2, Z2, Z2, Z2, zero)"),
    ("Morita(Z3, Z3, Z3, Z3, mul)", "Morita(Z3, Z3, Z3, Z3, mul)"),
])
def test_canonical_text(text, canonical):
    spec = parse_ring_spec(text)
    assert str(spec) == canonical
    assert str(parse_ring_spec(canonical)) == canonical


def test_tree_shape():
    assert parse_ring_spec("Z2 x T2(Z3)") == Product((Zn(2), Triangular(2, Zn(3))))
    m = parse_ring_spec("Morita(Z2, Z2, Z2, Z2, mul)")
    assert isinstance(m, Morita) and m.pairing == "mul"


@pytest.mark.parametrize("bad", ["", "Z", "Z0", "Y6", "Z6 x", "T2(Z3", "Morita(Z2, Z2, Z2, Z2, odd)",
                                 "Idealization(Z4, @nowhere)", "Z6 Z6", "Corner(Z6; )"])
def test_syntax_errors(bad):
    with pytest.raises(SpecSyntaxError):
        parse_ring_spec(bad)


@settings(max_examples=30, deadline=None)
@given(oracles.small_specs())
def test_rebuild_from_canonical_text(spec):
    a = build_ring(spec)
    b = build_ring(str(a.spec))
    assert (a.add_table == b.add_table).all() and (a.mul_table == b.mul_table).all()


def test_named_modules_and_pairings(tmp_path):
    config = {
        "modules": {"twist": {"factors": [2], "left": [[0, 0], [0, 1], [0, 0], [0, 1]]}},
        "pairings": {"none": {"pair_A": [[0, 0], [0, 0]], "pair_B": [[0, 0], [0, 0]]}},
    }
    r = build_ring("Idealization(Z4, @twist)", config=config)
    assert r.size == 8
    m = build_ring("Morita(Z2, Z2, Z2, Z2, @none)", config=config)
    assert str(m.spec) == "Morita(Z2, Z2, Z2, Z2, @none)"
    assert (m.mul_table == build_ring("Morita(Z2, Z2, Z2, Z2, zero)").mul_table).all()
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(config))
    from nilclean.specs import load_config
    assert load_config(path) == config


def test_quotient_and_corner_build():
    assert build_ring("Quot(Z12; 4)").size == 4
    assert build_ring("Corner(T2(Z2); [[1,0],[0,0]])").size == 2
