import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from nilclean import (
    RingError,
    all_ideals,
    build_ring,
    ideal_generated_by,
    image_ideal,
    is_nil_ideal,
    lift_idempotent_mod_nil,
    quotient_ring,
)
from nilclean.ideals import ideal_from_mask, ideal_sum, is_ideal_mask, lift_idempotent_brute, preimage_ideal


def _displays(ideal):
    return [ideal.ring.display(x) for x in ideal.elements]


def test_generated_examples():
    z6 = build_ring("Z6")
    assert _displays(ideal_generated_by(z6, ["2"])) == ["0", "2", "4"]
    assert _displays(ideal_generated_by(z6, [])) == ["0"]
    t = build_ring("T2(Z2)")
    i = ideal_generated_by(t, ["[[0,1],[0,0]]"])
    assert _displays(i) == ["[[0,0],[0,0]]", "[[0,1],[0,0]]"]


@pytest.mark.parametrize("spec,count", [("Z6", 4), ("Z4", 3), ("Z2 x Z2", 4)])
def test_lattice_counts(spec, count):
    assert len(all_ideals(build_ring(spec))) == count


def test_z6_lattice_members():
    got = [tuple(_displays(i)) for i in all_ideals(build_ring("Z6"))]
    assert got == [("0",), ("0", "3"), ("0", "2", "4"), tuple(str(k) for k in range(6))]


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 60))
def test_residue_lattice_is_divisor_lattice(n):
    assert len(all_ideals(build_ring(f"Z{n}"))) == oracles.zn_ideal_count(n)


@settings(max_examples=25, deadline=None)
@given(oracles.small_specs())
def test_lattice_matches_brute_force(spec):
    r = build_ring(spec)
    ours = {frozenset(i.elements) for i in all_ideals(r)}
    assert ours == oracles.all_ideals(r)
    for i in all_ideals(r):
        assert is_ideal_mask(r, i.mask)


@settings(max_examples=40, deadline=None)
@given(oracles.small_specs(), st.data())
def test_generation_matches_closure(spec, data):
    r = build_ring(spec)
    gens = data.draw(st.lists(st.integers(0, r.size - 1), max_size=2))
    assert set(ideal_generated_by(r, gens).elements) == oracles.ideal_closure(r, gens)


def test_nil_ideals():
    z4, z6 = build_ring("Z4"), build_ring("Z6")
    assert is_nil_ideal(ideal_generated_by(z4, ["2"]))
    assert not is_nil_ideal(ideal_generated_by(z6, ["2"]))
    assert is_nil_ideal(ideal_generated_by(z6, []))


def test_quotient_examples():
    z4 = build_ring("Z4")
    q = quotient_ring(z4, ideal_generated_by(z4, ["2"]))
    assert q.size == 2
    assert np.array_equal(q.add_table, build_ring("Z2").add_table)
    assert np.array_equal(q.mul_table, build_ring("Z2").mul_table)
    z6 = build_ring("Z6")
    assert quotient_ring(z6, ideal_generated_by(z6, ["3"])).size == 3
    t = build_ring("T2(Z2)")
    assert quotient_ring(t, ideal_generated_by(t, ["[[0,1],[0,0]]"])).size == 4


def test_image_examples():
    z6 = build_ring("Z6")
    q = quotient_ring(z6, ideal_generated_by(z6, ["3"]))
    assert image_ideal(q, ideal_generated_by(z6, ["2"])).is_whole
    assert image_ideal(q, q.modulus).is_zero
    assert image_ideal(q, ideal_generated_by(z6, [])).is_zero


@settings(max_examples=30, deadline=None)
@given(oracles.small_specs(), st.data())
def test_projection_is_a_homomorphism(spec, data):
    r = build_ring(spec)
    ideals = all_ideals(r)
    k = data.draw(st.sampled_from(ideals))
    q = quotient_ring(r, k)
    q.check_axioms()
    x, y = data.draw(st.integers(0, r.size - 1)), data.draw(st.integers(0, r.size - 1))
    p = q.projection
    assert p[r.add(x, y)] == q.add(p[x], p[y])
    assert p[r.mul(x, y)] == q.mul(p[x], p[y])
    assert p[r.one] == q.one
    for rep in q.representatives:
        assert rep == min(c for c in range(r.size) if p[c] == p[rep])
    i = data.draw(st.sampled_from(ideals))
    back = preimage_ideal(q, image_ideal(q, i))
    assert set(back.elements) == set(ideal_sum(i, k).elements)


def test_lifting_examples():
    z4 = build_ring("Z4")
    assert lift_idempotent_mod_nil(z4, ideal_generated_by(z4, ["2"]), 3) == 1
    z8 = build_ring("Z8")
    assert lift_idempotent_mod_nil(z8, ideal_generated_by(z8, ["2"]), 3) == 1
    assert lift_idempotent_mod_nil(z8, ideal_generated_by(z8, ["2"]), 1) == 1


def test_lifting_rejects_bad_input():
    z6 = build_ring("Z6")
    with pytest.raises(RingError):
        lift_idempotent_mod_nil(z6, ideal_generated_by(z6, ["2"]), 1)
    z4 = build_ring("Z4")
    with pytest.raises(RingError):
        lift_idempotent_mod_nil(z4, ideal_generated_by(z4, []), 3)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["Z8", "Z16", "Z36", "T2(Z4)", "Idealization(Z4, Z4)", "Z4 x Z9", "T3(Z2)"]), st.data())
def test_newton_lift_agrees_with_brute_force(spec, data):
    r = build_ring(spec)
    nil = [i for i in all_ideals(r) if is_nil_ideal(i)]
    ideal = data.draw(st.sampled_from(nil))
    candidates = [a for a in range(r.size) if ideal.mask[r.sub(r.mul(a, a), a)]]
    a = data.draw(st.sampled_from(candidates))
    e = lift_idempotent_mod_nil(r, ideal, a)
    assert r.mul(e, e) == e and ideal.mask[r.sub(e, a)]
    assert e in lift_idempotent_brute(r, ideal, a)


def test_ideal_from_mask_validates():
    z6 = build_ring("Z6")
    with pytest.raises(RingError):
        ideal_from_mask(z6, np.array([1, 1, 0, 0, 0, 0], dtype=bool))
    assert len(ideal_from_mask(z6, np.array([1, 0, 0, 1, 0, 0], dtype=bool))) == 2


def test_membership_and_order():
    z12 = build_ring("Z12")
    a, b = ideal_generated_by(z12, ["4"]), ideal_generated_by(z12, ["2"])
    assert a <= b and not b <= a
    assert "8" in a and "2" not in a
