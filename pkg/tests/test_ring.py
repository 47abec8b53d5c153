from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from nilclean import Elem, FiniteRing, RingError, SizeLimitError, build_ring, nilpotency_index
from nilclean.ring import ResidueRing, split_top


@pytest.mark.parametrize("spec,size", [("Z6", 6), ("T2(Z2)", 8), ("Z2 x Z4", 8), ("Z1", 1)])
def test_sizes(spec, size):
    assert build_ring(spec).size == size


def test_basic_arithmetic():
    z6 = build_ring("Z6")
    assert z6.add(4, 5) == 3
    t = build_ring("T2(Z2)")
    n = t.parse("[[0,1],[0,0]]")
    assert t.mul(n, n) == t.zero
    rm = build_ring("Idealization(Z2, Z2)")
    assert rm.display(rm.mul("(1,1)", "(1,1)")) == "(1,0)"


def test_nilpotency_index_examples():
    z4, z6 = build_ring("Z4"), build_ring("Z6")
    assert nilpotency_index(Elem(z4, 2)) == 2
    assert nilpotency_index(Elem(z6, 0)) == 1
    assert nilpotency_index(Elem(z6, 5)) is None
    assert z4.sets.nilpotency_index(2) == 2


def test_element_sets_examples():
    s = build_ring("Z6").sets
    assert (s.idempotents, s.nilpotents, s.units, s.jacobson) == ((0, 1, 3, 4), (0,), (1, 5), (0,))
    s = build_ring("Z4").sets
    assert (s.idempotents, s.nilpotents, s.units, s.jacobson) == ((0, 1), (0, 2), (1, 3), (0, 2))


def test_matrix_ring_center():
    r = build_ring("Morita(Z2, Z2, Z2, Z2, mul)")
    assert [r.display(x) for x in r.sets.center] == ["[[0,0],[0,0]]", "[[1,0],[0,1]]"]


@settings(max_examples=40, deadline=None)
@given(oracles.small_specs())
def test_axioms_hold(spec):
    build_ring(spec).check_axioms()


@settings(max_examples=40, deadline=None)
@given(oracles.small_specs())
def test_element_sets_match_brute_force(spec):
    r = build_ring(spec)
    s = r.sets
    assert set(s.idempotents) == oracles.idempotents(r)
    assert set(s.nilpotents) == oracles.nilpotents(r)
    assert set(s.units) == oracles.units(r)
    assert set(s.center) == oracles.center(r)
    assert set(s.jacobson) == oracles.jacobson(r)
    assert s.jacobson == s.jacobson_one_sided()
    for x in s.nilpotents:
        k = nilpotency_index(Elem(r, x))
        assert oracles.power(r, x, k) == r.zero
        assert k == 1 or oracles.power(r, x, k - 1) != r.zero


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 60))
def test_residue_closed_forms(n):
    r = build_ring(f"Z{n}")
    primes = [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]
    rad = int(np.prod(primes)) if primes else 1
    assert len(r.sets.idempotents) == (2 ** len(primes) if n > 1 else 1)
    assert set(r.sets.nilpotents) == {x for x in range(n) if x % rad == 0}
    assert set(r.sets.units) == oracles.zn_units(n)
    assert set(r.sets.jacobson) == set(r.sets.nilpotents)


@settings(max_examples=40, deadline=None)
@given(oracles.small_specs(), st.data())
def test_display_parse_round_trip(spec, data):
    r = build_ring(spec)
    x = data.draw(st.integers(0, r.size - 1))
    assert r.parse(r.display(x)) == x
    assert Elem(r, x) == r.display(x)


@given(st.integers(2, 30), st.integers(-100, 100), st.integers(-100, 100))
def test_residue_arithmetic(n, a, b):
    r = ResidueRing(n)
    ea, eb = r.elem(a % n), r.elem(b % n)
    assert int(ea + eb) == (a + b) % n
    assert int(ea * eb) == (a * b) % n
    assert int(ea - eb) == (a - b) % n
    assert int(ea ** 3) == pow(a, 3, n)
    assert r.from_int(a) == a % n


def test_size_cap():
    with pytest.raises(SizeLimitError):
        build_ring("Z10 x Z10", cap=50)
    with pytest.raises(SizeLimitError):
        build_ring("T2(Z8)", cap=100)


def test_bad_tables_rejected():
    add = np.array([[0, 1], [1, 0]])
    mul = np.array([[0, 0], [0, 0]])
    with pytest.raises(RingError):
        FiniteRing(add, mul, one=1).check_axioms()


def test_parse_errors():
    r = build_ring("Z6")
    with pytest.raises(RingError):
        r.parse("seven")
    with pytest.raises(RingError):
        r.parse(6)


def test_split_top():
    assert split_top("[[0,1],[0,0]], 2") == ["[[0,1],[0,0]]", "2"]


def test_tables_read_only():
    r = build_ring("Z4")
    with pytest.raises(ValueError):
        r.add_table[0, 0] = 1


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 40))
def test_unit_count_matches_totient(n):
    r = build_ring(f"Z{n}")
    assert len(r.sets.units) == sum(1 for k in range(n) if gcd(k, n) == 1)
