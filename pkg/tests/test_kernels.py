import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from nilclean import build_ring, kernels

compiled = kernels.compiled_backend
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled extension not built")
py = kernels.python_backend


def _masks(ring):
    s = ring.sets
    return s.is_idem.astype(np.uint8), s.is_nil.astype(np.uint8), s.is_unit.astype(np.uint8)


@needs_compiled
@settings(max_examples=30, deadline=None)
@given(oracles.small_specs())
def test_backends_agree_on_element_sets(spec):
    r = build_ring(spec)
    A, M = r.add_table, r.mul_table
    assert np.array_equal(py.nilpotency_indices(M, r.zero), compiled.nilpotency_indices(M, r.zero))
    assert np.array_equal(py.unit_inverses(M, r.one), compiled.unit_inverses(M, r.one))
    _, _, unit = _masks(r)
    om = np.asarray(r.sets.one_minus, dtype=np.int32)
    for two_sided in (True, False):
        assert np.array_equal(py.jacobson_mask(M, om, unit, two_sided), compiled.jacobson_mask(M, om, unit, two_sided))


@needs_compiled
@settings(max_examples=30, deadline=None)
@given(oracles.small_specs(), st.data())
def test_backends_agree_on_closures(spec, data):
    r = build_ring(spec)
    gens = np.asarray(data.draw(st.lists(st.integers(0, r.size - 1), min_size=1, max_size=3)), dtype=np.int32)
    a = py.two_sided_products(r.mul_table, gens)
    b = compiled.two_sided_products(r.mul_table, gens)
    assert np.array_equal(np.asarray(a, dtype=bool), np.asarray(b, dtype=bool))
    assert np.array_equal(np.asarray(py.subgroup_closure(r.add_table, a), dtype=bool),
                          np.asarray(compiled.subgroup_closure(r.add_table, b), dtype=bool))


@needs_compiled
@settings(max_examples=30, deadline=None)
@given(oracles.small_specs(), st.booleans(), st.booleans(), st.booleans())
def test_backends_agree_on_search(spec, weak, strong, nil):
    r = build_ring(spec)
    idem, nilm, unit = _masks(r)
    target = nilm if nil else unit
    xs = np.arange(r.size, dtype=np.int32)
    idem_idx = np.flatnonzero(idem).astype(np.int32)
    args = (r.add_table, np.asarray(r.neg_table, dtype=np.int32), r.mul_table, xs, idem_idx, target, weak, strong)
    ea, sa = py.decompose_search(*args)
    eb, sb = compiled.decompose_search(*args)
    assert np.array_equal(ea, eb) and np.array_equal(sa, sb)


def test_nilpotency_indices_match_powers():
    r = build_ring("Z72")
    idx = kernels.nilpotency_indices(r.mul_table, r.zero)
    for x in range(r.size):
        k = int(idx[x])
        if k:
            assert oracles.power(r, x, k) == 0 and (k == 1 or oracles.power(r, x, k - 1) != 0)
        else:
            assert oracles.power(r, x, r.size) != 0


def test_environment_forces_python_backend():
    env = dict(os.environ, NILCLEAN_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import nilclean; print(nilclean.BACKEND)"],
                         capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "python"


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
    assert kernels.BACKEND == ("cython" if compiled is not None and not os.environ.get("NILCLEAN_PURE_PYTHON")
                               else "python")
