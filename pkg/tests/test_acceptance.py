"""Acceptance criteria, one test each, at their stated tolerances.

Each test records a PASS/FAIL line that is repeated in the pytest summary.
"""

import json
import subprocess
import sys
import time

import numpy as np
import pytest

from conftest import record
from nilclean import (
    Flavor,
    build_ring,
    classify_ideal,
    classify_ring,
    ideal_generated_by,
    verify_certificate,
)
from nilclean.cleanness import DecompositionCertificate, decomposition_table, _restricted_table
from nilclean.ideals import all_ideals
from nilclean.theorems import jacobson_disagreements, lifting_disagreements, run_all

WNC, NC, WC = Flavor.WEAK_NIL_CLEAN, Flavor.NIL_CLEAN, Flavor.WEAKLY_CLEAN


def _warm():
    r = build_ring("Z10")
    classify_ideal(ideal_generated_by(r, ["2"]), WNC)


def test_criterion_1_z6():
    _warm()
    start = time.perf_counter()
    ring = build_ring("Z6")
    ideal = ideal_generated_by(ring, ["2"])
    wnc = classify_ideal(ideal, WNC)
    nc = classify_ideal(ideal, NC)
    elapsed = time.perf_counter() - start
    ok = wnc.holds and not nc.holds and nc.failure_display == "2" and elapsed < 0.010
    record(1, ok, f"Z6 <2>: wnc={wnc.holds} nc={nc.holds} witness={nc.failure_display} in {elapsed * 1e3:.2f} ms")
    assert ok


def test_criterion_2_z15():
    _warm()
    start = time.perf_counter()
    ring = build_ring("Z15")
    ideal = ideal_generated_by(ring, ["3"])
    wc = classify_ideal(ideal, WC)
    wnc = classify_ideal(ideal, WNC)
    elapsed = time.perf_counter() - start
    ok = wc.holds and not wnc.holds and wnc.failure_display == "3" and elapsed < 0.010
    record(2, ok, f"Z15 <3>: wc={wc.holds} wnc={wnc.holds} witness={wnc.failure_display} in {elapsed * 1e3:.2f} ms")
    assert ok


def test_criterion_3_prime_squares():
    _warm()
    start = time.perf_counter()
    details, ok = [], True
    for spec in ("Z49", "Z121"):
        ring = build_ring(spec)
        whole = classify_ring(ring, WNC).holds
        proper = [I for I in all_ideals(ring) if not I.is_whole]
        proper_ok = all(classify_ideal(I, WNC).holds for I in proper)
        ok &= (not whole) and proper_ok
        details.append(f"{spec}: ring={whole} proper({len(proper)})={proper_ok}")
    elapsed = time.perf_counter() - start
    ok &= elapsed < 1.0
    record(3, ok, f"{'; '.join(details)} in {elapsed:.3f} s")
    assert ok


def test_criterion_4_theorem_harness(default_corpus):
    start = time.perf_counter()
    reports = run_all(default_corpus)
    elapsed = time.perf_counter() - start
    by_id = {r.statement: r for r in reports}
    passed = sum(r.passed and r.counterexample_count == 0 for r in reports)
    nonvac = {k: by_id[k].non_vacuous for k in ("STMT-UNIQC", "STMT-LOCAL")}
    ok = len(reports) == 21 and passed == 21 and min(nonvac.values()) >= 1 and elapsed < 300
    failing = [r.statement for r in reports if not r.passed]
    record(4, ok, f"{passed}/{len(reports)} pass over {len(default_corpus)} rings; non-vacuous {nonvac}; "
                  f"{elapsed:.1f} s; failing={failing}")
    assert ok


def _morita_matrix_mismatches():
    ring = build_ring("Morita(Z2, Z2, Z2, Z2, mul)")
    mats = [np.array([[a, m], [n, b]]) for a, m, n, b in ring.coords]
    bad = 0
    for x in range(ring.size):
        for y in range(ring.size):
            p = (mats[x] @ mats[y]) % 2
            bad += ring.encode(int(p[0, 0]), int(p[0, 1]), int(p[1, 0]), int(p[1, 1])) != ring.mul(x, y)
    return ring.size, bad


def test_criterion_5_oracles(default_corpus):
    jac = jacobson_disagreements(default_corpus)
    lifts, lift_bad = lifting_disagreements(default_corpus)
    size, morita_bad = _morita_matrix_mismatches()
    ok = not jac and not lift_bad and lifts > 0 and size == 16 and morita_bad == 0
    record(5, ok, f"(a) J disagreements {len(jac)} over {len(default_corpus)} rings; "
                  f"(b) lifting {len(lift_bad)} bad of {lifts}; (c) Morita {morita_bad} bad of {size * size}")
    assert ok


def _tamperings(cert: DecompositionCertificate):
    R = cert.ring
    one = R.one
    yield "swap e", DecompositionCertificate(cert.flavor, R, cert.x, cert.sign, R.add(cert.e, one), cert.w,
                                             cert.commuting, cert.type_tag)
    yield "flip sign", DecompositionCertificate(cert.flavor, R, cert.x, -cert.sign, cert.e, cert.w,
                                                cert.commuting, cert.type_tag)
    yield "perturb w", DecompositionCertificate(cert.flavor, R, cert.x, cert.sign, cert.e, R.add(cert.w, one),
                                                cert.commuting, cert.type_tag)


def _same_claim(a: DecompositionCertificate, b: DecompositionCertificate) -> bool:
    """True when a tampering leaves the asserted decomposition unchanged (sign*e and w equal)."""
    R = a.ring
    signed = lambda c: c.e if c.sign == 1 else R.neg(c.e)  # noqa: E731
    return signed(a) == signed(b) and a.w == b.w and a.type_tag == b.type_tag and a.e == b.e


def _certificates(entry):
    R = entry.ring
    for flavor in Flavor:
        e_tab, s_tab = decomposition_table(R, flavor)
        for x in np.flatnonzero(e_tab >= 0):
            yield DecompositionCertificate.from_dict(
                _emit(R, flavor, int(x), int(e_tab[x]), int(s_tab[x])), ring=R)
    for I in entry.ideals:
        e_tab, s_tab = _restricted_table(I, WNC)
        for x in np.flatnonzero(e_tab >= 0):
            yield DecompositionCertificate.from_dict(_emit(R, WNC, int(x), int(e_tab[x]), int(s_tab[x])), ring=R)


def _emit(R, flavor, x, e, sign):
    from nilclean.cleanness import _certificate

    return json.loads(json.dumps(_certificate(R, flavor, x, e, sign).to_dict()))


def test_criterion_6_certificates(default_corpus):
    accepted = total = rejected = tampers = no_ops = 0
    missed = []
    for entry in default_corpus:
        R = entry.ring
        if R.size == 1:
            continue  # nothing to tamper with in the zero ring
        assert str(build_ring(str(R.spec)).spec) == str(R.spec)
        for cert in _certificates(entry):
            total += 1
            accepted += verify_certificate(cert)
            for name, bad in _tamperings(cert):
                if _same_claim(cert, bad):
                    no_ops += 1
                    continue
                tampers += 1
                if verify_certificate(bad):
                    missed.append((entry.label, name, cert.to_dict()))
                else:
                    rejected += 1
    ok = total > 0 and accepted == total and rejected == tampers
    record(6, ok, f"accepted {accepted}/{total}; rejected {rejected}/{tampers} tamperings; "
                  f"{no_ops} sign flips with 2e=0 leave the claim unchanged and are not counted; missed {missed[:2]}")
    assert ok


def _theorems_json() -> dict:
    out = subprocess.run([sys.executable, "-m", "nilclean", "theorems", "--corpus", "default", "--format", "json"],
                         capture_output=True, text=True, check=False)
    assert out.returncode in (0, 1), out.stderr
    data = json.loads(out.stdout)
    for r in data["reports"]:
        r.pop("wall_time", None)
    return data


@pytest.mark.slow
def test_criterion_7_determinism():
    first = json.dumps(_theorems_json(), sort_keys=True).encode()
    second = json.dumps(_theorems_json(), sort_keys=True).encode()
    ok = first == second
    record(7, ok, f"two runs, {len(first)} bytes each after stripping timing, identical={ok}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
