import json
import time

import pytest

from nilclean import build_ring
from nilclean.theorems import (
    CATALOG,
    CorpusConfig,
    build_corpus,
    complete_central_sets,
    run_all,
    run_statement,
)


def test_catalog_has_every_statement():
    assert sorted(CATALOG) == sorted([
        "STMT-L1", "STMT-PPP1", "STMT-JAC", "STMT-STRONG", "STMT-UNIQC", "STMT-T111", "STMT-LOCAL",
        "STMT-MAIN", "STMT-CSET", "STMT-PEIRCE", "STMT-QUOT", "STMT-HOM", "STMT-PROD", "STMT-D211",
        "STMT-T2", "STMT-RM", "STMT-RM1", "STMT-CORNER", "STMT-MORL", "STMT-MORP", "STMT-MORZ"])
    assert all(s.kind in ("iff", "implies") for s in CATALOG.values())


def test_empty_corpus_is_vacuous():
    reports = run_all(CorpusConfig.empty())
    assert len(reports) == 21
    assert all(r.passed and r.instances == 0 and r.vacuous == 0 for r in reports)


def test_small_residue_corpus_passes_quickly():
    start = time.perf_counter()
    reports = run_all(CorpusConfig.empty(zn_max=10))
    assert time.perf_counter() - start < 1.0
    assert all(r.passed for r in reports)


def test_config_expansion():
    specs = CorpusConfig.empty(zn_max=6).ring_specs()
    assert specs == ["Z1", "Z2", "Z3", "Z4", "Z5", "Z6"]
    default = CorpusConfig().ring_specs()
    assert "T2(Z4)" in default and "Morita(Z2, Z2, Z2, Z2, zero)" in default
    assert "Morita(Z2, Z2, Z2, Z2, mul)" in default
    assert len(default) == len(set(default))


def test_config_json(tmp_path):
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps({"zn_max": 4, "product_factors": [[2, 2]], "triangular": [], "idealizations": [],
                                "morita": []}))
    assert CorpusConfig.load(path).ring_specs() == ["Z1", "Z2", "Z3", "Z4", "Z2 x Z2"]
    path.write_text(json.dumps({"rings": 3}))
    with pytest.raises(ValueError):
        CorpusConfig.load(path)


def test_prod_negative_instance():
    corpus = build_corpus(CorpusConfig.empty(product_factors=[[6, 6]]))
    report = run_statement("STMT-PROD", corpus)
    assert report.passed and report.instances == 16
    from nilclean.theorems import _Tally, TheoremReport, check_prod

    seen = TheoremReport("STMT-PROD", "", "iff")
    tally = _Tally(seen)
    records = []
    original = tally.check
    tally.check = lambda ok, vacuous=False, **p: (records.append(p), original(ok, vacuous, **p))
    check_prod(corpus, tally)
    witnesses = {r["ideal"]: r["witness"] for r in records}
    assert witnesses["<2>x<2>"] == "(4,2)"


def test_rm_on_idealization():
    report = run_statement("STMT-RM", CorpusConfig.empty(idealizations=[[2, 2]]))
    assert report.passed and report.instances == 4


def test_rm1_reports_non_ideal_pairs():
    report = run_statement("STMT-RM1", CorpusConfig.empty(idealizations=[[2, 2]]))
    assert report.passed
    assert "non-ideal" in report.notes


def test_uniqc_and_local_have_real_instances():
    corpus = CorpusConfig.empty(zn_max=12)
    for sid in ("STMT-UNIQC", "STMT-LOCAL"):
        r = run_statement(sid, corpus)
        assert r.passed and r.non_vacuous >= 1


def test_complete_central_sets():
    r = build_ring("Z2 x Z2 x Z2")
    sets = complete_central_sets(r)
    sizes = sorted(len(s) for s in sets)
    assert sizes.count(1) == 1 and sizes.count(2) == 3 and sizes.count(3) == 1


def test_error_becomes_failed_report(monkeypatch):
    from nilclean import theorems

    def boom(corpus, tally):
        raise RuntimeError("broken")

    st = theorems.CATALOG["STMT-D211"]
    monkeypatch.setitem(theorems.CATALOG, "STMT-D211", type(st)(st.id, st.claim, st.kind, boom))
    report = run_statement("STMT-D211", CorpusConfig.empty(zn_max=2))
    assert report.verdict == "error" and not report.passed


def test_reports_serialize():
    r = run_statement("STMT-D211", CorpusConfig.empty(triangular=[[2, 2]]))
    d = r.to_dict(timing=False)
    assert "wall_time" not in d and d["instances"] == 8
    json.dumps(d)


@pytest.mark.parametrize("sid", sorted(CATALOG))
def test_each_statement_on_mixed_corpus(sid):
    config = CorpusConfig.empty(zn_max=12, product_factors=[[2, 3], [2, 4], [4, 4]], triangular=[[2, 2], [2, 4]],
                                idealizations=[[4, 2], [4, 4]],
                                morita=["Morita(Z2, Z2, Z2, Z2, zero)", "Morita(Z2, Z2, Z2, Z2, mul)"])
    report = run_statement(sid, config)
    assert report.verdict == "pass", report.counterexamples
