import pytest

import coxsort.hecke
from coxsort.verify import (CHECK_NAMES, Context, RunConfig, named_system,
                            report_json, run_check, run_verification)

SMALL = RunConfig(groups=("B2",))


def test_named_system():
    assert named_system("A3").rank == 3
    assert named_system("b2").m(1, 2) == 4
    assert len(named_system("I2:7").elements()) == 14
    assert len(named_system("i2.5").elements()) == 10
    assert named_system("H3").m(1, 2) == 5
    assert named_system("D4").rank == 4
    for bad in ("X5", "I3:4", "", "A", "I2:x"):
        with pytest.raises(ValueError, match="unknown group"):
            named_system(bad)


def test_check_names():
    assert len(CHECK_NAMES) == 12
    assert CHECK_NAMES[0] == "boolean_map_worked_example"
    assert CHECK_NAMES[-1] == "oracle_agreement"
    assert len(set(CHECK_NAMES)) == 12


def test_run_check_single():
    r = run_check("boolean_map_worked_example", SMALL)
    assert r.passed
    assert r.instances == 1
    assert r.failures == []
    assert r.statement
    with pytest.raises(ValueError, match="unknown check"):
        run_check("does_not_exist", SMALL)


def test_run_verification_schema():
    report = run_verification(SMALL)
    assert set(report) == {"system", "theorem_results", "timing"}
    assert report["timing"] is None
    assert report["system"]["groups"] == ["B2"]
    assert report["system"]["field"] == 2
    assert report["system"]["seed"] == 0
    results = report["theorem_results"]
    assert [r["name"] for r in results] == list(CHECK_NAMES)
    for r in results:
        assert set(r) == {"name", "statement", "instances", "passed",
                          "failures", "notes"}
        assert r["passed"] is True
        assert r["failures"] == []
        assert r["instances"] > 0


def test_report_is_deterministic():
    a = report_json(run_verification(SMALL))
    b = report_json(run_verification(SMALL))
    assert a == b
    assert a.endswith("\n")


def test_timing_when_requested():
    cfg = RunConfig(groups=("I2:3",), measure_time=True)
    report = run_verification(cfg)
    assert set(report["timing"]) == set(CHECK_NAMES)
    assert all(isinstance(v, float) for v in report["timing"].values())


def test_context_reuse_and_register():
    ctx = Context(SMALL)
    assert ctx.system("B2") is ctx.system("B2")
    other = named_system("A3")
    ctx.register("custom", other)
    assert ctx.system("custom") is other
    table = ctx.leq_table("B2", "bruhat")
    assert len(table) == 64
    assert ctx.leq_table("B2", "bruhat") is table


def test_fault_injection_breaks_sandwich(monkeypatch):
    real = coxsort.hecke.sorting_subword

    def truncated(system, Q, u):
        return real(system, Q, u)[:-1]

    monkeypatch.setattr(coxsort.hecke, "sorting_subword", truncated)
    r = run_check("sorting_sandwich", SMALL)
    assert not r.passed
    assert r.failures
    sample = r.failures[0]
    assert {"group", "w", "Q", "u", "v", "detail"} <= set(sample)
    assert sample["group"] == "B2"


def test_fault_injection_breaks_oracle_agreement(monkeypatch):
    real = coxsort.hecke.sorting_subword

    def shifted(system, Q, u):
        out = real(system, Q, u)
        return out[:-1] if len(out) > 1 else out

    monkeypatch.setattr(coxsort.hecke, "sorting_subword", shifted)
    r = run_check("oracle_agreement", SMALL)
    assert not r.passed
    assert any("sorting subword" in f.get("detail", "") for f in r.failures)
