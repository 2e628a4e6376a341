import json

import pytest

from youngfock.suites import SUITES, run_suite


def test_suite_registry_complete():
    assert set(SUITES) == {
        "heisenberg", "sl2", "virasoro-cc", "kerov-equiv", "rimhook-equiv",
        "determinancy", "z-linearity", "rank", "kernels", "m-virasoro",
        "prop52", "prop62",
    }


def test_unknown_suite_raises():
    with pytest.raises(KeyError):
        run_suite("no-such-suite")


@pytest.mark.parametrize("name", ["sl2", "kerov-equiv", "z-linearity", "prop52", "prop62"])
def test_suites_pass_and_serialize(name):
    rep = run_suite(name, seed=5, max_degree=4)
    assert rep["ok"], rep
    json.dumps(rep)  # JSON-clean
    assert rep["identity"]
    assert all("name" in c and "ok" in c for c in rep["checks"])


def test_probe_reports_never_fail_a_suite():
    rep = run_suite("prop62", seed=5, max_degree=3)
    assert rep["ok"]
    assert any(not p.get("holds", True) for p in rep["probes"])


def test_determinancy_reports_the_falsified_identity():
    rep = run_suite("determinancy", seed=5, max_degree=4)
    assert not rep["ok"]
    assert any(c["ok"] for c in rep["checks"])  # single-row checks hold
    failed = [c for c in rep["checks"] if not c["ok"]]
    assert failed and "mismatches" in failed[0]["detail"]
    probes = {p["name"]: p for p in rep["probes"]}
    assert probes["reduction holds when only x_1 is nonzero"]["holds"]
