import pytest

from riccikit import families
from riccikit.checks import ALL_CHECKS, run_checks

from oracles import star_with_pendants


def _by_name(results):
    return {r.name: r for r in results}


def test_all_checks_pass_on_triangle():
    g, rot = families.complete(3)
    results = _by_name(run_checks(g, rot=rot, seed=3))
    assert set(results) == set(ALL_CHECKS)
    assert not any(r.failed for r in results.values())
    assert results["lemma3"].status == "pass"
    assert results["gauss-bonnet"].status == "pass"
    assert results["positivity"].status == "pass"


def test_checks_on_cycle_are_vacuous_but_green():
    g, rot = families.cycle(6)
    results = _by_name(run_checks(g, rot=rot, seed=0))
    assert not any(r.failed for r in results.values())
    assert "vacuous" in results["positivity"].details
    assert "not applicable" in results["degree-audit"].details


def test_lemma3_skipped_on_large_graphs(figure1_pair):
    g, rot = figure1_pair
    results = _by_name(run_checks(g, rot=rot, checks=["lemma3"], seed=0))
    assert results["lemma3"].status == "skip"


def test_lemma4_flags_star_with_pendants():
    g, *_ = star_with_pendants()
    results = _by_name(run_checks(g, checks=["lemma4"], seed=0))
    assert results["lemma4"].failed
    assert "failing instance" in results["lemma4"].details


def test_gauss_bonnet_skipped_without_rotation(k3):
    results = _by_name(run_checks(k3, checks=["gauss-bonnet"]))
    assert results["gauss-bonnet"].status == "skip"


def test_check_selection_and_unknown(k3):
    results = run_checks(k3, checks=["duality", "integrality"], seed=1)
    assert [r.name for r in results] == ["duality", "integrality"]
    with pytest.raises(ValueError, match="unknown check"):
        run_checks(k3, checks=["nonsense"])


def test_checks_are_seed_deterministic(k3):
    a = run_checks(k3, seed=42)
    b = run_checks(k3, seed=42)
    assert a == b
