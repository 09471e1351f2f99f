import json

import pytest

from vietamat.verify import (
    IDENTITIES,
    NodeGenerationError,
    UnknownIdentityError,
    VerifyConfig,
    identity_names,
    random_node_set,
    run_identity,
    run_suite,
    trial_rng,
)


def test_trial_rng_is_deterministic_and_split():
    a = trial_rng(42, "theorem1", 0).random()
    b = trial_rng(42, "theorem1", 0).random()
    assert a == b
    assert trial_rng(42, "theorem1", 1).random() != a
    assert trial_rng(42, "corollary1", 0).random() != a
    assert trial_rng(43, "theorem1", 0).random() != a


def test_config_validation():
    VerifyConfig(n_lo=1, n_hi=10, coeff_bound=1)
    with pytest.raises(ValueError):
        VerifyConfig(n_lo=0, n_hi=5)
    with pytest.raises(ValueError):
        VerifyConfig(n_lo=3, n_hi=2)
    with pytest.raises(ValueError):
        VerifyConfig(n_lo=1, n_hi=11)
    with pytest.raises(ValueError):
        VerifyConfig(coeff_bound=0)


def test_random_node_set_respects_bounds():
    cfg = VerifyConfig(n_lo=2, n_hi=4, coeff_bound=5)
    for trial in range(50):
        ns = random_node_set(trial_rng(7, "gen", trial), cfg)
        assert 2 <= len(ns) <= 4
        for a in ns:
            # canonicalization only shrinks the raw draws
            assert abs(a.numerator) <= 5
            assert 1 <= a.denominator <= 5


def test_random_node_set_min_n_and_cap():
    cfg = VerifyConfig(n_lo=1, n_hi=10, coeff_bound=5)
    for trial in range(30):
        rng = trial_rng(11, "gen", trial)
        assert len(random_node_set(rng, cfg, min_n=2, cap=3)) in (2, 3)


def test_random_node_set_distinct():
    cfg = VerifyConfig(n_lo=6, n_hi=6, coeff_bound=50)
    for trial in range(20):
        ns = random_node_set(trial_rng(3, "gen", trial), cfg, distinct=True)
        assert len(set(ns.nodes)) == len(ns)


def test_distinct_generation_exhaustion():
    # bound 1 only allows values -1, 0, 1; five distinct nodes cannot exist
    cfg = VerifyConfig(n_lo=5, n_hi=5, coeff_bound=1)
    with pytest.raises(NodeGenerationError):
        random_node_set(trial_rng(0, "gen", 0), cfg, distinct=True)


def test_run_identity_report_shape():
    cfg = VerifyConfig(n_lo=1, n_hi=4, coeff_bound=10)
    report = run_identity("theorem1", 25, 42, cfg)
    assert report.identity == "theorem1"
    assert report.trials == 25
    assert report.failures == 0
    assert report.seed == 42
    assert report.first_counterexample is None
    assert report.elapsed_ms >= 0


def test_json_line_is_deterministic_and_excludes_timing():
    cfg = VerifyConfig(n_lo=1, n_hi=4, coeff_bound=10)
    first = run_identity("sign_bridge", 40, 9, cfg)
    second = run_identity("sign_bridge", 40, 9, cfg)
    assert first.json_line() == second.json_line()
    payload = json.loads(first.json_line())
    assert set(payload) == {"identity", "trials", "failures", "seed", "first_counterexample"}


def test_unknown_identity():
    cfg = VerifyConfig()
    with pytest.raises(UnknownIdentityError):
        run_identity("nope", 1, 0, cfg)
    with pytest.raises(UnknownIdentityError):
        run_suite(["theorem1", "nope"], 1, 0, cfg)


def test_argument_validation():
    cfg = VerifyConfig()
    with pytest.raises(ValueError):
        run_identity("theorem1", 0, 0, cfg)
    with pytest.raises(ValueError):
        run_identity("theorem1", 1, -1, cfg)
    with pytest.raises(ValueError):
        run_identity("theorem1", 1, 2**64, cfg)


def test_failure_accounting(monkeypatch):
    calls = []

    def always_fails(rng, cfg):
        calls.append(1)
        return ("1", "2")

    monkeypatch.setitem(IDENTITIES, "always_fails", always_fails)
    report = run_identity("always_fails", 7, 0, VerifyConfig())
    assert report.failures == 7
    assert len(calls) == 7
    assert report.first_counterexample == ("1", "2")
    line = json.loads(report.json_line())
    assert line["first_counterexample"] == ["1", "2"]


def test_run_suite_all_covers_registry():
    cfg = VerifyConfig(n_lo=1, n_hi=3, coeff_bound=8)
    reports = run_suite("all", 2, 5, cfg)
    assert tuple(r.identity for r in reports) == identity_names()
    assert all(r.failures == 0 for r in reports)


@pytest.mark.parametrize("name", identity_names())
def test_each_identity_passes_briefly(name):
    cfg = VerifyConfig(n_lo=1, n_hi=5, coeff_bound=20)
    report = run_identity(name, 10, 1234, cfg)
    assert report.failures == 0, report.first_counterexample
