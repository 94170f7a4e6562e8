import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ffappell.ff_core import field_of_order
from ffappell.hyper import binomial_table
from ffappell.identities import (
    BudgetExceeded, batch_ok, check_all, check_identity, domain_size, get, registry, variants,
)

IDS = [s.id for s in registry()]
REPORT_KEYS = {"identity", "q", "mode", "strategy", "seed", "tuples_checked", "rejected",
               "failures", "elapsed_ms", "quarantined"}


def test_registry_shape():
    assert len(IDS) == len(set(IDS)) == 28
    assert all(s.citation for s in registry())
    for prefix in ("binom-sym-", "thm35-t"):
        assert sum(i.startswith(prefix) for i in IDS) in (3, 4)
    assert {s.id for s in registry() if s.quarantined} == {"thm32-a", "thm32-b"}
    assert not set(IDS) & {v.id for v in variants()}


@pytest.mark.parametrize("ident", IDS)
def test_domain_total(ident):
    spec = get(ident)
    F = field_of_order(4)
    names = [n for n, _ in spec.params]
    ranges = [range(F.n) if k == "character" else range(F.q) for _, k in spec.params]
    for combo in itertools.islice(itertools.product(*ranges), 5000):
        assert spec.admits(F, dict(zip(names, combo))) in (True, False)


def test_f2_symmetry_q3_count():
    r = check_identity(get("f2-symmetry"), 3, "exhaustive")
    assert r.failures == [] and r.tuples_checked == 2 ** 5 * 3 ** 2 == domain_size(get("f2-symmetry"), 3)


@pytest.mark.parametrize("ident,q", [("f21-at-1", 5), ("thm42-genfun", 4), ("greene-2f1-eps", 5)])
def test_examples_pass(ident, q):
    r = check_identity(get(ident), q, "exhaustive")
    assert r.passed and r.tuples_checked > 0


def test_budget():
    with pytest.raises(BudgetExceeded) as exc:
        check_identity(get("thm42-genfun"), 5, "exhaustive", budget=1000)
    assert exc.value.size == domain_size(get("thm42-genfun"), 5)


def test_check_all_bad_q():
    reports = check_all([6], ids=["binom-sym-1", "f2-symmetry"])
    assert len(reports) == 2
    assert all(r.error and r.error.startswith("NotPrime") for r in reports)
    assert not batch_ok(reports)


def _strip(reports):
    return [{k: v for k, v in r.to_json().items() if k != "elapsed_ms"} for r in reports]


def test_sampled_deterministic():
    ids = ["f2-def-eq-charsum", "thm33-bailey", "thm32-a"]
    a = check_all([7], strategy="sampled", seed=42, samples=300, ids=ids)
    b = check_all([7], strategy="sampled", seed=42, samples=300, ids=ids)
    assert json.dumps(_strip(a)) == json.dumps(_strip(b))
    assert all(r.tuples_checked == 300 for r in a)
    c = check_all([7], strategy="sampled", seed=43, samples=300, ids=ids)
    assert _strip(c) != _strip(a)


def test_parallel_matches_serial():
    ids = ["binom-theorem", "f21-at-1", "thm35-t1"]
    serial = check_all([5], ids=ids)
    parallel = check_all([5], ids=ids, jobs=2)
    assert _strip(serial) == _strip(parallel)


def test_report_schema():
    r = check_identity(get("binom-sym-1"), 3, "exhaustive")
    assert set(r.to_json()) == REPORT_KEYS
    json.dumps(r.to_json())


def test_quarantined_witnesses_recheck():
    spec = get("thm32-a")
    r = check_identity(spec, 4, "exhaustive")
    assert r.quarantined and r.failures
    bt = binomial_table(field_of_order(4))
    for f in r.failures[:20]:
        p = f["params"]
        assert p["A"] == p["Cp"]
        assert spec.lhs(bt, **p).reduce().to_list() == f["lhs"]
        assert spec.rhs(bt, **p).reduce().to_list() == f["rhs"]
        assert f["lhs"] != f["rhs"]
    assert r.failures == sorted(r.failures, key=lambda f: tuple(f["params"].values()))
    assert batch_ok([r])


@pytest.mark.parametrize("ident", ["thm32-a-derived", "thm32-b-derived"])
@pytest.mark.parametrize("q", [3, 4, 5])
def test_corrected_reductions(ident, q):
    assert check_identity(get(ident), q, "exhaustive").passed


def test_thm34_bare_term_is_needed():
    assert check_identity(get("thm34-bprime"), 5, "exhaustive").passed
    r = check_identity(get("thm34-bprime-variant"), 5, "exhaustive")
    assert r.failures


def test_thm42_needs_nonzero_x():
    r = check_identity(get("thm42-genfun-x0"), 4, "exhaustive")
    assert r.failures


def test_float_mode_matches_exact():
    for ident in ("trinomial", "f2-def-eq-charsum", "thm43-a"):
        ex = check_identity(get(ident), 4, "exhaustive")
        fl = check_identity(get(ident), 4, "exhaustive", mode="float")
        assert ex.passed and fl.passed and fl.tuples_checked == ex.tuples_checked


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(IDS), st.sampled_from([7, 8, 9, 11]), st.integers(0, 10 ** 6))
def test_unquarantined_hold_on_random_seeds(ident, q, seed):
    r = check_identity(get(ident), q, "sampled", seed=seed, samples=15)
    assert r.error is None
    assert r.quarantined or not r.failures, r.failures[:1]
