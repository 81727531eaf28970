"""The twelve acceptance criteria, one test each.

Every test records a one-line PASS/FAIL summary; the lines are printed in
a section of their own at the end of the pytest run.  Run this file as a
script to get the same lines without pytest.
"""
from __future__ import annotations

import pytest

from dtposets.verify import VerifyConfig, run_suite


@pytest.fixture(scope="module")
def cfg(request) -> VerifyConfig:
    return VerifyConfig(seed=0, slow=request.config.getoption("--slow"))


@pytest.fixture(scope="module")
def acyclic_result(cfg):
    return run_suite("acyclic", cfg)


def _record(log, res):
    log.append(res.summary())
    print(res.summary())
    detail = "\n".join(f"{c.name}: {c.detail}" for c in res.failures)
    assert res.passed, detail


def test_twice_punctured_disk_golden_polynomial_has_no_simple_poset(cfg, acceptance_log):
    _record(acceptance_log, run_suite("golden-disk", cfg))


def test_double_arrow_quiver_golden_polynomials_and_ideal_count(cfg, acceptance_log):
    _record(acceptance_log, run_suite("golden-acyclic", cfg))


def test_acyclic_quivers_dt_equals_ascendant_tree(acyclic_result, acceptance_log):
    _record(acceptance_log, acyclic_result)


def test_qn_dt_box_poset_and_web_agree(cfg, acceptance_log):
    _record(acceptance_log, run_suite("qn", cfg))


def test_web_monomial_identity_with_negative_control(cfg, acceptance_log):
    _record(acceptance_log, run_suite("web", cfg))


def test_subquiver_restriction_and_antiideal_deletion(cfg, acceptance_log):
    _record(acceptance_log, run_suite("subquiver", cfg))


def test_triangular_extension_composition(cfg, acceptance_log):
    _record(acceptance_log, run_suite("extension", cfg))


def test_adjacent_seed_transfer(cfg, acceptance_log):
    _record(acceptance_log, run_suite("transfer", cfg))


def test_invariants_along_random_mutation_walks(cfg, acceptance_log):
    _record(acceptance_log, run_suite("invariants", cfg))


def test_poset_lemmas_on_random_posets(cfg, acceptance_log):
    _record(acceptance_log, run_suite("posets", cfg))


def test_markov_bounded_search_and_folded_poset(cfg, acceptance_log):
    _record(acceptance_log, run_suite("markov", cfg))


def test_separation_formula_against_laurent_expansion(cfg, acyclic_result, acceptance_log):
    _record(acceptance_log, run_suite("separation", cfg, acyclic=acyclic_result))


if __name__ == "__main__":
    from dtposets.verify import run_all
    for res in run_all():
        print(res.summary())
