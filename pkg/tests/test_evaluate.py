import random

import pytest

from dlbackdoor import cnf
from dlbackdoor.brute import enumerate_extensions, has_consistent_extension
from dlbackdoor.defaults import DefaultTheory, theory_reduct
from dlbackdoor.detect import detect_backdoor
from dlbackdoor.entailment import BackdoorMisuseError
from dlbackdoor.evaluate import (
    EXTENSION_EXISTS,
    NO_EXTENSION,
    OverBudgetError,
    evaluate_backdoor,
    reduct_extensions,
    solve,
)
from dlbackdoor.gen import random_theory
from helpers import (
    F,
    X,
    Y,
    Z,
    reduct_example_theory,
    rule,
    theory_empty_d1,
    theory_x_d1,
    theory_x_d2,
)


def as_reduct(theory):
    return theory_reduct(theory, {})


def test_reduct_extensions_monotone_single_candidate():
    theory = DefaultTheory((F([X]),), (rule([[X]], [[Y]], [[Z]]),))
    found = list(reduct_extensions(as_reduct(theory), "monotone"))
    assert len(found) == 1
    assert found[0].generating == frozenset({0})
    assert F([X]) in found[0].base


def test_reduct_extensions_id_drops_bottom_justifications():
    theory = DefaultTheory((F([X]),), (rule([], [[]], [[Y]]),))
    found = list(reduct_extensions(as_reduct(theory), "id"))
    assert len(found) == 1
    assert found[0].generating == frozenset()


def test_reduct_extensions_monotone_inconsistent_yields_nothing():
    theory = DefaultTheory((cnf.BOTTOM,), ())
    assert list(reduct_extensions(as_reduct(theory), "monotone")) == []


def test_reduct_extensions_class_guard():
    theory = DefaultTheory((F([-X]),), ())
    with pytest.raises(BackdoorMisuseError):
        list(reduct_extensions(as_reduct(theory), "monotone"))


def test_reduct_extensions_exhaustive_matches_brute():
    rng = random.Random(79)
    for _ in range(40):
        theory = random_theory(rng, max_vars=3, max_rules=3).remove_tautologies()
        reduct = as_reduct(theory)
        found = list(reduct_extensions(reduct, "cnf"))
        expected = [
            c
            for c in (
                enumerate_extensions(reduct.theory)
            )
        ]
        assert {c.generating for c in found} >= {c.generating for c in expected}


def test_evaluate_counts_all_reducts_when_no_extension():
    theory = theory_x_d1()
    report = evaluate_backdoor(theory, {X, Y}, "id")
    assert report.answer == NO_EXTENSION
    assert report.witness is None
    assert report.stats["reducts"] == 9  # 3^2 threefold assignments
    assert report.backdoor == (X, Y)


def test_evaluate_finds_extension_through_id_backdoor():
    theory = reduct_example_theory()
    report = evaluate_backdoor(theory, {X, Y}, "id")
    assert report.answer == EXTENSION_EXISTS
    assert report.witness is not None
    assert report.witness.base == (F([X]), F([-Y, X]))
    assert report.stats["reducts"] <= 9  # early exit allowed


def test_evaluate_monotone_and_find_all():
    theory = theory_x_d2()
    backdoor = detect_backdoor(theory, "monotone", 3)
    assert backdoor == frozenset({Y, Z})
    report = evaluate_backdoor(theory, backdoor, "monotone", find_all=True)
    assert report.answer == EXTENSION_EXISTS
    assert len(report.witnesses) == 2
    assert {w.generating for w in report.witnesses} == {
        frozenset({0}),
        frozenset({1}),
    }
    assert report.stats["reducts"] == 9


def test_evaluate_rejects_non_backdoor():
    with pytest.raises(BackdoorMisuseError):
        evaluate_backdoor(theory_x_d1(), set(), "monotone")


def test_oracle_modes_agree_end_to_end():
    for theory in (theory_empty_d1(), theory_x_d1(), theory_x_d2(), reduct_example_theory()):
        for tag in ("monotone", "id"):
            backdoor = detect_backdoor(theory, tag, 4)
            assert backdoor is not None
            answers = {
                evaluate_backdoor(theory, backdoor, tag, oracle).answer
                for oracle in ("general", "auto", "backdoor")
            }
            assert len(answers) == 1


def test_solve_matches_brute_force_on_random_theories():
    rng = random.Random(83)
    checked = 0
    for _ in range(60):
        theory = random_theory(rng, max_vars=3, max_rules=3, max_clauses=2, max_lits=2)
        expected = has_consistent_extension(theory.remove_tautologies())
        for tag in cnf.ALL_CLASSES:
            backdoor = detect_backdoor(theory.remove_tautologies(), tag, 3)
            if backdoor is None:
                continue
            checked += 1
            report = solve(theory, tag, 3)
            assert report.backdoor == tuple(sorted(backdoor))
            assert (report.answer == EXTENSION_EXISTS) == expected
    assert checked > 50


def test_solve_brute_fallback_when_no_backdoor():
    theory = theory_x_d1()
    report = solve(theory, "monotone", 0)
    assert report.backdoor is None
    assert report.answer == NO_EXTENSION
    assert "brute" in report.timings_ms


def test_solve_over_budget():
    rules = tuple(rule([], [], [[-i]]) for i in range(1, 23))
    theory = DefaultTheory((), rules)
    with pytest.raises(OverBudgetError):
        solve(theory, "monotone", 0)


def test_report_json_shape():
    report = solve(reduct_example_theory(), "id", 2)
    payload = report.to_json_dict()
    assert payload["answer"] == EXTENSION_EXISTS
    assert payload["class"] == "id"
    assert payload["backdoor"] == [Y]  # the negatively-occurring variable suffices
    assert payload["witness"]["generating"] == [0]
    assert payload["witness"]["base_formulas"] == [[[1]], [[-2, 1]]]
    assert set(payload["stats"]) == {"reducts", "candidates", "oracle_calls"}
    assert "detect" in payload["timings_ms"] and "evaluate" in payload["timings_ms"]
