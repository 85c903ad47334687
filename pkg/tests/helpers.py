"""Shared test fixtures: worked theories and an independent truth-table
oracle for satisfiability and entailment."""

import itertools

from dlbackdoor import cnf
from dlbackdoor.defaults import DefaultRule, DefaultTheory

X, Y, Z = 1, 2, 3

F = cnf.formula


def rule(pre, just, concl):
    return DefaultRule(F(*pre), F(*just), F(*concl))


def d1_rules():
    # {x:y / not y, not x:y / not y} with x=1, y=2
    return (rule([[X]], [[Y]], [[-Y]]), rule([[-X]], [[Y]], [[-Y]]))


def d2_rules():
    # {x:z / not y, x:y / not z} with x=1, y=2, z=3
    return (rule([[X]], [[Z]], [[-Y]]), rule([[X]], [[Y]], [[-Z]]))


def theory_empty_d1():
    return DefaultTheory((), d1_rules())


def theory_x_d1():
    return DefaultTheory((F([X]),), d1_rules())


def theory_x_d2():
    return DefaultTheory((F([X]),), d2_rules())


def reduct_example_theory():
    # <{x}, {x:y / (not y or x)}> with x=1, y=2
    return DefaultTheory((F([X]),), (rule([[X]], [[Y]], [[-Y, X]]),))


def tt_satisfiable(clauses):
    """Exhaustive truth-table satisfiability over the clause variables."""
    variables = sorted({abs(l) for c in clauses for l in c})
    for bits in itertools.product((False, True), repeat=len(variables)):
        assignment = dict(zip(variables, bits))
        if all(any((l > 0) == assignment[abs(l)] for l in c) for c in clauses):
            return True
    return False


def tt_entails(premise_clauses, psi):
    """premise |= psi by exhaustive truth tables over both variable sets."""
    variables = sorted(
        {abs(l) for c in premise_clauses for l in c}
        | {abs(l) for c in psi for l in c}
    )
    for bits in itertools.product((False, True), repeat=len(variables)):
        assignment = dict(zip(variables, bits))

        def holds(clauses):
            return all(
                any((l > 0) == assignment[abs(l)] for l in c) for c in clauses
            )

        if holds(premise_clauses) and not holds(psi):
            return False
    return True


def is_subformula(f_small, f_big):
    """Every clause of f_small is a subset of some clause of f_big."""
    return all(any(c <= d for d in f_big) for c in f_small)
