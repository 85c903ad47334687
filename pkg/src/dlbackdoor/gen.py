"""Random theory generator for the test harness and the gen subcommand.

Generated theories are tautology-free by construction (clauses sample
distinct variables).
"""

from __future__ import annotations

import random

from dlbackdoor.defaults import DefaultRule, DefaultTheory


def random_formula(rng: random.Random, nvars: int, max_clauses: int, max_lits: int):
    n_clauses = rng.randint(0, max_clauses)
    clauses = []
    for _ in range(n_clauses):
        width = rng.randint(1, min(max_lits, nvars))
        vs = rng.sample(range(1, nvars + 1), width)
        clauses.append(frozenset(v if rng.random() < 0.5 else -v for v in vs))
    return frozenset(clauses)


def random_theory(
    rng: random.Random,
    max_vars: int = 5,
    max_rules: int = 4,
    max_clauses: int = 2,
    max_lits: int = 3,
) -> DefaultTheory:
    nvars = rng.randint(1, max_vars)
    n_knowledge = rng.randint(0, 2)
    knowledge = tuple(
        random_formula(rng, nvars, max_clauses, max_lits) for _ in range(n_knowledge)
    )
    n_rules = rng.randint(0, max_rules)
    rules = tuple(
        DefaultRule(
            random_formula(rng, nvars, max_clauses, max_lits),
            random_formula(rng, nvars, max_clauses, max_lits),
            random_formula(rng, nvars, max_clauses, max_lits),
        )
        for _ in range(n_rules)
    )
    return DefaultTheory(knowledge, rules)
