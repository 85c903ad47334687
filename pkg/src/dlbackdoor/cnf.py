"""CNF formulas as hashable sets of integer clauses, plus reduct machinery.

Representation conventions (DIMACS-style):
  * a literal is a nonzero int, negative means negated variable
  * a clause is a frozenset of literals; the empty clause is falsum
  * a formula is a frozenset of clauses; the empty formula is verum

Threefold assignments map each domain variable to one of POS, NEG, EPS,
where EPS is the "delete both polarities" choice. A classical assignment
is one with no EPS choices.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping

Clause = frozenset
Formula = frozenset
Assignment = Mapping[int, int]

TOP: Formula = frozenset()
BOTTOM: Formula = frozenset({frozenset()})
EMPTY_CLAUSE: Clause = frozenset()

# assignment choices, in canonical enumeration order
POS, NEG, EPS = 1, -1, 0
CHOICE_ORDER = (POS, NEG, EPS)

CLASS_CNF = "cnf"
CLASS_HORN = "horn"
CLASS_KROM = "krom"
CLASS_MONOTONE = "monotone"
CLASS_ID = "id"
ALL_CLASSES = (CLASS_CNF, CLASS_HORN, CLASS_KROM, CLASS_MONOTONE, CLASS_ID)


def clause(*literals: int) -> Clause:
    """Build a clause from literal ints."""
    if any(l == 0 for l in literals):
        raise ValueError("literal 0 is not allowed")
    return frozenset(literals)


def formula(*clauses: Iterable[int]) -> Formula:
    """Build a formula from iterables of literal ints."""
    return frozenset(frozenset(c) for c in clauses)


def clause_variables(c: Clause) -> set:
    return {abs(l) for l in c}


def variables(f: Formula) -> set:
    out: set = set()
    for c in f:
        for l in c:
            out.add(abs(l))
    return out


def is_tautological_clause(c: Clause) -> bool:
    return any(-l in c for l in c)


def classify_clause(c: Clause) -> set:
    """All class tags admitting the clause, read as at-most forms.

    Every class here is closed under literal deletion, so the empty
    clause belongs to all of them and CNF is always included.
    """
    n_pos = sum(1 for l in c if l > 0)
    n_neg = len(c) - n_pos
    tags = {CLASS_CNF}
    if n_pos <= 1:
        tags.add(CLASS_HORN)
    if len(c) <= 2:
        tags.add(CLASS_KROM)
    if n_neg == 0:
        tags.add(CLASS_MONOTONE)
        if len(c) <= 1:
            tags.add(CLASS_ID)
    return tags


def clause_in_class(c: Clause, tag: str) -> bool:
    if tag not in ALL_CLASSES:
        raise ValueError(f"unknown formula class: {tag!r}")
    return tag in classify_clause(c)


def formula_in_class(f: Formula, tag: str) -> bool:
    return all(clause_in_class(c, tag) for c in f)


def remove_tautologies(f: Formula) -> Formula:
    return frozenset(c for c in f if not is_tautological_clause(c))


def reduct(f: Formula, var: int, choice: int) -> Formula:
    """Reduct of a tautology-free formula under one extended literal.

    choice POS/NEG is the literal var/-var: satisfied clauses vanish and
    the complementary literal is deleted everywhere. choice EPS deletes
    both polarities of var from every clause.
    """
    if var <= 0:
        raise ValueError("variables are positive ints")
    if choice == EPS:
        return frozenset(c - {var, -var} for c in f)
    lit = var * choice
    return frozenset(c - {-lit} for c in f if lit not in c)


def apply_assignment(f: Formula, assignment: Assignment) -> Formula:
    """Fold reducts over the assignment; order independent for
    tautology-free input, we fix ascending variable order."""
    for var in sorted(assignment):
        f = reduct(f, var, assignment[var])
    return f


def enumerate_threefold(xs: Iterable[int], epsilon_only: bool = False) -> Iterator[dict]:
    """All threefold assignments over xs, lexicographic by variable id
    with choice order POS < NEG < EPS; or just the all-epsilon one."""
    order = sorted(set(xs))
    if epsilon_only:
        yield {x: EPS for x in order}
        return
    for combo in itertools.product(CHOICE_ORDER, repeat=len(order)):
        yield dict(zip(order, combo))


def enumerate_classical(xs: Iterable[int]) -> Iterator[dict]:
    """The 2^|xs| epsilon-free assignments, same ordering conventions."""
    order = sorted(set(xs))
    for combo in itertools.product((POS, NEG), repeat=len(order)):
        yield dict(zip(order, combo))
