"""Extension checking: is a candidate a consistent stable extension?

The check gates on consistency first (only consistent extensions count
for the decision problem), then classifies the rules with unviolated
justifications, computes the justification-free fixpoint from W, and
compares it with the candidate by mutual entailment.
"""

from __future__ import annotations

from dlbackdoor.defaults import DefaultTheory, ExtensionCandidate
from dlbackdoor.entailment import entails, entails_all, refutes_justification, satisfiable


def check_extension(theory: DefaultTheory, candidate: ExtensionCandidate, mode="auto") -> bool:
    base = candidate.base
    if not satisfiable(base, mode).satisfiable:
        return False

    unviolated = [
        rule
        for rule in theory.rules
        if not refutes_justification(base, rule.justification, mode)
    ]

    # fixpoint of the justification-free rules; each conclusion joins at
    # most once, so this loops at most |D| times
    closure = list(theory.knowledge)
    added = [False] * len(unviolated)
    changed = True
    while changed:
        changed = False
        for i, rule in enumerate(unviolated):
            if added[i]:
                continue
            if entails(closure, rule.prerequisite, mode):
                closure.append(rule.conclusion)
                added[i] = True
                changed = True

    return entails_all(base, closure, mode) and entails_all(closure, base, mode)
