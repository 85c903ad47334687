"""Default rules, theories, theory reducts with fresh markers, and
extension candidates represented by their finite bases.

The deductive closure Th(.) is never materialized: a candidate carries
the base W union selected conclusions, and membership questions are
entailment queries against that base.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from dlbackdoor import cnf
from dlbackdoor.entailment import entails, entails_all


@dataclass(frozen=True)
class DefaultRule:
    prerequisite: cnf.Formula
    justification: cnf.Formula
    conclusion: cnf.Formula

    def formulas(self) -> Tuple[cnf.Formula, ...]:
        return (self.prerequisite, self.justification, self.conclusion)

    def remove_tautologies(self) -> "DefaultRule":
        return DefaultRule(*(cnf.remove_tautologies(f) for f in self.formulas()))


@dataclass(frozen=True)
class DefaultTheory:
    knowledge: Tuple[cnf.Formula, ...]
    rules: Tuple[DefaultRule, ...]

    def formulas(self) -> Tuple[cnf.Formula, ...]:
        out = list(self.knowledge)
        for rule in self.rules:
            out.extend(rule.formulas())
        return tuple(out)

    def variables(self) -> set:
        out: set = set()
        for f in self.formulas():
            out |= cnf.variables(f)
        return out

    def clause_pool(self) -> cnf.Formula:
        pool = set()
        for f in self.formulas():
            pool |= f
        return frozenset(pool)

    def remove_tautologies(self) -> "DefaultTheory":
        return DefaultTheory(
            tuple(cnf.remove_tautologies(f) for f in self.knowledge),
            tuple(r.remove_tautologies() for r in self.rules),
        )


def theory(knowledge: Iterable, rules: Iterable) -> DefaultTheory:
    return DefaultTheory(tuple(knowledge), tuple(rules))


@dataclass(frozen=True)
class ExtensionCandidate:
    """Finite base (W union chosen conclusions) standing for Th(base)."""

    base: Tuple[cnf.Formula, ...]
    generating: frozenset


@dataclass(frozen=True)
class ReductTheory:
    theory: DefaultTheory
    origin: DefaultTheory
    markers: Tuple[int, ...]  # markers[i] is the fresh unit conjoined to rule i
    applied: Tuple[Tuple[int, int], ...]  # the (variable, choice) pairs used


def fresh_markers(origin: DefaultTheory, assignment: cnf.Assignment) -> Tuple[int, ...]:
    # allocated above every input id (and assignment domain), in rule order
    top = max(origin.variables() | set(assignment), default=0)
    return tuple(top + 1 + i for i in range(len(origin.rules)))


def theory_reduct(origin: DefaultTheory, assignment: cnf.Assignment) -> ReductTheory:
    """Component-wise reduct under a threefold assignment, with a fresh
    marker unit conjoined to each rule conclusion."""
    markers = fresh_markers(origin, assignment)
    knowledge = tuple(cnf.apply_assignment(w, assignment) for w in origin.knowledge)
    rules = []
    for i, rule in enumerate(origin.rules):
        rules.append(
            DefaultRule(
                cnf.apply_assignment(rule.prerequisite, assignment),
                cnf.apply_assignment(rule.justification, assignment),
                cnf.apply_assignment(rule.conclusion, assignment) | frozenset({frozenset({markers[i]})}),
            )
        )
    return ReductTheory(
        DefaultTheory(knowledge, tuple(rules)),
        origin,
        markers,
        tuple(sorted(assignment.items())),
    )


def generated_candidate(theory: DefaultTheory, generating: Iterable[int]) -> ExtensionCandidate:
    generating = frozenset(generating)
    if not generating <= set(range(len(theory.rules))):
        raise ValueError("generating set contains invalid rule indices")
    base = theory.knowledge + tuple(theory.rules[i].conclusion for i in sorted(generating))
    return ExtensionCandidate(base, generating)


def entailed_markers(reduct: ReductTheory, candidate: ExtensionCandidate, mode="auto") -> frozenset:
    return frozenset(
        i
        for i, y in enumerate(reduct.markers)
        if entails(candidate.base, frozenset({frozenset({y})}), mode)
    )


def cncl(reduct: ReductTheory, candidate: ExtensionCandidate, mode="auto") -> Tuple[cnf.Formula, ...]:
    """Original conclusions of exactly the rules whose marker is entailed
    by the reduct-level candidate."""
    marked = entailed_markers(reduct, candidate, mode)
    return tuple(reduct.origin.rules[i].conclusion for i in sorted(marked))


def lift(reduct: ReductTheory, candidate: ExtensionCandidate, mode="auto") -> ExtensionCandidate:
    """Lift a reduct-level candidate back to the original theory."""
    marked = entailed_markers(reduct, candidate, mode)
    return generated_candidate(reduct.origin, marked)


def candidates_equivalent(a: ExtensionCandidate, b: ExtensionCandidate, mode="auto") -> bool:
    """Candidate equality is mutual entailment of the finite bases."""
    return entails_all(a.base, b.base, mode) and entails_all(b.base, a.base, mode)
