"""Ground-truth semantic oracle: exhaustive generating-subset search.

Exists to verify the backdoor pipeline, not to perform; refuses theories
past the rule-count limit to guard against the 2^|D| blowup.
"""

from __future__ import annotations

from typing import List

from dlbackdoor.checking import check_extension
from dlbackdoor.defaults import (
    DefaultTheory,
    ExtensionCandidate,
    candidates_equivalent,
    generated_candidate,
)

DEFAULT_RULE_LIMIT = 20


def enumerate_extensions(theory: DefaultTheory, limit: int = DEFAULT_RULE_LIMIT) -> List[ExtensionCandidate]:
    """All consistent stable extensions, deduplicated by mutual
    entailment, in binary-counter order of generating subsets."""
    n = len(theory.rules)
    if n > limit:
        raise ValueError(f"theory has {n} rules, above the brute-force limit {limit}")
    found: List[ExtensionCandidate] = []
    for mask in range(1 << n):
        generating = frozenset(i for i in range(n) if mask & (1 << i))
        candidate = generated_candidate(theory, generating)
        if not check_extension(theory, candidate):
            continue
        if any(candidates_equivalent(candidate, kept) for kept in found):
            continue
        found.append(candidate)
    return found


def has_consistent_extension(theory: DefaultTheory, limit: int = DEFAULT_RULE_LIMIT) -> bool:
    return bool(enumerate_extensions(theory, limit))
