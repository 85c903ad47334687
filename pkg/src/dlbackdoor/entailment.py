"""Satisfiability and implication oracles, dispatched by clause class.

Dispatch is an optimization only: Horn goes through unit propagation,
Krom through implication-graph SCCs, monotone/positive-unit through an
empty-clause scan, everything else through the DPLL kernel. All branches
agree with the general procedure.

A premise is any iterable of formulas, interpreted conjunctively.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from dlbackdoor import cnf
from dlbackdoor.kernel import solve_dpll


class BackdoorMisuseError(ValueError):
    """A reduct fell outside the promised tractable class."""


@dataclass(frozen=True)
class SatWitness:
    satisfiable: bool
    model: Optional[dict]  # total over the formula's variables when sat


@dataclass(frozen=True)
class BackdoorOracle:
    """Oracle mode: decide satisfiability through the 2^|B| classical
    reducts of a known strong backdoor into formula_class."""

    variables: frozenset
    formula_class: str


# "auto" = class-dispatched, "general" = force the DPLL kernel,
# BackdoorOracle = backdoor-assisted.
OracleMode = object

_counters = {"oracle_calls": 0}


def oracle_calls() -> int:
    return _counters["oracle_calls"]


def reset_oracle_calls() -> None:
    _counters["oracle_calls"] = 0


def flatten(premise: Iterable[cnf.Formula]) -> cnf.Formula:
    out = set()
    for f in premise:
        out.update(f)
    return frozenset(out)


def _horn_sat(clauses):
    # unit propagation on the minimal-model semantics of Horn sets
    true = set()
    changed = True
    while changed:
        changed = False
        for c in clauses:
            if any(l > 0 and l in true for l in c):
                continue
            if any(l < 0 and -l not in true for l in c):
                continue
            pos = next((l for l in c if l > 0), 0)
            if pos == 0:
                return False, None
            if pos not in true:
                true.add(pos)
                changed = True
    return True, frozenset(true)


def _tarjan_scc(nodes, adj):
    index, low, comp = {}, {}, {}
    stack, onstack = [], set()
    counter = 0
    next_comp = 0
    for start in nodes:
        if start in index:
            continue
        index[start] = low[start] = counter
        counter += 1
        stack.append(start)
        onstack.add(start)
        work = [(start, iter(adj.get(start, ())))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    onstack.add(w)
                    work.append((w, iter(adj.get(w, ()))))
                    advanced = True
                    break
                if w in onstack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    onstack.discard(w)
                    comp[w] = next_comp
                    if w == v:
                        break
                next_comp += 1
    return comp


def _krom_sat(clauses, variables):
    adj: dict = {}
    for c in clauses:
        lits = sorted(c)
        if len(lits) == 1:
            (a,) = lits
            adj.setdefault(-a, []).append(a)
        else:
            a, b = lits
            adj.setdefault(-a, []).append(b)
            adj.setdefault(-b, []).append(a)
    nodes = sorted({l for v in variables for l in (v, -v)})
    comp = _tarjan_scc(nodes, adj)
    for v in variables:
        if comp[v] == comp[-v]:
            return False, None
    # Tarjan numbers sink components first; a literal whose component
    # comes earlier is safe to set true
    return True, frozenset(v for v in variables if comp[v] < comp[-v])


def _general_sat(clauses, variables):
    order = sorted(variables)
    dense = {v: i + 1 for i, v in enumerate(order)}
    mapped = [tuple(dense[l] if l > 0 else -dense[-l] for l in sorted(c)) for c in sorted(clauses, key=sorted)]
    model = solve_dpll(len(order), mapped)
    if model is None:
        return False, None
    return True, frozenset(v for v in order if model[dense[v]])


@lru_cache(maxsize=None)
def _sat_core(clauses: cnf.Formula, general: bool):
    if cnf.EMPTY_CLAUSE in clauses:
        return False, None
    if not clauses:
        return True, frozenset()
    variables = cnf.variables(clauses)
    if general:
        return _general_sat(clauses, variables)
    if all(all(l > 0 for l in c) for c in clauses):
        return True, frozenset(variables)  # monotone (covers positive-unit)
    if all(sum(1 for l in c if l > 0) <= 1 for c in clauses):
        return _horn_sat(clauses)
    if all(len(c) <= 2 for c in clauses):
        return _krom_sat(clauses, variables)
    return _general_sat(clauses, variables)


@lru_cache(maxsize=None)
def _sat_backdoor(clauses: cnf.Formula, backdoor: tuple, formula_class: str):
    for theta in cnf.enumerate_classical(backdoor):
        reduced = cnf.apply_assignment(clauses, theta)
        if not cnf.formula_in_class(reduced, formula_class):
            # conservative fallback: the caller's backdoor promise failed
            return _sat_core(clauses, True)
        ok, true_vars = _sat_core(reduced, False)
        if ok:
            chosen = frozenset(v for v, choice in theta.items() if choice == cnf.POS)
            return True, true_vars | chosen
    return False, None


def satisfiable(premise: Iterable[cnf.Formula], mode: OracleMode = "auto") -> SatWitness:
    clauses = flatten(premise)
    _counters["oracle_calls"] += 1
    if isinstance(mode, BackdoorOracle):
        ok, true_vars = _sat_backdoor(clauses, tuple(sorted(mode.variables)), mode.formula_class)
    elif mode == "general":
        ok, true_vars = _sat_core(clauses, True)
    else:
        ok, true_vars = _sat_core(clauses, False)
    if not ok:
        return SatWitness(False, None)
    return SatWitness(True, {v: v in true_vars for v in sorted(cnf.variables(clauses))})


def entails(premise: Iterable[cnf.Formula], psi: cnf.Formula, mode: OracleMode = "auto") -> bool:
    """premise |= psi, decomposed clause-wise: each non-tautological
    clause C of psi is entailed iff premise plus the unit complements of
    C is unsatisfiable."""
    base = flatten(premise)
    for c in psi:
        if cnf.is_tautological_clause(c):
            continue
        units = frozenset(frozenset({-l}) for l in c)
        if satisfiable((base, units), mode).satisfiable:
            return False
    return True


def entails_all(premise, formulas, mode: OracleMode = "auto") -> bool:
    return all(entails(premise, f, mode) for f in formulas)


def refutes_justification(premise: Iterable[cnf.Formula], beta: cnf.Formula, mode: OracleMode = "auto") -> bool:
    """premise |= not(beta), decided as unsatisfiability of premise+beta
    (avoids negating a CNF)."""
    base = flatten(premise)
    return not satisfiable((base, beta), mode).satisfiable


def backdoor_entails(premise: Iterable[cnf.Formula], psi: cnf.Formula, backdoor, formula_class: str) -> bool:
    """Implication via the 2^|X| classical reducts of a strong backdoor;
    each reduct question is answered by the class oracle."""
    forms = tuple(premise)
    for theta in cnf.enumerate_classical(backdoor):
        reduced_premise = tuple(cnf.apply_assignment(f, theta) for f in forms)
        reduced_psi = cnf.apply_assignment(psi, theta)
        for f in reduced_premise + (reduced_psi,):
            if not cnf.formula_in_class(f, formula_class):
                raise BackdoorMisuseError(
                    f"reduct under {theta} is not in class {formula_class!r}"
                )
        if not entails(reduced_premise, reduced_psi):
            return False
    return True
