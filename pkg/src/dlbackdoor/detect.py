"""Strong backdoor detection via bounded search trees, plus verification.

The clause pool is W together with every rule component. Monotone
backdoors are the negatively-occurring variables; Horn backdoors are
vertex covers of the positive-pair incidence graph; Krom backdoors are
3-hitting sets of the variable-triple hypergraph. Positive-unit (id)
backdoors must contain every negatively-occurring variable and cover
the remaining co-occurrence pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from dlbackdoor import cnf
from dlbackdoor.defaults import DefaultTheory


@dataclass(frozen=True)
class IncidenceGraph:
    vertices: frozenset
    edges: frozenset  # of 2-element frozensets


@dataclass(frozen=True)
class IncidenceHypergraph:
    vertices: frozenset
    edges: frozenset  # of 3-element frozensets


def negative_variables(theory: DefaultTheory) -> frozenset:
    return frozenset(-l for c in theory.clause_pool() for l in c if l < 0)


def build_incidence(theory: DefaultTheory, formula_class: str):
    """Incidence structure of the clause pool for one target class."""
    pool = theory.clause_pool()
    vertices = frozenset(v for c in pool for v in cnf.clause_variables(c))
    if formula_class == cnf.CLASS_HORN:
        edges = set()
        for c in pool:
            pos = sorted(l for l in c if l > 0)
            for i, x in enumerate(pos):
                for y in pos[i + 1:]:
                    edges.add(frozenset({x, y}))
        return IncidenceGraph(vertices, frozenset(edges))
    if formula_class == cnf.CLASS_ID:
        edges = set()
        for c in pool:
            vs = sorted(cnf.clause_variables(c))
            for i, x in enumerate(vs):
                for y in vs[i + 1:]:
                    edges.add(frozenset({x, y}))
        return IncidenceGraph(vertices, frozenset(edges))
    if formula_class == cnf.CLASS_KROM:
        triples = set()
        for c in pool:
            vs = sorted(cnf.clause_variables(c))
            for i, x in enumerate(vs):
                for j in range(i + 1, len(vs)):
                    for z in vs[j + 1:]:
                        triples.add(frozenset({x, vs[j], z}))
        return IncidenceHypergraph(vertices, frozenset(triples))
    raise ValueError(f"no incidence structure for class {formula_class!r}")


def _hitting_set(edges, k: int) -> Optional[frozenset]:
    # bounded search tree, branching on the lowest edge, lowest vertex
    # first; works for any edge arity
    if not edges:
        return frozenset()
    if k <= 0:
        return None
    edge = edges[0]
    for v in edge:
        rest = [e for e in edges if v not in e]
        sub = _hitting_set(rest, k - 1)
        if sub is not None:
            return sub | {v}
    return None


def _sorted_edges(edges) -> list:
    return sorted((tuple(sorted(e)) for e in edges))


def vertex_cover_at_most(graph: IncidenceGraph, k: int) -> Optional[frozenset]:
    return _hitting_set(_sorted_edges(graph.edges), k)


def hitting_set3_at_most(hypergraph: IncidenceHypergraph, k: int) -> Optional[frozenset]:
    return _hitting_set(_sorted_edges(hypergraph.edges), k)


def detect_backdoor(theory: DefaultTheory, formula_class: str, k: int) -> Optional[frozenset]:
    """A strong backdoor of size at most k, or None if there is none."""
    if k < 0:
        raise ValueError("backdoor budget must be non-negative")
    if formula_class == cnf.CLASS_CNF:
        return frozenset()
    if formula_class == cnf.CLASS_MONOTONE:
        forced = negative_variables(theory)
        return forced if len(forced) <= k else None
    if formula_class == cnf.CLASS_HORN:
        return vertex_cover_at_most(build_incidence(theory, formula_class), k)
    if formula_class == cnf.CLASS_ID:
        # a lone negative literal never reduces to a positive unit, so
        # every negatively-occurring variable is forced into the backdoor;
        # the remaining co-occurrence pairs need a cover on top
        forced = negative_variables(theory)
        if len(forced) > k:
            return None
        graph = build_incidence(theory, formula_class)
        residual = [e for e in graph.edges if not (e & forced)]
        cover = _hitting_set(_sorted_edges(residual), k - len(forced))
        if cover is None:
            return None
        return forced | cover
    if formula_class == cnf.CLASS_KROM:
        return hitting_set3_at_most(build_incidence(theory, formula_class), k)
    raise ValueError(f"unknown formula class: {formula_class!r}")


def verify_backdoor(theory: DefaultTheory, backdoor, formula_class: str, full: bool = False) -> bool:
    """Every threefold reduct of every theory formula lands in the class.

    Fast mode checks only the all-epsilon assignment, which is sound and
    complete for clause-induced classes; full mode walks all 3^|B|.
    """
    forms = theory.formulas()
    for assignment in cnf.enumerate_threefold(backdoor, epsilon_only=not full):
        for f in forms:
            if not cnf.formula_in_class(cnf.apply_assignment(f, assignment), formula_class):
                return False
    return True
