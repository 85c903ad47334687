"""Consistent-stable-extension existence for propositional default
theories via strong backdoors into tractable CNF classes.

The general SAT search runs on a compiled kernel when the extension is
built; dlbackdoor.kernel.BACKEND tells you which one is active.
"""

from dlbackdoor.brute import enumerate_extensions, has_consistent_extension
from dlbackdoor.checking import check_extension
from dlbackdoor.cnf import (
    ALL_CLASSES,
    CLASS_CNF,
    CLASS_HORN,
    CLASS_ID,
    CLASS_KROM,
    CLASS_MONOTONE,
    apply_assignment,
    classify_clause,
    clause,
    enumerate_classical,
    enumerate_threefold,
    formula,
    reduct,
    remove_tautologies,
)
from dlbackdoor.defaults import (
    DefaultRule,
    DefaultTheory,
    ExtensionCandidate,
    ReductTheory,
    candidates_equivalent,
    cncl,
    generated_candidate,
    lift,
    theory,
    theory_reduct,
)
from dlbackdoor.detect import (
    IncidenceGraph,
    IncidenceHypergraph,
    build_incidence,
    detect_backdoor,
    hitting_set3_at_most,
    verify_backdoor,
    vertex_cover_at_most,
)
from dlbackdoor.entailment import (
    BackdoorMisuseError,
    BackdoorOracle,
    SatWitness,
    backdoor_entails,
    entails,
    refutes_justification,
    satisfiable,
)
from dlbackdoor.evaluate import (
    EXTENSION_EXISTS,
    NO_EXTENSION,
    OverBudgetError,
    SolveReport,
    evaluate_backdoor,
    reduct_extensions,
    solve,
)
from dlbackdoor.ioformat import TheoryParseError, parse_theory, render_theory
from dlbackdoor.kernel import BACKEND

__version__ = "0.1.0"
