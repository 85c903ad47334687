"""Theory file format: DIMACS-adjacent lines.

  # comment to end of line
  p dt <nvars> <nrules>        optional header
  w <clauses>                  one knowledge formula
  r <clauses> : <clauses> : <clauses>
                               one rule (prerequisite : justification : conclusion)

A clause is whitespace-separated nonzero ints terminated by a single 0
(negative = negated variable); a bare "0" is the empty clause; an empty
section is the empty formula (verum).
"""

from __future__ import annotations

from typing import List

from dlbackdoor import cnf
from dlbackdoor.defaults import DefaultRule, DefaultTheory


class TheoryParseError(ValueError):
    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def _parse_formula(tokens: List[str], line_no: int) -> cnf.Formula:
    clauses = []
    current: List[int] = []
    for tok in tokens:
        try:
            lit = int(tok)
        except ValueError:
            raise TheoryParseError(f"expected an integer literal, got {tok!r}", line_no)
        if lit == 0:
            clauses.append(frozenset(current))
            current = []
        else:
            current.append(lit)
    if current:
        raise TheoryParseError("unterminated clause (missing 0)", line_no)
    return frozenset(clauses)


def parse_theory(text: str) -> DefaultTheory:
    knowledge = []
    rules = []
    header = None
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, _, rest = line.partition(" ")
        if kind == "p":
            fields = rest.split()
            if len(fields) != 3 or fields[0] != "dt":
                raise TheoryParseError("header must be 'p dt <nvars> <nrules>'", line_no)
            try:
                header = (int(fields[1]), int(fields[2]), line_no)
            except ValueError:
                raise TheoryParseError("header counts must be integers", line_no)
        elif kind == "w":
            knowledge.append(_parse_formula(rest.split(), line_no))
        elif kind == "r":
            sections = rest.split(":")
            if len(sections) != 3:
                raise TheoryParseError(
                    f"a rule needs exactly 3 sections, got {len(sections)}", line_no
                )
            pre, just, concl = (_parse_formula(s.split(), line_no) for s in sections)
            rules.append(DefaultRule(pre, just, concl))
        else:
            raise TheoryParseError(f"unknown directive {kind!r}", line_no)
    theory = DefaultTheory(tuple(knowledge), tuple(rules))
    if header is not None:
        nvars, nrules, line_no = header
        if nrules != len(rules):
            raise TheoryParseError(
                f"header declares {nrules} rules but file has {len(rules)}", line_no
            )
        top = max(theory.variables(), default=0)
        if nvars < top:
            raise TheoryParseError(
                f"header declares {nvars} variables but variable {top} is used", line_no
            )
    return theory


def _clause_key(c: cnf.Clause):
    return sorted((abs(l), l < 0) for l in c)


def _render_formula(f: cnf.Formula) -> str:
    parts = []
    for c in sorted(f, key=_clause_key):
        lits = sorted(c, key=lambda l: (abs(l), l < 0))
        parts.append(" ".join(str(l) for l in lits) + (" 0" if lits else "0"))
    return " ".join(parts)


def render_theory(theory: DefaultTheory) -> str:
    """Normalized rendering; parse(render(parse(t))) == parse(t)."""
    nvars = max(theory.variables(), default=0)
    lines = [f"p dt {nvars} {len(theory.rules)}"]
    for w in theory.knowledge:
        lines.append(("w " + _render_formula(w)).rstrip())
    for rule in theory.rules:
        sections = " : ".join(
            _render_formula(f) for f in (rule.prerequisite, rule.justification, rule.conclusion)
        )
        lines.append(f"r {sections}".rstrip())
    return "\n".join(lines) + "\n"
