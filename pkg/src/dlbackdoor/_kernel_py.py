"""Pure-Python DPLL kernel, the fallback for the compiled extension.

Variables must be dense ints 1..num_vars. The search is deterministic:
unit propagation to fixpoint, then branch on the lowest-index unassigned
variable, positive phase first. Returns a model as a list indexed by
variable (entry 0 unused, values 0/1), or None if unsatisfiable.
"""

from __future__ import annotations

BACKEND = "python"


def solve_dpll(num_vars, clauses):
    clauses = [tuple(c) for c in clauses]
    assign = [0] * (num_vars + 1)  # 0 unknown, 1 true, -1 false
    trail = []

    def propagate():
        changed = True
        while changed:
            changed = False
            for cl in clauses:
                unassigned = 0
                last = 0
                sat = False
                for lit in cl:
                    v = assign[lit if lit > 0 else -lit]
                    if v == 0:
                        unassigned += 1
                        last = lit
                    elif (v > 0) == (lit > 0):
                        sat = True
                        break
                if sat:
                    continue
                if unassigned == 0:
                    return False
                if unassigned == 1:
                    var = last if last > 0 else -last
                    assign[var] = 1 if last > 0 else -1
                    trail.append(var)
                    changed = True
        return True

    stack = []  # (decision var, phase tried, trail length before decision)
    ok = propagate()
    while True:
        if ok:
            var = 0
            for v in range(1, num_vars + 1):
                if assign[v] == 0:
                    var = v
                    break
            if var == 0:
                return [0] + [1 if assign[v] > 0 else 0 for v in range(1, num_vars + 1)]
            stack.append((var, 1, len(trail)))
            assign[var] = 1
            trail.append(var)
            ok = propagate()
        else:
            flipped = False
            while stack:
                dvar, phase, tlen = stack.pop()
                while len(trail) > tlen:
                    assign[trail.pop()] = 0
                if phase == 1:
                    stack.append((dvar, -1, tlen))
                    assign[dvar] = -1
                    trail.append(dvar)
                    flipped = True
                    break
            if not flipped:
                return None
            ok = propagate()
