# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled DPLL kernel. Mirrors _kernel_py.solve_dpll exactly: same
branching order, same answers; only the inner loops run in C."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"


def solve_dpll(int num_vars, clauses):
    cdef int m = len(clauses)
    cdef int total = 0
    for c in clauses:
        total += len(c)

    cdef int *lits = <int *> malloc((total if total else 1) * sizeof(int))
    cdef int *starts = <int *> malloc((m + 1) * sizeof(int))
    cdef signed char *assign = <signed char *> malloc((num_vars + 1) * sizeof(signed char))
    cdef int *trail = <int *> malloc((num_vars + 1) * sizeof(int))
    cdef int *dec_var = <int *> malloc((num_vars + 1) * sizeof(int))
    cdef signed char *dec_phase = <signed char *> malloc((num_vars + 1) * sizeof(signed char))
    cdef int *dec_tlen = <int *> malloc((num_vars + 1) * sizeof(int))
    if not (lits and starts and assign and trail and dec_var and dec_phase and dec_tlen):
        free(lits); free(starts); free(assign); free(trail)
        free(dec_var); free(dec_phase); free(dec_tlen)
        raise MemoryError()

    cdef int pos = 0
    cdef int i, lit
    starts[0] = 0
    for i, c in enumerate(clauses):
        for lit in c:
            lits[pos] = lit
            pos += 1
        starts[i + 1] = pos
    for i in range(num_vars + 1):
        assign[i] = 0

    cdef int trail_len = 0
    cdef int stack_len = 0
    cdef bint ok, changed, sat, flipped
    cdef int j, k, v, var, last, unassigned, dvar, tlen
    cdef signed char val, phase
    model = None

    # unit propagation to fixpoint over the flat clause arrays
    ok = True
    while True:
        changed = True
        while ok and changed:
            changed = False
            for j in range(m):
                unassigned = 0
                last = 0
                sat = False
                for k in range(starts[j], starts[j + 1]):
                    lit = lits[k]
                    v = lit if lit > 0 else -lit
                    val = assign[v]
                    if val == 0:
                        unassigned += 1
                        last = lit
                    elif (val > 0) == (lit > 0):
                        sat = True
                        break
                if sat:
                    continue
                if unassigned == 0:
                    ok = False
                    break
                if unassigned == 1:
                    var = last if last > 0 else -last
                    assign[var] = 1 if last > 0 else -1
                    trail[trail_len] = var
                    trail_len += 1
                    changed = True

        if ok:
            var = 0
            for v in range(1, num_vars + 1):
                if assign[v] == 0:
                    var = v
                    break
            if var == 0:
                model = [0] + [1 if assign[v] > 0 else 0 for v in range(1, num_vars + 1)]
                break
            dec_var[stack_len] = var
            dec_phase[stack_len] = 1
            dec_tlen[stack_len] = trail_len
            stack_len += 1
            assign[var] = 1
            trail[trail_len] = var
            trail_len += 1
        else:
            flipped = False
            while stack_len > 0:
                stack_len -= 1
                dvar = dec_var[stack_len]
                phase = dec_phase[stack_len]
                tlen = dec_tlen[stack_len]
                while trail_len > tlen:
                    trail_len -= 1
                    assign[trail[trail_len]] = 0
                if phase == 1:
                    dec_var[stack_len] = dvar
                    dec_phase[stack_len] = -1
                    dec_tlen[stack_len] = tlen
                    stack_len += 1
                    assign[dvar] = -1
                    trail[trail_len] = dvar
                    trail_len += 1
                    flipped = True
                    break
            if not flipped:
                break
            ok = True

    free(lits); free(starts); free(assign); free(trail)
    free(dec_var); free(dec_phase); free(dec_tlen)
    return model
