"""Exact rational linear feasibility via Fourier-Motzkin elimination.

Problems are tiny (dimension <= ~8, a couple dozen constraints), so FM with
exact Fractions is both trivially affordable and certificate-producing: a
feasible system returns a rational witness point, checked by the caller.
Equality constraints are removed first by Gaussian elimination, which keeps
the FM phase to the genuinely free variables.
"""

from __future__ import annotations

from fractions import Fraction

# A constraint is (coeffs, rhs) meaning sum_i coeffs[i] * x_i >= rhs.
Constraint = tuple[tuple[Fraction, ...], Fraction]


def _normalize(coeffs, rhs) -> Constraint:
    """Scale so the first nonzero coefficient has absolute value 1 (keeps the
    constraint set deduplicated across FM rounds)."""
    for c in coeffs:
        if c != 0:
            s = abs(c)
            return tuple(x / s for x in coeffs), rhs / s
    return tuple(coeffs), rhs


def _eliminate(constraints: set[Constraint], j: int) -> set[Constraint] | None:
    """Fourier-Motzkin elimination of variable j; None signals infeasibility
    detected on a variable-free row."""
    pos, neg, rest = [], [], set()
    for coeffs, rhs in constraints:
        c = coeffs[j]
        if c > 0:
            pos.append((coeffs, rhs))
        elif c < 0:
            neg.append((coeffs, rhs))
        else:
            rest.add((coeffs, rhs))
    for pc, pr in pos:
        for nc, nr in neg:
            a = pc[j]
            b = -nc[j]
            coeffs = tuple(b * p + a * n for p, n in zip(pc, nc))
            rhs = b * pr + a * nr
            if all(x == 0 for x in coeffs):
                if rhs > 0:
                    return None
                continue
            rest.add(_normalize(coeffs, rhs))
    return rest


def _bounds_for(constraints, j, point):
    """Lower/upper bounds on x_j implied by constraints once the variables
    after j (in elimination order) are fixed in `point`."""
    lo, hi = None, None
    for coeffs, rhs in constraints:
        c = coeffs[j]
        if c == 0:
            continue
        acc = rhs
        for i, ci in enumerate(coeffs):
            if i != j and ci != 0:
                acc -= ci * point[i]
        bound = acc / c
        if c > 0:
            if lo is None or bound > lo:
                lo = bound
        else:
            if hi is None or bound < hi:
                hi = bound
    return lo, hi


def solve_inequalities(ineqs, nvars: int):
    """Find x with sum_i c_i x_i >= rhs for every constraint, or None.

    Returns a tuple of Fractions on success.
    """
    constraints: set[Constraint] = set()
    for coeffs, rhs in ineqs:
        coeffs = tuple(Fraction(c) for c in coeffs)
        rhs = Fraction(rhs)
        if all(c == 0 for c in coeffs):
            if rhs > 0:
                return None
            continue
        constraints.add(_normalize(coeffs, rhs))

    # eliminate greedily by smallest pos*neg product to curb growth
    stages: list[tuple[int, set[Constraint]]] = []
    remaining = list(range(nvars))
    current = constraints
    while remaining:
        best_j, best_cost = None, None
        for j in remaining:
            p = sum(1 for c, _ in current if c[j] > 0)
            n = sum(1 for c, _ in current if c[j] < 0)
            cost = p * n if (p or n) else 0
            if best_cost is None or cost < best_cost:
                best_j, best_cost = j, cost
        stages.append((best_j, current))
        nxt = _eliminate(current, best_j)
        if nxt is None:
            return None
        current = nxt
        remaining.remove(best_j)

    for coeffs, rhs in current:
        if rhs > 0:
            return None

    # back-substitute a witness
    point = [Fraction(0)] * nvars
    for j, cons in reversed(stages):
        lo, hi = _bounds_for(cons, j, point)
        if lo is None and hi is None:
            point[j] = Fraction(0)
        elif lo is None:
            point[j] = hi - 1
        elif hi is None:
            point[j] = lo + 1
        else:
            point[j] = (lo + hi) / 2
    return tuple(point)


def solve_system(eqs, ineqs, nvars: int):
    """Feasibility of {A x = b, C x >= d}: a witness tuple or None.

    Equalities are removed by exact Gauss-Jordan elimination (pivot rows are
    substituted into everything else), then FM runs on the reduced
    inequalities in the free variables only.
    """
    pivots: list[tuple[int, list[Fraction], Fraction]] = []
    for coeffs, rhs in eqs:
        coeffs = [Fraction(c) for c in coeffs]
        rhs = Fraction(rhs)
        for pj, pc, pr in pivots:
            f = coeffs[pj]
            if f != 0:
                for i in range(nvars):
                    coeffs[i] -= f * pc[i]
                rhs -= f * pr
        pj = next((i for i, c in enumerate(coeffs) if c != 0), None)
        if pj is None:
            if rhs != 0:
                return None
            continue
        p = coeffs[pj]
        coeffs = [c / p for c in coeffs]
        rhs = rhs / p
        updated = []
        for qj, qc, qr in pivots:
            f = qc[pj]
            if f != 0:
                qc = [a - f * b for a, b in zip(qc, coeffs)]
                qr = qr - f * rhs
            updated.append((qj, qc, qr))
        pivots = updated
        pivots.append((pj, coeffs, rhs))
    pivot_idx = {pj for pj, _, _ in pivots}
    reduced_ineqs = []
    for coeffs, rhs in ineqs:
        coeffs = [Fraction(c) for c in coeffs]
        rhs = Fraction(rhs)
        for pj, pc, pr in pivots:
            f = coeffs[pj]
            if f != 0:
                for i in range(nvars):
                    coeffs[i] -= f * pc[i]
                rhs -= f * pr
        reduced_ineqs.append((tuple(coeffs), rhs))
    free = [i for i in range(nvars) if i not in pivot_idx]
    # compress to free variables only
    comp = []
    for coeffs, rhs in reduced_ineqs:
        comp.append((tuple(coeffs[i] for i in free), rhs))
    w = solve_inequalities(comp, len(free))
    if w is None:
        return None
    point = [Fraction(0)] * nvars
    for i, v in zip(free, w):
        point[i] = v
    for pj, pc, pr in reversed(pivots):
        acc = pr
        for i in range(nvars):
            if i != pj and pc[i] != 0:
                acc -= pc[i] * point[i]
        point[pj] = acc
    return tuple(point)
