"""Exact linear programming over the rationals.

A small dense two-phase simplex on Fractions, with Bland's rule for both
the entering and leaving variable, so it terminates and is deterministic.
No floating point appears anywhere: optimal values and solutions are exact.
"""

from __future__ import annotations

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_ZERO = Fraction(0)
_ONE = Fraction(1)


def simplex_min(
    objective: list[Fraction],
    a_eq: list[list[Fraction]],
    b_eq: list[Fraction],
) -> tuple[str, list[Fraction] | None, Fraction | None]:
    """Minimize ``objective . x`` subject to ``a_eq x = b_eq``, ``x >= 0``.

    Returns (status, x, value).  Redundant equality rows are tolerated
    (they are dropped after phase 1).
    """
    n = len(objective)
    m = len(a_eq)
    c = [Fraction(v) for v in objective]
    if m == 0:
        if any(v < 0 for v in c):
            return UNBOUNDED, None, None
        return OPTIMAL, [_ZERO] * n, _ZERO

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i in range(m):
        row = [Fraction(v) for v in a_eq[i]]
        b = Fraction(b_eq[i])
        if b < 0:
            row = [-v for v in row]
            b = -b
        rows.append(row)
        rhs.append(b)

    # Tableau columns: n structural + m artificial, rhs kept separately.
    width = n + m
    tab = []
    for i in range(m):
        row = rows[i] + [_ZERO] * m
        row[n + i] = _ONE
        row.append(rhs[i])
        tab.append(row)
    basis = [n + i for i in range(m)]

    phase1_cost = [_ZERO] * n + [_ONE] * m

    def run(cost: list[Fraction], ncols: int) -> str:
        while True:
            # Reduced costs for the current basis.
            y = [cost[b] for b in basis]
            entering = -1
            for j in range(ncols):
                r = cost[j]
                for i in range(len(tab)):
                    if tab[i][j]:
                        r -= y[i] * tab[i][j]
                if r < 0:
                    entering = j
                    break
            if entering < 0:
                return OPTIMAL
            leave = -1
            best = None
            for i in range(len(tab)):
                a = tab[i][entering]
                if a > 0:
                    ratio = tab[i][-1] / a
                    if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave < 0:
                return UNBOUNDED
            _pivot(tab, basis, leave, entering)

    status = run(phase1_cost, width)
    if status != OPTIMAL:  # phase 1 cannot be unbounded, but stay defensive
        return INFEASIBLE, None, None
    art_value = sum(tab[i][-1] for i in range(len(tab)) if basis[i] >= n)
    if art_value != 0:
        return INFEASIBLE, None, None

    # Drive artificials out of the basis; drop rows that are redundant.
    for i in range(len(tab) - 1, -1, -1):
        if basis[i] >= n:
            piv = next((j for j in range(n) if tab[i][j] != 0), None)
            if piv is None:
                del tab[i]
                del basis[i]
            else:
                _pivot(tab, basis, i, piv)

    for row in tab:
        del row[n:-1]  # remove artificial columns

    status = run(c, n)
    if status != OPTIMAL:
        return UNBOUNDED, None, None
    x = [_ZERO] * n
    for i, b in enumerate(basis):
        x[b] = tab[i][-1]
    value = sum(c[j] * x[j] for j in range(n) if x[j])
    return OPTIMAL, x, value


def _pivot(tab: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tab[row][col]
    prow = tab[row]
    if piv != 1:
        inv = _ONE / piv
        tab[row] = prow = [v * inv for v in prow]
    for i in range(len(tab)):
        if i == row:
            continue
        f = tab[i][col]
        if f:
            irow = tab[i]
            tab[i] = [a - f * b for a, b in zip(irow, prow)]
    basis[row] = col


def independent_rows(a: list[list[int]]) -> list[int]:
    """Indices of a maximal linearly independent subset of rows, greedy in order."""
    kept: list[int] = []
    reduced: list[list[Fraction]] = []
    pivots: list[int] = []
    ncols = len(a[0]) if a else 0
    for idx, raw in enumerate(a):
        row = [Fraction(v) for v in raw]
        for r, p in zip(reduced, pivots):
            f = row[p]
            if f:
                row = [x - f * y for x, y in zip(row, r)]
        p = next((j for j in range(ncols) if row[j] != 0), None)
        if p is None:
            continue
        inv = _ONE / row[p]
        row = [x * inv for x in row]
        reduced.append(row)
        pivots.append(p)
        kept.append(idx)
    return kept
