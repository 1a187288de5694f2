"""Chain isoperimetric profiles and quasi-equivalence fitting.

The profile in dimension q maps n to the largest filling volume among
boundaries of norm <= n.  Candidates are enumerated over the support of
the boundary image, filtered by lattice membership, and filled exactly;
certified upper bounds let dominated candidates be skipped without ever
touching the reported suprema.

Fitting searches a finite grid for constants witnessing f(x) <= A g(Bx)
+ Cx + D, with g extended by g(x) = g(floor(x)).  A returned witness is
re-verified by direct substitution at every sample.  A None answer only
refutes the given grid at the given samples.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .chains import Chain, ChainComplex, l1_norm
from .errors import DimensionError, InvariantError
from .filling import (
    EXACT,
    LOWER_BOUND,
    SearchBudget,
    fill_upper_bound,
    fill_volume,
)
from .snf import lattice_solver

INF = math.inf


@dataclass(frozen=True)
class ProfileEntry:
    value: int | float  # a natural number, or math.inf
    status: str

    def __post_init__(self):
        if self.status not in (EXACT, LOWER_BOUND):
            raise InvariantError(f"bad profile status {self.status!r}")
        ok = self.value == INF or (isinstance(self.value, int) and self.value >= 0)
        if not ok:
            raise InvariantError(f"bad profile value {self.value!r}")


class ProfileTable:
    """Values of a profile at n = 0..n_max, with per-entry exactness flags."""

    __slots__ = ("entries", "label", "dim", "budget_note")

    def __init__(
        self,
        entries: Iterable[ProfileEntry | tuple],
        label: str = "",
        dim: int | None = None,
        budget_note: str = "",
    ):
        rows = tuple(
            e if isinstance(e, ProfileEntry) else ProfileEntry(*e) for e in entries
        )
        if not rows:
            raise InvariantError("a profile table needs at least the n=0 entry")
        if rows[0].value != 0:
            raise InvariantError("profile value at n=0 must be 0")
        for a, b in zip(rows, rows[1:]):
            if a.status == EXACT and b.status == EXACT and b.value < a.value:
                raise InvariantError("exact profile values must be nondecreasing")
        self.entries = rows
        self.label = label
        self.dim = dim
        self.budget_note = budget_note

    @property
    def n_max(self) -> int:
        return len(self.entries) - 1

    def value(self, n: int) -> int | float:
        return self.entries[n].value

    def status(self, n: int) -> str:
        return self.entries[n].status

    def is_fully_exact(self) -> bool:
        return all(e.status == EXACT for e in self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, ProfileTable) and self.entries == other.entries

    def __repr__(self) -> str:
        vals = ",".join(
            ("inf" if e.value == INF else str(e.value))
            + ("" if e.status == EXACT else "?")
            for e in self.entries
        )
        return f"ProfileTable({self.label!r}, dim={self.dim}, [{vals}])"


def _thread_cap() -> int:
    raw = os.environ.get("FILLSCOPE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _image_candidates(cc: ChainComplex, q: int, n_max: int) -> list[Chain]:
    """Nonzero (q-1)-chains of norm <= n_max that can possibly be boundaries.

    Enumeration runs over the support of image(bd_q) only, with the sign of
    the first nonzero coefficient fixed (FV is symmetric under negation).
    For q >= 2 every boundary is a cycle, so partial assignments are pruned
    whenever the residual of bd_{q-1} can no longer cancel.
    """
    touched: set[str] = set()
    for cell in cc.cells(q):
        touched.update(cc.column(q, cell))
    support = [cell for cell in cc.cells(q - 1) if cell in touched]
    m = len(support)
    if m == 0 or n_max < 1:
        return []

    cycle_mode = q >= 2
    if cycle_mode:
        cols = [cc.column(q - 1, cell) for cell in support]
        col_norms = [sum(abs(v) for v in col.values()) for col in cols]
        # After index i, rows beyond their last touching column are frozen.
        last_touch: dict[str, int] = {}
        for i, col in enumerate(cols):
            for row in col:
                last_touch[row] = i
        suffix_max = [0] * (m + 1)
        for i in range(m - 1, -1, -1):
            suffix_max[i] = max(suffix_max[i + 1], col_norms[i])

    out: list[Chain] = []
    coeffs = [0] * m
    residual: dict[str, int] = {}

    def shift(i: int, k: int) -> None:
        for row, e in cols[i].items():
            v = residual.get(row, 0) + k * e
            if v:
                residual[row] = v
            else:
                del residual[row]

    def emit() -> None:
        out.append(
            Chain(q - 1, {support[i]: k for i, k in enumerate(coeffs) if k})
        )

    def dfs(i: int, rem: int, nonzero: bool) -> None:
        if cycle_mode and residual:
            need = sum(abs(v) for v in residual.values())
            if need > rem * suffix_max[i]:
                return
            for row, v in residual.items():
                if v and last_touch[row] < i:
                    return
        if i == m:
            if nonzero and not residual:
                emit()
            return
        for mag in range(rem + 1):
            signs = (0,) if mag == 0 else ((mag,) if not nonzero else (mag, -mag))
            for k in signs:
                coeffs[i] = k
                if cycle_mode and k:
                    shift(i, k)
                dfs(i + 1, rem - mag, nonzero or k != 0)
                if cycle_mode and k:
                    shift(i, -k)
        coeffs[i] = 0

    dfs(0, n_max, False)
    out.sort(key=lambda ch: (l1_norm(ch), sorted(ch.coeffs.items())))
    return out


def chain_profile(
    cc: ChainComplex,
    q: int,
    n_max: int,
    budget: SearchBudget | None = None,
) -> ProfileTable:
    """The chain profile of ``cc`` in dimension q, tabulated for n = 0..n_max.

    Each entry is the supremum of FV over boundary chains of norm <= n;
    the supremum over an empty candidate set is 0.  An entry is Exact only
    if every contributing fill completed exactly; a budget-limited fill
    demotes the affected entries to LowerBound.
    """
    if not 1 <= q <= cc.top_dim:
        raise DimensionError(f"profile dimension q={q} out of range 1..{cc.top_dim}")
    if n_max < 0:
        raise DimensionError("n_max must be >= 0")
    budget = budget or SearchBudget()
    lat = lattice_solver(cc, q)
    threads = _thread_cap()

    by_norm: dict[int, list[Chain]] = {}
    for ch in _image_candidates(cc, q, n_max):
        by_norm.setdefault(l1_norm(ch), []).append(ch)

    phi = [0] * (n_max + 1)
    lb_norms: set[int] = set()
    for t in range(1, n_max + 1):
        cur = phi[t - 1]
        todo: list[tuple[int, Chain]] = []
        for ch in by_norm.get(t, ()):
            if lat.solve(cc.chain_to_vector(ch)) is None:
                continue
            ub, _witness = fill_upper_bound(cc, q, ch)
            if ub > cur:
                todo.append((ub, ch))
        # Likely suprema first: later candidates get skipped by the max so far.
        todo.sort(key=lambda item: (-item[0], sorted(item[1].coeffs.items())))
        if threads == 1:
            for ub, ch in todo:
                if ub <= cur:
                    continue
                res = fill_volume(cc, q, ch, budget)
                if res.status == LOWER_BOUND:
                    lb_norms.add(t)
                cur = max(cur, res.value)
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(
                    pool.map(lambda item: fill_volume(cc, q, item[1], budget), todo)
                )
            for res in results:
                if res.status == LOWER_BOUND:
                    lb_norms.add(t)
                cur = max(cur, res.value)
        phi[t] = cur

    entries = []
    for n in range(n_max + 1):
        exact = not any(t <= n for t in lb_norms)
        entries.append(ProfileEntry(phi[n], EXACT if exact else LOWER_BOUND))
    return ProfileTable(
        entries,
        label=cc.name or repr(cc),
        dim=q,
        budget_note=f"max_nodes={budget.max_nodes}",
    )


# -- quasi-boundedness fitting ------------------------------------------------


@dataclass(frozen=True)
class QuasiFitWitness:
    """Constants with f(x) <= A g(Bx) + Cx + D at every compared sample."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    note: str = ""

    def __post_init__(self):
        if self.a <= 0 or self.b <= 0:
            raise InvariantError("A and B must be positive")
        if self.c < 0 or self.d < 0:
            raise InvariantError("C and D must be nonnegative")


@dataclass(frozen=True)
class FitGrid:
    """Finite search grid: candidate B, C, D values plus a cap on A."""

    a_max: Fraction
    b_values: tuple[Fraction, ...]
    c_values: tuple[Fraction, ...]
    d_values: tuple[Fraction, ...]

    def __post_init__(self):
        if self.a_max <= 0:
            raise InvariantError("a_max must be positive")
        if any(b <= 0 for b in self.b_values):
            raise InvariantError("B values must be positive")
        if any(v < 0 for v in self.c_values + self.d_values):
            raise InvariantError("C and D values must be nonnegative")

    @classmethod
    def square(cls, bound: int) -> "FitGrid":
        """A, B <= bound with all small-fraction B = p/q; C, D integers 0..bound.

        B values are ordered integers-first so the identity scaling is
        preferred when it works.
        """
        if bound < 1:
            raise InvariantError("grid bound must be >= 1")
        bs: list[Fraction] = []
        seen = set()
        for den in range(1, bound + 1):
            for num in range(1, bound + 1):
                f = Fraction(num, den)
                if f not in seen:
                    seen.add(f)
                    bs.append(f)
        cs = tuple(Fraction(i) for i in range(bound + 1))
        return cls(Fraction(bound), tuple(bs), cs, cs)


def witness_holds(f: ProfileTable, g: ProfileTable, w: QuasiFitWitness) -> bool:
    """Direct substitution check at every sample x = 0..f.n_max with
    Bx <= g.n_max; infinite f-values require infinite g-values."""
    for x in range(f.n_max + 1):
        bx = w.b * x
        if bx > g.n_max:
            continue
        fx = f.value(x)
        gx = g.value(math.floor(bx))
        if fx == INF:
            if gx != INF:
                return False
            continue
        if gx == INF:
            continue
        if Fraction(fx) > w.a * gx + w.c * x + w.d:
            return False
    return True


def _min_feasible_a(
    f: ProfileTable,
    g: ProfileTable,
    b: Fraction,
    cv: Fraction,
    dv: Fraction,
    xs: list[int],
    a_max: Fraction,
) -> Fraction | None:
    amin: Fraction | None = None
    for x in xs:
        fx = f.value(x)
        gx = g.value(math.floor(b * x))
        if fx == INF:
            if gx == INF:
                continue
            return None
        threshold = cv * x + dv
        if Fraction(fx) <= threshold:
            continue  # C and D already absorb this sample
        if gx == INF:
            continue
        if gx == 0:
            return None
        ratio = (Fraction(fx) - threshold) / gx
        if amin is None or ratio > amin:
            amin = ratio
    if amin is None:
        return Fraction(1) if a_max >= 1 else a_max
    return amin if amin <= a_max else None


def quasi_bounded_fit(
    f: ProfileTable, g: ProfileTable, grid: FitGrid
) -> QuasiFitWitness | None:
    """First grid witness of f(x) <= A g(Bx) + Cx + D, or None.

    For each (B, C, D) the minimal feasible A is computed in closed form;
    samples with Bx > g's range are excluded and noted on the witness.
    None refutes only this grid at these samples, nothing asymptotic.
    """
    if not (grid.b_values and grid.c_values and grid.d_values):
        raise InvariantError("empty grid")
    for table in (f, g):
        if not table.is_fully_exact():
            raise InvariantError("fitting requires fully Exact tables")
    compared_any = False
    for b in grid.b_values:
        xs = [x for x in range(f.n_max + 1) if b * x <= g.n_max]
        if not xs:
            continue
        compared_any = True
        excluded = f.n_max + 1 - len(xs)
        for cv in grid.c_values:
            for dv in grid.d_values:
                a = _min_feasible_a(f, g, b, cv, dv, xs, grid.a_max)
                if a is None:
                    continue
                note = f"checked x=0..{f.n_max}"
                if excluded:
                    note += f"; {excluded} samples excluded (Bx > {g.n_max})"
                w = QuasiFitWitness(a, b, cv, dv, note)
                if not witness_holds(f, g, w):
                    raise InvariantError("fitter produced a witness that fails re-verification")
                return w
    if not compared_any:
        raise InvariantError(
            "empty comparable range: every B pushes all samples out of g's domain"
        )
    return None


def quasi_equivalent_fit(
    f: ProfileTable, g: ProfileTable, grid: FitGrid
) -> tuple[QuasiFitWitness, QuasiFitWitness] | None:
    """Witnesses for both directions f <= g <= f, or None if either fails."""
    forward = quasi_bounded_fit(f, g, grid)
    if forward is None:
        return None
    backward = quasi_bounded_fit(g, f, grid)
    if backward is None:
        return None
    return forward, backward
