"""Exact integer matrix algebra: Smith normal form, lattice membership, homology.

Everything operates on dense lists of Python ints, so intermediate entry
growth is harmless.  The Smith reduction tracks both transforms, U*A*V = D,
which is what certifies integer solvability and homology groups.
"""

from __future__ import annotations

from weakref import WeakKeyDictionary

from .chains import Chain, ChainComplex
from .errors import DimensionError

Matrix = list[list[int]]


def _identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in range(len(a))]
    cols = len(b[0])
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols)]
        for i in range(len(a))
    ]


def _mat_vec(a: Matrix, v: list[int]) -> list[int]:
    return [sum(row[k] * v[k] for k in range(len(v))) for row in a]


class SnfDecomposition:
    """Smith normal form ``U*A*V = D`` with unimodular U, V.

    D is diagonal with nonnegative entries d_1 | d_2 | ... ; ``rank`` counts
    the nonzero diagonal entries.
    """

    __slots__ = ("u", "v", "d", "rows", "cols", "rank")

    def __init__(self, u: Matrix, v: Matrix, d: Matrix, rows: int, cols: int):
        self.u = u
        self.v = v
        self.d = d
        self.rows = rows
        self.cols = cols
        self.rank = sum(
            1 for i in range(min(rows, cols)) if d[i][i] != 0
        )

    def diagonal(self) -> list[int]:
        return [self.d[i][i] for i in range(min(self.rows, self.cols))]


def smith_normal_form(
    a: Matrix, rows: int | None = None, cols: int | None = None
) -> SnfDecomposition:
    """Diagonalize an integer matrix over Z, returning U, V, D with U*A*V = D.

    Deterministic: the pivot is always the smallest-magnitude nonzero entry,
    ties broken by lowest (row, col).  Handles empty and non-square input;
    pass ``rows``/``cols`` explicitly when either dimension is zero, since a
    list of no rows cannot carry its column count.
    """
    m = rows if rows is not None else len(a)
    n = cols if cols is not None else (len(a[0]) if a else 0)
    d = [list(map(int, row)) for row in a]
    u = _identity(m)
    v = _identity(n)

    def swap_rows(i, j):
        if i != j:
            d[i], d[j] = d[j], d[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in d:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        # row_dst += k * row_src
        drow, srow = d[dst], d[src]
        for j in range(n):
            drow[j] += k * srow[j]
        urow, usrc = u[dst], u[src]
        for j in range(m):
            urow[j] += k * usrc[j]

    def add_col(dst, src, k):
        for row in d:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    def find_pivot(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = d[i][j]
                if x and (best is None or abs(x) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        return best

    # Re-pick the globally smallest entry before every reduction round: any
    # nonzero remainder strictly shrinks that minimum, which both terminates
    # the loop and keeps coefficient growth tame.
    t = 0
    while t < min(m, n):
        pos = find_pivot(t)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        piv = d[t][t]
        for i in range(t + 1, m):
            if d[i][t]:
                q = d[i][t] // piv
                if q:
                    add_row(i, t, -q)
        if any(d[i][t] for i in range(t + 1, m)):
            continue  # a remainder smaller than the pivot exists; re-pick
        for j in range(t + 1, n):
            if d[t][j]:
                q = d[t][j] // piv
                if q:
                    add_col(j, t, -q)
        if any(d[t][j] for j in range(t + 1, n)):
            continue
        # Divisibility: pivot must divide every remaining entry.
        offender = None
        for i in range(t + 1, m):
            row = d[i]
            if any(row[j] % piv for j in range(t + 1, n)):
                offender = i
                break
        if offender is not None:
            add_row(t, offender, 1)
            continue
        if piv < 0:
            negate_row(t)
        t += 1
    return SnfDecomposition(u, v, d, m, n)


def solve_integer(a: Matrix, c: list[int]) -> list[int] | None:
    """Find integer b with A*b = c, or None when no integer solution exists.

    Uses the Smith transform: with U*A*V = D, solve D*y = U*c by divisibility
    and map back through b = V*y.
    """
    m = len(a)
    n = len(a[0]) if a else 0
    if len(c) != m:
        raise DimensionError(f"rhs length {len(c)} != {m} rows")
    return _solve_with_snf(smith_normal_form(a), n, c)


def _solve_with_snf(snf: SnfDecomposition, n: int, c: list[int]) -> list[int] | None:
    chat = _mat_vec(snf.u, c)
    y = [0] * n
    k = min(snf.rows, n)
    for i in range(snf.rows):
        di = snf.d[i][i] if i < k else 0
        if di:
            q, r = divmod(chat[i], di)
            if r:
                return None
            y[i] = q
        elif chat[i]:
            return None
    return _mat_vec(snf.v, y)


class LatticeSolver:
    """Reusable membership/solve queries against the column lattice of one matrix.

    Factors A once; each query is a pair of matrix-vector products.  Also
    exposes an integer basis of ker(A) (the V-columns over zero diagonal).
    """

    def __init__(self, a: Matrix, rows: int | None = None, cols: int | None = None):
        self.rows = rows if rows is not None else len(a)
        self.cols = cols if cols is not None else (len(a[0]) if a else 0)
        self.snf = smith_normal_form(a, self.rows, self.cols)

    def solve(self, c: list[int]) -> list[int] | None:
        if len(c) != self.rows:
            raise DimensionError(f"rhs length {len(c)} != {self.rows} rows")
        return _solve_with_snf(self.snf, self.cols, c)

    def kernel_basis(self) -> list[list[int]]:
        v = self.snf.v
        out = []
        for j in range(self.snf.rank, self.cols):
            out.append([v[i][j] for i in range(self.cols)])
        return out


_lattice_cache: "WeakKeyDictionary[ChainComplex, dict[int, LatticeSolver]]" = (
    WeakKeyDictionary()
)


def lattice_solver(cc: ChainComplex, d: int) -> LatticeSolver:
    """Cached LatticeSolver for the d-th boundary matrix of ``cc``.

    The cache is a pure memo over an immutable complex, so a racing double
    computation is harmless.
    """
    per = _lattice_cache.setdefault(cc, {})
    solver = per.get(d)
    if solver is None:
        solver = LatticeSolver(
            cc.boundary_matrix(d), rows=cc.n_cells(d - 1), cols=cc.n_cells(d)
        )
        per[d] = solver
    return solver


def homology_summary(cc: ChainComplex, d: int) -> tuple[int, list[int]]:
    """Betti number and torsion coefficients of H_d, via Smith ranks.

    betti = n_cells(d) - rank(bd_d) - rank(bd_{d+1}); torsion coefficients are
    the diagonal entries > 1 of the Smith form of bd_{d+1}.
    """
    if not 0 <= d <= cc.top_dim:
        raise DimensionError(f"dimension {d} out of range 0..{cc.top_dim}")
    rank_d = lattice_solver(cc, d).snf.rank if d >= 1 else 0
    if d + 1 <= cc.top_dim:
        snf_up = lattice_solver(cc, d + 1).snf
        rank_up = snf_up.rank
        torsion = [x for x in snf_up.diagonal() if x > 1]
    else:
        rank_up = 0
        torsion = []
    betti = cc.n_cells(d) - rank_d - rank_up
    return betti, torsion


def boundary_image_contains(cc: ChainComplex, q: int, c: Chain) -> Chain | None:
    """If c = bd(b) for some integer q-chain b, return one such b, else None."""
    if not 1 <= q <= cc.top_dim:
        raise DimensionError(f"q={q} out of range 1..{cc.top_dim}")
    if c.dim != q - 1:
        raise DimensionError(f"chain dim {c.dim} != q-1 = {q - 1}")
    vec = cc.chain_to_vector(c)
    sol = lattice_solver(cc, q).solve(vec)
    if sol is None:
        return None
    return cc.vector_to_chain(q, sol)
