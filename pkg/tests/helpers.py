"""Shared oracles and generators for the test suite.

Everything here is deliberately independent of the solver paths it checks:
determinants come from fraction-free elimination, word fillings from
iterative-deepening move enumeration, and profile values from brute-force
fills only.
"""

from __future__ import annotations

from fractions import Fraction

import fillscope as fs


def det(matrix: list[list[int]]) -> Fraction:
    """Determinant by exact Gaussian elimination (tests only)."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    m = [[Fraction(v) for v in row] for row in matrix]
    sign = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    out = Fraction(sign)
    for i in range(n):
        out *= m[i][i]
    return out


def mat_mul(a, b):
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in range(len(a))]
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def random_small_complex(rng) -> fs.ChainComplex | None:
    """A random 2-dimensional chain complex with <= 8 cells per dimension,
    entries in [-2, 2], and dd = 0 by construction: take a random simplicial
    complex, then apply unimodular row/column tweaks to the 1-cell basis."""
    nv = rng.randint(3, 6)
    verts = [str(i) for i in range(nv)]
    tris = []
    for a in range(nv):
        for b in range(a + 1, nv):
            for c in range(b + 1, nv):
                if rng.random() < 0.5:
                    tris.append([verts[a], verts[b], verts[c]])
    edges = []
    for a in range(nv):
        for b in range(a + 1, nv):
            if rng.random() < 0.6:
                edges.append([verts[a], verts[b]])
    sc = fs.SimplicialComplex(verts, tris + edges)
    cc = fs.to_chain_complex(sc)
    if cc.top_dim < 2 or cc.n_cells(2) == 0:
        return None
    if cc.n_cells(1) > 8 or cc.n_cells(2) > 8:
        return None
    m1 = cc.boundary_matrix(1)
    m2 = cc.boundary_matrix(2)
    n1 = cc.n_cells(1)
    # Change of basis on C_1: bd2 -> E bd2 and bd1 -> bd1 E^{-1} keeps dd = 0.
    for _ in range(rng.randint(0, 2)):
        i, j = rng.sample(range(n1), 2)
        s = rng.choice([1, -1])
        trial2 = [row[:] for row in m2]
        trial1 = [row[:] for row in m1]
        for col in range(len(trial2[0]) if trial2 else 0):
            trial2[i][col] += s * trial2[j][col]
        for r in range(len(trial1)):
            trial1[r][j] -= s * trial1[r][i]
        entries = [abs(v) for row in trial1 + trial2 for v in row]
        if entries and max(entries) <= 2:
            m1, m2 = trial1, trial2
    verts0 = cc.cells(0)
    cells = {
        0: list(verts0),
        1: [f"e{k}" for k in range(n1)],
        2: list(cc.cells(2)),
    }
    bnd = {1: {}, 2: {}}
    for j in range(n1):
        bnd[1][f"e{j}"] = {verts0[i]: m1[i][j] for i in range(len(verts0)) if m1[i][j]}
    for j, cell in enumerate(cc.cells(2)):
        bnd[2][cell] = {f"e{i}": m2[i][j] for i in range(n1) if m2[i][j]}
    return fs.ChainComplex(cells, bnd)


def brute_profile(cc: fs.ChainComplex, q: int, n_max: int, fv_bound: int) -> list[int]:
    """Profile values by exhaustive candidate enumeration + brute-force fills.

    Enumerates every (q-1)-chain of norm <= n_max over all (q-1)-cells and
    asks the brute-force filler about each; LowerBound answers would make
    the oracle incomplete, so they fail loudly.
    """
    cells = cc.cells(q - 1)

    def vectors(i, rem, current):
        if i == len(cells):
            yield dict(current)
            return
        for mag in range(rem + 1):
            for k in (0,) if mag == 0 else (mag, -mag):
                if k:
                    current[cells[i]] = k
                yield from vectors(i + 1, rem - mag, current)
                current.pop(cells[i], None)

    values = [0] * (n_max + 1)
    for coeffs in vectors(0, n_max, {}):
        c = fs.Chain(q - 1, coeffs)
        if not c:
            continue
        res = fs.fill_volume_bruteforce(cc, q, c, fv_bound)
        if res.status == fs.INFINITE:
            continue
        assert res.status == fs.EXACT, "oracle bound too small for this complex"
        n = fs.l1_norm(c)
        values[n] = max(values[n], res.value)
    for n in range(1, n_max + 1):
        values[n] = max(values[n], values[n - 1])
    return values


def oracle_word_fv(p: fs.Presentation, w: fs.Word, max_cost: int, max_word_len: int):
    """Iterative-deepening exhaustive search for the least number of relator
    applications taking w to the empty word.  Independent of the library's
    breadth-first search: no visited set, plain move recursion."""
    forms = []
    for r in p.relators:
        for base in (r.letters, r.inverse().letters):
            for k in range(len(base)):
                rho = base[k:] + base[:k]
                if rho not in forms:
                    forms.append(rho)

    def neighbors(u):
        seen = set()
        for rho in forms:
            for take in range(len(rho) + 1):
                s = rho[:take]
                repl = tuple(-x for x in reversed(rho[take:]))
                for pos in range(len(u) - take + 1):
                    if u[pos : pos + take] != s:
                        continue
                    new = fs.free_reduce(u[:pos] + repl + u[pos + take :]).letters
                    if new != u and len(new) <= max_word_len and new not in seen:
                        seen.add(new)
                        yield new

    def dfs(u, depth):
        if not u:
            return 0
        if depth == 0:
            return None
        best = None
        for nxt in neighbors(u):
            sub = dfs(nxt, depth - 1)
            if sub is not None and (best is None or sub + 1 < best):
                best = sub + 1
        return best

    for depth in range(max_cost + 1):
        hit = dfs(w.letters, depth)
        if hit is not None:
            return hit
    return None
