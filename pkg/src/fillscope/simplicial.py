"""Simplicial complexes: chain complexes, subdivision, presentations, covers.

Orientation convention used throughout: simplices are written with their
vertices strictly increasing in the complex's global vertex order, and
boundary signs alternate over vertex deletion.  Everything downstream
(chain complexes, presentations, covers) inherits determinism from that
single ordering choice.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping, Sequence

from .chains import Chain, ChainComplex
from .errors import DimensionError, InvariantError, ParseError
from .presentations import Presentation, cyclically_reduce, free_reduce

Simplex = tuple[str, ...]

COVER_SHEET_SEP = "@"
CELL_SEP = ","


def simplex_cell_id(s: Simplex) -> str:
    return CELL_SEP.join(s)


class SimplicialComplex:
    """A finite simplicial complex: ordered vertices and face-closed simplex sets."""

    def __init__(self, vertices: Sequence[str], simplices: Iterable[Sequence[str]]):
        verts = tuple(str(v) for v in vertices)
        if len(set(verts)) != len(verts):
            raise InvariantError("duplicate vertex names")
        self._order = {v: i for i, v in enumerate(verts)}
        by_dim: dict[int, set[Simplex]] = {0: {(v,) for v in verts}}
        for raw in simplices:
            s = tuple(str(v) for v in raw)
            if not s:
                raise InvariantError("empty simplex")
            for v in s:
                if v not in self._order:
                    raise InvariantError(f"simplex {s} uses unknown vertex {v!r}")
            idx = [self._order[v] for v in s]
            if any(a >= b for a, b in zip(idx, idx[1:])):
                raise InvariantError(
                    f"simplex {s} is not strictly increasing in the vertex order"
                )
            by_dim.setdefault(len(s) - 1, set()).add(s)
        # Close under faces.
        for d in range(max(by_dim), 0, -1):
            for s in list(by_dim.get(d, ())):
                for i in range(len(s)):
                    by_dim.setdefault(d - 1, set()).add(s[:i] + s[i + 1 :])
        self.vertices = verts
        self.dim = max(d for d, ss in by_dim.items() if ss) if by_dim else 0
        self._simplices = {
            d: tuple(sorted(by_dim.get(d, ()), key=lambda s: [self._order[v] for v in s]))
            for d in range(self.dim + 1)
        }

    def simplices(self, d: int) -> tuple[Simplex, ...]:
        if not 0 <= d <= self.dim:
            raise DimensionError(f"dimension {d} out of range 0..{self.dim}")
        return self._simplices[d]

    def n_simplices(self, d: int) -> int:
        return len(self.simplices(d))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * self.n_simplices(d) for d in range(self.dim + 1))

    def has_simplex(self, s: Sequence[str]) -> bool:
        s = tuple(s)
        d = len(s) - 1
        return 0 <= d <= self.dim and s in set(self._simplices[d])

    def edges(self) -> tuple[Simplex, ...]:
        return self.simplices(1) if self.dim >= 1 else ()

    def __repr__(self) -> str:
        counts = ",".join(str(self.n_simplices(d)) for d in range(self.dim + 1))
        return f"SimplicialComplex(({counts}))"


def connected_components(sc: SimplicialComplex) -> list[set[str]]:
    adj: dict[str, list[str]] = {v: [] for v in sc.vertices}
    for u, v in sc.edges():
        adj[u].append(v)
        adj[v].append(u)
    seen: set[str] = set()
    comps = []
    for v in sc.vertices:
        if v in seen:
            continue
        comp = {v}
        queue = deque([v])
        seen.add(v)
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    queue.append(y)
        comps.append(comp)
    return comps


def is_connected(sc: SimplicialComplex) -> bool:
    return len(connected_components(sc)) <= 1


def to_chain_complex(sc: SimplicialComplex, name: str = "") -> ChainComplex:
    """Cellular chain complex with the alternating-sign simplicial boundary."""
    cells = {
        d: [simplex_cell_id(s) for s in sc.simplices(d)] for d in range(sc.dim + 1)
    }
    bnd: dict[int, dict[str, dict[str, int]]] = {}
    for d in range(1, sc.dim + 1):
        cols = {}
        for s in sc.simplices(d):
            col: dict[str, int] = {}
            for i in range(len(s)):
                face = s[:i] + s[i + 1 :]
                col[simplex_cell_id(face)] = 1 if i % 2 == 0 else -1
            cols[simplex_cell_id(s)] = col
        bnd[d] = cols
    return ChainComplex(cells, bnd, name=name)


def barycentric_subdivide(sc: SimplicialComplex) -> SimplicialComplex:
    """Standard barycentric subdivision: one vertex per simplex, one simplex
    per strictly increasing flag of faces.  Preserves Euler characteristic
    and homology."""

    def bary_name(s: Simplex) -> str:
        return s[0] if len(s) == 1 else f"b({simplex_cell_id(s)})"

    # New global vertex order: by dimension, then by old ordering.
    new_vertices: list[str] = []
    for d in range(sc.dim + 1):
        for s in sc.simplices(d):
            new_vertices.append(bary_name(s))

    def faces_below(s: Simplex) -> list[Simplex]:
        return [s[:i] + s[i + 1 :] for i in range(len(s))]

    flags: list[tuple[str, ...]] = []

    def extend(flag: list[Simplex]):
        flags.append(tuple(bary_name(s) for s in reversed(flag)))
        top = flag[-1]
        if len(top) > 1:
            for f in faces_below(top):
                flag.append(f)
                extend(flag)
                flag.pop()

    for d in range(sc.dim + 1):
        for s in sc.simplices(d):
            extend([s])
    return SimplicialComplex(new_vertices, flags)


def spanning_tree(sc: SimplicialComplex) -> set[Simplex]:
    """BFS spanning tree from the least vertex; deterministic."""
    if not is_connected(sc):
        raise InvariantError("complex is not connected")
    adj: dict[str, list[str]] = {v: [] for v in sc.vertices}
    for u, v in sc.edges():
        adj[u].append(v)
        adj[v].append(u)
    order = {v: i for i, v in enumerate(sc.vertices)}
    for v in adj:
        adj[v].sort(key=order.__getitem__)
    root = sc.vertices[0]
    tree: set[Simplex] = set()
    seen = {root}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                tree.add(tuple(sorted((x, y), key=order.__getitem__)))
                queue.append(y)
    return tree


def edge_path_presentation(
    sc: SimplicialComplex, tree: set[Simplex] | None = None
) -> Presentation:
    """Presentation of the fundamental group from the 2-skeleton.

    Generators are the edges outside a spanning tree; each 2-simplex
    contributes the relator read off its boundary loop with tree edges
    deleted, freely and cyclically reduced.  Empty relators are dropped.
    """
    if tree is None:
        tree = spanning_tree(sc)
    else:
        tree = {tuple(e) for e in tree}
        all_edges = set(sc.edges())
        for e in tree:
            if e not in all_edges:
                raise InvariantError(f"tree edge {e} is not an edge of the complex")
        if len(tree) != len(sc.vertices) - 1:
            raise InvariantError("given edge set is not a spanning tree (wrong size)")
        probe = SimplicialComplex(sc.vertices, sorted(tree))
        if not is_connected(probe):
            raise InvariantError("given edge set is not a spanning tree (not connected)")
        if not is_connected(sc):
            raise InvariantError("complex is not connected")

    gens = [e for e in sc.edges() if e not in tree]
    gen_index = {e: i + 1 for i, e in enumerate(gens)}

    def letter(a: str, b: str) -> int:
        # Directed traversal a -> b of the undirected edge {a, b}.
        e, sign = ((a, b), 1) if (a, b) in gen_index or (a, b) in tree else ((b, a), -1)
        if e in tree:
            return 0
        return sign * gen_index[e]

    relators = []
    if sc.dim >= 2:
        for u, v, w in sc.simplices(2):
            raw = [letter(u, v), letter(v, w), letter(w, u)]
            word = cyclically_reduce(free_reduce([x for x in raw if x]))
            if word.letters:
                relators.append(word)
    names = [f"{u}-{v}" for u, v in gens]
    return Presentation(names, relators)


class PermutationAssignment:
    """Monodromy data for a d-sheeted cover: a permutation of {0..d-1} per edge.

    ``perm[(u, v)]`` transports sheets along the oriented edge u -> v
    (u before v in the vertex order); the reverse traversal uses the
    inverse.  Consistency over every 2-simplex [u,v,w] -- transport along
    (u,w) equals (v,w) after (u,v) -- is what makes higher lifts well
    defined, and is validated rather than assumed.
    """

    def __init__(self, fiber_size: int, perms: Mapping[Simplex, Sequence[int]]):
        if fiber_size < 1:
            raise InvariantError("fiber size must be >= 1")
        self.fiber_size = fiber_size
        self.perms: dict[Simplex, tuple[int, ...]] = {}
        for edge, p in perms.items():
            p = tuple(int(x) for x in p)
            if sorted(p) != list(range(fiber_size)):
                raise InvariantError(f"{p} is not a permutation of 0..{fiber_size - 1}")
            self.perms[tuple(edge)] = p

    @classmethod
    def identity(cls, sc: SimplicialComplex, fiber_size: int) -> "PermutationAssignment":
        ident = tuple(range(fiber_size))
        return cls(fiber_size, {e: ident for e in sc.edges()})

    @classmethod
    def from_partial(
        cls,
        sc: SimplicialComplex,
        fiber_size: int,
        perms: Mapping[Simplex, Sequence[int]],
    ) -> "PermutationAssignment":
        """Fill unlisted edges with the identity permutation."""
        full = {e: tuple(range(fiber_size)) for e in sc.edges()}
        for edge, p in perms.items():
            full[tuple(edge)] = tuple(p)
        return cls(fiber_size, full)

    def transport(self, a: str, b: str, order: Mapping[str, int]) -> tuple[int, ...]:
        """Sheet permutation for the directed traversal a -> b."""
        if order[a] < order[b]:
            return self.perms[(a, b)]
        p = self.perms[(b, a)]
        inv = [0] * len(p)
        for i, x in enumerate(p):
            inv[x] = i
        return tuple(inv)

    def validate(self, sc: SimplicialComplex) -> None:
        for e in sc.edges():
            if e not in self.perms:
                raise InvariantError(f"edge {e} has no assigned permutation")
        if sc.dim >= 2:
            for u, v, w in sc.simplices(2):
                puv = self.perms[(u, v)]
                pvw = self.perms[(v, w)]
                puw = self.perms[(u, w)]
                composed = tuple(pvw[puv[k]] for k in range(self.fiber_size))
                if composed != puw:
                    raise InvariantError(
                        f"inconsistent assignment on 2-simplex ({u},{v},{w}): "
                        f"perm(u,w)={puw} but perm(v,w)∘perm(u,v)={composed}"
                    )


def cover_vertex(v: str, sheet: int) -> str:
    return f"{v}{COVER_SHEET_SEP}{sheet}"


def base_vertex(cover_v: str) -> str:
    base, _, sheet = cover_v.rpartition(COVER_SHEET_SEP)
    if not base or not sheet.isdigit():
        raise ParseError(f"{cover_v!r} is not a cover vertex name")
    return base


def build_cover(sc: SimplicialComplex, pa: PermutationAssignment) -> SimplicialComplex:
    """The d-sheeted cover encoded by a consistent permutation assignment.

    Cover vertices are ``v@k`` over base vertices v and sheets k; a base
    simplex (v0..vq) lifts at sheet k to the sheets obtained by transporting
    k along the edges (v0, vi).  Every base simplex gets exactly d lifts,
    so the Euler characteristic scales by d.
    """
    if not is_connected(sc):
        raise InvariantError("base complex is not connected")
    pa.validate(sc)
    d = pa.fiber_size
    order = {v: i for i, v in enumerate(sc.vertices)}
    vertices = [cover_vertex(v, k) for v in sc.vertices for k in range(d)]
    lifted: list[tuple[str, ...]] = []
    for q in range(1, sc.dim + 1):
        for s in sc.simplices(q):
            v0 = s[0]
            for k in range(d):
                sheets = [k] + [pa.transport(v0, vi, order)[k] for vi in s[1:]]
                lifted.append(tuple(cover_vertex(v, sh) for v, sh in zip(s, sheets)))
    return SimplicialComplex(vertices, lifted)


def cover_pushforward(c: Chain) -> Chain:
    """Induced chain map of the covering projection: sum each fiber onto its
    base cell.  Lifts preserve orientation, so coefficients just add."""
    acc: dict[str, int] = {}
    for cell, k in c.coeffs.items():
        base = CELL_SEP.join(base_vertex(v) for v in cell.split(CELL_SEP))
        v = acc.get(base, 0) + k
        if v:
            acc[base] = v
        else:
            acc.pop(base, None)
    return Chain(c.dim, acc)
