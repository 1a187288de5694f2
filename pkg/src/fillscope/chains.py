"""Finite cellular chain complexes over the integers.

A complex is stored as a graded family of sparse integer boundary matrices
(column-major: one column per cell, mapping it to its faces).  Chains are
sparse coefficient vectors in a single dimension.  All coefficients are
Python ints, i.e. arbitrary precision; nothing here ever rounds.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import DimensionError, InvariantError, UnknownCellError


class Chain:
    """A sparse integer chain: ``dim`` plus a map cell-id -> nonzero coefficient.

    Immutable; arithmetic returns new chains.  Zero coefficients are never
    stored, so ``bool(chain)`` means "nonzero chain".
    """

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim: int, coeffs: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        if dim < 0:
            raise DimensionError(f"chain dimension must be >= 0, got {dim}")
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[str, int] = {}
        for cell, k in items:
            if k == 0:
                continue
            if cell in clean:
                raise InvariantError(f"duplicate coefficient for cell {cell!r}")
            clean[cell] = int(k)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Chain is immutable")

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Chain)
            and self.dim == other.dim
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self.coeffs.items())))

    def __neg__(self) -> "Chain":
        return Chain(self.dim, {c: -k for c, k in self.coeffs.items()})

    def __add__(self, other: "Chain") -> "Chain":
        if self.dim != other.dim:
            raise DimensionError(f"cannot add chains of dims {self.dim} and {other.dim}")
        acc = dict(self.coeffs)
        for cell, k in other.coeffs.items():
            v = acc.get(cell, 0) + k
            if v:
                acc[cell] = v
            else:
                acc.pop(cell, None)
        return Chain(self.dim, acc)

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def scale(self, k: int) -> "Chain":
        if k == 0:
            return Chain(self.dim)
        return Chain(self.dim, {c: k * v for c, v in self.coeffs.items()})

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"Chain(dim={self.dim}, 0)"
        body = " + ".join(f"{k}*{c}" for c, k in sorted(self.coeffs.items()))
        return f"Chain(dim={self.dim}, {body})"


def l1_norm(c: Chain) -> int:
    """Word length of ``c`` in the free abelian chain group: sum of |coefficients|."""
    return sum(abs(k) for k in c.coeffs.values())


class ChainComplex:
    """A finite cellular chain complex with exact integer boundary matrices.

    ``cells[d]`` is the ordered tuple of cell identifiers in dimension d,
    for d = 0..top_dim.  ``columns[d][cell]`` is the sparse boundary column
    of a d-cell (d >= 1), mapping (d-1)-cell ids to integer coefficients.

    Validated on construction: identifiers unique per dimension, every
    column references existing faces, and boundary-of-boundary vanishes.
    Instances are immutable after construction.
    """

    def __init__(
        self,
        cells: Mapping[int, Iterable[str]],
        boundary: Mapping[int, Mapping[str, Mapping[str, int]]],
        name: str = "",
    ):
        top_dim = max(cells) if cells else 0
        cell_tuples: dict[int, tuple[str, ...]] = {}
        for d in range(top_dim + 1):
            ids = tuple(cells.get(d, ()))
            if len(set(ids)) != len(ids):
                raise InvariantError(f"duplicate cell identifiers in dimension {d}")
            cell_tuples[d] = ids
        cols: dict[int, dict[str, dict[str, int]]] = {}
        for d in range(1, top_dim + 1):
            faces = set(cell_tuples[d - 1])
            given = boundary.get(d, {})
            per_cell: dict[str, dict[str, int]] = {}
            for cell in cell_tuples[d]:
                col = {f: int(k) for f, k in given.get(cell, {}).items() if k != 0}
                for f in col:
                    if f not in faces:
                        raise UnknownCellError(f, d - 1)
                per_cell[cell] = col
            for cell in given:
                if cell not in per_cell:
                    raise UnknownCellError(cell, d)
            cols[d] = per_cell
        self._cells = cell_tuples
        self._columns = cols
        self._index = {
            d: {c: i for i, c in enumerate(ids)} for d, ids in cell_tuples.items()
        }
        self.top_dim = top_dim
        self.name = name
        self._check_d_squared()
        self._frozen = True

    def __setattr__(self, name, value):
        if getattr(self, "_frozen", False):
            raise AttributeError("ChainComplex is immutable")
        super().__setattr__(name, value)

    def _check_d_squared(self) -> None:
        for d in range(2, self.top_dim + 1):
            for cell in self._cells[d]:
                acc: dict[str, int] = {}
                for face, k in self._columns[d][cell].items():
                    for f2, k2 in self._columns[d - 1][face].items():
                        acc[f2] = acc.get(f2, 0) + k * k2
                bad = {f: v for f, v in acc.items() if v != 0}
                if bad:
                    raise InvariantError(
                        f"boundary of boundary of {cell!r} (dim {d}) is nonzero: {bad}"
                    )

    # -- structure queries ------------------------------------------------

    def cells(self, d: int) -> tuple[str, ...]:
        self._check_dim(d)
        return self._cells[d]

    def n_cells(self, d: int) -> int:
        return len(self.cells(d))

    def column(self, d: int, cell: str) -> dict[str, int]:
        """Sparse boundary column of one d-cell (d >= 1).  Returns a copy."""
        if not 1 <= d <= self.top_dim:
            raise DimensionError(f"boundary dimension {d} out of range 1..{self.top_dim}")
        try:
            return dict(self._columns[d][cell])
        except KeyError:
            raise UnknownCellError(cell, d) from None

    def boundary_matrix(self, d: int) -> list[list[int]]:
        """Dense |cells(d-1)| x |cells(d)| integer matrix for the d-th boundary."""
        if not 1 <= d <= self.top_dim:
            raise DimensionError(f"boundary dimension {d} out of range 1..{self.top_dim}")
        rows = self._index[d - 1]
        mat = [[0] * len(self._cells[d]) for _ in range(len(self._cells[d - 1]))]
        for j, cell in enumerate(self._cells[d]):
            for face, k in self._columns[d][cell].items():
                mat[rows[face]][j] = k
        return mat

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * self.n_cells(d) for d in range(self.top_dim + 1))

    def _check_dim(self, d: int) -> None:
        if not 0 <= d <= self.top_dim:
            raise DimensionError(f"dimension {d} out of range 0..{self.top_dim}")

    def validate_chain(self, c: Chain) -> None:
        """Raise unless every cell of ``c`` exists here in dimension c.dim."""
        self._check_dim(c.dim)
        known = self._index[c.dim]
        for cell in c.coeffs:
            if cell not in known:
                raise UnknownCellError(cell, c.dim)

    # -- chain <-> vector -------------------------------------------------

    def chain_to_vector(self, c: Chain) -> list[int]:
        self.validate_chain(c)
        vec = [0] * self.n_cells(c.dim)
        idx = self._index[c.dim]
        for cell, k in c.coeffs.items():
            vec[idx[cell]] = k
        return vec

    def vector_to_chain(self, d: int, vec: Iterable[int]) -> Chain:
        ids = self.cells(d)
        vals = list(vec)
        if len(vals) != len(ids):
            raise DimensionError(
                f"vector length {len(vals)} != {len(ids)} cells in dimension {d}"
            )
        return Chain(d, {ids[i]: v for i, v in enumerate(vals) if v})

    def __repr__(self) -> str:
        counts = ",".join(str(self.n_cells(d)) for d in range(self.top_dim + 1))
        label = f" {self.name!r}" if self.name else ""
        return f"ChainComplex({label} cells=({counts}))"


def boundary(cc: ChainComplex, c: Chain) -> Chain:
    """Apply the canonical boundary map: a (d)-chain goes to a (d-1)-chain."""
    if not 1 <= c.dim <= cc.top_dim:
        raise DimensionError(
            f"boundary needs 1 <= dim <= {cc.top_dim}, got chain of dim {c.dim}"
        )
    cc.validate_chain(c)
    acc: dict[str, int] = {}
    for cell, k in c.coeffs.items():
        for face, e in cc._columns[c.dim][cell].items():
            v = acc.get(face, 0) + k * e
            if v:
                acc[face] = v
            else:
                acc.pop(face, None)
    return Chain(c.dim - 1, acc)
