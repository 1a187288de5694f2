"""Built-in example spaces.

Every acceptance-style computation can run from one of these by name:
chain complexes (cp2, torus-1vertex), simplicial complexes (tetra-boundary,
torus7, circle-k), and presentations (pres-trivial, pres-free, pres-z2).
Simplicial builtins double as chain complexes through the standard
conversion.
"""

from __future__ import annotations

import re

from .chains import ChainComplex
from .errors import ParseError
from .presentations import Presentation, Word
from .simplicial import SimplicialComplex, to_chain_complex

_CIRCLE = re.compile(r"^circle-(\d+)$")

COMPLEX_NAMES = ("cp2", "torus-1vertex")
SIMPLICIAL_NAMES = ("tetra-boundary", "torus7", "circle-k")
PRESENTATION_NAMES = ("pres-trivial", "pres-free", "pres-z2")


def builtin_names() -> tuple[str, ...]:
    return COMPLEX_NAMES + SIMPLICIAL_NAMES + PRESENTATION_NAMES


def _cp2() -> ChainComplex:
    # One cell in dimensions 0, 2, 4; skipped dimensions force zero boundaries.
    cells = {0: ["p"], 1: [], 2: ["s2"], 3: [], 4: ["t4"]}
    boundary = {2: {"s2": {}}, 4: {"t4": {}}}
    return ChainComplex(cells, boundary, name="cp2")


def _torus_1vertex() -> ChainComplex:
    # CW torus: a single vertex, loops a and b, one face glued along aba'b'.
    cells = {0: ["v"], 1: ["a", "b"], 2: ["f"]}
    boundary = {1: {"a": {}, "b": {}}, 2: {"f": {}}}
    return ChainComplex(cells, boundary, name="torus-1vertex")


def _tetra_boundary() -> SimplicialComplex:
    verts = ["0", "1", "2", "3"]
    faces = [
        [a, b, c]
        for a in verts
        for b in verts
        for c in verts
        if a < b < c
    ]
    return SimplicialComplex(verts, faces)


def _torus7() -> SimplicialComplex:
    # The 7-vertex (Moebius) triangulation of the torus: faces {i, i+1, i+3}
    # and {i, i+2, i+3} mod 7.
    faces = []
    for i in range(7):
        faces.append(sorted((i, (i + 1) % 7, (i + 3) % 7)))
        faces.append(sorted((i, (i + 2) % 7, (i + 3) % 7)))
    verts = [str(i) for i in range(7)]
    return SimplicialComplex(verts, [[str(v) for v in f] for f in faces])


def _circle(k: int) -> SimplicialComplex:
    if k < 3:
        raise ParseError("circle-k needs k >= 3 for a simplicial k-gon")
    verts = [str(i) for i in range(k)]
    edges = [sorted((str(i), str((i + 1) % k)), key=verts.index) for i in range(k)]
    return SimplicialComplex(verts, edges)


def _presentation(name: str) -> Presentation:
    if name == "pres-trivial":
        return Presentation(["x"], [Word((1,))], name="pres-trivial")
    if name == "pres-free":
        return Presentation(["a", "b"], [], name="pres-free")
    if name == "pres-z2":
        return Presentation(["a", "b"], [Word((1, 2, -1, -2))], name="pres-z2")
    raise ParseError(f"no builtin presentation named {name!r}")


def builtin_simplicial(name: str) -> SimplicialComplex:
    if name == "tetra-boundary":
        return _tetra_boundary()
    if name == "torus7":
        return _torus7()
    m = _CIRCLE.match(name)
    if m:
        return _circle(int(m.group(1)))
    raise ParseError(f"no builtin simplicial complex named {name!r}")


def builtin_complex(name: str) -> ChainComplex:
    if name == "cp2":
        return _cp2()
    if name == "torus-1vertex":
        return _torus_1vertex()
    try:
        return to_chain_complex(builtin_simplicial(name), name=name)
    except ParseError:
        raise ParseError(f"no builtin complex named {name!r}") from None


def builtin_presentation(name: str) -> Presentation:
    return _presentation(name)


def builtin_kind(name: str) -> str:
    if name in COMPLEX_NAMES:
        return "complex"
    if name in PRESENTATION_NAMES:
        return "presentation"
    if name in ("tetra-boundary", "torus7") or _CIRCLE.match(name):
        return "simplicial"
    raise ParseError(f"no builtin named {name!r}")
