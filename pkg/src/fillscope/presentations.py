"""Group presentations, free words, and the associated 2-complex.

A word is a tuple of nonzero ints: letter ``+k`` is generator ``k-1``,
``-k`` its inverse.  Words are freely reduced everywhere; ``free_reduce``
is the only way they are built.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .chains import Chain, ChainComplex
from .errors import InvariantError, ParseError


class Word:
    """A freely reduced word in a free group, as signed 1-based generator indices."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int]):
        lst = tuple(int(x) for x in letters)
        for a, b in zip(lst, lst[1:]):
            if a == -b:
                raise InvariantError("word is not freely reduced; use free_reduce")
        if any(x == 0 for x in lst):
            raise InvariantError("0 is not a letter")
        object.__setattr__(self, "letters", lst)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return free_reduce(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple(-x for x in reversed(self.letters)))

    def rotated(self, k: int) -> "Word":
        """Cyclic rotation by k letters (may need re-reduction at the seam)."""
        lst = self.letters
        if not lst:
            return self
        k %= len(lst)
        return free_reduce(lst[k:] + lst[:k])

    def exponent_sums(self, n_generators: int) -> list[int]:
        out = [0] * n_generators
        for x in self.letters:
            out[abs(x) - 1] += 1 if x > 0 else -1
        return out

    def tokens(self, generators: Sequence[str]) -> list[str]:
        return [
            generators[abs(x) - 1] if x > 0 else generators[abs(x) - 1] + "^-1"
            for x in self.letters
        ]

    def __repr__(self) -> str:
        return f"Word({list(self.letters)})"


EPSILON = Word(())


def free_reduce(raw: Iterable[int]) -> Word:
    """Cancel adjacent inverse pairs until none remain.  Idempotent."""
    stack: list[int] = []
    for x in raw:
        if x == 0:
            raise InvariantError("0 is not a letter")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return Word(stack)


def cyclically_reduce(w: Word) -> Word:
    lst = list(w.letters)
    while len(lst) >= 2 and lst[0] == -lst[-1]:
        lst = lst[1:-1]
    return Word(lst)


def word_from_tokens(tokens: Sequence[str], generators: Sequence[str]) -> Word:
    """Build a word from tokens like ``"a"`` / ``"a^-1"`` over named generators."""
    index = {g: i + 1 for i, g in enumerate(generators)}
    letters = []
    for tok in tokens:
        name, neg = (tok[:-3], True) if tok.endswith("^-1") else (tok, False)
        if name not in index:
            raise ParseError(f"unknown generator {name!r}")
        letters.append(-index[name] if neg else index[name])
    return free_reduce(letters)


class Presentation:
    """A finite group presentation: ordered generators and reduced relators."""

    __slots__ = ("generators", "relators", "name")

    def __init__(self, generators: Sequence[str], relators: Iterable[Word], name: str = ""):
        gens = tuple(generators)
        if len(set(gens)) != len(gens):
            raise InvariantError("duplicate generator names")
        rels = []
        for r in relators:
            r = cyclically_reduce(free_reduce(r.letters))
            if any(abs(x) > len(gens) for x in r.letters):
                raise InvariantError("relator uses a generator index out of range")
            if r.letters:
                rels.append(r)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))
        object.__setattr__(self, "name", name)

    def __setattr__(self, name, value):
        raise AttributeError("Presentation is immutable")

    def word(self, tokens: Sequence[str]) -> Word:
        return word_from_tokens(tokens, self.generators)

    def __repr__(self) -> str:
        rels = "; ".join(" ".join(r.tokens(self.generators)) for r in self.relators)
        return f"<{', '.join(self.generators)} | {rels}>"


def presentation_complex(p: Presentation) -> ChainComplex:
    """The 2-complex of a presentation: one vertex, a loop per generator,
    a 2-cell per relator whose boundary column is the exponent-sum vector."""
    cells = {0: ["v"], 1: list(p.generators), 2: [f"r{i}" for i in range(len(p.relators))]}
    bnd: dict[int, dict[str, dict[str, int]]] = {1: {}, 2: {}}
    for g in p.generators:
        bnd[1][g] = {}  # loop at the single vertex: endpoints cancel
    for i, r in enumerate(p.relators):
        sums = r.exponent_sums(len(p.generators))
        bnd[2][f"r{i}"] = {
            p.generators[j]: s for j, s in enumerate(sums) if s
        }
    if not p.relators:
        del cells[2]
        del bnd[2]
    return ChainComplex(cells, bnd, name=p.name or "presentation-complex")


def abelianized_chain(p: Presentation, w: Word) -> Chain:
    """Exponent-sum 1-chain of ``w`` over the presentation complex of ``p``."""
    if any(abs(x) > len(p.generators) for x in w.letters):
        raise InvariantError("word uses a generator index out of range")
    sums = w.exponent_sums(len(p.generators))
    return Chain(1, {p.generators[i]: s for i, s in enumerate(sums) if s})
