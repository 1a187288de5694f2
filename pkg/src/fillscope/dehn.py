"""Word filling volumes and presentation Dehn functions by certified search.

A unit-cost move rewrites a (possibly empty) subword s to s' whenever
s s'^-1 is a cyclic rotation of a relator or of its inverse; free
reduction is applied eagerly at zero cost.  Filling volume is the least
number of moves taking a word to the empty word, searched uniform-cost
over words no longer than a declared cap.

Completeness is relative to that cap.  Exact results are optimal among
cap-respecting derivations and always carry a replayable certificate;
``search_complete`` records whether the cap ever cut anything off, which
is what upgrades "not trivialized" to "provably nontrivial".
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InvariantError
from .filling import EXACT, LOWER_BOUND
from .presentations import Presentation, Word, free_reduce
from .profiles import ProfileEntry, ProfileTable
from .snf import LatticeSolver

NOT_TRIVIAL = "NotTrivialWithinBudget"


@dataclass(frozen=True)
class WordSearchLimits:
    """Caps for one uniform-cost search: intermediate word length and move count."""

    max_word_len: int = 24
    max_cost: int = 12


@dataclass(frozen=True)
class RelatorMove:
    """One relator application: at ``pos``, the first ``take`` letters of the
    chosen relator form (relator ``relator``, rotated by ``rotation``,
    inverted if ``inverted``) are replaced by the inverse of its remainder."""

    pos: int
    relator: int
    rotation: int
    inverted: bool
    take: int


@dataclass(frozen=True)
class FVWordResult:
    status: str  # Exact | LowerBound | NotTrivialWithinBudget
    value: int | None
    certificate: tuple[RelatorMove, ...] | None
    search_complete: bool

    def __post_init__(self):
        if self.status not in (EXACT, LOWER_BOUND, NOT_TRIVIAL):
            raise InvariantError(f"bad status {self.status!r}")
        if (self.status == EXACT) != (self.certificate is not None):
            raise InvariantError("certificate must be present exactly for Exact")


def _relator_forms(p: Presentation) -> list[tuple[int, int, bool, tuple[int, ...]]]:
    """All cyclic rotations of every relator and its inverse, deduplicated."""
    forms = []
    seen = set()
    for ri, r in enumerate(p.relators):
        for inverted, base in ((False, r.letters), (True, r.inverse().letters)):
            for k in range(len(base)):
                rho = base[k:] + base[:k]
                if rho not in seen:
                    seen.add(rho)
                    forms.append((ri, k, inverted, rho))
    return forms


def _move_targets(
    u: tuple[int, ...],
    forms: list[tuple[int, int, bool, tuple[int, ...]]],
    max_word_len: int,
):
    """Yield (new_word, move) for every relator application to u; set the
    truncation flag instead when the result would exceed the cap."""
    truncated = False
    for ri, rot, inv, rho in forms:
        for take in range(len(rho) + 1):
            s = rho[:take]
            repl = tuple(-x for x in reversed(rho[take:]))
            for pos in range(len(u) - take + 1):
                if u[pos : pos + take] != s:
                    continue
                new = free_reduce(u[:pos] + repl + u[pos + take :]).letters
                if new == u:
                    continue
                if len(new) > max_word_len:
                    truncated = True
                    continue
                yield new, RelatorMove(pos, ri, rot, inv, take), False
    if truncated:
        yield None, None, True


def apply_move(p: Presentation, w: Word, move: RelatorMove) -> Word:
    """Replay one certificate step (with eager free reduction)."""
    r = p.relators[move.relator]
    base = r.inverse().letters if move.inverted else r.letters
    rho = base[move.rotation :] + base[: move.rotation]
    s = rho[: move.take]
    u = w.letters
    if not 0 <= move.pos <= len(u) - move.take:
        raise InvariantError("certificate step position out of range")
    if u[move.pos : move.pos + move.take] != s:
        raise InvariantError("certificate step does not match the word")
    repl = tuple(-x for x in reversed(rho[move.take :]))
    return free_reduce(u[: move.pos] + repl + u[move.pos + move.take :])


def replay_certificate(p: Presentation, w: Word, moves: tuple[RelatorMove, ...]) -> int:
    """Apply all moves; raise unless the result is the empty word.  Returns
    the number of relator applications."""
    u = w
    for mv in moves:
        u = apply_move(p, u, mv)
    if u.letters:
        raise InvariantError("certificate does not replay to the empty word")
    return len(moves)


def _check_word(p: Presentation, w: Word) -> None:
    for x in w.letters:
        if abs(x) > len(p.generators):
            raise InvariantError(f"word uses unknown generator index {abs(x)}")


def filling_volume_word(
    p: Presentation, w: Word, limits: WordSearchLimits | None = None
) -> FVWordResult:
    """Least number of relator applications taking w to the empty word.

    Uniform-cost (breadth-first, unit moves) over freely reduced words of
    length <= max_word_len.  Exact(N) means ``N`` is minimal among all
    cap-respecting derivations and comes with a verified certificate.
    When the frontier dies with nothing truncated, the word is provably
    not in the normal closure (``NotTrivialWithinBudget`` with
    ``search_complete=True``); otherwise budget statuses carry the caveat
    that completeness is relative to the caps.
    """
    limits = limits or WordSearchLimits()
    _check_word(p, w)
    if not w.letters:
        return FVWordResult(EXACT, 0, (), True)
    forms = _relator_forms(p)
    start = w.letters
    dist: dict[tuple[int, ...], int] = {start: 0}
    parent: dict[tuple[int, ...], tuple[tuple[int, ...], RelatorMove]] = {}
    queue: deque[tuple[int, ...]] = deque([start])
    complete = True
    cost_capped = False
    goal: tuple[int, ...] | None = None
    while queue:
        u = queue.popleft()
        d = dist[u]
        if d >= limits.max_cost:
            cost_capped = True
            complete = False
            continue
        for new, move, truncated in _move_targets(u, forms, limits.max_word_len):
            if truncated:
                complete = False
                continue
            if new in dist:
                continue
            dist[new] = d + 1
            parent[new] = (u, move)
            if not new:
                goal = new
                break
            queue.append(new)
        if goal is not None:
            break
    if goal is not None:
        moves = []
        node = goal
        while node != start:
            node, mv = parent[node]
            moves.append(mv)
        moves.reverse()
        cert = tuple(moves)
        n = replay_certificate(p, w, cert)
        if n != dist[goal]:
            raise InvariantError("certificate length disagrees with search")
        return FVWordResult(EXACT, n, cert, complete)
    if cost_capped:
        return FVWordResult(LOWER_BOUND, limits.max_cost + 1, None, False)
    return FVWordResult(NOT_TRIVIAL, None, None, complete)


def _reduced_words(n_generators: int, max_len: int):
    """All freely reduced words of length <= max_len, shortest first."""
    alphabet = [x for i in range(1, n_generators + 1) for x in (i, -i)]
    layer: list[tuple[int, ...]] = [()]
    yield ()
    for _ in range(max_len):
        nxt = []
        for u in layer:
            for a in alphabet:
                if u and u[-1] == -a:
                    continue
                nxt.append(u + (a,))
        yield from nxt
        layer = nxt


def _exponent_lattice(p: Presentation) -> LatticeSolver:
    """Columns are relator exponent vectors; a trivial word's exponent vector
    must lie in this lattice (conjugation cannot change exponent sums)."""
    sums = [r.exponent_sums(len(p.generators)) for r in p.relators]
    mat = [[s[i] for s in sums] for i in range(len(p.generators))]
    return LatticeSolver(mat, rows=len(p.generators), cols=len(p.relators))


def dehn_function(
    p: Presentation, n_max: int, limits: WordSearchLimits | None = None
) -> ProfileTable:
    """Dehn function of a presentation, tabulated for n = 0..n_max.

    Enumerates every freely reduced word of length <= n_max.  A word is
    discarded as provably nontrivial when its exponent vector falls outside
    the relator lattice, or when its search exhausts completely; proved
    trivial words contribute their exact filling volume.  Any word left
    undecided within the limits demotes the entries from its length on to
    LowerBound.
    """
    limits = limits or WordSearchLimits()
    if n_max < 0:
        raise InvariantError("n_max must be >= 0")
    abelian = _exponent_lattice(p)
    best = [0] * (n_max + 1)
    undecided_from: int | None = None
    for letters in _reduced_words(len(p.generators), n_max):
        if not letters:
            continue
        w = Word(letters)
        if abelian.solve(w.exponent_sums(len(p.generators))) is None:
            continue  # exponent vector outside the relator lattice: not trivial
        res = filling_volume_word(p, w, limits)
        if res.status == EXACT:
            n = len(letters)
            best[n] = max(best[n], res.value)
        elif res.status == NOT_TRIVIAL and res.search_complete:
            continue
        else:
            n = len(letters)
            if undecided_from is None or n < undecided_from:
                undecided_from = n
    entries = []
    running = 0
    for n in range(n_max + 1):
        running = max(running, best[n])
        exact = undecided_from is None or n < undecided_from
        entries.append(ProfileEntry(running, EXACT if exact else LOWER_BOUND))
    label = p.name or repr(p)
    return ProfileTable(
        entries,
        label=f"dehn:{label}",
        dim=None,
        budget_note=f"max_word_len={limits.max_word_len},max_cost={limits.max_cost}",
    )
