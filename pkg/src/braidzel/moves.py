"""The six surface-preserving rewrite moves and their verified traces.

Each move changes the braiding by composing a fixed word on one side and
compensates in the twist counts, so that the surface is unchanged up to
isotopy.  Bottom moves (M1-M3) pre-compose and relabel the bands through the
permutation of the composed word; top moves (M4-M6) post-compose and leave
band labels alone:

    M1  prepend the descending word;  relabel;  +2 on the band wrapped
        around the bottom disk (position k after relabelling)
    M2  prepend the inverse ascending word;  relabel;  -2 at position k
    M3  prepend the half twist;  relabel (order reversal);  +1 everywhere
    M4  append the descending word;  +2 on the band ending at top position k
    M5  append the inverse ascending word;  -2 on that band
    M6  append the half twist;  +1 everywhere

Inverses are exact algebraic inverses of the forward moves (composition of a
move with its inverse returns the original twists and a braid equal as a
group element).

All twelve preserve the Euler characteristic, orientability, boundary count,
and the multiset of pairwise defects ``t_i + t_j - 2 c(i, j)`` (each defect
is the annulus invariant of a two-band sub-surface, so any isotopy must
preserve the collection).  The randomized move suite pins these facts and
thereby the relabelling conventions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import kernels
from .errors import InternalInvariantError, PreconditionError
from .garside import words_equal
from .surfaces import Braidzel, is_orientable
from .words import BraidWord, compose, concat, named_words, permutation, power


class MoveKind(str, Enum):
    M1 = "M1"
    M2 = "M2"
    M3 = "M3"
    M4 = "M4"
    M5 = "M5"
    M6 = "M6"


_LEFT = {MoveKind.M1, MoveKind.M2, MoveKind.M3}


@dataclass(frozen=True)
class Move:
    """A move kind plus a direction flag."""

    kind: MoveKind
    inverse: bool = False

    def inverted(self) -> Move:
        return Move(self.kind, not self.inverse)

    def __str__(self) -> str:
        return f"{self.kind.value}{'~' if self.inverse else ''}"


ALL_MOVES: tuple[Move, ...] = tuple(
    Move(kind, inv) for kind in MoveKind for inv in (False, True)
)


def _composed_word(kind: MoveKind, k: int) -> BraidWord:
    half, descending, ascending = named_words(k)
    if kind in (MoveKind.M1, MoveKind.M4):
        return descending
    if kind in (MoveKind.M2, MoveKind.M5):
        return ascending.inverse()
    return half


def _adjustment(kind: MoveKind) -> int:
    # twist change on the distinguished band (M3/M6 instead add 1 everywhere)
    return {MoveKind.M1: 2, MoveKind.M2: -2, MoveKind.M4: 2, MoveKind.M5: -2}.get(kind, 0)


def apply_move(bz: Braidzel, m: Move) -> Braidzel:
    """Apply one move; the result is isotopic to the input surface."""
    k = bz.k
    w = _composed_word(m.kind, k)
    add_all = 1 if m.kind in (MoveKind.M3, MoveKind.M6) else 0
    delta = _adjustment(m.kind)

    if m.kind in _LEFT:
        word = w if not m.inverse else w.inverse()
        sigma = permutation(word)
        twists = [bz.twists[sigma(x) - 1] for x in range(1, k + 1)]
        if not m.inverse:
            if delta:
                twists[k - 1] += delta
            if add_all:
                twists = [t + 1 for t in twists]
            braid = compose(word, bz.braid)
        else:
            # undo: the forward adjustment sat at position k (old labels),
            # which the inverse relabelling moves to wherever sigma hits k
            for x in range(1, k + 1):
                if sigma(x) == k:
                    twists[x - 1] -= delta
            if add_all:
                twists = [t - 1 for t in twists]
            braid = compose(word, bz.braid)
        return Braidzel(k, braid, tuple(twists))

    twists = list(bz.twists)
    if not m.inverse:
        if delta:
            star = permutation(bz.braid).inverse()(k)
            twists[star - 1] += delta
        if add_all:
            twists = [t + 1 for t in twists]
        braid = compose(bz.braid, w)
    else:
        if delta:
            # the forward move marked the band ending at top position k of
            # the *pre-move* braid; after composing, that band now ends at
            # the image of k under the composed word
            star = permutation(bz.braid).inverse()(permutation(w)(k))
            twists[star - 1] -= delta
        if add_all:
            twists = [t - 1 for t in twists]
        braid = compose(bz.braid, w.inverse())
    return Braidzel(k, braid, tuple(twists))


def rotate_pretzel(twists) -> tuple[int, ...]:
    """Cyclic rotation (t_1, ..., t_k) -> (t_2, ..., t_k, t_1); an isotopy."""
    t = tuple(twists)
    return t[1:] + t[:1]


def reverse_pretzel(twists) -> tuple[int, ...]:
    """Order reversal of the twist sequence; an isotopy."""
    return tuple(reversed(tuple(twists)))


@dataclass(frozen=True)
class MoveTrace:
    """A replayable sequence of moves with every intermediate surface."""

    start: Braidzel
    steps: tuple[tuple[Move, Braidzel], ...] = ()

    @property
    def final(self) -> Braidzel:
        return self.steps[-1][1] if self.steps else self.start

    def __len__(self) -> int:
        return len(self.steps)


def apply_moves(bz: Braidzel, moves) -> MoveTrace:
    """Apply a sequence of moves, recording each intermediate state."""
    steps = []
    state = bz
    for m in moves:
        state = apply_move(state, m)
        steps.append((m, state))
    return MoveTrace(bz, tuple(steps))


def verify_trace(tr: MoveTrace) -> bool:
    """Recompute every step; braids are compared as group elements, twists
    exactly.  The empty trace verifies."""
    state = tr.start
    for move, claimed in tr.steps:
        recomputed = apply_move(state, move)
        if recomputed.k != claimed.k or recomputed.twists != claimed.twists:
            return False
        if not words_equal(recomputed.braid, claimed.braid):
            return False
        state = claimed
    return True


def nonneg_target_word(k: int, rounds: int) -> BraidWord:
    """(half twist * inverse ascending word)^rounds: the positive braiding
    reached by the normalization procedure."""
    half, _, ascending = named_words(k)
    return power(concat(half, ascending.inverse()), rounds)


# Candidate two-move rounds, tried in a fixed order.  A round must both
# reproduce the target braiding and lower the maximal twist by exactly one
# while keeping all pairwise sums negative; the first candidate that does is
# kept.  (The bottom-side pair in half-twist-first order composes to the
# wrong side of the product and never verifies for k >= 3.)
_ROUND_CANDIDATES: tuple[tuple[Move, Move], ...] = (
    (Move(MoveKind.M3), Move(MoveKind.M2)),
    (Move(MoveKind.M2), Move(MoveKind.M3)),
    (Move(MoveKind.M6), Move(MoveKind.M5)),
    (Move(MoveKind.M5), Move(MoveKind.M6)),
)


def normalize_to_nonnegative(p: Braidzel) -> tuple[Braidzel, MoveTrace]:
    """Trade the single nonnegative twist for positive braiding.

    Input: a trivially braided, orientable surface with all pairwise twist
    sums negative and any nonnegative twist at position 1.  One two-move
    round per unit of the leading twist yields a surface whose braiding is
    the positive word ``nonneg_target_word(k, t_1)`` and whose twists are
    all nonpositive with at most one zero.  The returned trace replays.
    """
    if not p.is_pretzel():
        raise PreconditionError("normalization requires trivial braiding", witness=p.braid)
    if not is_orientable(p):
        raise PreconditionError("normalization requires an orientable surface", witness=p.twists)
    bad = kernels.first_bad_pair(p.twists)
    if bad >= 0:
        i, j = divmod(bad, p.k)
        raise PreconditionError(
            f"pairwise twist sum not negative at bands ({i + 1}, {j + 1})",
            witness=(i + 1, j + 1),
        )
    for pos, t in enumerate(p.twists[1:], start=2):
        if t >= 0:
            raise PreconditionError(
                f"nonnegative twist at position {pos}; rotate it to position 1",
                witness=pos,
            )

    rounds = max(0, p.twists[0])
    if rounds == 0:
        return p, MoveTrace(p)

    t1 = p.twists[0]
    state = p
    steps: list[tuple[Move, Braidzel]] = []
    for r in range(1, rounds + 1):
        target = nonneg_target_word(p.k, r)
        for first, second in _ROUND_CANDIDATES:
            mid = apply_move(state, first)
            end = apply_move(mid, second)
            on_track = (
                max(end.twists) == t1 - r
                and kernels.first_bad_pair(end.twists) < 0
                and words_equal(end.braid, target)
            )
            if on_track:
                steps.append((first, mid))
                steps.append((second, end))
                state = end
                break
        else:
            raise InternalInvariantError(
                f"no move round reproduces the target braiding at round {r} "
                f"from {state}"
            )
    return state, MoveTrace(p, tuple(steps))
