"""Quasipositivity decisions with mandatory witnesses.

For trivially braided surfaces the decision is exact: an orientable pretzel
surface is quasipositive iff every pairwise twist sum is negative.  For two
bands it is exact as well: quasipositive iff t_1 + t_2 < 2m where m is the
signed crossing count of the braiding.  In general only one-sided tests are
available:

* necessary: every pair must satisfy t_i + t_j < 2 c(i, j); the first
  violating pair is a certificate of non-quasipositivity;
* sufficient: nonnegative braiding together with nearly negative twisting
  (all twists <= 0, at most one zero) certifies quasipositivity.

``decide`` combines the exact cases, the obstruction, the sufficient test,
and a bounded search through the rewrite moves; anything else is reported
as Unknown rather than guessed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels
from .errors import PreconditionError
from .garside import is_nonnegative, normal_form, words_equal
from .moves import ALL_MOVES, MoveTrace, apply_move, verify_trace
from .surfaces import Braidzel, is_orientable, sub_braidzel
from .words import crossing_count, crossing_matrix, free_reduce

DEPTH_CAP = 8
NODE_BUDGET = 20_000


class QPStatus(str, Enum):
    QUASIPOSITIVE_EXACT = "QuasipositiveExact"
    QUASIPOSITIVE = "Quasipositive"
    NOT_QUASIPOSITIVE = "NotQuasipositive"
    UNKNOWN = "Unknown"

    @property
    def is_quasipositive(self) -> bool:
        return self in (QPStatus.QUASIPOSITIVE_EXACT, QPStatus.QUASIPOSITIVE)


@dataclass(frozen=True)
class Obstruction:
    """A band pair violating the necessary condition: twist_sum >= crossing_double."""

    i: int
    j: int
    twist_sum: int
    crossing_double: int


@dataclass(frozen=True)
class PairwiseEvidence:
    """Exact pretzel criterion: the worst pairwise sum is still negative."""

    worst_pair: tuple[int, int]
    worst_sum: int


@dataclass(frozen=True)
class AnnularEvidence:
    """Two-band criterion: twist_sum < crossing_double."""

    twist_sum: int
    crossing_double: int


@dataclass(frozen=True)
class SufficiencyEvidence:
    """Nonnegative braiding (infimum of the normal form) + nearly negative twists."""

    infimum: int


@dataclass(frozen=True)
class TraceEvidence:
    """A replayable move trace ending in a state meeting the sufficient test."""

    trace: MoveTrace
    final: SufficiencyEvidence


@dataclass(frozen=True)
class QPVerdict:
    status: QPStatus
    obstruction: Obstruction | None = None
    certificate: PairwiseEvidence | AnnularEvidence | SufficiencyEvidence | TraceEvidence | None = None


def is_nearly_negative(twists) -> bool:
    """All twists <= 0 and at most one equal to zero."""
    zeros = 0
    for t in twists:
        if t > 0:
            return False
        if t == 0:
            zeros += 1
    return zeros <= 1


def _require_orientable_twists(twists) -> None:
    if len({t & 1 for t in twists}) > 1:
        raise PreconditionError(
            "mixed twist parities give a non-orientable surface", witness=tuple(twists)
        )


def pretzel_qp(twists) -> QPVerdict:
    """Exact decision for trivially braided orientable surfaces.

    Quasipositive iff every pairwise twist sum is negative.  With a single
    band there are no pairs and the criterion says nothing; that case is
    reported Unknown rather than extrapolated.
    """
    twists = tuple(twists)
    _require_orientable_twists(twists)
    k = len(twists)
    if k == 1:
        return QPVerdict(QPStatus.UNKNOWN)
    bad = kernels.first_bad_pair(twists)
    if bad >= 0:
        i, j = divmod(bad, k)
        return QPVerdict(
            QPStatus.NOT_QUASIPOSITIVE,
            obstruction=Obstruction(i + 1, j + 1, twists[i] + twists[j], 0),
        )
    order = sorted(range(k), key=lambda idx: (-twists[idx], idx))
    a, b = sorted((order[0] + 1, order[1] + 1))
    return QPVerdict(
        QPStatus.QUASIPOSITIVE_EXACT,
        certificate=PairwiseEvidence((a, b), twists[a - 1] + twists[b - 1]),
    )


def pretzel_qp_status_batch(rows: np.ndarray) -> np.ndarray:
    """Vectorised pretzel criterion: per row, 1 iff quasipositive (exact).

    Runs the same per-row routine that backs :func:`pretzel_qp`; rows are
    twist vectors of a fixed length >= 2 (parity/orientability is the
    caller's concern).
    """
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    if rows.ndim != 2 or rows.shape[1] < 2:
        raise ValueError("expected a 2-D array of twist rows with k >= 2")
    return kernels.qp_all_negative_batch(rows)


def annular_qp(bz: Braidzel) -> QPVerdict:
    """Exact decision for two-band surfaces: t_1 + t_2 < 2m."""
    if bz.k != 2:
        raise PreconditionError("two-band criterion needs exactly 2 bands", witness=bz.k)
    m = crossing_count(1, 2, bz.braid)
    s = bz.twists[0] + bz.twists[1]
    if s < 2 * m:
        return QPVerdict(
            QPStatus.QUASIPOSITIVE_EXACT, certificate=AnnularEvidence(s, 2 * m)
        )
    return QPVerdict(
        QPStatus.NOT_QUASIPOSITIVE, obstruction=Obstruction(1, 2, s, 2 * m)
    )


def necessary_condition(bz: Braidzel) -> Obstruction | None:
    """First band pair (lexicographic) with t_i + t_j >= 2 c(i, j), if any.

    Any such pair certifies that the surface is not quasipositive (its
    two-band sub-surface already is not).
    """
    if not is_orientable(bz):
        raise PreconditionError(
            "necessary condition applies to orientable surfaces", witness=bz.twists
        )
    counts = crossing_matrix(bz.braid)
    t = bz.twists
    for i in range(bz.k):
        for j in range(i + 1, bz.k):
            if t[i] + t[j] >= 2 * counts[i][j]:
                return Obstruction(i + 1, j + 1, t[i] + t[j], 2 * counts[i][j])
    return None


def sufficient_condition(bz: Braidzel) -> bool:
    """Nonnegative braiding and nearly negative twisting certify quasipositivity."""
    return is_nearly_negative(bz.twists) and is_nonnegative(bz.braid)


def default_search_depth(bz: Braidzel) -> int:
    """Two moves per unit of the largest positive twist, plus slack, capped."""
    return min(2 * max(0, max(bz.twists)) + 2, DEPTH_CAP)


def search_certificate(
    bz: Braidzel, depth: int, node_budget: int = NODE_BUDGET
) -> MoveTrace | None:
    """Breadth-first search through the rewrite moves for a state meeting the
    sufficient test.  Deterministic (fixed move order); braids are kept
    freely reduced along the way, which changes nothing up to words_equal.
    """

    def reduced(state: Braidzel) -> Braidzel:
        return Braidzel(state.k, free_reduce(state.braid), state.twists)

    start = reduced(bz)
    seen = {(start.braid.letters, start.twists)}
    queue: deque[tuple[Braidzel, tuple, int]] = deque([(start, (), 0)])
    nodes = 0
    while queue:
        state, path, dist = queue.popleft()
        if dist >= depth:
            continue
        for move in ALL_MOVES:
            child = reduced(apply_move(state, move))
            key = (child.braid.letters, child.twists)
            if key in seen:
                continue
            seen.add(key)
            nodes += 1
            if nodes > node_budget:
                return None
            new_path = path + ((move, child),)
            if sufficient_condition(child):
                return MoveTrace(bz, new_path)
            queue.append((child, new_path, dist + 1))
    return None


def decide(bz: Braidzel, search_depth: int | None = None) -> QPVerdict:
    """Combined decision.

    Exact for trivially braided surfaces and for two bands.  Otherwise: a
    violated pair condition refutes; the sufficient test (on the input or on
    anything reachable within ``search_depth`` moves) certifies; everything
    else is Unknown.
    """
    if not is_orientable(bz):
        raise PreconditionError(
            "quasipositivity applies to orientable surfaces", witness=bz.twists
        )
    if free_reduce(bz.braid).letters == ():
        return pretzel_qp(bz.twists)
    if bz.k == 2:
        return annular_qp(bz)

    obstruction = necessary_condition(bz)
    if obstruction is not None:
        return QPVerdict(QPStatus.NOT_QUASIPOSITIVE, obstruction=obstruction)
    if sufficient_condition(bz):
        return QPVerdict(
            QPStatus.QUASIPOSITIVE,
            certificate=SufficiencyEvidence(normal_form(bz.braid).power),
        )
    depth = default_search_depth(bz) if search_depth is None else search_depth
    if depth > 0:
        trace = search_certificate(bz, depth)
        if trace is not None:
            return QPVerdict(
                QPStatus.QUASIPOSITIVE,
                certificate=TraceEvidence(
                    trace, SufficiencyEvidence(normal_form(trace.final.braid).power)
                ),
            )
    return QPVerdict(QPStatus.UNKNOWN)


def verify_verdict(bz: Braidzel, verdict: QPVerdict) -> bool:
    """Recompute a verdict's witness from scratch."""
    if verdict.status is QPStatus.NOT_QUASIPOSITIVE:
        ob = verdict.obstruction
        if ob is None:
            return False
        actual = crossing_count(ob.i, ob.j, bz.braid)
        s = bz.twists[ob.i - 1] + bz.twists[ob.j - 1]
        return s == ob.twist_sum and 2 * actual == ob.crossing_double and s >= 2 * actual
    cert = verdict.certificate
    if isinstance(cert, PairwiseEvidence):
        return (
            kernels.first_bad_pair(bz.twists) < 0
            and bz.twists[cert.worst_pair[0] - 1] + bz.twists[cert.worst_pair[1] - 1]
            == cert.worst_sum
            < 0
        )
    if isinstance(cert, AnnularEvidence):
        return (
            bz.twists[0] + bz.twists[1] == cert.twist_sum
            and 2 * crossing_count(1, 2, bz.braid) == cert.crossing_double
            and cert.twist_sum < cert.crossing_double
        )
    if isinstance(cert, SufficiencyEvidence):
        return (
            sufficient_condition(bz) and normal_form(bz.braid).power == cert.infimum >= 0
        )
    if isinstance(cert, TraceEvidence):
        tr = cert.trace
        if tr.start.twists != bz.twists or not words_equal(tr.start.braid, bz.braid):
            return False
        return verify_trace(tr) and sufficient_condition(tr.final)
    return verdict.status is QPStatus.UNKNOWN and verdict.obstruction is None


def subset_is_quasipositive(bz: Braidzel, subset, search_depth: int = 2) -> bool:
    """Whether the sub-surface on ``subset`` is certified quasipositive."""
    verdict = decide(sub_braidzel(bz, subset), search_depth=search_depth)
    return verdict.status.is_quasipositive
