"""Left-greedy Garside normal forms and the braid word problem.

Every braid has a unique factorisation ``D^p f_1 ... f_r`` where ``D`` is the
positive half twist, each ``f_i`` is a permutation braid (a positive braid in
which any two strands cross at most once, identified with its permutation),
no ``f_i`` is trivial or the full half twist, and consecutive factors are
left-weighted.  Comparing these forms solves the word problem; the power
``p`` (the infimum) decides whether a braid is expressible with no negative
exponents.

Permutations here are raw 0-based tuples ``p`` with ``p[i]`` the image of
position ``i``, composed left to right: ``(x * y)[i] = y[x[i]]``, matching
the left-to-right reading of braid words.  For a permutation braid ``x``:

* ``i`` can be the first crossing iff ``x[i] > x[i+1]`` (the strands
  starting at ``i`` and ``i+1`` cross);
* ``i`` can be the last crossing iff ``x^-1[i] > x^-1[i+1]`` (the strands
  ending at ``i`` and ``i+1`` cross).

The pair ``(x, y)`` is left-weighted when every possible first crossing of
``y`` is also a possible last crossing of ``x``; local transfers establish
this without changing the product.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import words as W
from .words import BraidWord

Perm = tuple[int, ...]


def _identity(k: int) -> Perm:
    return tuple(range(k))


def _reversal(k: int) -> Perm:
    return tuple(range(k - 1, -1, -1))


def _invert(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def _mul(x: Perm, y: Perm) -> Perm:
    """x first, then y."""
    return tuple(y[v] for v in x)


def _tau(p: Perm) -> Perm:
    """Conjugation by the half twist: reverse positions and values."""
    k = len(p)
    return tuple(k - 1 - p[k - 1 - i] for i in range(k))


@functools.lru_cache(maxsize=1 << 18)
def _renorm(x: Perm, y: Perm) -> tuple[Perm, Perm]:
    """Make the adjacent pair left-weighted by transferring initial crossings
    of ``y`` onto the end of ``x``.  The product is unchanged."""
    k = len(x)
    xl = list(x)
    yl = list(y)
    xinv = list(_invert(x))
    while True:
        moved = False
        for i in range(k - 1):
            if yl[i] > yl[i + 1] and xinv[i] < xinv[i + 1]:
                # append crossing i to x: swap the values i, i+1 in x
                a, b = xinv[i], xinv[i + 1]
                xl[a], xl[b] = i + 1, i
                xinv[i], xinv[i + 1] = b, a
                # strip crossing i from the front of y: swap entries i, i+1
                yl[i], yl[i + 1] = yl[i + 1], yl[i]
                moved = True
                break
        if not moved:
            return tuple(xl), tuple(yl)


def _normalize_factors(k: int, factors: list[Perm]) -> tuple[int, tuple[Perm, ...]]:
    """Slide a list of permutation braids into left-greedy order.

    Returns the power of the half twist stripped from the front together
    with the remaining factors.  Identity factors drift to the back and are
    dropped; full half twists drift to the front.
    """
    ident = _identity(k)
    w0 = _reversal(k)
    fs = [p for p in factors if p != ident]
    changed = True
    while changed:
        changed = False
        for i in range(len(fs) - 1):
            a, b = _renorm(fs[i], fs[i + 1])
            if a != fs[i]:
                fs[i], fs[i + 1] = a, b
                changed = True
        while fs and fs[-1] == ident:
            fs.pop()
    power = 0
    while fs and fs[0] == w0:
        fs.pop(0)
        power += 1
    return power, tuple(fs)


@dataclass(frozen=True)
class NormalForm:
    """Canonical form ``D^power f_1 ... f_r`` of a braid.

    ``factors`` holds the permutation braids as 1-based one-line images of
    start positions.  Two words represent the same braid iff their normal
    forms compare equal.
    """

    strands: int
    power: int
    factors: tuple[tuple[int, ...], ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def infimum(self) -> int:
        return self.power

    @property
    def supremum(self) -> int:
        return self.power + len(self.factors)


@functools.lru_cache(maxsize=1 << 15)
def _normal_form_letters(k: int, letters: tuple[int, ...]) -> tuple[int, tuple[Perm, ...]]:
    ident = _identity(k)
    w0 = _reversal(k)
    # One factor per letter.  A negative generator is a half-twist inverse
    # times its complement: s_i^-1 = D^-1 * (w0 then s_i); the inserted
    # powers are combed to the front afterwards through the conjugation tau.
    factors: list[Perm] = []
    powers: list[int] = []
    for x in letters:
        i = abs(x) - 1
        gen = list(ident)
        gen[i], gen[i + 1] = gen[i + 1], gen[i]
        if x > 0:
            factors.append(tuple(gen))
            powers.append(0)
        else:
            comp = tuple(gen[v] for v in w0)  # w0 first, then the swap
            factors.append(comp)
            powers.append(-1)
    carried = 0
    for idx in range(len(factors) - 1, -1, -1):
        if carried % 2:
            factors[idx] = _tau(factors[idx])
        carried += powers[idx]
    power, normalized = _normalize_factors(k, factors)
    return carried + power, normalized


def normal_form(w: BraidWord) -> NormalForm:
    """Left-greedy Garside normal form of a word."""
    power, factors = _normal_form_letters(w.strands, w.letters)
    public = tuple(tuple(v + 1 for v in f) for f in factors)
    return NormalForm(w.strands, power, public)


def words_equal(u: BraidWord, v: BraidWord) -> bool:
    """Whether two words represent the same braid."""
    if u.strands != v.strands:
        raise ValueError(
            f"cannot compare words on {u.strands} and {v.strands} strands"
        )
    ur, vr = W.free_reduce(u), W.free_reduce(v)
    if ur.letters == vr.letters:
        return True
    if W.exponent_sum(ur) != W.exponent_sum(vr):
        return False
    if W.permutation(ur) != W.permutation(vr):
        return False
    return normal_form(ur) == normal_form(vr)


def is_nonnegative(w: BraidWord) -> bool:
    """Whether ``w`` equals some word with no negative exponents.

    Decided by the infimum of the normal form; literally positive words
    short-circuit.
    """
    reduced = W.free_reduce(w)
    if all(x > 0 for x in reduced.letters):
        return True
    if W.exponent_sum(reduced) < 0:
        return False
    return normal_form(reduced).power >= 0
