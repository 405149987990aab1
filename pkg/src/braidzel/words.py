"""Braid words and the combinatorics that lives on them.

A braid on k strands is represented as an explicit word in the Artin
generators: a tuple of nonzero integers, where ``i`` encodes the positive
generator crossing strand ``i`` over strand ``i+1`` and ``-i`` its inverse.
Words are never normalised implicitly; reduction and the word problem are
separate operations (see :mod:`braidzel.garside`).

Strand positions are 1-based throughout, matching the usual indexing of
generators.  The permutation of a word maps each strand's *start* position
to its *end* position.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators of the braid group on ``strands`` strands.

    ``letters[n] == i`` means the n-th letter is the positive generator
    swapping positions ``i`` and ``i+1``; a negative value is the inverse
    generator.  The empty word is the identity.
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if x == 0 or not 1 <= abs(x) <= self.strands - 1:
                raise ValueError(
                    f"letter {x} out of range for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> BraidWord:
        """The literal inverse word (letters reversed and negated)."""
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def __repr__(self) -> str:
        body = " ".join(str(x) for x in self.letters) or "e"
        return f"BraidWord({self.strands}; {body})"


def identity_word(strands: int) -> BraidWord:
    return BraidWord(strands)


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    """Concatenate two words on the same number of strands."""
    if u.strands != v.strands:
        raise ValueError(
            f"cannot compose words on {u.strands} and {v.strands} strands"
        )
    return BraidWord(u.strands, u.letters + v.letters)


def concat(*ws: BraidWord) -> BraidWord:
    """Concatenate any number of words on the same number of strands."""
    out = ws[0]
    for w in ws[1:]:
        out = compose(out, w)
    return out


def power(w: BraidWord, n: int) -> BraidWord:
    """The literal n-th power (inverse word repeated for n < 0)."""
    base = w if n >= 0 else w.inverse()
    return BraidWord(w.strands, base.letters * abs(n))


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain.

    The result represents the same group element; it is not a canonical
    form (use the Garside normal form for that).
    """
    stack: list[int] = []
    for x in w.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return BraidWord(w.strands, tuple(stack))


def half_twist_word(k: int) -> BraidWord:
    """The positive half twist on k strands: (s_{k-1})(s_{k-2}s_{k-1})...(s_1...s_{k-1})."""
    if k < 1:
        raise ValueError("strand count must be >= 1")
    letters = []
    for start in range(k - 1, 0, -1):
        letters.extend(range(start, k))
    return BraidWord(k, tuple(letters))


def descending_word(k: int) -> BraidWord:
    """The descending generator product s_{k-1} s_{k-2} ... s_1."""
    if k < 1:
        raise ValueError("strand count must be >= 1")
    return BraidWord(k, tuple(range(k - 1, 0, -1)))


def ascending_word(k: int) -> BraidWord:
    """The ascending generator product s_1 s_2 ... s_{k-1}."""
    if k < 1:
        raise ValueError("strand count must be >= 1")
    return BraidWord(k, tuple(range(1, k)))


def named_words(k: int) -> tuple[BraidWord, BraidWord, BraidWord]:
    """The half twist, descending, and ascending words on k strands.

    The ascending word equals the descending word conjugated by the half
    twist; ``words_equal`` in the Garside module verifies this identity.
    """
    return half_twist_word(k), descending_word(k), ascending_word(k)


@dataclass(frozen=True)
class StrandPermutation:
    """A bijection of {1, ..., k} sending start positions to end positions.

    ``images[i-1]`` is the end position of the strand starting at ``i``.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @property
    def k(self) -> int:
        return len(self.images)

    def __call__(self, position: int) -> int:
        return self.images[position - 1]

    def inverse(self) -> StrandPermutation:
        inv = [0] * self.k
        for start, end in enumerate(self.images, start=1):
            inv[end - 1] = start
        return StrandPermutation(tuple(inv))

    def after(self, other: StrandPermutation) -> StrandPermutation:
        """The permutation 'other first, then self' (matches word concatenation)."""
        return StrandPermutation(tuple(self.images[e - 1] for e in other.images))

    def is_identity(self) -> bool:
        return all(e == s for s, e in enumerate(self.images, start=1))

    @staticmethod
    def identity(k: int) -> StrandPermutation:
        return StrandPermutation(tuple(range(1, k + 1)))


def permutation(w: BraidWord) -> StrandPermutation:
    """Trace every strand through the word; each letter swaps two positions."""
    k = w.strands
    occupant = list(range(k))  # occupant[p] = strand currently at position p+1
    for x in w.letters:
        i = abs(x) - 1
        occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]
    images = [0] * k
    for pos, strand in enumerate(occupant):
        images[strand] = pos + 1
    return StrandPermutation(tuple(images))


def exponent_sum(w: BraidWord) -> int:
    """Sum of letter signs; a group invariant."""
    return sum(1 if x > 0 else -1 for x in w.letters)


def crossing_count(i: int, j: int, w: BraidWord) -> int:
    """Signed number of crossings between the strands starting at i and j.

    Counts +1 for each positive letter exchanging exactly those two strands
    and -1 for each negative one.  Equals the exponent sum of the two-strand
    restriction.
    """
    k = w.strands
    if not (1 <= i < j <= k):
        raise ValueError(f"need 1 <= i < j <= {k}, got ({i}, {j})")
    pos_i, pos_j = i, j
    count = 0
    for x in w.letters:
        a = abs(x)
        low, high = (pos_i, pos_j) if pos_i < pos_j else (pos_j, pos_i)
        if low == a and high == a + 1:
            count += 1 if x > 0 else -1
        if pos_i == a:
            pos_i = a + 1
        elif pos_i == a + 1:
            pos_i = a
        if pos_j == a:
            pos_j = a + 1
        elif pos_j == a + 1:
            pos_j = a
    return count


def crossing_matrix(w: BraidWord) -> list[list[int]]:
    """All pairwise crossing counts in one strand trace.

    Returns a symmetric k x k matrix (0-indexed) with entry [i-1][j-1] equal
    to ``crossing_count(i, j, w)``.
    """
    k = w.strands
    counts = [[0] * k for _ in range(k)]
    occupant = list(range(k))
    for x in w.letters:
        a = abs(x) - 1
        s, t = occupant[a], occupant[a + 1]
        delta = 1 if x > 0 else -1
        counts[s][t] += delta
        counts[t][s] += delta
        occupant[a], occupant[a + 1] = t, s
    return counts


def restrict(w: BraidWord, subset: frozenset[int] | set[int]) -> BraidWord:
    """The word induced on the strands starting in ``subset``.

    Letters exchanging two tracked strands survive (renumbered to the rank
    of the lower strand among tracked positions); all other letters are
    dropped.
    """
    k = w.strands
    if not subset:
        raise ValueError("cannot restrict to an empty strand set")
    if not all(1 <= s <= k for s in subset):
        raise ValueError(f"subset {sorted(subset)} out of range 1..{k}")
    tracked = [pos - 1 for pos in sorted(subset)]
    is_tracked = [False] * k
    for p in tracked:
        is_tracked[p] = True
    letters: list[int] = []
    for x in w.letters:
        a = abs(x) - 1
        both = is_tracked[a] and is_tracked[a + 1]
        if both:
            # rank of position a among tracked positions, 1-based
            rank = sum(1 for p in range(a) if is_tracked[p]) + 1
            letters.append(rank if x > 0 else -rank)
        if is_tracked[a] != is_tracked[a + 1]:
            is_tracked[a], is_tracked[a + 1] = is_tracked[a + 1], is_tracked[a]
    return BraidWord(len(tracked), tuple(letters))


def random_word(rng, strands: int, length: int, positive: bool = False) -> BraidWord:
    """A uniformly random word; handy for randomized suites."""
    if strands < 2 or length == 0:
        return BraidWord(strands)
    letters = []
    for _ in range(length):
        i = rng.randint(1, strands - 1)
        if not positive and rng.random() < 0.5:
            i = -i
        letters.append(i)
    return BraidWord(strands, tuple(letters))
