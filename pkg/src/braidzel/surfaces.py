"""Band surfaces: two disks joined by k twisted bands that follow a braid.

A surface is specified by its braiding (a word on k strands) and its
twisting (one half-twist count per band, counterclockwise positive).  The
trivially braided case is the classical pretzel surface P(t_1, ..., t_k).
Bands are indexed by their attachment position on the bottom disk.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import InternalInvariantError
from .words import BraidWord, crossing_count, identity_word, permutation, restrict


@dataclass(frozen=True)
class Braidzel:
    """A braided band surface: strand count, braiding word, twist counts."""

    k: int
    braid: BraidWord
    twists: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.twists, tuple):
            object.__setattr__(self, "twists", tuple(self.twists))
        if self.braid.strands != self.k or len(self.twists) != self.k:
            raise ValueError(
                f"inconsistent surface: k={self.k}, braid on {self.braid.strands} "
                f"strands, {len(self.twists)} twists"
            )

    def is_pretzel(self) -> bool:
        """Trivial braiding (as a literal word)."""
        return not self.braid.letters


def pretzel(*twists: int) -> Braidzel:
    """The pretzel surface P(t_1, ..., t_k)."""
    if len(twists) == 1 and isinstance(twists[0], (tuple, list)):
        twists = tuple(twists[0])
    if not twists:
        raise ValueError("a pretzel needs at least one band")
    k = len(twists)
    return Braidzel(k, identity_word(k), tuple(int(t) for t in twists))


def mirror_pretzel(twists) -> Braidzel:
    """The mirror image P(-t_k, ..., -t_1) of P(t_1, ..., t_k)."""
    return pretzel(tuple(-t for t in reversed(tuple(twists))))


def is_orientable(bz: Braidzel) -> bool:
    """All twist counts share one parity (every pairwise sum is even).

    A single band between two disks is always orientable, whatever its
    twisting: it cannot close up into a Moebius band.
    """
    parities = {t & 1 for t in bz.twists}
    return len(parities) <= 1


def euler_characteristic(bz: Braidzel) -> int:
    """Two 0-handles and k 1-handles: always 2 - k."""
    return 2 - bz.k


def boundary_components(bz: Braidzel) -> int:
    """Number of boundary circles, by tracing band edges through the surface.

    A band's two edges travel to the top attachment given by the braid's
    permutation; they swap exactly when the twist count is odd (crossings
    between bands never exchange a single band's edges).  Disk arcs connect
    neighbouring attachments cyclically on both disks.
    """
    images = permutation(bz.braid).images
    odd = tuple(t & 1 for t in bz.twists)
    return kernels.boundary_cycles(images, odd)


@dataclass(frozen=True)
class SurfaceProfile:
    """Euler characteristic, orientability, boundary count, genus.

    ``genus`` is None for non-orientable surfaces.
    """

    euler: int
    orientable: bool
    boundary_components: int
    genus: int | None


def profile(bz: Braidzel) -> SurfaceProfile:
    euler = euler_characteristic(bz)
    orientable = is_orientable(bz)
    boundary = boundary_components(bz)
    genus: int | None = None
    if orientable:
        twice = 2 - euler - boundary
        if twice < 0 or twice % 2:
            raise InternalInvariantError(
                f"inconsistent surface invariants: euler={euler}, boundary={boundary}"
            )
        genus = twice // 2
    return SurfaceProfile(euler, orientable, boundary, genus)


def sub_braidzel(bz: Braidzel, subset) -> Braidzel:
    """The sub-surface spanned by the selected bands.

    The braiding restricts to the chosen strands; pairwise crossing counts
    among surviving bands are unchanged.
    """
    chosen = sorted(set(subset))
    if not chosen:
        raise ValueError("cannot take a sub-surface on an empty band set")
    if not all(1 <= s <= bz.k for s in chosen):
        raise ValueError(f"band subset {chosen} out of range 1..{bz.k}")
    braid = restrict(bz.braid, set(chosen))
    twists = tuple(bz.twists[s - 1] for s in chosen)
    return Braidzel(len(chosen), braid, twists)


def pair_crossings(bz: Braidzel, i: int, j: int) -> int:
    """Crossing count between bands i and j; the two-band sub-surface is
    the annulus or Moebius band with braiding s_1 to this power."""
    return crossing_count(i, j, bz.braid)
