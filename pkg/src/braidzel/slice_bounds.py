"""Upper bounds on the slice Euler characteristic and slice-genus consequences.

For the boundary link of a quasipositive surface, the slice Euler
characteristic equals the surface's own Euler characteristic; more generally
any quasipositive sub-surface Q of a surface S gives

    chi_s(boundary of S) <= 2 chi(Q) - chi(S) = 2 - 2 card(Q) + k

so maximising the number of bands in a certified-quasipositive sub-surface
minimises the bound.  For pretzel surfaces the optimum has a closed form
(all negatively twisted bands plus at most one compatible nonnegative band),
cross-checked against exhaustive subset search in the tests.

A second closed formula bounds chi_s by counting twist signs; it is computed
and reported alongside but never asserted equal to the subset bound (the two
disagree by epsilon on some inputs, and the census flags those rows).
Mirroring the surface negates and reverses the twists while preserving
chi_s of the boundary, so every bound is also applied to the mirror and the
minimum kept.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import qp
from .errors import InternalInvariantError, PreconditionError
from .surfaces import (
    Braidzel,
    boundary_components,
    euler_characteristic,
    is_orientable,
    mirror_pretzel,
    pretzel,
)


def chi_s_exact(bz: Braidzel, search_depth: int | None = None) -> int | None:
    """chi_s of the boundary when the surface is certified quasipositive.

    Equals the surface Euler characteristic 2 - k in that case; None when
    quasipositivity is refuted or unknown (or the surface is nonorientable,
    which rules quasipositivity out).
    """
    if not is_orientable(bz):
        return None
    verdict = qp.decide(bz, search_depth=search_depth)
    if verdict.status.is_quasipositive:
        return euler_characteristic(bz)
    return None


def _pretzel_optimal_subset(twists: tuple[int, ...]) -> tuple[int, ...] | None:
    """Largest band subset whose sub-pretzel has all pairwise sums negative.

    All negative bands always qualify together; at most one nonnegative band
    can join, and it must clear the largest negative twist.  Among eligible
    nonnegative bands the smallest twist value (then smallest index) is
    taken.  Returns None when no subset of size >= 2 qualifies.
    """
    negs = [i for i, t in enumerate(twists) if t < 0]
    if not negs:
        return None
    max_neg = max(twists[i] for i in negs)
    eligible = [
        i for i, t in enumerate(twists) if t >= 0 and t + max_neg < 0
    ]
    chosen = list(negs)
    if eligible:
        chosen.append(min(eligible, key=lambda i: (twists[i], i)))
    if len(chosen) < 2:
        return None
    return tuple(sorted(i + 1 for i in chosen))


def chi_s_subset_bound(
    bz: Braidzel, search_depth: int = 2, exhaustive: bool = False
) -> tuple[int | None, tuple[int, ...] | None]:
    """Best bound 2 - 2 card(X) + k over certified-quasipositive sub-surfaces.

    Returns (bound, witness bands), or (None, None) when no sub-surface of
    two or more bands is certified (single bands prove nothing).  Pretzels
    use the closed-form optimum unless ``exhaustive`` forces the search.
    """
    if not is_orientable(bz):
        raise PreconditionError(
            "subset bound applies to orientable surfaces", witness=bz.twists
        )
    k = bz.k
    if bz.is_pretzel() and not exhaustive:
        subset = _pretzel_optimal_subset(bz.twists)
        if subset is None:
            return None, None
        return 2 - 2 * len(subset) + k, subset
    for size in range(k, 1, -1):
        for subset in combinations(range(1, k + 1), size):
            if qp.subset_is_quasipositive(bz, subset, search_depth=search_depth):
                return 2 - 2 * size + k, subset
    return None, None


def chi_s_sign_bound(twists) -> tuple[int, int]:
    """The sign-count bound: 2 + card{t >= 0} - card{t < 0} - epsilon.

    epsilon is 1 when both sign classes are present and the smallest
    nonnegative twist clears the largest negative one, else 0 (also for the
    one-sided cases, where the min/max are undefined).
    """
    twists = tuple(twists)
    if len({t & 1 for t in twists}) > 1:
        raise PreconditionError(
            "sign-count bound applies to orientable surfaces", witness=twists
        )
    nonneg = [t for t in twists if t >= 0]
    neg = [t for t in twists if t < 0]
    eps = 1 if nonneg and neg and min(nonneg) + max(neg) < 0 else 0
    return 2 + len(nonneg) - len(neg) - eps, eps


def _one_sided_bound(twists: tuple[int, ...]) -> int | None:
    """chi_s_exact if quasipositive, else the subset bound, for one pretzel."""
    p = pretzel(*twists)
    exact = chi_s_exact(p)
    if exact is not None:
        return exact
    bound, _ = chi_s_subset_bound(p)
    return bound


def chi_s_combined(twists) -> int | None:
    """Minimum of the direct bound and the bound for the mirror image.

    chi_s is mirror-invariant, so both apply to the same boundary link.
    None when neither side produces a certified sub-surface.
    """
    twists = tuple(twists)
    if len({t & 1 for t in twists}) > 1:
        raise PreconditionError(
            "combined bound applies to orientable surfaces", witness=twists
        )
    sides = [
        _one_sided_bound(twists),
        _one_sided_bound(mirror_pretzel(twists).twists),
    ]
    present = [b for b in sides if b is not None]
    return min(present) if present else None


@dataclass(frozen=True)
class SliceReport:
    """All bounds for one pretzel surface's boundary, plus knot consequences."""

    twists: tuple[int, ...]
    chi_surface: int
    chi_s_exact: int | None
    chi_s_subset_bound: int | None
    subset_witness: tuple[int, ...] | None
    chi_s_sign_bound: int
    sign_epsilon: int
    chi_s_combined: int | None
    is_knot: bool
    gs_lower: int | None
    not_slice: bool


def slice_report(twists) -> SliceReport:
    """Assemble every bound for an orientable pretzel surface.

    The boundary is a knot iff it has one component; then the slice genus is
    bounded below by (1 - chi_s) / 2 using the best combined bound, and a
    positive lower bound certifies non-sliceness.  Knot bounds are always
    odd, so the genus bound is asserted integral.
    """
    twists = tuple(int(t) for t in twists)
    p = pretzel(*twists)
    if not is_orientable(p):
        raise PreconditionError(
            "slice report applies to orientable surfaces", witness=twists
        )
    exact = chi_s_exact(p)
    subset_bound, witness = chi_s_subset_bound(p)
    sign_bound, eps = chi_s_sign_bound(twists)
    combined = chi_s_combined(twists)
    knot = boundary_components(p) == 1
    gs_lower: int | None = None
    if knot and combined is not None:
        gs = Fraction(1 - combined, 2)
        if gs.denominator != 1:
            raise InternalInvariantError(
                f"knot chi_s bound {combined} is even for twists {twists}"
            )
        gs_lower = int(gs)
    return SliceReport(
        twists=twists,
        chi_surface=euler_characteristic(p),
        chi_s_exact=exact,
        chi_s_subset_bound=subset_bound,
        subset_witness=witness,
        chi_s_sign_bound=sign_bound,
        sign_epsilon=eps,
        chi_s_combined=combined,
        is_knot=knot,
        gs_lower=gs_lower,
        not_slice=gs_lower is not None and gs_lower >= 1,
    )
