"""Classical linking-form invariants for odd-twisted pretzel surfaces.

For an orientable pretzel surface with every twist count odd, the k-1 loops
running through consecutive band pairs form a basis of first homology, and
the Seifert pairing is the tridiagonal integer matrix

    V[i][i]   = (t_i + t_{i+1}) / 2
    V[i][i+1] = (t_{i+1} + 1) / 2
    V[i+1][i] = (t_{i+1} - 1) / 2

with the sign convention pinned by P(-1,-1,-1): its symmetrised form has
determinant 3 and signature -2 (the right-handed trefoil).  Everything here
is exact integer/rational arithmetic; no floating point.

This module is an oracle deliberately independent of the quasipositivity
machinery: the signature bound |sigma|/2 <= g_s cross-checks the slice-genus
conclusions drawn elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .surfaces import Braidzel


@dataclass(frozen=True)
class SeifertMatrix:
    """An n x n integer Seifert pairing, n = k - 1 (empty for one band)."""

    size: int
    rows: tuple[tuple[int, ...], ...]

    def symmetrized(self) -> list[list[int]]:
        """V + V^T, the intersection-form representative."""
        n = self.size
        return [
            [self.rows[i][j] + self.rows[j][i] for j in range(n)] for i in range(n)
        ]


def seifert_matrix(p: Braidzel) -> SeifertMatrix:
    """Seifert pairing of an all-odd orientable pretzel surface."""
    if not p.is_pretzel():
        raise PreconditionError("Seifert matrix formula needs trivial braiding")
    t = p.twists
    if any(x % 2 == 0 for x in t):
        raise PreconditionError(
            "Seifert matrix formula needs every twist odd", witness=t
        )
    n = p.k - 1
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = (t[i] + t[i + 1]) // 2
        if i + 1 < n:
            rows[i][i + 1] = (t[i + 1] + 1) // 2
            rows[i + 1][i] = (t[i + 1] - 1) // 2
    return SeifertMatrix(n, tuple(tuple(r) for r in rows))


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free integer determinant."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for col in range(n - 1):
        if a[col][col] == 0:
            for r in range(col + 1, n):
                if a[r][col] != 0:
                    a[col], a[r] = a[r], a[col]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(col + 1, n):
            for j in range(col + 1, n):
                a[i][j] = (a[i][j] * a[col][col] - a[i][col] * a[col][j]) // prev
            a[i][col] = 0
        prev = a[col][col]
    return sign * a[n - 1][n - 1]


def determinant(v: SeifertMatrix) -> int:
    """|det(V + V^T)|; 1 for the empty matrix (unknot convention)."""
    return abs(_bareiss_det(v.symmetrized()))


def signature(v: SeifertMatrix) -> int:
    """Signature of V + V^T by exact congruence diagonalisation.

    Symmetric row/column operations over the rationals preserve the
    signature; a zero diagonal with a nonzero off-diagonal entry is repaired
    by adding the partner row/column (the diagonal then picks up twice the
    entry, which cannot vanish in characteristic zero).
    """
    n = v.size
    a = [[Fraction(x) for x in row] for row in v.symmetrized()]
    active = list(range(n))
    pos = neg = 0
    while active:
        pivot = next((r for r in active if a[r][r] != 0), None)
        if pivot is None:
            hot = next(
                (
                    (r, s)
                    for r in active
                    for s in active
                    if r != s and a[r][s] != 0
                ),
                None,
            )
            if hot is None:
                break  # remaining block is zero: contributes nothing
            r, s = hot
            for j in range(n):
                a[r][j] += a[s][j]
            for i in range(n):
                a[i][r] += a[i][s]
            pivot = r
        d = a[pivot][pivot]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(pivot)
        for i in active:
            f = a[i][pivot] / d
            if f == 0:
                continue
            for j in range(n):
                a[i][j] -= f * a[pivot][j]
            for j in range(n):
                a[j][i] -= f * a[j][pivot]
    return pos - neg


def gs_signature_lower(v: SeifertMatrix) -> Fraction:
    """|signature| / 2, a lower bound for the slice genus of the boundary knot."""
    return Fraction(abs(signature(v)), 2)
