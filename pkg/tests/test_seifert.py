import random
from fractions import Fraction

import pytest
import sympy

from braidzel.errors import PreconditionError
from braidzel.seifert import (
    SeifertMatrix,
    determinant,
    gs_signature_lower,
    seifert_matrix,
    signature,
)
from braidzel.surfaces import Braidzel, mirror_pretzel, pretzel
from braidzel.words import BraidWord


def descartes_signature(sym_rows) -> int:
    """Independent exact signature: a real symmetric matrix has all-real
    eigenvalues, so sign changes in the characteristic polynomial count the
    positive roots exactly (and in p(-x) the negative ones)."""
    n = len(sym_rows)
    if n == 0:
        return 0
    m = sympy.Matrix(sym_rows)
    x = sympy.Symbol("x")
    poly = sympy.Poly(m.charpoly(x).as_expr(), x)
    coeffs = poly.all_coeffs()

    def variations(cs):
        signs = [c for c in cs if c != 0]
        return sum(
            1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0)
        )

    pos = variations(coeffs)
    neg = variations([c * (-1) ** i for i, c in enumerate(coeffs)])
    return pos - neg


def test_trefoil_gates():
    v = seifert_matrix(pretzel(-1, -1, -1))
    assert v.rows == ((-1, 0), (-1, -1))
    assert determinant(v) == 3
    assert signature(v) == -2
    assert gs_signature_lower(v) == 1


def test_mirror_trefoil():
    v = seifert_matrix(pretzel(1, 1, 1))
    assert signature(v) == 2 and determinant(v) == 3


def test_showcase_matrix():
    v = seifert_matrix(pretzel(3, -5, -7))
    assert v.rows == ((-1, -2), (-3, -6))
    assert determinant(v) == 1  # algebraically slice: unit determinant
    assert signature(v) == 0
    assert gs_signature_lower(v) == 0


def test_single_band_matrix_is_empty():
    v = seifert_matrix(pretzel(7))
    assert v.size == 0 and v.rows == ()
    assert determinant(v) == 1  # unknot convention
    assert signature(v) == 0
    assert gs_signature_lower(v) == 0


def test_two_band_torus_links():
    # P(t, t) is the annulus with core self-linking t; its boundary is the
    # (2, 2t) torus link with determinant |2t|
    for t in (-3, -1, 1, 3, 5):
        v = seifert_matrix(pretzel(t, t))
        assert v.rows == ((t,),)
        assert determinant(v) == abs(2 * t)


def test_preconditions():
    with pytest.raises(PreconditionError):
        seifert_matrix(pretzel(2, -4))
    with pytest.raises(PreconditionError):
        seifert_matrix(Braidzel(2, BraidWord(2, (1,)), (1, 1)))


def test_signature_against_descartes_oracle():
    rng = random.Random(137)
    for _ in range(200):
        k = rng.randint(1, 6)
        tw = tuple(rng.choice([-7, -5, -3, -1, 1, 3, 5, 7]) for _ in range(k))
        v = seifert_matrix(pretzel(*tw))
        assert signature(v) == descartes_signature(v.symmetrized()), tw


def test_signature_on_degenerate_forms():
    # forms with zero diagonal and with repeated rows exercise the pivot
    # repair and the zero-block exit
    assert signature(SeifertMatrix(2, ((0, 1), (0, 0)))) == 0  # hyperbolic plane
    assert signature(SeifertMatrix(2, ((0, 0), (0, 0)))) == 0
    assert signature(SeifertMatrix(3, ((1, 0, 0), (0, 0, 0), (0, 0, -1)))) == 0
    assert (
        signature(SeifertMatrix(3, ((1, 0, 0), (1, 1, 0), (0, 0, 1)))) == 3
    )  # symmetrised: diag(2,2,2) plus corners


def test_determinant_odd_for_knots():
    rng = random.Random(139)
    for _ in range(300):
        k = rng.choice([3, 5])
        tw = tuple(rng.choice([-7, -5, -3, -1, 1, 3, 5, 7]) for _ in range(k))
        assert determinant(seifert_matrix(pretzel(*tw))) % 2 == 1, tw


def test_mirror_negates_signature():
    rng = random.Random(149)
    for _ in range(200):
        k = rng.randint(2, 6)
        tw = tuple(rng.choice([-7, -5, -3, -1, 1, 3, 5, 7]) for _ in range(k))
        v = seifert_matrix(pretzel(*tw))
        vm = seifert_matrix(mirror_pretzel(tw))
        assert signature(vm) == -signature(v)
        assert determinant(vm) == determinant(v)


def test_signature_bounded_by_first_homology_rank():
    rng = random.Random(151)
    for _ in range(200):
        k = rng.randint(1, 6)
        tw = tuple(rng.choice([-5, -3, -1, 1, 3, 5]) for _ in range(k))
        assert abs(signature(seifert_matrix(pretzel(*tw)))) <= max(k - 1, 0)


def test_gs_signature_lower_type():
    v = seifert_matrix(pretzel(-1, -1, -1, -1, -1))
    bound = gs_signature_lower(v)
    assert isinstance(bound, Fraction) and bound == Fraction(abs(signature(v)), 2)
