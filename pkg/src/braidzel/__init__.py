"""Quasipositivity of pretzel and braidzel surfaces, with verifiable move
traces and slice-genus bounds for the boundary links.

The main entry points:

* :mod:`braidzel.words` / :mod:`braidzel.garside` — braid words, the word
  problem, nonnegativity;
* :mod:`braidzel.surfaces` — the surface data model (Euler characteristic,
  orientability, boundary tracing, sub-surfaces);
* :mod:`braidzel.moves` — the six isotopy moves, replayable traces, and the
  normalization that trades a positive twist for positive braiding;
* :mod:`braidzel.qp` — quasipositivity verdicts with witnesses;
* :mod:`braidzel.slice_bounds` — slice Euler characteristic bounds and
  slice-genus consequences;
* :mod:`braidzel.seifert` — the independent Seifert-form oracle;
* :mod:`braidzel.cli` — the ``braidzel`` command.
"""

__version__ = "0.1.0"

from .garside import NormalForm, is_nonnegative, normal_form, words_equal
from .moves import (
    ALL_MOVES,
    Move,
    MoveKind,
    MoveTrace,
    apply_move,
    apply_moves,
    normalize_to_nonnegative,
    reverse_pretzel,
    rotate_pretzel,
    verify_trace,
)
from .qp import (
    QPStatus,
    QPVerdict,
    annular_qp,
    decide,
    is_nearly_negative,
    necessary_condition,
    pretzel_qp,
    sufficient_condition,
)
from .seifert import SeifertMatrix, determinant, gs_signature_lower, seifert_matrix, signature
from .slice_bounds import (
    SliceReport,
    chi_s_combined,
    chi_s_exact,
    chi_s_sign_bound,
    chi_s_subset_bound,
    slice_report,
)
from .surfaces import (
    Braidzel,
    SurfaceProfile,
    boundary_components,
    euler_characteristic,
    is_orientable,
    mirror_pretzel,
    pretzel,
    profile,
    sub_braidzel,
)
from .words import (
    BraidWord,
    StrandPermutation,
    compose,
    crossing_count,
    exponent_sum,
    free_reduce,
    named_words,
    permutation,
    restrict,
)

__all__ = [name for name in dir() if not name.startswith("_")]
