"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``BRAIDZEL_PURE=1`` to force the pure backend (used by the benchmark and
by tests that compare the two).
"""

from __future__ import annotations

import os

if os.environ.get("BRAIDZEL_PURE"):
    from . import _pure as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pure as _impl  # type: ignore[no-redef]

BACKEND: str = _impl.BACKEND
first_bad_pair = _impl.first_bad_pair
qp_all_negative_batch = _impl.qp_all_negative_batch
boundary_cycles = _impl.boundary_cycles
pretzel_boundary_batch = _impl.pretzel_boundary_batch
