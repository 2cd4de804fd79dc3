"""Kernel backend selection.

The package ships a small compiled extension (signfree._core) for the
per-iteration hot kernels plus a pure numpy fallback (_core_py).  The
active backend is chosen once at import:

* ``SIGNFREE_BACKEND=c``    require the compiled extension (ImportError if
  it is missing),
* ``SIGNFREE_BACKEND=py``   force the numpy fallback,
* unset / ``auto``          compiled if available, else fallback.

Within one process all kernels come from a single backend, so every
determinism contract (identical config => identical artifacts) holds; the
resolved backend name is recorded in run summaries for provenance.
"""

import os

_requested = os.environ.get("SIGNFREE_BACKEND", "auto").lower()

if _requested not in ("auto", "c", "py"):
    raise ValueError(
        f"SIGNFREE_BACKEND must be one of auto|c|py, got {_requested!r}"
    )

if _requested == "py":
    from signfree import _core_py as _impl

    BACKEND = "py"
elif _requested == "c":
    from signfree import _core as _impl  # type: ignore[attr-defined]

    BACKEND = "c"
else:
    try:
        from signfree import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "c"
    except ImportError:
        from signfree import _core_py as _impl

        BACKEND = "py"

sign_into = _impl.sign_into
norm_l1 = _impl.norm_l1
norm_linf = _impl.norm_linf
inner = _impl.inner
inner_sign = _impl.inner_sign
sign_step = _impl.sign_step
diff_l1 = _impl.diff_l1
diff_linf = _impl.diff_linf
sub_into = _impl.sub_into
matvec = _impl.matvec


def active_backend() -> str:
    """Name of the kernel backend resolved at import ('c' or 'py')."""
    return BACKEND
