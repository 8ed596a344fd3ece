"""Pick the compiled Landen kernel when importable, else the NumPy twin."""

import os

from . import _landen_py

BACKEND = "python"
ellipj_landen = _landen_py.ellipj_landen

if os.environ.get("JACOBI_LOCAL_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _landen  # type: ignore[attr-defined]
    except ImportError:  # extension not built
        pass
    else:
        ellipj_landen = _landen.ellipj_landen
        BACKEND = "cython"
