"""Jacobi elliptic functions, integrals and the zeta function."""

from .elliptic import *  # noqa: F401,F403
from .elliptic import __all__  # noqa: F401
