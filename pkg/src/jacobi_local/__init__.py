"""Numerical toolkit for local identities among Jacobi elliptic functions."""

__version__ = "0.1.0"
