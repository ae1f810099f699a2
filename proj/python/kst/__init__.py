"""Exact k-Schur functions and affine Schubert calculus."""

from _kst import *  # noqa: F401,F403

try:
    from _kst import __doc__ as _doc  # noqa: F401
except ImportError:  # pragma: no cover
    pass
