"""Motivic partition functions of hyperquot schemes on smooth projective curves.

Polynomials in u, v are dicts {(pu, pv): coefficient}; series are dicts keyed by
degree tuples. L = uv is the class of the affine line.
"""

from ._core import *  # noqa: F401,F403
from ._core import HyperquotError, __version__  # noqa: F401
