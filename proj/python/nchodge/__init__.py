"""Exact computer algebra for commutative nc-Hodge structures."""

try:
    from nchodge._core import *  # noqa: F401,F403
    from nchodge._core import __doc__  # noqa: F401
except ImportError:  # build-tree layout: _core next to the package dir
    from _core import *  # noqa: F401,F403
