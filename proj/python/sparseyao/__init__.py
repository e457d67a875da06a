"""Sparse (1+eps)-spanner toolkit: thin wrapper around the compiled core."""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__ as _core_doc
except ImportError:  # core built out-of-tree (plain CMake), found via PYTHONPATH
    from _core import *  # noqa: F401,F403
    from _core import __doc__ as _core_doc

__doc__ = _core_doc
