"""Plactic monoid centralizers: tableau algorithms and counting."""

try:
    from ._plactic import *  # noqa: F401,F403  (installed package layout)
    from . import _plactic as _impl
except ImportError:  # build-tree layout: extension sits next to the package
    from _plactic import *  # noqa: F401,F403
    import _plactic as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
