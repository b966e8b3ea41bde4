try:
    from ._hullborne import *  # noqa: F401,F403  (installed layout)
    from . import _hullborne as _impl
except ImportError:  # build-tree layout: extension next to the package dir
    from _hullborne import *  # noqa: F401,F403
    import _hullborne as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "1.0.0"
