"""Energy of graphs with self-loops: spectra, conjecture witnesses and
equienergetic join families."""

try:
    from ._selfloop import *  # noqa: F401,F403
    from ._selfloop import __doc__ as _ext_doc  # noqa: F401
except ImportError:  # in-tree build: extension sits next to the CMake targets
    from _selfloop import *  # noqa: F401,F403

__all__ = [name for name in dir() if not name.startswith("_")]
