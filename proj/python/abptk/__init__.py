"""Exact toolkit for homogeneous algebraic branching programs.

Thin wrapper over the compiled core; every value crosses the boundary as a
JSON string so nothing is ever rounded.
"""

try:
    # installed layout: the extension lives inside the package
    from .abptk_core import *  # noqa: F401,F403
    from .abptk_core import __version__  # noqa: F401
except ImportError:
    # build-tree layout: the extension sits on PYTHONPATH by itself
    from abptk_core import *  # noqa: F401,F403
    from abptk_core import __version__  # noqa: F401
