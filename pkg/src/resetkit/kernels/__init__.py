"""Hot search kernels with a compiled backend and a pure-Python fallback.

The compiled ``_ckernels`` extension is used when it was built; otherwise (or when
``RESETKIT_PURE_PYTHON=1`` is set) the ``_pykernels`` module is used. Both expose
``explore_subsets``, ``pair_distances`` and ``dpll_solve`` with identical contracts.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("RESETKIT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

_active = compiled_backend or python_backend

BACKEND = _active.BACKEND
explore_subsets = _active.explore_subsets
pair_distances = _active.pair_distances
dpll_solve = _active.dpll_solve

__all__ = [
    "BACKEND",
    "compiled_backend",
    "dpll_solve",
    "explore_subsets",
    "pair_distances",
    "python_backend",
]
