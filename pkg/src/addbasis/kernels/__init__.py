"""Kernel backend selection.

ADDBASIS_BACKEND picks the implementation: "numba" (jit kernels), "numpy"
(pure numpy/python), or "auto" (default: numba when importable, else numpy).
The active module is re-exported here; benchmarks and parity tests import
numpy_impl / numba_impl directly.
"""

import os

from . import numpy_impl

_choice = os.environ.get("ADDBASIS_BACKEND", "auto").lower()

if _choice not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"ADDBASIS_BACKEND must be auto, numba or numpy, got {_choice!r}"
    )

_active = numpy_impl
BACKEND = "numpy"

if _choice in ("auto", "numba"):
    try:
        from . import numba_impl

        _active = numba_impl
        BACKEND = "numba"
    except ImportError:
        if _choice == "numba":
            raise

window_sumset = _active.window_sumset
pair_sweep = _active.pair_sweep
triple_sweep = _active.triple_sweep
lemma1_sweep = _active.lemma1_sweep
