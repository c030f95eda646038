"""Backend selection for the GF(p) hot loops.

The compiled ``_kernels`` extension is used when it was built; otherwise the
pure-Python ``_kernels_py`` module is used. Setting ``MINRANK_PURE_PYTHON=1``
forces the fallback.
"""

import os

from . import _kernels_py

# products of two residues must fit in a signed 64-bit integer
MAX_KERNEL_MODULUS = 2 ** 31

if os.environ.get("MINRANK_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

rank_mod_p = _impl.rank_mod_p
min_rank_assignments = _impl.min_rank_assignments
