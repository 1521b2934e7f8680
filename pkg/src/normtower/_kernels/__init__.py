"""Kernel selection: compiled extension when present, pure Python otherwise.

Set NORMTOWER_PURE_KERNELS=1 to force the pure-Python backend.
"""

import os

from . import _core_py

if os.environ.get("NORMTOWER_PURE_KERNELS") == "1":
    impl = _core_py
else:
    try:
        from . import _core as impl  # type: ignore[no-redef]
    except ImportError:
        impl = _core_py

mat_mul = impl.mat_mul
rref = impl.rref
rank = impl.rank
nilpotent_rank_sequence = impl.nilpotent_rank_sequence


def backend_name():
    return impl.BACKEND
