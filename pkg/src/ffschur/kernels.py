"""Kernel backend selection: compiled extension when available, else pure Python.

Set FFSCHUR_PURE=1 to force the pure-Python kernel.
"""

import os

if os.environ.get("FFSCHUR_PURE"):
    from . import _purekernel as impl
else:
    try:
        from . import _speedups as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _purekernel as impl

BACKEND = impl.BACKEND
mono_sort_key = impl.mono_sort_key
mono_mul = impl.mono_mul
mono_div = impl.mono_div
poly_add = impl.poly_add
poly_sub = impl.poly_sub
poly_neg = impl.poly_neg
poly_scale = impl.poly_scale
poly_mul = impl.poly_mul
poly_mul_mono = impl.poly_mul_mono
poly_divexact = impl.poly_divexact
