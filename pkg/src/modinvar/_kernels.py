"""Kernel backend selection: compiled extension when available, else pure Python.

Set MODINVAR_PURE_PY=1 to force the fallback (used by the benchmark).
"""

import os

if os.environ.get("MODINVAR_PURE_PY"):
    from . import _kernels_py as impl
else:
    try:
        from . import _kernels_cy as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as impl

BACKEND = impl.BACKEND
mul_terms = impl.mul_terms
add_terms = impl.add_terms
scale_terms = impl.scale_terms
iadd_scaled = impl.iadd_scaled
neg_terms = impl.neg_terms
grevlex_okey = impl.grevlex_okey
leading_key = impl.leading_key
normal_form_terms = impl.normal_form_terms
