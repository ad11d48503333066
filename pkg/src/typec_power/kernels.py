"""Select the sparse term kernels: compiled if importable, else pure Python.

Set ``TYPEC_POWER_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("TYPEC_POWER_PURE_PYTHON"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        from . import _pykernels as _impl

add_terms = _impl.add_terms
mul_terms = _impl.mul_terms
scale_terms = _impl.scale_terms
scale_exponents = _impl.scale_exponents
reduce_exponent_mod = _impl.reduce_exponent_mod
IMPLEMENTATION = _impl.IMPLEMENTATION
