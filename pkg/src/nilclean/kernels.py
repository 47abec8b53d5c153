"""Backend selection for the hot loops.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
numpy implementations in ``_pykernels`` take over. Setting the environment
variable ``NILCLEAN_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernels

python_backend = _pykernels

if os.environ.get("NILCLEAN_PURE_PYTHON", "") not in ("", "0"):
    compiled_backend = None
else:
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

backend = compiled_backend or python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

nilpotency_indices = backend.nilpotency_indices
unit_inverses = backend.unit_inverses
jacobson_mask = backend.jacobson_mask
two_sided_products = backend.two_sided_products
subgroup_closure = backend.subgroup_closure
decompose_search = backend.decompose_search

__all__ = [
    "BACKEND",
    "backend",
    "compiled_backend",
    "python_backend",
    "nilpotency_indices",
    "unit_inverses",
    "jacobson_mask",
    "two_sided_products",
    "subgroup_closure",
    "decompose_search",
]
