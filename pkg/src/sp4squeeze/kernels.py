"""Backend selection for the hot numerical kernels.

The compiled extension ``_kernels`` is used when it imports; otherwise the
numpy implementation in ``_fallback`` is used. Setting the environment
variable ``SP4SQUEEZE_PURE_PYTHON=1`` forces the fallback.
"""
import os

from . import _fallback

if os.environ.get("SP4SQUEEZE_PURE_PYTHON", "") not in ("", "0"):
    _impl = _fallback
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _fallback
        BACKEND = "python"

expm_pade = _impl.expm_pade
expm_pade_many = _impl.expm_pade_many

__all__ = ["BACKEND", "expm_pade", "expm_pade_many"]
