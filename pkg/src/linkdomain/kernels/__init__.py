"""Kernel selection: compiled sweep when available, pure Python otherwise.

Set LINKDOMAIN_PURE=1 to force the fallback (used by the benchmark and by
tests that pin down kernel equivalence).
"""

import os

from . import pure

try:
    from . import _sweep as _compiled
except ImportError:
    _compiled = None

if _compiled is not None and not os.environ.get("LINKDOMAIN_PURE"):
    _active = _compiled
    KERNEL = "compiled"
else:
    _active = pure
    KERNEL = "pure"

COMPILED_AVAILABLE = _compiled is not None
sweep_seeds = _active.sweep_seeds

__all__ = ["COMPILED_AVAILABLE", "KERNEL", "pure", "sweep_seeds"]
