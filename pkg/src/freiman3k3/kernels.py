"""Backend selection for the bit-vector kernels.

The compiled ``_core`` extension is used when it imports and the operands fit
its word size; everything else goes through ``_pycore``.  Set
``FREIMAN3K3_PURE=1`` to force the pure-Python path.
"""

from __future__ import annotations

import os

from . import _pycore

bits = _pycore.bits
coprime_filter = _pycore.coprime_filter

try:
    if os.environ.get("FREIMAN3K3_PURE"):
        raise ImportError("pure backend requested")
    from . import _core
except ImportError:
    _core = None

BACKEND = "cython" if _core is not None else "python"

if _core is not None:
    _CORE_OPERAND_LIMIT = 1 << _core.MAX_OPERAND_BITS
    _CORE_MAX_SPAN = _core.MAX_SPAN

    def sumset_mask(a: int, b: int) -> int:
        if a < _CORE_OPERAND_LIMIT and b < _CORE_OPERAND_LIMIT:
            return _core.sumset_mask(a, b)
        return _pycore.sumset_mask(a, b)

    def longest_run(mask: int) -> tuple[int, int]:
        if mask < (1 << 64):
            return _core.longest_run(mask)
        return _pycore.longest_run(mask)

    def scan_span(n: int, lo: int, hi: int):
        if n <= _CORE_MAX_SPAN:
            return _core.scan_span(n, lo, hi)
        return _pycore.scan_span(n, lo, hi)

else:
    sumset_mask = _pycore.sumset_mask
    longest_run = _pycore.longest_run
    scan_span = _pycore.scan_span


__all__ = ["BACKEND", "bits", "coprime_filter", "longest_run", "scan_span", "sumset_mask"]
