"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``HYPERLAB_PURE_PYTHON=1`` to force the fallback.
"""

import os

import numpy as np

from . import _kernels_py

_compiled = None
if os.environ.get("HYPERLAB_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

NAMES = ("hyper_assoc_violation", "nary_assoc_violation", "distributivity_violation",
         "sum_violation", "product_violation")


class _Backend:
    """Uniform call surface over one kernel module."""

    def __init__(self, module, arrays):
        self.module = module
        self.name = module.IMPLEMENTATION
        self._arrays = arrays

    def _conv(self, seq):
        if self._arrays:
            return np.ascontiguousarray(seq, dtype=np.int64)
        return list(seq)

    def hyper_assoc_violation(self, ftab, size, m):
        return self.module.hyper_assoc_violation(self._conv(ftab), size, m)

    def nary_assoc_violation(self, gtab, size, n):
        return self.module.nary_assoc_violation(self._conv(gtab), size, n)

    def distributivity_violation(self, ftab, gtab, size, m, n):
        return self.module.distributivity_violation(self._conv(ftab), self._conv(gtab),
                                                    size, m, n)

    def sum_violation(self, ftab, size, m, lo, hi, cap, floor):
        return self.module.sum_violation(self._conv(ftab), size, m, self._conv(lo),
                                         self._conv(hi), cap[0], cap[1], floor[0], floor[1])

    def product_violation(self, gtab, size, n, lo, hi, join, cap, floor):
        return self.module.product_violation(self._conv(gtab), size, n, self._conv(lo),
                                             self._conv(hi), join[0], join[1],
                                             cap[0], cap[1], floor[0], floor[1])


python_backend = _Backend(_kernels_py, arrays=False)
compiled_backend = _Backend(_compiled, arrays=True) if _compiled is not None else None
backend = compiled_backend or python_backend
IMPLEMENTATION = backend.name
