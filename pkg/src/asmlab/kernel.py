"""Select the compiled enumeration kernel, falling back to pure Python.

Set ``ASMLAB_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import logging
import os

from . import _kernel_py

log = logging.getLogger(__name__)

if os.environ.get("ASMLAB_PURE"):
    _impl = _kernel_py
    BACKEND = "python"
else:
    try:
        from . import _kernel as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # extension not built
        log.debug("compiled kernel unavailable, using pure Python")
        _impl = _kernel_py
        BACKEND = "python"

stats_histogram = _impl.stats_histogram
hsasm_histogram = _impl.hsasm_histogram
python_stats_histogram = _kernel_py.stats_histogram
python_hsasm_histogram = _kernel_py.hsasm_histogram
