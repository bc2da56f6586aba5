"""Kernel selection: compiled union-find if available, pure Python otherwise.

Set COVERENDS_NO_EXT=1 to force the fallback (useful for benchmarking and
for reproducing fallback-only environments).
"""

from __future__ import annotations

import os

if os.environ.get("COVERENDS_NO_EXT"):
    from ._purecc import cc_from_edges

    USING_COMPILED = False
else:
    try:
        from ._fastcc import cc_from_edges  # type: ignore[no-redef]

        USING_COMPILED = True
    except ImportError:
        from ._purecc import cc_from_edges  # type: ignore[no-redef]

        USING_COMPILED = False

__all__ = ["cc_from_edges", "USING_COMPILED"]
