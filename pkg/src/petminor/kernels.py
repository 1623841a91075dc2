"""Kernel selection.

The compiled extension ``petminor._ckernels`` is used when it imports; set
``PETMINOR_PURE=1`` to force the pure-Python fallback.  The compiled
functions pack adjacency rows into 64-bit words, so inputs on more than 64
vertices always take the Python path.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
_c = None

if os.environ.get("PETMINOR_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _c  # type: ignore[attr-defined, no-redef]

        BACKEND = "cython"
    except ImportError:
        _c = None

WORD = 64


def subgraph_embed(hrows: list[int], prows: list[int], node_limit: int = 0):
    if _c is not None and len(hrows) <= WORD:
        return _c.subgraph_embed(hrows, prows, node_limit)
    return _pykernels.subgraph_embed(hrows, prows, node_limit)


def spanning_embed(qrows: list[int], prows: list[int], autos: list[list[int]], node_limit: int = 0):
    if _c is not None and len(qrows) <= WORD:
        return _c.spanning_embed(qrows, prows, autos, node_limit)
    return _pykernels.spanning_embed(qrows, prows, autos, node_limit)


def quotient_rows(hrows: list[int], parts: list[int]) -> list[int]:
    if _c is not None and len(hrows) <= WORD:
        return _c.quotient_rows(hrows, parts)
    return _pykernels.quotient_rows(hrows, parts)


def partition_key(parts: list[int], singles: int, classes: list[int]) -> tuple[int, ...]:
    if _c is not None and singles >> WORD == 0 and all(c >> WORD == 0 for c in classes):
        return _c.partition_key(parts, singles, classes)
    return _pykernels.partition_key(parts, singles, classes)


automorphisms = _pykernels.automorphisms

__all__ = [
    "BACKEND", "automorphisms", "partition_key", "quotient_rows", "spanning_embed", "subgraph_embed",
]
