"""Kernel dispatch: compiled extension when built, pure Python otherwise.

The compiled module handles graphs up to 64 vertices; larger inputs always
go through the Python implementation.  Set ``CLIQUERECONF_PURE_PYTHON=1``
to disable the extension entirely.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _pykernels

_ckernels = None
if not os.environ.get("CLIQUERECONF_PURE_PYTHON"):
    try:
        from . import _ckernels  # type: ignore[no-redef]
    except ImportError:
        _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
COMPILED_MAX_VERTICES = 64


def _pick(rows: Sequence[int]):
    if _ckernels is not None and len(rows) <= COMPILED_MAX_VERTICES:
        return _ckernels
    return _pykernels


def k_cliques(rows: Sequence[int], k: int) -> list[int]:
    return _pick(rows).k_cliques(rows, k)


def count_k_cliques(rows: Sequence[int], k: int) -> int:
    return _pick(rows).count_k_cliques(rows, k)


def maximal_cliques(rows: Sequence[int]) -> list[int]:
    return _pick(rows).maximal_cliques(rows)


def clique_number(rows: Sequence[int]) -> int:
    return _pick(rows).clique_number(rows)


def exact_coloring(rows: Sequence[int], lower: int) -> list[int]:
    return _pick(rows).exact_coloring(rows, lower)
