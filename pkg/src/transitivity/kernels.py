"""Kernel selection: the compiled extension when importable, else the pure-Python fallback.

Set ``TRANSITIVITY_PURE_PYTHON=1`` to force the fallback. The compiled
kernels handle graphs of at most 64 vertices; larger inputs are routed to
the fallback per call.
"""

from __future__ import annotations

import os

from . import _pykernels

COMPILED_LIMIT = 64

_c = None
if not os.environ.get("TRANSITIVITY_PURE_PYTHON"):
    try:
        from . import _ckernels as _c
    except ImportError:
        _c = None

BACKEND = "cython" if _c is not None else "python"


def _pick(n: int):
    return _c if _c is not None and n <= COMPILED_LIMIT else _pykernels


def transitive_search(masks, k, order, caps, twin_prev, independent=False):
    return _pick(len(masks)).transitive_search(masks, k, order, caps, twin_prev, independent)


def monomorphism(pmasks, porder, cand0, hmasks, induced=False):
    n = max(len(pmasks), len(hmasks))
    return _pick(n).monomorphism(pmasks, porder, cand0, hmasks, induced)


def first_violation(adj, blk):
    mod = _c if _c is not None else _pykernels
    return mod.first_violation(adj, blk)
