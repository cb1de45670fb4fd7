"""Backend selector: compiled extension kernels with pure-Python fallback.

The compiled module ``qgc._core`` implements the hot kernels (canonical
labeling, code distance, weight counts, independent sets, cliques).  If it
is not built, or if the environment variable ``QGC_PURE=1`` is set, the
pure-Python implementations in :mod:`qgc._pure` are used instead.
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("QGC_PURE") == "1":
    _impl = _pure
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND: str = _impl.BACKEND

canon_graph = _impl.canon_graph
revolving_door = _impl.revolving_door
graph_code_distance = _impl.graph_code_distance
graph_code_weight_hist = _impl.graph_code_weight_hist
max_independent_set = _impl.max_independent_set
maximal_cliques = _impl.maximal_cliques
