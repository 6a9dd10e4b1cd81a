"""Hot-loop graph kernels with a compiled core and a pure-Python fallback.

The compiled Cython extension is preferred; if it was not built (e.g. no C
compiler at install time) the pure-Python twin is used instead. Both expose
the same three functions over CSR adjacency arrays (int32 indptr/indices):

- ``betweenness_distance_pass(indptr, indices, n)``
- ``triangle_counts(indptr, indices, n)``
- ``component_labels(indptr, indices, n)``

``BACKEND`` records which implementation is active ("c" or "python").
"""
from . import _pykernels

try:
    from . import _ckernels as _impl
    BACKEND = "c"
except ImportError:  # pragma: no cover - depends on build environment
    _impl = _pykernels
    BACKEND = "python"

betweenness_distance_pass = _impl.betweenness_distance_pass
triangle_counts = _impl.triangle_counts
component_labels = _impl.component_labels


def available_backends() -> dict:
    """Map backend name to its module, for benchmarks and parity tests."""
    out = {"python": _pykernels}
    if BACKEND == "c":
        out["c"] = _impl
    return out
