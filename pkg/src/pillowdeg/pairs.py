"""Disjoint-pair counting with a compiled kernel and a pure-Python fallback.

The exhaustive pair enumeration is the one quadratic inner loop in the
package (E = 6ab segments gives E(E-1)/2 comparisons), so it is also
provided as a Cython extension.  Import-time selection: the compiled
kernel is used when the extension built, otherwise the pure-Python
fallback -- results are identical either way.  `benchmarks/bench_pairs.py`
times the two against each other.
"""
from __future__ import annotations

from array import array
from typing import Callable, Iterable, Sequence

from . import _pairs_py

try:
    from . import _pairs_cy
except ImportError:  # extension not built; pure fallback
    _pairs_cy = None

KERNEL = "compiled" if _pairs_cy is not None else "python"


def _columns(edges: Iterable[tuple[int, int]]) -> tuple[array, array]:
    us = array("q")
    vs = array("q")
    for u, v in edges:
        us.append(u)
        vs.append(v)
    return us, vs


def count_disjoint_pairs(edges: Sequence[tuple[int, int]]) -> int:
    """Unordered pairs of edges sharing no endpoint, by exhaustive enumeration."""
    us, vs = _columns(edges)
    if _pairs_cy is not None:
        return _pairs_cy.count_disjoint_pairs(us, vs)
    return _pairs_py.count_disjoint_pairs(us, vs)


def implementations() -> dict[str, Callable[[Sequence[tuple[int, int]]], int]]:
    """All available kernels, keyed by name (for tests and benchmarks)."""

    def run_python(edges):
        us, vs = _columns(edges)
        return _pairs_py.count_disjoint_pairs(us, vs)

    impls = {"python": run_python}
    if _pairs_cy is not None:

        def run_compiled(edges):
            us, vs = _columns(edges)
            return _pairs_cy.count_disjoint_pairs(us, vs)

        impls["compiled"] = run_compiled
    return impls
