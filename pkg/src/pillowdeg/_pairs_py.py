"""Pure-Python disjoint-pair enumeration (fallback kernel).

Counts unordered pairs of segments that share no endpoint, by exhaustive
O(E^2) comparison of endpoint labels.  Same contract as the compiled
kernel in _pairs_cy; `pillowdeg.pairs` picks whichever is importable.
"""
from __future__ import annotations

from typing import Sequence


def count_disjoint_pairs(us: Sequence[int], vs: Sequence[int]) -> int:
    """Number of index pairs i < j with {us[i], vs[i]} ∩ {us[j], vs[j]} empty."""
    n = len(us)
    if n != len(vs):
        raise ValueError("endpoint columns differ in length")
    total = 0
    for i in range(n):
        u1 = us[i]
        v1 = vs[i]
        for j in range(i + 1, n):
            u2 = us[j]
            if u2 != u1 and u2 != v1:
                v2 = vs[j]
                if v2 != u1 and v2 != v1:
                    total += 1
    return total
