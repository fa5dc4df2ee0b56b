# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled disjoint-pair enumeration kernel.

Same contract as pillowdeg._pairs_py.count_disjoint_pairs: exhaustive
O(E^2) comparison of endpoint labels over two equal-length int64 columns.
"""


def count_disjoint_pairs(const long long[::1] us, const long long[::1] vs):
    """Number of index pairs i < j with {us[i], vs[i]} ∩ {us[j], vs[j]} empty."""
    cdef Py_ssize_t n = us.shape[0]
    if vs.shape[0] != n:
        raise ValueError("endpoint columns differ in length")
    cdef Py_ssize_t i, j
    cdef long long u1, v1, u2, v2
    cdef long long total = 0
    for i in range(n):
        u1 = us[i]
        v1 = vs[i]
        for j in range(i + 1, n):
            u2 = us[j]
            v2 = vs[j]
            if u2 != u1 and u2 != v1 and v2 != u1 and v2 != v1:
                total += 1
    return total
