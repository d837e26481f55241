# cython: language_level=3, boundscheck=False, wraparound=False
"""Packed Gray-code weight enumeration for binary cyclic codes, n <= 63.

One XOR and one popcount per information word; the pure-Python twin lives
in _graywalk_py and must stay behaviorally identical.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def gray_min_weight(rows, unsigned long long limit, int stop_at):
    """Walk nonzero row combinations 1..limit in Gray order.

    rows: list of <= 63 generator rows packed as ints.
    limit: number of combinations to visit (2^k - 1 for a full walk).
    stop_at: stop early once a weight <= stop_at is seen (0 disables).
    Returns (best_weight, best_word, visited).
    """
    cdef int k = len(rows)
    cdef unsigned long long *crows = <unsigned long long *> malloc(k * sizeof(unsigned long long))
    if crows == NULL:
        raise MemoryError()
    cdef int i
    for i in range(k):
        crows[i] = rows[i]
    cdef unsigned long long acc = 0, best_word = 0, cnt = 0
    cdef int best = 1 << 30, w
    try:
        with nogil:
            while cnt < limit:
                cnt += 1
                acc ^= crows[__builtin_ctzll(cnt)]
                w = __builtin_popcountll(acc)
                if w < best:
                    best = w
                    best_word = acc
                    if stop_at and w <= stop_at:
                        break
    finally:
        free(crows)
    return best, best_word, cnt
