# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled seed sweep: 2-neighbor closure from every seed edge.

Semantics are pinned by linkdomain.kernels.pure.sweep_seeds; keep the two
in lockstep. Epoch stamps avoid O(m) per-seed resets.
"""

from libc.stdlib cimport free, malloc


def sweep_seeds(
    const int[::1] indptr,
    const int[::1] indices,
    const int[::1] seed_u,
    const int[::1] seed_v,
    int m,
    int[::1] sizes_out,
):
    cdef Py_ssize_t n_seeds = seed_u.shape[0]
    cdef int *counters = <int *> malloc(m * sizeof(int))
    cdef int *counter_epoch = <int *> malloc(m * sizeof(int))
    cdef int *member_epoch = <int *> malloc(m * sizeof(int))
    cdef int *queue = <int *> malloc(m * sizeof(int))
    if counters == NULL or counter_epoch == NULL or member_epoch == NULL or queue == NULL:
        free(counters); free(counter_epoch); free(member_epoch); free(queue)
        raise MemoryError()

    cdef Py_ssize_t s
    cdef int a, b, v, w, i, head, size, count, winner = -1
    for v in range(m):
        counter_epoch[v] = -1
        member_epoch[v] = -1

    try:
        for s in range(n_seeds):
            a = seed_u[s]
            b = seed_v[s]
            member_epoch[a] = <int> s
            member_epoch[b] = <int> s
            queue[0] = a
            queue[1] = b
            size = 2
            head = 0
            while head < size:
                v = queue[head]
                head += 1
                for i in range(indptr[v], indptr[v + 1]):
                    w = indices[i]
                    if member_epoch[w] == <int> s:
                        continue
                    if counter_epoch[w] == <int> s:
                        count = counters[w] + 1
                    else:
                        count = 1
                    counters[w] = count
                    counter_epoch[w] = <int> s
                    if count >= 2:
                        member_epoch[w] = <int> s
                        queue[size] = w
                        size += 1
            sizes_out[s] = size
            if size == m:
                winner = <int> s
                break
    finally:
        free(counters)
        free(counter_epoch)
        free(member_epoch)
        free(queue)
    return winner
