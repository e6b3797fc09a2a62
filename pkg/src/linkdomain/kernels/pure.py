"""Pure-Python seed sweep, the fallback twin of the compiled kernel.

Must stay observably identical to linkdomain.kernels._sweep.sweep_seeds:
same early-exit seed index, same per-seed reached-set sizes. The closure
itself is order-insensitive (adding any vertex with two reached neighbors
never disables another), so a FIFO worklist reaches the same set as any
other tie-break.
"""

import numpy as np


def sweep_seeds(
    indptr: np.ndarray,
    indices: np.ndarray,
    seed_u: np.ndarray,
    seed_v: np.ndarray,
    m: int,
    sizes_out: np.ndarray,
) -> int:
    """Run the 2-neighbor closure from every seed edge in order.

    Writes the reached-set size of seed s into sizes_out[s] and stops at
    the first seed whose closure covers all m vertices, returning its
    index; returns -1 when every seed gets stuck. Per-seed state is
    reset with an epoch stamp instead of clearing arrays, so a seed costs
    O(vertices it touches), not O(m).
    """
    ptr = indptr.tolist()
    adj = indices.tolist()
    s_u = seed_u.tolist()
    s_v = seed_v.tolist()

    counters = [0] * m
    counter_epoch = [-1] * m
    member_epoch = [-1] * m
    queue = [0] * m

    for s in range(len(s_u)):
        a, b = s_u[s], s_v[s]
        member_epoch[a] = s
        member_epoch[b] = s
        queue[0], queue[1] = a, b
        size = 2
        head = 0
        while head < size:
            v = queue[head]
            head += 1
            for i in range(ptr[v], ptr[v + 1]):
                w = adj[i]
                if member_epoch[w] == s:
                    continue
                count = counters[w] + 1 if counter_epoch[w] == s else 1
                counters[w] = count
                counter_epoch[w] = s
                if count >= 2:
                    member_epoch[w] = s
                    queue[size] = w
                    size += 1
        sizes_out[s] = size
        if size == m:
            return s
    return -1
