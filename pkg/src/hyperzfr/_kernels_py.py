"""Pure-Python versions of the subset-scan kernels.

Same signatures and results as the compiled ``_kernels`` module; used when the
extension is not built or ``HYPERZFR_PURE=1`` is set.
"""

import numpy as np


def gray_histogram(n, inc_ptr, inc_idx, n_edges, n_fixed=0, block=0):
    """Count subsets ``S`` of ``0..n-1`` by ``(|S|, e(S))``.

    The top ``n_fixed`` vertices are pinned to the bits of ``block``; the
    remaining ``m = n - n_fixed`` vertices are walked in Gray-code order so
    each step toggles one vertex and updates ``e(S)`` from its incident
    edges only. Returns an ``(n+1, n_edges+1)`` int64 array.
    """
    m = n - n_fixed
    ptr = [int(x) for x in inc_ptr]
    idx = [int(x) for x in inc_idx]
    inc = [idx[ptr[v]:ptr[v + 1]] for v in range(n)]
    hist = [[0] * (n_edges + 1) for _ in range(n + 1)]
    hits = [0] * n_edges
    member = [False] * n
    size = 0
    e = 0

    for t in range(n_fixed):
        if (block >> t) & 1:
            v = m + t
            member[v] = True
            size += 1
            for j in inc[v]:
                hits[j] += 1
                if hits[j] == 1:
                    e += 1
    hist[size][e] += 1

    for i in range(1, 1 << m):
        v = (i & -i).bit_length() - 1
        if member[v]:
            member[v] = False
            size -= 1
            for j in inc[v]:
                hits[j] -= 1
                if hits[j] == 0:
                    e -= 1
        else:
            member[v] = True
            size += 1
            for j in inc[v]:
                hits[j] += 1
                if hits[j] == 1:
                    e += 1
        hist[size][e] += 1

    # close the cycle and unpin; every counter must return to zero
    for v in range(n):
        if member[v]:
            for j in inc[v]:
                hits[j] -= 1
                if hits[j] == 0:
                    e -= 1
    if e != 0 or any(hits):
        raise RuntimeError("gray-code edge bookkeeping drifted")
    return np.array(hist, dtype=np.int64)


def independent_counts(n, closer_ptr, closer_masks):
    """Count independent sets by size via include/exclude backtracking.

    ``closer_masks[closer_ptr[v]:closer_ptr[v+1]]`` are, for each edge whose
    largest vertex is ``v``, the bitmask of its other vertices. Including
    ``v`` is forbidden when one of those masks is already fully chosen.
    """
    ptr = [int(x) for x in closer_ptr]
    masks = [int(x) for x in closer_masks]
    closers = [masks[ptr[v]:ptr[v + 1]] for v in range(n)]
    counts = [0] * (n + 1)

    def walk(v, cur, size):
        if v == n:
            counts[size] += 1
            return
        walk(v + 1, cur, size)
        for mk in closers[v]:
            if mk & cur == mk:
                return
        walk(v + 1, cur | (1 << v), size + 1)

    walk(0, 0, 0)
    return np.array(counts, dtype=np.int64)
