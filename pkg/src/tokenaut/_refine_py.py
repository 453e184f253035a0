"""Pure-Python equitable refinement kernel (fallback backend).

Mirrors tokenaut._refinecore exactly: for identical inputs both backends
must return identical cells and identical traces. Any change here must be
made in the compiled kernel as well; the test suite compares them.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence


class RefineKernel:
    """Coarsest equitable refinement over bitmask adjacency rows.

    refine(cells, active) splits cells by neighbour counts against a queue
    of splitter cells (seeded from ``active``) until stable. Fragments of a
    split cell replace it in place, ordered by ascending count, and every
    fragment is queued as a future splitter; splitting against a stale
    splitter snapshot is harmless because count uniformity against each
    fragment implies uniformity against their union.

    Returns (cells, trace). The trace records each split event as
    (cell index, fragment count, then (count, size) per fragment), a -1
    marker after each drained splitter, then -2 and the final cell sizes.
    Traces are equivariant: relabeling the graph and the input cells by a
    permutation yields the identical trace.
    """

    backend = "pure"

    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = tuple(adj)

    def refine(self, cells, active):
        n = self.n
        adj = self.adj
        cells = [list(c) for c in cells]
        queue = deque()
        for i in active:
            m = 0
            for v in cells[i]:
                m |= 1 << v
            queue.append(m)
        trace = []
        while queue:
            if len(cells) == n:
                break
            splitter = queue.popleft()
            j = 0
            while j < len(cells):
                cell = cells[j]
                if len(cell) > 1:
                    counts: dict[int, list[int]] = {}
                    for v in cell:
                        c = (adj[v] & splitter).bit_count()
                        counts.setdefault(c, []).append(v)
                    if len(counts) > 1:
                        keys = sorted(counts)
                        frags = [counts[c] for c in keys]
                        cells[j:j + 1] = frags
                        trace.append(j)
                        trace.append(len(frags))
                        for c in keys:
                            trace.append(c)
                            trace.append(len(counts[c]))
                        for f in frags:
                            m = 0
                            for v in f:
                                m |= 1 << v
                            queue.append(m)
                        j += len(frags) - 1
                j += 1
            trace.append(-1)
        trace.append(-2)
        for cell in cells:
            trace.append(len(cell))
        return cells, tuple(trace)
