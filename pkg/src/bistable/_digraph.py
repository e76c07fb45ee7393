"""Iterative Tarjan SCC and a deterministic topological order of the condensation."""
from __future__ import annotations

import heapq
from typing import Sequence


def strongly_connected_components(succ: Sequence[Sequence[int]]) -> list[int]:
    """Component id of every node of the digraph ``succ`` (nodes ``0..n-1``).

    Ids are assigned in the order Tarjan's algorithm completes components,
    which is a reverse topological order of the condensation.
    """
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    n_comp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, k = work[-1]
            if k < len(succ[v]):
                work[-1] = (v, k + 1)
                w = succ[v][k]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comp
                    if w == v:
                        break
                n_comp += 1
    return comp


def ordered_components(succ: Sequence[Sequence[int]]) -> list[list[int]]:
    """SCCs in topological order (every arc points forward or stays inside).

    Among components that are ready at the same time, the one holding the
    smallest node comes first.  Nodes inside a component are ascending.
    """
    comp = strongly_connected_components(succ)
    k = max(comp, default=-1) + 1
    members: list[list[int]] = [[] for _ in range(k)]
    for v, c in enumerate(comp):
        members[c].append(v)
    indeg = [0] * k
    out: list[set[int]] = [set() for _ in range(k)]
    for v, ws in enumerate(succ):
        for w in ws:
            cv, cw = comp[v], comp[w]
            if cv != cw and cw not in out[cv]:
                out[cv].add(cw)
                indeg[cw] += 1
    ready = [(members[c][0], c) for c in range(k) if indeg[c] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        _, c = heapq.heappop(ready)
        order.append(members[c])
        for d in out[c]:
            indeg[d] -= 1
            if indeg[d] == 0:
                heapq.heappush(ready, (members[d][0], d))
    return order
