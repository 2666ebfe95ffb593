import logging
from typing import List

import numpy as np

import settings as st
from errors import InternalError, RejectedInputError, ResourceCapError
from tsp.instance import TspInstance, TspSolution


logger = logging.getLogger("lamplighter.tsp")

_INF = np.int32(1 << 29)


def _popcounts(size: int) -> np.ndarray:
    masks = np.arange(size, dtype=np.int64)
    counts = np.zeros(size, dtype=np.int8)
    bits = max(size - 1, 0).bit_length()
    for b in range(bits):
        counts += ((masks >> b) & 1).astype(np.int8)
    return counts


def _stitch(inst: TspInstance, stops: List[int]) -> tuple:
    walk = [stops[0]]
    for a, b in zip(stops, stops[1:]):
        walk.extend(inst.graph.shortest_path(a, b)[1:])
    return tuple(walk)


def solve_exact(inst: TspInstance) -> TspSolution:
    """
    Held-Karp over the required vertices with shortest-path distances between them.

    dp[mask, j] is the cheapest walk from `start` covering the terminals in `mask`
    and standing at terminal j. Layers of equal popcount are relaxed together.
    Ties go to the smallest terminal index, so the walk is deterministic.
    """
    if len(inst.required) > st.MAX_REQUIRED:
        raise ResourceCapError(
            f"{len(inst.required)} required vertices exceed the exact solver limit {st.MAX_REQUIRED}",
            cap_name='MAX_REQUIRED', cap=st.MAX_REQUIRED,
        )
    graph = inst.graph
    terminals = sorted(v for v in inst.required if v not in (inst.start, inst.end))
    k = len(terminals)

    from_start = graph.bfs_distances(inst.start)
    unreachable = [v for v in [inst.end, *terminals] if from_start[v] < 0]
    if unreachable:
        raise RejectedInputError(f"vertices {unreachable} unreachable from {inst.start}")

    if k == 0:
        walk = tuple(graph.shortest_path(inst.start, inst.end))
        return TspSolution(len(walk) - 1 + inst.total_service, walk)

    rows = [graph.bfs_distances(t) for t in terminals]
    between = np.array([[row[t] for t in terminals] for row in rows], dtype=np.int32)
    to_end = np.array([row[inst.end] for row in rows], dtype=np.int32)
    start_to = np.array([from_start[t] for t in terminals], dtype=np.int32)

    size = 1 << k
    dp = np.full((size, k), _INF, dtype=np.int32)
    for j in range(k):
        dp[1 << j, j] = start_to[j]

    counts = _popcounts(size)
    masks = np.arange(size, dtype=np.int64)
    for layer_size in range(2, k + 1):
        layer = masks[counts == layer_size]
        for j in range(k):
            sel = layer[((layer >> j) & 1) == 1]
            prev = sel ^ (1 << j)
            dp[sel, j] = (dp[prev] + between[:, j]).min(axis=1)

    full = size - 1
    totals = dp[full] + to_end
    last = int(np.argmin(totals))
    edges = int(totals[last])

    order = [last]
    mask = full
    while mask != (1 << order[-1]):
        cur = order[-1]
        prev = mask ^ (1 << cur)
        target = dp[mask, cur]
        for i in range(k):
            if (prev >> i) & 1 and dp[prev, i] + between[i, cur] == target:
                order.append(i)
                break
        mask = prev
    order.reverse()

    walk = _stitch(inst, [inst.start] + [terminals[i] for i in order] + [inst.end])
    if len(walk) - 1 != edges:
        raise InternalError(f"walk reconstruction gave {len(walk) - 1} edges, expected {edges}")
    logger.debug("held-karp: %d terminals, %d edges", k, edges)
    return TspSolution(edges + inst.total_service, walk)
