from typing import Dict, Tuple

from errors import BoundExceededError
from tsp.instance import TspInstance, TspSolution


def brute_force_oracle(inst: TspInstance, max_len: int) -> TspSolution:
    """
    Exhaustive walk search, layer by layer in the number of edges.
    Walks with the same endpoint and the same covered set are merged, so the
    first layer holding (end, everything) gives the optimum.
    """
    required = sorted(inst.required)
    bit = {v: 1 << i for i, v in enumerate(required)}
    full = (1 << len(required)) - 1
    graph = inst.graph

    origin = (inst.start, bit.get(inst.start, 0))
    parent: Dict[Tuple[int, int], Tuple[int, int]] = {origin: origin}
    frontier = [origin]
    for step in range(max_len + 1):
        goal = (inst.end, full)
        if goal in parent:
            walk = [goal]
            while walk[-1] != origin:
                walk.append(parent[walk[-1]])
            return TspSolution(step + inst.total_service, tuple(v for v, _ in reversed(walk)))
        nxt = []
        for v, mask in frontier:
            for w in graph.neighbors(v):
                state = (w, mask | bit.get(w, 0))
                if state not in parent:
                    parent[state] = (v, mask)
                    nxt.append(state)
        if not nxt:
            break
        frontier = nxt
    raise BoundExceededError(max_len)
