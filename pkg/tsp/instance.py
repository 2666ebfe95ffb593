from dataclasses import dataclass, field
from typing import FrozenSet, Mapping, Tuple

from errors import RejectedInputError, VerificationError
from graphs.graph import FiniteGraph


@dataclass(frozen=True, eq=False)
class TspInstance:
    """
    TS(start -> end; required) on `graph`. Lengths count edges; a required
    vertex additionally costs its service weight once.
    """
    graph: FiniteGraph
    start: int
    end: int
    required: FrozenSet[int]
    service_weight: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        n = self.graph.vertex_count
        object.__setattr__(self, 'required', frozenset(self.required))
        object.__setattr__(self, 'service_weight', dict(self.service_weight or {}))
        for v in (self.start, self.end, *self.required):
            if not 0 <= v < n:
                raise RejectedInputError(f"vertex {v} not in a graph of {n} vertices")
        for v, w in self.service_weight.items():
            if v not in self.required:
                raise RejectedInputError(f"service weight on vertex {v}, which is not required")
            if w < 0:
                raise RejectedInputError(f"negative service weight {w} on vertex {v}")
        if not self.graph.is_connected():
            raise RejectedInputError("TSP instance on a disconnected graph")

    @property
    def total_service(self) -> int:
        return sum(self.service_weight.get(v, 0) for v in self.required)


@dataclass(frozen=True)
class TspSolution:
    length: int
    walk: Tuple[int, ...]

    @property
    def edge_count(self) -> int:
        return len(self.walk) - 1


def validate_walk(inst: TspInstance, sol: TspSolution) -> TspSolution:
    """Structural replay of a solution: endpoints, adjacency, coverage, stated length."""
    walk = sol.walk
    if not walk or walk[0] != inst.start or walk[-1] != inst.end:
        raise VerificationError(f"walk must run from {inst.start} to {inst.end}")
    for a, b in zip(walk, walk[1:]):
        if not inst.graph.has_edge(a, b):
            raise VerificationError(f"walk step {a}->{b} is not an edge")
    missing = inst.required - set(walk)
    if missing:
        raise VerificationError(f"walk misses required vertices {sorted(missing)}")
    if sol.length != len(walk) - 1 + inst.total_service:
        raise VerificationError(f"stated length {sol.length} != {len(walk) - 1} edges + {inst.total_service}")
    return sol
