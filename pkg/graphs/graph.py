from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from errors import InternalError, RejectedInputError


@dataclass(frozen=True, eq=False)
class FiniteGraph:
    """
    Undirected simple graph on vertices 0..n-1 with sorted neighbour tuples.
    `labels[v]` is the group element payload or coordinate tuple of v.
    """
    adjacency: Tuple[Tuple[int, ...], ...]
    labels: Optional[Tuple[Any, ...]] = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]], labels=None) -> 'FiniteGraph':
        neigh = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                continue
            neigh[u].add(v)
            neigh[v].add(u)
        return cls(tuple(tuple(sorted(s)) for s in neigh), tuple(labels) if labels is not None else None)

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    def __len__(self):
        return len(self.adjacency)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def label(self, v: int):
        return self.labels[v] if self.labels is not None else v

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    @cached_property
    def _neighbor_sets(self):
        return [frozenset(nbrs) for nbrs in self.adjacency]

    @cached_property
    def neighbor_masks(self) -> Tuple[int, ...]:
        return tuple(sum(1 << w for w in nbrs) for nbrs in self.adjacency)

    # ####### DISTANCES ########

    @cached_property
    def nx_graph(self) -> nx.Graph:
        return self.to_networkx()

    def bfs_distances(self, source: int) -> List[int]:
        dist = [-1] * self.vertex_count
        for v, d in nx.single_source_shortest_path_length(self.nx_graph, source).items():
            dist[v] = d
        return dist

    def bfs_parents(self, source: int) -> List[int]:
        """Shortest-path tree; neighbours scanned in increasing order."""
        parent = [-1] * self.vertex_count
        parent[source] = source
        for v, p in nx.bfs_predecessors(self.nx_graph, source):
            parent[v] = p
        return parent

    def shortest_path(self, u: int, v: int) -> List[int]:
        try:
            return nx.shortest_path(self.nx_graph, u, v)
        except nx.NetworkXNoPath:
            raise RejectedInputError(f"no path between {u} and {v}") from None

    @cached_property
    def distance_matrix(self) -> np.ndarray:
        dist = np.full((self.vertex_count, self.vertex_count), -1, dtype=np.int64)
        for s, row in nx.all_pairs_shortest_path_length(self.nx_graph):
            for v, d in row.items():
                dist[s, v] = d
        return dist

    def is_connected(self) -> bool:
        return self.vertex_count == 0 or nx.is_connected(self.nx_graph)

    def diameter(self) -> int:
        if not self.is_connected():
            raise RejectedInputError("diameter of a disconnected graph")
        return int(self.distance_matrix.max()) if self.vertex_count else 0

    # ####### SHAPE ########

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges())
        return g

    def bipartition(self) -> Optional[Tuple[int, ...]]:
        """Colour 0/1 per vertex when bipartite and connected, else None."""
        g = self.nx_graph
        if not self.is_connected() or not nx.is_bipartite(g):
            return None
        colour = nx.bipartite.color(g)
        if colour[0] != 0:
            colour = {v: 1 - c for v, c in colour.items()}
        return tuple(colour[v] for v in range(self.vertex_count))

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def is_cycle(self) -> bool:
        return (self.vertex_count >= 3 and self.is_connected()
                and all(len(nbrs) == 2 for nbrs in self.adjacency))

    def is_tree(self) -> bool:
        return self.is_connected() and self.edge_count == self.vertex_count - 1

    def induced(self, vertices: Sequence[int]) -> Tuple['FiniteGraph', List[int]]:
        """Induced subgraph on `vertices` (kept in the given order) and the old->new map."""
        new = {v: i for i, v in enumerate(vertices)}
        adjacency = tuple(tuple(sorted(new[w] for w in self.adjacency[v] if w in new)) for v in vertices)
        labels = tuple(self.label(v) for v in vertices)
        return FiniteGraph(adjacency, labels), [new.get(v, -1) for v in range(self.vertex_count)]

    def check(self):
        """Symmetric, loop-free, duplicate-free adjacency."""
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise InternalError(f"vertex {v}: neighbours not sorted/unique")
            for w in nbrs:
                if w == v:
                    raise InternalError(f"vertex {v}: self-loop")
                if v not in self._neighbor_sets[w]:
                    raise InternalError(f"edge {v}-{w} is not symmetric")
        return True
