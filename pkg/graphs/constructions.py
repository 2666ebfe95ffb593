import itertools
from typing import Sequence

from errors import RejectedInputError
from graphs.graph import FiniteGraph


def path_graph(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)], labels=range(n))


def cycle_graph(n: int) -> FiniteGraph:
    if n < 3:
        raise RejectedInputError(f"cycle needs at least 3 vertices, got {n}")
    return FiniteGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], labels=range(n))


def complete_graph(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(n, itertools.combinations(range(n), 2), labels=range(n))


def power_graph(g: FiniteGraph, k: int) -> FiniteGraph:
    """Same vertices, u ~ v iff 1 <= d(u, v) <= k."""
    if k < 1:
        raise RejectedInputError(f"power must be >= 1, got {k}")
    if not g.is_connected():
        raise RejectedInputError("power graph of a disconnected graph")
    dist = g.distance_matrix
    n = g.vertex_count
    adjacency = tuple(tuple(int(w) for w in range(n) if 1 <= dist[v, w] <= k) for v in range(n))
    return FiniteGraph(adjacency, g.labels)


def product_graph(g1: FiniteGraph, g2: FiniteGraph) -> FiniteGraph:
    """
    Vertex (a, b) is a * |V2| + b; edges move in exactly one coordinate.
    Labels are pairs of factor labels.
    """
    n1, n2 = g1.vertex_count, g2.vertex_count
    edges = []
    for a in range(n1):
        for b in range(n2):
            v = a * n2 + b
            edges.extend((v, a * n2 + c) for c in g2.neighbors(b))
            edges.extend((v, c * n2 + b) for c in g1.neighbors(a))
    labels = [(g1.label(a), g2.label(b)) for a in range(n1) for b in range(n2)]
    return FiniteGraph.from_edges(n1 * n2, edges, labels=labels)


def cube_vertices(dims: Sequence[int]):
    """Coordinates of Cube(dims) in vertex order: 1-based, first coordinate most significant."""
    return list(itertools.product(*[range(1, m + 1) for m in dims]))


def cube_index(dims: Sequence[int], coords: Sequence[int]) -> int:
    index = 0
    for c, m in zip(coords, dims):
        if not 1 <= c <= m:
            raise RejectedInputError(f"coordinate {tuple(coords)} outside Cube{tuple(dims)}")
        index = index * m + (c - 1)
    return index


def cube_graph(dims: Sequence[int]) -> FiniteGraph:
    """Cube(m_1, ..., m_s) = I_{m_1} x ... x I_{m_s}, labelled by coordinate tuples."""
    dims = [int(m) for m in dims]
    if not dims or any(m < 1 for m in dims):
        raise RejectedInputError(f"cube dimensions must be positive, got {dims}")
    vertices = cube_vertices(dims)
    edges = []
    for v, coords in enumerate(vertices):
        for axis, m in enumerate(dims):
            if coords[axis] < m:
                nxt = coords[:axis] + (coords[axis] + 1,) + coords[axis + 1:]
                edges.append((v, cube_index(dims, nxt)))
    return FiniteGraph.from_edges(len(vertices), edges, labels=vertices)


def grid_graph(m1: int, m2: int) -> FiniteGraph:
    return cube_graph([m1, m2])
