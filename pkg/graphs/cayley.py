import logging
from dataclasses import dataclass
from typing import Any, Dict, Tuple

import settings as st
from errors import RejectedInputError, ResourceCapError
from graphs.graph import FiniteGraph
from groups.finite import FiniteGroupTable, FiniteModel, make_finite
from groups.models import GroupElement, GroupModel


logger = logging.getLogger("lamplighter.graphs")


@dataclass(frozen=True, eq=False)
class CayleyBall:
    """
    Induced subgraph of Cay(G, S) on the ball of `radius` around `center`.
    Vertex order is BFS discovery order, generators scanned in order.
    """
    graph: FiniteGraph
    model: GroupModel
    center: Any
    radius: int
    elements: Tuple[Any, ...]
    index: Dict[Any, int]
    layers: Tuple[int, ...]

    def element_of(self, v: int) -> GroupElement:
        return GroupElement(self.model, self.elements[v])

    def vertex_of(self, g) -> int:
        payload = g.payload if isinstance(g, GroupElement) else g
        try:
            return self.index[payload]
        except KeyError:
            raise RejectedInputError(
                f"{self.model.format(payload)} is outside the ball of radius {self.radius}"
            ) from None

    def __contains__(self, g) -> bool:
        payload = g.payload if isinstance(g, GroupElement) else g
        return payload in self.index

    def __len__(self):
        return len(self.elements)


def cayley_ball(model: GroupModel, radius: int, center=None) -> CayleyBall:
    if radius < 0:
        raise RejectedInputError(f"radius must be >= 0, got {radius}")
    cap = st.vertex_cap()
    if center is None:
        center = model.identity
    elif isinstance(center, GroupElement):
        center = center.payload

    elements = [center]
    layers = [0]
    index = {center: 0}
    frontier = [center]
    for d in range(1, radius + 1):
        nxt = []
        for x in frontier:
            for s in model.gens:
                y = model.mul(x, s)
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    layers.append(d)
                    nxt.append(y)
                    if len(elements) > cap:
                        raise ResourceCapError(
                            f"ball of radius {radius} in {model.name} exceeds the vertex cap {cap} "
                            f"(set LAMPLIGHTER_CAP to raise it)",
                            cap_name='LAMPLIGHTER_CAP', cap=cap,
                        )
        if not nxt:
            break
        frontier = nxt

    edges = []
    for i, x in enumerate(elements):
        for s in model.gens:
            j = index.get(model.mul(x, s))
            if j is not None and j != i:
                edges.append((i, j))
    graph = FiniteGraph.from_edges(len(elements), edges, labels=elements)
    logger.debug("ball %s r=%d: %d vertices, %d edges", model.name, radius, len(elements), graph.edge_count)
    return CayleyBall(graph, model, center, radius, tuple(elements), index, tuple(layers))


def finite_cayley_graph(table, gens=None) -> FiniteGraph:
    """
    Cay(G, S) of a finite group: vertex i is element i, adjacent to mul[i][s].
    Accepts a FiniteModel, or a FiniteGroupTable with generator indices.
    """
    if isinstance(table, FiniteModel):
        model = table
    elif isinstance(table, FiniteGroupTable):
        model = make_finite(table, gens or [])
    else:
        raise RejectedInputError(f"expected a finite group, got {type(table).__name__}")
    mul = model.table.mul
    edges = [(x, mul[x][s]) for x in range(model.order) for s in model.gens]
    return FiniteGraph.from_edges(model.order, edges, labels=tuple(range(model.order)))
