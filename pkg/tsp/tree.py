from collections import defaultdict
from typing import Iterable, Set, Tuple

from errors import RejectedInputError
from graphs.graph import FiniteGraph
from groups.free import FreeModel, tree_path_edges
from groups.models import GroupElement


def _payload(g):
    return g.payload if isinstance(g, GroupElement) else tuple(g)


def ts_tree(u, v, H: Iterable, model: FreeModel) -> int:
    """
    TS(u -> v; H) in the Cayley tree of a free group:
    2 |[u,H] \\ [u,v]| + |[u,v]|, where [u,H] is the union of geodesics from u.
    """
    if not isinstance(model, FreeModel):
        raise RejectedInputError(f"tree closed form needs a free group, got {model.name}")
    u, v = _payload(u), _payload(v)
    hull = set()
    for h in H:
        hull |= tree_path_edges(model, u, _payload(h))
    path = tree_path_edges(model, u, v)
    return 2 * len(hull - path) + len(path)


def _climb(parent, x: int, root: int) -> Set[frozenset]:
    edges = set()
    while x != root:
        edges.add(frozenset((x, parent[x])))
        x = parent[x]
    return edges


def ts_on_tree_graph(graph: FiniteGraph, u: int, v: int, required: Iterable[int]) -> int:
    """Same closed form on a finite graph that is a tree (e.g. a ball of a free group)."""
    if not graph.is_tree():
        raise RejectedInputError("closed form needs a tree")
    parent = graph.bfs_parents(u)
    hull = set()
    for r in required:
        hull |= _climb(parent, r, u)
    path = _climb(parent, v, u)
    return 2 * len(hull - path) + len(path)


def ts_tree_walk(u, v, H: Iterable, model: FreeModel) -> Tuple[Tuple[int, ...], ...]:
    """
    A walk realising `ts_tree`: depth-first over the hull, each branch off
    the u-v geodesic walked out and back, the geodesic child entered last.
    """
    if not isinstance(model, FreeModel):
        raise RejectedInputError(f"tree closed form needs a free group, got {model.name}")
    u, v = _payload(u), _payload(v)
    path = tree_path_edges(model, u, v)
    edges = set(path)
    for h in H:
        edges |= tree_path_edges(model, u, _payload(h))
    children = defaultdict(list)
    for edge in edges:
        a, b = sorted(edge, key=lambda x: model.length(model.mul(model.inv(u), x)))
        children[a].append(b)
    for a in children:
        children[a].sort(key=lambda b: (frozenset((a, b)) in path, b))

    walk = [u]
    stack = [(u, iter(children[u]))]
    while stack:
        x, todo = stack[-1]
        y = next(todo, None)
        if y is not None:
            walk.append(y)
            stack.append((y, iter(children[y])))
            continue
        stack.pop()
        if stack and frozenset((stack[-1][0], x)) not in path:
            walk.append(stack[-1][0])
    return tuple(walk)
