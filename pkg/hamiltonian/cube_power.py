import sys
from typing import Dict, List, Set, Tuple

import networkx as nx

from errors import RejectedInputError, VerificationError
from graphs.graph import FiniteGraph


Tree = Dict[int, Set[int]]


def _spanning_tree(g: FiniteGraph, root: int) -> Tree:
    bfs = nx.bfs_tree(g.to_networkx(), root)
    tree = {v: set() for v in range(g.vertex_count)}
    for a, b in bfs.edges():
        tree[a].add(b)
        tree[b].add(a)
    return tree


def _component(tree: Tree, start: int, cut: Tuple[int, int]) -> Set[int]:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in tree[x]:
            if {x, y} == set(cut) or y in seen:
                continue
            seen.add(y)
            stack.append(y)
    return seen


def _restrict(tree: Tree, part: Set[int]) -> Tree:
    return {v: tree[v] & part for v in part}


def _next_on_path(tree: Tree, u: int, v: int) -> int:
    parent = {v: v}
    stack = [v]
    while stack:
        x = stack.pop()
        for y in tree[x]:
            if y not in parent:
                parent[y] = x
                stack.append(y)
    return parent[u]


def _ham(tree: Tree, u: int, v: int) -> List[int]:
    """Path from u to v through every tree vertex, consecutive vertices at tree distance <= 3."""
    w = _next_on_path(tree, u, v)
    side_u = _restrict(tree, _component(tree, u, (u, w)))
    side_w = _restrict(tree, _component(tree, w, (u, w)))

    if len(side_u) == 1:
        first = [u]
    else:
        first = _ham(side_u, u, min(side_u[u]))

    if w != v:
        second = _ham(side_w, w, v)
    elif len(side_w) == 1:
        second = [v]
    else:
        second = _ham(side_w, min(side_w[v]), v)
    return first + second


def cube3_hamiltonian_path(g: FiniteGraph, u: int, v: int) -> Tuple[int, ...]:
    """
    Hamiltonian u-v path in the cube of g, built on a BFS spanning tree:
    cut the first edge (u, w) of the u-v tree path, cover u's side from u
    to a neighbour of u, then cover w's side ending at v.
    """
    n = g.vertex_count
    if u == v:
        raise RejectedInputError("Hamiltonian-connectedness concerns distinct endpoints")
    if not (0 <= u < n and 0 <= v < n):
        raise RejectedInputError(f"endpoints {u}, {v} not in a graph of {n} vertices")
    if not g.is_connected():
        raise RejectedInputError("the cube of a disconnected graph has no Hamiltonian path")
    tree = _spanning_tree(g, u)
    limit = sys.getrecursionlimit()
    if 2 * n + 50 > limit:
        sys.setrecursionlimit(2 * n + 50)
    try:
        path = tuple(_ham(tree, u, v))
    finally:
        sys.setrecursionlimit(limit)

    dist = g.distance_matrix
    if sorted(path) != list(range(n)) or path[0] != u or path[-1] != v:
        raise VerificationError("cube construction did not produce a Hamiltonian path")
    for a, b in zip(path, path[1:]):
        if dist[a, b] > 3:
            raise VerificationError(f"cube construction hop {a}->{b} has distance {dist[a, b]}")
    return path
