import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import settings as st
from errors import RejectedInputError, ResourceCapError, VerificationError
from graphs.constructions import cube_graph, cube_index
from graphs.graph import FiniteGraph
from hamiltonian.paths import _backtrack, parity_allows
from tsp.exact import solve_exact
from tsp.instance import TspInstance


logger = logging.getLogger("lamplighter.hamiltonian")


@dataclass(frozen=True)
class SpanningWalk:
    """
    A walk visiting every vertex. `length` counts vertices, as Hamiltonicity
    bounds do; `edge_count` is what the TSP solvers count.
    """
    vertices: Tuple

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]


def check_spanning_walk(graph: FiniteGraph, walk: Sequence[int], s: int, t: int, bound: int = None):
    if not walk or walk[0] != s or walk[-1] != t:
        raise VerificationError(f"spanning walk must run from {s} to {t}")
    for a, b in zip(walk, walk[1:]):
        if not graph.has_edge(a, b):
            raise VerificationError(f"spanning walk step {graph.label(a)}->{graph.label(b)} is not an edge")
    if len(set(walk)) != graph.vertex_count:
        raise VerificationError(f"spanning walk covers {len(set(walk))} of {graph.vertex_count} vertices")
    if bound is not None and len(walk) > bound:
        raise VerificationError(f"spanning walk has {len(walk)} vertices, above {bound}")


def _exact(graph: FiniteGraph, s: int, t: int) -> Tuple[int, ...]:
    inst = TspInstance(graph, s, t, frozenset(range(graph.vertex_count)))
    return solve_exact(inst).walk


def _detours(graph: FiniteGraph, s: int, t: int):
    """
    (prefix, s2, t2, suffix) with a Hamiltonian s2-t2 path closing the walk,
    ordered by the number of extra vertices, at most two.
    """
    ds, dt = graph.bfs_distances(s), graph.bfs_distances(t)
    near_s = {d: [x for x in range(graph.vertex_count) if ds[x] == d] for d in (1, 2)}
    near_t = {d: [x for x in range(graph.vertex_count) if dt[x] == d] for d in (1, 2)}
    plans = [(0, 0, [s], [t])]
    plans += [(0, 1, [s], near_t[1]), (1, 0, near_s[1], [t])]
    plans += [(0, 2, [s], near_t[2]), (2, 0, near_s[2], [t]), (1, 1, near_s[1], near_t[1])]
    for _, _, heads, tails in plans:
        for s2 in heads:
            for t2 in tails:
                if s2 != t2:
                    yield graph.shortest_path(s, s2)[:-1], s2, t2, graph.shortest_path(t2, t)[1:]


def spanning_walk_ids(graph: FiniteGraph, s: int, t: int) -> Tuple[int, ...]:
    """
    Shortest spanning walk when the graph is small enough for the exact
    solver; otherwise a Hamiltonian path when one exists, else a Hamiltonian
    path between vertices at most two steps from s and t, padded to s and t.
    """
    n = graph.vertex_count
    if n <= st.EXACT_SPANNING_LIMIT:
        return _exact(graph, s, t)
    colour = graph.bipartition()
    budget = st.backtrack_budget()
    for prefix, s2, t2, suffix in _detours(graph, s, t):
        if colour is not None and not parity_allows(colour, s2, t2):
            continue
        try:
            path = _backtrack(graph, s2, t2, budget)
        except ResourceCapError:
            logger.warning("spanning walk %d->%d: budget exhausted for %d->%d", s, t, s2, t2)
            continue
        if path is not None:
            return tuple(prefix) + path + tuple(suffix)
    raise ResourceCapError(f"no spanning walk {s}->{t} with at most two extra vertices was found",
                           cap_name='LAMPLIGHTER_BACKTRACK_BUDGET', cap=budget)


def grid_spanning_path(m1: int, m2: int, s, t) -> SpanningWalk:
    """Spanning walk of Cube(m1, m2) from s to t (1-based coordinates), at most m1*m2 + 2 vertices."""
    if m1 < 2 or m2 < 2:
        raise RejectedInputError(f"grid sides must be >= 2, got {m1}x{m2}")
    dims = [m1, m2]
    graph = cube_graph(dims)
    si, ti = cube_index(dims, s), cube_index(dims, t)
    ids = spanning_walk_ids(graph, si, ti)
    check_spanning_walk(graph, ids, si, ti, m1 * m2 + 2)
    return SpanningWalk(tuple(graph.label(v) for v in ids))


# ####### FOLDING ########
#      ############
#         #####

def _snake(m: int, j: int, k: int) -> int:
    return (k - 1) * m + (j if k % 2 == 1 else m + 1 - j)


def _unsnake(m: int, h: int) -> Tuple[int, int]:
    k = (h - 1) // m + 1
    r = (h - 1) % m + 1
    return (r if k % 2 == 1 else m + 1 - r), k


def _fold_plan(dims: List[int]):
    folds = []
    while len(dims) > 2:
        m, k = dims[-2], dims[-1]
        folds.append(m)
        dims = dims[:-2] + [m * k]
    return dims, folds


def _fold(coords: Tuple[int, ...], folds) -> Tuple[int, ...]:
    for m in folds:
        coords = coords[:-2] + (_snake(m, coords[-2], coords[-1]),)
    return coords


def _unfold(coords: Tuple[int, ...], folds) -> Tuple[int, ...]:
    for m in reversed(folds):
        coords = coords[:-1] + _unsnake(m, coords[-1])
    return coords


def cube_spanning_path(dims: Sequence[int], s, t) -> SpanningWalk:
    """
    Spanning walk of Cube(dims) from s to t with at most |V| + 2 vertices.
    Small cubes are solved exactly; larger ones are folded by snake maps
    into a grid, which keep adjacency, and the grid walk is mapped back.
    """
    dims = [int(m) for m in dims]
    if any(m < 1 for m in dims):
        raise RejectedInputError(f"cube dimensions must be positive, got {dims}")
    s, t = tuple(s), tuple(t)
    if len(s) != len(dims) or len(t) != len(dims):
        raise RejectedInputError(f"endpoints must have {len(dims)} coordinates")
    live = [i for i, m in enumerate(dims) if m >= 2]
    if len(live) < 2:
        raise RejectedInputError(
            f"Cube{tuple(dims)} is a path; spanning walks of intervals are not bounded by |V| + M "
            f"(this is the (Z, {{+-1}}) case, use the refutation strategy)"
        )
    graph = cube_graph(dims)
    n = graph.vertex_count
    si, ti = cube_index(dims, s), cube_index(dims, t)

    if n <= st.EXACT_SPANNING_LIMIT:
        ids = _exact(graph, si, ti)
        walk = tuple(graph.label(v) for v in ids)
    else:
        flat, folds = _fold_plan([dims[i] for i in live])
        s_flat = _fold(tuple(s[i] for i in live), folds)
        t_flat = _fold(tuple(t[i] for i in live), folds)
        grid = grid_spanning_path(flat[0], flat[1], s_flat, t_flat)
        walk = []
        for c in grid.vertices:
            full = [1] * len(dims)
            for i, x in zip(live, _unfold(c, folds)):
                full[i] = x
            walk.append(tuple(full))
        walk = tuple(walk)
        ids = [cube_index(dims, c) for c in walk]
    check_spanning_walk(graph, ids, si, ti, n + 2)
    return SpanningWalk(walk)
