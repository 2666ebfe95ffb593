import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import settings as st
from errors import RejectedInputError, ResourceCapError, VerificationError
from graphs.graph import FiniteGraph


logger = logging.getLogger("lamplighter.hamiltonian")

Path = Tuple[int, ...]


@dataclass
class HamiltonicityReport:
    vertex_count: int
    has_hamiltonian_cycle: bool
    hamiltonian_connected: bool
    bipartite: bool
    hamiltonian_laceable: Optional[bool]     # None unless bipartite
    is_cycle: bool = False
    witnesses: Dict[Tuple[int, int], Optional[Path]] = field(default_factory=dict)

    def check(self):
        if self.vertex_count >= 3 and self.hamiltonian_connected:
            if not self.has_hamiltonian_cycle or self.bipartite:
                raise VerificationError("Hamiltonian-connected graph must have a cycle and an odd cycle")
        if self.hamiltonian_laceable is not None and not self.bipartite:
            raise VerificationError("laceability decided on a non-bipartite graph")
        return True


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def parity_allows(colour: Sequence[int], s: int, t: int) -> bool:
    """Colour-count condition for a Hamiltonian s-t path in a bipartite graph."""
    n = len(colour)
    if s == t:
        return n == 1
    white = colour.count(0)
    black = n - white
    if white == black:
        return colour[s] != colour[t]
    if abs(white - black) != 1:
        return False
    major = 0 if white > black else 1
    return colour[s] == colour[t] == major


# ####### SUBSET DP ########
#      ############
#         #####

def _endpoint_layers(graph: FiniteGraph, source: int) -> List[Dict[int, int]]:
    """
    layers[k][mask] = bitmask of vertices w such that some path from source
    visits exactly `mask` (k + 1 vertices) and ends at w.
    """
    nbr = graph.neighbor_masks
    layer = {1 << source: 1 << source}
    layers = [layer]
    for _ in range(graph.vertex_count - 1):
        nxt = defaultdict(int)
        for mask, ends in layer.items():
            reach = 0
            for w in _bits(ends):
                reach |= nbr[w]
            for x in _bits(reach & ~mask):
                nxt[mask | (1 << x)] |= 1 << x
        if not nxt:
            break
        layer = dict(nxt)
        layers.append(layer)
    return layers


def _rebuild(graph: FiniteGraph, layers, source: int, target: int) -> Path:
    nbr = graph.neighbor_masks
    mask = (1 << graph.vertex_count) - 1
    path = [target]
    cur = target
    while mask != 1 << source:
        prev = mask ^ (1 << cur)
        options = layers[bin(prev).count('1') - 1].get(prev, 0) & nbr[cur]
        cur = next(_bits(options))
        path.append(cur)
        mask = prev
    return tuple(reversed(path))


def _full_ends(graph: FiniteGraph, layers) -> int:
    if len(layers) < graph.vertex_count:
        return 0
    return layers[-1].get((1 << graph.vertex_count) - 1, 0)


# ####### BACKTRACKING ########
#      ############
#         #####

def _connected(mask: int, nbr, start: int) -> bool:
    seen = frontier = 1 << start
    while frontier:
        w = next(_bits(frontier))
        frontier ^= 1 << w
        new = nbr[w] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


def _backtrack(graph: FiniteGraph, s: int, t: int, budget: int) -> Optional[Path]:
    """
    Depth-first search with Warnsdorff ordering, pruned by connectivity of
    the unvisited part and by degrees inside it.
    """
    nbr = graph.neighbor_masks
    n = graph.vertex_count
    full = (1 << n) - 1
    path = [s]
    nodes = 0

    def feasible(visited, cur):
        rest = (full & ~visited) | (1 << cur)
        if not _connected(rest, nbr, cur):
            return False
        for w in _bits(full & ~visited):
            need = 1 if w == t else 2
            if bin(nbr[w] & rest).count('1') < need:
                return False
        return True

    def extend(cur, visited):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise ResourceCapError(
                f"Hamiltonian search exceeded the backtracking budget {budget} "
                f"(set LAMPLIGHTER_BACKTRACK_BUDGET to raise it)",
                cap_name='LAMPLIGHTER_BACKTRACK_BUDGET', cap=budget,
            )
        if visited == full:
            return cur == t
        if cur == t or not feasible(visited, cur):
            return False
        unvisited = full & ~visited
        options = sorted(_bits(nbr[cur] & unvisited),
                         key=lambda x: (bin(nbr[x] & unvisited).count('1'), x))
        for x in options:
            if x == t and visited | (1 << x) != full:
                continue
            path.append(x)
            if extend(x, visited | (1 << x)):
                return True
            path.pop()
        return False

    found = extend(s, 1 << s)
    logger.debug("backtracking %d->%d on %d vertices: %d nodes, found=%s", s, t, n, nodes, found)
    return tuple(path) if found else None


def _search(graph: FiniteGraph, u: int, v: int, budget: Optional[int] = None) -> Optional[Path]:
    n = graph.vertex_count
    if n <= st.HAMILTONIAN_DP_LIMIT:
        layers = _endpoint_layers(graph, u)
        if not (_full_ends(graph, layers) >> v) & 1:
            return None
        return _rebuild(graph, layers, u, v)
    return _backtrack(graph, u, v, budget if budget is not None else st.backtrack_budget())


def hamiltonian_path(g: FiniteGraph, u: int, v: int) -> Optional[Path]:
    """A Hamiltonian u-v path, or None when there is none."""
    n = g.vertex_count
    if n > st.BACKTRACK_LIMIT:
        raise ResourceCapError(
            f"Hamiltonian path search on {n} vertices exceeds the limit {st.BACKTRACK_LIMIT}",
            cap_name='BACKTRACK_LIMIT', cap=st.BACKTRACK_LIMIT,
        )
    if not (0 <= u < n and 0 <= v < n):
        raise RejectedInputError(f"endpoints {u}, {v} not in a graph of {n} vertices")
    if u == v:
        return (u,) if n == 1 else None
    if not g.is_connected():
        return None
    colour = g.bipartition()
    if colour is not None and not parity_allows(colour, u, v):
        return None
    return _search(g, u, v)


def analyze(g: FiniteGraph, sources: Optional[Sequence[int]] = None) -> HamiltonicityReport:
    """
    All-pairs Hamiltonicity by one subset DP per source vertex. For a
    vertex-transitive graph (any finite Cayley graph) a single source decides
    every pair, so callers may pass `sources=[0]`.
    """
    n = g.vertex_count
    if n > st.HAMILTONIAN_DP_LIMIT:
        raise ResourceCapError(
            f"all-pairs Hamiltonicity on {n} vertices exceeds the limit {st.HAMILTONIAN_DP_LIMIT}",
            cap_name='HAMILTONIAN_DP_LIMIT', cap=st.HAMILTONIAN_DP_LIMIT,
        )
    sources = list(range(n)) if sources is None else list(sources)
    colour = g.bipartition()
    connected = g.is_connected()

    witnesses: Dict[Tuple[int, int], Optional[Path]] = {}
    has_cycle = False
    for s in sources:
        layers = _endpoint_layers(g, s) if connected else []
        ends = _full_ends(g, layers) if connected else 0
        for t in range(n):
            if t == s:
                continue
            witnesses[(s, t)] = _rebuild(g, layers, s, t) if (ends >> t) & 1 else None
        if n >= 3 and ends & g.neighbor_masks[s]:
            has_cycle = True

    pairs = witnesses.items()
    connected_all = n >= 1 and connected and all(p is not None for _, p in pairs)
    laceable = None
    if colour is not None:
        laceable = all(p is not None for (s, t), p in pairs if colour[s] != colour[t])
    report = HamiltonicityReport(
        vertex_count=n,
        has_hamiltonian_cycle=has_cycle,
        hamiltonian_connected=connected_all,
        bipartite=colour is not None,
        hamiltonian_laceable=laceable,
        is_cycle=g.is_cycle(),
        witnesses=witnesses,
    )
    logger.debug("analyze: n=%d cycle=%s connected=%s bipartite=%s laceable=%s",
                 n, has_cycle, connected_all, report.bipartite, laceable)
    report.check()
    return report
