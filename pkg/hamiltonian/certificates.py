"""
Quasi-Hamiltonian certificates: finite sets F containing B(e, n) together
with spanning walks from e to every x in F of at most |F| + M vertices, and
excess tables that refute the property at desk scale for tree-shaped balls.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

import settings as st
from errors import RejectedInputError, VerificationError
from graphs.cayley import cayley_ball
from graphs.constructions import cube_vertices
from graphs.graph import FiniteGraph
from groups.abelian import AbelianModel
from groups.free import FreeModel
from groups.models import GroupModel
from hamiltonian.cube_power import cube3_hamiltonian_path
from hamiltonian.lattice import NashWilliamsBasis, nash_williams_basis
from hamiltonian.spanning import cube_spanning_path
from tsp.exact import solve_exact
from tsp.instance import TspInstance
from tsp.tree import ts_on_tree_graph


logger = logging.getLogger("lamplighter.hamiltonian")

DEFAULT_M = {'abelian': 2, 'generic': 1}


@dataclass
class QhWitness:
    n: int
    elements: Tuple[Any, ...]
    walks: Dict[Any, Tuple[Any, ...]]

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def excess(self) -> int:
        return max(len(w) for w in self.walks.values()) - self.size


@dataclass
class QhCertificate:
    model: GroupModel
    strategy: str
    M: int
    witnesses: List[QhWitness] = field(default_factory=list)
    step: int = 1       # walk steps have word length at most `step`

    @property
    def holds(self) -> bool:
        return all(w.excess <= self.M for w in self.witnesses)

    @property
    def achieved_M(self) -> int:
        return max((w.excess for w in self.witnesses), default=0)

    def check(self):
        """Replay every walk against the group law."""
        model = self.model
        e = model.identity
        for w in self.witnesses:
            members = set(w.elements)
            ball = cayley_ball(model, w.n * self.step)
            if e not in members or not set(ball.elements) <= members:
                raise VerificationError(f"n={w.n}: F does not contain the ball of radius {w.n}")
            for x in w.elements:
                walk = w.walks.get(x)
                if walk is None:
                    raise VerificationError(f"n={w.n}: no walk to {model.format(x)}")
                if walk[0] != e or walk[-1] != x:
                    raise VerificationError(f"n={w.n}: walk to {model.format(x)} has wrong endpoints")
                for a, b in zip(walk, walk[1:]):
                    if not 1 <= model.length(model.mul(model.inv(a), b)) <= self.step:
                        raise VerificationError(
                            f"n={w.n}: step {model.format(a)}->{model.format(b)} is not a generator step")
                if not members <= set(walk):
                    raise VerificationError(f"n={w.n}: walk to {model.format(x)} misses part of F")
                if not w.size <= len(walk) <= w.size + self.M:
                    raise VerificationError(
                        f"n={w.n}: walk to {model.format(x)} has {len(walk)} vertices, |F| = {w.size}, M = {self.M}")
        return True

    def to_dict(self) -> dict:
        fmt = self.model.format
        return {
            'group': self.model.name,
            'strategy': self.strategy,
            'M': self.M,
            'achieved_M': self.achieved_M,
            'step': self.step,
            'witnesses': [
                {
                    'n': w.n,
                    'size': w.size,
                    'excess': w.excess,
                    'F': [fmt(x) for x in w.elements],
                    'walks': [{'end': fmt(x), 'length': len(walk), 'walk': [fmt(y) for y in walk]}
                              for x, walk in w.walks.items()],
                }
                for w in self.witnesses
            ],
        }


@dataclass
class QhRefutation:
    model: GroupModel
    table: pd.DataFrame

    @property
    def growing(self) -> bool:
        excess = list(self.table['closed_excess'])
        return all(a < b for a, b in zip(excess, excess[1:]))

    def to_dict(self) -> dict:
        return {'group': self.model.name, 'strategy': 'refutation',
                'rows': self.table.to_dict(orient='records')}


# ####### ABELIAN ########
#      ############
#         #####

def _live_dims(basis: NashWilliamsBasis) -> int:
    return basis.rank + sum(1 for m in basis.m if m >= 2)


def abelian_basis(model: AbelianModel) -> NashWilliamsBasis:
    """First generator order whose box is not a single interval."""
    count = len(model.gens.representatives)
    for order in itertools.islice(itertools.permutations(range(count)), 720):
        basis = nash_williams_basis(model, order)
        if _live_dims(basis) >= 2:
            return basis
    raise RejectedInputError(
        f"{model.name} with generators {[model.format(g) for g in model.gens.representatives]} only yields "
        f"interval boxes; this is the (Z, {{+-1}}) case, use the refutation strategy"
    )


def _induced(model: GroupModel, elements) -> FiniteGraph:
    index = {x: i for i, x in enumerate(elements)}
    edges = [(i, index[model.mul(x, s)]) for i, x in enumerate(elements)
             for s in model.gens if model.mul(x, s) in index]
    return FiniteGraph.from_edges(len(elements), edges, labels=elements)


def _abelian_witness(model: AbelianModel, basis: NashWilliamsBasis, n: int) -> QhWitness:
    ball = cayley_ball(model, n)
    N = max([1] + [abs(p) for g in ball.elements for p in basis.coordinates(g)[0]])
    r = basis.rank
    torsion = [j for j, m in enumerate(basis.m) if m >= 2]
    dims = [2 * N + 1] * r + [basis.m[j] for j in torsion]

    def phi(c):
        q = [0] * len(basis.m)
        for j, x in zip(torsion, c[r:]):
            q[j] = x - 1
        return basis.element([x - N - 1 for x in c[:r]], q)

    coords = cube_vertices(dims)
    elements = tuple(phi(c) for c in coords)
    origin = tuple([N + 1] * r + [1] * len(torsion))
    walks = {}
    if len(elements) <= st.EXACT_SPANNING_LIMIT:
        graph = _induced(model, elements)
        e = elements.index(model.identity)
        everything = frozenset(range(len(elements)))
        for i, x in enumerate(elements):
            walk = solve_exact(TspInstance(graph, e, i, everything)).walk
            walks[x] = tuple(elements[v] for v in walk)
    else:
        for c, x in zip(coords, elements):
            walks[x] = tuple(phi(v) for v in cube_spanning_path(dims, origin, c).vertices)
    logger.debug("abelian witness n=%d: box %s, |F|=%d", n, dims, len(elements))
    return QhWitness(n, elements, walks)


# ####### GENERIC ########
#      ############
#         #####

def _generic_witness(model: GroupModel, n: int) -> QhWitness:
    ball = cayley_ball(model, 3 * n)
    graph = ball.graph
    walks = {}
    for x in range(graph.vertex_count):
        if x == 0:
            if graph.vertex_count == 1:
                path = (0,)
            else:
                path = cube3_hamiltonian_path(graph, 0, graph.neighbors(0)[0]) + (0,)
        else:
            path = cube3_hamiltonian_path(graph, 0, x)
        walks[ball.elements[x]] = tuple(ball.elements[v] for v in path)
    logger.debug("generic witness n=%d: |F|=%d", n, len(ball))
    return QhWitness(n, ball.elements, walks)


# ####### REFUTATION ########
#      ############
#         #####

def qh_refutation(model: GroupModel, n_max: int) -> QhRefutation:
    """
    Excess table for tree-shaped balls. closed_ts counts edges of the closed
    walk; closed_excess = closed_ts - |B_n|; the open excesses count vertices.
    """
    rows = []
    for n in range(1, n_max + 1):
        ball = cayley_ball(model, n)
        graph = ball.graph
        if not graph.is_tree():
            raise RejectedInputError(f"{model.name}: balls are not trees, the refutation table does not apply")
        everything = range(graph.vertex_count)
        size = graph.vertex_count
        opens = [ts_on_tree_graph(graph, 0, x, everything) + 1 - size for x in everything]
        closed = ts_on_tree_graph(graph, 0, 0, everything)
        rows.append({
            'n': n,
            'size': size,
            'closed_ts': closed,
            'closed_excess': closed - size,
            'worst_excess': max(opens),
            'best_excess': min(opens),
        })
    return QhRefutation(model, pd.DataFrame(rows, columns=['n', 'size', 'closed_ts', 'closed_excess',
                                                          'worst_excess', 'best_excess']))


def default_strategy(model: GroupModel) -> str:
    if isinstance(model, FreeModel):
        return 'refutation'
    if isinstance(model, AbelianModel) and model.rank >= 1:
        try:
            abelian_basis(model)
            return 'abelian'
        except RejectedInputError:
            return 'refutation'
    return 'generic'


def qh_certificate(model: GroupModel, n_max: int, M: Optional[int] = None, strategy: Optional[str] = None):
    """QhCertificate for the abelian and generic strategies, QhRefutation for `refutation`."""
    strategy = strategy or default_strategy(model)
    if strategy not in st.QH_STRATEGIES:
        raise RejectedInputError(f"unknown strategy {strategy!r}, expected one of {', '.join(st.QH_STRATEGIES)}")
    if n_max < 1:
        raise RejectedInputError(f"n_max must be >= 1, got {n_max}")
    if strategy == 'refutation':
        return qh_refutation(model, n_max)
    if model.is_finite:
        raise RejectedInputError(f"{model.name} is finite; quasi-Hamiltonian sequences concern infinite groups")

    M = DEFAULT_M[strategy] if M is None else M
    if strategy == 'abelian':
        if not isinstance(model, AbelianModel):
            raise RejectedInputError(f"the abelian strategy needs an abelian model, got {model.name}")
        basis = abelian_basis(model)
        cert = QhCertificate(model, strategy, M)
        cert.witnesses = [_abelian_witness(model, basis, n) for n in range(1, n_max + 1)]
    else:
        # walks in the presentation S u S^2 u S^3, whose n-ball is B_S(e, 3n)
        cert = QhCertificate(model, strategy, M, step=3)
        cert.witnesses = [_generic_witness(model, n) for n in range(1, n_max + 1)]
    logger.info("qh %s for %s: n <= %d, achieved M = %d", strategy, model.name, n_max, cert.achieved_M)
    return cert
