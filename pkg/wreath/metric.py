"""
Word length in A wr B with respect to S_A u S_B:

    |(f, x)| = sum over y in supp f of |f(y)|_A  +  TS(e -> x; supp f)

where TS is the shortest walk in Cay(B, S_B) from e to x visiting the
support. The TS term is computed by one of the backends below; all but
`generic` are exact.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

import settings as st
from errors import RejectedInputError
from graphs.cayley import CayleyBall, cayley_ball
from graphs.graph import FiniteGraph
from groups.abelian import AbelianModel
from groups.free import FreeModel
from groups.free_product import FreeProductModel
from groups.models import GroupModel
from tsp.exact import solve_exact
from tsp.instance import TspInstance
from tsp.petals import ts_free_product, ts_free_product_walk
from tsp.tree import ts_tree, ts_tree_walk
from wreath.elements import Lamplighter, State, WreathElement


logger = logging.getLogger("lamplighter.wreath")

EXACT = {'tree': True, 'petal': True, 'box': True, 'finite': True, 'generic': False}


@dataclass(frozen=True)
class MetricBackend:
    strategy: str
    exact: bool
    slack: int = 0      # generic only: ball radius beyond the farthest required vertex


def _compatible(base: GroupModel, strategy: str) -> bool:
    if strategy == 'tree':
        return isinstance(base, FreeModel)
    if strategy == 'petal':
        return isinstance(base, FreeProductModel)
    if strategy == 'box':
        return isinstance(base, AbelianModel) and base.standard and base.rank >= 1
    if strategy == 'finite':
        return base.is_finite
    return strategy == 'generic'


def choose_backend(base: GroupModel, name: str = 'auto', slack: int = st.DEFAULT_GENERIC_SLACK) -> MetricBackend:
    if name not in st.BACKENDS:
        raise RejectedInputError(f"unknown backend {name!r}, expected one of {', '.join(st.BACKENDS)}")
    if name == 'auto':
        name = next(s for s in ('tree', 'petal', 'box', 'finite', 'generic') if _compatible(base, s))
    elif not _compatible(base, name):
        raise RejectedInputError(f"backend {name!r} does not apply to {base.name}")
    return MetricBackend(name, EXACT[name], slack if name == 'generic' else 0)


class WordMetric:
    """
    Memoised word length for one lamplighter and backend. The memo maps a
    state to its length and only ever receives exact values or, for the
    generic backend, the same upper bound for the same state.
    """

    def __init__(self, group: Lamplighter, backend: Optional[MetricBackend] = None):
        self.group = group
        self.backend = backend or choose_backend(group.base)
        if not _compatible(group.base, self.backend.strategy):
            raise RejectedInputError(f"backend {self.backend.strategy!r} does not apply to {group.base.name}")
        self.memo: Dict[State, int] = {}
        self._boxes: Dict[Tuple, CayleyBall] = {}
        self._whole: Optional[CayleyBall] = None

    @property
    def exact(self) -> bool:
        return self.backend.exact

    def lamp_cost(self, state: State) -> int:
        A = self.group.lamps
        return sum(A.length(v) for _, v in state[0])

    def length(self, state: State) -> int:
        value = self.memo.get(state)
        if value is None:
            value = self.lamp_cost(state) + self.ts(tuple(y for y, _ in state[0]), state[1])
            self.memo[state] = value
        return value

    # ####### TS TERM ########
    #      ############
    #         #####

    def ts(self, support: Sequence, x) -> int:
        B = self.group.base
        strategy = self.backend.strategy
        if strategy == 'tree':
            return ts_tree(B.identity, x, support, B)
        if strategy == 'petal':
            return ts_free_product(B, B.identity, x, support)
        ball = self.substrate(support, x)
        return self._solve(ball, support, x).length

    def substrate(self, support: Sequence, x) -> CayleyBall:
        """Finite part of Cay(B) on which the TS walk is searched."""
        B = self.group.base
        strategy = self.backend.strategy
        points = list(support) + [B.identity, x]
        if strategy == 'box':
            return self._box(points)
        if strategy == 'finite':
            if self._whole is None:
                self._whole = cayley_ball(B, B.order)
            return self._whole
        radius = max(B.length(p) for p in points)
        return cayley_ball(B, radius + self.backend.slack)

    def _box(self, points) -> CayleyBall:
        """Bounding box of the points on the free coordinates, whole cycles on the torsion ones."""
        B = self.group.base
        r = B.rank
        lo = tuple(min(p[i] for p in points) for i in range(r))
        hi = tuple(max(p[i] for p in points) for i in range(r))
        key = (lo, hi)
        if key not in self._boxes:
            ranges = [range(a, b + 1) for a, b in zip(lo, hi)] + [range(m) for m in B.moduli]
            elements = tuple(tuple(c) for c in itertools.product(*ranges))
            index = {x: i for i, x in enumerate(elements)}
            edges = []
            for i, x in enumerate(elements):
                for s in B.gens:
                    j = index.get(B.mul(x, s))
                    if j is not None and j != i:
                        edges.append((i, j))
            graph = FiniteGraph.from_edges(len(elements), edges, labels=elements)
            diameter = sum(b - a for a, b in zip(lo, hi)) + sum(m // 2 for m in B.moduli)
            self._boxes[key] = CayleyBall(graph, B, B.identity, diameter, elements, index, ())
            logger.debug("box %s..%s over %s: %d vertices", lo, hi, B.name, len(elements))
        return self._boxes[key]

    def _solve(self, ball: CayleyBall, support, x):
        inst = TspInstance(ball.graph, ball.vertex_of(self.group.base.identity), ball.vertex_of(x),
                           frozenset(ball.vertex_of(y) for y in support))
        return solve_exact(inst)

    def ts_walk(self, state: State) -> Tuple[Any, ...]:
        """A shortest e -> x walk through the support, as base payloads."""
        B = self.group.base
        support, x = tuple(y for y, _ in state[0]), state[1]
        if self.backend.strategy == 'tree':
            return ts_tree_walk(B.identity, x, support, B)
        if self.backend.strategy == 'petal':
            return ts_free_product_walk(B, B.identity, x, support)[1]
        ball = self.substrate(support, x)
        return tuple(ball.elements[v] for v in self._solve(ball, support, x).walk)


def word_length(g: WreathElement, backend: Optional[MetricBackend] = None) -> Tuple[int, bool]:
    """(length, exact); `exact` is False only for the generic backend, whose value is an upper bound."""
    metric = WordMetric(g.group, backend)
    return metric.length(g.state), metric.exact
