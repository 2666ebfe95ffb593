"""
TS over free products of two finite groups.

The Cayley graph of H*K is a tree of factor copies. Removing the edges of
one copy splits the graph into petals, one hanging off each vertex of the
copy. A walk serving a petal enters and leaves it through its attachment
vertex, so its cost there is a closed excursion computed recursively, and
the copy itself becomes a node-weighted TSP on the factor's Cayley graph.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, FrozenSet, Iterable, Tuple

from errors import InternalError, RejectedInputError
from graphs.cayley import finite_cayley_graph
from graphs.graph import FiniteGraph
from groups.finite import FiniteModel
from groups.free_product import FreeProductModel
from groups.models import GroupElement
from tsp.exact import solve_exact
from tsp.instance import TspInstance


logger = logging.getLogger("lamplighter.tsp")


@dataclass(frozen=True)
class Petal:
    index: int          # factor element h; the petal hangs off base * h
    attachment: Any
    support: FrozenSet[Any]


@dataclass(frozen=True)
class PetalDecomposition:
    model: FreeProductModel
    factor: int
    base: Any           # vertex of the copy playing the factor identity
    petals: Tuple[Petal, ...]

    def petal_of(self, x) -> int:
        """Index of the petal containing payload x."""
        z = self.model.mul(self.model.inv(self.base), x)
        if z and z[0][0] == self.factor:
            return z[0][1]
        return self.model.factors[self.factor].identity


def _payload(g):
    return g.payload if isinstance(g, GroupElement) else g


def _check_model(model):
    if not isinstance(model, FreeProductModel):
        raise RejectedInputError(f"petal recursion needs a free product of finite groups, got {model.name}")


def petal_decomposition(model: FreeProductModel, copy_anchor, support: Iterable, factor: int = 0) -> PetalDecomposition:
    """
    Petals of the `factor` copy through `copy_anchor`, indexed by factor
    element. The petal at the factor identity always contains e.
    """
    _check_model(model)
    if factor not in (0, 1):
        raise RejectedInputError(f"factor must be 0 or 1, got {factor}")
    anchor = _payload(copy_anchor)
    base = anchor[:-1] if anchor and anchor[-1][0] == factor else anchor
    table = model.factors[factor].table

    groups = defaultdict(set)
    decomposition = PetalDecomposition(model, factor, base, ())
    for y in support:
        y = _payload(y)
        groups[decomposition.petal_of(y)].add(y)

    petals = tuple(
        Petal(h, model.mul(base, model.letter(factor, h)), frozenset(groups.get(h, ())))
        for h in range(table.order)
    )
    return PetalDecomposition(model, factor, base, petals)


@lru_cache(maxsize=None)
def _factor_graph(factor: FiniteModel) -> FiniteGraph:
    return finite_cayley_graph(factor)


class _PetalSolver:
    """
    Works in coordinates relative to the walk's start: a required vertex is
    the normal form z with start * z = vertex. Closed-excursion costs are
    memoised by (factor, required forms) for one call.
    """

    def __init__(self, model: FreeProductModel, depth_limit: int):
        self.model = model
        self.depth_limit = depth_limit
        self.memo: Dict[Tuple[int, FrozenSet], int] = {}

    def _guard(self, depth):
        if depth > self.depth_limit:
            raise InternalError(f"petal recursion deeper than {self.depth_limit}: malformed support")

    @staticmethod
    def _split(forms, f):
        groups = defaultdict(set)
        for z in forms:
            if z and z[0][0] == f:
                groups[z[0][1]].add(z[1:])
        return groups

    def _copy_tsp(self, f, end, weights) -> int:
        factor = self.model.factors[f]
        required = set(weights)
        if end != factor.identity:
            required.add(end)
        inst = TspInstance(_factor_graph(factor), factor.identity, end, frozenset(required),
                           {h: w for h, w in weights.items() if w})
        return solve_exact(inst).length

    def _weights(self, groups, f, depth, skip=None):
        return {h: self.closed(1 - f, frozenset(rest - {()}), depth + 1)
                for h, rest in groups.items() if h != skip}

    def closed(self, f, forms: FrozenSet, depth: int) -> int:
        """Closed walk from the current vertex serving the forms that start in factor f."""
        self._guard(depth)
        relevant = frozenset(z for z in forms if z and z[0][0] == f)
        if not relevant:
            return 0
        key = (f, relevant)
        if key not in self.memo:
            groups = self._split(relevant, f)
            self.memo[key] = self._copy_tsp(f, self.model.factors[f].identity,
                                            self._weights(groups, f, depth))
        return self.memo[key]

    def path(self, target, forms: FrozenSet, depth: int) -> int:
        """Walk from the current vertex to `target` (relative) serving `forms`."""
        self._guard(depth)
        if not target:
            return self.closed(0, forms, depth) + self.closed(1, forms, depth)
        f, h1 = target[0]
        groups = self._split(forms, f)
        other = self.closed(1 - f, forms, depth)
        segment = self._copy_tsp(f, h1, self._weights(groups, f, depth, skip=h1))
        onward = frozenset(groups.get(h1, ()))
        return other + segment + self.path(target[1:], onward, depth + 1)

    # walks mirror closed/path; vertices are absolute payloads
    def _copy_walk(self, f, end, groups, at, depth, skip=None):
        factor = self.model.factors[f]
        weights = self._weights(groups, f, depth, skip)
        required = set(weights)
        if end != factor.identity:
            required.add(end)
        inst = TspInstance(_factor_graph(factor), factor.identity, end, frozenset(required),
                           {h: w for h, w in weights.items() if w})
        walk, served = [at], set()
        for h in solve_exact(inst).walk[1:]:
            vertex = self.model.mul(at, self.model.letter(f, h))
            walk.append(vertex)
            if weights.get(h) and h not in served:
                served.add(h)
                walk += self.closed_walk(1 - f, frozenset(groups[h] - {()}), vertex, depth + 1)[1:]
        return walk

    def closed_walk(self, f, forms: FrozenSet, at, depth: int) -> list:
        self._guard(depth)
        relevant = frozenset(z for z in forms if z and z[0][0] == f)
        if not relevant:
            return [at]
        return self._copy_walk(f, self.model.factors[f].identity, self._split(relevant, f), at, depth)

    def path_walk(self, target, forms: FrozenSet, at, depth: int) -> list:
        self._guard(depth)
        if not target:
            return self.closed_walk(0, forms, at, depth) + self.closed_walk(1, forms, at, depth)[1:]
        f, h1 = target[0]
        groups = self._split(forms, f)
        walk = self.closed_walk(1 - f, forms, at, depth)
        walk += self._copy_walk(f, h1, groups, at, depth, skip=h1)[1:]
        nxt = self.model.mul(at, self.model.letter(f, h1))
        return walk + self.path_walk(target[1:], frozenset(groups.get(h1, ())), nxt, depth + 1)[1:]


def ts_free_product(model: FreeProductModel, start, end, required: Iterable) -> int:
    """Exact TS(start -> end; required) in Cay(H*K, S_H u S_K), lengths in edges."""
    _check_model(model)
    s, t = _payload(start), _payload(end)
    s_inv = model.inv(s)
    forms = frozenset(model.mul(s_inv, _payload(y)) for y in required)
    target = model.mul(s_inv, t)
    limit = max([len(target)] + [len(z) for z in forms]) + 2
    solver = _PetalSolver(model, limit)
    value = solver.path(target, forms, 0)
    logger.debug("petal TS over %s: %d required, value %d, %d memo entries",
                 model.name, len(forms), value, len(solver.memo))
    return value


def ts_free_product_walk(model: FreeProductModel, start, end, required: Iterable) -> Tuple[int, Tuple[Any, ...]]:
    """(length, walk) for TS(start -> end; required); the walk lists absolute payloads."""
    _check_model(model)
    s, t = _payload(start), _payload(end)
    s_inv = model.inv(s)
    forms = frozenset(model.mul(s_inv, _payload(y)) for y in required)
    target = model.mul(s_inv, t)
    solver = _PetalSolver(model, max([len(target)] + [len(z) for z in forms]) + 2)
    value = solver.path(target, forms, 0)
    walk = tuple(solver.path_walk(target, forms, s, 0))
    if len(walk) - 1 != value or walk[-1] != t:
        raise InternalError(f"petal walk of {len(walk) - 1} edges does not realise TS {value}")
    return value, walk
