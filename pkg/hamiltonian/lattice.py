import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

import settings as st
from errors import InternalError, RejectedInputError
from groups import lattice
from groups.abelian import AbelianModel


logger = logging.getLogger("lamplighter.hamiltonian")


@dataclass(frozen=True)
class NashWilliamsBasis:
    """
    g = sum p_i a_i + sum q_j b_j with p in Z^r and 0 <= q_j < m_j, uniquely.
    `levels[j]` is the echelon basis of the lattice spanned by the a's,
    b_1..b_j and the relations of the model.
    """
    model: AbelianModel
    a: Tuple[Tuple[int, ...], ...]
    b: Tuple[Tuple[int, ...], ...]
    m: Tuple[int, ...]
    levels: Tuple[Tuple[Tuple[int, ...], ...], ...]

    @property
    def rank(self) -> int:
        return len(self.a)

    def element(self, p: Sequence[int], q: Sequence[int]):
        """The group element with coordinates (p, q)."""
        model = self.model
        g = model.identity
        for coeff, gen in zip(list(p) + list(q), self.a + self.b):
            g = model.mul(g, model.normalize(tuple(coeff * x for x in gen)))
        return g

    def coordinates(self, payload) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        v = list(payload)
        q = [0] * len(self.b)
        for j in reversed(range(len(self.b))):
            for c in range(self.m[j]):
                shifted = [x - c * y for x, y in zip(v, self.b[j])]
                if lattice.contains(self.levels[j], shifted):
                    q[j] = c
                    v = shifted
                    break
            else:
                raise InternalError(f"{self.model.format(payload)} has no coordinate along b_{j + 1}")
        r = self.model.rank
        p = ()
        if self.a:
            A = np.array([gen[:r] for gen in self.a], dtype=float).T
            p = tuple(int(round(x)) for x in np.linalg.solve(A, np.array(v[:r], dtype=float)))
        if self.element(p, q) != self.model.normalize(payload):
            raise InternalError(f"coordinates of {self.model.format(payload)} do not reproduce it")
        return p, tuple(q)


def _minimal_multiple(gen, basis, cap=10_000) -> int:
    for m in range(1, cap + 1):
        if lattice.contains(basis, [m * x for x in gen]):
            return m
    raise InternalError(f"no multiple of {list(gen)} up to {cap} lies in the previous lattice")


def _check_unique(basis: NashWilliamsBasis):
    """Distinct coordinates in a box must give distinct elements."""
    model = basis.model
    torsion = int(np.prod(basis.m)) if basis.m else 1
    radius = sum(basis.m) + 10
    while radius > 1 and (2 * radius + 1) ** basis.rank * torsion > st.NASH_WILLIAMS_BOX_LIMIT:
        radius -= 1
    ranges = [range(-radius, radius + 1)] * basis.rank + [range(m) for m in basis.m]
    coords = np.array(list(itertools.product(*ranges)), dtype=np.int64)
    gens = np.array(basis.a + basis.b, dtype=np.int64)
    points = coords @ gens
    r = model.rank
    for j, mod in enumerate(model.moduli):
        points[:, r + j] %= mod
    distinct = len(np.unique(points, axis=0))
    if distinct != len(points):
        raise InternalError(
            f"{model.name}: coordinates are not unique on the box of radius {radius} "
            f"({distinct} elements for {len(points)} coordinate vectors)"
        )
    logger.debug("%s: uniqueness verified on %d coordinate vectors", model.name, len(points))


def nash_williams_basis(model: AbelianModel, order: Optional[Sequence[int]] = None) -> NashWilliamsBasis:
    """
    Split the generators (one per inverse pair, taken in `order`) into a
    Q-independent free part a_1..a_r and the rest b_1..b_s, where m_j is the
    order of b_j modulo the span of the a's and the earlier b's.
    """
    if not isinstance(model, AbelianModel):
        raise RejectedInputError(f"Nash-Williams coordinates need an abelian model, got {model.name}")
    if model.rank < 1:
        raise RejectedInputError(f"{model.name} is finite")
    gens = list(model.gens.representatives)
    order = list(range(len(gens))) if order is None else list(order)
    if sorted(order) != list(range(len(gens))):
        raise RejectedInputError(f"order must be a permutation of 0..{len(gens) - 1}")
    gens = [gens[i] for i in order]

    a: List[Tuple[int, ...]] = []
    rest = []
    for g in gens:
        if len(a) < model.rank and lattice.free_rank(a + [g], model.rank) > len(a):
            a.append(g)
        else:
            rest.append(g)
    if len(a) != model.rank:
        raise InternalError(f"{model.name}: generators span free rank {len(a)} < {model.rank}")

    relations = lattice.relation_rows(model.rank, model.moduli)
    rows = [list(g) for g in a] + relations
    levels = []
    m = []
    for g in rest:
        level = lattice.echelon(rows, model.dim)
        levels.append(tuple(tuple(row) for row in level))
        m.append(_minimal_multiple(g, level))
        rows.append(list(g))

    basis = NashWilliamsBasis(model, tuple(a), tuple(rest), tuple(m), tuple(levels))
    _check_unique(basis)
    return basis
