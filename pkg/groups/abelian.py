import logging
from typing import Sequence

import settings as st
from errors import RejectedInputError, ResourceCapError
from groups import lattice
from groups.models import GroupModel


logger = logging.getLogger("lamplighter.groups")


class AbelianModel(GroupModel):
    """
    Z^rank x Z/m_1 x ... x Z/m_s. Payload: tuple of `rank` integers followed
    by residues 0 <= q_j < m_j.
    """
    variant = 'abelian'

    def __init__(self, rank: int, moduli: Sequence[int], gens: Sequence[Sequence[int]]):
        self.rank = int(rank)
        self.moduli = tuple(int(m) for m in moduli)
        if self.rank < 0 or any(m < 1 for m in self.moduli):
            raise RejectedInputError(f"bad abelian shape: rank={rank}, moduli={list(moduli)}")
        if self.rank + len(self.moduli) < 1:
            raise RejectedInputError("abelian model needs rank + |moduli| >= 1")
        super().__init__(self._name())
        self.dim = self.rank + len(self.moduli)
        for g in gens:
            if len(g) != self.dim:
                raise RejectedInputError(f"{self.name}: generator {list(g)} must have {self.dim} coordinates")
        self.gens = self.symmetrize(tuple(int(a) for a in g) for g in gens)

        rows = [list(g) for g in self.gens.representatives] + lattice.relation_rows(self.rank, self.moduli)
        missing = lattice.first_missing_unit(rows, self.dim)
        if missing is not None:
            unit = [0] * self.dim
            unit[missing] = 1
            raise RejectedInputError(
                f"{self.name}: generators do not generate; the coset of {self.format(tuple(unit))} is never reached"
            )

        self.standard = self._is_standard()
        self._dist = {self.identity: 0}
        self._layer = [self.identity]
        self._radius = 0

    def _name(self):
        parts = ['Z' if self.rank == 1 else f"Z^{self.rank}"] if self.rank else []
        parts += [f"Z/{m}" for m in self.moduli]
        return 'x'.join(parts)

    def _is_standard(self) -> bool:
        units = set()
        for k in range(self.dim):
            unit = [0] * self.dim
            unit[k] = 1
            units.add(self.normalize(tuple(unit)))
            units.add(self.inv(self.normalize(tuple(unit))))
        units.discard(self.identity)
        return set(self.gens.elements) == units

    @property
    def identity(self):
        return (0,) * self.dim

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def order(self) -> int:
        if self.rank:
            raise RejectedInputError(f"{self.name} is infinite")
        result = 1
        for m in self.moduli:
            result *= m
        return result

    def normalize(self, p):
        p = tuple(int(a) for a in p)
        if len(p) != self.dim:
            raise RejectedInputError(f"{self.name}: element {list(p)} must have {self.dim} coordinates")
        return p[:self.rank] + tuple(a % m for a, m in zip(p[self.rank:], self.moduli))

    def mul(self, p, q):
        free = tuple(a + b for a, b in zip(p[:self.rank], q[:self.rank]))
        torsion = tuple((a + b) % m for a, b, m in zip(p[self.rank:], q[self.rank:], self.moduli))
        return free + torsion

    def inv(self, p):
        return tuple(-a for a in p[:self.rank]) + tuple((-a) % m for a, m in zip(p[self.rank:], self.moduli))

    def length(self, p) -> int:
        if self.standard:
            free = sum(abs(a) for a in p[:self.rank])
            torsion = sum(min(a, m - a) for a, m in zip(p[self.rank:], self.moduli))
            return free + torsion
        while p not in self._dist:
            self._grow()
        return self._dist[p]

    def _grow(self):
        # memoised BFS layers from the identity
        nxt = []
        for x in self._layer:
            for s in self.gens:
                y = self.mul(x, s)
                if y not in self._dist:
                    self._dist[y] = self._radius + 1
                    nxt.append(y)
        if not nxt:
            raise RejectedInputError(f"{self.name}: element not reachable")
        self._radius += 1
        self._layer = nxt
        if len(self._dist) > st.vertex_cap():
            raise ResourceCapError(
                f"{self.name}: word-length BFS exceeded {st.vertex_cap()} elements",
                cap_name='LAMPLIGHTER_CAP', cap=st.vertex_cap(),
            )
        logger.debug("%s: word-length BFS radius %d, %d elements", self.name, self._radius, len(self._dist))

    def format(self, p) -> str:
        if self.dim == 1:
            return str(p[0])
        return '(' + ','.join(map(str, p)) + ')'


def make_abelian(rank: int, moduli: Sequence[int], gens: Sequence[Sequence[int]]) -> AbelianModel:
    return AbelianModel(rank, moduli, gens)
