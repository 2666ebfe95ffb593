import itertools
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

import settings as st
from errors import RejectedInputError
from groups.models import GroupModel


@dataclass(frozen=True)
class FiniteGroupTable:
    """
    A finite group given by its multiplication table over indices 0..order-1.
    """
    order: int
    mul: Tuple[Tuple[int, ...], ...]
    identity: int
    inv: Tuple[int, ...]
    name: str
    labels: Optional[Tuple[str, ...]] = None

    @classmethod
    def from_mul(cls, mul: Sequence[Sequence[int]], name: str, labels=None) -> 'FiniteGroupTable':
        arr = np.asarray(mul, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise RejectedInputError(f"{name}: multiplication table must be a non-empty square")
        order = arr.shape[0]
        identities = [i for i in range(order)
                      if np.array_equal(arr[i], np.arange(order)) and np.array_equal(arr[:, i], np.arange(order))]
        if not identities:
            raise RejectedInputError(f"{name}: no two-sided identity")
        identity = identities[0]
        inv = []
        for x in range(order):
            hits = np.flatnonzero(arr[x] == identity)
            if len(hits) != 1:
                raise RejectedInputError(f"{name}: element {x} has no unique inverse")
            inv.append(int(hits[0]))
        table = cls(
            order=order,
            mul=tuple(tuple(int(v) for v in row) for row in arr),
            identity=identity,
            inv=tuple(inv),
            name=name,
            labels=tuple(labels) if labels is not None else None,
        )
        table.validate()
        return table

    @classmethod
    def cyclic(cls, n: int, letter: str = 'b') -> 'FiniteGroupTable':
        if n < 1:
            raise RejectedInputError(f"cyclic group order must be positive, got {n}")
        mul = [[(i + j) % n for j in range(n)] for i in range(n)]
        labels = ['e'] + [letter if i == 1 else f"{letter}^{i}" for i in range(1, n)]
        return cls.from_mul(mul, name=f"Z/{n}", labels=labels)

    @classmethod
    def abelian(cls, moduli: Sequence[int]) -> 'FiniteGroupTable':
        """Direct product Z/m_1 x ... x Z/m_k, elements in lexicographic order."""
        moduli = [int(m) for m in moduli]
        if not moduli or any(m < 1 for m in moduli):
            raise RejectedInputError(f"moduli must be positive, got {moduli}")
        elements = list(itertools.product(*[range(m) for m in moduli]))
        index = {x: i for i, x in enumerate(elements)}
        mul = [[index[tuple((a + b) % m for a, b, m in zip(x, y, moduli))] for y in elements]
               for x in elements]
        labels = ['e' if not any(x) else '(' + ','.join(map(str, x)) + ')' for x in elements]
        name = 'x'.join(f"Z/{m}" for m in moduli)
        return cls.from_mul(mul, name=name, labels=labels)

    def validate(self):
        arr = np.asarray(self.mul, dtype=np.int64)
        n = self.order
        full = np.arange(n)
        if not (np.all(np.sort(arr, axis=1) == full) and np.all(np.sort(arr, axis=0) == full[:, None])):
            raise RejectedInputError(f"{self.name}: table is not a Latin square")
        if not (np.array_equal(arr[self.identity], full) and np.array_equal(arr[:, self.identity], full)):
            raise RejectedInputError(f"{self.name}: identity is not neutral")
        if any(self.mul[x][self.inv[x]] != self.identity for x in range(n)):
            raise RejectedInputError(f"{self.name}: inverse table is wrong")

        if n <= st.ASSOCIATIVITY_EXHAUSTIVE_LIMIT:
            left = arr[arr]          # (xy)z
            right = arr[:, arr]      # x(yz)
            if not np.array_equal(left, right):
                raise RejectedInputError(f"{self.name}: table is not associative")
        else:
            rng = np.random.default_rng(0)
            x, y, z = rng.integers(0, n, size=(3, st.ASSOCIATIVITY_SAMPLES))
            if not np.array_equal(arr[arr[x, y], z], arr[x, arr[y, z]]):
                raise RejectedInputError(f"{self.name}: table is not associative")

    def is_abelian(self) -> bool:
        arr = np.asarray(self.mul)
        return bool(np.array_equal(arr, arr.T))

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return 'e' if i == self.identity else f"g{i}"


class FiniteModel(GroupModel):
    variant = 'finite'

    def __init__(self, table: FiniteGroupTable, gens: Sequence[int]):
        super().__init__(table.name)
        self.table = table
        for g in gens:
            if not 0 <= int(g) < table.order:
                raise RejectedInputError(f"{table.name}: generator index {g} out of range")
        self.gens = self.symmetrize(int(g) for g in gens)
        self._dist = self._bfs()
        if len(self._dist) != table.order:
            missing = next(x for x in range(table.order) if x not in self._dist)
            raise RejectedInputError(
                f"{table.name}: generators {self.format_gens()} do not generate "
                f"(orbit of e has {len(self._dist)} of {table.order} elements, misses {table.label(missing)})"
            )

    def _bfs(self):
        dist = {self.table.identity: 0}
        queue = deque([self.table.identity])
        while queue:
            x = queue.popleft()
            for s in self.gens:
                y = self.table.mul[x][s]
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    @property
    def identity(self):
        return self.table.identity

    @property
    def order(self) -> int:
        return self.table.order

    @property
    def is_finite(self) -> bool:
        return True

    def mul(self, p, q):
        return self.table.mul[p][q]

    def inv(self, p):
        return self.table.inv[p]

    def normalize(self, p):
        p = int(p)
        if not 0 <= p < self.table.order:
            raise RejectedInputError(f"{self.name}: element index {p} out of range")
        return p

    def length(self, p) -> int:
        return self._dist[p]

    def format(self, p) -> str:
        return self.table.label(p)

    def format_gens(self) -> str:
        return '{' + ','.join(self.format(g) for g in self.gens) + '}'

    def elements(self):
        return range(self.table.order)


def make_finite(table: FiniteGroupTable, gens: Sequence[int]) -> FiniteModel:
    return FiniteModel(table, gens)


def make_cyclic(n: int, gens: Sequence[int], letter: str = 'b') -> FiniteModel:
    """Z/nZ with the given residues as generators (inverses added)."""
    table = FiniteGroupTable.cyclic(n, letter=letter)
    residues = []
    for g in gens:
        r = int(g) % n
        if r == 0:
            raise RejectedInputError(f"generator {g} is zero mod {n}")
        residues.append(r)
    if n > 1 and not residues:
        raise RejectedInputError(f"Z/{n} needs at least one generator")
    return FiniteModel(table, residues)
