"""
Integer row echelon reduction for subgroups of Z^d.

Python ints throughout, so coordinates never overflow.
"""
from typing import List, Optional, Sequence


def echelon(rows: Sequence[Sequence[int]], dim: int) -> List[List[int]]:
    """
    Row echelon basis of the lattice spanned by `rows` (Hermite-style:
    pivots positive, strictly increasing pivot columns, zero rows dropped).
    """
    work = [list(map(int, r)) for r in rows if any(r)]
    basis = []
    for col in range(dim):
        active = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            pivot = active[0]
            reduced = [pivot]
            for r in active[1:]:
                q = r[col] // pivot[col]
                r = [a - q * b for a, b in zip(r, pivot)]
                if r[col] != 0:
                    reduced.append(r)
                elif any(r):
                    rest.append(r)
            active = reduced
        if active:
            pivot = active[0]
            if pivot[col] < 0:
                pivot = [-a for a in pivot]
            basis.append(pivot)
        work = rest
    return basis


def reduce(basis: Sequence[Sequence[int]], v: Sequence[int]) -> Optional[List[int]]:
    """Subtract basis rows from v; None when v leaves a non-divisible pivot entry."""
    v = list(map(int, v))
    for row in basis:
        col = next(i for i, a in enumerate(row) if a != 0)
        if v[col] % row[col] != 0:
            return None
        q = v[col] // row[col]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return v


def contains(basis: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    rest = reduce(basis, v)
    return rest is not None and not any(rest)


def relation_rows(rank: int, moduli: Sequence[int]) -> List[List[int]]:
    dim = rank + len(moduli)
    rows = []
    for j, m in enumerate(moduli):
        row = [0] * dim
        row[rank + j] = int(m)
        rows.append(row)
    return rows


def first_missing_unit(rows: Sequence[Sequence[int]], dim: int) -> Optional[int]:
    """Index k of the first unit vector e_k outside the span, None if the span is everything."""
    basis = echelon(rows, dim)
    for k in range(dim):
        unit = [0] * dim
        unit[k] = 1
        if not contains(basis, unit):
            return k
    return None


def free_rank(rows: Sequence[Sequence[int]], rank: int) -> int:
    """Rank over Q of the free-coordinate parts of `rows`."""
    return len(echelon([list(r[:rank]) for r in rows], rank))
