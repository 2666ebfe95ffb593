from typing import Sequence, Tuple

from errors import RejectedInputError
from groups.models import GroupModel


LETTERS = 'abcdfghijklmnopqrsuvwxyz'  # no 'e' (identity) and no 't' (rank one)


class FreeModel(GroupModel):
    """
    Free group on `rank` letters with the free generating set.
    Payload: reduced tuple of signed generator numbers, 1 = a, -1 = a^-1.
    """
    variant = 'free'

    def __init__(self, rank: int, letters: str = None):
        if rank < 1:
            raise RejectedInputError(f"free group rank must be >= 1, got {rank}")
        self.rank = int(rank)
        if letters is None:
            letters = 't' if rank == 1 else LETTERS[:rank]
        if len(letters) != rank:
            raise RejectedInputError(f"need {rank} letter names, got {letters!r}")
        self.letters = letters
        super().__init__(f"F({','.join(letters)})")
        self.gens = self.symmetrize((i,) for i in range(1, rank + 1))

    @property
    def identity(self):
        return ()

    def normalize(self, p) -> Tuple[int, ...]:
        out = []
        for x in p:
            x = int(x)
            if x == 0 or abs(x) > self.rank:
                raise RejectedInputError(f"{self.name}: bad letter {x}")
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return tuple(out)

    def mul(self, p, q):
        k = 0
        while k < len(p) and k < len(q) and p[len(p) - 1 - k] == -q[k]:
            k += 1
        return p[:len(p) - k] + q[k:]

    def inv(self, p):
        return tuple(-x for x in reversed(p))

    def length(self, p) -> int:
        return len(p)

    def format(self, p) -> str:
        if not p:
            return 'e'
        parts = []
        i = 0
        while i < len(p):
            j = i
            while j < len(p) and p[j] == p[i]:
                j += 1
            letter = self.letters[abs(p[i]) - 1]
            power = (j - i) * (1 if p[i] > 0 else -1)
            parts.append(letter if power == 1 else f"{letter}^{power}")
            i = j
        return ''.join(parts)

    def parse(self, word: str) -> Tuple[int, ...]:
        """Inverse of `format`, e.g. 'ab^-1' or 't^2'."""
        out = []
        i = 0
        while i < len(word):
            ch = word[i]
            if ch == 'e' and 'e' not in self.letters:
                i += 1
                continue
            if ch not in self.letters:
                raise RejectedInputError(f"{self.name}: unknown letter {ch!r} in {word!r}")
            i += 1
            power = 1
            if i < len(word) and word[i] == '^':
                j = i + 1
                if j < len(word) and word[j] == '-':
                    j += 1
                while j < len(word) and word[j].isdigit():
                    j += 1
                try:
                    power = int(word[i + 1:j])
                except ValueError:
                    raise RejectedInputError(
                        f"{self.name}: bad exponent after {ch}^ at position {i} in {word!r}"
                    ) from None
                i = j
            g = self.letters.index(ch) + 1
            out.extend([g if power > 0 else -g] * abs(power))
        return self.normalize(out)


def make_free(rank: int, letters: str = None) -> FreeModel:
    return FreeModel(rank, letters)


def tree_path_edges(model: FreeModel, u: Sequence[int], v: Sequence[int]):
    """Edge set of the tree geodesic from u to v, each edge a frozenset of two payloads."""
    step = model.mul(model.inv(tuple(u)), tuple(v))
    edges = set()
    x = tuple(u)
    for letter in step:
        y = model.mul(x, (letter,))
        edges.add(frozenset((x, y)))
        x = y
    return edges
