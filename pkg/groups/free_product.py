from errors import RejectedInputError
from groups.finite import FiniteModel
from groups.models import GeneratingSet, GroupModel


class FreeProductModel(GroupModel):
    """
    H * K for finite factors with generating set S_H u S_K.

    Payload: alternating tuple of letters (factor, index), factor 0 = H and
    1 = K, no letter equal to its factor identity.
    """
    variant = 'free_product'

    def __init__(self, H: FiniteModel, K: FiniteModel):
        for factor in (H, K):
            if not isinstance(factor, FiniteModel):
                raise RejectedInputError(f"free product factors must be finite, got {factor.name}")
            if factor.order < 2:
                raise RejectedInputError(
                    f"trivial factor {factor.name}: the product is the other factor, treat it as a finite base"
                )
        super().__init__(f"{H.name}*{K.name}")
        self.factors = (H, K)
        elements = tuple(((0, s),) for s in H.gens) + tuple(((1, s),) for s in K.gens)
        representatives = tuple(((0, s),) for s in H.gens.representatives) + \
            tuple(((1, s),) for s in K.gens.representatives)
        self.gens = GeneratingSet(elements, representatives)

    @property
    def identity(self):
        return ()

    def mul(self, p, q):
        out = list(p)
        j = 0
        while out and j < len(q) and out[-1][0] == q[j][0]:
            f = q[j][0]
            table = self.factors[f].table
            merged = table.mul[out[-1][1]][q[j][1]]
            out.pop()
            j += 1
            if merged != table.identity:
                out.append((f, merged))
                break
        return tuple(out) + tuple(q[j:])

    def inv(self, p):
        return tuple((f, self.factors[f].table.inv[x]) for f, x in reversed(p))

    def normalize(self, p):
        out = ()
        for letter in p:
            f, x = int(letter[0]), int(letter[1])
            if f not in (0, 1) or not 0 <= x < self.factors[f].order:
                raise RejectedInputError(f"{self.name}: bad letter {list(letter)}")
            if x == self.factors[f].identity:
                continue
            out = self.mul(out, ((f, x),))
        return out

    def length(self, p) -> int:
        return sum(self.factors[f].length(x) for f, x in p)

    def format(self, p) -> str:
        if not p:
            return 'e'
        return ''.join(self.factors[f].format(x) for f, x in p)

    def letter(self, factor: int, index: int):
        return ((factor, index),) if index != self.factors[factor].identity else ()


def make_free_product(H: FiniteModel, K: FiniteModel) -> FreeProductModel:
    return FreeProductModel(H, K)
