from dataclasses import dataclass
from typing import Any, Iterable, Tuple

from errors import RejectedInputError


@dataclass(frozen=True)
class GeneratingSet:
    """
    Generators of a model, closed under inversion, identity excluded.
    `representatives` keeps one generator per inverse pair in the order given.
    """
    elements: Tuple[Any, ...]
    representatives: Tuple[Any, ...]
    symmetric: bool = True

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


class GroupModel:
    """
    A computable group with a symmetric generating set.

    Elements are handled as hashable payloads (int, tuple of ints, tuple of
    letters); `element()` wraps a payload into a GroupElement for the public
    API. Models compare by identity.
    """
    variant = None

    def __init__(self, name: str):
        self.name = name
        self.gens = GeneratingSet((), ())

    def __repr__(self):
        return f"{type(self).__name__}({self.name})"

    # ####### GROUP LAW ########

    @property
    def identity(self):
        raise NotImplementedError

    def mul(self, p, q):
        raise NotImplementedError

    def inv(self, p):
        raise NotImplementedError

    def normalize(self, p):
        return p

    def length(self, p) -> int:
        raise NotImplementedError

    def format(self, p) -> str:
        return str(p)

    @property
    def is_finite(self) -> bool:
        return False

    # ####### HELPERS ########

    def element(self, payload) -> 'GroupElement':
        return GroupElement(self, self.normalize(payload))

    def identity_element(self) -> 'GroupElement':
        return GroupElement(self, self.identity)

    def generator_elements(self):
        return [GroupElement(self, g) for g in self.gens]

    def symmetrize(self, payloads: Iterable) -> GeneratingSet:
        elements, representatives = [], []
        for raw in payloads:
            g = self.normalize(raw)
            if g == self.identity:
                raise RejectedInputError(f"generator {self.format(g)} is the identity of {self.name}")
            if g in elements:
                continue
            representatives.append(g)
            elements.append(g)
            g_inv = self.inv(g)
            if g_inv not in elements:
                elements.append(g_inv)
        return GeneratingSet(tuple(elements), tuple(representatives))

    def neighbors(self, p):
        """Right multiplication by every generator, in generator order."""
        return [self.mul(p, s) for s in self.gens]


@dataclass(frozen=True)
class GroupElement:
    model: GroupModel
    payload: Any

    def __mul__(self, other):
        return multiply(self, other)

    def __invert__(self):
        return invert(self)

    def __str__(self):
        return self.model.format(self.payload)

    @property
    def is_identity(self) -> bool:
        return self.payload == self.model.identity


def _same_model(a: GroupElement, b: GroupElement):
    if a.model is not b.model:
        raise RejectedInputError(f"elements of different models: {a.model.name} and {b.model.name}")


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    _same_model(a, b)
    return GroupElement(a.model, a.model.mul(a.payload, b.payload))


def invert(a: GroupElement) -> GroupElement:
    return GroupElement(a.model, a.model.inv(a.payload))


def word_length_in_group(g: GroupElement) -> int:
    return g.model.length(g.payload)
