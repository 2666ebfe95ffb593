"""
Lamplighter groups A wr B with the standard generating set S_A u S_B.

An element is a finitely supported lamp configuration f: B -> A together
with the lamplighter position x in B. Configurations are stored as sorted
tuples of (position, value) pairs with no value equal to the lamps
identity, so equal elements have equal states and the states can be used
as dictionary keys by the search code.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple

from errors import RejectedInputError
from graphs.cayley import cayley_ball
from groups.abelian import AbelianModel
from groups.finite import FiniteModel
from groups.models import GroupElement, GroupModel
from groups.spec import element_to_json, model_from_spec, parse_element


logger = logging.getLogger("lamplighter.wreath")

LampConfig = Tuple[Tuple[Any, Any], ...]   # sorted (position, value) pairs
State = Tuple[LampConfig, Any]             # (lamps, position)


@dataclass(frozen=True)
class Generator:
    kind: str           # 'lamp' or 'base'
    payload: Any
    label: str


class Lamplighter:
    """
    A wr B over two group models. `deep_lamp` is the lamps element used by
    the witness constructions; for finite lamps it defaults to the
    length-maximising element with the smallest payload.
    """

    def __init__(self, lamps: GroupModel, base: GroupModel, deep_lamp=None):
        self.lamps = lamps
        self.base = base
        self.name = f"{lamps.name} wr {base.name}"
        self.generators: Tuple[Generator, ...] = tuple(
            [Generator('lamp', s, lamps.format(s)) for s in lamps.gens]
            + [Generator('base', s, base.format(s)) for s in base.gens]
        )
        self._deep_lamp = None if deep_lamp is None else lamps.normalize(deep_lamp)

    def __repr__(self):
        return f"Lamplighter({self.name})"

    # ####### STATES ########
    #      ############
    #         #####

    @property
    def identity_state(self) -> State:
        return (), self.base.identity

    def make_state(self, lamps: Mapping, position) -> State:
        A, B = self.lamps, self.base
        config = {}
        for at, value in dict(lamps).items():
            at, value = B.normalize(at), A.normalize(value)
            if value != A.identity:
                config[at] = value
        return tuple(sorted(config.items())), B.normalize(position)

    def mul_state(self, p: State, q: State) -> State:
        """(f, b)(f', b') = (f + b.f', bb'), where (b.f')(b y) = f'(y)."""
        A, B = self.lamps, self.base
        (f, b), (g, c) = p, q
        config = dict(f)
        for y, value in g:
            at = B.mul(b, y)
            merged = A.mul(config.get(at, A.identity), value)
            if merged == A.identity:
                config.pop(at, None)
            else:
                config[at] = merged
        return tuple(sorted(config.items())), B.mul(b, c)

    def inv_state(self, p: State) -> State:
        A, B = self.lamps, self.base
        f, b = p
        b_inv = B.inv(b)
        config = {B.mul(b_inv, y): A.inv(value) for y, value in f}
        return tuple(sorted(config.items())), b_inv

    def step(self, state: State, gen: Generator) -> State:
        f, x = state
        if gen.kind == 'base':
            return f, self.base.mul(x, gen.payload)
        A = self.lamps
        config = dict(f)
        value = A.mul(config.get(x, A.identity), gen.payload)
        if value == A.identity:
            config.pop(x, None)
        else:
            config[x] = value
        return tuple(sorted(config.items())), x

    def neighbor_states(self, state: State) -> List[Tuple[State, int]]:
        """(neighbour, generator index) in generator order, first occurrence of each neighbour kept."""
        out, seen = [], set()
        for i, gen in enumerate(self.generators):
            y = self.step(state, gen)
            if y not in seen:
                seen.add(y)
                out.append((y, i))
        return out

    def format_state(self, state: State) -> str:
        f, x = state
        lamps = ','.join(f"{self.base.format(y)}:{self.lamps.format(v)}" for y, v in f)
        return f"{{{lamps}}}@{self.base.format(x)}"

    # ####### ELEMENTS ########
    #      ############
    #         #####

    def wrap(self, state: State) -> 'WreathElement':
        return WreathElement(self, state[0], state[1])

    @property
    def identity(self) -> 'WreathElement':
        return self.wrap(self.identity_state)

    def element(self, lamps: Optional[Mapping] = None, position=None) -> 'WreathElement':
        position = self.base.identity if position is None else _payload(position)
        lamps = {_payload(y): _payload(v) for y, v in dict(lamps or {}).items()}
        return self.wrap(self.make_state(lamps, position))

    def lit(self, positions: Iterable, position=None, value=None) -> 'WreathElement':
        """Every lamp in `positions` set to `value` (default: the deep lamp element)."""
        value = self.deep_lamp if value is None else _payload(value)
        return self.element({_payload(y): value for y in positions}, position)

    @property
    def deep_lamp(self):
        if self._deep_lamp is None:
            self._deep_lamp = _deepest(self.lamps)
        return self._deep_lamp

    def format_element(self, g: 'WreathElement') -> str:
        return self.format_state(g.state)

    # ####### JSON ########
    #      ############
    #         #####

    def element_from_json(self, value, where: str = '$') -> 'WreathElement':
        """
        {"lamps": [entry, ...], "position": <base element>}; an entry is a
        base element (that lamp set to the deep lamp element) or
        {"at": <base element>, "value": <lamps element>}.
        """
        if not isinstance(value, dict):
            raise RejectedInputError(f"{where}: expected an object with 'lamps' and 'position'")
        entries = value.get('lamps', [])
        if not isinstance(entries, list):
            raise RejectedInputError(f"{where}.lamps: expected a list")
        config: Dict[Any, Any] = {}
        for k, entry in enumerate(entries):
            here = f"{where}.lamps[{k}]"
            if isinstance(entry, dict):
                if 'at' not in entry:
                    raise RejectedInputError(f"{here}: missing field 'at'")
                at = parse_element(self.base, entry['at'], f"{here}.at")
                lamp = parse_element(self.lamps, entry.get('value'), f"{here}.value") \
                    if 'value' in entry else self.deep_lamp
            else:
                at = parse_element(self.base, entry, here)
                lamp = self.deep_lamp
            config[at] = self.lamps.mul(config.get(at, self.lamps.identity), lamp)
        position = self.base.identity
        if 'position' in value:
            position = parse_element(self.base, value['position'], f"{where}.position")
        return self.wrap(self.make_state(config, position))

    def to_json(self, g: 'WreathElement') -> dict:
        return {
            'lamps': [{'at': element_to_json(self.base, y), 'value': element_to_json(self.lamps, v)}
                      for y, v in g.lamps],
            'position': element_to_json(self.base, g.position),
        }


@dataclass(frozen=True)
class WreathElement:
    group: Lamplighter
    lamps: LampConfig
    position: Any

    @property
    def state(self) -> State:
        return self.lamps, self.position

    @property
    def support(self) -> Tuple[Any, ...]:
        return tuple(y for y, _ in self.lamps)

    def lamp(self, at):
        return dict(self.lamps).get(at, self.group.lamps.identity)

    def __mul__(self, other):
        return wreath_multiply(self, other)

    def __str__(self):
        return self.group.format_state(self.state)

    @property
    def is_identity(self) -> bool:
        return self.state == self.group.identity_state


def _payload(x):
    return x.payload if isinstance(x, GroupElement) else x


def _deepest(model: GroupModel):
    finite = isinstance(model, FiniteModel) or (isinstance(model, AbelianModel) and model.rank == 0)
    if not finite:
        raise RejectedInputError(
            f"{model.name} is infinite; pass the deep lamp element explicitly ('deep' in the lamplighter spec)"
        )
    elements = cayley_ball(model, model.order).elements
    top = max(model.length(x) for x in elements)
    return min(x for x in elements if model.length(x) == top)


def wreath_multiply(g: WreathElement, h: WreathElement) -> WreathElement:
    if g.group is not h.group:
        raise RejectedInputError(f"elements of different lamplighters: {g.group.name} and {h.group.name}")
    return g.group.wrap(g.group.mul_state(g.state, h.state))


def neighbors(g: WreathElement) -> List[WreathElement]:
    """Right multiplication by S_A (at the current position) and S_B, duplicates dropped."""
    return [g.group.wrap(y) for y, _ in g.group.neighbor_states(g.state)]


def lamplighter_from_spec(spec: dict, where: str = '$') -> Lamplighter:
    """{"lamps": <group spec>, "base": <group spec>, "deep": <lamps element, optional>}"""
    if not isinstance(spec, dict):
        raise RejectedInputError(f"{where}: expected an object with 'lamps' and 'base'")
    for key in ('lamps', 'base'):
        if key not in spec:
            raise RejectedInputError(f"{where}: missing field '{key}'")
    lamps = model_from_spec(spec['lamps'], f"{where}.lamps", letter='a')
    base = model_from_spec(spec['base'], f"{where}.base", letter='b')
    deep = None
    if 'deep' in spec:
        deep = parse_element(lamps, spec['deep'], f"{where}.deep")
    group = Lamplighter(lamps, base, deep)
    logger.debug("lamplighter %s with %d generators", group.name, len(group.generators))
    return group
