"""
JSON group specs, as read by the command line:

    {"variant": "cyclic", "n": 8, "gens": [1]}
    {"variant": "finite_abelian", "moduli": [2, 2], "gens": [[1, 0], [0, 1]]}
    {"variant": "abelian", "rank": 2, "moduli": [], "gens": [[1, 0], [0, 1]]}
    {"variant": "free", "rank": 2}
    {"variant": "free_product", "H": {...}, "K": {...}}

Generators are listed one per inverse pair.
"""
from errors import RejectedInputError
from groups.abelian import AbelianModel, make_abelian
from groups.finite import FiniteGroupTable, FiniteModel, make_cyclic, make_finite
from groups.free import FreeModel, make_free
from groups.free_product import FreeProductModel, make_free_product


def abelian_index(moduli, residues) -> int:
    """Index of a residue vector in FiniteGroupTable.abelian(moduli) (mixed radix)."""
    index = 0
    for a, m in zip(residues, moduli):
        index = index * int(m) + int(a) % int(m)
    return index


def _field(spec, key, where, kind=None):
    if not isinstance(spec, dict) or key not in spec:
        raise RejectedInputError(f"{where}: missing field '{key}'")
    value = spec[key]
    if kind is not None and not isinstance(value, kind):
        raise RejectedInputError(f"{where}.{key}: expected {kind.__name__}, got {type(value).__name__}")
    return value


def model_from_spec(spec: dict, where: str = '$', letter: str = 'b'):
    variant = _field(spec, 'variant', where, str)

    if variant == 'cyclic':
        n = _field(spec, 'n', where, int)
        gens = spec.get('gens', [1])
        return make_cyclic(n, gens, letter=spec.get('letter', letter))

    if variant == 'finite_abelian':
        moduli = _field(spec, 'moduli', where, list)
        gens = _field(spec, 'gens', where, list)
        table = FiniteGroupTable.abelian(moduli)
        gen_indices = []
        for k, g in enumerate(gens):
            if not isinstance(g, list) or len(g) != len(moduli):
                raise RejectedInputError(f"{where}.gens[{k}]: expected {len(moduli)} residues")
            gen_indices.append(abelian_index(moduli, g))
        return make_finite(table, gen_indices)

    if variant == 'abelian':
        rank = _field(spec, 'rank', where, int)
        moduli = spec.get('moduli', [])
        gens = _field(spec, 'gens', where, list)
        for k, g in enumerate(gens):
            if not isinstance(g, list):
                raise RejectedInputError(f"{where}.gens[{k}]: expected a list of integers")
        return make_abelian(rank, moduli, gens)

    if variant == 'free':
        rank = _field(spec, 'rank', where, int)
        return make_free(rank, spec.get('letters'))

    if variant == 'free_product':
        H = model_from_spec(_field(spec, 'H', where, dict), f"{where}.H", letter='b')
        K = model_from_spec(_field(spec, 'K', where, dict), f"{where}.K", letter='c')
        for name, factor in (('H', H), ('K', K)):
            if not isinstance(factor, FiniteModel):
                raise RejectedInputError(f"{where}.{name}: free product factors must be finite")
        return make_free_product(H, K)

    raise RejectedInputError(f"{where}.variant: unknown variant {variant!r}")


def finite_from_spec(spec: dict, where: str = '$', letter: str = 'b') -> FiniteModel:
    model = model_from_spec(spec, where, letter)
    if not isinstance(model, FiniteModel):
        raise RejectedInputError(f"{where}: expected a finite group spec")
    return model


def parse_element(model, value, where: str = '$'):
    """Payload of `model` from its JSON form."""
    try:
        if isinstance(model, FiniteModel):
            if not isinstance(value, int):
                raise RejectedInputError(f"{where}: expected an element index")
            return model.normalize(value)
        if isinstance(model, AbelianModel):
            if isinstance(value, int) and model.dim == 1:
                value = [value]
            if not isinstance(value, list):
                raise RejectedInputError(f"{where}: expected a coordinate list")
            return model.normalize(value)
        if isinstance(model, FreeModel):
            if isinstance(value, str):
                return model.parse(value)
            if not isinstance(value, list):
                raise RejectedInputError(f"{where}: expected a word string or list of signed letters")
            return model.normalize(value)
        if isinstance(model, FreeProductModel):
            if not isinstance(value, list) or any(not isinstance(x, list) or len(x) != 2 for x in value):
                raise RejectedInputError(f"{where}: expected a list of [factor, index] letters")
            return model.normalize(value)
    except RejectedInputError as e:
        if str(e).startswith(where):
            raise
        raise RejectedInputError(f"{where}: {e}") from e
    raise RejectedInputError(f"{where}: unsupported model {model.name}")


def element_to_json(model, payload):
    if isinstance(model, FreeModel):
        return model.format(payload)
    if isinstance(model, (AbelianModel,)):
        return list(payload)
    if isinstance(model, FreeProductModel):
        return [list(letter) for letter in payload]
    return payload
