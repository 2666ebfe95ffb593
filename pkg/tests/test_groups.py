import pytest
from hypothesis import given
import hypothesis.strategies as st

from errors import RejectedInputError
from groups import FiniteGroupTable, make_abelian, make_cyclic, make_finite, make_free, make_free_product, multiply
from groups.spec import element_to_json, model_from_spec, parse_element


# ####### FINITE ########

def test_cyclic_generators_are_symmetrized():
    model = make_cyclic(8, [1])
    assert model.gens.elements == (1, 7)
    assert model.gens.representatives == (1,)
    assert model.order == 8


def test_order_two_generator_is_its_own_inverse():
    model = make_cyclic(2, [1])
    assert model.gens.elements == (1,)


def test_non_generating_set_is_rejected():
    with pytest.raises(RejectedInputError, match="do not generate"):
        make_cyclic(6, [2])


def test_cyclic_inverse_and_length():
    model = make_cyclic(8, [1])
    assert model.inv(3) == 5
    assert model.length(4) == 4
    assert model.length(7) == 1
    assert model.format(3) == 'b^3'


def test_abelian_table_product_order():
    table = FiniteGroupTable.abelian([2, 2])
    assert table.order == 4
    assert table.is_abelian()
    model = make_finite(table, [1, 2])
    assert model.length(3) == 2


def test_table_must_be_latin():
    with pytest.raises(RejectedInputError):
        FiniteGroupTable.from_mul([[0, 1], [1, 1]], name='bad')


def test_symmetric_group_table_is_not_abelian():
    from itertools import permutations
    perms = list(permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    mul = [[index[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms]
    table = FiniteGroupTable.from_mul(mul, name='S3')
    assert not table.is_abelian()
    assert table.identity == index[(0, 1, 2)]


# ####### ABELIAN ########

def test_integer_addition():
    model = make_abelian(1, [], [[1]])
    assert model.mul((3,), (4,)) == (7,)
    assert model.standard


def test_nonstandard_lengths_by_bfs():
    model = make_abelian(1, [], [[2], [3]])
    assert not model.standard
    assert [model.length((x,)) for x in (1, 2, 4, 5, 6, 7)] == [2, 1, 2, 2, 2, 3]


def test_abelian_torsion_coordinates_reduce():
    model = make_abelian(1, [2], [[1, 0], [0, 1]])
    assert model.normalize((3, 5)) == (3, 1)
    assert model.length((-2, 1)) == 3
    assert model.inv((2, 1)) == (-2, 1)


def test_abelian_generation_witness():
    with pytest.raises(RejectedInputError, match="never reached"):
        make_abelian(1, [], [[2]])


# ####### FREE ########

def test_free_reduction():
    model = make_free(1)
    assert model.mul((1,), (-1,)) == ()
    assert model.format((1, 1)) == 't^2'


def test_free_inverse_format():
    model = make_free(2)
    word = model.parse('ab^-1')
    assert word == (1, -2)
    assert model.format(model.inv(word)) == 'ba^-1'


@pytest.mark.parametrize('word', ['t^', 't^-', 't^-t'])
def test_free_parse_rejects_a_missing_exponent(word):
    with pytest.raises(RejectedInputError, match="bad exponent"):
        make_free(1).parse(word)
    with pytest.raises(RejectedInputError, match=r"^\$\.lamps\[0\]"):
        parse_element(make_free(1), word, '$.lamps[0]')


@given(st.lists(st.sampled_from([1, -1, 2, -2]), max_size=12))
def test_free_parse_inverts_format(letters):
    model = make_free(2)
    word = model.normalize(letters)
    assert model.parse(model.format(word)) == word
    assert model.mul(word, model.inv(word)) == ()


# ####### FREE PRODUCT ########

def test_free_product_letters_merge():
    model = make_free_product(make_cyclic(8, [1], 'b'), make_cyclic(2, [1], 'c'))
    b3c = ((0, 3), (1, 1))
    cb = ((1, 1), (0, 1))
    assert model.mul(b3c, cb) == ((0, 4),)
    assert model.format(((0, 1), (1, 1), (0, 1))) == 'bcb'
    assert model.length(((0, 1), (1, 1), (0, 1))) == 3


def test_free_product_rejects_trivial_factor():
    with pytest.raises(RejectedInputError, match="trivial factor"):
        make_free_product(make_cyclic(1, [], 'b'), make_cyclic(2, [1], 'c'))


letters = st.lists(st.tuples(st.integers(0, 1), st.integers(0, 3)), max_size=8)


@given(letters, letters, letters)
def test_free_product_is_associative(p, q, r):
    model = make_free_product(make_cyclic(4, [1], 'b'), make_cyclic(3, [1], 'c'))
    p, q, r = (model.normalize([(f, x % model.factors[f].order) for f, x in w]) for w in (p, q, r))
    assert model.mul(model.mul(p, q), r) == model.mul(p, model.mul(q, r))
    assert model.mul(p, model.inv(p)) == ()


def test_elements_of_different_models_do_not_multiply():
    a = make_cyclic(4, [1]).element(1)
    b = make_cyclic(4, [1]).element(1)
    with pytest.raises(RejectedInputError, match="different models"):
        multiply(a, b)


# ####### JSON SPECS ########

def test_spec_variants():
    assert model_from_spec({"variant": "cyclic", "n": 8, "gens": [1]}).order == 8
    assert model_from_spec({"variant": "abelian", "rank": 2, "gens": [[1, 0], [0, 1]]}).name == 'Z^2'
    assert model_from_spec({"variant": "free", "rank": 2}).name == 'F(a,b)'
    product = model_from_spec({"variant": "free_product",
                               "H": {"variant": "cyclic", "n": 8}, "K": {"variant": "cyclic", "n": 2}})
    assert product.name == 'Z/8*Z/2'
    assert model_from_spec({"variant": "finite_abelian", "moduli": [2, 2],
                            "gens": [[1, 0], [0, 1]]}).order == 4


def test_spec_errors_carry_location():
    with pytest.raises(RejectedInputError, match=r"^\$: missing field 'n'"):
        model_from_spec({"variant": "cyclic"})
    with pytest.raises(RejectedInputError, match=r"\$\.H: missing field 'variant'"):
        model_from_spec({"variant": "free_product", "H": {}, "K": {"variant": "cyclic", "n": 2}})
    with pytest.raises(RejectedInputError, match="unknown variant"):
        model_from_spec({"variant": "braid"})


def test_elements_from_json():
    free = make_free(2)
    assert parse_element(free, 'ab') == (1, 2)
    assert element_to_json(free, (1, 2)) == 'ab'
    z = make_abelian(1, [], [[1]])
    assert parse_element(z, -3) == (-3,)
    with pytest.raises(RejectedInputError, match=r"^\$\.position"):
        parse_element(make_cyclic(4, [1]), 'x', '$.position')
