import pytest
from hypothesis import given
import hypothesis.strategies as st

from errors import RejectedInputError
from graphs.cayley import cayley_ball
from groups import make_abelian, make_cyclic, make_free
from wreath import (Lamplighter, WordMetric, choose_backend, lamplighter_from_spec, neighbors, word_length,
                    word_length_bfs, wreath_multiply)
from wreath.metric import MetricBackend
from wreath.witnesses import lit_ball_element


def _t(k):
    """t^k in the free group on one letter."""
    return (1,) * k if k >= 0 else (-1,) * -k


# ####### GROUP LAW ########

def test_lamp_then_move(lamplighter_line):
    group = lamplighter_line
    a = group.element({(): 1})
    t = group.element(position=_t(1))
    assert a * t == group.element({(): 1}, _t(1))
    assert t * a == group.element({_t(1): 1}, _t(1))
    assert (a * a).is_identity


def test_configuration_is_canonical(lamplighter_line):
    group = lamplighter_line
    g = group.element({_t(2): 1, _t(-1): 1, (): 0}, _t(1))
    assert g.support == (_t(-1), _t(2))
    assert g.lamp(()) == 0 and g.lamp(_t(2)) == 1
    assert str(g) == '{t^-1:a,t^2:a}@t'


lamp_sets = st.sets(st.integers(-3, 3), max_size=5)
positions = st.integers(-3, 3)


def _element(group, lit, at):
    return group.element({_t(k): 1 for k in lit}, _t(at))


@given(lamp_sets, positions, lamp_sets, positions, lamp_sets, positions)
def test_multiplication_is_associative(f, x, g, y, h, z):
    group = lamplighter_from_spec({"lamps": {"variant": "cyclic", "n": 2}, "base": {"variant": "free", "rank": 1}})
    p, q, r = _element(group, f, x), _element(group, g, y), _element(group, h, z)
    assert (p * q) * r == p * (q * r)
    assert (p * group.wrap(group.inv_state(p.state))).is_identity


def test_elements_of_different_groups(lamplighter_line, lamplighter_f2):
    with pytest.raises(RejectedInputError, match="different lamplighters"):
        wreath_multiply(lamplighter_line.identity, lamplighter_f2.identity)


def test_neighbors_of_the_identity(lamplighter_line, lamplighter_f2):
    assert len(neighbors(lamplighter_line.identity)) == 3
    assert len(neighbors(lamplighter_f2.identity)) == 5
    assert [g.lamp(()) for g in neighbors(lamplighter_line.identity)] == [1, 0, 0]


def test_deep_lamp():
    group = Lamplighter(make_cyclic(4, [1]), make_free(1))
    assert group.deep_lamp == 2
    assert Lamplighter(make_cyclic(4, [1]), make_free(1), deep_lamp=1).deep_lamp == 1
    with pytest.raises(RejectedInputError, match="infinite"):
        Lamplighter(make_free(1), make_free(1)).deep_lamp


# ####### WORD LENGTH ########

def test_two_lamps_around_the_origin(lamplighter_line):
    g = lamplighter_line.lit([_t(-1), _t(1)])
    assert word_length(g) == (6, True)
    assert word_length(lamplighter_line.identity) == (0, True)


def test_lit_unit_ball_of_the_free_group(lamplighter_f2):
    g = lit_ball_element(lamplighter_f2, 1)
    assert len(g.support) == 5
    assert word_length(g) == (13, True)


def test_ts_walk_realises_the_length(lamplighter_z2):
    group = lamplighter_z2
    g = group.element({(2, 0): 1, (0, 1): 1}, (1, 1))
    metric = WordMetric(group)
    assert metric.backend.strategy == 'box'
    walk = metric.ts_walk(g.state)
    assert walk[0] == (0, 0) and walk[-1] == (1, 1)
    assert {(2, 0), (0, 1)} <= set(walk)
    assert metric.length(g.state) == 2 + len(walk) - 1 == 2 + 6


def test_closed_form_walks(lamplighter_f2, lamplighter_octagons):
    for group, radius in ((lamplighter_f2, 2), (lamplighter_octagons, 3)):
        B = group.base
        metric = WordMetric(group)
        gens = set(B.gens)
        for position in cayley_ball(B, 2).elements:
            g = lit_ball_element(group, radius, position)
            walk = metric.ts_walk(g.state)
            assert walk[0] == B.identity and walk[-1] == g.position
            assert set(g.support) <= set(walk)
            assert all(B.mul(B.inv(a), b) in gens for a, b in zip(walk, walk[1:]))
            assert len(walk) - 1 == metric.length(g.state) - metric.lamp_cost(g.state)


def _agrees_with_bfs(group, radius, backend=None):
    metric = WordMetric(group, backend)
    distances = word_length_bfs(group, radius)
    for state, n in distances.items():
        assert metric.length(state) == n, group.format_state(state)
    return len(distances)


def test_tree_backend_matches_bfs(lamplighter_line, lamplighter_f2):
    _agrees_with_bfs(lamplighter_line, 6)
    _agrees_with_bfs(lamplighter_f2, 4)


def test_box_backend_matches_bfs(z_std, lamplighter_z2):
    _agrees_with_bfs(Lamplighter(make_cyclic(2, [1], 'a'), z_std), 6)
    _agrees_with_bfs(lamplighter_z2, 4)


def test_box_backend_with_torsion():
    base = make_abelian(1, [2], [[1, 0], [0, 1]])
    _agrees_with_bfs(Lamplighter(make_cyclic(2, [1], 'a'), base), 5)


def test_petal_backend_matches_bfs(lamplighter_dihedral, lamplighter_octagons):
    _agrees_with_bfs(lamplighter_dihedral, 6)
    _agrees_with_bfs(lamplighter_octagons, 5)


def test_finite_backend_matches_bfs():
    group = Lamplighter(make_cyclic(2, [1], 'a'), make_cyclic(4, [1]))
    assert choose_backend(group.base).strategy == 'finite'
    assert _agrees_with_bfs(group, 12) == 64


@pytest.mark.slow
def test_backends_match_bfs_further_out(lamplighter_f2, lamplighter_z2, lamplighter_octagons):
    _agrees_with_bfs(lamplighter_f2, 6)
    _agrees_with_bfs(lamplighter_z2, 6)
    _agrees_with_bfs(lamplighter_octagons, 7)


def test_generic_backend_is_an_upper_bound(lamplighter_f2):
    backend = choose_backend(lamplighter_f2.base, 'generic')
    assert not backend.exact and backend.slack == 2
    metric = WordMetric(lamplighter_f2, backend)
    for state, n in word_length_bfs(lamplighter_f2, 3).items():
        assert metric.length(state) >= n
    g = lit_ball_element(lamplighter_f2, 1)
    assert word_length(g, backend) == (13, False)


def test_backend_choice():
    assert choose_backend(make_free(2)).strategy == 'tree'
    with pytest.raises(RejectedInputError, match="does not apply"):
        choose_backend(make_free(2), 'box')
    with pytest.raises(RejectedInputError, match="unknown backend"):
        choose_backend(make_free(2), 'fastest')


def test_metric_refuses_a_foreign_backend(lamplighter_f2):
    with pytest.raises(RejectedInputError, match="does not apply"):
        WordMetric(lamplighter_f2, MetricBackend('petal', True))


# ####### JSON ########

def test_elements_from_json(lamplighter_line, z_std):
    g = lamplighter_line.element_from_json({"lamps": ["t", "t^-1"], "position": "e"})
    assert word_length(g) == (6, True)
    group = Lamplighter(make_cyclic(4, [1], 'a'), z_std)
    h = group.element_from_json({"lamps": [-1, {"at": 2, "value": 1}, {"at": 2, "value": 1}], "position": 1})
    assert h.lamp((-1,)) == 2 and h.lamp((2,)) == 2
    assert h.position == (1,)
    assert group.element_from_json(group.to_json(h)) == h


def test_malformed_elements(lamplighter_line):
    group = lamplighter_line
    with pytest.raises(RejectedInputError, match=r"^\$: expected an object"):
        group.element_from_json(["t"])
    with pytest.raises(RejectedInputError, match=r"^\$\.lamps: expected a list"):
        group.element_from_json({"lamps": "t"})
    with pytest.raises(RejectedInputError, match=r"^\$\.lamps\[0\]: missing field 'at'"):
        group.element_from_json({"lamps": [{"value": 1}]})
    with pytest.raises(RejectedInputError, match=r"^\$\.position"):
        group.element_from_json({"lamps": [], "position": "x"})


def test_lamplighter_specs():
    with pytest.raises(RejectedInputError, match="missing field 'base'"):
        lamplighter_from_spec({"lamps": {"variant": "cyclic", "n": 2}})
    group = lamplighter_from_spec({"lamps": {"variant": "cyclic", "n": 4}, "base": {"variant": "free", "rank": 1},
                                   "deep": 1})
    assert group.deep_lamp == 1
    assert group.name == 'Z/4 wr F(t)'
