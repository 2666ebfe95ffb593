import itertools

import pytest

from errors import RejectedInputError
from groups import make_cyclic, make_free_product
from wreath import (Lamplighter, choose_backend, depth, depth_profile, depth_verdict, is_dead_end, profile_summary,
                    retreat_depth, word_length, word_length_bfs)
from wreath.depth import PROFILE_COLUMNS
from wreath.elements import lamplighter_from_spec
from wreath.verdicts import BOUNDED, UNBOUNDED
from wreath.witnesses import (lit_interval_witness, finite_base_deepest_element, free_dead_end_conditions,
                              lit_ball_element)


def _t(k):
    return (1,) * k if k >= 0 else (-1,) * -k


def _lamplighter(n, m):
    return Lamplighter(make_cyclic(2, [1], 'a'), make_free_product(make_cyclic(n, [1], 'b'),
                                                                   make_cyclic(m, [1], 'c')))


# ####### DEPTH ########

def test_identity_has_depth_zero(lamplighter_line):
    report = depth(lamplighter_line.identity, 3)
    assert (report.depth, report.depth_exact, report.dead_end) == (0, True, False)
    assert report.retreat_depth is None
    assert report.witness in (('a',), ('t',), ('t^-1',))
    assert not is_dead_end(lamplighter_line.identity)


@pytest.mark.parametrize('n, length, expected', [(1, 7, 2), (2, 13, 4)])
def test_lit_interval_on_the_line(lamplighter_line, n, length, expected):
    g = lit_interval_witness(lamplighter_line, n)
    assert word_length(g) == (length, True)
    report = depth(g, 2 * n + 2)
    assert report.dead_end and report.depth_exact
    assert report.depth == expected
    assert report.retreat_depth == n and report.retreat_exact
    assert len(report.witness) == expected + 1
    assert retreat_depth(g, 2 * n + 2) == (n, True)


@pytest.mark.parametrize('n', [1, 2, 3])
def test_lit_interval_on_the_dihedral_line(lamplighter_dihedral, n):
    g = lit_interval_witness(lamplighter_dihedral, n)
    report = depth(g, 2 * n + 2)
    assert report.depth == 2 * n and report.depth_exact


def test_depth_is_a_lower_bound_when_the_search_stops(lamplighter_line):
    g = lit_interval_witness(lamplighter_line, 2)
    report = depth(g, 2)
    assert report.depth == 2 and not report.depth_exact
    assert 'lower_bound' in report.flags
    assert report.retreat_depth is not None and not report.retreat_exact


def test_deepest_element_over_the_octagon():
    group = Lamplighter(make_cyclic(2, [1], 'a'), make_cyclic(8, [1]))
    g = finite_base_deepest_element(group)
    assert g.position == 4
    assert len(g.support) == 8
    assert word_length(g) == (18, True)
    assert is_dead_end(g)
    report = depth(g, 2)
    assert report.depth == 2 and not report.depth_exact and not report.maximal


def test_whole_finite_group_searched():
    group = Lamplighter(make_cyclic(2, [1], 'a'), make_cyclic(2, [1]))
    g = finite_base_deepest_element(group)
    assert g.position == 0
    assert word_length(g) == (4, True)
    report = depth(g, 10)
    assert report.maximal and report.dead_end
    assert report.depth == 4 and not report.depth_exact
    with pytest.raises(RejectedInputError, match="maximal length"):
        retreat_depth(g, 10)


def test_retreat_depth_needs_a_dead_end(lamplighter_line):
    with pytest.raises(RejectedInputError, match="not a dead end"):
        retreat_depth(lamplighter_line.identity, 3)
    with pytest.raises(RejectedInputError, match="k_max"):
        depth(lamplighter_line.identity, -1)


def test_generic_backend_is_refused(lamplighter_f2):
    with pytest.raises(RejectedInputError, match="upper bounds"):
        depth(lamplighter_f2.identity, 2, backend=choose_backend(lamplighter_f2.base, 'generic'))


# ####### FREE BASES ########

def _line_elements(radius=3):
    """Every element of Z/2 wr F(t) with lamps and lamplighter within `radius` of e."""
    group = lamplighter_from_spec({"lamps": {"variant": "cyclic", "n": 2},
                                   "base": {"variant": "free", "rank": 1}})
    window = range(-radius, radius + 1)
    for bits in itertools.product((0, 1), repeat=len(window)):
        lamps = {_t(k): 1 for k, bit in zip(window, bits) if bit}
        for x in window:
            yield group.element(lamps, _t(x))


def test_dead_ends_over_the_line_are_characterised():
    count = dead = 0
    for g in _line_elements():
        conditions = free_dead_end_conditions(g)
        assert is_dead_end(g) == conditions.all, str(g)
        count += 1
        dead += conditions.all
    assert count == 896
    assert dead > 0


def test_dead_end_conditions(lamplighter_f2, lamplighter_line):
    assert free_dead_end_conditions(lit_ball_element(lamplighter_f2, 2)).all
    moved = lit_ball_element(lamplighter_line, 1, position=_t(1))
    conditions = free_dead_end_conditions(moved)
    assert conditions.lamp_dead_end and not conditions.at_identity and not conditions.all
    assert not is_dead_end(moved)
    with pytest.raises(RejectedInputError, match="free bases"):
        free_dead_end_conditions(_lamplighter(2, 2).identity)


# ####### FREE PRODUCTS ########

def test_lit_ball_over_two_squares_is_a_dead_end():
    group = _lamplighter(4, 4)
    assert is_dead_end(lit_interval_witness(group, 2))


@pytest.mark.parametrize('position', [((0, 2),), ((1, 2),)])
def test_dead_ends_away_from_the_identity(position):
    group = _lamplighter(4, 4)
    g = lit_ball_element(group, 4, position)
    assert group.base.length(g.position) == 2
    assert is_dead_end(g)
    assert depth(g, 1).depth >= 1


@pytest.mark.slow
def test_dead_end_two_squares_away():
    group = _lamplighter(4, 4)
    position = ((0, 2), (1, 2))
    g = lit_ball_element(group, 6, position)
    assert group.base.length(position) == 4
    assert is_dead_end(g)


def test_dead_end_two_squares_away_with_three_lit_squares():
    group = _lamplighter(4, 4)
    b2, b2c2 = ((0, 2),), ((0, 2), (1, 2))
    lit = [group.base.letter(0, h) for h in range(4)]
    lit += [group.base.mul(b2, group.base.letter(1, h)) for h in range(1, 4)]
    lit += [group.base.mul(b2c2, group.base.letter(0, h)) for h in range(1, 4)]
    g = group.element({y: 1 for y in lit}, b2c2)
    assert len(g.support) == 10
    assert word_length(g) == (22, True)
    assert is_dead_end(g)


@pytest.mark.slow
def test_depth_over_octagons_stays_bounded(lamplighter_octagons):
    df = depth_profile(lamplighter_octagons, 12, 22, sample=25, seed=7)
    assert not df.empty
    assert df['depth'].max() <= 21
    assert df.attrs['partial'] or df['word_length'].max() == 12


# ####### DEPTH DICHOTOMY ########

@pytest.mark.parametrize('n, m, verdict, bound', [
    (2, 2, UNBOUNDED, None),
    (4, 4, UNBOUNDED, None),
    (4, 6, BOUNDED, 16),
    (8, 2, BOUNDED, 18),
])
def test_dichotomy_verdicts(n, m, verdict, bound):
    result = depth_verdict(make_cyclic(n, [1], 'b'), make_cyclic(m, [1], 'c'))
    assert (result.verdict, result.depth_bound) == (verdict, bound)


def test_lit_balls_over_two_squares_stay_shallow():
    # the lamplighter can leave B_n through b^2, opposite e on its square
    group = _lamplighter(4, 4)
    reports = [depth(lit_interval_witness(group, n), 3) for n in (1, 2)]
    assert [(r.depth, r.depth_exact) for r in reports] == [(2, True), (2, True)]
    assert word_length(lit_interval_witness(group, 2)) == (39, True)


def _max_depths(group, radii, k_max, exact=True):
    depths = []
    for radius in radii:
        df = depth_profile(group, radius, k_max)
        assert not df.attrs['partial']
        if exact:
            assert df['depth_exact'].all()
        depths.append(int(df['depth'].max()))
    return depths


@pytest.mark.parametrize('n, m', [(4, 6), (8, 2)])
def test_bounded_pairs_stay_under_the_depth_bound(n, m):
    bound = depth_verdict(make_cyclic(n, [1], 'b'), make_cyclic(m, [1], 'c')).depth_bound
    depths = _max_depths(_lamplighter(n, m), [4, 5, 6], bound)
    assert depths == sorted(depths)
    assert depths[-1] <= bound


@pytest.mark.slow
@pytest.mark.parametrize('n, m, radii', [(4, 6, [6, 7, 8]), (8, 2, [8, 9, 10])])
def test_bounded_pairs_plateau_further_out(n, m, radii):
    bound = depth_verdict(make_cyclic(n, [1], 'b'), make_cyclic(m, [1], 'c')).depth_bound
    depths = _max_depths(_lamplighter(n, m), radii, bound)
    assert depths == sorted(depths)
    assert depths[-1] <= bound


@pytest.mark.slow
def test_depth_grows_with_the_radius_over_the_dihedral_line(lamplighter_dihedral):
    # lit intervals of radius 1 and 2 have length 7 and 13
    assert _max_depths(lamplighter_dihedral, [6, 7, 13], 4, exact=False) == [0, 2, 4]


# ####### PROFILES ########

def test_profile_of_radius_zero(lamplighter_line):
    df = depth_profile(lamplighter_line, 0, 3)
    assert list(df.columns) == PROFILE_COLUMNS
    assert len(df) == 1
    row = df.iloc[0]
    assert row['element'] == '{}@e' and row['depth'] == 0 and row['flags'] == ''


def test_profile_finds_the_first_dead_end(lamplighter_line):
    df = depth_profile(lamplighter_line, 7, 4)
    assert not df.attrs['partial']
    assert len(df) == len(word_length_bfs(lamplighter_line, 7))
    g = lit_interval_witness(lamplighter_line, 1)
    row = df[df['element'] == str(g)].iloc[0]
    assert row['word_length'] == 7 and row['depth'] == 2 and 'dead_end' in row['flags']
    assert df[df['word_length'] < 7]['flags'].str.contains('dead_end').sum() == 0

    summary = profile_summary(df)
    assert list(summary.columns) == ['word_length', 'elements', 'dead_ends', 'max_depth']
    assert summary['elements'].sum() == len(df)
    assert summary.set_index('word_length').loc[7, 'max_depth'] == 2


def test_profile_sampling_is_seeded(lamplighter_f2):
    first = depth_profile(lamplighter_f2, 3, 2, sample=4, seed=3)
    assert first.equals(depth_profile(lamplighter_f2, 3, 2, sample=4, seed=3))
    assert (first.groupby('word_length').size() <= 4).all()


def test_frontier_cap_marks_the_profile_partial(monkeypatch, lamplighter_f2):
    monkeypatch.setenv('LAMPLIGHTER_CAP', '30')
    df = depth_profile(lamplighter_f2, 4, 2)
    assert df.attrs['partial']
    assert len(df) >= 1
