import pytest

from errors import RejectedInputError
from groups import make_abelian, make_cyclic, make_free
from hamiltonian import QhCertificate, QhRefutation, qh_certificate
from hamiltonian.certificates import default_strategy


def test_plane_box_of_radius_one(z2_std):
    cert = qh_certificate(z2_std, 1)
    assert isinstance(cert, QhCertificate)
    assert cert.strategy == 'abelian' and cert.M == 2
    witness = cert.witnesses[0]
    assert sorted(witness.elements) == [(x, y) for x in (-1, 0, 1) for y in (-1, 0, 1)]
    assert len(witness.walks) == 9
    assert cert.holds and cert.check()


def test_plane_up_to_radius_two(z2_std):
    cert = qh_certificate(z2_std, 2, M=2)
    assert cert.holds and cert.check()
    assert [w.size for w in cert.witnesses] == [9, 25]


def test_integers_with_steps_one_and_two():
    model = make_abelian(1, [], [[1], [2]])
    assert default_strategy(model) == 'abelian'
    cert = qh_certificate(model, 3, M=2)
    assert cert.holds and cert.check()
    assert 1 <= cert.achieved_M <= 2
    assert [w.size for w in cert.witnesses] == [6, 10, 14]


def test_closed_walks_of_the_line_grow():
    model = make_abelian(1, [], [[1]])
    assert default_strategy(model) == 'refutation'
    result = qh_certificate(model, 4)
    assert isinstance(result, QhRefutation)
    table = result.table
    assert list(table['closed_ts']) == [4, 8, 12, 16]
    assert list(table['closed_excess']) == [1, 3, 5, 7]
    assert result.growing


def test_free_group_excess_grows(f2):
    result = qh_certificate(f2, 3)
    table = result.table
    assert list(table['size']) == [5, 17, 53]
    assert list(table['closed_excess']) == [3, 15, 51]
    # the best endpoint sits on the sphere
    assert list(table['best_excess']) == [s - n - 1 for n, s in zip(table['n'], table['size'])]
    assert result.growing
    assert result.to_dict()['strategy'] == 'refutation'


def test_generic_strategy_on_the_free_group(f2):
    cert = qh_certificate(f2, 1, strategy='generic')
    assert cert.step == 3 and cert.M == 1
    assert cert.witnesses[0].size == 53
    assert cert.achieved_M == 1
    assert cert.holds and cert.check()
    doc = cert.to_dict()
    assert doc['achieved_M'] == 1 and doc['witnesses'][0]['size'] == 53


def test_refutation_needs_tree_balls(z2_std):
    with pytest.raises(RejectedInputError, match="not trees"):
        qh_certificate(z2_std, 2, strategy='refutation')


def test_rejected_requests():
    with pytest.raises(RejectedInputError, match="finite"):
        qh_certificate(make_cyclic(8, [1]), 2, strategy='generic')
    with pytest.raises(RejectedInputError, match="unknown strategy"):
        qh_certificate(make_free(1), 2, strategy='greedy')
    with pytest.raises(RejectedInputError, match="n_max"):
        qh_certificate(make_free(1), 0)
    with pytest.raises(RejectedInputError, match="abelian model"):
        qh_certificate(make_free(2), 1, strategy='abelian')
