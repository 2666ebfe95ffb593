import json
import os
import tempfile

os.environ.setdefault('LAMPLIGHTER_LOG_FILE', os.path.join(tempfile.gettempdir(), 'lamplighter-tests.log'))

import hypothesis
import numpy as np
import pytest

from groups import make_abelian, make_cyclic, make_free, make_free_product
from wreath.elements import Lamplighter, lamplighter_from_spec

np.seterr(all="warn")

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None, print_blob=True)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


Z2_SPEC = {"variant": "cyclic", "n": 2, "gens": [1]}


@pytest.fixture
def z2():
    return make_cyclic(2, [1], letter='a')


@pytest.fixture
def line():
    """Z as the free group on one letter."""
    return make_free(1)


@pytest.fixture
def f2():
    return make_free(2)


@pytest.fixture
def z_std():
    return make_abelian(1, [], [[1]])


@pytest.fixture
def z2_std():
    return make_abelian(2, [], [[1, 0], [0, 1]])


@pytest.fixture
def dihedral():
    """Z/2 * Z/2, whose Cayley graph is a line."""
    return make_free_product(make_cyclic(2, [1], 'b'), make_cyclic(2, [1], 'c'))


@pytest.fixture
def octagons():
    return make_free_product(make_cyclic(8, [1], 'b'), make_cyclic(2, [1], 'c'))


@pytest.fixture
def lamplighter_line():
    return lamplighter_from_spec({"lamps": Z2_SPEC, "base": {"variant": "free", "rank": 1}})


@pytest.fixture
def lamplighter_f2():
    return lamplighter_from_spec({"lamps": Z2_SPEC, "base": {"variant": "free", "rank": 2}})


@pytest.fixture
def lamplighter_dihedral(dihedral):
    return Lamplighter(make_cyclic(2, [1], 'a'), dihedral)


@pytest.fixture
def lamplighter_octagons(octagons):
    return Lamplighter(make_cyclic(2, [1], 'a'), octagons)


@pytest.fixture
def lamplighter_z2(z2_std):
    return Lamplighter(make_cyclic(2, [1], 'a'), z2_std)


@pytest.fixture
def write_json(tmp_path):
    """Dump an object to a JSON file under tmp_path and return its path."""
    def _write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj), encoding='utf-8')
        return str(path)
    return _write
