import numpy as np
import pytest
from hypothesis import given, strategies as st

from finite_triples import catalog, dirac, ktheory
from finite_triples.algebra import make_algebra
from finite_triples.hilbert import build_space, random_krajewski

MIXED = make_algebra("R", [(1, "H"), (1, "C"), (2, "R")])
MIXED_Q = [[1, -1, -1, 0], [-1, 0, 0, 1], [-1, 0, 0, 1], [0, 1, 1, -1]]


def test_cs3_recovers_q(cs3, cs3_dirac):
    form = ktheory.index_pairing(cs3, cs3_dirac, seed=0)
    assert form.matrix == catalog.CS3_Q
    assert form.quaternionic == (False, False, False)


def test_zero_dirac_still_recovers_q(cs3):
    # with D = 0 the index is just the graded dimension count
    form = ktheory.index_pairing(cs3, dirac.zero_dirac(cs3).matrix, n_random=0)
    assert form.matrix == catalog.CS3_Q


@pytest.mark.parametrize("name", ["s3_fn_universal", "s3_fn_bicov2"])
def test_function_algebra_fixtures_recover_q(name):
    fx = catalog.fixture(name)
    assert ktheory.index_pairing(fx.space(), seed=1).matrix == fx.q


@given(st.integers(0, 10_000))
def test_random_instances_recover_q(seed):
    space = random_krajewski(np.random.default_rng(seed))
    assert ktheory.index_pairing(space, seed=seed).matrix == space.data.q


def test_determinants():
    assert ktheory.poincare_check(catalog.CS3_Q) == ktheory.PoincareResult(True, -1)
    assert ktheory.poincare_check(catalog.S3_FN_UNIVERSAL_Q) == ktheory.PoincareResult(True, -128)
    assert not ktheory.poincare_check(np.zeros((2, 2), dtype=int)).nondegenerate


def test_determinant_from_form(cs3):
    form = ktheory.index_pairing(cs3, n_random=1, seed=2)
    assert ktheory.poincare_check(form).determinant == -1


def test_quaternionic_doubling():
    space = build_space(MIXED, MIXED_Q)
    doubled = ktheory.index_pairing(space, seed=3)
    plain = ktheory.index_pairing(space, doubling=False, seed=3)
    assert doubled.quaternionic == (True, False, False)
    # H entries pick up a factor 2 per quaternionic side; C sums its plain and conjugate labels
    assert doubled.array.tolist() == [[4, -4, 0], [-4, 0, 2], [0, 2, -1]]
    assert plain.array.tolist() == [[1, -2, 0], [-2, 0, 2], [0, 2, -1]]


def test_pairing_is_symmetric_on_random_instances(rng):
    for _ in range(10):
        space = random_krajewski(rng)
        m = ktheory.index_pairing(space, n_random=1, seed=0).array
        assert np.array_equal(m, m.T)


def test_json(cs3):
    data = ktheory.index_pairing(cs3, n_random=1, seed=0).to_json()
    assert data["matrix"] == [list(r) for r in catalog.CS3_Q]
