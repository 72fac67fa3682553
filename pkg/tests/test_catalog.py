import numpy as np
import pytest

from finite_triples import catalog, dirac, hopf, ktheory
from finite_triples.errors import UnknownFixture
from finite_triples.hilbert import validate_axioms


@pytest.mark.parametrize("name", catalog.fixture_names())
def test_fixture_builds_and_satisfies_axioms(name):
    fx = catalog.fixture(name)
    space = fx.space()
    assert space.N == fx.expected["dimension"]
    assert validate_axioms(space).passed


def test_names():
    assert catalog.fixture_names() == ["cs3_minimal", "s3_fn_bicov2", "s3_fn_universal", "s3_irreps", "s3_wedderburn"]
    with pytest.raises(UnknownFixture):
        catalog.fixture("nope")


def test_cs3_expected_values_recomputed():
    fx = catalog.fixture("cs3_minimal")
    space = fx.space()
    exp = fx.expected
    form = ktheory.index_pairing(space, fx.dirac(space), seed=0)
    assert form.array.tolist() == exp["intersection_form"]
    assert ktheory.poincare_check(form).determinant == exp["determinant"]
    assert dirac.dof_count(space) == exp["dof"]
    _, iso = hopf.wedderburn_iso_s3()
    assert np.allclose(hopf.haar_weight_operator(space, iso).weights, exp["haar_weights"], atol=1e-12)


def test_cs3_fixture_dirac_is_valid():
    fx = catalog.fixture("cs3_minimal")
    space = fx.space()
    d = fx.dirac(space)
    assert dirac.validate_dirac(space, d).passed
    # parameters satisfy |x|^2 + |y|^2 = |z|^2
    p = [np.ravel(np.array(b)) for b in fx.dirac_params]
    assert np.isclose(np.sum(np.abs(p[0]) ** 2), np.sum(np.abs(p[1]) ** 2))


def test_universal_determinant():
    fx = catalog.fixture("s3_fn_universal")
    assert ktheory.poincare_check(fx.q).determinant == fx.expected["determinant"]


@pytest.mark.parametrize("name", ["s3_fn_universal", "s3_fn_bicov2"])
def test_nonzero_chi_recomputed(name):
    fx = catalog.fixture(name)
    space = fx.space()
    rep = hopf.fn_algebra_bicovariance(space, dirac.random_dirac(space, 3), hopf.builtin_group(fx.group))
    assert rep.nonzero_elements() == set(fx.expected["nonzero_chi"])


def test_dump_round_trip():
    data = catalog.dump("cs3_minimal")
    assert data["q"] == [list(r) for r in catalog.CS3_Q]
