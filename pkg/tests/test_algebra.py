import numpy as np
import pytest
from hypothesis import given, strategies as st

from finite_triples.algebra import (
    AlgebraSpec,
    IrrepLabel,
    QUATERNION_UNITS,
    central_projection,
    element_basis,
    irrep,
    is_quaternionic,
    make_algebra,
    random_element,
)
from finite_triples.errors import (
    AlgebraMismatch,
    EmptyAlgebra,
    FieldBaseMismatch,
    IndexOutOfRange,
    InvalidLabel,
)

CS3 = make_algebra("C", [(2, "C"), (1, "C"), (1, "C")])
MIXED = make_algebra("R", [(1, "H"), (1, "C"), (2, "R")])
SPECS = [CS3, MIXED, make_algebra("R", [(2, "H")]), make_algebra("C", [(3, "C")])]


def test_group_algebra_shape():
    assert CS3.k == 3 and len(CS3.labels) == 3
    assert CS3.dims == (2, 1, 1)


def test_smallest_algebra():
    a = make_algebra("C", [(1, "C")])
    assert a.k == 1 and len(element_basis(a)) == 1


def test_real_algebra_labels():
    a = make_algebra("R", [(1, "H"), (1, "C")])
    assert a.k == 2
    assert a.labels == (IrrepLabel(0), IrrepLabel(1), IrrepLabel(1, True))
    assert [l.name() for l in a.labels] == ["1", "2", "2bar"]


@pytest.mark.parametrize("spec", SPECS)
def test_label_count(spec):
    complex_real = sum(1 for s in spec.summands if s.field.value == "C") if spec.base.value == "R" else 0
    assert len(spec.labels) == spec.k + complex_real


def test_construction_errors():
    with pytest.raises(EmptyAlgebra):
        make_algebra("C", [])
    with pytest.raises(EmptyAlgebra):
        make_algebra("C", [(0, "C")])
    with pytest.raises(FieldBaseMismatch):
        make_algebra("C", [(1, "H")])
    with pytest.raises(FieldBaseMismatch):
        make_algebra("C", [(2, "R")])


def test_central_projection_blocks():
    p = central_projection(CS3, 0)
    assert np.allclose(p.block_diag(), np.diag([1, 1, 0, 0]))
    with pytest.raises(IndexOutOfRange):
        central_projection(CS3, 3)


@pytest.mark.parametrize("spec", SPECS)
def test_central_projections_complete_and_orthogonal(spec):
    ps = [central_projection(spec, i) for i in range(spec.k)]
    total = ps[0]
    for p in ps[1:]:
        total = total + p
    assert total.allclose(spec.identity())
    for i, pi in enumerate(ps):
        assert (pi * pi).allclose(pi)
        assert pi.adjoint().allclose(pi)
        for j, pj in enumerate(ps):
            if i != j:
                assert (pi * pj).allclose(spec.zero())
        for b in element_basis(spec):
            assert (pi * b).allclose(b * pi)


@pytest.mark.parametrize(
    "spec, size",
    [(CS3, 6), (make_algebra("R", [(1, "H")]), 4), (make_algebra("R", [(2, "R")]), 4), (MIXED, 4 + 2 + 4)],
)
def test_basis_size_and_independence(spec, size):
    basis = element_basis(spec)
    assert len(basis) == size
    vecs = np.array([b.block_diag().ravel() for b in basis]).T
    if spec.base.value == "R":
        vecs = np.vstack([vecs.real, vecs.imag])
    assert np.linalg.matrix_rank(vecs) == size


def test_irrep_plain_and_conjugate():
    a = make_algebra("R", [(1, "C")])
    x = a.element([np.array([[1j]])])
    assert np.allclose(irrep(a, IrrepLabel(0))(x), [[1j]])
    assert np.allclose(irrep(a, IrrepLabel(0, True))(x), [[-1j]])
    with pytest.raises(InvalidLabel):
        irrep(CS3, IrrepLabel(0, True))


def test_quaternion_embedding_relations():
    one, i, j, k = QUATERNION_UNITS
    for u in (i, j, k):
        assert np.allclose(u @ u, -one)
    assert np.allclose(i @ j @ k, -one)
    assert np.allclose(j, [[0, 1], [-1, 0]])
    for u in QUATERNION_UNITS:
        assert is_quaternionic(u)
    assert not is_quaternionic(np.diag([1.0, 2.0]))


def test_element_validation():
    h = make_algebra("R", [(1, "H")])
    with pytest.raises(AlgebraMismatch):
        h.element([np.diag([1.0, 2.0])])
    r = make_algebra("R", [(1, "R")])
    with pytest.raises(AlgebraMismatch):
        r.element([np.array([[1j]])])
    with pytest.raises(AlgebraMismatch):
        r.identity().scale(1j)
    with pytest.raises(AlgebraMismatch):
        CS3.identity() + r.identity()


def test_json_round_trip():
    for spec in SPECS:
        assert AlgebraSpec.from_json(spec.to_json()) == spec


@given(st.integers(0, 2**32 - 1), st.sampled_from(SPECS))
def test_product_associative_and_adjoint_antihomomorphic(seed, spec):
    rng = np.random.default_rng(seed)
    a, b, c = (random_element(spec, rng) for _ in range(3))
    assert ((a * b) * c).allclose(a * (b * c), 1e-9)
    assert (a * b).adjoint().allclose(b.adjoint() * a.adjoint(), 1e-9)
    assert a.adjoint().adjoint().allclose(a)


@given(st.integers(0, 2**32 - 1), st.sampled_from(SPECS))
def test_irreps_multiplicative_and_unital(seed, spec):
    rng = np.random.default_rng(seed)
    a, b = random_element(spec, rng), random_element(spec, rng)
    for label in spec.labels:
        rep = irrep(spec, label)
        assert np.allclose(rep(a * b), rep(a) @ rep(b), atol=1e-9)
        assert np.allclose(rep(spec.identity()), np.eye(spec.label_dim(label)))


@given(st.integers(0, 2**32 - 1))
def test_random_elements_respect_field(seed):
    x = random_element(MIXED, np.random.default_rng(seed))
    assert is_quaternionic(x.blocks[0], 1e-9)
    assert np.allclose(x.blocks[2].imag, 0)
