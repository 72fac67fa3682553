import numpy as np
import pytest
from hypothesis import given, strategies as st

from finite_triples import dirac
from finite_triples.algebra import central_projection, element_basis, make_algebra
from finite_triples.dirac import BlockSlot, SlotKind
from finite_triples.errors import ShapeMismatch
from finite_triples.forms import xi
from finite_triples.hilbert import build_space, random_krajewski, real_structure, rep_left, rep_right

from oracles import cs3_xi_display

PAIRS_DISPLAYED = [(0, 1), (2, 1), (1, 2), (2, 2)]


def test_cs3_orbits(cs3):
    orbits = dirac.allowed_blocks(cs3)
    assert [o.representative.name(cs3) for o in orbits] == ["D_{12,32}", "D_{23,33}"]
    assert [o.shape for o in orbits] == [(2, 1), (1, 1)]
    assert all(o.representative.kind is SlotKind.RIGHT for o in orbits)
    assert dirac.dof_count(cs3) == 6


def test_cs3_brute_force_nullity(cs3):
    assert dirac.brute_force_nullity(cs3) == 6


def test_same_chirality_has_no_dirac():
    space = build_space(make_algebra("C", [(1, "C"), (2, "C")]), [[1, 1], [1, 1]])
    assert dirac.allowed_blocks(space) == []
    assert dirac.dof_count(space) == 0
    assert np.allclose(dirac.random_dirac(space, 0).matrix, 0)


def test_single_matrix_summand_has_no_dirac():
    space = build_space(make_algebra("C", [(2, "C")]), [[1]])
    assert dirac.dof_count(space) == 0 == dirac.brute_force_nullity(space)


def test_commutative_chain_orbits():
    space = build_space(make_algebra("C", [(1, "C")] * 3), [[0, 1, 0], [1, 0, -1], [0, -1, 0]])
    orbits = dirac.allowed_blocks(space)
    assert [o.representative.name(space) for o in orbits] == ["D_{12,32}"]
    assert dirac.dof_count(space) == dirac.brute_force_nullity(space) == 2


def test_cs3_assembly_matches_display(cs3):
    x, y, z = 0.3 - 1j, 2.0, 1.5j
    d = dirac.assemble(cs3, [[[x], [y]], [[z]]])
    assert np.allclose(cs3.restrict(xi(cs3, d).pi_xi, PAIRS_DISPLAYED), cs3_xi_display(x, y, z))
    # H21 is forced by J: block D_{21,23} is the conjugate partner of D_{12,32}
    assert np.abs(cs3.block(d.matrix, (1, 0), (1, 2))).max() > 0


def test_zero_parameters(cs3):
    assert np.allclose(dirac.zero_dirac(cs3).matrix, 0)


def test_shape_errors(cs3):
    with pytest.raises(ShapeMismatch):
        dirac.assemble(cs3, [[[1.0]]])
    with pytest.raises(ShapeMismatch):
        dirac.assemble(cs3, [np.ones((3, 1)), [[1.0]]])


def test_random_is_deterministic(cs3):
    assert np.array_equal(dirac.random_dirac(cs3, 42).matrix, dirac.random_dirac(cs3, 42).matrix)
    assert dirac.validate_dirac(cs3, dirac.random_dirac(cs3, 42)).passed


def test_cross_block_violation_detected(cs3):
    d = dirac.random_dirac(cs3, 1).matrix.copy()
    # H12 <- H33 shares no label; add it with its adjoint and J-partner so only first order can catch it
    bad = np.zeros_like(d)
    bad[cs3.subspaces[(0, 1)], cs3.subspaces[(2, 2)]] = 1.0
    J = real_structure(cs3)
    bad = bad + bad.conj().T
    bad = bad + J.sandwich(bad)
    rep = dirac.validate_dirac(cs3, d + bad)
    assert rep["self_adjoint"].passed and rep["commutes_J"].passed
    assert not rep["first_order"].passed


def test_slot_kinds_commute_with_their_side():
    rng = np.random.default_rng(0)
    for _ in range(10):
        space = random_krajewski(rng)
        for orbit in dirac.allowed_blocks(space):
            for slot in orbit.members:
                t = rng.standard_normal(dirac.parameter_shape(space, slot))
                m = np.zeros((space.N, space.N), dtype=complex)
                m[space.subspaces[slot.target], space.subspaces[slot.source]] = dirac.block_matrix(space, slot, t)
                i = slot.target[0] if slot.kind is SlotKind.LEFT else slot.target[1]
                for a in element_basis(space.algebra):
                    if not np.allclose(a.blocks[space.labels[i].summand], 0):
                        op = rep_left(space, a) if slot.kind is SlotKind.LEFT else rep_right(space, a)
                        assert np.abs(m @ op - op @ m).max() < 1e-12


def test_block_slot_symmetries():
    s = BlockSlot((0, 1), (2, 1))
    assert s.adjoint() == BlockSlot((2, 1), (0, 1))
    assert s.j_conjugate() == BlockSlot((1, 0), (1, 2))
    assert s.j_conjugate().kind is SlotKind.LEFT


def test_real_algebra_dof_matches_constraints():
    space = build_space(make_algebra("R", [(1, "H"), (1, "C"), (1, "R")]),
                        [[1, -1, -1, 0], [-1, 0, 0, 1], [-1, 0, 0, 1], [0, 1, 1, -1]])
    assert dirac.dof_count(space) == dirac.brute_force_nullity(space)
    assert dirac.validate_dirac(space, dirac.random_dirac(space, 5)).passed


@given(st.integers(0, 2**32 - 1))
def test_sampled_dirac_is_valid(seed):
    rng = np.random.default_rng(seed)
    space = random_krajewski(rng)
    d = dirac.random_dirac(space, rng)
    rep = dirac.validate_dirac(space, d)
    assert rep.passed, rep.failures()


@given(st.integers(0, 2**32 - 1))
def test_dof_matches_brute_force_on_small_spaces(seed):
    rng = np.random.default_rng(seed)
    space = random_krajewski(rng, n_total_max=10)
    assert dirac.dof_count(space) == dirac.brute_force_nullity(space)


def test_projections_and_P_commutators_exist(cs3):
    d = dirac.random_dirac(cs3, 3).matrix
    p = rep_left(cs3, central_projection(cs3.algebra, 0))
    assert np.abs(d @ p - p @ d).max() > 0
