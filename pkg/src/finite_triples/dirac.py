"""Admissible Dirac operators on a finite triple.

A block D_{ij,kl}: H_kl -> H_ij survives the first-order condition only
when the two subspaces share a label (i = k or j = l) and carry opposite
grading.  Blocks are grouped into orbits under the adjoint and under
conjugation by J; one free matrix per orbit determines all four blocks,
so self-adjointness and DJ = JD hold by construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Sequence

import numpy as np

from .algebra import Base, FieldKind, central_projection, element_basis
from .errors import ShapeMismatch
from .hilbert import TripleSpace, grading, real_structure, rep_left, rep_right
from .linalg import DEFAULT_TOL, anticommutator, commutator, max_norm, real_linear_system, stacked_rank
from .report import CheckReport

Pair = tuple[int, int]


class SlotKind(str, Enum):
    LEFT = "left"    # i = k: 1_{d_i} (x) T
    RIGHT = "right"  # j = l: T (x) 1_{d_j}


@dataclass(frozen=True, order=True)
class BlockSlot:
    target: Pair
    source: Pair

    @property
    def kind(self) -> SlotKind:
        return SlotKind.LEFT if self.target[0] == self.source[0] else SlotKind.RIGHT

    def adjoint(self) -> "BlockSlot":
        return BlockSlot(self.source, self.target)

    def j_conjugate(self) -> "BlockSlot":
        return BlockSlot(self.target[::-1], self.source[::-1])

    def name(self, space: TripleSpace) -> str:
        n = [l.name() for l in space.labels]
        (i, j), (k, l) = self.target, self.source
        return f"D_{{{n[i]}{n[j]},{n[k]}{n[l]}}}"


@dataclass(frozen=True)
class SlotOrbit:
    representative: BlockSlot
    members: tuple[BlockSlot, ...]
    shape: tuple[int, int]
    self_paired: bool = False

    @property
    def complex_dim(self) -> int:
        return self.shape[0] * self.shape[1]

    @property
    def real_dof(self) -> int:
        # a self-paired slot is fixed by adjoint o J, which halves the real freedom
        return self.complex_dim if self.self_paired else 2 * self.complex_dim

    def to_json(self, space: TripleSpace) -> dict:
        return {
            "representative": self.representative.name(space),
            "kind": self.representative.kind.value,
            "members": [m.name(space) for m in self.members],
            "parameter_shape": list(self.shape),
            "real_dof": self.real_dof,
        }


def _admissible(space: TripleSpace, t: Pair, s: Pair) -> bool:
    if t == s or (t[0] != s[0] and t[1] != s[1]):
        return False
    return space.gamma(*t) * space.gamma(*s) == -1


def parameter_shape(space: TripleSpace, slot: BlockSlot) -> tuple[int, int]:
    (i, j), (k, l) = slot.target, slot.source
    d = space.label_dims
    if slot.kind is SlotKind.LEFT:
        return space.r(i, j) * d[j], space.r(i, l) * d[l]
    return d[i] * space.r(i, j), d[k] * space.r(k, j)


def allowed_blocks(space: TripleSpace) -> list[SlotOrbit]:
    """Orbits of admissible blocks, each keyed by its smallest member."""
    pairs = list(space.subspaces)
    slots = {BlockSlot(t, s) for t, s in product(pairs, repeat=2) if _admissible(space, t, s)}
    orbits = []
    seen = set()
    for slot in sorted(slots):
        if slot in seen:
            continue
        jc = slot.j_conjugate()
        members = {slot, slot.adjoint(), jc, jc.adjoint()}
        seen |= members
        orbits.append(
            SlotOrbit(
                representative=min(members),
                members=tuple(sorted(members)),
                shape=parameter_shape(space, slot),
                self_paired=jc.adjoint() == slot,
            )
        )
    return orbits


def block_matrix(space: TripleSpace, slot: BlockSlot, t: np.ndarray) -> np.ndarray:
    """Embed a parameter matrix T as the equivariant block of ``slot``."""
    (i, j), _ = slot.target, slot.source
    d = space.label_dims
    if slot.kind is SlotKind.LEFT:
        return np.kron(np.eye(d[i]), t)
    return np.kron(t, np.eye(d[j]))


@dataclass
class DiracOperator:
    space: TripleSpace
    orbits: list[SlotOrbit]
    params: list[np.ndarray]
    matrix: np.ndarray = field(repr=False)

    def block(self, target: Pair, source: Pair) -> np.ndarray:
        return self.space.block(self.matrix, target, source)

    def params_json(self) -> dict:
        return {"orbits": [[[[float(z.real), float(z.imag)] for z in row] for row in p] for p in self.params]}


def assemble(space: TripleSpace, params: Sequence, orbits: list[SlotOrbit] | None = None) -> DiracOperator:
    """Full D from one parameter matrix per orbit (in :func:`allowed_blocks` order)."""
    orbits = allowed_blocks(space) if orbits is None else orbits
    if len(params) != len(orbits):
        raise ShapeMismatch(f"expected {len(orbits)} parameter matrices, got {len(params)}")
    J = real_structure(space)
    half = np.zeros((space.N, space.N), dtype=complex)
    clean = []
    for orbit, p in zip(orbits, params):
        t = np.array(p, dtype=complex)
        if t.ndim == 0:
            t = t.reshape(1, 1)
        elif t.ndim == 1:
            t = t.reshape(orbit.shape)
        if t.shape != orbit.shape:
            raise ShapeMismatch(f"{orbit.representative}: expected shape {orbit.shape}, got {t.shape}")
        if orbit.self_paired:
            raise ShapeMismatch("self-paired orbits cannot arise from label-level slots")
        slot = orbit.representative
        sl_t, sl_s = space.subspaces[slot.target], space.subspaces[slot.source]
        half[sl_t, sl_s] += block_matrix(space, slot, t)
        clean.append(t)
    jhalf = J.sandwich(half)
    d = half + half.conj().T + jhalf + jhalf.conj().T
    return DiracOperator(space, orbits, clean, d)


def zero_dirac(space: TripleSpace) -> DiracOperator:
    orbits = allowed_blocks(space)
    return assemble(space, [np.zeros(o.shape) for o in orbits], orbits)


def random_dirac(space: TripleSpace, seed=None) -> DiracOperator:
    """Parameters drawn as independent standard complex Gaussians."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    orbits = allowed_blocks(space)
    params = [(rng.standard_normal(o.shape) + 1j * rng.standard_normal(o.shape)) / np.sqrt(2) for o in orbits]
    return assemble(space, params, orbits)


def dof_count(space: TripleSpace) -> int:
    return sum(o.real_dof for o in allowed_blocks(space))


def _matrix(D) -> np.ndarray:
    return D.matrix if isinstance(D, DiracOperator) else np.asarray(D)


def _zp_elements(space: TripleSpace) -> list:
    """z P_j for every summand, z = 1 and (on complex summands) z = i."""
    out = []
    for j, s in enumerate(space.algebra.summands):
        p = central_projection(space.algebra, j)
        out.append(p)
        if s.field is FieldKind.COMPLEX:
            out.append(type(p)(space.algebra, [1j * b for b in p.blocks], check=False))
    return out


def validate_dirac(space: TripleSpace, D, tol: float = DEFAULT_TOL) -> CheckReport:
    """Check D = D^*, DJ = JD, D gamma = -gamma D and the first-order condition."""
    d = _matrix(D)
    if d.shape != (space.N, space.N):
        raise ShapeMismatch(f"D has shape {d.shape}, space has dimension {space.N}")
    J = real_structure(space)
    g = grading(space)
    basis = element_basis(space.algebra)
    left = [rep_left(space, a) for a in basis]
    right = [rep_right(space, b) for b in basis]
    rep = CheckReport(tol)
    rep.add("self_adjoint", max_norm(d - d.conj().T))
    rep.add("commutes_J", max_norm(J.commutes_with(d)))
    rep.add("anticommutes_gamma", max_norm(anticommutator(d, g)))
    comms = [commutator(d, a) for a in left]
    rep.add("first_order", max((max_norm(commutator(c, b)) for c in comms for b in right), default=0.0))
    if space.algebra.base is Base.REAL:
        zp = [rep_right(space, b) for b in _zp_elements(space)]
        rep.add("first_order_zP", max((max_norm(commutator(c, b)) for c in comms for b in zp), default=0.0))
    return rep


def constraint_blocks(space: TripleSpace):
    """Real row blocks whose joint kernel is the space of admissible D.

    Unknowns are [Re vec D; Im vec D] (row-major vec).  The blocks come
    straight from the axioms with no knowledge of the slot structure.
    """
    n = space.N
    eye = np.eye(n)
    # row-major vec: vec(A X B) = (A kron B^T) vec(X)
    perm = np.zeros((n * n, n * n))
    for p, q in product(range(n), repeat=2):
        perm[p * n + q, q * n + p] = 1.0
    J = real_structure(space)
    g = grading(space)
    u = J.u
    yield real_linear_system(np.eye(n * n), -perm)                  # D - D^dagger
    yield real_linear_system(np.kron(eye, u.T), -np.kron(u, eye))   # D U - U conj(D)
    yield real_linear_system(np.kron(eye, g.T) + np.kron(g, eye))   # D g + g D
    basis = element_basis(space.algebra)
    lefts = [rep_left(space, a) for a in basis]
    rights = [rep_right(space, b) for b in basis]
    if space.algebra.base is Base.REAL:
        rights += [rep_right(space, b) for b in _zp_elements(space)]
    for a, b in product(lefts, rights):
        # [[D, A], B] = D A B - A D B - B D A + B A D
        k = np.kron(eye, (a @ b).T) - np.kron(a, b.T) - np.kron(b, a.T) + np.kron(b @ a, eye)
        yield real_linear_system(k)


def brute_force_nullity(space: TripleSpace) -> int:
    """Real dimension of the admissible-D space from the raw linear constraints.

    Meant for small spaces (N <= 12 or so); cost grows like N^6.
    """
    return 2 * space.N ** 2 - stacked_rank(constraint_blocks(space))


__all__ = [
    "BlockSlot",
    "DiracOperator",
    "SlotKind",
    "SlotOrbit",
    "allowed_blocks",
    "assemble",
    "block_matrix",
    "brute_force_nullity",
    "constraint_blocks",
    "dof_count",
    "parameter_shape",
    "random_dirac",
    "validate_dirac",
    "zero_dirac",
]
