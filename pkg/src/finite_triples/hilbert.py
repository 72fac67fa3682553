"""Hilbert space of a finite real spectral triple built from Krajewski data.

The space is the direct sum of H_ij = C^{d_i} (x) C^{r_ij} (x) C^{d_j} over
pairs of irrep labels, where r_ij = |q_ij| and the grading on H_ij is
sign(q_ij).  Basis vectors are labelled ``(i, j, a, s, b)``; subspaces come
in row-major label order and each subspace is laid out as a Kronecker
product, so ``a`` varies slowest.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .algebra import (
    AlgebraElement,
    AlgebraSpec,
    Base,
    central_projection,
    element_basis,
    irrep,
    make_algebra,
)
from .errors import AlgebraMismatch, AsymmetricMatrix, ShapeMismatch, UnfaithfulRepresentation
from .linalg import DEFAULT_TOL, commutator, max_norm, numerical_rank, realify
from .report import CheckReport

Pair = tuple[int, int]


@dataclass(frozen=True)
class KrajewskiData:
    q: tuple[tuple[int, ...], ...]

    @classmethod
    def from_matrix(cls, q) -> "KrajewskiData":
        arr = np.asarray(q)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ShapeMismatch(f"q must be square, got shape {arr.shape}")
        if not np.all(np.equal(np.mod(arr, 1), 0)):
            raise ShapeMismatch("q must have integer entries")
        arr = arr.astype(int)
        if not np.array_equal(arr, arr.T):
            raise AsymmetricMatrix("q must be symmetric")
        return cls(tuple(tuple(int(x) for x in row) for row in arr))

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.q, dtype=int).reshape(len(self.q), len(self.q))

    @property
    def r(self) -> np.ndarray:
        return np.abs(self.matrix)

    @property
    def gamma(self) -> np.ndarray:
        return np.sign(self.matrix)


@dataclass(frozen=True)
class AntilinearOperator:
    """v -> U conj(v)."""

    u: np.ndarray

    def apply(self, v: np.ndarray) -> np.ndarray:
        return self.u @ np.conj(v)

    def square(self) -> np.ndarray:
        return self.u @ self.u.conj()

    def sandwich(self, x: np.ndarray) -> np.ndarray:
        """The linear operator J X J."""
        return self.u @ x.conj() @ self.u.conj()

    def commutes_with(self, x: np.ndarray) -> np.ndarray:
        """Residual of X J - J X as the matrix X U - U conj(X)."""
        return x @ self.u - self.u @ x.conj()


class TripleSpace:
    """Labelled Hilbert space with the canonical basis and subspace bookkeeping."""

    def __init__(self, algebra: AlgebraSpec, data: KrajewskiData):
        self.algebra = algebra
        self.data = data
        self.labels = algebra.labels
        self.label_dims = tuple(algebra.label_dim(l) for l in self.labels)
        r = data.r
        self.subspaces: dict[Pair, slice] = {}
        basis = []
        offset = 0
        for i, j in product(range(len(self.labels)), repeat=2):
            if r[i, j] == 0:
                continue
            di, dj = self.label_dims[i], self.label_dims[j]
            size = int(di * r[i, j] * dj)
            self.subspaces[(i, j)] = slice(offset, offset + size)
            basis.extend((i, j, a, s, b) for a in range(di) for s in range(r[i, j]) for b in range(dj))
            offset += size
        self.basis: tuple[tuple[int, int, int, int, int], ...] = tuple(basis)
        self.N = offset
        self._index = {lab: n for n, lab in enumerate(self.basis)}

    def __repr__(self):
        return f"TripleSpace(N={self.N}, q={self.data.q})"

    @property
    def q(self) -> np.ndarray:
        return self.data.matrix

    def r(self, i: int, j: int) -> int:
        return int(abs(self.data.q[i][j]))

    def gamma(self, i: int, j: int) -> int:
        return int(np.sign(self.data.q[i][j]))

    def index(self, label: tuple[int, int, int, int, int]) -> int:
        return self._index[label]

    def indices(self, pairs: Iterable[Pair]) -> np.ndarray:
        idx = []
        for p in pairs:
            sl = self.subspaces[p]
            idx.extend(range(sl.start, sl.stop))
        return np.array(idx, dtype=int)

    def restrict(self, x: np.ndarray, pairs: Sequence[Pair]) -> np.ndarray:
        idx = self.indices(pairs)
        return x[np.ix_(idx, idx)]

    def block(self, x: np.ndarray, target: Pair, source: Pair) -> np.ndarray:
        return x[self.subspaces[target], self.subspaces[source]]

    def projector(self, pairs: Iterable[Pair]) -> np.ndarray:
        p = np.zeros((self.N, self.N))
        idx = self.indices(pairs)
        p[idx, idx] = 1.0
        return p

    def summand_of(self, label_index: int) -> int:
        return self.labels[label_index].summand

    def to_json(self) -> dict:
        return {"algebra": self.algebra.to_json(), "q": [list(row) for row in self.data.q]}

    @classmethod
    def from_json(cls, data: dict) -> "TripleSpace":
        return build_space(AlgebraSpec.from_json(data["algebra"]), data["q"])


def build_space(algebra: AlgebraSpec, q) -> TripleSpace:
    """Hilbert space for ``algebra`` with Krajewski matrix ``q`` indexed by irrep labels."""
    data = q if isinstance(q, KrajewskiData) else KrajewskiData.from_matrix(q)
    nl = len(algebra.labels)
    if data.matrix.shape != (nl, nl):
        raise ShapeMismatch(f"q must be {nl}x{nl} for labels {[l.name() for l in algebra.labels]}")
    r = data.r
    for i in range(algebra.k):
        rows = [n for n, l in enumerate(algebra.labels) if l.summand == i]
        if not np.any(r[rows, :]):
            raise UnfaithfulRepresentation(f"summand {i + 1} acts as zero on the Hilbert space")
    return TripleSpace(algebra, data)


def _ensure(space: TripleSpace, a: AlgebraElement):
    if a.spec != space.algebra:
        raise AlgebraMismatch("element does not belong to the space's algebra")


def rep_left(space: TripleSpace, a: AlgebraElement) -> np.ndarray:
    """pi(a): irrep_i(a) (x) 1 (x) 1 on every H_ij."""
    _ensure(space, a)
    out = np.zeros((space.N, space.N), dtype=complex)
    reps = [irrep(space.algebra, l)(a) for l in space.labels]
    for (i, j), sl in space.subspaces.items():
        out[sl, sl] = np.kron(reps[i], np.eye(space.r(i, j) * space.label_dims[j]))
    return out


def rep_right(space: TripleSpace, a: AlgebraElement) -> np.ndarray:
    """pi0(a): 1 (x) 1 (x) irrep_j(a)^T on every H_ij."""
    _ensure(space, a)
    out = np.zeros((space.N, space.N), dtype=complex)
    reps = [irrep(space.algebra, l)(a) for l in space.labels]
    for (i, j), sl in space.subspaces.items():
        out[sl, sl] = np.kron(np.eye(space.label_dims[i] * space.r(i, j)), reps[j].T)
    return out


def real_structure(space: TripleSpace) -> AntilinearOperator:
    """J: (i, j, a, s, b) -> (j, i, b, s, a) followed by complex conjugation."""
    u = np.zeros((space.N, space.N), dtype=complex)
    for n, (i, j, a, s, b) in enumerate(space.basis):
        u[space.index((j, i, b, s, a)), n] = 1.0
    return AntilinearOperator(u)


def grading(space: TripleSpace) -> np.ndarray:
    g = np.zeros(space.N)
    for (i, j), sl in space.subspaces.items():
        g[sl] = space.gamma(i, j)
    return np.diag(g).astype(complex)


def fixed_basis_vectors(space: TripleSpace, J: AntilinearOperator | None = None) -> list[tuple]:
    """Basis labels e with J e = e."""
    J = J or real_structure(space)
    out = []
    for n, lab in enumerate(space.basis):
        e = np.zeros(space.N, dtype=complex)
        e[n] = 1
        if max_norm(J.apply(e) - e) < 1e-12:
            out.append(lab)
    return out


def validate_axioms(
    space: TripleSpace,
    J: AntilinearOperator | None = None,
    gamma: np.ndarray | None = None,
    tol: float = DEFAULT_TOL,
) -> CheckReport:
    """Numerically check every real spectral triple axiom that does not involve D.

    ``J`` and ``gamma`` default to the canonical ones; passing others is how
    corrupted structures are tested.
    """
    J = J or real_structure(space)
    g = grading(space) if gamma is None else gamma
    basis = element_basis(space.algebra)
    left = [rep_left(space, a) for a in basis]
    right = [rep_right(space, a) for a in basis]
    eye = np.eye(space.N)
    rep = CheckReport(tol)

    rep.add("J_squared", max_norm(J.square() - eye))
    rep.add("J_antiunitary", max_norm(J.u.conj().T @ J.u - eye))
    rep.add("order_zero", max((max_norm(commutator(b0, a)) for b0 in right for a in left), default=0.0))
    rep.add(
        "opposite_from_J",
        max((max_norm(J.sandwich(rep_left(space, a.adjoint())) - b0) for a, b0 in zip(basis, right)), default=0.0),
    )
    rep.add("gamma_squared", max_norm(g @ g - eye))
    rep.add("gamma_selfadjoint", max_norm(g - g.conj().T))
    rep.add("gamma_commutes_pi", max((max_norm(commutator(g, a)) for a in left), default=0.0))
    rep.add("gamma_commutes_J", max_norm(J.commutes_with(g)))

    vecs = np.array([a.ravel() for a in left]).T
    if space.algebra.base is Base.REAL:
        vecs = realify(vecs)
    rank = numerical_rank(vecs)
    rep.add("faithful", float(len(basis) - rank), passed=rank == len(basis))

    if space.algebra.base is Base.REAL:
        bad = _conjugate_grading_mismatches(space)
        rep.add("conjugate_grading", float(bad), passed=bad == 0, note="gamma equal on H_ij and H_(i bar)j")
    return rep


def _conjugate_grading_mismatches(space: TripleSpace) -> int:
    labels = space.labels
    q = space.q
    bad = 0
    for t, lt in enumerate(labels):
        if lt.conjugate:
            continue
        for tb, lb in enumerate(labels):
            if lb.summand == lt.summand and lb.conjugate:
                for j in range(len(labels)):
                    if q[t, j] * q[tb, j] < 0:
                        bad += 1
    return bad


def summand_projections(space: TripleSpace) -> list[np.ndarray]:
    """pi(P_i) for every summand i."""
    return [rep_left(space, central_projection(space.algebra, i)) for i in range(space.algebra.k)]


def random_krajewski(
    rng: np.random.Generator,
    k_max: int = 3,
    n_max: int = 2,
    q_max: int = 2,
    n_total_max: int = 40,
) -> TripleSpace:
    """Random faithful complex-base triple with k <= k_max summands of size <= n_max."""
    while True:
        k = int(rng.integers(1, k_max + 1))
        ns = [int(rng.integers(1, n_max + 1)) for _ in range(k)]
        q = rng.integers(-q_max, q_max + 1, size=(k, k))
        q = np.triu(q) + np.triu(q, 1).T
        if not all(np.any(q[i]) for i in range(k)):
            continue
        n = sum(abs(q[i, j]) * ns[i] * ns[j] for i in range(k) for j in range(k))
        if n > n_total_max:
            continue
        return build_space(make_algebra("C", [(m, "C") for m in ns]), q)


__all__ = [
    "AntilinearOperator",
    "KrajewskiData",
    "TripleSpace",
    "build_space",
    "fixed_basis_vectors",
    "grading",
    "random_krajewski",
    "real_structure",
    "rep_left",
    "rep_right",
    "summand_projections",
    "validate_axioms",
]
