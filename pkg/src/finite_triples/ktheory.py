"""Intersection form from the index pairing of D with projector pairs.

For summands I, J take e_I the first diagonal matrix unit of summand I and
compress D to the range of E = pi(e_I) pi0(e_J).  The entry is the Fredholm
index of the compressed odd part, oriented so that positively graded
subspaces count positively.  In finite dimension this reduces to
dim E H_+ - dim E H_-, but it is computed from D, which is what the
D-independence check exercises.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import sympy

from .algebra import FieldKind
from .dirac import DiracOperator, random_dirac
from .errors import DisagreementAcrossD
from .hilbert import TripleSpace, grading
from .linalg import numerical_rank


@dataclass(frozen=True)
class IntersectionForm:
    matrix: tuple[tuple[int, ...], ...]
    quaternionic: tuple[bool, ...]
    doubled: bool = True

    @property
    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=int).reshape(len(self.matrix), len(self.matrix))

    def to_json(self) -> dict:
        return {"matrix": [list(r) for r in self.matrix], "quaternionic": list(self.quaternionic)}


@dataclass(frozen=True)
class PoincareResult:
    nondegenerate: bool
    determinant: int

    def to_json(self) -> dict:
        return {"nondegenerate": self.nondegenerate, "determinant": self.determinant}


def _first_entry_mask(space: TripleSpace, summand: int, side: int, doubling: bool) -> np.ndarray:
    """Basis vectors in the range of e (side 0) or e^o (side 1) for ``summand``.

    A quaternionic matrix unit is a 2x2 identity in the complex embedding,
    so with doubling it keeps two irrep coordinates instead of one.
    """
    quat = space.algebra.summands[summand].field is FieldKind.QUATERNION
    width = 2 if quat and doubling else 1
    mask = np.zeros(space.N, dtype=bool)
    for n, (i, j, a, _, b) in enumerate(space.basis):
        label, coord = (i, a) if side == 0 else (j, b)
        if space.labels[label].summand == summand and coord < width:
            mask[n] = True
    return mask


def _pairing_matrix(space: TripleSpace, d: np.ndarray, doubling: bool) -> np.ndarray:
    k = space.algebra.k
    g = np.real(np.diag(grading(space)))
    out = np.zeros((k, k), dtype=int)
    for si in range(k):
        left = _first_entry_mask(space, si, 0, doubling)
        for sj in range(k):
            e = left & _first_entry_mask(space, sj, 1, doubling)
            plus = np.flatnonzero(e & (g > 0))
            minus = np.flatnonzero(e & (g < 0))
            # compressed D from the odd part onto the even part
            block = d[np.ix_(plus, minus)]
            rank = numerical_rank(block) if block.size else 0
            coker = len(plus) - rank
            ker = len(minus) - rank
            out[si, sj] = coker - ker
    return out


def index_pairing(
    space: TripleSpace,
    D: DiracOperator | np.ndarray | None = None,
    n_random: int = 3,
    doubling: bool = True,
    seed=None,
) -> IntersectionForm:
    """Pairing matrix over summands, recomputed for ``n_random`` random D (plus ``D`` if given)."""
    rng = np.random.default_rng(seed)
    ds = [] if D is None else [D.matrix if isinstance(D, DiracOperator) else np.asarray(D)]
    ds += [random_dirac(space, rng).matrix for _ in range(n_random)]
    if not ds:
        ds = [np.zeros((space.N, space.N))]
    results = [_pairing_matrix(space, d, doubling) for d in ds]
    for r in results[1:]:
        if not np.array_equal(r, results[0]):
            raise DisagreementAcrossD(f"pairing changed with D:\n{results[0]}\nvs\n{r}")
    quat = tuple(s.field is FieldKind.QUATERNION for s in space.algebra.summands)
    return IntersectionForm(tuple(tuple(int(x) for x in row) for row in results[0]), quat, doubling)


def poincare_check(form) -> PoincareResult:
    """Exact integer determinant; Poincare duality means it is nonzero."""
    m = form.array if isinstance(form, IntersectionForm) else np.asarray(form)
    det = int(sympy.Matrix(m.astype(int).tolist()).det()) if m.size else 1
    return PoincareResult(det != 0, det)


__all__ = ["IntersectionForm", "PoincareResult", "index_pairing", "poincare_check"]
