"""Finite semisimple algebras over R or C.

An algebra is a direct sum of simple summands M_n(F) with F one of R, C, H.
Elements are always stored in a complex embedding: M_n(H) sits inside
M_2n(C) through the usual 2x2 complex form of a quaternion, so all
arithmetic is plain complex matrix arithmetic and realness or
quaternionicity is a checked property of the blocks.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

import numpy as np

from .errors import (
    AlgebraMismatch,
    EmptyAlgebra,
    FieldBaseMismatch,
    IndexOutOfRange,
    InvalidLabel,
)

ELEMENT_TOL = 1e-12


class FieldKind(str, Enum):
    REAL = "R"
    COMPLEX = "C"
    QUATERNION = "H"


class Base(str, Enum):
    REAL = "R"
    COMPLEX = "C"


# q = a + b i + c j + d k  ->  [[a + b i, c + d i], [-c + d i, a - b i]]
QUATERNION_UNITS = (
    np.eye(2, dtype=complex),
    np.array([[1j, 0], [0, -1j]]),
    np.array([[0, 1], [-1, 0]], dtype=complex),
    np.array([[0, 1j], [1j, 0]]),
)
_OMEGA = np.array([[0, 1], [-1, 0]], dtype=complex)


def quaternion_matrix(a: float, b: float, c: float, d: float) -> np.ndarray:
    return a * QUATERNION_UNITS[0] + b * QUATERNION_UNITS[1] + c * QUATERNION_UNITS[2] + d * QUATERNION_UNITS[3]


def is_quaternionic(block: np.ndarray, tol: float = ELEMENT_TOL) -> bool:
    """True if a 2n x 2n complex matrix is the embedding of an n x n quaternion matrix."""
    m = block.shape[0]
    if m % 2:
        return False
    omega = np.kron(np.eye(m // 2), _OMEGA)
    return bool(np.max(np.abs(omega @ block.conj() @ omega.T - block), initial=0.0) <= tol)


@dataclass(frozen=True)
class Summand:
    n: int
    field: FieldKind

    @property
    def dim(self) -> int:
        """Size of the complex embedding."""
        return 2 * self.n if self.field is FieldKind.QUATERNION else self.n


@dataclass(frozen=True, order=True)
class IrrepLabel:
    summand: int
    conjugate: bool = False

    def name(self) -> str:
        """One-based display name, e.g. ``2`` or ``2bar``."""
        return f"{self.summand + 1}{'bar' if self.conjugate else ''}"


@dataclass(frozen=True)
class AlgebraSpec:
    base: Base
    summands: tuple[Summand, ...]

    def __post_init__(self):
        if not self.summands:
            raise EmptyAlgebra("an algebra needs at least one summand")
        for s in self.summands:
            if s.n < 1:
                raise EmptyAlgebra(f"summand size must be >= 1, got {s.n}")
            if self.base is Base.COMPLEX and s.field is not FieldKind.COMPLEX:
                raise FieldBaseMismatch(f"field {s.field.value} needs a real algebra")

    @property
    def k(self) -> int:
        return len(self.summands)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.summands)

    @property
    def labels(self) -> tuple[IrrepLabel, ...]:
        """Complex irreps: one per summand, plus the conjugate of each complex summand of a real algebra."""
        out = []
        for i, s in enumerate(self.summands):
            out.append(IrrepLabel(i))
            if self.base is Base.REAL and s.field is FieldKind.COMPLEX:
                out.append(IrrepLabel(i, True))
        return tuple(out)

    def label_dim(self, label: IrrepLabel) -> int:
        return self.summands[label.summand].dim

    def identity(self) -> "AlgebraElement":
        return AlgebraElement(self, [np.eye(d, dtype=complex) for d in self.dims])

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, [np.zeros((d, d), dtype=complex) for d in self.dims])

    def element(self, blocks: Sequence) -> "AlgebraElement":
        return AlgebraElement(self, blocks)

    def to_json(self) -> dict:
        return {
            "base": self.base.value,
            "summands": [{"n": s.n, "field": s.field.value} for s in self.summands],
        }

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraSpec":
        return make_algebra(
            data["base"], [(int(s["n"]), s.get("field", "C")) for s in data["summands"]]
        )


class AlgebraElement:
    """Immutable element of an :class:`AlgebraSpec`, one complex block per summand."""

    __slots__ = ("spec", "blocks")

    def __init__(self, spec: AlgebraSpec, blocks: Sequence, check: bool = True):
        if len(blocks) != spec.k:
            raise AlgebraMismatch(f"expected {spec.k} blocks, got {len(blocks)}")
        arrs = []
        for s, b in zip(spec.summands, blocks):
            a = np.array(b, dtype=complex)
            if a.ndim == 0:
                a = a * np.eye(s.dim)
            if a.shape != (s.dim, s.dim):
                raise AlgebraMismatch(f"block shape {a.shape} does not fit summand of size {s.dim}")
            if check and s.field is FieldKind.REAL and np.max(np.abs(a.imag), initial=0.0) > ELEMENT_TOL:
                raise AlgebraMismatch("real summand block has imaginary entries")
            if check and s.field is FieldKind.QUATERNION and not is_quaternionic(a):
                raise AlgebraMismatch("block is not in the image of the quaternion embedding")
            a.setflags(write=False)
            arrs.append(a)
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "blocks", tuple(arrs))

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    def _same(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement) or other.spec != self.spec:
            raise AlgebraMismatch("elements belong to different algebras")

    def __add__(self, other):
        self._same(other)
        return AlgebraElement(self.spec, [a + b for a, b in zip(self.blocks, other.blocks)], check=False)

    def __sub__(self, other):
        self._same(other)
        return AlgebraElement(self.spec, [a - b for a, b in zip(self.blocks, other.blocks)], check=False)

    def __neg__(self):
        return AlgebraElement(self.spec, [-a for a in self.blocks], check=False)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._same(other)
            return AlgebraElement(self.spec, [a @ b for a, b in zip(self.blocks, other.blocks)], check=False)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, z) -> "AlgebraElement":
        if self.spec.base is Base.REAL and complex(z).imag != 0:
            raise AlgebraMismatch("a real algebra only admits real scalars")
        return AlgebraElement(self.spec, [z * a for a in self.blocks], check=False)

    def adjoint(self) -> "AlgebraElement":
        return AlgebraElement(self.spec, [a.conj().T for a in self.blocks], check=False)

    def allclose(self, other: "AlgebraElement", tol: float = ELEMENT_TOL) -> bool:
        self._same(other)
        return all(np.max(np.abs(a - b), initial=0.0) <= tol for a, b in zip(self.blocks, other.blocks))

    def block_diag(self) -> np.ndarray:
        """The element as one block-diagonal matrix in the complex embedding."""
        n = sum(self.spec.dims)
        out = np.zeros((n, n), dtype=complex)
        o = 0
        for b in self.blocks:
            d = b.shape[0]
            out[o:o + d, o:o + d] = b
            o += d
        return out

    def __repr__(self):
        return f"AlgebraElement({self.spec.base.value}, dims={self.spec.dims})"


def _field(f) -> FieldKind:
    if isinstance(f, FieldKind):
        return f
    table = {"R": FieldKind.REAL, "C": FieldKind.COMPLEX, "H": FieldKind.QUATERNION}
    try:
        return table[str(f).upper()]
    except KeyError:
        raise FieldBaseMismatch(f"unknown field {f!r}") from None


def make_algebra(base, summands: Sequence[tuple[int, object]]) -> AlgebraSpec:
    """Build a validated :class:`AlgebraSpec` from ``[(n, field), ...]``.

    >>> make_algebra("C", [(2, "C"), (1, "C"), (1, "C")]).dims
    (2, 1, 1)
    """
    b = base if isinstance(base, Base) else Base(str(base).upper())
    if not summands:
        raise EmptyAlgebra("an algebra needs at least one summand")
    return AlgebraSpec(b, tuple(Summand(int(n), _field(f)) for n, f in summands))


def central_projection(spec: AlgebraSpec, i: int) -> AlgebraElement:
    """Identity on summand ``i`` (zero-based), zero elsewhere."""
    if not 0 <= i < spec.k:
        raise IndexOutOfRange(f"summand index {i} outside 0..{spec.k - 1}")
    return AlgebraElement(
        spec,
        [np.eye(d, dtype=complex) if j == i else np.zeros((d, d), dtype=complex) for j, d in enumerate(spec.dims)],
        check=False,
    )


def _unit(n: int, r: int, s: int) -> np.ndarray:
    e = np.zeros((n, n), dtype=complex)
    e[r, s] = 1
    return e


def summand_basis(spec: AlgebraSpec, i: int) -> list[AlgebraElement]:
    s = spec.summands[i]
    blocks = []
    for r in range(s.n):
        for c in range(s.n):
            e = _unit(s.n, r, c)
            if s.field is FieldKind.QUATERNION:
                blocks.extend(np.kron(e, u) for u in QUATERNION_UNITS)
            elif s.field is FieldKind.COMPLEX and spec.base is Base.REAL:
                blocks.extend([e, 1j * e])
            else:
                blocks.append(e)
    zeros = [np.zeros((d, d), dtype=complex) for d in spec.dims]
    out = []
    for b in blocks:
        bl = list(zeros)
        bl[i] = b
        out.append(AlgebraElement(spec, bl, check=False))
    return out


def element_basis(spec: AlgebraSpec) -> list[AlgebraElement]:
    """Basis over the base field, summands in order, matrix units row-major.

    Complex summands of a real algebra contribute ``E, iE`` per matrix unit,
    quaternionic ones ``E 1, E i, E j, E k``.
    """
    out = []
    for i in range(spec.k):
        out.extend(summand_basis(spec, i))
    return out


def random_element(spec: AlgebraSpec, rng: np.random.Generator) -> AlgebraElement:
    """Gaussian combination of the element basis with base-field coefficients."""
    basis = element_basis(spec)
    coef = rng.standard_normal(len(basis))
    if spec.base is Base.COMPLEX:
        coef = coef + 1j * rng.standard_normal(len(basis))
    blocks = [sum(c * b.blocks[j] for c, b in zip(coef, basis)) for j in range(spec.k)]
    return AlgebraElement(spec, blocks, check=False)


def irrep(spec: AlgebraSpec, label: IrrepLabel) -> Callable[[AlgebraElement], np.ndarray]:
    """Complex irreducible representation attached to ``label``.

    Plain labels return the stored block (the 2n x 2n embedding for H),
    conjugate labels its entrywise conjugate.
    """
    if label not in spec.labels:
        raise InvalidLabel(f"{label} is not an irrep label of this algebra")
    i, conj = label.summand, label.conjugate

    def rep(a: AlgebraElement) -> np.ndarray:
        if a.spec != spec:
            raise AlgebraMismatch("element belongs to a different algebra")
        b = a.blocks[i]
        return b.conj() if conj else b

    return rep
