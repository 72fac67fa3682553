"""Differential calculus induced by a Dirac operator.

Universal forms a0 da1 ... dan are represented on the Hilbert space as
pi(a0)[D, pi(a1)]...[D, pi(an)].  Spaces of represented forms (one-forms,
two-forms, junk) are handled as :class:`OperatorSpace` objects, i.e. spans
of matrices with an orthonormal basis from an SVD.  Only degrees up to two
are supported.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .algebra import AlgebraElement, Base, central_projection, element_basis
from .dirac import DiracOperator
from .errors import DegreeUnsupported, InvalidWeight, NotInner
from .hilbert import TripleSpace, real_structure, rep_left, summand_projections
from .linalg import (
    DEFAULT_TOL,
    RANK_RTOL,
    column_span,
    commutator,
    max_norm,
    null_space,
    realify,
)
from .report import CheckReport


def _mat(D) -> np.ndarray:
    return D.matrix if isinstance(D, DiracOperator) else np.asarray(D)


class OperatorSpace:
    """Span of N x N operators.

    With ``real=True`` the span is taken over R (needed for real algebras)
    and the basis is orthonormal for Re Tr(A^dagger B); otherwise over C with
    Tr(A^dagger B).
    """

    def __init__(self, operators, n: int, real: bool = False, rtol: float = RANK_RTOL, scale: float = 0.0):
        self.n = n
        self.real = real
        ops = np.asarray(operators, dtype=complex).reshape(-1, n * n)
        vecs = ops.T
        if real:
            vecs = realify(vecs)
        self._u = column_span(vecs, rtol, scale)

    @classmethod
    def from_vectors(
        cls, vecs: np.ndarray, n: int, real: bool = False, rtol: float = RANK_RTOL, scale: float = 0.0
    ) -> "OperatorSpace":
        obj = cls.__new__(cls)
        obj.n, obj.real = n, real
        obj._u = column_span(vecs, rtol, scale)
        return obj

    @property
    def rank(self) -> int:
        return self._u.shape[1]

    @property
    def basis(self) -> np.ndarray:
        """Orthonormal basis operators, shape (rank, N, N)."""
        u = self._u
        if self.real:
            nn = self.n * self.n
            u = u[:nn] + 1j * u[nn:]
        return u.T.reshape(self.rank, self.n, self.n)

    def _vec(self, x: np.ndarray) -> np.ndarray:
        v = np.asarray(x, dtype=complex).reshape(-1)
        return np.concatenate([v.real, v.imag]) if self.real else v

    def project(self, x: np.ndarray) -> np.ndarray:
        v = self._vec(x)
        p = self._u @ (self._u.conj().T @ v)
        if self.real:
            nn = self.n * self.n
            p = p[:nn] + 1j * p[nn:]
        return p.reshape(self.n, self.n)

    def residual(self, x: np.ndarray) -> float:
        """Frobenius norm of the part of ``x`` outside the span."""
        return float(np.linalg.norm(np.asarray(x) - self.project(x)))

    def contains(self, x: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
        return self.residual(x) < tol

    def subspace_residual(self, other: "OperatorSpace") -> float:
        """Largest residual of ``other``'s basis against this span."""
        return max((self.residual(b) for b in other.basis), default=0.0)

    def __repr__(self):
        return f"OperatorSpace(rank={self.rank}, N={self.n}, real={self.real})"


@dataclass(frozen=True)
class UniversalForm:
    """Finite sum of words c * a0 da1 ... dan, all of the same degree n."""

    terms: tuple[tuple[AlgebraElement, ...], ...]
    coeffs: tuple[complex, ...] = ()

    def __post_init__(self):
        if not self.coeffs:
            object.__setattr__(self, "coeffs", tuple(1.0 for _ in self.terms))
        degs = {len(t) - 1 for t in self.terms}
        if len(degs) > 1:
            raise DegreeUnsupported("mixed-degree sums are not supported")

    @property
    def degree(self) -> int:
        return len(self.terms[0]) - 1 if self.terms else 0

    def __add__(self, other: "UniversalForm") -> "UniversalForm":
        return UniversalForm(self.terms + other.terms, self.coeffs + other.coeffs)

    def scale(self, c) -> "UniversalForm":
        return UniversalForm(self.terms, tuple(c * x for x in self.coeffs))

    def d(self) -> "UniversalForm":
        """d(a0 da1 ... dan) = 1 da0 da1 ... dan."""
        if not self.terms:
            return self
        one = self.terms[0][0].spec.identity()
        return UniversalForm(tuple((one,) + t for t in self.terms), self.coeffs)


UniversalOneForm = UniversalForm


def one_form(a: AlgebraElement, b: AlgebraElement) -> UniversalForm:
    return UniversalForm(((a, b),))


def xi_form(spec) -> UniversalForm:
    """sum_{i != j} P_i dP_j."""
    ps = [central_projection(spec, i) for i in range(spec.k)]
    return UniversalForm(tuple((ps[i], ps[j]) for i in range(spec.k) for j in range(spec.k) if i != j))


def pi_of_form(space: TripleSpace, D, form: UniversalForm) -> np.ndarray:
    """pi(a0)[D, pi(a1)]...[D, pi(an)] summed over the terms; degree <= 2."""
    if form.degree > 2:
        raise DegreeUnsupported(f"degree {form.degree} > 2")
    d = _mat(D)
    out = np.zeros((space.N, space.N), dtype=complex)
    for c, word in zip(form.coeffs, form.terms):
        x = rep_left(space, word[0])
        for a in word[1:]:
            x = x @ commutator(d, rep_left(space, a))
        out += c * x
    return out


class _Words:
    """pi of the element basis and its commutators with D, computed once."""

    def __init__(self, space: TripleSpace, D):
        self.space = space
        self.d = _mat(D)
        self.basis = element_basis(space.algebra)
        self.real = space.algebra.base is Base.REAL
        self.pi = np.array([rep_left(space, a) for a in self.basis])
        self.da = np.array([commutator(self.d, p) for p in self.pi])

    def one_form_ops(self) -> np.ndarray:
        """pi(a db) for all basis pairs, row-major in (a, b)."""
        return np.einsum("aij,bjk->abik", self.pi, self.da).reshape(-1, self.space.N, self.space.N)

    def dd_ops(self) -> np.ndarray:
        """pi(da db) for all basis pairs."""
        return np.einsum("aij,bjk->abik", self.da, self.da).reshape(-1, self.space.N, self.space.N)


def one_forms(space: TripleSpace, D) -> OperatorSpace:
    w = _Words(space, D)
    return OperatorSpace(w.one_form_ops(), space.N, real=w.real)


def _junk(w: _Words) -> OperatorSpace:
    n = w.space.N
    m1 = w.one_form_ops().reshape(-1, n * n).T
    m2 = w.dd_ops().reshape(-1, n * n).T
    if w.real:
        kernel = null_space(realify(m1))
        vecs = realify(m2 @ kernel)
    else:
        kernel = null_space(m1)
        vecs = m2 @ kernel
    # junk that vanishes exactly comes out as round-off, so rank it against pi(da db)
    return OperatorSpace.from_vectors(vecs, n, real=w.real, scale=float(np.linalg.norm(m2, 2)) if m2.size else 0.0)


def junk_two_forms(space: TripleSpace, D) -> OperatorSpace:
    """span{pi(d omega) : omega a universal one-form with pi(omega) = 0}."""
    return _junk(_Words(space, D))


def _two_form_image(w: _Words) -> OperatorSpace:
    n = w.space.N
    dd = OperatorSpace(w.dd_ops(), n, real=w.real)
    if dd.rank == 0:
        return dd
    # span{pi(a) X : X in span pi(db dc)} is all of pi(Omega^2_u)
    ops = np.einsum("aij,rjk->arik", w.pi, dd.basis).reshape(-1, n, n)
    return OperatorSpace(ops, n, real=w.real)


class TwoFormDims(NamedTuple):
    omega2u_rank: int
    junk_rank: int
    omega2_dim: int
    containment_residual: float

    def to_json(self) -> dict:
        return {
            "omega2u_rank": self.omega2u_rank,
            "junk_rank": self.junk_rank,
            "omega2_dim": self.omega2_dim,
            "junk_containment_residual": self.containment_residual,
        }


def two_forms(space: TripleSpace, D) -> TwoFormDims:
    w = _Words(space, D)
    image = _two_form_image(w)
    junk = _junk(w)
    return TwoFormDims(image.rank, junk.rank, image.rank - junk.rank, image.subspace_residual(junk))


@dataclass
class XiData:
    form: UniversalForm
    pi_xi: np.ndarray
    pi_Xi: np.ndarray
    report: CheckReport = field(repr=False)

    @property
    def pi_xi_sq(self) -> np.ndarray:
        return self.pi_xi @ self.pi_xi


def xi(space: TripleSpace, D, tol: float = DEFAULT_TOL) -> XiData:
    """The inner one-form xi, pi(Xi) and the identities they satisfy."""
    d = _mat(D)
    form = xi_form(space.algebra)
    pi_xi = pi_of_form(space, d, form)
    ps = summand_projections(space)
    sq = pi_xi @ pi_xi
    pi_Xi = sum(p @ sq @ p for p in ps)
    J = real_structure(space)

    rep = CheckReport(tol)
    basis = element_basis(space.algebra)
    rep.add(
        "da_is_commutator_with_xi",
        max((max_norm(commutator(pi_xi, a) - commutator(d, a)) for a in map(lambda b: rep_left(space, b), basis)),
            default=0.0),
    )
    rep.add("D_equals_xi_plus_JxiJ", max_norm(d - pi_xi - J.sandwich(pi_xi)))
    minus_sum = -sum(p @ commutator(d, p) for p in ps)
    rep.add("xi_equals_minus_sum_PdP", max_norm(pi_xi - minus_sum))
    rep.add("xi_selfadjoint", max_norm(pi_xi - pi_xi.conj().T))
    rep.add("P_xi_P_vanishes", max((max_norm(p @ pi_xi @ p) for p in ps), default=0.0))
    return XiData(form, pi_xi, pi_Xi, rep)


@dataclass(frozen=True)
class InnerReport:
    is_inner: bool
    commutator_residual: float
    xi_sq_minus_Xi: float
    consistent: bool
    gray_zone: bool
    witnesses: dict

    def to_json(self) -> dict:
        return {
            "is_inner": self.is_inner,
            "center_commutator_residual": self.commutator_residual,
            "xi_sq_minus_Xi_residual": self.xi_sq_minus_Xi,
            "consistent": self.consistent,
            "gray_zone": self.gray_zone,
        }


def inner_check(space: TripleSpace, D, tol: float = DEFAULT_TOL, data: XiData | None = None) -> InnerReport:
    """Compare max_i ||[xi^2, P_i]|| with ||xi^2 - Xi||; both must fall on the same side of tol.

    Residuals between tol and 10 tol are flagged as gray zone.
    """
    data = data or xi(space, D, tol)
    sq = data.pi_xi_sq
    per_summand = [max_norm(commutator(sq, p)) for p in summand_projections(space)]
    a = max(per_summand, default=0.0)
    b = max_norm(sq - data.pi_Xi)
    gray = any(tol <= r < 10 * tol for r in (a, b))
    consistent = (a < tol) == (b < tol)
    return InnerReport(
        is_inner=a < tol and b < tol,
        commutator_residual=a,
        xi_sq_minus_Xi=b,
        consistent=consistent,
        gray_zone=gray,
        witnesses={"per_summand_commutator": per_summand},
    )


def dxi_identity_check(space: TripleSpace, D, junk: OperatorSpace | None = None) -> float:
    """Residual outside junk of pi(d xi) - pi(xi)^2 - sum_i P_i pi(xi)^2 P_i."""
    d = _mat(D)
    ps = summand_projections(space)
    lhs = -sum(commutator(d, p) @ commutator(d, p) for p in ps)
    data = xi(space, d)
    rhs = data.pi_xi_sq + data.pi_Xi
    junk = junk if junk is not None else junk_two_forms(space, d)
    return junk.residual(lhs - rhs)


def curvature_flat_check(
    space: TripleSpace,
    D,
    tol: float = DEFAULT_TOL,
    junk: OperatorSpace | None = None,
) -> float:
    """Residual outside junk of F(-2 xi) = pi(d(-2 xi)) + pi(-2 xi)^2.

    Refuses with :class:`NotInner` when the calculus is not inner at degree two.
    """
    d = _mat(D)
    data = xi(space, d, tol)
    report = inner_check(space, d, tol, data)
    if not report.is_inner:
        raise NotInner(f"xi^2 - Xi residual {report.xi_sq_minus_Xi:.3e} exceeds {tol}")
    h = data.form.scale(-2.0)
    curvature = pi_of_form(space, d, h.d()) + 4.0 * data.pi_xi_sq
    junk = junk if junk is not None else junk_two_forms(space, d)
    return junk.residual(curvature)


def center_one_forms(space: TripleSpace, D, omega1: OperatorSpace | None = None) -> int:
    """dim{omega in pi(Omega^1) : [omega, pi(a)] = 0 for every basis element a}."""
    omega1 = omega1 if omega1 is not None else one_forms(space, D)
    if omega1.rank == 0:
        return 0
    basis = omega1.basis
    # accumulate the Gram matrix so memory stays at rank^2
    gram = np.zeros((omega1.rank, omega1.rank))
    for a in element_basis(space.algebra):
        pa = rep_left(space, a)
        m = np.array([commutator(b, pa).ravel() for b in basis]).T
        m = realify(m) if omega1.real else m
        gram = gram + m.conj().T @ m
    if omega1.real:
        gram = gram.real
    return null_space(gram).shape[1]


def _weight_operator(space: TripleSpace, Z, tol: float) -> np.ndarray:
    if Z is None:
        return np.eye(space.N)
    z = rep_left(space, Z) if isinstance(Z, AlgebraElement) else np.asarray(Z, dtype=complex)
    if z.shape != (space.N, space.N):
        raise InvalidWeight(f"weight has shape {z.shape}, expected {(space.N, space.N)}")
    if max_norm(z - z.conj().T) >= tol:
        raise InvalidWeight("weight operator is not self-adjoint")
    # pi(A) is spanned by unitaries, so commuting with the basis is gauge invariance
    for a in element_basis(space.algebra):
        if max_norm(commutator(z, rep_left(space, a))) >= tol:
            raise InvalidWeight("weight operator is not invariant under algebra unitaries")
    return z


def form_inner_product(space: TripleSpace, D, omega, rho, Z=None, tol: float = DEFAULT_TOL) -> complex:
    """(omega, rho)_Z = Tr(Z pi(omega) pi(rho)^dagger); Z defaults to the identity."""
    z = _weight_operator(space, Z, tol)
    a = pi_of_form(space, D, omega) if isinstance(omega, UniversalForm) else np.asarray(omega)
    b = pi_of_form(space, D, rho) if isinstance(rho, UniversalForm) else np.asarray(rho)
    return complex(np.trace(z @ a @ b.conj().T))


def algebra_membership_residual(space: TripleSpace, x: np.ndarray, pairs: Sequence | None = None) -> float:
    """Max-norm distance from ``x`` to pi(A), optionally on a subset of subspaces."""
    basis = element_basis(space.algebra)
    ops = [rep_left(space, a) for a in basis]
    if pairs is not None:
        ops = [space.restrict(o, pairs) for o in ops]
        x = space.restrict(x, pairs)
    m = np.array([o.ravel() for o in ops]).T
    v = np.asarray(x).ravel()
    if space.algebra.base is Base.REAL:
        coef, *_ = np.linalg.lstsq(realify(m), np.concatenate([v.real, v.imag]), rcond=None)
    else:
        coef, *_ = np.linalg.lstsq(m, v, rcond=None)
    return max_norm(m @ coef - v)


@dataclass(frozen=True)
class FormsReport:
    omega1_rank: int
    omega2u_rank: int
    junk_rank: int
    omega2_dim: int
    is_inner: bool
    center_dim: int
    flat_residual: float | None
    checks: CheckReport

    def to_json(self) -> dict:
        return {
            "omega1_rank": self.omega1_rank,
            "omega2u_rank": self.omega2u_rank,
            "junk_rank": self.junk_rank,
            "omega2_dim": self.omega2_dim,
            "is_inner": self.is_inner,
            "center_dim": self.center_dim,
            "flat_residual": self.flat_residual,
            "checks": self.checks.to_json(),
        }


def forms_report(space: TripleSpace, D, tol: float = DEFAULT_TOL) -> FormsReport:
    """Everything the ``forms`` command prints, computed with shared intermediates."""
    d = _mat(D)
    w = _Words(space, d)
    omega1 = OperatorSpace(w.one_form_ops(), space.N, real=w.real)
    image = _two_form_image(w)
    junk = _junk(w)
    data = xi(space, d, tol)
    inner = inner_check(space, d, tol, data)
    checks = CheckReport(tol)
    for name, c in data.report.checks.items():
        checks.checks[name] = c
    checks.add("junk_in_image", image.subspace_residual(junk))
    checks.add("inner_criteria_agree", 0.0 if inner.consistent else 1.0, passed=inner.consistent)
    checks.add("dxi_identity", dxi_identity_check(space, d, junk))
    center = center_one_forms(space, d, omega1)
    checks.add("no_center", float(center), passed=center == 0)
    flat = None
    if inner.is_inner:
        flat = curvature_flat_check(space, d, tol, junk)
        checks.add("flat_curvature", flat)
    return FormsReport(
        omega1_rank=omega1.rank,
        omega2u_rank=image.rank,
        junk_rank=junk.rank,
        omega2_dim=image.rank - junk.rank,
        is_inner=inner.is_inner,
        center_dim=center,
        flat_residual=flat,
        checks=checks,
    )


__all__ = [
    "UniversalOneForm",
    "FormsReport",
    "InnerReport",
    "OperatorSpace",
    "TwoFormDims",
    "UniversalForm",
    "XiData",
    "algebra_membership_residual",
    "center_one_forms",
    "curvature_flat_check",
    "dxi_identity_check",
    "form_inner_product",
    "forms_report",
    "inner_check",
    "junk_two_forms",
    "one_form",
    "one_forms",
    "pi_of_form",
    "two_forms",
    "xi",
    "xi_form",
]
