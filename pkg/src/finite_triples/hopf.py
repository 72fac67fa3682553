"""Group algebras as Hopf algebras and bicovariant calculi on finite groups.

One-forms of the calculus built from a representation (V, rho) live in
CG (x) V and are stored as arrays of shape (|G|, dim V): row g is the
V-coefficient of g.  The bimodule structure is

    h (g (x) v) = hg (x) rho(h) v,      (g (x) v) h = gh (x) v,

and with chi = e (x) v the differential is dg = [g, chi] = g (x) (rho(g) - 1) v.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

import numpy as np

from .algebra import AlgebraElement, AlgebraSpec, central_projection, make_algebra
from .dirac import DiracOperator, random_dirac
from .errors import (
    NoIdentity,
    NoInverse,
    NotAssociative,
    SingularSystem,
    SizeMismatch,
    SpanConditionFailed,
)
from .hilbert import TripleSpace, rep_left
from .linalg import DEFAULT_TOL, commutator, max_norm, null_space, numerical_rank
from .report import CheckReport

EXACT_TOL = 1e-12
MAX_ORDER = 24


@dataclass(frozen=True)
class FiniteGroup:
    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.names)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def index(self, name: str | int) -> int:
        return name if isinstance(name, int) else self.names.index(name)

    def conjugate(self, g: int, h: int) -> int:
        """h g h^-1."""
        return self.mul(self.mul(h, g), self.inverse[h])

    def conjugacy_class(self, g: int) -> frozenset[int]:
        return frozenset(self.conjugate(g, h) for h in range(self.order))

    def to_json(self) -> dict:
        return {"elements": list(self.names), "table": [list(r) for r in self.table]}


def make_group(table, names: Sequence[str] | None = None) -> FiniteGroup:
    """Validate a multiplication table exhaustively."""
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise SizeMismatch(f"group table must be square and nonempty, got shape {t.shape}")
    m = t.shape[0]
    if m > MAX_ORDER:
        raise SizeMismatch(f"groups of order > {MAX_ORDER} are not supported")
    if t.min() < 0 or t.max() >= m:
        raise SizeMismatch("table entries must lie in 0..m-1")
    names = tuple(names) if names is not None else tuple(str(i) for i in range(m))
    if len(names) != m:
        raise SizeMismatch(f"{len(names)} names for a group of order {m}")
    for g, h, k in product(range(m), repeat=3):
        if t[t[g, h], k] != t[g, t[h, k]]:
            raise NotAssociative(f"({names[g]} {names[h]}) {names[k]} != {names[g]} ({names[h]} {names[k]})")
    ids = [e for e in range(m) if all(t[e, g] == g and t[g, e] == g for g in range(m))]
    if not ids:
        raise NoIdentity("no two-sided identity element")
    e = ids[0]
    inverse = []
    for g in range(m):
        inv = [h for h in range(m) if t[g, h] == e and t[h, g] == e]
        if not inv:
            raise NoInverse(f"{names[g]} has no inverse")
        inverse.append(inv[0])
    return FiniteGroup(names, tuple(tuple(int(x) for x in row) for row in t), e, tuple(inverse))


def group_from_json(data: dict) -> FiniteGroup:
    return make_group(data["table"], data.get("elements"))


# S_3 as permutations of {0, 1, 2}; a and b are adjacent transpositions, c = aba
_S3_WORDS = {"a": "a", "b": "b", "c": "aba", "e": "", "ab": "ab", "ba": "ba"}
S3_ORDER = ("a", "b", "c", "e", "ab", "ba")


def _perm(word: str) -> tuple[int, ...]:
    gens = {"a": (1, 0, 2), "b": (0, 2, 1)}
    p = (0, 1, 2)
    for letter in word:
        g = gens[letter]
        p = tuple(p[g[x]] for x in range(3))  # p then g on the right: (p g)(x) = p(g(x))
    return p


def s3_group() -> FiniteGroup:
    """S_3 with elements in the order a, b, c, e, ab, ba."""
    perms = [_perm(_S3_WORDS[n]) for n in S3_ORDER]
    lookup = {p: i for i, p in enumerate(perms)}
    table = [[lookup[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]
    return make_group(table, S3_ORDER)


def cyclic_group(n: int) -> FiniteGroup:
    return make_group([[(i + j) % n for j in range(n)] for i in range(n)], [f"g{i}" for i in range(n)])


def builtin_group(name: str) -> FiniteGroup:
    name = name.lower()
    if name == "s3":
        return s3_group()
    if name.startswith("z") and name[1:].isdigit():
        return cyclic_group(int(name[1:]))
    raise SizeMismatch(f"unknown built-in group {name!r}")


@dataclass(frozen=True)
class HaarMeasure:
    group: FiniteGroup

    def __call__(self, f) -> complex:
        """mu on a group-algebra vector (coefficients per element) or a single element index."""
        if isinstance(f, (int, np.integer)):
            return 1.0 if f == self.group.identity else 0.0
        return complex(np.asarray(f)[self.group.identity])

    def invariance_residual(self) -> float:
        """max over generators g of |(id (x) mu) Delta g - 1 mu(g)| and the mirrored identity.

        With Delta g = g (x) g both sides reduce to g mu(g) and e mu(g).
        """
        worst = 0.0
        e = self.group.identity
        for g in range(self.group.order):
            lhs = np.zeros(self.group.order)
            lhs[g] = self(g)
            rhs = np.zeros(self.group.order)
            rhs[e] = self(g)
            worst = max(worst, max_norm(lhs - rhs))
        return worst


def haar_measure(group: FiniteGroup) -> HaarMeasure:
    return HaarMeasure(group)


@dataclass(frozen=True)
class GroupRep:
    group: FiniteGroup
    matrices: tuple[np.ndarray, ...]
    name: str = ""

    @property
    def dim(self) -> int:
        return self.matrices[0].shape[0]

    def __call__(self, g: int | str) -> np.ndarray:
        return self.matrices[self.group.index(g)]

    def on_vector(self, x: np.ndarray) -> np.ndarray:
        """Linear extension to the group algebra: sum_g x_g rho(g)."""
        return np.tensordot(np.asarray(x, dtype=complex), np.array(self.matrices), axes=1)

    def homomorphism_residual(self) -> float:
        g_ = self.group
        worst = max_norm(self(g_.identity) - np.eye(self.dim))
        for g, h in product(range(g_.order), repeat=2):
            worst = max(worst, max_norm(self(g) @ self(h) - self(g_.mul(g, h))))
        return worst


def make_rep(group: FiniteGroup, matrices: Sequence, name: str = "", tol: float = EXACT_TOL) -> GroupRep:
    rep = GroupRep(group, tuple(np.atleast_2d(np.asarray(m, dtype=complex)) for m in matrices), name)
    if rep.homomorphism_residual() > tol:
        raise SizeMismatch(f"representation {name!r} is not a homomorphism")
    return rep


def direct_sum(*reps: GroupRep) -> GroupRep:
    g = reps[0].group
    mats = []
    for k in range(g.order):
        blocks = [r.matrices[k] for r in reps]
        n = sum(b.shape[0] for b in blocks)
        m = np.zeros((n, n), dtype=complex)
        o = 0
        for b in blocks:
            m[o:o + b.shape[0], o:o + b.shape[0]] = b
            o += b.shape[0]
        mats.append(m)
    return GroupRep(g, tuple(mats), "+".join(r.name for r in reps))


_S3_TWO_DIM = {
    "a": np.diag([1.0, -1.0]),
    "b": np.array([[-0.5, np.sqrt(3) / 2], [np.sqrt(3) / 2, 0.5]]),
}


def _word_matrix(images: dict, word: str, dim: int) -> np.ndarray:
    m = np.eye(dim, dtype=complex)
    for letter in word:
        m = m @ images[letter]
    return m


def s3_irreps() -> list[GroupRep]:
    """Trivial, sign and the two-dimensional irreducible representation."""
    g = s3_group()
    out = []
    for name, images, dim in (
        ("trivial", {"a": np.eye(1), "b": np.eye(1)}, 1),
        ("sign", {"a": -np.eye(1), "b": -np.eye(1)}, 1),
        ("two", _S3_TWO_DIM, 2),
    ):
        out.append(make_rep(g, [_word_matrix(images, _S3_WORDS[n], dim) for n in g.names], name))
    return out


@dataclass(frozen=True)
class GroupAlgebraMap:
    """Images of group elements in a semisimple algebra."""

    group: FiniteGroup
    spec: AlgebraSpec
    images: tuple[AlgebraElement, ...]

    def __call__(self, g: int | str) -> AlgebraElement:
        return self.images[self.group.index(g)]

    def verify(self, tol: float = EXACT_TOL) -> CheckReport:
        rep = CheckReport(tol)
        g_ = self.group
        worst = max(
            (max_norm(self(g).block_diag() @ self(h).block_diag() - self(g_.mul(g, h)).block_diag())
             for g, h in product(range(g_.order), repeat=2)),
            default=0.0,
        )
        rep.add("multiplicative", worst)
        rep.add("unital", max_norm(self(g_.identity).block_diag() - self.spec.identity().block_diag()))
        vecs = np.array([np.concatenate([b.ravel() for b in x.blocks]) for x in self.images]).T
        rank = numerical_rank(vecs)
        complex_dim = sum(b.size for b in self.images[0].blocks)
        rep.add("bijective", float(abs(rank - g_.order)), passed=rank == g_.order == complex_dim)
        return rep


def wedderburn_iso_s3() -> tuple[AlgebraSpec, GroupAlgebraMap]:
    """C S_3 = M_2(C) + C + C; the scalar blocks are the trivial and sign characters."""
    spec = make_algebra("C", [(2, "C"), (1, "C"), (1, "C")])
    g = s3_group()
    images = {
        "a": [_S3_TWO_DIM["a"], np.eye(1), -np.eye(1)],
        "b": [_S3_TWO_DIM["b"], np.eye(1), -np.eye(1)],
    }
    elems = []
    for n in g.names:
        blocks = [np.eye(2, dtype=complex), np.eye(1, dtype=complex), np.eye(1, dtype=complex)]
        for letter in _S3_WORDS[n]:
            blocks = [x @ y for x, y in zip(blocks, images[letter])]
        elems.append(spec.element(blocks))
    iso = GroupAlgebraMap(g, spec, tuple(elems))
    if not iso.verify().passed:
        raise SingularSystem("Wedderburn map failed verification")
    return spec, iso


@dataclass(frozen=True)
class HaarWeight:
    weights: tuple[float, ...]
    multiplicities: tuple[int, ...]
    operator: np.ndarray = field(repr=False)
    report: CheckReport = field(repr=False)

    def to_json(self) -> dict:
        return {
            "weights": list(self.weights),
            "multiplicities": list(self.multiplicities),
            "checks": self.report.to_json(),
        }


def haar_weight_operator(space: TripleSpace, iso: GroupAlgebraMap, tol: float = DEFAULT_TOL) -> HaarWeight:
    """Weights z_i with Tr(pi(sum z_i P_i) pi(iso(g))) = delta_{g,e}.

    The trace of pi(P_i) pi(a) is m_i chi_i(a) with m_i the multiplicity of
    summand i in the left representation, so the weights solve
    sum_i z_i m_i chi_i(g) = delta_{g,e}.
    """
    if iso.spec != space.algebra:
        raise SizeMismatch("isomorphism targets a different algebra")
    if not iso.verify().passed:
        raise SingularSystem("group map is not an algebra isomorphism")
    spec = space.algebra
    r = space.data.r
    mult = []
    for i in range(spec.k):
        rows = [t for t, l in enumerate(space.labels) if l.summand == i]
        mult.append(int(sum(r[t, j] * space.label_dims[j] for t in rows for j in range(len(space.labels)))))
    if min(mult) <= 0:
        raise SingularSystem(f"left multiplicities {mult} must be positive")
    g = iso.group
    chars = np.array([[np.trace(iso(h).blocks[i]) for i in range(spec.k)] for h in range(g.order)])
    system = chars * np.array(mult)
    rhs = np.zeros(g.order)
    rhs[g.identity] = 1.0
    if numerical_rank(system) < spec.k:
        raise SingularSystem("characters do not determine the weights")
    z, *_ = np.linalg.lstsq(system, rhs, rcond=None)
    if max_norm(system @ z - rhs) > tol:
        raise SingularSystem("no weights reproduce the Haar measure")
    z = z.real
    op = sum(zi * rep_left(space, central_projection(spec, i)) for i, zi in enumerate(z))
    rep = CheckReport(tol)
    traces = [np.trace(op @ rep_left(space, iso(h))) for h in range(g.order)]
    rep.add("trace_is_haar", max(abs(t - (1.0 if h == g.identity else 0.0)) for h, t in enumerate(traces)))
    rep.add("positive", max(0.0, float(-min(z))), passed=bool(min(z) > 0))
    return HaarWeight(tuple(float(x) for x in z), tuple(mult), op, rep)


@dataclass
class BicovariantCalculus:
    group: FiniteGroup
    rep: GroupRep
    v: np.ndarray
    report: CheckReport = field(repr=False)

    @property
    def dim(self) -> int:
        return self.rep.dim

    def zero_form(self) -> np.ndarray:
        return np.zeros((self.group.order, self.dim), dtype=complex)

    def basic(self, g: int | str, w) -> np.ndarray:
        """The one-form g (x) w."""
        out = self.zero_form()
        out[self.group.index(g)] = w
        return out

    def left(self, x, omega: np.ndarray) -> np.ndarray:
        """x omega for x an element index or a group-algebra vector."""
        coeffs = self._coeffs(x)
        out = self.zero_form()
        for h, c in enumerate(coeffs):
            if c == 0:
                continue
            for g in range(self.group.order):
                out[self.group.mul(h, g)] += c * (self.rep(h) @ omega[g])
        return out

    def right(self, omega: np.ndarray, x) -> np.ndarray:
        coeffs = self._coeffs(x)
        out = self.zero_form()
        for h, c in enumerate(coeffs):
            if c == 0:
                continue
            for g in range(self.group.order):
                out[self.group.mul(g, h)] += c * omega[g]
        return out

    def _coeffs(self, x) -> np.ndarray:
        if isinstance(x, (int, np.integer, str)):
            c = np.zeros(self.group.order, dtype=complex)
            c[self.group.index(x)] = 1.0
            return c
        return np.asarray(x, dtype=complex)

    def chi(self) -> np.ndarray:
        return self.basic(self.group.identity, self.v)

    def d(self, x) -> np.ndarray:
        """d x = [x, chi]; on a group element g (x) (rho(g) - 1) v."""
        chi = self.chi()
        return self.left(x, chi) - self.right(chi, x)

    def leibniz_residual(self) -> float:
        g_ = self.group
        return max(
            max_norm(self.d(g_.mul(g, h)) - self.right(self.d(g), h) - self.left(g, self.d(h)))
            for g, h in product(range(g_.order), repeat=2)
        )


def bicovariant_calculus(group: FiniteGroup, rep: GroupRep, v, tol: float = EXACT_TOL) -> BicovariantCalculus:
    """Calculus with chi = e (x) v; requires {v - rho(h) v} to span V."""
    v = np.asarray(v, dtype=complex).reshape(-1)
    if v.shape[0] != rep.dim:
        raise SizeMismatch(f"v has length {v.shape[0]}, representation has dimension {rep.dim}")
    diffs = np.array([v - rep(h) @ v for h in range(group.order)]).T
    if numerical_rank(diffs) < rep.dim:
        raise SpanConditionFailed("{v - rho(h) v} does not span the representation space")
    calc = BicovariantCalculus(group, rep, v, CheckReport(tol))
    calc.report.add("leibniz", calc.leibniz_residual())
    calc.report.add("d_identity_zero", max_norm(calc.d(group.identity)))
    if not calc.report.passed:
        raise SpanConditionFailed(f"calculus checks failed: {calc.report.failures()}")
    return calc


def inner_chi(group: FiniteGroup, calc: BicovariantCalculus, tol: float = EXACT_TOL) -> tuple[np.ndarray, float]:
    """chi = (1/|G|) sum_h h^-1 dh and the residual of dg = [g, chi] over all g.

    With the bimodule rules above this sign gives dg = [g, chi]; the opposite
    sign gives [chi, g].
    """
    chi = calc.zero_form()
    for h in range(group.order):
        chi += calc.left(group.inverse[h], calc.d(h))
    chi /= group.order
    worst = max(
        max_norm(calc.d(g) - (calc.left(g, chi) - calc.right(chi, g))) for g in range(group.order)
    )
    return chi, worst


def calculus_center(group: FiniteGroup, rep: GroupRep, tol: float = EXACT_TOL) -> np.ndarray:
    """Basis of central one-forms sum_g g (x) v_g, shape (count, |G|, dim V).

    Central means rho(h) v_g = v_{h g h^-1} for all g, h.
    """
    n, m = group.order, rep.dim
    rows = []
    for g, h in product(range(n), repeat=2):
        block = np.zeros((m, n * m), dtype=complex)
        block[:, g * m:(g + 1) * m] += rep(h)
        k = group.conjugate(g, h)
        block[:, k * m:(k + 1) * m] -= np.eye(m)
        rows.append(block)
    kernel = null_space(np.vstack(rows))
    return kernel.T.reshape(-1, n, m)


def center_commutation_residual(calc: BicovariantCalculus, forms: np.ndarray) -> float:
    """max ||h w - w h|| over the given forms and all group elements."""
    return max(
        (max_norm(calc.left(h, w) - calc.right(w, h)) for w in forms for h in range(calc.group.order)),
        default=0.0,
    )


@dataclass(frozen=True)
class BicovarianceReport:
    nonzero: dict[str, bool]
    uniform: dict[str, bool]
    closed_under_conjugation: bool
    uniform_condition: bool

    @property
    def bicovariant(self) -> bool:
        return self.uniform_condition and self.closed_under_conjugation

    def nonzero_elements(self) -> set[str]:
        return {g for g, nz in self.nonzero.items() if nz}

    def to_json(self) -> dict:
        return {
            "nonzero": self.nonzero,
            "uniform": self.uniform,
            "closed_under_conjugation": self.closed_under_conjugation,
            "uniform_condition": self.uniform_condition,
            "bicovariant": self.bicovariant,
        }


def chi_operator(space: TripleSpace, D, group: FiniteGroup, g: int) -> np.ndarray:
    """chi^g as an operator: the blocks D_{ij,(i g^-1) j}, zero elsewhere."""
    d = D.matrix if isinstance(D, DiracOperator) else np.asarray(D)
    out = np.zeros_like(d, dtype=complex)
    ginv = group.inverse[g]
    for (i, j), sl in space.subspaces.items():
        src = (group.mul(i, ginv), j)
        if src in space.subspaces and src != (i, j):
            out[sl, space.subspaces[src]] = d[sl, space.subspaces[src]]
    return out


def fn_algebra_bicovariance(space: TripleSpace, D, group: FiniteGroup, tol: float = DEFAULT_TOL) -> BicovarianceReport:
    """Bicovariance diagnostics for a function algebra C^n with points = group elements.

    Points are matched to group elements in declaration order.  For every
    g != e: whether chi^g vanishes, and whether it is uniform (for every i
    some j has D_{ij,(ig)j} != 0).  By self-adjointness of D the uniform
    condition is the same whether written with g or g^-1.
    """
    spec = space.algebra
    if spec.k != group.order or any(s.n != 1 for s in spec.summands) or len(space.labels) != group.order:
        raise SizeMismatch(f"need C^{group.order} with one point per group element")
    d = D.matrix if isinstance(D, DiracOperator) else np.asarray(D)
    nonzero, uniform = {}, {}
    for g in range(group.order):
        if g == group.identity:
            continue
        name = group.names[g]
        nonzero[name] = max_norm(chi_operator(space, d, group, g)) > tol
        ok = True
        for i in range(group.order):
            k = group.mul(i, g)
            hit = any(
                (i, j) in space.subspaces and (k, j) in space.subspaces
                and max_norm(space.block(d, (i, j), (k, j))) > tol
                for j in range(group.order)
            )
            ok = ok and hit
        uniform[name] = ok
    uniform_ok = all(uniform[n] for n, nz in nonzero.items() if nz)
    closed = True
    for g in range(group.order):
        if g == group.identity:
            continue
        if not nonzero[group.names[g]]:
            if any(nonzero[group.names[h]] for h in group.conjugacy_class(g)):
                closed = False
    return BicovarianceReport(nonzero, uniform, closed, uniform_ok)


@dataclass(frozen=True)
class NoGoReport:
    verdict: str
    calculus_center_dims: dict[str, int]
    central_form_residual: float
    spectral_center_dims: list[int]
    one_dim_d_ab: float
    one_dim_d_ba: float
    one_dim_split_residual: float
    spectral_split_norm: float

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "calculus_center_dims": self.calculus_center_dims,
            "central_form_residual": self.central_form_residual,
            "spectral_center_dims": self.spectral_center_dims,
            "one_dim_d_ab": self.one_dim_d_ab,
            "one_dim_d_ba": self.one_dim_d_ba,
            "one_dim_split_residual": self.one_dim_split_residual,
            "spectral_split_norm": self.spectral_split_norm,
        }


S3_TWO_DIM_V = (1.0, -np.sqrt(3))


def s3_central_form(calc: BicovariantCalculus) -> np.ndarray:
    """(2a - b - c) chi^2 + (2b - a - c) chi^1 with chi^1 = a da and chi^2 = b db."""
    g = calc.group
    chi1 = calc.left("a", calc.d("a"))
    chi2 = calc.left("b", calc.d("b"))

    def combo(coeffs: dict) -> np.ndarray:
        x = np.zeros(g.order, dtype=complex)
        for name, c in coeffs.items():
            x[g.index(name)] = c
        return x

    return calc.left(combo({"a": 2, "b": -1, "c": -1}), chi2) + calc.left(combo({"b": 2, "a": -1, "c": -1}), chi1)


def span_residual(basis: np.ndarray, x: np.ndarray) -> float:
    """Distance of ``x`` from the span of ``basis`` (shape (count, ...)), relative to ||x||."""
    b = basis.reshape(basis.shape[0], -1).T
    v = x.reshape(-1)
    if b.shape[1] == 0:
        return 1.0
    coef, *_ = np.linalg.lstsq(b, v, rcond=None)
    return float(np.linalg.norm(b @ coef - v) / max(np.linalg.norm(v), 1e-300))


def no_go_check(space: TripleSpace | None = None, n_draws: int = 20, seed=None, tol: float = DEFAULT_TOL) -> NoGoReport:
    """Mechanical check that the C S_3 spectral triple carries no bicovariant calculus.

    (a) bicovariant calculi containing the 2-dim irrep have central one-forms;
    (b) the spectral-triple one-forms have no center for generic D;
    (c) the 1-dim calculus splits along M_2(C) + (C + C), which a Dirac
        operator linking the summands cannot reproduce.
    """
    from .forms import center_one_forms
    from .hilbert import build_space

    group = s3_group()
    trivial, sign, two = s3_irreps()
    spec, iso = wedderburn_iso_s3()
    if space is None:
        space = build_space(spec, [[0, 1, 0], [1, 0, -1], [0, -1, 1]])

    calc2 = bicovariant_calculus(group, two, S3_TWO_DIM_V)
    center2 = calculus_center(group, two)
    element = s3_central_form(calc2)
    dims = {"two": center2.shape[0]}
    for name, rep in (("trivial+two", direct_sum(trivial, two)), ("sign+two", direct_sum(sign, two)),
                      ("two+two", direct_sum(two, two))):
        dims[name] = calculus_center(group, rep).shape[0]

    rng = np.random.default_rng(seed)
    spectral = [center_one_forms(space, random_dirac(space, rng)) for _ in range(n_draws)]

    calc1 = bicovariant_calculus(group, sign, [1.0])
    d_ab = max_norm(calc1.d("ab"))
    d_ba = max_norm(calc1.d("ba"))
    # central projection onto C + C inside the group algebra: (1/6) sum_g (1 + sign(g)) g
    signs = np.array([sign(g)[0, 0].real for g in range(group.order)])
    p_b = (1 + signs) / group.order
    split = max_norm(calc1.d(p_b))
    p1 = rep_left(space, central_projection(space.algebra, 0))
    p23 = rep_left(space, central_projection(space.algebra, 1) + central_projection(space.algebra, 2))
    d = random_dirac(space, rng).matrix
    spectral_split = max_norm(p1 @ commutator(d, p23))

    incompatible = (
        all(v >= 1 for v in dims.values())
        and span_residual(center2, element) < tol
        and all(c == 0 for c in spectral)
        and d_ab < tol and d_ba < tol and split < tol
        and spectral_split > tol
    )
    return NoGoReport(
        verdict="incompatible" if incompatible else "inconclusive",
        calculus_center_dims=dims,
        central_form_residual=span_residual(center2, element),
        spectral_center_dims=spectral,
        one_dim_d_ab=d_ab,
        one_dim_d_ba=d_ba,
        one_dim_split_residual=split,
        spectral_split_norm=spectral_split,
    )


__all__ = [
    "BicovarianceReport",
    "BicovariantCalculus",
    "FiniteGroup",
    "GroupAlgebraMap",
    "GroupRep",
    "HaarMeasure",
    "HaarWeight",
    "NoGoReport",
    "S3_ORDER",
    "S3_TWO_DIM_V",
    "bicovariant_calculus",
    "builtin_group",
    "calculus_center",
    "center_commutation_residual",
    "chi_operator",
    "cyclic_group",
    "direct_sum",
    "fn_algebra_bicovariance",
    "group_from_json",
    "haar_measure",
    "haar_weight_operator",
    "inner_chi",
    "make_group",
    "make_rep",
    "no_go_check",
    "s3_central_form",
    "s3_group",
    "s3_irreps",
    "span_residual",
    "wedderburn_iso_s3",
]

