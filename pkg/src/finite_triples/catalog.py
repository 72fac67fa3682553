"""Named example triples with their expected invariants."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import AlgebraSpec, make_algebra
from .dirac import DiracOperator, allowed_blocks, assemble
from .errors import UnknownFixture
from .hilbert import TripleSpace, build_space

CS3_Q = ((0, 1, 0), (1, 0, -1), (0, -1, 1))
S3_FN_UNIVERSAL_Q = tuple(tuple(-1 if i == j else 1 for j in range(6)) for i in range(6))
# points ordered a, b, c, e, ab, ba
S3_FN_BICOV2_Q = (
    (1, 1, -1, 0, 0, 0),
    (1, -1, 0, 0, 0, 0),
    (-1, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 1, -1),
    (0, 0, 0, 1, -1, 0),
    (0, 0, 0, -1, 0, 0),
)


@dataclass(frozen=True)
class Fixture:
    name: str
    algebra: AlgebraSpec
    q: tuple[tuple[int, ...], ...]
    description: str
    dirac_params: tuple | None = None
    group: str | None = None
    expected: dict = field(default_factory=dict)

    def space(self) -> TripleSpace:
        return build_space(self.algebra, self.q)

    def dirac(self, space: TripleSpace | None = None) -> DiracOperator | None:
        if self.dirac_params is None:
            return None
        space = space or self.space()
        return assemble(space, [np.array(p) for p in self.dirac_params], allowed_blocks(space))

    def to_json(self) -> dict:
        return {"algebra": self.algebra.to_json(), "q": [list(r) for r in self.q]}


def _cs3_algebra() -> AlgebraSpec:
    return make_algebra("C", [(2, "C"), (1, "C"), (1, "C")])


def _points(n: int) -> AlgebraSpec:
    return make_algebra("C", [(1, "C")] * n)


def _build() -> dict[str, Fixture]:
    cs3_expected = {
        "dimension": 7,
        "intersection_form": [list(r) for r in CS3_Q],
        "determinant": -1,
        "dof": 6,
        "haar_weights": [1 / 3, 1 / 18, 1 / 12],
    }
    # x = y = 1, z = sqrt 2 so that |x|^2 + |y|^2 = |z|^2
    cs3_params = (((1.0,), (1.0,)), ((np.sqrt(2),),))
    return {
        f.name: f
        for f in (
            Fixture(
                "cs3_minimal",
                _cs3_algebra(),
                CS3_Q,
                "smallest triple over the group algebra of S3, M2(C) + C + C",
                dirac_params=cs3_params,
                group="s3",
                expected=cs3_expected,
            ),
            Fixture(
                "s3_fn_universal",
                _points(6),
                S3_FN_UNIVERSAL_Q,
                "functions on S3 whose generic Dirac operator gives the universal calculus",
                group="s3",
                expected={"dimension": 36, "determinant": -128, "nonzero_chi": ["a", "b", "c", "ab", "ba"]},
            ),
            Fixture(
                "s3_fn_bicov2",
                _points(6),
                S3_FN_BICOV2_Q,
                "functions on S3 (points a, b, c, e, ab, ba) with the two-generator bicovariant calculus",
                group="s3",
                expected={"dimension": 12, "nonzero_chi": ["ab", "ba"]},
            ),
            Fixture(
                "s3_irreps",
                _cs3_algebra(),
                CS3_Q,
                "group algebra of S3 split by its irreducible representations (2-dim, trivial, sign)",
                group="s3",
                expected={"irrep_dims": [2, 1, 1], "dimension": 7},
            ),
            Fixture(
                "s3_wedderburn",
                _cs3_algebra(),
                CS3_Q,
                "group algebra of S3 with the explicit Wedderburn isomorphism",
                group="s3",
                expected={"haar_weights": [1 / 3, 1 / 18, 1 / 12], "dimension": 7},
            ),
        )
    }


_FIXTURES = _build()


def fixture_names() -> list[str]:
    return sorted(_FIXTURES)


def fixture(name: str) -> Fixture:
    try:
        return _FIXTURES[name]
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}") from None


def dump(name: str) -> dict:
    return fixture(name).to_json()


__all__ = ["CS3_Q", "Fixture", "S3_FN_BICOV2_Q", "S3_FN_UNIVERSAL_Q", "dump", "fixture", "fixture_names"]
