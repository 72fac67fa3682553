"""Command-line front end.

Every command prints one report object
``{command, input_digest, tolerance, passed, results}``.  Exit status is 0
when all checks pass, 1 when a check fails and 2 on bad input or usage.
Triples may be given as a JSON file or as ``catalog:<name>``.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

import numpy as np

from . import catalog, dirac, forms, hopf, ktheory
from .algebra import central_projection
from .errors import TripleError
from .hilbert import TripleSpace, fixed_basis_vectors, rep_left, validate_axioms
from .linalg import DEFAULT_TOL


class InputError(Exception):
    pass


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, (complex, np.complexfloating)):
        return [float(x.real), float(x.imag)]
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    if isinstance(x, np.bool_):
        return bool(x)
    return x


def _complex_rows(m: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def _read_json(ref: str) -> tuple[dict, bytes]:
    try:
        raw = Path(ref).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {ref}: {exc}") from None
    try:
        return json.loads(raw), raw
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise InputError(f"{ref} is not valid JSON: {exc}") from None


class Inputs:
    """Loads referenced inputs and hashes everything that went in."""

    def __init__(self):
        self._hash = hashlib.sha256()
        self.fixture: catalog.Fixture | None = None

    def feed(self, tag: str, raw: bytes):
        self._hash.update(tag.encode() + b"\0" + raw + b"\0")

    @property
    def digest(self) -> str:
        return self._hash.hexdigest()

    def triple(self, ref: str) -> TripleSpace:
        if ref.startswith("catalog:"):
            self.fixture = catalog.fixture(ref.split(":", 1)[1])
            data = self.fixture.to_json()
            self.feed("triple", json.dumps(data, sort_keys=True).encode())
        else:
            data, raw = _read_json(ref)
            self.feed("triple", raw)
        try:
            return TripleSpace.from_json(data)
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed triple descriptor: {exc!r}") from None

    def dirac(self, space: TripleSpace, ref: str | None, seed: int) -> dirac.DiracOperator:
        if ref is None:
            if self.fixture is not None and self.fixture.dirac_params is not None:
                self.feed("dirac", b"fixture")
                return self.fixture.dirac(space)
            self.feed("dirac", f"seed:{seed}".encode())
            return dirac.random_dirac(space, seed)
        if ref.lstrip("-").isdigit():
            self.feed("dirac", f"seed:{ref}".encode())
            return dirac.random_dirac(space, int(ref))
        data, raw = _read_json(ref)
        self.feed("dirac", raw)
        return _dirac_from_json(space, data)

    def group(self, ref: str) -> hopf.FiniteGroup:
        if not ref.endswith(".json") and not Path(ref).exists():
            self.feed("group", ref.encode())
            return hopf.builtin_group(ref)
        data, raw = _read_json(ref)
        self.feed("group", raw)
        try:
            return hopf.group_from_json(data)
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed group descriptor: {exc!r}") from None

    def weight(self, space: TripleSpace, ref: str) -> np.ndarray:
        data, raw = _read_json(ref)
        self.feed("weight", raw)
        if "weights" in data:
            z = data["weights"]
            if len(z) != space.algebra.k:
                raise InputError(f"need {space.algebra.k} summand weights, got {len(z)}")
            return sum(float(w) * rep_left(space, central_projection(space.algebra, i)) for i, w in enumerate(z))
        if "matrix" in data:
            return _matrix_from_pairs(data["matrix"])
        raise InputError("weight file needs 'weights' or 'matrix'")


def _matrix_from_pairs(rows) -> np.ndarray:
    arr = np.asarray(rows, dtype=float)
    if arr.ndim == 3 and arr.shape[-1] == 2:
        return arr[..., 0] + 1j * arr[..., 1]
    if arr.ndim == 2:
        return arr.astype(complex)
    raise InputError("matrices must be lists of rows of numbers or [re, im] pairs")


def _dirac_from_json(space: TripleSpace, data: dict) -> dirac.DiracOperator:
    orbits = dirac.allowed_blocks(space)
    if "orbits" in data:
        params = [_matrix_from_pairs(p) for p in data["orbits"]]
        return dirac.assemble(space, params, orbits)
    if "matrix" in data:
        m = _matrix_from_pairs(data["matrix"])
        if m.shape != (space.N, space.N):
            raise InputError(f"Dirac matrix has shape {m.shape}, space has dimension {space.N}")
        return dirac.DiracOperator(space, orbits, [], m)
    raise InputError("Dirac file needs 'orbits' or 'matrix'")


def cmd_check(args, inputs: Inputs) -> tuple[dict, bool]:
    space = inputs.triple(args.triple)
    rep = validate_axioms(space, tol=args.tol)
    fixed = fixed_basis_vectors(space)
    results = {
        "dimension": space.N,
        "labels": [l.name() for l in space.labels],
        "subspaces": {f"{space.labels[i].name()},{space.labels[j].name()}": sl.stop - sl.start
                      for (i, j), sl in space.subspaces.items()},
        "J_fixed_basis_vectors": [list(v) for v in fixed],
        "checks": rep.to_json()["checks"],
    }
    return results, rep.passed


def cmd_dirac(args, inputs: Inputs) -> tuple[dict, bool]:
    space = inputs.triple(args.triple)
    if args.action == "shape":
        orbits = dirac.allowed_blocks(space)
        return {
            "orbits": [o.to_json(space) for o in orbits],
            "dof": dirac.dof_count(space),
        }, True
    inputs.feed("seed", str(args.seed).encode())
    d = dirac.random_dirac(space, args.seed)
    rep = dirac.validate_dirac(space, d, args.tol)
    return {
        "seed": args.seed,
        "params": d.params_json()["orbits"],
        "matrix": _complex_rows(d.matrix),
        "checks": rep.to_json()["checks"],
    }, rep.passed


def cmd_forms(args, inputs: Inputs) -> tuple[dict, bool]:
    space = inputs.triple(args.triple)
    d = inputs.dirac(space, args.dirac, args.seed)
    drep = dirac.validate_dirac(space, d, args.tol)
    report = forms.forms_report(space, d, args.tol)
    results = report.to_json()
    results["dirac_checks"] = drep.to_json()["checks"]
    xi_form = forms.xi_form(space.algebra)
    results["xi_norm"] = forms.form_inner_product(space, d, xi_form, xi_form, tol=args.tol).real
    if args.weight:
        z = inputs.weight(space, args.weight)
        results["xi_norm_weighted"] = forms.form_inner_product(space, d, xi_form, xi_form, z, tol=args.tol).real
    return results, drep.passed and report.checks.passed


def cmd_kform(args, inputs: Inputs) -> tuple[dict, bool]:
    space = inputs.triple(args.triple)
    inputs.feed("seed", str(args.seed).encode())
    form = ktheory.index_pairing(space, doubling=not args.no_doubling, seed=args.seed)
    pc = ktheory.poincare_check(form)
    results = {**form.to_json(), **pc.to_json()}
    return results, pc.nondegenerate


def cmd_hopf(args, inputs: Inputs) -> tuple[dict, bool]:
    space = inputs.triple(args.triple)
    if args.action == "haar":
        if args.group.lower() != "s3":
            raise InputError("haar weights are available for --group s3 only")
        spec, iso = hopf.wedderburn_iso_s3()
        inputs.feed("group", b"s3")
        if space.algebra != spec:
            raise InputError("haar s3 needs the algebra M2(C) + C + C")
        hw = hopf.haar_weight_operator(space, iso, args.tol)
        return hw.to_json(), hw.report.passed
    if args.action == "nogo":
        inputs.feed("seed", str(args.seed).encode())
        ng = hopf.no_go_check(space, seed=args.seed, tol=args.tol)
        return ng.to_json(), ng.verdict == "incompatible"
    group = inputs.group(args.group)
    d = inputs.dirac(space, args.dirac, args.seed)
    rep = hopf.fn_algebra_bicovariance(space, d, group, args.tol)
    return rep.to_json(), rep.uniform_condition


def cmd_catalog(args, inputs: Inputs) -> tuple[dict, bool]:
    if args.action == "list":
        return {"fixtures": {n: catalog.fixture(n).description for n in catalog.fixture_names()}}, True
    if not args.name:
        raise InputError("catalog dump needs a fixture name")
    inputs.feed("fixture", args.name.encode())
    return catalog.dump(args.name), True


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for random Dirac operators")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="check tolerance")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output (default)")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text", help="plain text output")
    common.set_defaults(fmt="json")

    parser = argparse.ArgumentParser(prog="finite-triples", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="validate the triple axioms")
    p.add_argument("triple")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("dirac", parents=[common], help="admissible Dirac operators")
    p.add_argument("action", choices=["shape", "sample"])
    p.add_argument("triple")
    p.set_defaults(func=cmd_dirac)

    p = sub.add_parser("forms", parents=[common], help="differential forms induced by D")
    p.add_argument("triple")
    p.add_argument("--dirac", help="Dirac parameter/matrix JSON file, or an integer seed")
    p.add_argument("--weight", help="weight JSON: summand 'weights' or an operator 'matrix'")
    p.set_defaults(func=cmd_forms)

    p = sub.add_parser("kform", parents=[common], help="intersection form and Poincare duality")
    p.add_argument("triple")
    p.add_argument("--no-doubling", action="store_true", help="do not double quaternionic entries")
    p.set_defaults(func=cmd_kform)

    p = sub.add_parser("hopf", parents=[common], help="group structures")
    p.add_argument("action", choices=["bicov", "haar", "nogo"])
    p.add_argument("triple")
    p.add_argument("--group", default="s3", help="group JSON file or a built-in name (s3, z<n>)")
    p.add_argument("--dirac", help="Dirac parameter/matrix JSON file, or an integer seed")
    p.set_defaults(func=cmd_hopf)

    p = sub.add_parser("catalog", parents=[common], help="built-in example triples")
    p.add_argument("action", choices=["list", "dump"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)
    return parser


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for k, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.extend(_text(v, indent + 1))
        else:
            lines.append(f"{pad}{k}: {json.dumps(v)}")
    return lines


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    inputs = Inputs()
    try:
        results, passed = args.func(args, inputs)
    except (InputError, TripleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = _jsonable({
        "command": " ".join(x for x in (args.command, getattr(args, "action", None)) if x),
        "input_digest": inputs.digest,
        "tolerance": args.tol,
        "passed": bool(passed),
        "results": results,
    })
    if args.fmt == "text":
        out.write("\n".join(_text(report)) + "\n")
    else:
        out.write(json.dumps(report, sort_keys=True) + "\n")
    return 0 if passed else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
