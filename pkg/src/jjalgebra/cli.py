"""Batch command-line interface.

Every subcommand is a thin shell over one library operation.  Results and
diagnoses are printed to stdout as deterministic JSON (sorted keys, exact
rationals as strings), so outputs are byte-stable for identical inputs.
Exit codes: 0 pass, 1 fail (with a diagnosis record), 2 usage or input
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import (
    AlgebraMorphism,
    fingerprint,
    is_algebra_morphism,
    is_jacobi_jordan,
    jacobiator,
    morphism_failure,
)
from .classify5 import full_census
from .docio import (
    Document,
    DocumentError,
    algebra_to_document,
    document_alpha,
    document_omega,
    document_to_algebra,
    document_to_structure,
    emit,
    parse,
    structure_to_document,
)
from .exact_core import Mat, rat, rat_str
from .extensions import (
    ExtensionError,
    assemble_extended_map,
    central_extension,
    cosymplectic_double_extension_case1,
    cosymplectic_double_extension_case2,
    cosymplectic_from_symplectic,
    jj_double_extension,
    suspension,
    symplectic_double_extension,
    symplectic_from_cosymplectic,
    odd_family,
)
from .forms import (
    SYMMETRIC,
    BilinearForm,
    check_cosymplectic_isomorphism,
    is_cosymplectic,
    is_symplectic,
    reeb_vector,
)
from .induced import odot_product, star_product
from .operators import ader_space, der_space

PASS, FAIL, USAGE = 0, 1, 2


def _print_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _matrix_strings(m: Mat) -> list[list[str]]:
    return [[rat_str(v) for v in row] for row in m]


def _read_document(path: str) -> Document:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return parse(handle.read())
    except OSError as exc:
        raise DocumentError(path, f"cannot read file ({exc})") from None


def _fail(command: str, reason: str, details=None) -> int:
    _print_json({"ok": False, "command": command, "reason": reason, "details": details or {}})
    return FAIL


def _usage_error(command: str, reason: str) -> int:
    _print_json({"ok": False, "command": command, "reason": reason, "usage_error": True})
    return USAGE


def _required_map(doc: Document, name: str, command: str) -> Mat:
    m = doc.map_named(name)
    if m is None:
        raise DocumentError(f"maps.{name}", f"{command} requires a matrix named {name!r}")
    return m


def _row_vector(doc: Document, name: str, dim: int, command: str):
    m = _required_map(doc, name, command)
    if len(m) == 1 and len(m[0]) == dim:
        return m[0]
    if len(m) == dim and all(len(r) == 1 for r in m):
        return tuple(r[0] for r in m)
    raise DocumentError(f"maps.{name}", f"expected a 1x{dim} or {dim}x1 matrix")


def cmd_check(args) -> int:
    doc = _read_document(args.file)
    alg = document_to_algebra(doc)
    if args.kind == "jj":
        if is_jacobi_jordan(alg):
            _print_json({"ok": True, "command": "check jj"})
            return PASS
        return _fail("check jj", "commutativity or the Jacobi identity fails")
    if args.kind == "symplectic":
        omega = document_omega(doc)
        if is_symplectic(alg, omega):
            _print_json({"ok": True, "command": "check symplectic"})
            return PASS
        from .exact_core import determinant

        degenerate = determinant(omega.matrix) == 0
        return _fail(
            "check symplectic",
            "degenerate form" if degenerate else "cyclic closedness fails",
            {"degenerate": degenerate},
        )
    # cosymplectic
    diagnosis = is_cosymplectic(alg, document_alpha(doc), document_omega(doc))
    record = {
        "alpha_closed": diagnosis.alpha_closed,
        "omega_closed": diagnosis.omega_closed,
        "nondegenerate": diagnosis.nondegenerate,
    }
    if diagnosis.ok:
        _print_json({"ok": True, "command": "check cosymplectic", "details": record})
        return PASS
    return _fail("check cosymplectic", f"first failure: {diagnosis.first_failure()}", record)


def cmd_reeb(args) -> int:
    doc = _read_document(args.file)
    structure = document_to_structure(doc)
    _print_json({"ok": True, "reeb": [rat_str(v) for v in structure.reeb]})
    return PASS


def cmd_product(args) -> int:
    doc = _read_document(args.file)
    alg = document_to_algebra(doc)
    if args.kind == "odot":
        induced = odot_product(alg, document_omega(doc))
        witness = "odot"
    else:
        induced = star_product(document_to_structure(doc))
        witness = "star"
    out = algebra_to_document(induced, claims={"induced_by": witness})
    sys.stdout.write(emit(out))
    return PASS


def cmd_spaces(args) -> int:
    doc = _read_document(args.file)
    alg = document_to_algebra(doc)
    basis = ader_space(alg) if args.command == "ader" else der_space(alg)
    _print_json(
        {
            "ok": True,
            "space": args.command,
            "dimension": len(basis),
            "basis": [_matrix_strings(m) for m in basis],
        }
    )
    return PASS


def cmd_extend(args) -> int:
    doc = _read_document(args.file)
    alg = document_to_algebra(doc)
    data = _read_document(args.data) if args.data else None
    t = rat(args.t) if args.t is not None else Fraction(0)

    if args.kind == "central":
        theta = BilinearForm(_required_map(data, "theta", "extend central"), SYMMETRIC)
        result = central_extension(alg, theta)
        sys.stdout.write(emit(algebra_to_document(result)))
        return PASS
    if args.kind == "jjdouble":
        theta = BilinearForm(_required_map(data, "theta", "extend jjdouble"), SYMMETRIC)
        a_vec = _row_vector(data, "a", alg.dim, "extend jjdouble")
        d_map = data.map_named("D")
        if d_map is None:
            phi = _required_map(data, "phi", "extend jjdouble")
            lam = _row_vector(data, "lambda", alg.dim, "extend jjdouble")
            d_map = assemble_extended_map(phi, lam)
        result = jj_double_extension(alg, theta, d_map, a_vec)
        sys.stdout.write(emit(algebra_to_document(result)))
        return PASS
    if args.kind == "symp":
        omega = document_omega(doc)
        phi = _required_map(data, "phi", "extend symp")
        a_vec = _row_vector(data, "a", alg.dim, "extend symp")
        result_alg, result_omega = symplectic_double_extension(alg, omega, phi, a_vec)
        sys.stdout.write(emit(algebra_to_document(result_alg, omega=result_omega)))
        return PASS
    if args.kind == "suspend":
        structure = document_to_structure(doc)
        ext_alg, ext_omega = suspension(structure)
        sys.stdout.write(emit(algebra_to_document(ext_alg, omega=ext_omega)))
        return PASS
    # cosymp1 / cosymp2
    structure = document_to_structure(doc)
    phi = _required_map(data, "phi", f"extend {args.kind}")
    a_vec = _row_vector(data, "a", alg.dim, f"extend {args.kind}")
    builder = (
        cosymplectic_double_extension_case1
        if args.kind == "cosymp1"
        else cosymplectic_double_extension_case2
    )
    result = builder(structure, phi, a_vec, t)
    out = structure_to_document(
        result.structure,
        claims={"d_index": result.d_index, "e_index": result.e_index},
    )
    sys.stdout.write(emit(out))
    return PASS


def cmd_correspond(args) -> int:
    doc = _read_document(args.file)
    if args.direction == "down":
        structure = document_to_structure(doc)
        reduction = symplectic_from_cosymplectic(structure)
        out = algebra_to_document(
            reduction.algebra, omega=reduction.omega_h, maps={"D": reduction.d}
        )
        sys.stdout.write(emit(out))
        return PASS
    alg = document_to_algebra(doc)
    omega = document_omega(doc)
    d_map = _required_map(doc, "D", "correspond up")
    structure = cosymplectic_from_symplectic(alg, omega, d_map)
    sys.stdout.write(emit(structure_to_document(structure)))
    return PASS


def cmd_family(args) -> int:
    phis = [rat(v) for v in args.phi.split(",")]
    avals = [rat(v) for v in args.a.split(",")]
    result = odd_family(args.n, phis, avals)
    out = structure_to_document(
        result.structure,
        claims={"d_index": result.d_index, "e_index": result.e_index},
    )
    sys.stdout.write(emit(out))
    return PASS


def cmd_classify5(args) -> int:
    census = full_census()
    entries = {
        name: {
            "dim": entry.structure.dim,
            "derived_dim": entry.fingerprint.derived_dim,
            "center_dim": entry.fingerprint.center_dim,
            "power_dims": list(entry.fingerprint.power_dims),
            "reeb": [rat_str(v) for v in entry.structure.reeb],
        }
        for name, entry in census.entries.items()
    }
    grid = {
        f"({rat_str(a21)},{rat_str(a31)})": {
            "entry": result.name,
            "witness_verified": result.iso_report.ok,
            "advertised_scale": None if result.t_claimed is None else rat_str(result.t_claimed),
            "pullback_scale": rat_str(result.t_pullback),
        }
        for (a21, a31), result in sorted(census.grid.items())
    }
    trivial = {
        branch.name: {
            "outcome": branch.outcome,
            "details": _jsonable(branch.details),
        }
        for branch in census.trivial_branches
    }
    _print_json(
        {
            "ok": True,
            "entries": entries,
            "grid": grid,
            "trivial_base": trivial,
            "distinction": {k: list(v) for k, v in census.distinction.items()},
            "anomalies": _jsonable(census.anomalies),
        }
    )
    return PASS


def _jsonable(value):
    if isinstance(value, Fraction):
        return rat_str(value)
    if isinstance(value, dict):
        return {_jsonable_key(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _jsonable_key(key):
    if isinstance(key, tuple):
        return "(" + ",".join(str(_jsonable(k)) for k in key) + ")"
    if isinstance(key, Fraction):
        return rat_str(key)
    return str(key)


def cmd_iso(args) -> int:
    doc1 = _read_document(args.file1)
    doc2 = _read_document(args.file2)
    map_doc = _read_document(args.map)
    matrix = map_doc.map_named("phi")
    if matrix is None and len(map_doc.maps) == 1:
        matrix = map_doc.maps[0][1]
    if matrix is None:
        return _usage_error("iso", "the map file must carry a matrix named 'phi'")
    if args.strict:
        s1 = document_to_structure(doc1)
        s2 = document_to_structure(doc2)
        report = check_cosymplectic_isomorphism(matrix, s1, s2)
        record = {
            "algebra_morphism": report.algebra_morphism,
            "invertible": report.invertible,
            "alpha_compatible": report.alpha_compatible,
            "omega_compatible": report.omega_compatible,
            "reeb_to_reeb": report.reeb_to_reeb,
        }
        if report.ok:
            _print_json({"ok": True, "command": "iso --strict", "details": record})
            return PASS
        return _fail("iso --strict", f"first failure: {report.first_failure()}", record)
    a1 = document_to_algebra(doc1)
    a2 = document_to_algebra(doc2)
    phi = AlgebraMorphism(a1, a2, matrix)
    failure = morphism_failure(phi)
    invertible = phi.is_invertible()
    if failure is None and invertible:
        _print_json({"ok": True, "command": "iso"})
        return PASS
    return _fail(
        "iso",
        "not an algebra isomorphism",
        {"first_failing_pair": failure, "invertible": invertible},
    )


def cmd_invariants(args) -> int:
    doc = _read_document(args.file)
    fp = fingerprint(document_to_algebra(doc))
    _print_json(
        {
            "ok": True,
            "dim": fp.dim,
            "derived_dim": fp.derived_dim,
            "center_dim": fp.center_dim,
            "power_dims": list(fp.power_dims),
        }
    )
    return PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jjalg",
        description="Exact verification and construction for Jacobi-Jordan "
        "algebras with symplectic or cosymplectic structure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify an axiom predicate against a document")
    p.add_argument("kind", choices=["jj", "symplectic", "cosymplectic"])
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reeb", help="print the Reeb vector of a cosymplectic document")
    p.add_argument("file")
    p.set_defaults(func=cmd_reeb)

    p = sub.add_parser("product", help="emit the induced non-commutative product table")
    p.add_argument("kind", choices=["odot", "star"])
    p.add_argument("file")
    p.set_defaults(func=cmd_product)

    for name, help_text in (
        ("ader", "basis and dimension of the anti-derivation space"),
        ("der", "basis and dimension of the derivation space"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        p.set_defaults(func=cmd_spaces)

    p = sub.add_parser("extend", help="run an extension construction")
    p.add_argument("kind", choices=["central", "jjdouble", "symp", "cosymp1", "cosymp2", "suspend"])
    p.add_argument("file")
    p.add_argument("--data", help="document with the extension maps (theta, phi, lambda, a, D)")
    p.add_argument("--t", help="free parameter of the extended 1-form", default=None)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("correspond", help="move between cosymplectic and symplectic data")
    p.add_argument("direction", choices=["up", "down"])
    p.add_argument("file")
    p.set_defaults(func=cmd_correspond)

    p = sub.add_parser("family", help="odd-dimensional example family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--phi", required=True, help="comma-separated rationals, 2n values")
    p.add_argument("--a", required=True, help="comma-separated rationals, 2n values")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("classify5", help="full five-dimensional census report")
    p.set_defaults(func=cmd_classify5)

    p = sub.add_parser("iso", help="verify an (iso)morphism between two documents")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--map", required=True)
    p.add_argument("--strict", action="store_true", help="also require alpha/omega compatibility")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("invariants", help="isomorphism-invariant fingerprint")
    p.add_argument("file")
    p.set_defaults(func=cmd_invariants)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command
    try:
        return args.func(args)
    except DocumentError as exc:
        return _usage_error(command, str(exc))
    except ExtensionError as exc:
        return _fail(command, str(exc), {"condition": exc.condition})
    except ValueError as exc:
        return _fail(command, str(exc))


if __name__ == "__main__":
    sys.exit(main())
