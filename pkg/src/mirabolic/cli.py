"""Command-line interface: classify, enumerate, moment, attach, restrict, verify.

Inputs are JSON orbit specs ({"field": "C"|"R", "classes": [...]}), JSON
matrix objects ({"matrix": [[...rational strings...]], ...}), or plain text
matrices (one row per line, whitespace-separated rational entries).  All
output is JSON with deterministic key order, to stdout or --out.

Exit codes: 0 on success, 1 on a verification mismatch or domain error,
2 on an input or parse error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import List, Optional

from .classify import (
    MalformedRepresentative,
    classify,
    classify_certified,
    certificate_holds,
    stabilizer_dim,
)
from .corpus import complex_corpus, random_mirabolic, real_corpus
from .enumeration import enumerate_selections
from .exact_linalg import ExactMatrix, Scalar, SpectrumMismatch, inverse
from .moment import check_geometry, dense_selection, oracle_image, symbolic_image
from .orbit_model import (
    COMPLEX,
    REAL,
    OrbitDatum,
    OrbitSpecError,
    orbit_from_json,
    project_to_p_star,
    realize_orbit,
)
from .rep_theory import (
    UnsupportedOrbitShape,
    all_sign_choices,
    attach_gl_rep,
    restrict_to_mirabolic,
    verify_restriction,
)

__all__ = ["main"]


class InputError(Exception):
    """Bad command-line input (file contents or flags)."""


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc)) from exc


def _parse_rational(text: str, where: str) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError("%s: not a rational number: %r" % (where, text)) from exc


def _parse_matrix_rows(rows, where: str) -> ExactMatrix:
    if not rows:
        raise InputError("%s: empty matrix" % where)
    data = []
    for i, row in enumerate(rows):
        data.append(
            [Scalar(_parse_rational(v, "%s row %d" % (where, i + 1))) for v in row]
        )
    widths = {len(r) for r in data}
    if len(widths) != 1:
        raise InputError("%s: rows have differing lengths" % where)
    return ExactMatrix(data)


def _parse_eigenvalue_flags(args) -> List[Scalar]:
    hints: List[Scalar] = []
    if getattr(args, "eigenvalues", None):
        for tok in args.eigenvalues.split(","):
            tok = tok.strip()
            if tok:
                hints.append(Scalar(_parse_rational(tok, "--eigenvalues")))
    if getattr(args, "pairs", None):
        for tok in args.pairs.split(","):
            tok = tok.strip()
            if not tok:
                continue
            if ":" not in tok:
                raise InputError("--pairs entries look like re:im, got %r" % tok)
            re_s, im_s = tok.split(":", 1)
            re = _parse_rational(re_s, "--pairs")
            im = _parse_rational(im_s, "--pairs")
            hints.append(Scalar(re, im))
            hints.append(Scalar(re, -im))
    return hints


def _load_classify_input(args):
    """Returns (matrix representative, field, eigenvalue hints)."""
    text = _read_text(args.input)
    stripped = text.strip()
    obj = None
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError("invalid JSON: %s" % exc) from exc
    if obj is not None and "classes" in obj:
        orbit = orbit_from_json(obj)
        x = project_to_p_star(realize_orbit(orbit))
        return x, orbit.field, orbit.spectrum()
    if obj is not None:
        if "matrix" not in obj:
            raise InputError('matrix object needs a "matrix" key')
        matrix = _parse_matrix_rows(obj["matrix"], "matrix")
        field = obj.get("field", args.field)
        if field not in (REAL, COMPLEX):
            raise InputError('field must be "R" or "C"')
        hints = [
            Scalar(_parse_rational(v, "eigenvalues")) for v in obj.get("eigenvalues", [])
        ]
        for pair in obj.get("pairs", []):
            re = _parse_rational(pair[0], "pairs")
            im = _parse_rational(pair[1], "pairs")
            hints.append(Scalar(re, im))
            hints.append(Scalar(re, -im))
        hints.extend(_parse_eigenvalue_flags(args))
        return project_to_p_star(matrix), field, hints
    rows = [line.split() for line in stripped.splitlines() if line.strip()]
    matrix = _parse_matrix_rows(rows, "matrix")
    field = args.field
    if field not in (REAL, COMPLEX):
        raise InputError('field must be "R" or "C"')
    hints = _parse_eigenvalue_flags(args)
    if not hints:
        hints = [Scalar(0)]
    return project_to_p_star(matrix), field, hints


def _load_orbit(path: str) -> OrbitDatum:
    text = _read_text(path)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("invalid JSON: %s" % exc) from exc
    orbit = orbit_from_json(obj)
    if not orbit.classes:
        raise InputError("orbit spec needs at least one eigenvalue class")
    return orbit


def _parse_signs(raw: Optional[str]):
    """Parse '0,1;1' into [(0, 1), (1,)]; None stays None."""
    if raw is None:
        return None
    raw = raw.strip()
    if not raw:
        return []
    out = []
    for group in raw.split(";"):
        bits = []
        for tok in group.split(","):
            tok = tok.strip()
            if tok not in ("0", "1"):
                raise InputError("--signs entries must be 0 or 1, got %r" % tok)
            bits.append(int(tok))
        out.append(tuple(bits))
    return out


def _emit(payload: dict, out: Optional[str]) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _default_signs(orbit: OrbitDatum):
    if orbit.field == COMPLEX:
        return None
    return [tuple(0 for _ in cls.partition.dual()) for cls in orbit.real_classes()]


def _cmd_classify(args) -> dict:
    x, field, hints = _load_classify_input(args)
    if args.certificate:
        datum, conjugator = classify_certified(x, field, hints)
        verified = certificate_holds(x, conjugator, datum, field, hints)
        cert = {
            "conjugator": [[str(v) for v in row] for row in conjugator.data],
            "verified": verified,
        }
    else:
        datum = classify(x, field, hints)
        cert = None
    payload = {
        "field": field,
        "n": x.rows,
        "depth": datum.depth,
        "a_part": [c.to_json() for c in datum.a_part.classes],
        "stabilizer_dim": stabilizer_dim(x),
    }
    if cert is not None:
        payload["certificate"] = cert
    return payload


def _cmd_enumerate(args) -> dict:
    orbit = _load_orbit(args.input)
    selections = enumerate_selections(orbit)
    return {
        "orbit": orbit.to_json(),
        "count": len(selections),
        "dense": dense_selection(orbit).to_json(),
        "selections": [sel.to_json() for sel in selections],
    }


def _cmd_moment(args) -> dict:
    orbit = _load_orbit(args.input)
    if args.geometry:
        report = check_geometry(orbit)
        payload = report.to_json()
        payload["_exit"] = 0 if report.ok else 1
        return payload
    selections = enumerate_selections(orbit) if args.all else [dense_selection(orbit)]
    records = []
    disagreements = 0
    for sel in selections:
        sym = symbolic_image(orbit, sel)
        record = {"selection": sel.to_json(), "symbolic": sym.to_json()}
        if args.oracle:
            orc = oracle_image(orbit, sel)
            record["oracle"] = orc.to_json()
            record["agree"] = sym == orc
            if sym != orc:
                disagreements += 1
        records.append(record)
    payload = {"orbit": orbit.to_json(), "records": records}
    if args.oracle:
        payload["disagreements"] = disagreements
        payload["_exit"] = 0 if disagreements == 0 else 1
    return payload


def _cmd_attach(args) -> dict:
    orbit = _load_orbit(args.input)
    signs = _parse_signs(args.signs)
    if signs is None:
        signs = _default_signs(orbit)
    label = attach_gl_rep(orbit, signs)
    return {"orbit": orbit.to_json(), "label": label.to_json()}


def _cmd_restrict(args) -> dict:
    orbit = _load_orbit(args.input)
    signs = _parse_signs(args.signs)
    if signs is None:
        signs = _default_signs(orbit)
    restricted = restrict_to_mirabolic(attach_gl_rep(orbit, signs))
    return {"orbit": orbit.to_json(), "restricted": restricted.to_json()}


def _verify_one(orbit: OrbitDatum, conjugations: int, rng) -> dict:
    entry = {"orbit": orbit.to_json()}
    try:
        ok = True
        for signs in all_sign_choices(orbit):
            report = verify_restriction(orbit, signs)
            if not report.ok:
                ok = False
                entry["counterexample"] = report.to_json()
                break
        entry["status"] = "pass" if ok else "fail"
    except UnsupportedOrbitShape as exc:
        entry["status"] = "skipped:UnsupportedOrbitShape"
        entry["reason"] = str(exc)
        return entry
    if conjugations and entry["status"] == "pass":
        x = project_to_p_star(realize_orbit(orbit))
        base = classify(x, orbit.field, orbit.spectrum())
        n = orbit.size
        for _ in range(conjugations):
            p = random_mirabolic(n, rng)
            moved = project_to_p_star(p * realize_orbit(orbit) * inverse(p))
            if classify(moved, orbit.field, orbit.spectrum()) != base:
                entry["status"] = "fail"
                entry["reason"] = "classification changed under conjugation"
                break
    return entry


def _cmd_verify(args) -> dict:
    rng = random.Random(args.seed)
    if args.corpus is not None:
        if args.field == COMPLEX:
            orbits = list(complex_corpus(args.corpus))
        else:
            orbits = list(real_corpus(args.corpus, require_pair=False))
    else:
        if args.input is None:
            raise InputError("verify needs an orbit spec or --corpus N")
        orbits = [_load_orbit(args.input)]
    results = [_verify_one(orbit, args.conjugations, rng) for orbit in orbits]
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for entry in results:
        if entry["status"] == "pass":
            counts["pass"] += 1
        elif entry["status"] == "fail":
            counts["fail"] += 1
        else:
            counts["skipped"] += 1
    return {
        "total": len(results),
        "summary": counts,
        "orbits": results,
        "_exit": 0 if counts["fail"] == 0 else 1,
    }


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mirabolic",
        description="Exact mirabolic coadjoint-orbit classification, moment-map "
        "images and representation-label attachment.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="normal form of a mirabolic functional")
    p.add_argument("input", help="orbit spec, matrix JSON, or plain-text matrix ('-' for stdin)")
    p.add_argument("--field", default=COMPLEX, help='base field, "C" (default) or "R"')
    p.add_argument("--eigenvalues", help="comma-separated rational eigenvalue hints")
    p.add_argument("--pairs", help="comma-separated re:im conjugate-pair hints")
    p.add_argument("--certificate", action="store_true", help="include the verified conjugator")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("enumerate", help="list the image orbit selections")
    p.add_argument("input")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("moment", help="moment-map image normal forms")
    p.add_argument("input")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", help="all selections")
    group.add_argument("--dense", action="store_true", help="dense selection only (default)")
    p.add_argument("--oracle", action="store_true", help="cross-check against the oracle path")
    p.add_argument("--geometry", action="store_true", help="full geometric report")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_moment)

    p = sub.add_parser("attach", help="unitary label attached to a GL orbit")
    p.add_argument("input")
    p.add_argument("--signs", help="sign exponents per real class, e.g. '0,1;1' (default all 0)")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_attach)

    p = sub.add_parser("restrict", help="mirabolic label of the restriction")
    p.add_argument("input")
    p.add_argument("--signs")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_restrict)

    p = sub.add_parser("verify", help="restriction matches the dense-orbit attachment")
    p.add_argument("input", nargs="?", help="orbit spec (omit with --corpus)")
    p.add_argument("--corpus", type=int, help="verify every corpus orbit up to this size")
    p.add_argument("--field", default=COMPLEX, help='corpus field, "C" (default) or "R"')
    p.add_argument("--conjugations", type=int, default=0,
                   help="random conjugation-invariance checks per orbit")
    p.add_argument("--seed", type=int, default=20508, help="seed for the random checks")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except (InputError, OrbitSpecError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (SpectrumMismatch, MalformedRepresentative, UnsupportedOrbitShape, ValueError) as exc:
        print("error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 1
    exit_code = payload.pop("_exit", 0)
    _emit(payload, getattr(args, "out", None))
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
