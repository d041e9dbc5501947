"""Command-line front end.

Reports go to stdout, diagnostics to stderr.  Exit codes: 0 pass, 1 an
obstruction is violated or a fixture is invalid, 2 malformed input or
infeasible ranks.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .moduli import ExactShape, InvalidShape, cohomology_rank, fold_once, kappa_generators, poincare_polynomial
from .obstructions import ComplexDegreeData, Orientation, full_report
from .oracle import (
    DEFAULT_SEED,
    ComplexFormatError,
    build_koszul,
    check_points,
    complex_from_json,
    complex_to_json,
    extract_degree_data,
    validate_complex,
)
from .polys import PolyParseError
from .symmetric import find_splitting_primes
from .transgression import (
    gl_left_differentials,
    gl_leftright_differentials,
    obstruction_survival,
    stiefel_differentials,
)

PASS, FAIL, BAD_INPUT = 0, 1, 2
COMMANDS = ("check", "cohomology", "differentials", "koszul", "verify", "fold", "primes")
FILE_COMMANDS = ("check", "cohomology", "verify", "fold")


class InputError(Exception):
    """Malformed input; the message already says where."""


@dataclass
class RunConfig:
    command: str
    input_path: str | None = None
    output_format: str = "text"
    seed: int = DEFAULT_SEED
    points: int = 20
    orientation: str = "both"
    space: str = "stiefel"
    u: tuple[int, ...] = ()
    v: tuple[int, ...] = ()
    survival: int | None = None
    m: int = 3
    shift: int = 0
    output_path: str | None = None
    poly: tuple[int, ...] = ()
    bound: int = 100
    times: int = 1


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _int_list(x) -> bool:
    return isinstance(x, list) and all(isinstance(d, int) and not isinstance(d, bool) for d in x)


def parse_degree_data(text: str) -> ComplexDegreeData:
    obj = _load_json(text)
    if not isinstance(obj, dict) or set(obj) != {"variables", "terms"}:
        raise InputError('degree data must be an object with exactly the keys "variables" and "terms"')
    m, terms = obj["variables"], obj["terms"]
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InputError('"variables" must be a positive integer')
    if not isinstance(terms, list) or not all(_int_list(t) for t in terms):
        raise InputError('"terms" must be a list of integer lists')
    try:
        return ComplexDegreeData(m, tuple(tuple(t) for t in terms))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def parse_shape(text: str) -> ExactShape:
    """Term weights of an exact sequence; a degree-data file is accepted too."""
    obj = _load_json(text)
    if not isinstance(obj, dict) or "terms" not in obj or not set(obj) <= {"variables", "terms"}:
        raise InputError('shape must be an object with key "terms" (and optionally "variables")')
    terms = obj["terms"]
    if not isinstance(terms, list) or not all(_int_list(t) for t in terms):
        raise InputError('"terms" must be a list of integer lists')
    return ExactShape(tuple(tuple(t) for t in terms))


def _orientations(name: str) -> tuple[Orientation, ...]:
    if name == "both":
        return (Orientation.FORWARD, Orientation.REVERSED)
    return (Orientation(name),)


def _report_obstructions(data: ComplexDegreeData, orientation: str) -> tuple[int, dict]:
    rep = full_report(data, _orientations(orientation))
    out = {
        "variables": data.variables,
        "terms": [list(t) for t in data.terms],
        "verdict": "pass" if rep.verdict else "fail",
    }
    if rep.infeasible:
        out["error"] = rep.reason
        return BAD_INPUT, out
    out["ranks"] = list(rep.ranks)
    out["classical"] = [{"i": c.i, "b_side": c.lhs, "a_side": c.rhs, "ok": c.ok} for c in rep.classical]
    out["prefixes"] = [{
        "q": e.check.q,
        "orientation": e.check.orientation.value,
        "r": e.check.r,
        "u": list(e.check.u),
        "range": list(e.check.checked),
        "ok": e.check.ok,
        "violations": [{"i": i, "lhs": lhs, "rhs": rhs} for i, lhs, rhs in e.check.violations],
        "first_differential": list(e.first_differential) if e.first_differential else None,
    } for e in rep.prefixes]
    out["failures"] = list(rep.failures)
    return (PASS if rep.verdict else FAIL), out


def _run_check(config: RunConfig, text: str):
    return _report_obstructions(parse_degree_data(text), config.orientation)


def _shape_summary(shape: ExactShape) -> dict:
    return {
        "terms": [list(w) for w in shape.term_weights],
        "dims": list(shape.dims),
        "ranks": list(shape.ranks),
        "generators": [{"i": k.i, "j": k.j, "support": list(k.support), "degree": k.degree}
                       for k in kappa_generators(shape)],
    }


def _run_cohomology(config: RunConfig, text: str):
    shape = parse_shape(text)
    out = _shape_summary(shape)
    out["rank"] = cohomology_rank(shape)
    out["poincare"] = poincare_polynomial(shape)
    return PASS, out


def _run_fold(config: RunConfig, text: str):
    if config.times < 1:
        raise InputError("--times must be at least 1")
    shape = parse_shape(text)
    steps = [_shape_summary(shape)]
    total = None
    for _ in range(config.times):
        shape, psi = fold_once(shape)
        total = psi if total is None else total.compose(psi)
        steps.append(_shape_summary(shape))
    pullback = {str(k.label): str(total.image(k.label)) for k in kappa_generators(shape)}
    return PASS, {"steps": steps, "pullback": pullback}


def _run_differentials(config: RunConfig, text):
    u, v = list(config.u), list(config.v)
    try:
        if config.space == "gl-left":
            table = gl_left_differentials(len(u), u)
        elif config.space == "gl-leftright":
            table = gl_leftright_differentials(len(u), u, v)
        else:
            table = stiefel_differentials(len(u), len(v), u, v)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    first = table.first_nonzero()
    out = {
        "space": table.kind.value,
        "u": list(table.u),
        "v": list(table.v),
        "records": [{"k": r.k, "page": r.page, "coefficient": r.coefficient,
                     "modulo": list(r.modulo), "status": r.status.value, "text": str(r)} for r in table.records],
        "first_nonzero": [first.k, first.coefficient] if first else None,
    }
    code = PASS
    if config.survival is not None:
        if config.survival < 1:
            raise InputError("--survival must be at least 1")
        ok = obstruction_survival(config.survival, (first.k, first.coefficient) if first else None)
        out["survival"] = {"m": config.survival, "verdict": "pass" if ok else "fail"}
        code = PASS if ok else FAIL
    return code, out


def _run_koszul(config: RunConfig, text):
    if not 1 <= config.m <= 8:
        raise InputError("-m must lie in 1..8")
    c = build_koszul(config.m).shifted(config.shift)
    doc = complex_to_json(c)
    if config.output_path:
        Path(config.output_path).write_text(render_json(doc))
    return PASS, {"complex": doc, "written_to": config.output_path}


def _run_verify(config: RunConfig, text: str):
    try:
        c = complex_from_json(_load_json(text))
    except PolyParseError as exc:
        raise InputError(str(exc)) from exc
    except ComplexFormatError as exc:
        raise InputError(str(exc)) from exc
    out = {"variables": c.variables, "shifts": [list(s) for s in c.shifts]}
    problems = validate_complex(c)
    out["violations"] = problems
    if problems:
        out["verdict"] = "fail"
        return FAIL, out
    results = check_points(c, config.points, config.seed)
    out["points"] = [{"point": [str(x) for x in r.point], "ranks": list(r.ranks), "exact": r.exact}
                     for r in results]
    if not all(r.exact for r in results):
        out["verdict"] = "fail"
        return FAIL, out
    code, obstruction = _report_obstructions(extract_degree_data(c), config.orientation)
    out["obstructions"] = obstruction
    out["verdict"] = obstruction["verdict"]
    return code, out


def _run_primes(config: RunConfig, text):
    try:
        primes = find_splitting_primes(list(config.poly), config.bound)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return PASS, {"poly": list(config.poly), "bound": config.bound, "primes": primes}


_DISPATCH = {
    "check": _run_check,
    "cohomology": _run_cohomology,
    "differentials": _run_differentials,
    "koszul": _run_koszul,
    "verify": _run_verify,
    "fold": _run_fold,
    "primes": _run_primes,
}


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        raise TypeError("floats are not allowed in reports")
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def render_json(report: dict) -> str:
    return json.dumps(_jsonable(report), sort_keys=True, indent=2) + "\n"


def _text_lines(command: str, code: int, r: dict) -> list[str]:
    lines = []
    if command in ("check", "verify"):
        obs = r.get("obstructions", r) if command == "verify" else r
        if command == "verify":
            for v in r["violations"]:
                lines.append(f"violation: {v}")
            for p in r.get("points", []):
                pt = ", ".join(p["point"])
                lines.append(f"point ({pt}): ranks {p['ranks']} {'exact' if p['exact'] else 'NOT exact'}")
        if "error" in obs:
            lines.append(f"infeasible: {obs['error']}")
        for c in obs.get("classical", []):
            rel = "==" if c["ok"] else "!="
            lines.append(f"classical i={c['i']}: {c['b_side']} {rel} {c['a_side']}  {'ok' if c['ok'] else 'VIOLATED'}")
        for p in obs.get("prefixes", []):
            lo, hi = p["range"]
            span = f"i={lo}..{hi}" if lo <= hi else "vacuous"
            lines.append(f"prefix q={p['q']} {p['orientation']}: r={p['r']} {span} {'ok' if p['ok'] else 'VIOLATED'}")
            for v in p["violations"]:
                lines.append(f"  i={v['i']}: {v['lhs']} != {v['rhs']}")
        lines.append(f"verdict: {r['verdict']}")
    elif command == "cohomology":
        lines.append(f"dims {r['dims']}  ranks {r['ranks']}")
        for g in r["generators"]:
            lines.append(f"kappa_{{{g['i']},{g['j']}}}: rows {g['support'][0]}..{g['support'][1]}, degree {g['degree']}")
        lines.append(f"rank {r['rank']}")
        lines.append(f"poincare {r['poincare']}")
    elif command == "fold":
        for n, s in enumerate(r["steps"]):
            lines.append(f"step {n}: terms {s['terms']}  {len(s['generators'])} generators")
        for k, img in r["pullback"].items():
            lines.append(f"{k} -> {img}")
    elif command == "differentials":
        lines += [rec["text"] for rec in r["records"]]
        first = r["first_nonzero"]
        lines.append("first nonzero: " + (f"k={first[0]} C={first[1]}" if first else "none"))
        if "survival" in r:
            lines.append(f"survival m={r['survival']['m']}: {r['survival']['verdict']}")
    elif command == "koszul":
        c = r["complex"]
        lines.append(f"koszul complex in {c['variables']} variables, shifts {c['shifts']}")
        for i, mat in enumerate(c["matrices"]):
            lines.append(f"d{i}:")
            lines += ["  [" + ", ".join(row) + "]" for row in mat]
        if r["written_to"]:
            lines.append(f"written to {r['written_to']}")
    elif command == "primes":
        lines.append(" ".join(str(p) for p in r["primes"]) or "(none)")
    return lines


def render(command: str, output_format: str, code: int, report: dict) -> str:
    if output_format == "json":
        return render_json({"command": command, "exit_code": code, "report": report})
    return "\n".join(_text_lines(command, code, report)) + "\n"


def run(config: RunConfig, text: str | None = None) -> tuple[int, str]:
    """Run one command on already-read input; returns ``(exit_code, stdout)``.

    Malformed input raises :class:`InputError`.
    """
    if config.command not in _DISPATCH:
        raise InputError(f"unknown command {config.command!r}")
    if config.command in FILE_COMMANDS and text is None:
        raise InputError(f"{config.command} needs an input file")
    try:
        code, report = _DISPATCH[config.command](config, text)
    except InvalidShape as exc:
        raise InputError(str(exc)) from exc
    return code, render(config.command, config.output_format, code, report)


def _int_tuple(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",")) if text.strip() else ()
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--points", type=int, default=20)
    common.add_argument("--orientation", choices=("both", "forward", "reversed"), default="both")

    parser = argparse.ArgumentParser(prog="hkequiv", description="Equivariant obstructions for graded free complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="run the obstruction checks on degree data")
    p.add_argument("input_path", metavar="FILE")
    p = sub.add_parser("cohomology", parents=[common], help="generators and Poincare polynomial of a moduli space")
    p.add_argument("input_path", metavar="FILE")
    p = sub.add_parser("verify", parents=[common], help="validate a concrete complex and check its degree data")
    p.add_argument("input_path", metavar="FILE")
    p = sub.add_parser("fold", parents=[common], help="fold a shape and print the pullback on generators")
    p.add_argument("input_path", metavar="FILE")
    p.add_argument("--times", type=int, default=1)

    p = sub.add_parser("differentials", parents=[common], help="transgression table for a circle action")
    p.add_argument("--space", choices=("stiefel", "gl-left", "gl-leftright"), default="stiefel")
    p.add_argument("--u", type=_int_tuple, required=True)
    p.add_argument("--v", type=_int_tuple, default=())
    p.add_argument("--survival", type=int, metavar="M")

    p = sub.add_parser("koszul", parents=[common], help="write a Koszul complex file")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-o", dest="output_path")
    p.add_argument("--shift", type=int, default=0)

    p = sub.add_parser("primes", parents=[common], help="primes below a bound where a monic polynomial splits")
    p.add_argument("--poly", type=_int_tuple, required=True)
    p.add_argument("--bound", type=int, default=100)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(**vars(args))
    text = None
    if config.input_path is not None:
        try:
            text = Path(config.input_path).read_text()
        except OSError as exc:
            print(f"hkequiv: cannot read {config.input_path}: {exc.strerror}", file=sys.stderr)
            return BAD_INPUT
    try:
        code, out = run(config, text)
    except InputError as exc:
        where = f"{config.input_path}: " if config.input_path else ""
        print(f"hkequiv: {where}{exc}", file=sys.stderr)
        return BAD_INPUT
    except OSError as exc:
        print(f"hkequiv: {exc}", file=sys.stderr)
        return BAD_INPUT
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
