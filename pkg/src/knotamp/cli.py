"""``knotamp`` command-line front end.

Exit codes: 0 success, 2 unparsable input, 3 violated precondition,
1 internal failure. Errors go to stderr as a single JSON object.
"""

from __future__ import annotations

import argparse
import cmath
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

import numpy as np

from .braid import BraidParseError, braid_to_morse, parse_braid, random_braid, exponent_sum
from .diagram import (
    DiagramError,
    MorseDiagram,
    MoveError,
    components,
    parse_morse,
    random_equivalent,
    seifert_count,
    writhe,
)
from .jones3 import RepresentationError, bracket_via_trace, make_rep, representation_is_unitary, tl_identities
from .linalg import SingularMatrixError, tensor_from_json, tensor_to_json
from .models import MODEL_NAMES, model_by_name
from .scalar_ring import LaurentPoly
from .skein_oracle import OracleError, normalized_skein, skein_bracket
from .statesum import (
    UnsupportedNormalizationError,
    WidthOverflowError,
    bracket_polynomial,
    evaluate,
    normalized,
    transfer,
)
from .yangbaxter import check_model, check_ybe, is_entangling_2q

EXIT_OK, EXIT_INTERNAL, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


class ParseFailure(Exception):
    pass


class PreconditionFailure(Exception):
    pass


# ---------------------------------------------------------------------------
# formatting


def _fmt_complex(z: complex) -> str:
    z = complex(z)
    return f"{z.real:.12g}{z.imag:+.12g}i"


def _value_json(v):
    if isinstance(v, LaurentPoly):
        return {"kind": "exact", "value": v.to_json()}
    if isinstance(v, (int, np.integer)):
        return {"kind": "exact", "value": LaurentPoly.const(int(v)).to_json()}
    if isinstance(v, np.ndarray):
        return tensor_to_json(v)
    z = complex(v)
    return {"kind": "numeric", "value": [z.real, z.imag]}


def _value_text(v) -> str:
    if isinstance(v, LaurentPoly):
        return v.pretty()
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, np.ndarray):
        return json.dumps(tensor_to_json(v))
    return _fmt_complex(v)


def _emit(args, payload: dict, text: str) -> None:
    if args.out == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------------------
# input helpers


def _diagram_from_args(args) -> MorseDiagram:
    try:
        if getattr(args, "braid", None) is not None:
            return braid_to_morse(parse_braid(args.braid), close=args.closed)
        if getattr(args, "morse", None) is not None:
            return parse_morse(args.morse, getattr(args, "initial_width", 0))
        if getattr(args, "morse_json", None) is not None:
            with open(args.morse_json) as fh:
                return MorseDiagram.from_json(json.load(fh))
    except (BraidParseError, DiagramError, ValueError, json.JSONDecodeError) as exc:
        raise ParseFailure(str(exc)) from exc
    raise ParseFailure("one of --braid, --morse, --morse-json is required")


def _model_from_args(args):
    kwargs = {}
    if args.model == "product":
        kwargs["s_exponent"] = args.s_exponent
    model = model_by_name(args.model, **kwargs)
    if getattr(args, "theta", None) is not None:
        model = model.at(cmath.exp(1j * args.theta))
    return model


def _load_matrix(path: str) -> np.ndarray:
    try:
        with open(path) as fh:
            return tensor_from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ParseFailure(f"cannot read matrix {path}: {exc}") from exc


def _add_diagram_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--braid", help='braid word, e.g. "2: s1 s1 s1"')
    src.add_argument("--morse", help="Morse word, e.g. U0,U1,X0,A1,A0")
    src.add_argument("--morse-json", help="file with a Morse diagram in JSON")
    p.add_argument("--closed", action="store_true", help="take the closure of the braid")
    p.add_argument("--initial-width", type=int, default=0, help="open Morse word: strands entering at the top")


# ---------------------------------------------------------------------------
# subcommands


def cmd_eval(args) -> int:
    d = _diagram_from_args(args)
    model = _model_from_args(args)
    meta = {"model": model.name, "diagram": d.to_json()}
    if not d.is_closed:
        if args.normalize:
            raise PreconditionFailure("normalization needs a closed diagram")
        t = transfer(d, model)
        _emit(args, {**meta, "transfer": _value_json(t)}, _value_text(t))
        return EXIT_OK
    value = normalized(d, model) if args.normalize else evaluate(d, model)
    meta.update(writhe=writhe(d), components=components(d).count, seifert_circles=seifert_count(d))
    _emit(args, {**meta, "normalized": bool(args.normalize), "value": _value_json(value)}, _value_text(value))
    return EXIT_OK


def cmd_oracle(args) -> int:
    d = _diagram_from_args(args)
    if not d.is_closed:
        raise PreconditionFailure("the oracle needs a closed diagram (use --closed)")
    value = normalized_skein(d) if args.normalize else skein_bracket(d)
    _emit(args, {"normalized": bool(args.normalize), "value": value.to_json()}, value.pretty())
    return EXIT_OK


def cmd_jones3(args) -> int:
    try:
        b = parse_braid(args.braid)
    except BraidParseError as exc:
        raise ParseFailure(str(exc)) from exc
    if b.strands != 3:
        raise PreconditionFailure("jones3 needs a 3-strand braid")
    p = make_rep(args.theta, strict=not args.lenient)
    trace_value = bracket_via_trace(b, p)
    exact = bracket_polynomial(braid_to_morse(b), model_by_name("bracket"))
    exact_value = exact.eval(p.A)
    payload = {
        "theta": args.theta,
        "d": p.d,
        "exponent_sum": exponent_sum(b),
        "trace_formula": [trace_value.real, trace_value.imag],
        "exact_bracket": exact.to_json(),
        "exact_at_theta": [exact_value.real, exact_value.imag],
        "difference": abs(trace_value - exact_value),
    }
    text = f"trace formula: {_fmt_complex(trace_value)}\nexact bracket: {exact.pretty()}"
    if args.report:
        unit = representation_is_unitary(p)
        tl = tl_identities(p)
        payload.update(unitary=unit, boundary=p.boundary, temperley_lieb=tl)
        lines = [f"d = {p.d:.12g}", f"unitary: s1={unit['s1']} s2={unit['s2']}"]
        if p.boundary:
            lines.append("warning: |d| = 1, U2 is degenerate")
        lines += [f"{k}: residual {v:.3g}" for k, v in tl.items()]
        text += "\n" + "\n".join(lines)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_ybe(args) -> int:
    if args.matrix:
        R = _load_matrix(args.matrix)
        try:
            result = check_ybe(R, tol=args.tol)
        except ValueError as exc:
            raise PreconditionFailure(str(exc)) from exc
        if isinstance(result, bool):
            payload = {"kind": "exact", "passed": result}
        else:
            payload = {"kind": "numeric", "passed": result <= args.tol, "residual": result}
        _emit(args, payload, f"yang-baxter: {'pass' if payload['passed'] else 'fail'}")
        return EXIT_OK
    model = _model_from_args(args)
    report = check_model(model, tol=args.tol)
    text = "\n".join(f"{e.name}: {'pass' if e.passed else 'fail'}" for e in report.equations)
    _emit(args, report.to_json(), text)
    return EXIT_OK


def cmd_entangle(args) -> int:
    if args.matrix:
        M = _load_matrix(args.matrix)
    else:
        model = _model_from_args(args)
        M = model.R
    verdict = is_entangling_2q(M, tol=args.tol)
    if verdict.entangling:
        text = "entangling"
        if verdict.witness is not None:
            text += "\nwitness (x, y, z, w): " + ", ".join(_fmt_complex(v) for v in verdict.witness)
            text += f"\nimage determinant: {_fmt_complex(verdict.witness_determinant)}"
    else:
        dec = verdict.decomposition
        text = f"not entangling ({dec.form} form)"
    _emit(args, verdict.to_json(), text)
    return EXIT_OK


def _parity_sample(job: tuple[int, int, int, int, int]) -> dict:
    seed, max_strands, max_length, moves, index = job
    rng = random.Random(f"{seed}:{index}")
    while True:
        b = random_braid(rng, rng.randint(1, max_strands), rng.randint(0, max_length))
        d = braid_to_morse(b)
        if components(d).count == 1:
            break
    if moves:
        d = random_equivalent(d, moves, rng.randrange(2**32))
    sc, w = seifert_count(d), writhe(d)
    return {"braid": str(b), "SC": sc, "w": w, "holds": (sc - w - 1) % 2 == 0}


def cmd_parity(args) -> int:
    jobs = [(args.seed, args.max_strands, args.max_length, args.moves, k) for k in range(args.samples)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_parity_sample, jobs, chunksize=32))
    else:
        results = [_parity_sample(j) for j in jobs]
    failures = [r for r in results if not r["holds"]]
    payload = {"samples": len(results), "failures": len(failures), "examples": failures[:5], "seed": args.seed}
    _emit(args, payload, f"{len(results)} knot diagrams, {len(failures)} violations of SC - w - 1 = 0 mod 2")
    return EXIT_OK


def cmd_moves(args) -> int:
    d = _diagram_from_args(args)
    if not d.is_closed:
        raise PreconditionFailure("moves need a closed diagram")
    model = _model_from_args(args)
    d2 = random_equivalent(d, args.steps, args.seed, max_width=args.max_width)
    v1, v2 = evaluate(d, model), evaluate(d2, model)
    same = bool(v1 == v2) if model.kind == "exact" else abs(complex(v1) - complex(v2)) <= args.tol
    payload = {
        "model": model.name,
        "original": d.to_json(),
        "rewritten": d2.to_json(),
        "value_before": _value_json(v1),
        "value_after": _value_json(v2),
        "unchanged": same,
        "seed": args.seed,
    }
    text = f"rewritten: {d2.to_word()}\nbefore: {_value_text(v1)}\nafter:  {_value_text(v2)}\nunchanged: {same}"
    _emit(args, payload, text)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knotamp", description="Quantum link amplitudes from Morse diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, model=True, theta=True):
        p.add_argument("--out", choices=("json", "text"), default="text")
        if model:
            p.add_argument("--model", choices=MODEL_NAMES, default="bracket")
            p.add_argument("--s-exponent", type=int, default=1, help="product model: s = i**k")
        if theta:
            p.add_argument("--theta", type=float, help="numeric mode: substitute A = exp(i theta)")

    p = sub.add_parser("eval", help="evaluate a model on a diagram")
    _add_diagram_args(p)
    common(p)
    p.add_argument("--normalize", action="store_true", help="apply the writhe correction")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("oracle", help="bracket by state expansion")
    _add_diagram_args(p)
    common(p, model=False, theta=False)
    p.add_argument("--normalize", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("jones3", help="3-braid trace formula")
    p.add_argument("--braid", required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--report", action="store_true", help="unitarity and relation residuals")
    p.add_argument("--lenient", action="store_true", help="allow |d| < 1 with complex entries")
    common(p, model=False, theta=False)
    p.set_defaults(func=cmd_jones3)

    p = sub.add_parser("ybe", help="check Yang-Baxter / model equations")
    p.add_argument("--matrix", help="JSON matrix file; otherwise --model is checked")
    p.add_argument("--tol", type=float, default=1e-10)
    common(p)
    p.set_defaults(func=cmd_ybe)

    p = sub.add_parser("entangle", help="entanglement verdict for a 4x4 gate")
    p.add_argument("--matrix", help="JSON matrix file; otherwise the model's R")
    p.add_argument("--tol", type=float, default=1e-10)
    common(p)
    p.set_defaults(func=cmd_entangle)

    p = sub.add_parser("parity", help="sample knot diagrams and test SC - w - 1 = 0 mod 2")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--max-strands", type=int, default=6)
    p.add_argument("--max-length", type=int, default=20)
    p.add_argument("--moves", type=int, default=0, help="random Morse moves applied per sample")
    p.add_argument("--jobs", type=int, default=1)
    common(p, model=False, theta=False)
    p.set_defaults(func=cmd_parity)

    p = sub.add_parser("moves", help="rewrite by random moves and re-evaluate")
    _add_diagram_args(p)
    p.add_argument("--steps", type=int, default=20)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-width", type=int, default=10)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--jobs", type=int, default=1, help="accepted for symmetry; a single rewrite is sequential")
    common(p)
    p.set_defaults(func=cmd_moves)
    return parser


_PRECONDITION_ERRORS = (
    PreconditionFailure,
    WidthOverflowError,
    UnsupportedNormalizationError,
    RepresentationError,
    SingularMatrixError,
    OracleError,
    DiagramError,
    MoveError,
)


def _fail(code: int, kind: str, message: str) -> int:
    print(json.dumps({"error": {"code": code, "kind": kind, "message": message}}), file=sys.stderr)
    return code


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    try:
        return args.func(args)
    except ParseFailure as exc:
        return _fail(EXIT_PARSE, "parse", str(exc))
    except _PRECONDITION_ERRORS as exc:
        return _fail(EXIT_PRECONDITION, "precondition", str(exc))
    except Exception as exc:  # noqa: BLE001
        return _fail(EXIT_INTERNAL, "internal", f"{type(exc).__name__}: {exc}")


def main() -> None:
    sys.exit(run())
