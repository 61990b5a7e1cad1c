"""Command-line front end.

Reads the text formats from :mod:`ebitcalc.formats`, runs the matching
count formula, and prints either human-readable lines or one JSON
object with stable field names.  Exit codes: 0 success, 1 usage error,
2 parse error, 3 domain error (dependent rows, composite modulus,
degree limit, and the like).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats
from .classical import css_parameters, gf4_parameters, gf4_to_binary
from .cv import DEFAULT_TOLERANCE, RealCheckMatrix, cv_ebit_count
from .errors import EbitcalcError, ParseError
from .laurent import conv_ebits, css_conv_ebits, gf4_conv_ebits
from .qudit import qudit_ebits
from .symplectic import (
    CodeParameters,
    QuantumCheckMatrix,
    code_parameters,
    ebit_count,
    symplectic_gram_schmidt,
)
from .verify import DEFAULT_SEED, run_random_sweep, verify_code

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3

_CONJECTURED_NOTE = "(conjectured)"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; this CLI reserves 2 for parse errors.
    def error(self, message):
        raise _UsageError(message)


def _core(
    command: str,
    *,
    n: int | None = None,
    generators: int | None = None,
    ebits: int | None = None,
    logical: int | None = None,
    ancillas: int | None = None,
    conjectured: bool = False,
    distance: int | None = None,
    **extra,
) -> dict:
    obj = {
        "command": command,
        "n": n,
        "generators": generators,
        "ebits": ebits,
        "logical": logical,
        "ancillas": ancillas,
        "conjectured": conjectured,
    }
    if distance is not None:
        obj["distance"] = distance
    obj.update(extra)
    return obj


def _read(path: str) -> str:
    return Path(path).read_text(encoding="ascii")


def _load_check_matrix(path: str, reduce_rows: bool) -> QuantumCheckMatrix:
    hz, hx = formats.parse_qcheck(_read(path))
    if reduce_rows:
        return QuantumCheckMatrix.reduced(hz, hx)
    return QuantumCheckMatrix(hz, hx)


def _parameter_lines(p: CodeParameters, generators: int) -> list[str]:
    return [
        f"n: {p.n}",
        f"generators: {generators}",
        f"ebits: {p.ebits}",
        f"logical: {p.logical}",
        f"ancillas: {p.ancillas}",
        f"parameters: {p.bracket()}",
    ]


def _parameter_warnings(p: CodeParameters) -> list[str]:
    if p.logical < 0:
        return [f"logical qubit count is negative ({p.logical})"]
    return []


def _cmd_ebits(args) -> dict:
    h = _load_check_matrix(args.file, args.reduce)
    c = ebit_count(h)
    return {
        "json": _core("ebits", n=h.n, generators=h.generators, ebits=c),
        "text": [f"ebits: {c}"],
        "quiet": c,
    }


def _cmd_params(args) -> dict:
    h = _load_check_matrix(args.file, args.reduce)
    p = code_parameters(h)
    return {
        "json": _core(
            "params",
            n=p.n,
            generators=h.generators,
            ebits=p.ebits,
            logical=p.logical,
            ancillas=p.ancillas,
        ),
        "text": _parameter_lines(p, h.generators),
        "quiet": p.bracket(),
        "warnings": _parameter_warnings(p),
    }


def _cmd_sgsop(args) -> dict:
    h = _load_check_matrix(args.file, args.reduce)
    result = symplectic_gram_schmidt(h)
    transform_rows = result.transform.to_strings()
    transformed_rows = [
        f"{z}|{x}"
        for z, x in zip(
            result.transformed.hz.to_strings(), result.transformed.hx.to_strings()
        )
    ]
    text = [
        f"ebits: {result.ebits}",
        "pairs: " + (" ".join(f"({a},{b})" for a, b in result.pairs) or "none"),
        "isotropic: " + (" ".join(str(i) for i in result.isotropic) or "none"),
        "transform:",
        *transform_rows,
        "transformed:",
        *transformed_rows,
    ]
    return {
        "json": _core(
            "sgsop",
            n=h.n,
            generators=h.generators,
            ebits=result.ebits,
            pairs=[list(p) for p in result.pairs],
            isotropic=list(result.isotropic),
            transform=transform_rows,
            transformed=transformed_rows,
        ),
        "text": text,
        "quiet": result.ebits,
    }


def _cmd_css(args) -> dict:
    h1 = formats.parse_gf2(_read(args.file1))
    h2 = formats.parse_gf2(_read(args.file2))
    if (args.d1 is None) != (args.d2 is None):
        raise _UsageError("--d1 and --d2 must be given together")
    p = css_parameters(h1, h2, args.d1, args.d2)
    generators = p.n - p.logical + p.ebits
    return {
        "json": _core(
            "css",
            n=p.n,
            generators=generators,
            ebits=p.ebits,
            logical=p.logical,
            ancillas=p.ancillas,
            distance=p.distance,
        ),
        "text": _parameter_lines(p, generators),
        "quiet": p.ebits,
        "warnings": _parameter_warnings(p),
    }


def _cmd_gf4(args) -> dict:
    h = formats.parse_gf4(_read(args.file))
    p = gf4_parameters(h)
    generators = p.n - p.logical + p.ebits
    return {
        "json": _core(
            "gf4",
            n=p.n,
            generators=generators,
            ebits=p.ebits,
            logical=p.logical,
            ancillas=p.ancillas,
        ),
        "text": _parameter_lines(p, generators),
        "quiet": p.ebits,
        "warnings": _parameter_warnings(p),
    }


def _cmd_gf4_expand(args) -> dict:
    h = formats.parse_gf4(_read(args.file))
    q = gf4_to_binary(h, drop_dependent=args.reduce)
    rendered = formats.format_qcheck(q.hz, q.hx).rstrip("\n")
    lines = rendered.split("\n")
    return {
        "json": _core(
            "gf4-expand",
            n=q.n,
            generators=q.generators,
            check_matrix=lines[1:],
        ),
        "text": lines,
        "quiet": rendered,
    }


def _cmd_qudit(args) -> dict:
    hz, hx = formats.parse_qcheckd(_read(args.file))
    c = qudit_ebits(hz, hx)
    return {
        "json": _core(
            "qudit", n=hz.cols, generators=hz.rows, ebits=c, modulus=hz.modulus
        ),
        "text": [f"edits: {c}"],
        "quiet": c,
    }


def _cmd_cv(args) -> dict:
    z, x = formats.parse_cvcheck(_read(args.file))
    h = RealCheckMatrix(z, x, tolerance=args.tol)
    c = cv_ebit_count(h)
    return {
        "json": _core(
            "cv", n=h.n, generators=h.generators, ebits=c, tolerance=args.tol
        ),
        "text": [f"entangled modes: {c}"],
        "quiet": c,
    }


def _cmd_conv(args) -> dict:
    h = formats.parse_conv_pair(_read(args.file))
    c = conv_ebits(h)
    return {
        "json": _core(
            "conv", n=h.n, generators=h.generators, ebits=c, conjectured=True
        ),
        "text": [f"ebits per frame: {c} {_CONJECTURED_NOTE}"],
        "quiet": c,
    }


def _cmd_conv4(args) -> dict:
    m = formats.parse_conv_plain(_read(args.file), tag="conv4")
    c = gf4_conv_ebits(m)
    return {
        "json": _core(
            "conv4", n=m.cols, generators=m.rows, ebits=c, conjectured=True
        ),
        "text": [f"ebits per frame: {c} {_CONJECTURED_NOTE}"],
        "quiet": c,
    }


def _cmd_conv_css(args) -> dict:
    m1 = formats.parse_conv_plain(_read(args.file1), tag="conv")
    m2 = formats.parse_conv_plain(_read(args.file2), tag="conv")
    c = css_conv_ebits(m1, m2)
    return {
        "json": _core(
            "conv-css",
            n=m1.cols,
            generators=m1.rows + m2.rows,
            ebits=c,
            conjectured=True,
        ),
        "text": [f"ebits per frame: {c} {_CONJECTURED_NOTE}"],
        "quiet": c,
    }


def _cmd_verify(args) -> dict:
    if (args.file is None) == (args.random is None):
        raise _UsageError("verify needs a file or --random <count>, not both")
    if args.random is not None:
        if args.max_n is None:
            raise _UsageError("--random needs --max-n")
        sweep = run_random_sweep(args.random, args.max_n, seed=args.seed)
        text = [
            f"cases: {sweep.cases}",
            f"seed: {sweep.seed}",
            f"failures: {len(sweep.failures)}",
            *sweep.failures,
            f"agreement: {'yes' if sweep.agreement else 'NO'}",
        ]
        return {
            "json": _core(
                "verify",
                cases=sweep.cases,
                seed=sweep.seed,
                failures=list(sweep.failures),
                agreement=sweep.agreement,
            ),
            "text": text,
            "quiet": len(sweep.failures),
        }
    h = _load_check_matrix(args.file, args.reduce)
    report = verify_code(h)
    oracle = "skipped" if report.oracle_value is None else report.oracle_value
    text = [
        f"subject: {report.subject}",
        f"formula: {report.formula_value}",
        f"procedure: {report.procedure_value}",
        f"enumeration: {oracle}",
        f"agreement: {'yes' if report.agreement else 'NO'}",
    ]
    return {
        "json": _core(
            "verify",
            n=h.n,
            generators=h.generators,
            ebits=report.formula_value,
            subject=report.subject,
            formula=report.formula_value,
            procedure=report.procedure_value,
            enumeration=report.oracle_value,
            agreement=report.agreement,
        ),
        "text": text,
        "quiet": report.formula_value,
    }


_HANDLERS = {
    "ebits": _cmd_ebits,
    "params": _cmd_params,
    "sgsop": _cmd_sgsop,
    "css": _cmd_css,
    "gf4": _cmd_gf4,
    "gf4-expand": _cmd_gf4_expand,
    "qudit": _cmd_qudit,
    "cv": _cmd_cv,
    "conv": _cmd_conv,
    "conv4": _cmd_conv4,
    "conv-css": _cmd_conv_css,
    "verify": _cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument(
        "--reduce",
        action="store_true",
        help="drop dependent generator rows instead of failing",
    )
    common.add_argument(
        "--quiet", action="store_true", help="print only the primary result"
    )

    parser = _Parser(
        prog="ebitcalc",
        description="Entanglement cost of stabilizer generator sets: "
        "ebit/edit/entangled-mode counts from check matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("ebits", parents=[common], help="ebit count of a generator set")
    p.add_argument("file", help="qcheck file")

    p = sub.add_parser("params", parents=[common], help="[[n, k+c; c]] parameters")
    p.add_argument("file", help="qcheck file")

    p = sub.add_parser(
        "sgsop", parents=[common], help="symplectic Gram-Schmidt pairing"
    )
    p.add_argument("file", help="qcheck file")

    p = sub.add_parser(
        "css", parents=[common], help="import two binary parity checks"
    )
    p.add_argument("file1", help="gf2 file (bit-flip checks)")
    p.add_argument("file2", help="gf2 file (phase-flip checks)")
    p.add_argument("--d1", type=int, help="distance of the first code")
    p.add_argument("--d2", type=int, help="distance of the second code")

    p = sub.add_parser("gf4", parents=[common], help="import a quaternary parity check")
    p.add_argument("file", help="gf4 file")

    p = sub.add_parser(
        "gf4-expand",
        parents=[common],
        help="print the binary generator set of a quaternary import",
    )
    p.add_argument("file", help="gf4 file")

    p = sub.add_parser("qudit", parents=[common], help="edit count over a prime modulus")
    p.add_argument("file", help="qcheckd file")

    p = sub.add_parser(
        "cv", parents=[common], help="entangled-mode count of a real generator set"
    )
    p.add_argument("file", help="cvcheck file")
    p.add_argument(
        "--tol",
        type=float,
        default=DEFAULT_TOLERANCE,
        help=f"relative rank tolerance (default {DEFAULT_TOLERANCE})",
    )

    p = sub.add_parser(
        "conv", parents=[common], help="conjectured per-frame ebits, convolutional"
    )
    p.add_argument("file", help="conv file (Z|X pair form)")

    p = sub.add_parser(
        "conv4",
        parents=[common],
        help="conjectured per-frame ebits, quaternary convolutional import",
    )
    p.add_argument("file", help="conv4 file (plain matrix form)")

    p = sub.add_parser(
        "conv-css",
        parents=[common],
        help="per-frame ebits for two binary convolutional parity checks",
    )
    p.add_argument("file1", help="conv file (plain matrix form)")
    p.add_argument("file2", help="conv file (plain matrix form)")

    p = sub.add_parser(
        "verify", parents=[common], help="cross-check formula against procedure"
    )
    p.add_argument("file", nargs="?", help="qcheck file")
    p.add_argument("--random", type=int, metavar="COUNT", help="run a random sweep")
    p.add_argument("--max-n", dest="max_n", type=int, help="largest qubit count")
    p.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help=f"sweep seed (default {DEFAULT_SEED})"
    )

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        payload = _HANDLERS[args.command](args)
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except EbitcalcError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DOMAIN

    if not args.quiet:
        for warning in payload.get("warnings", ()):
            print(f"warning: {warning}", file=sys.stderr)
    if args.json:
        print(json.dumps(payload["json"], sort_keys=True))
    elif args.quiet:
        print(payload["quiet"])
    else:
        for line in payload["text"]:
            print(line)
    return EXIT_OK
