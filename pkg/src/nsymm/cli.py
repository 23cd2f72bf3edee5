"""Command-line front end.

Subcommands: newton, explog, verify, hs, qsymm.  Exit codes are a
stable contract: 0 success / all checks passed, 1 verification failure,
2 usage or parse error.  Output is text by default or JSON with
--format json; --out writes to a file instead of stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .config import DEFAULT_MAX_DEGREE, DegreeOverflowError, check_index
from .explog import u_of_z, z_of_u
from .hsops import (
    HSFamily,
    NotADerivationError,
    d_from_delta,
    d_from_partial,
    delta_from_d,
    derivation_defect,
    hs_defect,
    partial_from_d,
)
from .newton import (
    newton_p_explicit,
    newton_p_left,
    newton_p_right,
    z_in_pprime,
    z_in_pprime_via_c,
)
from .qsymm import QSPoly, d_qsymm, deconcat, pairing, quasi_shuffle
from .poly import NCPoly
from .serialize import (
    FormatError,
    derivations_from_data,
    derivations_to_data,
    family_from_data,
    family_to_data,
    poly_to_data,
    render_poly,
    render_tensor,
    tensor_to_data,
)
from .suites import SUITES, run_suite


class CliError(Exception):
    def __init__(self, message, code=2):
        super().__init__(message)
        self.code = code


def _positive_int(text):
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _common_flags():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--max-degree",
        type=_positive_int,
        default=DEFAULT_MAX_DEGREE,
        help=f"degree bound for this command (default {DEFAULT_MAX_DEGREE})",
    )
    parent.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        dest="output_format",
        help="output format (default text)",
    )
    parent.add_argument("--out", metavar="FILE", default=None, help="write output to FILE")
    return parent


def _emit(args, text: str, data) -> None:
    payload = text if args.output_format == "text" else json.dumps(data, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(payload + "\n")
    else:
        print(payload)


def _check_n(n, args, what="n"):
    try:
        check_index(n, args.max_degree, what=what)
    except (DegreeOverflowError, ValueError) as exc:
        raise CliError(str(exc)) from None
    return n


NEWTON_VARIANTS = {
    "left": (newton_p_left, "Z"),
    "right": (newton_p_right, "Z"),
    "explicit": (newton_p_explicit, "Z"),
    "z-in-p": (z_in_pprime, "Pprime"),
    "z-in-p-via-c": (z_in_pprime_via_c, "Pprime"),
}


def _cmd_newton(args) -> int:
    _check_n(args.n, args)
    compute, basis = NEWTON_VARIANTS[args.variant]
    poly = compute(args.n, args.max_degree)
    _emit(args, render_poly(poly, basis), poly_to_data(poly, basis))
    return 0


def _cmd_explog(args) -> int:
    _check_n(args.n, args)
    if args.direction == "z-of-u":
        poly, basis = z_of_u(args.n, args.max_degree), "U"
    else:
        poly, basis = u_of_z(args.n, args.max_degree), "Z"
    _emit(args, render_poly(poly, basis), poly_to_data(poly, basis))
    return 0


def _cmd_verify(args) -> int:
    _check_n(args.max_degree, args, what="max_degree")
    report = run_suite(args.suite, args.max_degree)
    _emit(args, report.render(), report.to_data())
    return 0 if report.passed else 1


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _write_json(path, data) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(data, handle, indent=2)
        handle.write("\n")


def _load_family(path):
    data = _load_json(path)
    try:
        return family_from_data(data)
    except FormatError as exc:
        raise CliError(f"{path}: {exc}") from None


def _load_derivations(path):
    data = _load_json(path)
    try:
        return derivations_from_data(data)
    except FormatError as exc:
        raise CliError(f"{path}: {exc}") from None


def _validated_family(path) -> HSFamily:
    algebra, maps = _load_family(path)
    defect = hs_defect(algebra, maps)
    if defect is not None:
        n, i, j = defect
        raise CliError(
            f"{path}: input family fails the convolution law at n={n} on basis pair "
            f"({algebra.labels[i]!r}, {algebra.labels[j]!r})",
            code=1,
        )
    return HSFamily(algebra, maps)


def _cmd_hs(args) -> int:
    action = args.action
    if action == "validate":
        data = _load_json(args.input)
        if isinstance(data, dict) and "maps" in data:
            try:
                algebra, maps = family_from_data(data)
            except FormatError as exc:
                raise CliError(f"{args.input}: {exc}") from None
            defect = hs_defect(algebra, maps)
            ok = defect is None
            witness = None if ok else {"n": defect[0], "i": defect[1], "j": defect[2]}
            kind = "family"
        elif isinstance(data, dict) and "derivations" in data:
            try:
                algebra, maps = derivations_from_data(data)
            except FormatError as exc:
                raise CliError(f"{args.input}: {exc}") from None
            witness = None
            for t, d in enumerate(maps):
                bad = derivation_defect(d, algebra)
                if bad is not None:
                    witness = {"derivation": t + 1, "i": bad[0], "j": bad[1]}
                    break
            ok = witness is None
            kind = "derivations"
        else:
            raise CliError(f"{args.input}: $: expected an object with 'maps' or 'derivations'")
        verdict = "valid" if ok else "INVALID"
        text = f"{kind} {verdict}" + (f" witness={witness}" if witness else "")
        _emit(args, text, {"kind": kind, "valid": ok, "witness": witness})
        return 0 if ok else 1

    if args.output is None:
        raise CliError(f"hs {action} requires an output file")

    if action in ("extract-delta", "extract-partial"):
        family = _validated_family(args.input)
        extract = delta_from_d if action == "extract-delta" else partial_from_d
        maps = extract(family)
        _write_json(args.output, derivations_to_data(family.algebra, maps))
        return 0

    # build-from-delta / build-from-partial
    algebra, maps = _load_derivations(args.input)
    build = d_from_delta if action == "build-from-delta" else d_from_partial
    try:
        family = build(maps, algebra)
    except NotADerivationError as exc:
        raise CliError(f"{args.input}: {exc}", code=1) from None
    _write_json(args.output, family_to_data(family.algebra, family.maps))
    return 0


def _parse_composition(text, what="composition"):
    if text in ("e", ""):
        return ()
    try:
        parts = tuple(int(piece, 10) for piece in text.split(","))
    except ValueError:
        raise CliError(f"{what} must be comma-separated integers or 'e', got {text!r}") from None
    if any(p < 1 for p in parts):
        raise CliError(f"{what} parts must be >= 1, got {text!r}")
    return parts


def _cmd_qsymm(args) -> int:
    action = args.action
    values = args.args
    if action == "shuffle":
        if len(values) != 2:
            raise CliError("qsymm shuffle takes two compositions")
        a, b = (_parse_composition(v) for v in values)
        total = sum(a) + sum(b)
        if total > args.max_degree:
            raise CliError(f"total weight {total} exceeds the degree limit {args.max_degree}")
        product = quasi_shuffle(QSPoly.monomial(a), QSPoly.monomial(b), args.max_degree)
        _emit(args, render_poly(product, "M"), poly_to_data(product, "M"))
        return 0
    if action == "deconcat":
        if len(values) != 1:
            raise CliError("qsymm deconcat takes one composition")
        tensor = deconcat(QSPoly.monomial(_parse_composition(values[0])))
        _emit(args, render_tensor(tensor, "M"), tensor_to_data(tensor, "M"))
        return 0
    if action == "dn":
        if len(values) != 2:
            raise CliError("qsymm dn takes an index and a composition")
        try:
            n = int(values[0], 10)
        except ValueError:
            raise CliError(f"dn index must be an integer, got {values[0]!r}") from None
        if n < 1:
            raise CliError(f"dn index must be >= 1, got {n}")
        result = d_qsymm(n, QSPoly.monomial(_parse_composition(values[1])))
        _emit(args, render_poly(result, "M"), poly_to_data(result, "M"))
        return 0
    # pairing
    if len(values) != 2:
        raise CliError("qsymm pairing takes a monomial composition and a word")
    a = _parse_composition(values[0], "monomial composition")
    w = _parse_composition(values[1], "word")
    value = pairing(QSPoly.monomial(a), NCPoly.word(w))
    _emit(args, str(value), {"value": {"num": str(value.numerator), "den": str(value.denominator)}})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nsymm",
        description="Exact calculator for noncommutative symmetric functions and the Hasse-Schmidt derivation calculus.",
    )
    common = _common_flags()
    sub = parser.add_subparsers(dest="command", required=True)

    p_newton = sub.add_parser(
        "newton", parents=[common], help="Newton primitives and generator expansions"
    )
    p_newton.add_argument("n", type=_positive_int)
    p_newton.add_argument("--variant", choices=sorted(NEWTON_VARIANTS), default="left")
    p_newton.set_defaults(handler=_cmd_newton)

    p_explog = sub.add_parser(
        "explog", parents=[common], help="exp/log change of generators"
    )
    p_explog.add_argument("n", type=_positive_int)
    p_explog.add_argument("--direction", choices=("z-of-u", "u-of-z"), default="z-of-u")
    p_explog.set_defaults(handler=_cmd_explog)

    p_verify = sub.add_parser(
        "verify", parents=[common], help="run a named verification suite"
    )
    p_verify.add_argument("suite", choices=sorted(SUITES))
    p_verify.set_defaults(handler=_cmd_verify)

    p_hs = sub.add_parser(
        "hs", parents=[common], help="Hasse-Schmidt family conversions on test algebras"
    )
    p_hs.add_argument(
        "action",
        choices=(
            "validate",
            "extract-delta",
            "extract-partial",
            "build-from-delta",
            "build-from-partial",
        ),
    )
    p_hs.add_argument("input", metavar="IN.json")
    p_hs.add_argument("output", metavar="OUT.json", nargs="?", default=None)
    p_hs.set_defaults(handler=_cmd_hs)

    p_qsymm = sub.add_parser(
        "qsymm", parents=[common], help="quasi-shuffle algebra operations"
    )
    p_qsymm.add_argument("action", choices=("shuffle", "deconcat", "dn", "pairing"))
    p_qsymm.add_argument("args", nargs="*")
    p_qsymm.set_defaults(handler=_cmd_qsymm)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return err.code
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
