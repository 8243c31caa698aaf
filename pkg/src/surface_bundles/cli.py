"""Command-line front end: `surface-bundles <subcommand> ...`.

    generate    write X_n(g, h) (or a torus bundle with --torus) as a bundle file
    verify      check bundle files at one level; PASS / FAIL with evidence
    invariants  H1 of the total space, optional mod-n rank, Euler characteristic, signature
    sum         fiber sum or section sum of two bundle files
    certify     indecomposability certificate for X_n(g, h) or a torus bundle
    separate    pairwise H1 comparison of several bundle files

Reports go to stdout, logs to stderr. Exit status: 0 ok, 2 parse error,
3 precondition violation, 4 verification failure.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import TextIO

from surface_bundles import __version__, config
from surface_bundles.bundles import (
    fiber_sum,
    generate_torus_bundle,
    generate_xn,
    homotopy_separation,
    indecomposability_report,
    section_sum,
    torus_indecomposability_report,
    verify_factorization,
)
from surface_bundles.enums import ExitStatus, KimWordVariant, SumKind, VerificationLevel
from surface_bundles.errors import ParseError, PreconditionError, VerificationError
from surface_bundles.formats import format_bundle, parse_dissection, parse_twist_word, read_bundle
from surface_bundles.observability import configure_logging
from surface_bundles.render import (
    render_certificate,
    render_invariants,
    render_separation,
    render_verification,
)

logger = logging.getLogger(__name__)

DEFAULTS = config.GENERATION_DEFAULTS


# ─────────────────────────────── parser ───────────────────────────────

def _add_parameters(p: argparse.ArgumentParser, *, with_torus: bool = True) -> None:
    p.add_argument("--g", type=int, default=DEFAULTS["g"], help="fiber genus")
    p.add_argument("--h", type=int, default=DEFAULTS["h"], help="base genus")
    p.add_argument("--n", type=int, default=DEFAULTS["n"], help="Lonne exponent")
    p.add_argument("--kim", choices=[v.value for v in KimWordVariant], default=None,
                   help="genus-2 Kim word reading (default from SURFACE_BUNDLES_KIM_WORD)")
    if with_torus:
        p.add_argument("--torus", action="store_true", help="mapping torus of phi_k instead of X_n(g, h)")
        p.add_argument("--k", type=int, default=DEFAULTS["k"], help="torus twist power")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="surface-bundles",
                                     description="Monodromy factorizations of indecomposable surface bundles.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="override SURFACE_BUNDLES_LOG_LEVEL")
    parser.add_argument("--log-format", choices=config.LOG_FORMATS, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a factorization file")
    _add_parameters(p)
    p.add_argument("--level", action="append", choices=[lvl.value for lvl in VerificationLevel],
                   help="verification levels to run before writing (repeatable)")
    p.add_argument("-o", "--output", type=Path, default=None, help="output path (stdout if omitted)")

    p = sub.add_parser("verify", help="check bundle files at one level")
    p.add_argument("--level", choices=[lvl.value for lvl in VerificationLevel], default="homology")
    p.add_argument("files", nargs="+", type=Path)

    p = sub.add_parser("invariants", help="homology, signature and Euler characteristic")
    p.add_argument("file", type=Path)
    p.add_argument("--mod", type=int, default=None, help="also report the rank of H1 with Z/N coefficients")
    p.add_argument("--signature", action="store_true")
    p.add_argument("--euler", action="store_true")

    p = sub.add_parser("sum", help="fiber sum or section sum of two bundles")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--fiber", dest="kind", action="store_const", const=SumKind.FIBER.value)
    kind.add_argument("--section", dest="kind", action="store_const", const=SumKind.SECTION.value)
    p.add_argument("first", type=Path)
    p.add_argument("second", type=Path)
    p.add_argument("--glue", default=None, help="gluing twist word, left order (default: identity)")
    p.add_argument("--lift", type=int, default=0, help="section sums: power of the boundary twist")
    p.add_argument("-o", "--output", type=Path, default=None)

    p = sub.add_parser("certify", help="indecomposability certificate")
    _add_parameters(p)
    p.add_argument("--dissection", type=Path, default=None, help="dissection file for the link condition")

    p = sub.add_parser("separate", help="pairwise H1 comparison")
    p.add_argument("files", nargs="+", type=Path)
    p.add_argument("--labels", nargs="+", default=None)
    return parser


# ─────────────────────────────── commands ───────────────────────────────

def _variant(args: argparse.Namespace) -> KimWordVariant | None:
    return KimWordVariant(args.kim) if args.kim else None


def _emit(text: str, output: Path | None, out: TextIO) -> None:
    if output is None:
        out.write(text)
    else:
        output.write_text(text, encoding="utf-8")
        logger.info("wrote %s", output)


def cmd_generate(args: argparse.Namespace, out: TextIO) -> ExitStatus:
    if args.torus:
        f = generate_torus_bundle(args.g, args.k)
    else:
        kwargs = {"kim_variant": _variant(args)}
        if args.level:
            kwargs["levels"] = tuple(VerificationLevel(lvl) for lvl in args.level)
        f = generate_xn(args.g, args.h, args.n, **kwargs)
    _emit(format_bundle(f), args.output, out)
    return ExitStatus.OK


def cmd_verify(args: argparse.Namespace, out: TextIO) -> ExitStatus:
    status = ExitStatus.OK
    for path in args.files:
        report = verify_factorization(read_bundle(path), args.level)
        if len(args.files) > 1:
            out.write(f"{path}: ")
        out.write(render_verification(report))
        if not report.passed:
            status = ExitStatus.VERIFICATION_FAILED
    return status


def cmd_invariants(args: argparse.Namespace, out: TextIO) -> ExitStatus:
    if args.mod is not None and args.mod < config.PARAMETER_BOUNDS["mod_min"]:
        raise PreconditionError(f"--mod {args.mod} < {config.PARAMETER_BOUNDS['mod_min']}")
    f = read_bundle(args.file)
    if VerificationLevel.HOMOLOGY not in f.verified:
        report = verify_factorization(f, VerificationLevel.HOMOLOGY)
        if not report.passed:
            raise VerificationError(f"{args.file}: {report.detail}", level=report.level.value,
                                    evidence=report.evidence)
    out.write(render_invariants(f, mod=args.mod, with_signature=args.signature, with_euler=args.euler))
    return ExitStatus.OK


def cmd_sum(args: argparse.Namespace, out: TextIO) -> ExitStatus:
    f1, f2 = read_bundle(args.first), read_bundle(args.second)
    glue = parse_twist_word(args.glue, f1.fiber_genus) if args.glue else None
    if SumKind(args.kind) is SumKind.FIBER:
        if args.lift:
            raise PreconditionError("--lift applies to section sums only")
        f = fiber_sum(f1, f2, glue)
    else:
        f = section_sum(f1, f2, args.lift, glue)
    _emit(format_bundle(f), args.output, out)
    return ExitStatus.OK


def cmd_certify(args: argparse.Namespace, out: TextIO) -> ExitStatus:
    if args.torus:
        report = torus_indecomposability_report(args.g, args.k)
    else:
        dissection = None
        if args.dissection is not None:
            dissection = parse_dissection(args.dissection.read_text(encoding="utf-8"))
        report = indecomposability_report(args.g, args.h, args.n, dissection=dissection,
                                          kim_variant=_variant(args))
    out.write(render_certificate(report))
    return ExitStatus.OK if report.all_passed else ExitStatus.VERIFICATION_FAILED


def cmd_separate(args: argparse.Namespace, out: TextIO) -> ExitStatus:
    fs = [read_bundle(p) for p in args.files]
    labels = args.labels or [p.name for p in args.files]
    out.write(render_separation(homotopy_separation(fs, labels)))
    return ExitStatus.OK


COMMANDS = {
    "generate": cmd_generate,
    "verify": cmd_verify,
    "invariants": cmd_invariants,
    "sum": cmd_sum,
    "certify": cmd_certify,
    "separate": cmd_separate,
}


# ─────────────────────────────── entry points ───────────────────────────────

def run(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    """Parse, dispatch and map errors to an exit status; never raises for domain errors."""
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level, args.log_format)
    try:
        return int(COMMANDS[args.command](args, out))
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return int(ExitStatus.PARSE_ERROR)
    except VerificationError as exc:
        err.write(f"verification failed: {exc}\n")
        if exc.evidence:
            err.write(exc.evidence.rstrip("\n") + "\n")
        return int(ExitStatus.VERIFICATION_FAILED)
    except (PreconditionError, ValueError) as exc:
        err.write(f"precondition violated: {exc}\n")
        logger.debug("precondition traceback", exc_info=True)
        return int(ExitStatus.PRECONDITION)
    except OSError as exc:
        err.write(f"cannot read input: {exc}\n")
        return int(ExitStatus.PARSE_ERROR)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
