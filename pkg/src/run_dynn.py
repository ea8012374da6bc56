#!/usr/bin/python
import argparse
import json
import logging
import sys

from action.coordinate_action import CoordinateAction
from analysis.entropy import EntropyEstimator
from analysis.pa_analyzer import PAAnalyzer, PAReport
from analysis.verification import FamilyVerifier
from braid.braid_word import BraidWord, BraidWordBuilder
from coords.inversion import CoordinateConverter
from coords.validation import TriangleValidator
from param.analysis_parameters import AnalysisParameterBuilder
from param.config_enums import CoordsCommand, FamilyKind
from provider.output_provider import OutputProvider, OutputProviderFactory
from util.errors import BraidWordError, DynnikovError
from util.helpers import Helpers as h
from util.vector_parser import VectorParser

# options whose values may start with '-'
_VALUE_OPTIONS = {"--ab": "--ab", "--triangle": "--triangle", "-w": "--word", "--word": "--word"}


def _join_values(argv: list[str]) -> list[str]:
    out = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg in _VALUE_OPTIONS and i + 1 < len(argv):
            out.append(_VALUE_OPTIONS[arg] + "=" + argv[i + 1])
            i += 2
        else:
            out.append(arg)
            i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print machine-readable JSON.")
    common.add_argument("--seed", type=int, default=None, help="Seed for random starts (default 0).")
    common.add_argument("--config", type=str, default=None, help="Path to json-formatted configuration.")
    common.add_argument("--verbose", action="store_true", help="Log progress to stderr.")

    parser = argparse.ArgumentParser(
        prog="run_dynn.py",
        description="Dynnikov coordinates, the braid action on them, and pseudo-Anosov analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    coords = sub.add_parser("coords", parents=[common], help="Convert and check lamination coordinates.")
    coords.add_argument("action", choices=[c.value for c in CoordsCommand])
    coords.add_argument("-n", type=int, required=True, help="Number of punctures.")
    coords.add_argument("--ab", type=str, help="Dynnikov coordinates 'a1,..;b1,..'.")
    coords.add_argument("--triangle", type=str, help="Triangle coordinates 'alpha1,..;beta1,..'.")

    act = sub.add_parser("act", parents=[common], help="Apply a braid word to coordinates.")
    _add_word_arguments(act)
    act.add_argument("--ab", type=str, required=True, help="Dynnikov coordinates 'a1,..;b1,..'.")
    act.add_argument("--iters", type=int, default=1, help="Number of times to apply the word.")
    act.add_argument(
        "--projective", action="store_true", help="Rescale to sup-norm 1 after each application."
    )

    pa = sub.add_parser("pa", parents=[common], help="Search for a pseudo-Anosov dilatation.")
    _add_word_arguments(pa)
    pa.add_argument("--restarts", type=int, default=None, help="Number of random starts.")
    pa.add_argument(
        "--stable", action="store_true", help="Analyse the inverse word (stable foliation)."
    )

    entropy = sub.add_parser("entropy", parents=[common], help="Estimate topological entropy.")
    _add_word_arguments(entropy)
    entropy.add_argument("--iters", type=int, default=None, help="Number of word applications.")
    entropy.add_argument("--ab", type=str, default=None, help="Integer start 'a1,..;b1,..'.")
    entropy.add_argument("--csv", action="store_true", help="Print the m, c_m, rate trajectory as CSV.")

    family = sub.add_parser("family", parents=[common], help="Check a braid family against its closed form.")
    family.add_argument("kind", choices=[k.value for k in FamilyKind])
    family.add_argument("-m", type=int, default=None, help="First family index (beta, sigma).")
    family.add_argument("-n", type=int, required=True, help="Second family index, or n for tau.")
    family.add_argument("--restarts", type=int, default=None, help="Number of random starts.")
    return parser


def _add_word_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("-n", type=int, required=True, help="Number of strands.")
    p.add_argument(
        "-w", "--word", type=str, required=True, help="Braid word, e.g. '1 2 -3' or '[1, 2, -3]'."
    )
    p.add_argument("--reduce", action="store_true", help="Cancel adjacent inverse pairs first.")


def parse_word(text: str, n: int, reduce: bool) -> BraidWord:
    if text.lstrip().startswith("["):
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise BraidWordError("Invalid JSON braid word: " + str(e))
        return BraidWordBuilder.from_json(raw, n, reduce)
    return BraidWordBuilder.parse_word(text, n, reduce)


def run_coords(args, parser, output: OutputProvider) -> int:
    if args.action in (CoordsCommand.INVERT, CoordsCommand.COUNTS):
        if not args.ab:
            parser.error("coords " + args.action + " needs --ab")
        dc = _parse_vector(parser, VectorParser.parse_dynnikov, args.ab, args.n)
        if args.action == CoordsCommand.INVERT:
            tc = CoordinateConverter.triangle_from_dynnikov(dc)
            if args.json:
                output.save_json(tc.to_json(), "triangle.json")
            else:
                output.save_text(_format_triangle(tc), "triangle.txt")
        else:
            counts = CoordinateConverter.component_counts(dc)
            if args.json:
                output.save_json(counts.to_json(), "counts.json")
            else:
                output.save_text(_format_counts(counts), "counts.txt")
        return 0

    if not args.triangle:
        parser.error("coords " + args.action + " needs --triangle")
    tc = _parse_vector(parser, VectorParser.parse_triangle, args.triangle, args.n)
    if args.action == CoordsCommand.FORWARD:
        dc = CoordinateConverter.dynnikov_from_triangle(tc)
        if args.json:
            output.save_json(dc.to_json(), "dynnikov.json")
        else:
            output.save_text(_format_dynnikov(dc), "dynnikov.txt")
        return 0

    report = TriangleValidator.validate_triangle(tc)
    if args.json:
        output.save_json(report.to_json(), "validation.json")
    else:
        output.save_text(report.describe(), "validation.txt")
    return 0 if report.ok else 1


def run_act(args, parser, output: OutputProvider) -> int:
    w = parse_word(args.word, args.n, args.reduce)
    dc = _parse_vector(parser, VectorParser.parse_dynnikov, args.ab, args.n)
    if args.iters < 1:
        parser.error("--iters must be >= 1")

    if args.projective:
        trajectory = CoordinateAction.apply_word_projective(dc, w, args.iters)
        if args.json:
            output.save_json(
                {"word": w.to_json(), "points": [p.to_json() for p in trajectory.points]},
                "trajectory.json",
            )
        else:
            lines = [str(m + 1) + ": " + _format_dynnikov(p) for m, p in enumerate(trajectory.points)]
            output.save_text("\n".join(lines), "trajectory.txt")
        return 0

    result = CoordinateAction.apply_word(dc, BraidWordBuilder.power(w, args.iters))
    if args.json:
        output.save_json(result.to_json(), "action.json")
    else:
        output.save_text(_format_dynnikov(result), "action.txt")
    return 0


def run_pa(args, parser, output: OutputProvider, params) -> int:
    w = parse_word(args.word, args.n, args.reduce)
    if args.stable:
        w = BraidWordBuilder.inverse_word(w)
    report = PAAnalyzer.analyze_pa(w, params)
    if args.json:
        output.save_json(report.to_json(), "pa_report.json")
    else:
        output.save_text(_format_report(report), "pa_report.txt")
    return 0


def run_entropy(args, parser, output: OutputProvider, config: dict) -> int:
    w = parse_word(args.word, args.n, args.reduce)
    start = None
    if args.ab:
        start = _parse_vector(parser, VectorParser.parse_dynnikov, args.ab, args.n)
    iters = args.iters if args.iters is not None else h.require(config, "entropy/iters", int)
    estimate = EntropyEstimator.entropy_estimate(w, start, iters)
    if args.csv:
        output.save_csv(("m", "c_m", "rate"), estimate.rows(), "entropy.csv")
    elif args.json:
        output.save_json(estimate.to_json(), "entropy.json")
    else:
        output.save_text(
            "word: "
            + str(w)
            + "\nc_"
            + str(iters)
            + ": "
            + format(estimate.final_sample, ".10f")
            + "\ngrowth rate: "
            + format(estimate.final, ".10f"),
            "entropy.txt",
        )
    return 0


def run_family(args, parser, output: OutputProvider, params) -> int:
    kind = FamilyKind(args.kind)
    result = FamilyVerifier.verify_family(kind, args.m, args.n, params)
    if args.json:
        output.save_json(result.to_json(), "family.json")
    else:
        lines = [
            "word: " + str(result.word) + " (n=" + str(result.word.n) + ")",
            "status: " + str(result.report.status),
            "closed form: " + ("available" if result.closed_form_available else "unavailable"),
        ]
        if result.lam_root is not None:
            lines.append("lambda (root): " + format(result.lam_root, ".12f"))
        if result.report.lam is not None:
            lines.append("lambda (pipeline): " + format(result.report.lam, ".12f"))
        if result.lambda_error is not None:
            lines.append("lambda error: " + format(result.lambda_error, ".3e"))
            lines.append("eigenvector angle: " + format(result.eigenvector_angle, ".3e"))
            lines.append(
                "max matrix residual: " + format(max(result.matrix_residuals, default=0.0), ".3e")
            )
        lines.append("consistent: " + ("yes" if result.consistent else "no"))
        output.save_text("\n".join(lines), "family.txt")
    return 0 if result.consistent else 1


def _parse_vector(parser, parse, text: str, n: int):
    try:
        return parse(text, n)
    except ValueError as e:
        parser.error("malformed vector: " + str(e))


def _format_dynnikov(dc) -> str:
    return "(" + VectorParser.format_block(dc.a) + "; " + VectorParser.format_block(dc.b) + ")"


def _format_triangle(tc) -> str:
    return "(" + VectorParser.format_block(tc.alpha) + "; " + VectorParser.format_block(tc.beta) + ")"


def _format_counts(counts) -> str:
    lines = [
        "left end loops: " + str(counts.left_end_loops),
        "right end loops: " + str(counts.right_end_loops),
        "region  above  below  loops  side",
    ]
    for r in counts.regions:
        lines.append(
            "S" + str(r.region).ljust(6)
            + str(r.above).rjust(5)
            + str(r.below).rjust(7)
            + str(abs(r.loops)).rjust(7)
            + "  "
            + r.loop_side
        )
    return "\n".join(lines)


def _format_report(report: PAReport) -> str:
    lines = ["word: " + str(report.word) + " (n=" + str(report.word.n) + ")", "status: " + str(report.status)]
    if report.lam is not None:
        lines.append("lambda: " + format(report.lam, ".12f"))
        lines.append("entropy: " + format(report.entropy, ".12f"))
        lines.append("eigenvector: " + _format_dynnikov(report.eigenvector))
        lines.append("arc measures: " + _format_triangle(report.arc_measures))
        lines.append("matrices: " + str(len(report.matrices)))
        for m in report.matrices:
            lines.append("  det " + str(m.det))
            for row in m.matrix:
                lines.append("    " + " ".join(str(c).rjust(3) for c in row))
        if report.diagnostics.get("tie_cap_exceeded"):
            lines.append("warning: tie enumeration capped, matrix list may be partial")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_values(sys.argv[1:] if argv is None else list(argv)))

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        config = AnalysisParameterBuilder.load_config(args.config)
        params = AnalysisParameterBuilder.build(config).with_overrides(
            seed=args.seed, restarts=getattr(args, "restarts", None)
        )
        output = OutputProviderFactory.build(config)

        if args.command == "coords":
            return run_coords(args, parser, output)
        elif args.command == "act":
            return run_act(args, parser, output)
        elif args.command == "pa":
            return run_pa(args, parser, output, params)
        elif args.command == "entropy":
            return run_entropy(args, parser, output, config)
        else:
            return run_family(args, parser, output, params)
    except DynnikovError as e:
        print("error: " + str(e), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
