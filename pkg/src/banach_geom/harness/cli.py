"""
Command-line entry point.

Every command prints one canonical JSON document on stdout (and to
--json-out when given). Exit status: 0 when the verdict holds, 1 when it
fails, 2 when it is inconclusive or the input is rejected.
"""

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Any, List, Optional

from pydantic import ValidationError

from ..geometry.daugavet import anti_daugavet_probe, spectrum_report
from ..geometry.farthest import density_experiment, far_set, farthest_points, hull_equality_check
from ..geometry.properties import cset_convergence, dset_convergence, sequence_probe, verify_certificate
from ..models.reports.probe_config import ProbeConfig
from ..utils.geom_errors import GeomError, GeomInvalidParameterError
from ..utils.json_utils import canonical_json, load_json, write_json
from .catalogue import SpaceCatalogue
from .repro import repro_linf_counterexample
from .suite import run_check, run_suite

logger = logging.getLogger(__name__)

EXIT_INPUT_ERROR = 2


def parse_rows(text: str) -> List[List[float]]:
    """
    Rows from "a,b;c,d", a JSON array of arrays, or @path to a JSON file.

    Examples:
        >>> parse_rows("0,1;0,0")
        [[0.0, 1.0], [0.0, 0.0]]
    """
    text = text.strip()
    if text.startswith("@"):
        data = load_json(text[1:])
    elif text.startswith("["):
        data = json.loads(text)
    else:
        try:
            data = [[float(v) for v in row.split(",")] for row in text.split(";") if row.strip()]
        except ValueError as e:
            raise GeomInvalidParameterError(f"cannot parse rows from {text!r}", error_code="PARAM") from e
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        raise GeomInvalidParameterError("expected a list of coordinate lists", error_code="PARAM")
    return [[float(v) for v in row] for row in data]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="banach-geom", description="Finite-dimensional Banach space geometry lab")
    parser.add_argument("--seed", type=int, help="Master seed (default: $BANACH_GEOM_SEED, then 0)")
    parser.add_argument("--samples", type=int, help="Sample count for sampled checks and density queries")
    parser.add_argument("--tol", type=float, help="Numerical tolerance")
    parser.add_argument("--json-out", type=Path, help="Also write the JSON report to this path")
    parser.add_argument("--catalogue", type=Path, help="JSON file of extra {label: descriptor} spaces")
    parser.add_argument("--log-level", default="WARNING", help="Logging level on stderr")
    parser.add_argument("--timing", action="store_true", help="Print elapsed time on stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    space = commands.add_parser("space", help="Describe a catalogue space")
    space.add_argument("action", choices=["info", "list"])
    space.add_argument("label", nargs="?")

    check = commands.add_parser("check", help="Check one property of a space")
    check.add_argument("label")
    check.add_argument("property")
    check.add_argument("--verify", type=Path, help="Re-verify a certificate (or a verdict) from this JSON file")

    converge = commands.add_parser("converge", help="D-set or C-set convergence at a sphere point")
    converge.add_argument("label")
    converge.add_argument("--point", type=float, nargs="+", required=True)
    converge.add_argument("--region", choices=["d", "c"], default="d")
    converge.add_argument("--generator", help="Also run a sequence probe with this generator")
    converge.add_argument("--anchor", type=float, nargs="+", help="Anchor point of the constant generator")

    daugavet = commands.add_parser("daugavet", help="Spectrum report of an operator, or the anti-Daugavet probe")
    daugavet.add_argument("label")
    daugavet.add_argument("--matrix", help='Operator rows, e.g. "0,1;0,0"')
    daugavet.add_argument("--probe", action="store_true", help="Run the anti-Daugavet probe instead")

    farthest = commands.add_parser("farthest", help="Farthest points of a finite set")
    farthest.add_argument("label")
    farthest.add_argument("--points", required=True, help='Points of K, e.g. "1,1;-1,-1"')
    farthest.add_argument("--query", type=float, nargs="+", help="Query point for F_K(x)")
    farthest.add_argument("--far-set", action="store_true", help="Report Far K")
    farthest.add_argument("--density", action="store_true", help="Run the uniqueness density experiment")
    farthest.add_argument("--hull", action="store_true", help="Compare hull vertices with Far K")

    repro = commands.add_parser("repro", help="Golden reproductions")
    repro.add_argument("name", choices=["example-5-5", "linf-hlur"], help="linf-hlur is an alias of example-5-5")
    repro.add_argument("--epsilon", type=float, default=0.0, help="Perturb x_n to (epsilon, 1); disables the assertion")

    commands.add_parser("suite", help="Run every checker on every space with cross-checks")
    return parser


def _emit(args: argparse.Namespace, payload: Any) -> None:
    sys.stdout.write(canonical_json(payload))
    if args.json_out is not None:
        write_json(args.json_out, payload)


def _config(args: argparse.Namespace) -> ProbeConfig:
    return ProbeConfig().with_overrides(seed=args.seed, samples=args.samples, tol=args.tol)


def _dispatch(args: argparse.Namespace) -> int:
    catalogue = SpaceCatalogue()
    if args.catalogue is not None:
        catalogue.load_json(args.catalogue)
    cfg = _config(args)

    if args.command == "space":
        if args.action == "list":
            _emit(args, {"labels": catalogue.labels, "errors": [e.model_dump() for e in catalogue.errors]})
            return 0
        if args.label is None:
            raise GeomInvalidParameterError("space info needs a label", error_code="PARAM")
        _emit(args, catalogue.get(args.label).describe())
        return 0

    if args.command == "check":
        if args.verify is not None:
            data = load_json(args.verify)
            certificate = data.get("certificate", data) if isinstance(data, dict) else data
            verdict = verify_certificate(catalogue.get(args.label), args.property, certificate, cfg)
        else:
            verdict = run_check(catalogue, args.label, args.property, cfg)
        _emit(args, verdict)
        return verdict.exit_code

    if args.command == "converge":
        space = catalogue.get(args.label)
        check = dset_convergence if args.region == "d" else cset_convergence
        verdict = check(space, args.point, cfg)
        if args.generator is None:
            _emit(args, verdict)
        else:
            report = sequence_probe(space, args.point, args.generator, cfg, anchor=args.anchor)
            _emit(args, {"verdict": verdict, "probe": report})
        return verdict.exit_code

    if args.command == "daugavet":
        space = catalogue.get(args.label)
        if args.probe:
            verdict = anti_daugavet_probe(space, cfg)
            _emit(args, verdict)
            return verdict.exit_code
        if args.matrix is None:
            raise GeomInvalidParameterError("daugavet needs --matrix or --probe", error_code="PARAM")
        _emit(args, spectrum_report(space, parse_rows(args.matrix), cfg))
        return 0

    if args.command == "farthest":
        space = catalogue.get(args.label)
        points = parse_rows(args.points)
        if args.hull:
            verdict = hull_equality_check(space, points, cfg)
            _emit(args, verdict)
            return verdict.exit_code
        if args.density:
            _emit(args, density_experiment(space, points, cfg))
            return 0
        if args.far_set:
            _emit(args, far_set(space, points, cfg.region_samples, cfg.uniqueness_tol, cfg.effective_seed))
            return 0
        if args.query is None:
            raise GeomInvalidParameterError("farthest needs --query, --far-set, --density or --hull", error_code="PARAM")
        _emit(args, farthest_points(space, args.query, points, cfg.uniqueness_tol))
        return 0

    if args.command == "repro":
        _emit(args, repro_linf_counterexample(catalogue, epsilon=args.epsilon))
        return 0

    report = run_suite(catalogue, cfg)
    _emit(args, report)
    return 0 if report.passed else 1


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    started = time.perf_counter()
    try:
        code = _dispatch(args)
    except GeomError as e:
        print(f"error: {e}", file=sys.stderr)
        code = EXIT_INPUT_ERROR
    except (ValidationError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        code = EXIT_INPUT_ERROR
    if args.timing:
        print(f"elapsed: {time.perf_counter() - started:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
