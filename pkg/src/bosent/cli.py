"""Command-line interface.

Exit codes: 0 success, 2 input validation error, 3 solver failure,
64 usage error (unknown flags or malformed invocations).
"""

from __future__ import annotations

import argparse
import csv
import sys
from io import StringIO

import numpy as np

from .blocks import BLOCK_DIAG_TOL
from .entanglement import analyze
from .fock import Bipartition, DEFAULT_DIM_CAP, enumerate_basis
from .geometry import bipartition_sweep, border_probe, werner_scan
from .io import dumps, parse_state, parse_unitary, state_to_json_dict
from .linalg import ValidationError
from .modes import ModeUnitary, balanced_beamsplitter, transform_pure, transform_state
from .robustness import (
    SolverFailure,
    robustness_generalized,
    robustness_standard,
    robustness_superselection,
)
from .selfcheck import run_selfcheck
from .states import (
    DensityMatrix,
    PureState,
    SectoredState,
    maximally_entangled,
    negative_coherence_state,
    phase_state,
    to_density,
    totally_mixed,
    werner_like,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_SOLVER = 3
EXIT_USAGE = 64

PRESETS = ("totally-mixed", "phase", "example-3-20", "max-ent", "werner")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _basis_args(sub):
    sub.add_argument("--n", type=int, required=True, help="particle count N")
    sub.add_argument("--modes", type=int, required=True, help="mode count M")
    sub.add_argument("--bipartition", type=int, required=True, help="modes m in the first side")


def build_parser() -> _Parser:
    parser = _Parser(prog="bosent", description=__doc__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("basis", help="enumerate a Fock basis")
    _basis_args(p)
    p.add_argument("--cap", type=int, default=DEFAULT_DIM_CAP)

    p = sub.add_parser("state", help="emit a preset state file")
    p.add_argument("preset", choices=PRESETS)
    _basis_args(p)
    p.add_argument("--p", type=float, default=None, help="werner mixing parameter")
    p.add_argument("--phases", type=str, default=None, help="comma-separated phases for 'phase'")
    p.add_argument("--out", type=str, default=None, help="write to a file instead of stdout")

    p = sub.add_parser("analyze", help="negativity, verdict and reduced-state report")
    p.add_argument("state", type=str)
    p.add_argument("--cap", type=int, default=DEFAULT_DIM_CAP)
    p.add_argument("--tol", type=float, default=BLOCK_DIAG_TOL)

    p = sub.add_parser("robustness", help="robustness report for a state or mixture")
    p.add_argument("state", type=str)
    p.add_argument("--generalized", action="store_true")
    p.add_argument("--bounds", action="store_true", help="include the upper bounds")
    p.add_argument("--emit-witness", action="store_true")
    p.add_argument("--tol", type=float, default=BLOCK_DIAG_TOL)
    p.add_argument("--cap", type=int, default=DEFAULT_DIM_CAP)

    p = sub.add_parser("transform", help="apply a passive mode transformation")
    p.add_argument("state", type=str)
    p.add_argument("--beamsplitter", action="store_true")
    p.add_argument("--unitary", type=str, default=None, help="path to a mode-unitary JSON file")
    p.add_argument("--out", type=str, default=None)
    p.add_argument("--cap", type=int, default=DEFAULT_DIM_CAP)

    p = sub.add_parser("scan", help="werner-family scan on a two-mode basis")
    p.add_argument("family", choices=("werner",))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--steps", type=int, default=11)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("probe", help="border probe around a separable anchor")
    p.add_argument("kind", choices=("border",))
    p.add_argument("separable", type=str)
    p.add_argument("entangled", type=str)
    p.add_argument("--eps", type=str, default=None, help="comma-separated strengths")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--cap", type=int, default=DEFAULT_DIM_CAP)

    p = sub.add_parser("sweep", help="separability across sampled bipartitions")
    p.add_argument("state", type=str)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--cap", type=int, default=DEFAULT_DIM_CAP)

    sub.add_parser("selfcheck", help="run the golden value suite")
    return parser


def _csv_lines(header, rows) -> str:
    buf = StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _parse_float_list(text: str, flag: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",")]
    except ValueError as err:
        raise ValidationError(f"unparsable {flag} list: {err}") from err


def _cmd_basis(args) -> int:
    basis = enumerate_basis(Bipartition(N=args.n, M=args.modes, m=args.bipartition), cap=args.cap)
    print(dumps(basis.to_json_dict()))
    return EXIT_OK


def _cmd_state(args) -> int:
    basis = enumerate_basis(Bipartition(N=args.n, M=args.modes, m=args.bipartition))
    if args.preset == "totally-mixed":
        state = totally_mixed(basis)
    elif args.preset == "phase":
        phases = None
        if args.phases is not None:
            phases = np.array(_parse_float_list(args.phases, "--phases"))
        state = phase_state(basis, phases)
    elif args.preset == "example-3-20":
        state = negative_coherence_state(basis)
    elif args.preset == "max-ent":
        state = maximally_entangled(basis)
    else:  # werner
        if args.p is None:
            raise ValidationError("the werner preset needs --p")
        state = werner_like(basis, args.p, maximally_entangled(basis))
    text = dumps(state_to_json_dict(state))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _as_density(state) -> DensityMatrix:
    if isinstance(state, PureState):
        return to_density(state)
    if isinstance(state, DensityMatrix):
        return state
    raise ValidationError("this command needs a single fixed-N state, not a sector mixture")


def _cmd_analyze(args) -> int:
    rho = _as_density(parse_state(args.state, cap=args.cap))
    print(dumps(analyze(rho)))
    return EXIT_OK


def _cmd_robustness(args) -> int:
    state = parse_state(args.state, cap=args.cap)
    kind = "generalized" if args.generalized else "standard"
    if isinstance(state, SectoredState):
        report = robustness_superselection(state, kind=kind, tol=args.tol)
    else:
        rho = _as_density(state)
        if kind == "generalized":
            report = robustness_generalized(rho, tol=args.tol, emit_witness=args.emit_witness)
        else:
            report = robustness_standard(rho, tol=args.tol, emit_witness=args.emit_witness)
    payload = report.to_json_dict()
    if not args.bounds and not args.generalized:
        payload.pop("bounds", None)
    print(dumps(payload))
    return EXIT_OK


def _cmd_transform(args) -> int:
    if args.beamsplitter == (args.unitary is not None):
        raise ValidationError("pass exactly one of --beamsplitter or --unitary")
    state = parse_state(args.state, cap=args.cap)
    if args.beamsplitter:
        mode_u = balanced_beamsplitter()
    else:
        mat = parse_unitary(args.unitary)
        mode_u = ModeUnitary(M=mat.shape[0], U=mat)
    if isinstance(state, PureState):
        out = transform_pure(state, mode_u)
    else:
        out = transform_state(_as_density(state), mode_u)
    text = dumps(state_to_json_dict(out))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _cmd_scan(args) -> int:
    basis = enumerate_basis(Bipartition(N=args.n, M=2, m=1))
    grid = np.linspace(0.0, 1.0, args.steps)
    points = werner_scan(basis, grid)
    if args.format == "json":
        print(dumps([{"p": q.p, "negativity": q.negativity, "verdict": q.verdict} for q in points]))
    else:
        print(_csv_lines(["p", "negativity", "verdict"], [(q.p, q.negativity, q.verdict) for q in points]), end="")
    return EXIT_OK


def _cmd_probe(args) -> int:
    rho_sep = _as_density(parse_state(args.separable, cap=args.cap))
    rho_ent = _as_density(parse_state(args.entangled, cap=args.cap))
    if args.eps is not None:
        grid = _parse_float_list(args.eps, "--eps")
    else:
        grid = [10.0 ** (-k) for k in range(1, 9)]
    points = border_probe(rho_sep, rho_ent, grid)
    if args.format == "json":
        print(dumps([{"eps": q.eps, "nb_linf": q.nonblock_linf, "verdict": q.verdict} for q in points]))
    else:
        print(_csv_lines(["eps", "nb_linf", "verdict"], [(q.eps, q.nonblock_linf, q.verdict) for q in points]), end="")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    rho = _as_density(parse_state(args.state, cap=args.cap))
    result = bipartition_sweep(rho, samples=args.samples, seed=args.seed)
    if args.format == "json":
        print(dumps({
            "samples": result.samples,
            "separable": result.separable,
            "entangled": result.entangled,
            "undetermined": result.undetermined,
            "fraction_separable": result.fraction_separable,
        }))
    else:
        print(_csv_lines(
            ["samples", "separable", "entangled", "undetermined", "fraction_separable"],
            [(result.samples, result.separable, result.entangled,
              result.undetermined, result.fraction_separable)],
        ), end="")
    return EXIT_OK


_COMMANDS = {
    "basis": _cmd_basis,
    "state": _cmd_state,
    "analyze": _cmd_analyze,
    "robustness": _cmd_robustness,
    "transform": _cmd_transform,
    "scan": _cmd_scan,
    "probe": _cmd_probe,
    "sweep": _cmd_sweep,
}


def run(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    if args.command == "selfcheck":
        return EXIT_OK if run_selfcheck() == 0 else 1
    try:
        return _COMMANDS[args.command](args)
    except ValidationError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_VALIDATION
    except FileNotFoundError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_VALIDATION
    except SolverFailure as err:
        print(f"solver failure: {err}", file=sys.stderr)
        return EXIT_SOLVER


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
