"""Command-line entry point: ``spinqudit {codes,verify,pulses,simulate,resources}``.

Exit status: 0 on success or PASS, 1 on verification FAIL, 2 on usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from spinqudit import codes, kl, pulses, qec_sim, resources

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def builtin_instances() -> list[codes.CodeFamily]:
    """The codes written out explicitly, plus three generated distance-3 qudits."""
    return [
        codes.build_z_code(3, 1),
        codes.build_z_code(4, 1),
        codes.build_z_code(3, 2),
        codes.build_xyz_code(3, 1),
        codes.build_xyz_code(3, 2),
        codes.build_multiqudit_code(3, 1),
        codes.build_multiqudit_code(3, 2),
        codes.alt_qutrit_distance5(),
        codes.build_z_code(2, 1),
        codes.build_z_code(5, 1),
        codes.build_z_code(6, 1),
    ]


def verify_code(code: codes.CodeFamily, tol: float) -> list[kl.KLReport]:
    """Exact moment check always; the numeric full check for X/Y/Z codes."""
    reports = [kl.verify_z_kl(code)]
    if code.spec.error_model is codes.ErrorModel.XYZ:
        reports.append(kl.verify_full_kl(code, tol=tol))
    return reports


def _write(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _selected_code(args) -> codes.CodeFamily:
    if getattr(args, "code_file", None):
        return codes.loads_code(Path(args.code_file).read_text())
    if getattr(args, "alt", False):
        return codes.alt_qutrit_distance5()
    return codes.get_code(args.d, args.t, args.model, args.qudits)


def cmd_codes(args) -> int:
    code = _selected_code(args)
    if args.print or args.format == "pretty":
        _write(args, codes.format_code(code))
    else:
        _write(args, codes.dumps_code(code))
    return EXIT_OK


def cmd_verify(args) -> int:
    targets = builtin_instances() if args.all else [_selected_code(args)]
    if args.perturb:
        targets = [codes.swap_coefficients(code, 1) for code in targets]
    reports = [rep for code in targets for rep in verify_code(code, args.tol)]
    if args.format == "pretty":
        lines = [f"{rep.verdict}  {rep.mode:7s}  {rep.code}" for rep in reports]
        for rep in reports:
            lines.extend(f"    {v}" for v in rep.violations[:10])
        _write(args, "\n".join(lines))
    else:
        _write(args, json.dumps([rep.to_dict() for rep in reports], indent=2))
    return EXIT_OK if all(rep.passed for rep in reports) else EXIT_FAIL


def cmd_pulses(args) -> int:
    code = _selected_code(args)
    enc, dec = qec_sim.pulse_pair(code)
    payload = {"code": code.name}
    if args.which in ("encoder", "both"):
        payload["encoder"] = enc.to_dict()
    if args.which in ("decoder", "both"):
        payload["decoder"] = dec.to_dict()
    if args.format == "pretty":
        lines = []
        for key in ("encoder", "decoder"):
            if key in payload:
                seq = enc if key == "encoder" else dec
                lines.append(f"{key}: {len(seq)} rotations")
                for step, cos in zip(seq.steps, seq.cosines()):
                    lines.append(f"  ({step.m1}, {step.m2})  cos = {cos}")
        _write(args, "\n".join(lines))
    else:
        _write(args, json.dumps(payload, indent=2))
    return EXIT_OK


def cmd_simulate(args) -> int:
    grid = qec_sim.log_grid(args.grid_min, args.grid_max, args.points)
    if args.figure == "1b":
        rows = qec_sim.fig1b_table(grid, d=args.d)
    else:
        rows = qec_sim.fig3_table(grid, d=args.d)
    if args.format == "json":
        _write(args, json.dumps(rows, indent=2))
    else:
        _write(args, qec_sim.rows_to_csv(rows))
    return EXIT_OK


def cmd_resources(args) -> int:
    rows = resources.emit_comparison(
        range(args.d_min, args.d_max + 1), args.distances, args.physical_per_logical
    )
    if args.format == "json":
        _write(args, json.dumps([r.__dict__ for r in rows], indent=2))
    else:
        _write(args, resources.rows_to_csv(rows))
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--tol", type=float, default=kl.DEFAULT_TOL, help="numeric tolerance")
    common.add_argument("--format", choices=["json", "csv", "pretty"], default=None)

    selector = argparse.ArgumentParser(add_help=False)
    selector.add_argument("--d", type=int, default=3)
    selector.add_argument("--t", type=int, default=1, choices=[1, 2])
    selector.add_argument("--model", choices=["z", "xyz"], default="z")
    selector.add_argument("--qudits", type=int, default=1)
    selector.add_argument("--alt", action="store_true", help="alternative distance-5 qutrit")
    selector.add_argument("--code-file", help="read the code from an exported JSON file")

    parser = argparse.ArgumentParser(prog="spinqudit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("codes", parents=[common, selector], help="build and export a code")
    p.add_argument("--print", action="store_true", help="render in ket notation")
    p.set_defaults(func=cmd_codes)

    p = sub.add_parser("verify", parents=[common, selector], help="check the KL conditions")
    p.add_argument("--all", action="store_true", help="verify every built-in instance")
    p.add_argument("--perturb", choices=["swap-a1-b1"], help="break the code before checking")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pulses", parents=[common, selector], help="synthesize pulse sequences")
    p.add_argument("--which", choices=["encoder", "decoder", "both"], default="both")
    p.set_defaults(func=cmd_pulses)

    p = sub.add_parser("simulate", parents=[common], help="error-cycle sweeps as CSV")
    p.add_argument("--figure", choices=["1b", "3"], default="1b")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--grid-min", type=float, default=1e-4)
    p.add_argument("--grid-max", type=float, default=1e-2)
    p.add_argument("--points", type=int, default=10)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("resources", parents=[common], help="Hilbert-space comparison table")
    p.add_argument("--d-min", type=int, default=2)
    p.add_argument("--d-max", type=int, default=8)
    p.add_argument("--distances", type=_int_list, default=[3, 5])
    p.add_argument("--physical-per-logical", type=int, default=None,
                   help="override the 2*distance^2-1 surface-code qubit count")
    p.set_defaults(func=cmd_resources)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, pulses.SynthesisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
