"""Command line interface: ``python -m pyequipart <command> ...``.

Exit codes: 0 when the result is converged or verified, 1 on usage or input
errors, 2 when a solver honestly gave up (the diagnostics are still printed).
"""

import argparse
import sys

import numpy as np

import pyequipart
import pyequipart.config
from pyequipart.charclass import format_report, obstruction_report
from pyequipart.common.equipart_io import (
    dumps,
    flat_from_json,
    hyperplane_from_json,
    load_json,
    measure_from_dict,
    points_from_json,
)
from pyequipart.curve import curve_hyperplane_intersections, trace, trigonometric_curve
from pyequipart.graycode import canonical_balanced_cycle, classify_balanced, enumerate_cycles, reversal_swap_check
from pyequipart.solver import (
    partition_point_cloud,
    solve_2d,
    solve_3d,
    solve_4d_center,
    solve_4d_mirror3,
    solve_4d_symmetric,
)

EXIT_OK, EXIT_INPUT, EXIT_GAVE_UP = 0, 1, 2


class CommandError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise CommandError(message)


def _common():
    p = _Parser(add_help=False)
    p.add_argument("--seed", type=int, default=0, help="seed of the random samples and symmetry checks (default 0)")
    p.add_argument("--workers", type=int, default=None, help="number of worker threads (default: all cores)")
    p.add_argument("--tol", type=float, default=None, help="target residual of the solvers")
    p.add_argument("--output", "-o", default=None, help="output file (default: standard output)")
    p.add_argument("--format", choices=("json", "svg", "text"), default=None, help="output format")
    p.add_argument("--verbose", "-v", action="store_true", help="print solver progress")
    return p


def build_parser():
    common = _common()
    parser = _Parser(prog="pyequipart", description="Equipartitions of measures by hyperplanes.")
    parser.add_argument("--version", action="version", version=pyequipart.__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("solve2d", parents=[common], help="two lines quartering a planar measure")
    p.add_argument("input", help="measure JSON (file or inline)")

    p = sub.add_parser("solve3d", parents=[common], help="three planes cutting a measure of R^3 in eight")
    p.add_argument("input", help="measure JSON (file or inline)")
    p.add_argument("--through", nargs="+", default=None, metavar="POINT", help="one or two JSON points on the first plane")

    p = sub.add_parser("solve4d", parents=[common], help="four hyperplanes for a symmetric measure of R^4")
    p.add_argument("input", help="measure JSON (file or inline)")
    p.add_argument("--symmetry", choices=("plane", "center", "mirror3"), required=True)
    p.add_argument(
        "--subspace",
        default=None,
        help='plane: {"point", "directions"}; center: a JSON point; mirror3: {"a", "c"}',
    )
    p.add_argument("--normal", default=None, help="center: JSON normal of the prescribed hyperplane")

    p = sub.add_parser("cloud", parents=[common], help="four hyperplanes with few points in every open orthant")
    p.add_argument("input", help="JSON list of 16*d points of R^4, or a points measure")
    p.add_argument("--d", type=int, required=True, help="points per orthant")
    p.add_argument("--plane", default=None, help='2-plane of symmetry {"point", "directions"}')
    p.add_argument("--rounds", type=int, default=8, help="maximal number of width halvings")

    p = sub.add_parser("graycode", parents=[common], help="Gray cycles of the n-cube")
    p.add_argument("action", choices=("enumerate", "classify", "reversal"))
    p.add_argument("--n", type=int, default=4)

    p = sub.add_parser("curve", parents=[common], help="equipartitions of the trigonometric curve")
    p.add_argument("action", choices=("trace", "check"))
    p.add_argument("--phases", type=int, default=8, help="trace: number of phases in [0, pi/8)")
    p.add_argument("--samples", type=int, default=10000, help="check: number of random hyperplanes")

    sub.add_parser("swcheck", parents=[common], help="mod 2 characteristic classes of the obstruction")
    return parser


def _target(args, default):
    return default if args.tol is None else args.tol


def _report_exit(ok):
    return EXIT_OK if ok else EXIT_GAVE_UP


def cmd_solve2d(args):
    measure = measure_from_dict(load_json(args.input))
    report = solve_2d(measure, target=_target(args, 1e-8))
    if args.format == "svg":
        from pyequipart.plotting import solution_svg

        return solution_svg(measure, report.config), _report_exit(report.converged)
    return report.to_dict(), _report_exit(report.converged)


def cmd_solve3d(args):
    measure = measure_from_dict(load_json(args.input))
    through = [np.asarray(load_json(p), dtype="float64") for p in (args.through or [])]
    if len(through) > 2:
        raise CommandError("--through takes at most two points.")
    report = solve_3d(measure, *through, target=_target(args, 1e-6))
    return report.to_dict(), _report_exit(report.converged)


def cmd_solve4d(args):
    measure = measure_from_dict(load_json(args.input))
    target = _target(args, 1e-6)
    subspace = None if args.subspace is None else load_json(args.subspace)
    if args.symmetry == "plane":
        plane = None if subspace is None else flat_from_json(subspace)
        report = solve_4d_symmetric(measure, plane, target=target, seed=args.seed)
    elif args.symmetry == "center":
        if isinstance(subspace, dict):
            subspace = subspace.get("point")
        normal = None if args.normal is None else load_json(args.normal)
        report = solve_4d_center(measure, subspace, normal, target=target, seed=args.seed)
    else:
        if subspace is None:
            raise CommandError("--symmetry mirror3 needs --subspace {\"a\": [...], \"c\": ...}.")
        report = solve_4d_mirror3(measure, hyperplane_from_json(subspace), target=target, seed=args.seed)
    return report.to_dict(), _report_exit(report.converged)


def cmd_cloud(args):
    points = points_from_json(load_json(args.input))
    plane = None if args.plane is None else flat_from_json(load_json(args.plane))
    report = partition_point_cloud(
        points, args.d, plane, target=_target(args, 1e-6), rounds=args.rounds, seed=args.seed
    )
    return report.to_dict(), _report_exit(report.certified)


def cmd_graycode(args):
    if args.action == "enumerate":
        cycles = enumerate_cycles(args.n)
        if args.format == "text":
            return "\n".join(" ".join(c.strings()) for c in cycles) + "\n", EXIT_OK
        return {"n": args.n, "cycles": [c.to_dict() for c in cycles]}, EXIT_OK
    if args.action == "classify":
        result = classify_balanced(args.n)
        # text unless asked otherwise
        if args.format in (None, "text"):
            k = len(result["classes"])
            lines = ["{} equivalence class{}".format(k, "" if k == 1 else "es")]
            lines += ["{}: {}".format(name, count) for (name, count) in result["subgroup_classes"].items()]
            return "\n".join(lines) + "\n", EXIT_OK
        result = dict(result, classes=[c.to_dict() for c in result["classes"]])
        return result, EXIT_OK
    cycle = canonical_balanced_cycle(args.n)
    check = reversal_swap_check(cycle)
    out = {
        "cycle": cycle.to_dict(),
        "holds": check.holds,
        "pairs": [[i + 1, j + 1] for (i, j) in check.pairs],
        "shifts": list(check.shifts),
    }
    return out, _report_exit(check.holds)


def cmd_curve(args):
    if args.action == "trace":
        if args.phases < 1:
            raise CommandError("--phases should be positive.")
        solutions = trace(args.phases)
        if args.format == "svg":
            from pyequipart.plotting import division_diagram

            return division_diagram(solutions), EXIT_OK
        return {"phases": args.phases, "solutions": [s.to_dict() for s in solutions]}, EXIT_OK
    rng = np.random.default_rng(args.seed)
    U = rng.standard_normal((args.samples, 5))
    U /= np.linalg.norm(U, axis=1, keepdims=True)
    curve = trigonometric_curve()
    counts = np.array([len(curve_hyperplane_intersections(curve, u)) for u in U])
    out = {
        "seed": args.seed,
        "samples": args.samples,
        "max_intersections": int(counts.max()),
        "violations": int(np.sum(counts > 4)),
    }
    return out, _report_exit(out["violations"] == 0)


def cmd_swcheck(args):
    report = obstruction_report()
    values = [r["value"] for r in report.values()]
    ok = values == [1, 1]
    if args.format == "json":
        out = {
            surface: {k: (v if isinstance(v, int) else str(v)) for (k, v) in r.items()}
            for (surface, r) in report.items()
        }
        out["result"] = values
        return out, _report_exit(ok)
    return format_report(report), _report_exit(ok)


COMMANDS = {
    "solve2d": cmd_solve2d,
    "solve3d": cmd_solve3d,
    "solve4d": cmd_solve4d,
    "cloud": cmd_cloud,
    "graycode": cmd_graycode,
    "curve": cmd_curve,
    "swcheck": cmd_swcheck,
}


def _write(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)


def main(argv=None):
    """Run one command and return its exit code."""
    try:
        args = build_parser().parse_args(argv)
        if args.format == "svg" and not (
            args.command == "solve2d" or (args.command == "curve" and args.action == "trace")
        ):
            raise CommandError("SVG output exists for solve2d and curve trace only.")
        if args.workers is not None:
            pyequipart.config.n_jobs = max(1, args.workers)
        if args.verbose:
            pyequipart.config.verbose = True
        out, code = COMMANDS[args.command](args)
    except (ValueError, TypeError, OSError) as e:
        sys.stderr.write("[pyequipart]: error: {}\n".format(e))
        return EXIT_INPUT
    _write(out if isinstance(out, str) else dumps(out), args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
