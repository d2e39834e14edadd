"""Command-line front end.

Exit codes: 0 success, 1 invalid arguments or input files, 2 computation
failure. Results go to stdout, messages to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import ROUND_HALF_EVEN, Decimal

import numpy as np

from . import density as dens
from . import polytope as poly
from .errors import (DegenerateInput, DensityError, NonConvex,
                     PolytopeFormatError, UnknownName, Unsupported)
from .expint import LinearForm, polytope_exp_integral

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("%s: error: %s" % (self.prog, message))


def round4(x: float) -> str:
    """Four decimals, round-half-to-even on the exact binary value."""
    return str(Decimal(x).quantize(Decimal("0.0001"), rounding=ROUND_HALF_EVEN))


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _scan_targets():
    pent, trap = poly.builtin("pentagon"), poly.builtin("trapezium")
    return {
        "F-pentagon": lambda c: polytope_exp_integral(pent, LinearForm([-c, -c])),
        "F-trapezium": lambda c: polytope_exp_integral(trap, LinearForm([-c, -c])),
        "calabi-f": dens.CLBW_PROFILE.rational,
        "calabi-h": dens.PAGE_PROFILE.rational,
    }


SCAN_TARGETS = ("F-pentagon", "F-trapezium", "calabi-f", "calabi-h")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ricci-density",
                description="Gaussian densities of Einstein metrics and toric "
                            "Kahler-Ricci solitons on complex surfaces.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true",
                        help="emit the full report as JSON")
        return sp

    add("table", "reproduce the four-metric density table")

    sp = add("einstein", "density of a positive Einstein metric")
    sp.add_argument("--scalar-curvature", type=float, required=True, metavar="R")
    sp.add_argument("--volume", type=float, required=True, metavar="V")
    sp.add_argument("--dim", type=float, required=True, metavar="N",
                    help="real dimension")

    sp = add("conformal", "density of a conformally Kahler Einstein metric")
    sp.add_argument("--chi", type=int, required=True, help="Euler characteristic")
    sp.add_argument("--sigma", type=int, required=True, help="signature")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--calabi-profile", choices=sorted(dens.CALABI_PROFILES))
    g.add_argument("--c-min", type=float, help="extremal Calabi energy")

    sp = add("soliton", "density of a toric Kahler-Ricci soliton")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--polytope", choices=poly.BUILTIN_NAMES)
    g.add_argument("--polytope-file", metavar="PATH")
    sp.add_argument("--dim-complex", type=int, default=2, metavar="N")
    sp.add_argument("--tol", type=float, default=dens.DEFAULT_TOL)
    sp.add_argument("--no-symmetry-reduce", action="store_true")

    sp = add("scan", "tabulate F(c) or a Calabi profile as CSV")
    sp.add_argument("--target", choices=SCAN_TARGETS, required=True)
    sp.add_argument("--from", dest="start", type=float, required=True)
    sp.add_argument("--to", dest="stop", type=float, required=True)
    sp.add_argument("--steps", type=int, required=True)
    return p


def _cmd_table(args, out):
    rows = dens.paper_table()
    if args.json:
        out.write(_dump([r.report.to_dict() for r in rows]) + "\n")
        return
    header = ("Manifold", "Metric Name", "Type", "Gaussian Density")
    table = [header] + [(r.manifold, r.metric_name, r.metric_type,
                         round4(r.report.theta)) for r in rows]
    widths = [max(len(row[k]) for row in table) for k in range(4)]
    for row in table:
        out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def _print_report(rep, out, keys=None):
    out.write("%s\n" % rep.metric_label)
    for k, v in rep.intermediates.items():
        if keys is None or k in keys:
            out.write("  %-24s %.10g\n" % (k, v))
    out.write("  %-24s %.10g\n" % ("nu", rep.nu))
    out.write("  %-24s %.10g  (%s)\n" % ("Theta", rep.theta, round4(rep.theta)))


def _cmd_einstein(args, out):
    rep = dens.einstein_density(args.scalar_curvature, args.volume, args.dim)
    if args.json:
        out.write(_dump(rep.to_dict()) + "\n")
    else:
        _print_report(rep, out)


def _cmd_conformal(args, out):
    topo = dens.TopologyInvariants(args.chi, args.sigma)
    if args.calabi_profile:
        prof = dens.CALABI_PROFILES[args.calabi_profile]
        rep = dens.conformal_profile_density(topo, prof, prof.name)
    else:
        rep = dens.conformal_density(topo, args.c_min)
    if args.json:
        out.write(_dump(rep.to_dict()) + "\n")
    else:
        _print_report(rep, out)


def _cmd_soliton(args, out):
    if args.polytope:
        p, name = poly.builtin(args.polytope), args.polytope
    else:
        try:
            p = poly.load_polytope_json(args.polytope_file)
        except OSError as exc:
            raise UsageError("cannot read %s: %s" % (args.polytope_file, exc.strerror))
        name = None
    if p.dimension != args.dim_complex:
        raise UsageError("polytope dimension %d does not match --dim-complex %d"
                         % (p.dimension, args.dim_complex))
    # symmetry reduction only for the symmetric built-ins
    reduce = name in ("pentagon", "trapezium") and not args.no_symmetry_reduce
    prob = dens.SolitonProblem(p, args.dim_complex, reduce, name)
    rep = dens.soliton_density(prob, args.tol)
    if args.json:
        out.write(_dump(rep.to_dict()) + "\n")
        return
    _print_report(rep, out)
    if name in ("pentagon", "trapezium") and reduce:
        c = rep.intermediates["soliton_constant_1"]
        out.write(dens.closed_form_diagnostic(name, c).describe() + "\n")


def _cmd_scan(args, out):
    if args.steps < 1:
        raise UsageError("--steps must be at least 1")
    fn = _scan_targets()[args.target]
    xs = np.linspace(args.start, args.stop, args.steps + 1)
    rows = [(float(x), float(fn(float(x)))) for x in xs]
    if args.json:
        out.write(_dump([{"x": x, "value": v} for x, v in rows]) + "\n")
        return
    out.write("x,value\n")
    for x, v in rows:
        out.write("%r,%r\n" % (x, v))


COMMANDS = {
    "table": _cmd_table,
    "einstein": _cmd_einstein,
    "conformal": _cmd_conformal,
    "soliton": _cmd_soliton,
    "scan": _cmd_scan,
}


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write("%s\n" % exc)
        return EXIT_USAGE
    except (PolytopeFormatError, UnknownName, DegenerateInput, NonConvex,
            Unsupported) as exc:
        err.write("error: %s\n" % exc)
        return EXIT_USAGE
    except (DensityError, ArithmeticError, ValueError) as exc:
        err.write("computation failed: %s\n" % exc)
        return EXIT_COMPUTE
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
