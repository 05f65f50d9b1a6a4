"""Command line interface: density tables, curves and the real-parameter optimum.

Exit codes: 0 success, 2 usage error, 3 domain or validation error.
"""

import argparse
import json
import math
import sys

from . import packing2d
from .balls import check_admissibility, horo_param_through
from .lorentz import GeometryError
from .optimize import find_p_opt
from .orthoscheme import build_scheme, realize, volume_3d
from .packing3d import family_table, optimize_family_36

EXIT_DOMAIN = 3
TABLE_HEADER = ("p", "vol_F", "vol_pieces", "delta", "realizable")


def fmt(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    return "{:.12g}".format(x)


def write_csv(out, header, rows):
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(fmt(v) for v in row) + "\n")


def parse_family(text):
    try:
        q, r = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("family must look like 'q,r', got {!r}".format(text))
    return q, r


def parse_p_list(text):
    """``7,8,9`` or an inclusive integer range ``5..9``."""
    try:
        if ".." in text:
            lo, hi = (int(v) for v in text.split(".."))
            return [float(p) for p in range(lo, hi + 1)]
        return [float(v) for v in text.split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError("bad p list {!r}".format(text))


def frange(start, stop, step):
    if step <= 0:
        raise GeometryError("step must be positive")
    if stop < start:
        return []
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(n)]


def cmd_table(args, out):
    rows = []
    for res in sorted(family_table(args.family, args.p), key=lambda r: r.p):
        rows.append((res.p, res.vol_F, res.vol_pieces, res.delta, res.realizable_tiling))
    write_csv(out, TABLE_HEADER, rows)


CURVES = {
    "2d-type1": ("a", packing2d.density_type1),
    "2d-type2": ("a", packing2d.density_type2),
    "2d-horo": ("a", packing2d.density_horocycle_only),
    "3d-36": ("p", lambda p: optimize_family_36(p).delta),
}


def cmd_curve(args, out):
    xs = frange(args.start, args.stop, args.step)
    if args.kind == "2d-surface":
        rows = []
        for a in xs:
            hi = packing2d.type1_y(a)
            lo = packing2d.type2_y(a) if a <= packing2d.SQRT1_2 else 0.0
            for k in range(args.y_steps + 1):
                y = lo + (hi - lo) * k / args.y_steps
                rows.append((a, y, packing2d.density_general(a, y)))
        write_csv(out, ("a", "y", "delta"), rows)
        return
    name, f = CURVES[args.kind]
    write_csv(out, (name, "delta"), [(x, f(x)) for x in xs])


def cmd_popt(args, out):
    res = find_p_opt()
    out.write(json.dumps(res.as_dict()) + "\n")


def cmd_validate(args, out):
    F = realize(build_scheme(args.p, args.q, args.r))
    s = horo_param_through(F.A1) if args.s is None else args.s
    h = F.max_height if args.h is None else args.h
    rep = check_admissibility(F, s, h)
    out.write(json.dumps(dict(rep.as_dict(), s=s, h=h)) + "\n")


def cmd_volume(args, out):
    vol = volume_3d(build_scheme(args.p, args.q, args.r))
    out.write(json.dumps({"p": args.p, "q": args.q, "r": args.r, "volume": vol}) + "\n")


def cmd_montecarlo(args, out):
    from .balls import horoball_piece_volume, hyperball_piece_volume
    from .montecarlo import mc_volume

    F = realize(build_scheme(args.p, args.q, args.r))
    s = horo_param_through(F.A1) if args.s is None else args.s
    h = F.max_height if args.h is None else args.h
    exact = {
        "domain": F.volume,
        "horoball": horoball_piece_volume(F, s),
        "hyperball": hyperball_piece_volume(F.base_area, h, 3),
    }
    result = {}
    for region, value in exact.items():
        est = mc_volume(F, region, s=s, h=h, samples=args.samples, seed=args.seed)
        result[region] = {"exact": value, "estimate": float(est.value),
                          "stderr": float(est.stderr), "within_3se": bool(est.agrees(value))}
    out.write(json.dumps(result) + "\n")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hyphor", description="Densities of horoball + hyperball packings in H^2 and H^3.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="optimal densities of one [p, q, r] family as CSV")
    p.add_argument("--family", type=parse_family, required=True, help="q,r: 4,4 | 6,3 | 3,6")
    p.add_argument("--p", type=parse_p_list, required=True, help="comma list or lo..hi")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("curve", help="sampled density curve as CSV")
    p.add_argument("--kind", required=True, choices=sorted(list(CURVES) + ["2d-surface"]))
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--y-steps", type=int, default=20, help="y samples per a (2d-surface)")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("popt", help="optimal real p of the [p, 3, 6] family as JSON")
    p.set_defaults(func=cmd_popt)

    for name, func, helptext in (("validate", cmd_validate, "admissibility report as JSON"),
                                 ("montecarlo", cmd_montecarlo, "Monte-Carlo volume check")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--p", type=float, required=True)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--s", type=float, help="horoball parameter (default: through A1)")
        p.add_argument("--h", type=float, help="hyperball height (default: through A2)")
        if name == "montecarlo":
            p.add_argument("--seed", type=int, required=True)
            p.add_argument("--samples", type=int, default=10_000_000)
        p.set_defaults(func=func)

    p = sub.add_parser("volume", help="volume of the frustum [p, q, r] as JSON")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_volume)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except (GeometryError, ValueError) as exc:
        print("error: {}".format(exc), file=sys.stderr)
        return EXIT_DOMAIN
    return 0


if __name__ == "__main__":
    sys.exit(main())
