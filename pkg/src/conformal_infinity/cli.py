"""Command-line front end: figure generators, model conversion and the identity suite.

Exit codes: 0 success, 1 usage or input error, 2 numerical-contract violation.
Projection constants are fixed: light source (2, 0, 0, 0) with screen x1 = 0,
stereographic centre (0, 0, 1, 0).
"""

import argparse
import ast
import operator
import re
import sys
from dataclasses import dataclass, field

import numpy as np

from . import export
from .errors import ConformalError
from .forms import proj_class
from .hermitian import as_unitary
from .lie_sphere import (InfinityGeodesic, InfinityPoint, Plane, Point, Sphere, classify_ray,
                         geodesic_at_infinity, lie_to_ray, plane_fronts)
from .quadric import cone_point_of_unitary, embed_plus, unitary_of_cone_point
from .surfaces import mesh, plane_patches, segal_orbit
from .twistor import plane_of_unitary
from .verify import identity_report


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # Let values such as -20:20, -pi/2 or -1,0,0 follow an option.
        self._negative_number_matcher = re.compile(r"^-(\d|\.\d|pi\b)")

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
        ast.Div: operator.truediv, ast.USub: operator.neg, ast.UAdd: operator.pos}


def parse_number(text):
    """Evaluate a real literal allowing ``pi`` and + - * /, e.g. ``-pi/2``."""
    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id == "pi":
            return np.pi
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.operand))
        raise ValueError
    try:
        return ev(ast.parse(text.strip(), mode="eval"))
    except (ValueError, SyntaxError, ZeroDivisionError):
        raise UsageError(f"not a number: {text!r}") from None


def parse_range(text):
    parts = text.split(":")
    if len(parts) != 2:
        raise UsageError(f"range must look like START:STOP, got {text!r}")
    return tuple(parse_number(p) for p in parts)


def parse_res(text):
    try:
        res = tuple(int(p) for p in text.lower().split("x"))
    except ValueError:
        raise UsageError(f"resolution must look like AxB or AxBxC, got {text!r}") from None
    if min(res) < 2:
        raise UsageError("resolution must be at least 2 per axis")
    return res


def parse_vector(text, n=None):
    vals = [parse_number(p) for p in text.split(",")]
    if n is not None and len(vals) != n:
        raise UsageError(f"expected {n} comma-separated numbers, got {text!r}")
    return np.array(vals)


def parse_complex(text):
    try:
        return complex(text.strip().replace("i", "j").replace(" ", ""))
    except ValueError:
        raise UsageError(f"not a complex number: {text!r}") from None


@dataclass
class JobConfig:
    command: str
    resolution: tuple = ()
    ranges: dict = field(default_factory=dict)
    out: str = "-"
    format: str = "obj"
    seed: int = 0

    def __post_init__(self):
        if self.resolution and min(self.resolution) < 2:
            raise UsageError("resolution must be at least 2 per axis")
        if self.format not in export.FORMATS:
            raise UsageError(f"format must be one of {export.FORMATS}")


def _emit(text, out):
    if out == "-":
        sys.stdout.write(text)
    else:
        export.write_text(text, out)


def _add_output(p, default_res=None):
    if default_res:
        p.add_argument("--res", type=parse_res, default=parse_res(default_res),
                       help=f"grid resolution (default {default_res})")
    p.add_argument("--format", choices=export.FORMATS, default="obj")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")


def build_parser():
    parser = _Parser(prog="conformal-infinity", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("cyclide-doubled", help="doubled conformal infinity (elliptic supercyclide)")
    _add_output(p, "64x64")
    p.add_argument("--psi", type=parse_range, default=(0, 2 * np.pi))
    p.add_argument("--theta", type=parse_range, default=(0, 2 * np.pi))

    for name, help_ in (("cyclide-simple", "simple conformal infinity (needle cyclide)"),
                        ("horned-torus", "symmetric horned-torus picture")):
        p = sub.add_parser(name, help=help_)
        _add_output(p, "64x64")
        p.add_argument("--psi", type=parse_range, default=(0, np.pi))
        p.add_argument("--theta", type=parse_range, default=(0, 2 * np.pi))
        p.add_argument("--no-weld", action="store_true", help="keep the cusp ring unwelded")

    p = sub.add_parser("infinity-r3", help="conformal infinity in R^3 (stereographic)")
    _add_output(p, "32x8x32")
    p.add_argument("--psi", type=parse_range, default=(0, np.pi))
    p.add_argument("--theta", type=parse_range, default=(0, np.pi))
    p.add_argument("--phi", type=parse_range, default=(0, 2 * np.pi))
    p.add_argument("--no-pole-offset", action="store_true",
                   help="sample theta on cell edges (fails if the grid hits the pole)")

    p = sub.add_parser("clifford-torus", help="1+1 Minkowski space on the Clifford torus")
    _add_output(p, "64x64")
    p.add_argument("--x", type=parse_range, default=(-20, 20))
    p.add_argument("--t", type=parse_range, default=(-15, 15))

    p = sub.add_parser("segal-orbits", help="orbits of z1 -> e^{is} z1 on the Clifford torus")
    _add_output(p)
    p.add_argument("--orbits", type=int, default=8)
    p.add_argument("--samples", type=int, default=128)

    p = sub.add_parser("plane-fronts", help="parallel plane fronts of a null geodesic at infinity")
    _add_output(p)
    p.add_argument("--n", type=lambda s: parse_vector(s, 3), default=np.array([1, 0, 1]) / np.sqrt(2))
    p.add_argument("--k", type=parse_range, default=(-9, 9), help="integer range K0:K1 for psi = k pi / D")
    p.add_argument("--denominator", type=int, default=20)
    p.add_argument("--extent", type=float, default=2.0)
    p.add_argument("--patch-res", type=int, default=2)

    p = sub.add_parser("geodesic", help="table of a null geodesic at infinity")
    p.add_argument("--n", type=lambda s: parse_vector(s, 3), default=np.array([0.0, 0.0, 1.0]))
    p.add_argument("--psi", type=parse_range, default=(0, np.pi))
    p.add_argument("--samples", type=int, default=21)
    p.add_argument("--format", default="csv", help="csv only")
    p.add_argument("--out", default="-")

    p = sub.add_parser("convert", help="show a point of M^c in every model")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--cone", help="x1,...,x6 on the null cone of R^(4,2)")
    g.add_argument("--event", help="x,y,z,t Minkowski event")
    g.add_argument("--unitary", help="a,b,c,d entries of a 2x2 unitary (row-major)")
    g.add_argument("--point", help="x,y,z point of R^3")
    g.add_argument("--sphere", help="cx,cy,cz,r oriented sphere")
    g.add_argument("--plane", help="n1,n2,n3,h oriented plane")
    g.add_argument("--infinity", action="store_true", help="the point at infinity")

    p = sub.add_parser("verify", help="run the identity suite and print max deviations")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _format_obj(obj):
    if isinstance(obj, Point):
        return "Point(x=[{}])".format(", ".join(export.fmt(c) for c in obj.x))
    if isinstance(obj, Sphere):
        return "Sphere(center=[{}], signed_radius={})".format(
            ", ".join(export.fmt(c) for c in obj.center), export.fmt(obj.signed_radius))
    if isinstance(obj, Plane):
        return "Plane(n=[{}], h={})".format(", ".join(export.fmt(c) for c in obj.n), export.fmt(obj.h))
    return "InfinityPoint"


def _format_complex(z):
    re, im = export.fmt(z.real), export.fmt(abs(z.imag))
    return f"{re}{'-' if z.imag < 0 and im != '0' else '+'}{im}i"


def _format_matrix(m):
    return "[" + "; ".join(", ".join(_format_complex(z) for z in row) for row in m) + "]"


def convert_report(args):
    if args.cone is not None:
        cls = proj_class(parse_vector(args.cone, 6))
    elif args.event is not None:
        cls = proj_class(embed_plus(parse_vector(args.event, 4)))
    elif args.unitary is not None:
        entries = [parse_complex(s) for s in args.unitary.split(",")]
        if len(entries) != 4:
            raise UsageError("--unitary needs 4 comma-separated entries")
        cls = cone_point_of_unitary(as_unitary(np.array(entries).reshape(2, 2), tol=1e-9))
    elif args.point is not None:
        cls = lie_to_ray(Point(parse_vector(args.point, 3)))
    elif args.sphere is not None:
        c = parse_vector(args.sphere, 4)
        cls = lie_to_ray(Sphere(c[:3], c[3]))
    elif args.plane is not None:
        c = parse_vector(args.plane, 4)
        cls = lie_to_ray(Plane(c[:3] / np.linalg.norm(c[:3]), c[3]))
    else:
        cls = lie_to_ray(InfinityPoint())
    u = unitary_of_cone_point(cls)
    obj = classify_ray(cls)
    lines = [
        "cone     [" + ", ".join(export.fmt(c) for c in cls.representative) + "]",
        "unitary  " + _format_matrix(u),
        "twistor  " + _format_matrix(plane_of_unitary(u).basis),
        "lie      " + _format_obj(obj),
    ]
    if isinstance(obj, (Point, Sphere)):
        ev = np.append(obj.x if isinstance(obj, Point) else obj.center,
                       0.0 if isinstance(obj, Point) else obj.signed_radius)
        lines.append("event    (" + ", ".join(export.fmt(c) for c in ev) + ")")
    else:
        lines.append("event    at conformal infinity")
    return "\n".join(lines) + "\n"


def geodesic_table(n, psi_range, samples):
    g = InfinityGeodesic(n / np.linalg.norm(n))
    rows = ["psi,kind,x1,x2,x3,x4,x5,x6,h"]
    for psi in np.linspace(psi_range[0], psi_range[1], samples):
        cls = geodesic_at_infinity(g, psi)
        obj = classify_ray(cls)
        h = export.fmt(obj.h) if isinstance(obj, Plane) else ""
        kind = type(obj).__name__
        rows.append(",".join([export.fmt(psi), kind, *(export.fmt(c) for c in cls.representative), h]))
    return "\n".join(rows) + "\n"


_MESH_COMMANDS = {
    "cyclide-doubled": ("doubled_cyclide", ("psi", "theta")),
    "cyclide-simple": ("simple_cyclide", ("psi", "theta")),
    "horned-torus": ("horned_torus", ("psi", "theta")),
    "infinity-r3": ("infinity_r3", ("psi", "theta", "phi")),
    "clifford-torus": ("clifford_torus", ("x", "t")),
}


def run(argv=None):
    try:
        args = build_parser().parse_args(argv)
        cmd = args.command
        if cmd in _MESH_COMMANDS:
            generator, params = _MESH_COMMANDS[cmd]
            cfg = JobConfig(cmd, args.res, {p: getattr(args, p) for p in params}, args.out, args.format)
            m = mesh(generator, cfg.resolution, ranges=[cfg.ranges[p] for p in params],
                     weld=not getattr(args, "no_weld", False),
                     avoid_pole=not getattr(args, "no_pole_offset", False))
            _emit(export.mesh_text(m, cfg.format), cfg.out)
        elif cmd == "segal-orbits":
            if args.orbits < 1 or args.samples < 2:
                raise UsageError("need --orbits >= 1 and --samples >= 2")
            # z2 and -z2 give the same image, so half a turn covers every orbit once.
            curves = [segal_orbit(np.exp(1j * np.pi * k / args.orbits), args.samples)
                      for k in range(args.orbits)]
            _emit(export.curves_text(curves, args.format), args.out)
        elif cmd == "plane-fronts":
            k0, k1 = (int(round(k)) for k in args.k)
            psis = [k * np.pi / args.denominator for k in range(k0, k1 + 1)]
            planes = plane_fronts(InfinityGeodesic(args.n / np.linalg.norm(args.n)), psis)
            m = plane_patches(planes, extent=args.extent, resolution=args.patch_res)
            _emit(export.mesh_text(m, args.format), args.out)
        elif cmd == "geodesic":
            if args.format != "csv":
                raise UsageError("geodesic writes a CSV table; use --format csv")
            if args.samples < 2:
                raise UsageError("need --samples >= 2")
            _emit(geodesic_table(args.n, args.psi, args.samples), args.out)
        elif cmd == "convert":
            sys.stdout.write(convert_report(args))
        elif cmd == "verify":
            checks = identity_report(args.samples, args.seed)
            for c in checks:
                status = "ok  " if c.ok else "FAIL"
                print(f"{status} {c.name:<48s} max dev {c.deviation:.3e}  (tol {c.tolerance:.0e})")
            if not all(c.ok for c in checks):
                return 2
        return 0
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except ConformalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (AssertionError, ArithmeticError) as exc:
        print(f"numerical contract violated: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
