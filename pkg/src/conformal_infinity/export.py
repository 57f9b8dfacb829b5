"""Deterministic ASCII writers for meshes, curves and point sets (OBJ, CSV, PLY).

Numbers are written positionally (never in exponent form) with a fixed
number of significant digits, 9 by default. The environment variable
CONFORMAL_INFINITY_DIGITS overrides the digit count. Magnitudes below
5e-13 are written as 0 so that rounding noise does not leak into files.
"""

import os
from pathlib import Path

import numpy as np

FORMATS = ("obj", "csv", "ply")
DEFAULT_DIGITS = 9
_ZERO = 5e-13


def digits():
    raw = os.environ.get("CONFORMAL_INFINITY_DIGITS")
    if raw is None:
        return DEFAULT_DIGITS
    n = int(raw)
    if not 1 <= n <= 17:
        raise ValueError(f"CONFORMAL_INFINITY_DIGITS must be in 1..17, got {n}")
    return n


def fmt(value, ndigits=None):
    value = float(value)
    if abs(value) < _ZERO:
        return "0"
    s = np.format_float_positional(value, precision=ndigits or digits(), unique=False,
                                   fractional=False, trim="-")
    return "0" if s in ("-0", "0.") else s


def _row(p, ndigits):
    return " ".join(fmt(c, ndigits) for c in p)


def mesh_text(m, fmt_tag):
    n = digits()
    if fmt_tag == "obj":
        lines = [f"# {m.metadata.get('generator', 'mesh')}"]
        lines += ["v " + _row(p, n) for p in m.vertices]
        lines += ["f " + " ".join(str(i + 1) for i in f) for f in m.faces]
    elif fmt_tag == "csv":
        lines = ["x,y,z"] + [",".join(fmt(c, n) for c in p) for p in m.vertices]
    elif fmt_tag == "ply":
        lines = ["ply", "format ascii 1.0",
                 f"comment generator {m.metadata.get('generator', 'mesh')}",
                 f"element vertex {len(m.vertices)}",
                 "property double x", "property double y", "property double z",
                 f"element face {len(m.faces)}",
                 "property list uchar int vertex_indices", "end_header"]
        lines += [_row(p, n) for p in m.vertices]
        lines += [f"{len(f)} " + " ".join(str(i) for i in f) for f in m.faces]
    else:
        raise ValueError(f"unknown format {fmt_tag!r}; expected one of {FORMATS}")
    return "\n".join(lines) + "\n"


def curves_text(curves, fmt_tag):
    n = digits()
    if fmt_tag == "obj":
        lines, base = [], 1
        for c in curves:
            lines += ["v " + _row(p, n) for p in c.points]
        for c in curves:
            idx = list(range(base, base + len(c.points)))
            if c.closed:
                idx.append(base)
            lines.append("l " + " ".join(map(str, idx)))
            base += len(c.points)
    elif fmt_tag == "csv":
        lines = ["curve,x,y,z"]
        for k, c in enumerate(curves):
            lines += [f"{k}," + ",".join(fmt(v, n) for v in p) for p in c.points]
    elif fmt_tag == "ply":
        total = sum(len(c.points) for c in curves)
        nedges = sum(len(c.points) - (0 if c.closed else 1) for c in curves)
        lines = ["ply", "format ascii 1.0", "comment generator curves",
                 f"element vertex {total}",
                 "property double x", "property double y", "property double z",
                 f"element edge {nedges}", "property int vertex1", "property int vertex2",
                 "end_header"]
        edges, base = [], 0
        for c in curves:
            lines += [_row(p, n) for p in c.points]
            m = len(c.points)
            for i in range(m if c.closed else m - 1):
                edges.append(f"{base + i} {base + (i + 1) % m}")
            base += m
        lines += edges
    else:
        raise ValueError(f"unknown format {fmt_tag!r}; expected one of {FORMATS}")
    return "\n".join(lines) + "\n"


def points_text(points, fmt_tag, header=("x", "y", "z")):
    n = digits()
    points = np.asarray(points, dtype=float)
    if fmt_tag == "csv":
        lines = [",".join(header)] + [",".join(fmt(c, n) for c in p) for p in points]
    elif fmt_tag == "obj":
        lines = ["v " + _row(p, n) for p in points]
    elif fmt_tag == "ply":
        lines = ["ply", "format ascii 1.0", f"element vertex {len(points)}",
                 "property double x", "property double y", "property double z", "end_header"]
        lines += [_row(p, n) for p in points]
    else:
        raise ValueError(f"unknown format {fmt_tag!r}; expected one of {FORMATS}")
    return "\n".join(lines) + "\n"


def write_text(text, path):
    path = Path(path)
    try:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc
    return path


def write_mesh(m, fmt_tag, path):
    return write_text(mesh_text(m, fmt_tag), path)


def write_curves(curves, fmt_tag, path):
    return write_text(curves_text(curves, fmt_tag), path)


def write_curve(curve, fmt_tag, path):
    return write_curves([curve], fmt_tag, path)


def write_points(points, fmt_tag, path, header=("x", "y", "z")):
    return write_text(points_text(points, fmt_tag, header), path)
