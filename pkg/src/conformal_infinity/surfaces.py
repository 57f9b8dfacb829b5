"""Parametric surfaces depicting conformal infinity, and the projections behind them.

One space dimension (x3) is suppressed, leaving cylinder coordinates
(x1, x2, x4, x5) with

    x1^2 + x2^2 + x5^2 = 1,    x4^2 + x5^2 = 1.

These are projected from the light source (2, 0, 0, 0) onto the screen
x1 = 0. Each closed-form surface below has a ``*_pipeline`` twin that builds
the same points from cylinder coordinates, so the two can be checked
against each other.

All surface functions broadcast over array arguments.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import PoleInGrid, ProjectionPole, SourcePlane, UnknownGenerator

SOURCE_TOL = 1e-12
POLE_TOL = 1e-12
TWO_PI = 2 * np.pi


def light_source_project(p):
    """(x1, x2, x4, x5) -> (2 x2, 2 x4, 2 x5) / (2 - x1)."""
    p = np.asarray(p, dtype=float)
    a = p[..., 0]
    if np.any(a >= 2 - SOURCE_TOL):
        raise SourcePlane("point lies on or beyond the plane of the light source")
    s = 2.0 / (2.0 - a)
    return np.stack([s * p[..., 1], s * p[..., 2], s * p[..., 3]], axis=-1)


# -- doubled conformal infinity (quotient by positive scalars) ---------------

def doubled_cylinder_point(psi, theta):
    psi, theta = np.broadcast_arrays(np.asarray(psi, float), np.asarray(theta, float))
    ct = np.cos(theta)
    return np.stack([np.cos(psi) * ct, np.sin(psi) * ct, np.sin(theta), ct], axis=-1)


def doubled_cyclide(psi, theta):
    psi, theta = np.broadcast_arrays(np.asarray(psi, float), np.asarray(theta, float))
    ct = np.cos(theta)
    den = 2 - np.cos(psi) * ct
    return np.stack([2 * np.sin(psi) * ct, 2 * np.sin(theta), 2 * ct], axis=-1) / den[..., None]


def doubled_cyclide_pipeline(psi, theta):
    return light_source_project(doubled_cylinder_point(psi, theta))


# -- simple conformal infinity (quotient by nonzero scalars) -----------------

def infinity_cylinder_point(psi, theta):
    """Point of the null geodesic with direction (cos theta, sin theta) at angle psi."""
    psi, theta = np.broadcast_arrays(np.asarray(psi, float), np.asarray(theta, float))
    cp = np.cos(psi)
    return np.stack([cp * np.cos(theta), cp * np.sin(theta), cp, np.sin(psi)], axis=-1)


def reduced_quadratic_coords(p):
    """(x1, x2, x4, x5) -> (y1, y2, y4, y5) with y_a = x^a x^4; even in p."""
    p = np.asarray(p, dtype=float)
    return p * p[..., 2:3]


def simple_cyclide(psi, theta):
    psi, theta = np.broadcast_arrays(np.asarray(psi, float), np.asarray(theta, float))
    cp = np.cos(psi)
    c2 = cp * cp
    den = 2 - c2 * np.cos(theta)
    return np.stack([2 * c2, 2 * c2 * np.sin(theta), 2 * cp * np.sin(psi)], axis=-1) / den[..., None]


def simple_cyclide_pipeline(psi, theta):
    y1, y2, y4, y5 = np.moveaxis(reduced_quadratic_coords(infinity_cylinder_point(psi, theta)), -1, 0)
    return light_source_project(np.stack([y1, y4, y2, y5], axis=-1))


def horned_torus(psi, theta):
    psi, theta = np.broadcast_arrays(np.asarray(psi, float), np.asarray(theta, float))
    cp = np.cos(psi)
    c2 = cp * cp
    den = 2 - c2
    return np.stack([2 * c2 * np.cos(theta), 2 * c2 * np.sin(theta), 2 * cp * np.sin(psi)],
                    axis=-1) / den[..., None]


def horned_torus_pipeline(psi, theta):
    # Light source on the y4 axis: the image is symmetric about the y5 axis.
    y1, y2, y4, y5 = np.moveaxis(reduced_quadratic_coords(infinity_cylinder_point(psi, theta)), -1, 0)
    return light_source_project(np.stack([y4, y1, y2, y5], axis=-1))


def geodesic_trace(theta, psis):
    """Image on the simple cyclide of the null geodesic labelled by ``theta``."""
    psis = np.asarray(psis, dtype=float)
    return Curve3(simple_cyclide(psis, theta), closed=False,
                  metadata={"generator": "geodesic_trace", "theta": float(theta)})


# -- conformal infinity in R^3 -----------------------------------------------

def infinity_quadratic(psi, theta, phi):
    psi, theta, phi = np.broadcast_arrays(*(np.asarray(a, float) for a in (psi, theta, phi)))
    cp = np.cos(psi)
    c2 = cp * cp
    st = np.sin(theta)
    return np.stack([c2 * st * np.cos(phi), c2 * st * np.sin(phi), c2 * np.cos(theta),
                     cp * np.sin(psi)], axis=-1)


def infinity_r3(psi, theta, phi):
    """Stereographic image of conformal infinity from (0, 0, 1, 0)."""
    y = infinity_quadratic(psi, theta, phi)
    den = 1 - y[..., 2]
    if np.any(den <= POLE_TOL):
        raise ProjectionPole("psi in {0, pi} with theta = 0 is the centre of projection")
    return np.stack([y[..., 0], y[..., 1], y[..., 3]], axis=-1) / den[..., None]


# -- 1+1 dimensional model on the Clifford torus -----------------------------

def torus_coords(x, t):
    """Normalized lift of the event (x, t) to |z1| = |z2| = 1."""
    x, t = np.broadcast_arrays(np.asarray(x, float), np.asarray(t, float))
    v = 0.5 * (1 - x * x + t * t)
    w = -0.5 * (1 + x * x - t * t)
    r = np.sqrt(t * t + w * w)
    return (x + 1j * v) / r, (t + 1j * w) / r


def torus_double_cover(z1, z2):
    """(z1, z2) -> (z1 z2, z1 conj(z2)); two-to-one with fibres +-(z1, z2)."""
    z1 = np.asarray(z1)
    z2 = np.asarray(z2)
    return z1 * z2, z1 * np.conj(z2)


def torus_image(z1, z2):
    w1, w2 = torus_double_cover(z1, z2)
    return light_source_project(np.stack([w1.real, w1.imag, w2.real, w2.imag], axis=-1))


def clifford_torus_point(x, t):
    return torus_image(*torus_coords(x, t))


def segal_orbit(z2_fixed, n_samples, z1_start=1.0):
    """Orbit of the circle action z1 -> e^{i s} z1 at fixed z2, as a closed curve."""
    if abs(abs(z2_fixed) - 1) > 1e-12:
        raise ValueError(f"z2 must be a unit complex number, got |z2| = {abs(z2_fixed)}")
    if n_samples < 2:
        raise ValueError("need at least 2 samples")
    s = TWO_PI * np.arange(n_samples) / n_samples
    z1 = z1_start * np.exp(1j * s)
    return Curve3(torus_image(z1, np.full_like(z1, z2_fixed)), closed=True,
                  metadata={"generator": "segal_orbit", "z2": complex(z2_fixed)})


# -- meshes ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SurfaceMesh:
    vertices: np.ndarray
    faces: tuple
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float).reshape(-1, 3)
        if not np.all(np.isfinite(v)):
            raise ValueError("mesh vertices must be finite")
        for f in self.faces:
            if min(f) < 0 or max(f) >= len(v):
                raise ValueError(f"face {f} indexes outside {len(v)} vertices")
        object.__setattr__(self, "vertices", v)
        object.__setattr__(self, "faces", tuple(tuple(int(i) for i in f) for f in self.faces))


@dataclass(frozen=True, eq=False)
class Curve3:
    points: np.ndarray
    closed: bool = False
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        p = np.asarray(self.points, dtype=float).reshape(-1, 3)
        if not np.all(np.isfinite(p)):
            raise ValueError("curve points must be finite")
        object.__setattr__(self, "points", p)


@dataclass(frozen=True)
class Generator:
    func: object
    ranges: tuple
    periods: tuple          # period per parameter, None for non-periodic
    cusp: float = None      # first-parameter value whose ring collapses to a point
    pole_offset: int = None  # parameter sampled at half-cell offsets to dodge a pole


GENERATORS = {
    "doubled_cyclide": Generator(doubled_cyclide, ((0, TWO_PI), (0, TWO_PI)), (TWO_PI, TWO_PI)),
    "simple_cyclide": Generator(simple_cyclide, ((0, np.pi), (0, TWO_PI)), (np.pi, TWO_PI),
                                cusp=np.pi / 2),
    "horned_torus": Generator(horned_torus, ((0, np.pi), (0, TWO_PI)), (np.pi, TWO_PI),
                              cusp=np.pi / 2),
    "infinity_r3": Generator(infinity_r3, ((0, np.pi), (0, np.pi), (0, TWO_PI)),
                             (np.pi, None, TWO_PI), cusp=np.pi / 2, pole_offset=1),
    "clifford_torus": Generator(clifford_torus_point, ((-20, 20), (-15, 15)), (None, None)),
}


def _samples(start, stop, n, periodic, offset):
    if periodic:
        return start + (stop - start) * np.arange(n) / n
    if offset:
        return start + (stop - start) * (np.arange(n) + 0.5) / n
    return np.linspace(start, stop, n)


def _grid_faces(shape, wrap):
    """Quads of a 2D (rows x cols) grid, optionally wrapping each axis."""
    nr, nc = shape
    faces = []
    for i in range(nr if wrap[0] else nr - 1):
        i2 = (i + 1) % nr
        for j in range(nc if wrap[1] else nc - 1):
            j2 = (j + 1) % nc
            faces.append((i * nc + j, i2 * nc + j, i2 * nc + j2, i * nc + j2))
    return faces


def _weld(vertices, faces, collapse):
    """Merge the vertices flagged in ``collapse`` into the first of them."""
    keep = ~collapse
    target = int(np.argmax(collapse))
    keep[target] = True
    new_index = np.cumsum(keep) - 1
    remap = np.where(collapse, new_index[target], new_index)
    vertices = vertices[keep]
    cusp = new_index[target]
    # The collapsed ring is exactly one point; drop rounding noise of order 1e-17.
    vertices[cusp] = np.where(np.abs(vertices[cusp]) < 1e-12, 0.0, vertices[cusp])
    welded = []
    for f in faces:
        g = []
        for i in f:
            k = int(remap[i])
            if not g or g[-1] != k:
                g.append(k)
        if len(g) > 1 and g[0] == g[-1]:
            g.pop()
        if len(set(g)) >= 3:
            welded.append(tuple(g))
    return vertices, welded


def mesh(generator, resolution, ranges=None, weld=True, avoid_pole=True):
    """Tensor-product mesh of a named generator.

    Vertices are row-major in the first parameter. Parameters whose range
    covers a full period are sampled without the endpoint and their faces
    wrap around. For three-parameter generators the middle parameter labels
    separate sheets, each meshed over the first and last parameters.
    """
    try:
        gen = GENERATORS[generator]
    except KeyError:
        raise UnknownGenerator(f"unknown generator {generator!r}; known: {sorted(GENERATORS)}") from None
    resolution = tuple(int(n) for n in resolution)
    if len(resolution) != len(gen.ranges):
        raise ValueError(f"{generator} needs {len(gen.ranges)} resolutions, got {resolution}")
    if min(resolution) < 2:
        raise ValueError("grid resolution must be at least 2 per axis")
    ranges = tuple(tuple(map(float, r)) for r in (ranges or gen.ranges))

    periodic = tuple(p is not None and np.isclose(r[1] - r[0], p)
                     for r, p in zip(ranges, gen.periods))
    axes = [_samples(r[0], r[1], n, per, avoid_pole and k == gen.pole_offset)
            for k, (r, n, per) in enumerate(zip(ranges, resolution, periodic))]
    grids = np.meshgrid(*axes, indexing="ij")

    if gen.pole_offset is not None and not avoid_pole:
        y = infinity_quadratic(*grids)
        bad = np.argwhere(1 - y[..., 2] <= POLE_TOL)
        if len(bad):
            raise PoleInGrid(f"{len(bad)} grid cells hit the projection pole",
                             cells=[tuple(int(i) for i in c) for c in bad])

    vertices = gen.func(*grids).reshape(-1, 3)

    if len(resolution) == 2:
        faces = _grid_faces(resolution, periodic)
    else:
        n0, n1, n2 = resolution
        sheet = _grid_faces((n0, n2), (periodic[0], periodic[2]))
        faces = []
        for j in range(n1):
            for f in sheet:
                faces.append(tuple((i // n2) * n1 * n2 + j * n2 + i % n2 for i in f))

    cusp_rows = 0
    if weld and gen.cusp is not None:
        collapse = np.isclose(grids[0], gen.cusp, rtol=0, atol=1e-12).reshape(-1)
        cusp_rows = int(collapse.any())
        if collapse.any():
            vertices, faces = _weld(vertices, faces, collapse)

    meta = {"generator": generator, "resolution": resolution, "ranges": ranges,
            "periodic": periodic, "welded_cusp": bool(cusp_rows)}
    return SurfaceMesh(vertices, tuple(faces), meta)


def plane_patches(planes, extent=2.0, resolution=2):
    """Square patches (side 2*extent) centred at h n on each oriented plane."""
    vertices, faces = [], []
    s = np.linspace(-extent, extent, resolution)
    for plane in planes:
        n = np.asarray(plane.n, dtype=float)
        helper = np.eye(3)[np.argmin(np.abs(n))]
        e1 = np.cross(n, helper)
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(n, e1)
        base = len(vertices)
        for a in s:
            for b in s:
                vertices.append(plane.h * n + a * e1 + b * e2)
        faces.extend(tuple(base + i for i in f) for f in _grid_faces((resolution, resolution), (False, False)))
    return SurfaceMesh(np.array(vertices), tuple(faces),
                       {"generator": "plane_fronts", "count": len(planes), "extent": extent})
