import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conformal_infinity.errors import PoleInGrid, ProjectionPole, SourcePlane, UnknownGenerator
from conformal_infinity.surfaces import (GENERATORS, clifford_torus_point, doubled_cyclide,
                                         doubled_cyclide_pipeline, doubled_cylinder_point,
                                         geodesic_trace, horned_torus, horned_torus_pipeline,
                                         infinity_cylinder_point, infinity_r3, torus_double_cover, mesh,
                                         plane_patches, reduced_quadratic_coords, segal_orbit,
                                         simple_cyclide, simple_cyclide_pipeline, torus_coords,
                                         torus_image, light_source_project)
from conformal_infinity.lie_sphere import Plane

PI = np.pi


def test_light_source_examples():
    assert np.allclose(light_source_project([0, 1, 2, 3]), [1, 2, 3])
    assert np.allclose(light_source_project([1, 0, 0, 1]), [0, 0, 2])
    with pytest.raises(SourcePlane):
        light_source_project([2, 0, 0, 0])


@pytest.mark.parametrize("args, expected", [
    ((0, 0), (0, 0, 2)), ((PI / 2, PI / 2), (0, 1, 0)), ((0, PI), (0, 0, -2 / 3))])
def test_doubled_cyclide_examples(args, expected):
    assert np.allclose(doubled_cyclide(*args), expected, atol=1e-15)


@pytest.mark.parametrize("args, expected", [
    ((PI / 2, 0.3), (0, 0, 0)), ((PI / 2, 2.0), (0, 0, 0)),
    ((0, 0), (2, 0, 0)), ((0, PI / 2), (1, 1, 0))])
def test_simple_cyclide_examples(args, expected):
    assert np.allclose(simple_cyclide(*args), expected, atol=1e-15)


def test_horned_torus_examples():
    theta = np.linspace(0, 2 * PI, 17)
    assert np.allclose(horned_torus(PI / 2, theta), 0, atol=1e-15)
    psi = np.linspace(0, PI, 9)
    a, b = horned_torus(psi, 0.7), horned_torus(psi, -0.7)
    assert np.allclose(a * [1, -1, 1], b)
    m = mesh("horned_torus", (64, 64), weld=False)
    assert len(m.vertices) == 4096 and np.isfinite(m.vertices).all()


def test_horned_torus_is_a_surface_of_revolution():
    psi, theta = np.meshgrid(np.linspace(0, PI, 33), np.linspace(0, 2 * PI, 33), indexing="ij")
    p = horned_torus(psi, theta)
    r = np.hypot(p[..., 0], p[..., 1])
    assert np.allclose(r, r[:, :1])
    # the meridian reaches the axis only at the horn
    on_axis = np.isclose(r[:, 0], 0, atol=1e-12)
    assert np.array_equal(np.flatnonzero(on_axis), [16])


@pytest.mark.parametrize("args, expected", [
    ((0, PI / 2, 0), (1, 0, 0)), ((PI / 2, 0.4, 1.1), (0, 0, 0)), ((PI / 2, 0, 0), (0, 0, 0))])
def test_infinity_r3_examples(args, expected):
    assert np.allclose(infinity_r3(*args), expected, atol=1e-15)


def test_infinity_r3_pole():
    with pytest.raises(ProjectionPole):
        infinity_r3(0, 0, 0.5)
    with pytest.raises(ProjectionPole):
        infinity_r3(PI, 0, 0.0)


def test_clifford_torus_examples():
    assert np.allclose(clifford_torus_point(0, 0), (0, -2, 0))
    z1, z2 = torus_coords(0.0, 0.0)
    assert np.isclose(z1, 1j) and np.isclose(z2, -1j)
    assert np.allclose(torus_image(z1, z2), torus_image(-z1, -z2))


def test_clifford_torus_lift_is_scale_free(rng):
    for x, t in rng.uniform(-5, 5, size=(50, 2)):
        v = 0.5 * (1 - x * x + t * t)
        w = -0.5 * (1 + x * x - t * t)
        lam = rng.uniform(0.1, 10)
        X, T, V, W = lam * np.array([x, t, v, w])
        r = np.hypot(T, W)
        img = torus_image((X + 1j * V) / r, (T + 1j * W) / r)
        assert np.allclose(img, clifford_torus_point(x, t))


def test_segal_orbit_examples():
    orb = segal_orbit(1.0, 64)
    assert np.allclose(orb.points[32], torus_image(-1.0, 1.0))
    c = segal_orbit(1.0, 4)
    assert c.points.shape == (4, 3) and c.closed
    s = 2 * PI * np.arange(256) / 256
    for z2a, z2b in [(1.0, 1j), (np.exp(0.3j), np.exp(1.1j))]:
        wa = np.stack(torus_double_cover(np.exp(1j * s), z2a), axis=-1)
        wb = np.stack(torus_double_cover(np.exp(1j * s), z2b), axis=-1)
        gap = np.abs(wa[:, None, :] - wb[None, :, :]).max(axis=-1).min()
        assert gap > 1e-3
    with pytest.raises(ValueError):
        segal_orbit(2.0, 8)


def test_torus_double_cover_two_to_one_on_grid():
    n = 64
    a = 2 * PI * np.arange(n) / n
    z1, z2 = np.meshgrid(np.exp(1j * a), np.exp(1j * a), indexing="ij")
    w1, w2 = torus_double_cover(z1, z2)
    assert np.allclose(np.abs(w1), 1) and np.allclose(np.abs(w2), 1)
    keys = np.round(np.stack([w1.real, w1.imag, w2.real, w2.imag], axis=-1).reshape(-1, 4), 9) + 0.0
    _, inverse, counts = np.unique(keys, axis=0, return_inverse=True, return_counts=True)
    assert set(counts) == {2}
    ij = np.indices((n, n)).reshape(2, -1).T
    for cls in range(len(counts)):
        (p, q) = ij[inverse.ravel() == cls]
        # fibre is {(z1, z2), (-z1, -z2)}: both indices shift by half a turn
        assert np.array_equal((p + n // 2) % n, q)


def test_closed_forms_match_pipelines():
    g = np.linspace(0, 2 * PI, 256)
    psi, theta = np.meshgrid(g, g, indexing="ij")
    assert np.abs(doubled_cyclide(psi, theta) - doubled_cyclide_pipeline(psi, theta)).max() <= 1e-12
    assert np.abs(simple_cyclide(psi, theta) - simple_cyclide_pipeline(psi, theta)).max() <= 1e-12
    assert np.abs(horned_torus(psi, theta) - horned_torus_pipeline(psi, theta)).max() <= 1e-12


def test_pre_projection_bounds():
    g = np.linspace(0, 2 * PI, 256)
    psi, theta = np.meshgrid(g, g, indexing="ij")
    for pts in (doubled_cylinder_point(psi, theta),
                reduced_quadratic_coords(infinity_cylinder_point(psi, theta))):
        assert np.abs(pts).max() <= 1 + 1e-12
        norm = np.linalg.norm(pts, axis=-1)
        assert norm.max() <= np.sqrt(2) + 1e-12
        assert np.isclose(norm.max(), np.sqrt(2))


def test_geodesic_trace_hits_cusp_at_half_pi():
    psis = np.linspace(0, PI, 41)
    for theta in (0.0, 1.0, 2.5):
        c = geodesic_trace(theta, psis)
        zero = np.flatnonzero(np.linalg.norm(c.points, axis=1) <= 1e-12)
        assert np.array_equal(zero, [20])


def test_clifford_rectangle_is_finite():
    x, t = np.meshgrid(np.linspace(-20, 20, 201), np.linspace(-15, 15, 151), indexing="ij")
    assert np.isfinite(clifford_torus_point(x, t)).all()


@settings(max_examples=100, deadline=None)
@given(st.floats(-1e3, 1e3), st.floats(-1e3, 1e3))
def test_clifford_torus_total(x, t):
    p = clifford_torus_point(x, t)
    assert np.isfinite(p).all()


def test_mesh_counts_and_weld():
    raw = mesh("simple_cyclide", (8, 8), weld=False)
    assert len(raw.vertices) == 64 and len(raw.faces) == 64
    m = mesh("simple_cyclide", (8, 8))
    cusp = np.flatnonzero(np.all(m.vertices == 0, axis=1))
    assert len(cusp) == 1
    assert len(m.vertices) == 57 and len(m.faces) == 64
    assert all(len(set(f)) == len(f) >= 3 for f in m.faces)


def test_mesh_doubled_cyclide_closed_both_ways():
    m = mesh("doubled_cyclide", (12, 10))
    assert len(m.vertices) == 120 and len(m.faces) == 120
    assert m.metadata["periodic"] == (True, True)


def test_mesh_is_row_major():
    m = mesh("doubled_cyclide", (4, 6))
    g = 2 * PI * np.arange(6) / 6
    assert np.allclose(m.vertices[6:12], doubled_cyclide(2 * PI / 4, g))


def test_mesh_infinity_r3():
    m = mesh("infinity_r3", (8, 4, 8))
    assert np.isfinite(m.vertices).all()
    with pytest.raises(PoleInGrid) as err:
        mesh("infinity_r3", (8, 4, 8), avoid_pole=False)
    assert err.value.cells and all(c[1] == 0 for c in err.value.cells)


def test_mesh_errors():
    with pytest.raises(UnknownGenerator):
        mesh("klein_bottle", (4, 4))
    with pytest.raises(ValueError):
        mesh("simple_cyclide", (1, 4))
    with pytest.raises(ValueError):
        mesh("simple_cyclide", (4, 4, 4))


def test_every_generator_meshes():
    for name, gen in GENERATORS.items():
        m = mesh(name, (6,) * len(gen.ranges))
        assert len(m.faces) > 0 and np.isfinite(m.vertices).all()


def test_plane_patches():
    planes = [Plane([0, 0, 1], h) for h in (-1.0, 0.0, 2.0)]
    m = plane_patches(planes, extent=1.0, resolution=3)
    assert len(m.vertices) == 27 and len(m.faces) == 12
    assert np.allclose(m.vertices[:9, 2], -1) and np.allclose(m.vertices[18:, 2], 2)
