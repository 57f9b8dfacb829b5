import numpy as np
import pytest

from conformal_infinity.cli import JobConfig, UsageError, parse_number, parse_range, parse_res, run


def test_parsers():
    assert parse_number("-pi/2") == -np.pi / 2
    assert parse_range("0:pi") == (0, np.pi)
    assert parse_res("8x4x2") == (8, 4, 2)
    for bad in (lambda: parse_number("__import__('os')"), lambda: parse_range("1"),
                lambda: parse_res("1x4"), lambda: parse_res("ax4")):
        with pytest.raises(UsageError):
            bad()


def test_negative_option_values(capsys):
    assert run(["clifford-torus", "--res", "3x3", "--x", "-20:20", "--t", "-pi:pi"]) == 0
    assert run(["convert", "--unitary", "-1,0,0,1"]) == 0
    assert "h=0" in capsys.readouterr().out


def test_job_config_validation():
    JobConfig("cyclide-simple", (4, 4), format="ply")
    with pytest.raises(UsageError):
        JobConfig("cyclide-simple", (4, 4), format="stl")


def test_convert_infinity(capsys):
    assert run(["convert", "--cone", "0,0,0,0,1,1"]) == 0
    out = capsys.readouterr().out
    assert "unitary  [1+0i, 0+0i; 0+0i, 1+0i]" in out
    assert "twistor  [1+0i, 0+0i; 0+0i, 1+0i; 1+0i, 0+0i; 0+0i, 1+0i]" in out
    assert "lie      InfinityPoint" in out


@pytest.mark.parametrize("argv, expected", [
    (["--event", "1,2,3,0.5"], "Sphere(center=[1, 2, 3], signed_radius=0.5)"),
    (["--point", "1,0,0"], "Point(x=[1, 0, 0])"),
    (["--plane", "1,0,0,2"], "Plane(n=[1, 0, 0], h=2)"),
    (["--unitary", "-1,0,0,1"], "Plane(n=[0, 0, 1], h=0)"),
    (["--infinity"], "InfinityPoint"),
])
def test_convert_models(capsys, argv, expected):
    assert run(["convert", *argv]) == 0
    assert expected in capsys.readouterr().out


def test_exit_codes(capsys, tmp_path):
    assert run([]) == 1
    assert run(["cyclide-simple", "--res", "1x4"]) == 1
    assert run(["convert", "--cone", "1,0,0,0,0,0"]) == 1
    assert run(["convert", "--unitary", "2,0,0,1"]) == 1
    assert run(["cyclide-simple", "--out", str(tmp_path / "no" / "x.obj")]) == 1
    assert run(["infinity-r3", "--res", "4x4x4", "--no-pole-offset"]) == 1
    err = capsys.readouterr().err
    assert "cannot write" in err and "projection pole" in err


def test_simple_cyclide_file(tmp_path):
    path = tmp_path / "s.obj"
    assert run(["cyclide-simple", "--res", "64x64", "--format", "obj", "--out", str(path)]) == 0
    lines = path.read_text().splitlines()
    assert sum(line.startswith("v ") for line in lines) == 64 * 63 + 1
    assert sum(line.startswith("f ") for line in lines) == 64 * 64
    path2 = tmp_path / "raw.obj"
    assert run(["cyclide-simple", "--res", "64x64", "--no-weld", "--out", str(path2)]) == 0
    assert sum(line.startswith("v ") for line in path2.read_text().splitlines()) == 64 * 64


@pytest.mark.parametrize("argv", [
    ["cyclide-doubled", "--res", "8x8", "--format", "ply"],
    ["horned-torus", "--res", "8x8", "--format", "csv"],
    ["infinity-r3", "--res", "6x3x6"],
    ["clifford-torus", "--res", "6x5", "--x=-20:20", "--t=-15:15"],
    ["segal-orbits", "--orbits", "3", "--samples", "16", "--format", "ply"],
    ["plane-fronts", "--k=-9:9"],
    ["geodesic", "--samples", "5"],
])
def test_determinism(tmp_path, argv):
    a, b = tmp_path / "a", tmp_path / "b"
    assert run([*argv, "--out", str(a)]) == 0
    assert run([*argv, "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes() and a.stat().st_size > 0


def test_geodesic_table(capsys):
    assert run(["geodesic", "--n", "0,0,1", "--psi", "0:pi", "--samples", "5"]) == 0
    rows = capsys.readouterr().out.splitlines()
    assert rows[0].startswith("psi,kind")
    assert rows[3].split(",")[1] == "InfinityPoint"
    assert rows[2].split(",")[-1] == "1"
    assert run(["geodesic", "--format", "obj"]) == 1


def test_verify(capsys):
    assert run(["verify", "--samples", "200"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out and all(line.startswith("ok") for line in out)
