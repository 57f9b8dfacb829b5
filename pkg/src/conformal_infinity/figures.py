"""Fixed figure jobs whose output files are pinned by golden checksums."""

import hashlib
from pathlib import Path

from .cli import run

FIGURE_JOBS = {
    "cyclide_doubled.obj": ["cyclide-doubled", "--res", "32x32"],
    "cyclide_simple.obj": ["cyclide-simple", "--res", "32x32"],
    "horned_torus.obj": ["horned-torus", "--res", "32x32"],
    "infinity_r3.obj": ["infinity-r3", "--res", "16x4x16"],
    "clifford_torus.obj": ["clifford-torus", "--res", "41x31", "--x=-20:20", "--t=-15:15"],
    "segal_orbits.obj": ["segal-orbits", "--orbits", "8", "--samples", "64"],
    "plane_fronts.obj": ["plane-fronts", "--n", "1,0,1", "--k=-9:9",
                         "--denominator", "20"],
}


def sha256(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def render_all(outdir):
    """Write every figure into ``outdir`` and return {file name: sha256}."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    sums = {}
    for name, argv in FIGURE_JOBS.items():
        path = outdir / name
        code = run([*argv, "--format", "obj", "--out", str(path)])
        if code != 0:
            raise RuntimeError(f"figure job {name} exited with {code}")
        sums[name] = sha256(path)
    return sums
