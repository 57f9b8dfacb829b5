"""Render the figure set and print (or pin) its sha256 checksums.

    python scripts/make_figures.py [OUTDIR] [--update]

--update rewrites tests/golden/checksums.json.
"""

import argparse
import json
from pathlib import Path

from conformal_infinity.figures import render_all

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "golden" / "checksums.json"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("outdir", nargs="?", default="figures")
    ap.add_argument("--update", action="store_true")
    args = ap.parse_args()
    sums = render_all(args.outdir)
    for name, digest in sums.items():
        print(f"{digest}  {Path(args.outdir) / name}")
    if args.update:
        GOLDEN.write_text(json.dumps(sums, indent=2, sort_keys=True) + "\n")
        print(f"wrote {GOLDEN}")


if __name__ == "__main__":
    main()
