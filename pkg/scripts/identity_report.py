"""Print the numerical identity suite with maximum deviations."""

import argparse

from conformal_infinity.verify import identity_report


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for c in identity_report(args.samples, args.seed):
        print(f"{'ok  ' if c.ok else 'FAIL'} {c.name:<48s} {c.deviation:.3e}  (tol {c.tolerance:.0e})")


if __name__ == "__main__":
    main()
