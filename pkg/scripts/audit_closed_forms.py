"""Compare the transcribed closed-form noisy states with direct Kraus sums.

Prints a one-line verdict per form, and the full reports with --full.
"""
import argparse

from tripartite_noise import closed_forms as cf


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--full", action="store_true", help="print every report block")
    args = ap.parse_args()
    for label in ("GHZ", "W"):
        for kind, numeric_kind in cf.audit_pairs(label):
            r = cf.compare_analytic_numeric(kind, label, cf.DEFAULT_SAMPLES, numeric_kind)
            if args.full:
                print(r.format())
            else:
                print(
                    f"{r.equation_label:<12} vs {r.numeric_kind:<6} {r.verdict:<8} "
                    f"p0_dev={r.deviations[0]:.3g} max_dev={r.max_abs_deviation:.3g} at p={r.worst_p}"
                )


if __name__ == "__main__":
    main()
