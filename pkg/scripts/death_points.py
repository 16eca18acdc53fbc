"""Bisected sudden-death points (step 0.01 scan, 1e-4 bisection) for all scenarios."""
from tripartite_noise import find_death_point, scenario_for_kind
from tripartite_noise.channels import SCENARIO_KINDS


def main():
    print("state,kind,death_p")
    for label in ("GHZ", "W"):
        for kind in SCENARIO_KINDS:
            p = find_death_point(label, scenario_for_kind(kind, normalization="renormalize"))
            print(f"{label},{kind},{'none' if p is None else f'{p:.4f}'}")


if __name__ == "__main__":
    main()
