"""Hardness constants per degree bound and the smallest n admitting a grouping."""
import argparse

from homred.params import admissible_r_max, constants


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degrees", type=int, nargs="+", default=[2, 3, 4, 5])
    args = ap.parse_args()

    print(f"{'d':>2} {'alpha':>5} {'beta':>10} {'tau':>4} {'lambda':>12} {'log2 gamma':>16} {'min n (r=1)':>14}")
    for d in args.degrees:
        k = constants(d)
        n_min = 2 * k.lam
        assert admissible_r_max(n_min, d) == 1 and admissible_r_max(n_min - 1, d) == 0
        print(f"{d:>2} {k.alpha:>5} {k.beta:>10} {k.tau:>4} {k.lam:>12} {k.log2_gamma:>16.3f} {n_min:>14}")


if __name__ == "__main__":
    main()
