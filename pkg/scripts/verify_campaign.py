"""Seeded equisatisfiability campaign over small random graphs.

    python scripts/verify_campaign.py --trials 500 --n-max 10 --seed 0
"""
import argparse
import json
import time

from homred.campaign import run_campaign


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--d", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--no-relaxed", action="store_true", help="skip relaxed-mode groupings")
    args = ap.parse_args()

    start = time.perf_counter()
    rep = run_campaign(args.n_max, args.d, args.trials, args.seed, relaxed=not args.no_relaxed)
    out = rep.as_dict()
    out["wall_time_s"] = round(time.perf_counter() - start, 2)
    print(json.dumps(out, indent=1, sort_keys=True))
    raise SystemExit(0 if rep.ok else 1)


if __name__ == "__main__":
    main()
