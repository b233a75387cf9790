"""Gnp(n=6, p=0.35) campaign, 10,000 trials, master seed 42.

Writes the JSON report and prints the confusion totals.
"""
import argparse
import json

from hcaudit.harness import Limits, fuzz_campaign, revalidate

ap = argparse.ArgumentParser()
ap.add_argument("--trials", type=int, default=10_000)
ap.add_argument("--seed", type=int, default=42)
ap.add_argument("--n", type=int, default=6)
ap.add_argument("--p", type=float, default=0.35)
ap.add_argument("--workers", type=int, default=4)
ap.add_argument("--out", default="results/fuzz_gnp.json")
args = ap.parse_args()

report = fuzz_campaign("gnp", (args.n, args.n), args.trials, args.seed, Limits(),
                       p=args.p, workers=args.workers)
with open(args.out, "w") as fh:
    fh.write(report.dumps())
print(json.dumps(report.totals, indent=2))
print("discrepancies:", len(report.discrepancies))
print("all revalidate:", all(revalidate(json.loads(report.dumps()))))
