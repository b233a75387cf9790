"""Scaling of the paper pipeline on Gnp(p) digraphs; CSV on stdout."""
import sys

from hcaudit.harness import bench_scaling

ns = [int(a) for a in sys.argv[1:]] or [100, 200, 400, 800, 1200]
res = bench_scaling(ns, 0.3, seed=0, repeats=3)
sys.stdout.write(res.to_csv())
print(f"# log-log slope {res.slope:.3f}", file=sys.stderr)
