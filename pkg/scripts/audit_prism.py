"""Audit the built-in prism instance and write its shrunk form to results/."""
import json

from hcaudit.graph import emit_arclist
from hcaudit.harness import compare_one, prism, shrink_trace

rec = compare_one(prism())
print(json.dumps(rec.to_json(), indent=2, sort_keys=True))
if rec.discrepancy:
    pre, small = shrink_trace(rec.digraph)
    with open("results/prism_shrunk.txt", "w") as fh:
        fh.write(emit_arclist(small))
    print(f"shrunk to n={small.n}, m={small.m}")
