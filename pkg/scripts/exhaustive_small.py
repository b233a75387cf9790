"""Run the paper pipeline against Held-Karp on every labeled digraph with n vertices.

n=4 takes a second; n=5 (about a million digraphs) takes a few minutes.
"""
import sys
from collections import Counter
from itertools import product

from hcaudit.decider import VerdictKind, decide_paper
from hcaudit.graph import Digraph, emit_arclist
from hcaudit.oracle import held_karp

n = int(sys.argv[1]) if len(sys.argv) > 1 else 4
pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
counts = Counter()
smallest = None
for bits in product((0, 1), repeat=len(pairs)):
    d = Digraph(n, tuple(p for p, b in zip(pairs, bits) if b))
    kind = decide_paper(d).kind
    truth = held_karp(d).hamiltonian
    if truth and kind is not VerdictKind.CLAIMED_HAMILTONIAN:
        raise SystemExit(f"soundness violation:\n{emit_arclist(d)}")
    counts[(kind.value, truth)] += 1
    if kind is VerdictKind.CLAIMED_HAMILTONIAN and not truth:
        if smallest is None or d.m < smallest.m:
            smallest = d

for (kind, truth), c in sorted(counts.items()):
    print(f"{kind:20s} oracle={truth!s:5s} {c}")
if smallest is not None:
    print("fewest-arc discrepancy:\n" + emit_arclist(smallest), end="")
