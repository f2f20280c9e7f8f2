#!/usr/bin/env python3
"""Cross-validate the elimination recognizer against a forbidden-subgraph
oracle on every graph on n labeled vertices.

The oracle is vectorized and independent of the library: a graph is
threshold iff no 4 vertices induce a 2K2, P4 or C4, and each of those is
identified by its degree sequence at its edge count.  n=7 sweeps all 2^21
graphs in well under a minute.
"""

import argparse
import time
from itertools import combinations

import numpy as np

from pc4 import eliminate_rows


def forbidden_table():
    local = tuple(combinations(range(4), 2))
    forb = np.zeros(64, dtype=bool)
    for code in range(64):
        deg = [0, 0, 0, 0]
        e = 0
        for i, (a, b) in enumerate(local):
            if code >> i & 1:
                deg[a] += 1
                deg[b] += 1
                e += 1
        ds = sorted(deg)
        forb[code] = (
            (e == 2 and ds == [1, 1, 1, 1])
            or (e == 3 and ds == [1, 1, 2, 2])
            or (e == 4 and ds == [2, 2, 2, 2])
        )
    return local, forb


def oracle(n: int) -> np.ndarray:
    pairs = tuple(combinations(range(n), 2))
    bit_of = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.uint32)
    ok = np.ones(masks.shape, dtype=bool)
    local, forb = forbidden_table()
    for sub in combinations(range(n), 4):
        code = np.zeros(masks.shape, dtype=np.uint8)
        for i, (a, b) in enumerate(local):
            gb = bit_of[(sub[a], sub[b])]
            code |= ((masks >> gb) & 1).astype(np.uint8) << i
        ok &= ~forb[code]
    return ok


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=6, choices=range(4, 8))
    args = ap.parse_args(argv)
    n = args.n

    t0 = time.perf_counter()
    ok = oracle(n)
    t_oracle = time.perf_counter() - t0
    print(f"oracle: {int(ok.sum())} threshold graphs out of {len(ok)} ({t_oracle:.2f}s)")

    pairs = tuple(combinations(range(n), 2))
    t0 = time.perf_counter()
    mismatches = 0
    rows = [0] * n
    for mask in range(len(ok)):
        for v in range(n):
            rows[v] = 0
        for i, (a, b) in enumerate(pairs):
            if mask >> i & 1:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
        verdict, _ = eliminate_rows(n, rows)
        if verdict != ok[mask]:
            mismatches += 1
            if mismatches <= 5:
                print(f"  disagreement on mask {mask:#x}")
    t_sweep = time.perf_counter() - t0
    print(f"elimination sweep: {mismatches} disagreements ({t_sweep:.2f}s)")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
