"""Long-running positivity sweep over c and h coefficients.

The full range is k <= 5 with n <= 12 - k; most of it is far beyond a desk
machine in pure Python, so the sweep walks (k, n) in increasing cost and stops
at the time budget.  Results go to a JSONL file, one line per (k, n).

    python3 scripts/explore_positivity.py --kmax 3 --budget 600 --out sweep.jsonl
"""

import argparse
import json
import logging
import time

from jacklab.series import c_table, h_table

log = logging.getLogger("explore")


def sweep_cell(k: int, n: int) -> dict:
    start = time.time()
    bad = []
    counts = {}
    for kind, table in (("c", c_table(k, n)), ("h", h_table(k, n))):
        counts[kind] = len(table)
        for key, val in table.items():
            if not val.is_nonneg_integral():
                bad.append({"kind": kind, **key.to_json(), "value": val.to_json()})
    max_deg = max((v.degree for v in c_table(k, n).values()), default=-1)
    return {"k": k, "n": n, "nonzero": counts, "max_c_degree": max_deg,
            "violations": bad, "seconds": round(time.time() - start, 2)}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmax", type=int, default=5)
    ap.add_argument("--total", type=int, default=12, help="explore n <= total - k")
    ap.add_argument("--budget", type=float, default=600.0, help="seconds; stop before starting a new cell past it")
    ap.add_argument("--out", default=None)
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

    cells = sorted(((k, n) for k in range(1, args.kmax + 1) for n in range(1, args.total - k + 1)),
                   key=lambda kn: (kn[1] * (kn[0] + 1), kn))
    t0 = time.time()
    fh = open(args.out, "w") if args.out else None
    for k, n in cells:
        if time.time() - t0 > args.budget:
            log.info("budget exhausted before k=%d n=%d", k, n)
            break
        row = sweep_cell(k, n)
        status = "ok" if not row["violations"] else f"{len(row['violations'])} VIOLATIONS"
        log.info("k=%d n=%d: %s (%s keys, %.1fs)", k, n, status, row["nonzero"], row["seconds"])
        if fh:
            fh.write(json.dumps(row) + "\n")
            fh.flush()
    if fh:
        fh.close()


if __name__ == "__main__":
    main()
