"""Print (-1)^m z_mu theta_mu(q x r) as a polynomial in (q, s = -r, b) for every mu without 1s.

    python3 scripts/lassalle_table.py --max-size 5
"""

import argparse

from jacklab.lassalle import lassalle_rect_report, theta_rect_poly
from jacklab.partitions import all_partitions, multiplicity


def render(mu) -> str:
    m = sum(mu)
    poly = theta_rect_poly(mu).scale((-1) ** m).in_minus_r()
    terms = []
    for (i, j), c in sorted(poly.coeffs.items(), reverse=True):
        mono = "".join(s for s in (f"q^{i}" if i > 1 else "q" if i else "", f"s^{j}" if j > 1 else "s" if j else ""))
        terms.append(f"({c}){mono}")
    return " + ".join(terms)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-size", type=int, default=4)
    args = ap.parse_args()
    for m in range(2, args.max_size + 1):
        for mu in all_partitions(m):
            if multiplicity(mu, 1):
                continue
            rep = lassalle_rect_report(mu)
            flag = "ok" if rep["ok"] else "FAILED"
            print(f"mu={list(mu)} [{flag}]  {render(mu)}")


if __name__ == "__main__":
    main()
