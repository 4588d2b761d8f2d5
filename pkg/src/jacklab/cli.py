"""Command-line interface: ``jacklab <command> ...`` (see ``jacklab -h``)."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .partitions import Partition, all_partitions, parse_partition
from .symfunc import JackCache, set_default_cache


@dataclass
class Config:
    cache_dir: Optional[str] = None
    threads: int = 1
    output: Optional[str] = None
    format: str = "json"


class UsageError(ValueError):
    pass


def parse_partition_list(text: str, n: Optional[int] = None, count: Optional[int] = None) -> List[Partition]:
    """Several partitions: ``"2,1;3"``, or without ``;`` consecutive parts grouped into blocks of size ``n``.

    When ``n`` is unknown but ``count`` is, ``n`` is taken as total / count.
    """
    text = text.strip()
    if ";" in text:
        return [parse_partition(chunk) for chunk in text.split(";")]
    try:
        parts = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"malformed partition list {text!r}") from None
    if n is None:
        if not count or sum(parts) % count:
            raise UsageError(f"cannot split {text!r} into partitions; separate them with ';'")
        n = sum(parts) // count
    groups, cur = [], []
    for x in parts:
        cur.append(x)
        if sum(cur) == n:
            groups.append(parse_partition(",".join(map(str, cur))))
            cur = []
        elif sum(cur) > n:
            raise UsageError(f"cannot split {text!r} into partitions of {n}; separate them with ';'")
    if cur or not groups:
        raise UsageError(f"cannot split {text!r} into partitions of {n}; separate them with ';'")
    return groups


def _size_checked(lam: Partition, mus: Sequence[Partition]) -> None:
    bad = [list(m) for m in mus if sum(m) != sum(lam)]
    if bad:
        raise UsageError(f"size mismatch: {bad} vs |lambda| = {sum(lam)}")


# -- commands ---------------------------------------------------------------------
def cmd_jack(args, cfg: Config):
    from .symfunc import jack

    lams = [parse_partition(args.lam)] if args.lam else list(all_partitions(args.n))
    if args.n is not None and any(sum(l) != args.n for l in lams):
        raise UsageError("--lambda is not a partition of --n")
    return [{"lambda": list(l), "p": jack(l).to_json()} for l in lams]


def _coeff_keys(args):
    from .series import ProfileKey, profile_keys

    if args.lam is None:
        if args.n is None:
            raise UsageError("give --n, or --lambda with --mus")
        return list(profile_keys(args.k, args.n))
    lam = parse_partition(args.lam)
    if args.n is not None and sum(lam) != args.n:
        raise UsageError("--lambda is not a partition of --n")
    if args.mus is None:
        return [key for key in profile_keys(args.k, sum(lam)) if key.lam == lam]
    mus = parse_partition_list(args.mus, n=sum(lam))
    if len(mus) != args.k + 1:
        raise UsageError(f"--k {args.k} needs {args.k + 1} mu partitions, got {len(mus)}")
    _size_checked(lam, mus)
    return [ProfileKey(lam, tuple(mus))]


def cmd_coeff(args, cfg: Config):
    from .series import coeff_c, coeff_h

    fn = coeff_c if args.kind == "c" else coeff_h
    recs = [fn(args.k, key) for key in _coeff_keys(args)]
    if len(recs) == 1 and args.mus is not None:
        return recs[0]
    return recs


def cmd_marginal(args, cfg: Config):
    from .series import marginal_c, marginal_h

    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    _size_checked(lam, [mu])
    lengths = [int(x) for x in args.lengths.split(",")]
    if len(lengths) != args.k:
        raise UsageError(f"--k {args.k} needs {args.k} lengths")
    fn = marginal_c if args.kind == "c" else marginal_h
    rec = fn(args.k, lam, mu, lengths)
    return {"lambda": list(lam), "mu": list(mu), "lengths": lengths, args.kind: {"coeffs": rec.value.to_json()}}


def cmd_enum_f(args, cfg: Config):
    from .matchings import enumerate_F, is_bipartite

    lam = parse_partition(args.lam)
    mus = parse_partition_list(args.mus, n=sum(lam))
    if len(mus) < 2:
        raise UsageError("need at least two mu partitions (k >= 1)")
    _size_checked(lam, mus)
    elems = enumerate_F(lam, mus, bipartite_only=args.bipartite_only)
    return {
        "lambda": list(lam),
        "mus": [list(m) for m in mus],
        "bipartite_only": args.bipartite_only,
        "count": len(elems),
        "elements": [
            {"deltas": [d.to_json() for d in tup], "bipartite": all(is_bipartite(d) for d in tup)} for tup in elems
        ],
    }


def cmd_count_const(args, cfg: Config):
    from .constellations import count_rooted_connected

    prof = parse_partition_list(args.profile, count=args.k + 2)
    if len(prof) != args.k + 2:
        raise UsageError(f"a {args.k}-constellation profile has {args.k + 2} partitions")
    _size_checked(prof[0], prof[1:])
    flt = True if args.orientable else None
    return {
        "k": args.k,
        "profile": [list(p) for p in prof],
        "orientable_only": bool(args.orientable),
        "count": count_rooted_connected(args.k, prof, flt),
    }


def cmd_theta(args, cfg: Config):
    from .lassalle import ThetaRecord, lassalle_rect_report, theta, theta_rect, theta_rect_poly
    from .partitions import rectangular

    mu = parse_partition(args.mu)
    if args.rect:
        try:
            q, r = (int(x) for x in args.rect.split(","))
        except ValueError:
            raise UsageError("--rect expects Q,R") from None
        if q < 1 or r < 1:
            raise UsageError("--rect expects positive Q,R")
        if 1 in mu:
            # parts equal to 1 need the full-size Jack polynomial
            return theta(mu, rectangular(q, r)).to_json()
        return ThetaRecord(mu, rectangular(q, r), theta_rect(mu, q, r)).to_json()
    if args.poly:
        out = lassalle_rect_report(mu)
        out["poly_q_r"] = theta_rect_poly(mu).to_json()
        return out
    if args.lam:
        return theta(mu, parse_partition(args.lam)).to_json()
    raise UsageError("theta needs one of --rect, --poly, --lambda")


def cmd_verify(args, cfg: Config):
    from .verify import run_suite

    rep = run_suite(args.suite, args.kmax, args.nmax, map_n_max=args.map_nmax, jack_n_max=args.jack_nmax,
                    threads=cfg.threads)
    return rep


# -- output -------------------------------------------------------------------------
def _to_csv(payload) -> str:
    rows = payload if isinstance(payload, list) else [payload]
    table = []
    for rec in rows:
        d = rec.to_json() if hasattr(rec, "to_json") else rec
        kind = "c" if "c" in d else "h"
        coeffs = d[kind]["coeffs"]
        if "mus" in d:
            keycols = [",".join(map(str, d["lambda"])), ";".join(",".join(map(str, m)) for m in d["mus"])]
        else:
            keycols = [",".join(map(str, d["lambda"])), ",".join(map(str, d["mu"])), ",".join(map(str, d["lengths"]))]
        table.append((keycols, coeffs))
    width = max((len(c) for _, c in table), default=0)
    nkeys = len(table[0][0]) if table else 2
    header = ["lambda", "mus"] if nkeys == 2 else ["lambda", "mu", "lengths"]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header + [f"c{i}" for i in range(width)])
    for keycols, coeffs in table:
        w.writerow(keycols + list(coeffs) + ["0/1"] * (width - len(coeffs)))
    return buf.getvalue()


def _render(payload, fmt: str, command: str, pretty: bool = False) -> str:
    if fmt == "csv":
        if command not in ("coeff", "marginal"):
            raise UsageError("--format csv is only available for coeff and marginal")
        return _to_csv(payload)
    if isinstance(payload, list):
        payload = [p.to_json() if hasattr(p, "to_json") else p for p in payload]
    elif hasattr(payload, "to_json"):
        payload = payload.to_json()
    if pretty:
        return json.dumps(payload, indent=2) + "\n"
    return json.dumps(payload, separators=(",", ":")) + "\n"


def _add_common(p: argparse.ArgumentParser, default) -> None:
    kw = {} if default is None else {"default": default}
    p.add_argument("--cache-dir", help="directory for the on-disk Jack cache (JACKLAB_CACHE overrides)", **kw)
    p.add_argument("--threads", type=int, help="worker processes for enumeration", **kw)
    p.add_argument("--output", help="write to this file instead of stdout", **kw)
    p.add_argument("--format", choices=("json", "csv"), **({"default": "json"} if default is None else kw))
    p.add_argument("--pretty", action="store_true", help="indented JSON", **kw)
    p.add_argument("-v", "--verbose", action="store_true", **kw)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="jacklab", description=__doc__)
    _add_common(ap, None)
    # the same options are accepted after the subcommand name as well
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser(parents=[common], name="jack", help="Jack polynomials in the power-sum basis")
    p.add_argument("--n", type=int)
    p.add_argument("--lambda", dest="lam")
    p.set_defaults(func=cmd_jack)

    p = sub.add_parser(parents=[common], name="coeff", help="c or h coefficients")
    p.add_argument("kind", choices=("c", "h"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--mus", help="mu0..muk, e.g. '2;1,1' (or '2,2' when unambiguous)")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser(parents=[common], name="marginal", help="marginal sums over mu^i with prescribed lengths")
    p.add_argument("kind", choices=("c", "h"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--lengths", required=True)
    p.set_defaults(func=cmd_marginal)

    p = sub.add_parser(parents=[common], name="enum-f", help="enumerate the matching tuples of a profile")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mus", required=True)
    p.add_argument("--bipartite-only", action="store_true")
    p.set_defaults(func=cmd_enum_f)

    p = sub.add_parser(parents=[common], name="count-const", help="rooted connected k-constellations of a profile")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--profile", required=True, help="lambda;mu0;...;muk")
    p.add_argument("--orientable", action="store_true")
    p.set_defaults(func=cmd_count_const)

    p = sub.add_parser(parents=[common], name="theta", help="power-sum coefficients of Jack polynomials")
    p.add_argument("--mu", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--rect", help="Q,R: the rectangle with Q parts equal to R")
    g.add_argument("--poly", action="store_true", help="interpolated polynomial in (q, r)")
    g.add_argument("--lambda", dest="lam")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser(parents=[common], name="verify", help="run a verification suite")
    p.add_argument("suite")
    p.add_argument("--kmax", type=int, default=1)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--map-nmax", type=int, default=None, help="size bound for constellation enumeration")
    p.add_argument("--jack-nmax", type=int, default=8, help="size bound for rectangle checks")
    p.set_defaults(func=cmd_verify)
    return ap


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    cfg = Config(
        cache_dir=os.environ.get("JACKLAB_CACHE") or args.cache_dir,
        threads=args.threads if args.threads is not None else (os.cpu_count() or 1),
        output=args.output,
        format=args.format,
    )
    if cfg.threads < 1:
        ap.error("--threads must be positive")
    if cfg.cache_dir:
        set_default_cache(JackCache(cfg.cache_dir))
    try:
        payload = args.func(args, cfg)
        text = _render(payload, cfg.format, args.command, args.pretty)
    except ValueError as exc:  # UsageError, malformed partitions, unknown suite
        ap.error(str(exc))
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify":
        return 0 if payload.passed else 1
    return 0


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
