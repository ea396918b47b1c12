"""The ffgcd command line: every experiment, reproducible, machine-readable.

Exit codes: 0 success, 1 domain error (message on stderr), 2 usage error.
Identical invocations produce byte-identical output; all randomness flows
from the seed (flag > config file > FFGCD_SEED > 0).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import FFGcdError
from .ffield import (
    DEFAULT_CARDINALITY_CAP,
    FieldCtx,
    make_field,
    prime_power_split,
)
from .fqpoly import DEFAULT_DEGREE_CAP, Poly, format_poly, parse_poly
from .gcdlab import (
    example1_identity,
    frobenius_scaling,
    gcd_degree_direct,
    integer_gcd_table,
    lower_bound_constant,
    multiplicative_independence,
    plan_exponents,
    scan_degrees,
    witness_certificate,
)
from .irreducibles import (
    DEFAULT_ENUMERATION_CAP,
    count_irreducibles_exact,
    count_progression,
    enumerate_irreducibles,
    factorize,
    phi_q,
)
from .residue import check_reciprocity, residue_symbol


@dataclass
class RunConfig:
    """Caps, seed, and output settings resolved from flags/config/env."""

    degree_cap: int = DEFAULT_DEGREE_CAP
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    cardinality_cap: int = DEFAULT_CARDINALITY_CAP
    seed: int = 0
    threads: int = 1
    format: str = "table"
    output: str | None = None


_CONFIG_KEYS = {"degree_cap", "enumeration_cap", "cardinality_cap", "seed"}


def _load_config(path: str) -> dict[str, int]:
    out: dict[str, int] = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise FFGcdError(f"{path}:{lineno}: expected key=value")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _CONFIG_KEYS:
                raise FFGcdError(f"{path}:{lineno}: unknown config key {key!r}")
            out[key] = int(value.strip())
    return out


def _resolve_config(args) -> RunConfig:
    cfg = RunConfig()
    env_seed = os.environ.get("FFGCD_SEED")
    if env_seed is not None:
        cfg.seed = int(env_seed)
    if getattr(args, "config", None):
        for key, value in _load_config(args.config).items():
            setattr(cfg, key, value)
    for key in ("degree_cap", "enumeration_cap", "cardinality_cap", "seed", "threads"):
        value = getattr(args, key, None)
        if value is not None:
            setattr(cfg, key, value)
    cfg.format = getattr(args, "format", "table")
    cfg.output = getattr(args, "output", None)
    return cfg


# ---------------------------------------------------------------------------
# argument helpers
# ---------------------------------------------------------------------------

def _field_from_args(args, cfg: RunConfig) -> FieldCtx:
    if getattr(args, "q", None) is not None:
        p, m = prime_power_split(args.q)
        return make_field(p, m, cfg.cardinality_cap)
    if getattr(args, "p", None) is None:
        raise FFGcdError("specify the field with --p [--m] or --q")
    return make_field(args.p, args.m or 1, cfg.cardinality_cap)


def _poly_arg(args, name: str, ctx: FieldCtx) -> Poly:
    return parse_poly(getattr(args, name), ctx)


def _partitions(total: int, threads: int) -> list[range]:
    threads = max(1, min(threads, total or 1))
    step = (total + threads - 1) // threads
    return [range(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _enumerate_partitioned(ctx, N, cfg: RunConfig, worker) -> list:
    """Run a per-code-range enumeration worker over thread partitions, in order."""
    total = ctx.q ** N
    parts = _partitions(total, cfg.threads)
    if len(parts) == 1:
        return worker(parts[0])
    with ThreadPoolExecutor(max_workers=len(parts)) as pool:
        chunks = list(pool.map(worker, parts))
    return [item for chunk in chunks for item in chunk]


# ---------------------------------------------------------------------------
# output rendering
# ---------------------------------------------------------------------------

def _emit(cfg: RunConfig, doc: dict, rows: tuple[list[str], list[list[str]]] | None = None):
    if cfg.format == "json":
        payload = dict(doc)
        if rows is not None:
            header, data = rows
            payload["rows"] = [dict(zip(header, r)) for r in data]
        text = json.dumps(payload) + "\n"
    elif cfg.format == "csv":
        lines = []
        if rows is not None:
            header, data = rows
            lines.append(",".join(header))
            lines.extend(",".join(str(x) for x in r) for r in data)
        else:
            lines.append("key,value")
            lines.extend(f"{k},{v}" for k, v in doc.items())
        text = "\n".join(lines) + "\n"
    else:
        lines = [f"{k}: {v}" for k, v in doc.items()]
        if rows is not None:
            header, data = rows
            widths = [max(len(h), *(len(str(r[i])) for r in data)) if data else len(h)
                      for i, h in enumerate(header)]
            lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
            for r in data:
                lines.append("  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip())
        text = "\n".join(lines) + "\n"
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_field_info(args, cfg):
    ctx = _field_from_args(args, cfg)
    _emit(cfg, {"p": ctx.p, "m": ctx.m, "q": ctx.q,
                "modulus": ctx.modulus_text() or "-"})


def _cmd_irr_count(args, cfg):
    if getattr(args, "q", None) is not None:
        q = args.q
    else:
        if args.p is None:
            raise FFGcdError("specify the field with --p [--m] or --q")
        q = args.p ** (args.m or 1)
    doc = {"q": q, "N": args.N, "exact": count_irreducibles_exact(q, args.N)}
    if args.enumerate:
        ctx = _field_from_args(args, cfg)

        def worker(chunk):
            return list(enumerate_irreducibles(ctx, args.N, cfg.enumeration_cap, chunk))

        doc["enumerated"] = len(_enumerate_partitioned(ctx, args.N, cfg, worker))
    _emit(cfg, doc)


def _cmd_irr_list(args, cfg):
    ctx = _field_from_args(args, cfg)

    def worker(chunk):
        return [format_poly(f)
                for f in enumerate_irreducibles(ctx, args.N, cfg.enumeration_cap, chunk)]

    polys = _enumerate_partitioned(ctx, args.N, cfg, worker)
    _emit(cfg, {"q": ctx.q, "N": args.N, "count": len(polys)},
          (["poly"], [[s] for s in polys]))


def _cmd_dirichlet_count(args, cfg):
    ctx = _field_from_args(args, cfg)
    mu = _poly_arg(args, "mu", ctx)
    alpha = _poly_arg(args, "alpha", ctx)
    report = count_progression(ctx, args.N, alpha, mu,
                               per_class=args.per_class,
                               enumeration_cap=cfg.enumeration_cap)
    _emit(cfg, report.to_json_dict(),
          (["class", "exact", "main_term", "deviation"], report.to_csv_rows()))


def _cmd_phi(args, cfg):
    ctx = _field_from_args(args, cfg)
    mu = _poly_arg(args, "mu", ctx)
    _emit(cfg, {"q": ctx.q, "mu": format_poly(mu), "phi": phi_q(mu)})


def _cmd_factor(args, cfg):
    ctx = _field_from_args(args, cfg)
    f = _poly_arg(args, "f", ctx)
    fac = factorize(f, cfg.seed)
    _emit(cfg, {"q": ctx.q, "f": format_poly(f), "unit": str(fac.unit)},
          (["prime", "multiplicity"],
           [[format_poly(p), str(e)] for p, e in fac.factors]))


def _cmd_symbol(args, cfg):
    ctx = _field_from_args(args, cfg)
    alpha = _poly_arg(args, "alpha", ctx)
    pi = _poly_arg(args, "pi", ctx)
    val = residue_symbol(alpha, pi, args.r)
    _emit(cfg, {"q": ctx.q, "alpha": format_poly(alpha), "pi": format_poly(pi),
                "r": args.r, "symbol": str(val), "is_rth_power": val.code == 1})


def _cmd_reciprocity_verify(args, cfg):
    ctx = _field_from_args(args, cfg)
    mu = _poly_arg(args, "mu", ctx)
    report = check_reciprocity(mu, args.r, args.bound, cfg.enumeration_cap)
    _emit(cfg, report.to_json_dict())


def _cmd_plan(args, cfg):
    plan = plan_exponents(args.q, args.k, args.n0, cfg.cardinality_cap)
    doc = plan.to_json_dict()
    doc["n_at_N1"] = plan.exponent(1)
    _emit(cfg, doc)


def _cmd_gcd_degree(args, cfg):
    ctx = _field_from_args(args, cfg)
    a = _poly_arg(args, "a", ctx)
    b = _poly_arg(args, "b", ctx)
    deg = gcd_degree_direct(a, b, args.n, cfg.degree_cap)
    _emit(cfg, {"q": ctx.q, "a": format_poly(a), "b": format_poly(b),
                "n": args.n, "deg_gcd": deg})


def _cmd_certificate(args, cfg):
    plan = plan_exponents(args.q, args.k, args.n0, cfg.cardinality_cap)
    p, m = prime_power_split(args.q)
    ctx = make_field(p, m, cfg.cardinality_cap)
    a = _poly_arg(args, "a", ctx)
    b = _poly_arg(args, "b", ctx)
    cert = witness_certificate(a, b, plan, args.N,
                               degree_cap=cfg.degree_cap,
                               enumeration_cap=cfg.enumeration_cap,
                               cardinality_cap=cfg.cardinality_cap,
                               seed=cfg.seed, threads=cfg.threads)
    _emit(cfg, cert.to_json_dict())


def _cmd_example1(args, cfg):
    ctx = _field_from_args(args, cfg)
    report = example1_identity(ctx, args.N, cfg.degree_cap)
    _emit(cfg, report.to_json_dict())


def _cmd_frobenius(args, cfg):
    ctx = _field_from_args(args, cfg)
    a = _poly_arg(args, "a", ctx)
    b = _poly_arg(args, "b", ctx)
    report = frobenius_scaling(a, b, args.mexp, args.i, cfg.degree_cap)
    _emit(cfg, report.to_json_dict())


def _cmd_indep(args, cfg):
    ctx = _field_from_args(args, cfg)
    a = _poly_arg(args, "a", ctx)
    b = _poly_arg(args, "b", ctx)
    _emit(cfg, {"q": ctx.q, "a": format_poly(a), "b": format_poly(b),
                "independent": multiplicative_independence(a, b, cfg.seed)})


def _cmd_scan(args, cfg):
    ctx = _field_from_args(args, cfg)
    a = _poly_arg(args, "a", ctx)
    b = _poly_arg(args, "b", ctx)
    rows = scan_degrees(a, b, args.n_from, args.n_to, cfg.degree_cap)
    _emit(cfg, {"q": ctx.q, "a": format_poly(a), "b": format_poly(b)},
          (["n", "deg_gcd"], [[str(n), str(d)] for n, d in rows]))


def _cmd_trichotomy(args, cfg):
    rows = integer_gcd_table(args.a_int, args.b_int, args.n_max)
    _emit(cfg, {"a": args.a_int, "b": args.b_int},
          (["n", "gcd", "log_gcd_over_n"],
           [[str(n), str(g), repr(v)] for n, g, v in rows]))


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default="table",
                        help="output format (default table)")
    common.add_argument("--output", help="write output to this path instead of stdout")
    common.add_argument("--seed", type=int, help="randomness seed (default FFGCD_SEED or 0)")
    common.add_argument("--threads", type=int, help="partition enumerations into K ranges")
    common.add_argument("--degree-cap", dest="degree_cap", type=int,
                        help=f"max expanded degree (default {DEFAULT_DEGREE_CAP})")
    common.add_argument("--enumeration-cap", dest="enumeration_cap", type=int,
                        help=f"max enumeration candidates (default {DEFAULT_ENUMERATION_CAP})")
    common.add_argument("--cardinality-cap", dest="cardinality_cap", type=int,
                        help=f"max field cardinality (default {DEFAULT_CARDINALITY_CAP})")
    common.add_argument("--config", help="key=value file presetting caps/seed")

    field = argparse.ArgumentParser(add_help=False)
    field.add_argument("--p", type=int, help="field characteristic")
    field.add_argument("--m", type=int, default=1, help="extension degree (default 1)")
    field.add_argument("--q", type=int, help="field cardinality as a prime power")

    parser = argparse.ArgumentParser(
        prog="ffgcd",
        description="Compute and certify lower bounds on deg gcd(a^n-1, b^n-1) over F_q[T].")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("field-info", parents=[common, field],
                        help="show the canonical presentation of F_{p^m}")
    sp.set_defaults(func=_cmd_field_info)

    sp = sub.add_parser("irr-count", parents=[common, field],
                        help="count monic irreducibles of degree N")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--enumerate", action="store_true",
                    help="also count by exhaustive enumeration")
    sp.set_defaults(func=_cmd_irr_count)

    sp = sub.add_parser("irr-list", parents=[common, field],
                        help="list monic irreducibles of degree N in lex order")
    sp.add_argument("--N", type=int, required=True)
    sp.set_defaults(func=_cmd_irr_list)

    sp = sub.add_parser("dirichlet-count", parents=[common, field],
                        help="count degree-N irreducibles congruent to alpha mod mu")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--alpha", default="1")
    sp.add_argument("--per-class", dest="per_class", action="store_true",
                    help="report every invertible residue class")
    sp.set_defaults(func=_cmd_dirichlet_count)

    sp = sub.add_parser("phi", parents=[common, field],
                        help="order of the unit group of F_q[T]/(mu)")
    sp.add_argument("--mu", required=True)
    sp.set_defaults(func=_cmd_phi)

    sp = sub.add_parser("factor", parents=[common, field],
                        help="factor a polynomial into monic irreducibles")
    sp.add_argument("--f", required=True)
    sp.set_defaults(func=_cmd_factor)

    sp = sub.add_parser("symbol", parents=[common, field],
                        help="r-th power residue symbol (alpha/pi)_r")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--pi", required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.set_defaults(func=_cmd_symbol)

    sp = sub.add_parser("reciprocity-verify", parents=[common, field],
                        help="check the reciprocity implication up to a degree bound")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--bound", type=int, required=True)
    sp.set_defaults(func=_cmd_reciprocity_verify)

    sp = sub.add_parser("plan", parents=[common],
                        help="exponent plan (r, Q, n(Q^N)) for a congruence class")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n0", type=int, required=True)
    sp.set_defaults(func=_cmd_plan)

    sp = sub.add_parser("gcd-degree", parents=[common, field],
                        help="exact deg gcd(a^n-1, b^n-1) by expansion")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=_cmd_gcd_degree)

    sp = sub.add_parser("certificate", parents=[common],
                        help="witness certificate for the planned exponent family")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n0", type=int, required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.set_defaults(func=_cmd_certificate)

    sp = sub.add_parser("example1", parents=[common, field],
                        help="verify the T/(T+1) identities at n = q^N - 1")
    sp.add_argument("--N", type=int, required=True)
    sp.set_defaults(func=_cmd_example1)

    sp = sub.add_parser("frobenius", parents=[common, field],
                        help="verify gcd scaling under p-power exponents")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--mexp", type=int, required=True, help="base exponent m")
    sp.add_argument("--i", type=int, required=True, help="p-power index i")
    sp.set_defaults(func=_cmd_frobenius)

    sp = sub.add_parser("indep", parents=[common, field],
                        help="decide multiplicative independence of a and b")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.set_defaults(func=_cmd_indep)

    sp = sub.add_parser("scan", parents=[common, field],
                        help="deg gcd(a^n-1, b^n-1) over a range of n")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--from", dest="n_from", type=int, required=True)
    sp.add_argument("--to", dest="n_to", type=int, required=True)
    sp.set_defaults(func=_cmd_scan)

    sp = sub.add_parser("trichotomy", parents=[common],
                        help="integer gcd(a^n-1, b^n-1) table for comparison")
    sp.add_argument("--a-int", dest="a_int", type=int, required=True)
    sp.add_argument("--b-int", dest="b_int", type=int, required=True)
    sp.add_argument("--n-max", dest="n_max", type=int, default=2000)
    sp.set_defaults(func=_cmd_trichotomy)

    return parser


def dispatch(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 0 on --help, 2 on usage errors
        return int(exc.code or 0)
    try:
        cfg = _resolve_config(args)
        args.func(args, cfg)
        return 0
    except FFGcdError as exc:
        print(f"ffgcd: {exc.name}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"ffgcd: invalid value: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
