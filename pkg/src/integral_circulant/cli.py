"""Command-line front end: ``icgraph <command> ...``.

Exit codes: 0 success, 1 a verification failed (a bound or claimed diameter
did not hold), 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings

from . import diameter as diam
from .extremal import DEFAULT_CAP, enumerate_integral, order_table
from .graph import (
    CirculantGraph,
    DivisorSet,
    from_divisor_set,
    graph_summary,
    integrality_decomposition,
    is_bipartite_bfs,
    is_connected,
)
from .quantum import evolution_report, identity_certificate, period, pst_search, RationalAngle
from .spectral import (
    bipartite_divisor_test,
    eigenvalues_exact,
    eigenvalues_numeric,
    is_bipartite_spectral,
    ratio_condition_numeric,
)


class VerificationError(Exception):
    def __init__(self, message: str, report: dict):
        super().__init__(message)
        self.report = report


def _ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def _tidy(obj):
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {str(k): _tidy(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_tidy(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(_tidy(obj), sort_keys=True, indent=2)


def _graph_from_args(args) -> CirculantGraph:
    if args.symbol is not None and args.divisors is not None:
        raise ValueError("give either --symbol or --divisors, not both")
    if args.divisors is not None:
        return from_divisor_set(DivisorSet(args.n, tuple(_ints(args.divisors))))
    if args.symbol is not None:
        return CirculantGraph.from_symbol(args.n, _ints(args.symbol))
    raise ValueError("one of --symbol or --divisors is required")


def _integral_divisors(args) -> DivisorSet:
    G = _graph_from_args(args)
    D = integrality_decomposition(G)
    if D is None:
        raise ValueError(f"{G!r} is not integral")
    return D


def analyze(G: CirculantGraph, pst: bool = False, max_q: int | None = None, seed: int = 0) -> dict:
    """Everything the package knows about one graph, as a JSON-ready dict."""
    D = integrality_decomposition(G)
    connected = is_connected(G)
    bundle: dict = {"graph": graph_summary(G), "integral": list(D.members) if D is not None else None}

    if D is not None:
        spec = eigenvalues_exact(D)
    else:
        spec = eigenvalues_numeric(G)
    bundle["spectrum"] = spec.as_dict()

    bip = {"bfs": is_bipartite_bfs(G), "spectral": None, "divisor_l0": None}
    if G.degree >= 1 and connected:
        bip["spectral"] = is_bipartite_spectral(spec, G.degree)
        if D is not None:
            bip["divisor_l0"] = bipartite_divisor_test(G.n, D)
    bundle["bipartite"] = bip

    if D is not None and connected:
        bundle["diameter"] = diam.check_diameter_bounds(D).as_dict()
    else:
        d = diam.diameter_sumset(G)
        bundle["diameter"] = {"n": G.n, "D": None, "diameter": None if d == math.inf else d}

    if D is None and G.n >= 4:
        hp = eigenvalues_numeric(G, dps=30)
        if len(hp.distinct()) >= 4:
            bundle["ratio_probe"] = ratio_condition_numeric(hp, seed=seed)

    bundle["evolution"] = evolution_report(G, pst=pst and D is not None, max_q=max_q).as_dict()

    problems = []
    if bip["spectral"] is not None and D is not None:
        verdicts = {bip["bfs"], bip["spectral"], bip["divisor_l0"] is not None}
        if len(verdicts) != 1:
            problems.append("bipartite verdicts disagree")
    if D is not None and connected and not (bundle["diameter"]["lower_ok"] and bundle["diameter"]["upper_ok"]):
        problems.append("diameter bounds violated")
    if problems:
        raise VerificationError("; ".join(problems), bundle)
    return bundle


def cmd_analyze(args) -> str:
    return dumps(analyze(_graph_from_args(args), pst=args.pst, max_q=args.max_q, seed=args.seed))


def cmd_table(args) -> str:
    records = order_table(args.kmax, args.cap, jobs=args.jobs)
    if args.format == "csv":
        buf = io.StringIO()
        buf.write(f"# cap={args.cap}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "N", "n", "D", "cap", "cap_limited"])
        for r in records:
            row = r.as_dict()
            D = " ".join(map(str, row["D"])) if row["D"] is not None else ""
            w.writerow([row["k"], row["N"] or "", row["n"] or "", D, row["cap"], int(r.cap_limited)])
        return buf.getvalue().rstrip("\n")
    rows = [dict(r.as_dict(), cap_limited=r.cap_limited) for r in records]
    return dumps({"cap": args.cap, "rows": rows})


def cmd_family(args) -> str:
    primes = _ints(args.primes)
    if args.kind == "diam2":
        D = diam.family_diam2(primes)
        expected = 2
    else:
        D = diam.family_diam_2r_plus_1(primes)
        expected = 2 * len(primes) + 1
    report = diam.check_diameter_bounds(D).as_dict()
    bfs = diam.diameter_bfs(from_divisor_set(D))
    report.update(kind=args.kind, primes=primes, expected=expected, diameter_bfs=bfs)
    report["confirmed"] = report["diameter"] == expected == bfs and report["lower_ok"] and report["upper_ok"]
    if not report["confirmed"]:
        raise VerificationError(f"expected diameter {expected}, found {report['diameter']}", report)
    return dumps(report)


def cmd_enumerate(args) -> str:
    sets = enumerate_integral(args.n, args.max_degree)
    if args.format == "csv":
        lines = ["n,D,degree"] + [f"{D.n},{' '.join(map(str, D.members))},{D.degree}" for D in sets]
        return "\n".join(lines)
    return dumps({"n": args.n, "divisor_sets": [{"D": list(D.members), "degree": D.degree} for D in sets]})


def cmd_pst(args) -> str:
    D = _integral_divisors(args)
    w = pst_search(D, args.max_q)
    max_q = args.max_q if args.max_q is not None else 2 * D.n
    return dumps({"n": D.n, "D": list(D.members), "max_q": max_q, "pst": w.as_dict() if w else None})


def cmd_period(args) -> str:
    D = _integral_divisors(args)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        t = period(D)
    return dumps({
        "n": D.n,
        "D": list(D.members),
        "period": t.as_dict(),
        "identity_at_2pi": identity_certificate(D, RationalAngle(2, 1)),
    })


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="icgraph", description="Integral circulant graph toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--symbol", help="comma-separated symbol, e.g. 1,5")
        p.add_argument("--divisors", help="comma-separated divisor set, e.g. 1,2")

    p = sub.add_parser("analyze", help="full report for one graph")
    graph_args(p)
    p.add_argument("--pst", action="store_true", help="also search for perfect state transfer")
    p.add_argument("--max-q", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("table", help="maximum order N(k) for k = 2..kmax")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("family", help="build and verify an extremal diameter family")
    p.add_argument("kind", choices=["diam2", "diam2rp1"])
    p.add_argument("primes", help="comma-separated distinct odd primes")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("enumerate", help="all connected integral circulants of order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("pst", help="search for perfect state transfer")
    graph_args(p)
    p.add_argument("--max-q", type=int, default=None)
    p.set_defaults(func=cmd_pst)

    p = sub.add_parser("period", help="period of the quantum walk")
    graph_args(p)
    p.set_defaults(func=cmd_period)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except VerificationError as exc:
        print(dumps({"error": str(exc), "report": exc.report}))
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
