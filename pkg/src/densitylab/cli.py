"""``densitylab`` command line: count, construct, curve, graphon, verify.

Exit status is 0 on success, 1 when a verification case fails and 2 on
invalid input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from math import comb
from pathlib import Path

import numpy as np

from . import _accel, constructions, counting, formulas, graphon, oracle
from .graph_core import ColoredCompleteGraph, LabeledGraph, OrderedGraph, color_class_density, format_colored, format_graph, read_graph

FAMILIES = ("sl", "sr", "spider", "banded", "clique", "coclique", "color1", "color2", "kst")
CURVES = ("star", "spider", "banded", "ordered-pair", "colored")
SUITES = ("ord", "rw", "product", "colored")


def _fmt(v) -> str:
    if isinstance(v, formulas.Unknown):
        return "unknown"
    return f"{float(v):.12g}"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _json_default(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.floating,)):
        return float(v)
    raise TypeError(type(v))


# ---------------------------------------------------------------------------
# count


def cmd_count(args) -> int:
    G = read_graph(args.input)
    rows: list[tuple[str, int, Fraction | None]] = []
    if isinstance(G, ColoredCompleteGraph):
        for c in range(1, G.q + 1):
            rows.append((f"color{c}", G.color_count(c), color_class_density(G, c) if G.n >= 2 else None))
        if args.kst:
            s, t = args.kst
            F = constructions.build_Kst_pattern(s, t)
            c = counting.count_colored_copies(G, F)
            rows.append((f"Kst_{s}_{t}", c, _density(G.n, F.n, c)))
        if args.colored_pattern:
            F = read_graph(args.colored_pattern)
            if not isinstance(F, ColoredCompleteGraph):
                raise ValueError("--colored-pattern needs a colored graph file")
            c = counting.count_colored_copies(G, F)
            rows.append(("colored_pattern", c, _density(G.n, F.n, c)))
    else:
        rows.append(("edges", G.m, G.density() if G.n >= 2 else None))
        for k in args.stars or []:
            c = counting.count_stars(G, k)
            rows.append((f"stars_{k}", c, counting.star_density(G, k) if G.n > k else None))
        for k in args.left_stars or []:
            c = counting.count_left_stars(G, k)
            rows.append((f"left_stars_{k}", c, _density(G.n, k + 1, c)))
        if args.M:
            c = counting.count_M(G)
            rows.append(("M", c, _density(G.n, 3, c)))
        if args.pattern:
            F = counting.OrderedPattern.from_graph(read_graph(args.pattern))
            c = counting.count_ordered_pattern(G, F)
            rows.append(("ordered_pattern", c, _density(G.n, F.s, c)))
        if args.induced:
            F = read_graph(args.induced)
            c = counting.count_induced(G, F)
            rows.append(("induced", c, _density(G.n, F.n, c)))
    if args.format == "json":
        payload = {"n": G.n, "counts": {name: {"count": c, "density": d} for name, c, d in rows}}
        _emit(json.dumps(payload, default=_json_default, indent=2) + "\n", args.out)
    else:
        lines = [f"{name}\t{c}\t{_fmt(d) if d is not None else '-'}" for name, c, d in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _density(n: int, s: int, count: int) -> Fraction | None:
    return Fraction(count, comb(n, s)) if n >= s else None


# ---------------------------------------------------------------------------
# construct


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise ValueError(f"family {args.family} needs {' '.join(missing)}")


def build_family(args) -> LabeledGraph | ColoredCompleteGraph:
    fam = args.family
    if fam == "kst":
        _need(args, "s", "t")
        return constructions.build_Kst_pattern(args.s, args.t)
    _need(args, "n")
    if fam in ("sl", "sr"):
        _need(args, "m")
        return (constructions.build_SL if fam == "sl" else constructions.build_SR)(args.n, args.m)
    if fam in ("spider", "banded"):
        _need(args, "x")
        return (constructions.build_spider if fam == "spider" else constructions.build_banded)(args.n, args.x)
    if fam in ("clique", "coclique"):
        _need(args, "gamma")
        f = constructions.build_clique_plus_isolated if fam == "clique" else constructions.build_cocliqued
        return f(args.n, args.gamma)
    _need(args, "xb", "xg")
    f = constructions.build_colored_case1 if fam == "color1" else constructions.build_colored_case2
    return f(args.n, args.xb, args.xg)


def cmd_construct(args) -> int:
    G = build_family(args)
    text = format_colored(G) if isinstance(G, ColoredCompleteGraph) else format_graph(G)
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# curve


def curve_rows(formula: str, grid: int, k: int = 2, s: int = 2, t: int = 2) -> tuple[list[str], list[list]]:
    if grid < 2:
        raise ValueError("grid needs at least two points")
    xs = [i / (grid - 1) for i in range(grid)]
    if formula == "star":
        return ["x", "value"], [[x, formulas.star_lower_bound(x, k)] for x in xs]
    if formula == "spider":
        return ["x", "value"], [[x, formulas.spider_limit(x)] for x in xs]
    if formula == "banded":
        return ["x", "value"], [[x, formulas.banded_limit(x)] for x in xs]
    if formula == "ordered-pair":
        rows = []
        for x in xs:
            a, b = formulas.spider_limit(x), formulas.banded_limit(x)
            rows.append([x, a, b, max(a, b)])
        return ["x", "spider", "banded", "max"], rows
    if formula == "colored":
        # along the diagonal x_b = x_g = x / 2
        return ["x", "value"], [[x, formulas.colored_max_density(s, t, x / 2, x / 2)] for x in xs]
    raise ValueError(f"unknown formula {formula!r}")


def cmd_curve(args) -> int:
    header, rows = curve_rows(args.formula, args.grid, args.k, args.s, args.t)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) for v in row])
    _emit(buf.getvalue(), args.out)
    return 0


# ---------------------------------------------------------------------------
# graphon


def _op_int(tokens, i, name):
    try:
        return int(tokens[i])
    except (IndexError, ValueError):
        raise ValueError(f"--op {name} needs an integer argument") from None


def _op_num(tokens, i, name):
    try:
        return Fraction(tokens[i]) if "/" in tokens[i] else float(tokens[i])
    except (IndexError, ValueError):
        raise ValueError(f"--op {name} needs a numeric argument") from None


def run_graphon_op(W: graphon.StepGraphon, tokens: list[str]) -> dict:
    """Apply one ``--op`` and return a JSON-ready report."""
    op = tokens[0]
    if op == "degrees":
        return {"degrees": list(graphon.degree_vector(W))}
    if op == "density":
        return {"edge_density": graphon.edge_density(W)}
    if op == "star":
        k = _op_int(tokens, 1, op)
        return {"k": k, "star_hom_density": graphon.star_hom_density(W, k), "rw_bound_holds": graphon.verify_rw_bound(W, k)}
    if op == "T":
        return {"T": graphon.T(W)}
    if op == "perturb":
        i, r, s = (_op_int(tokens, j, op) for j in (1, 2, 3))
        res = graphon.perturb(W, i, r, s)
        return {
            "epsilon": res.epsilon,
            "T_before": graphon.T(W),
            "T_after": graphon.T(res.result),
            "degrees": list(graphon.degree_vector(res.result)),
            "graphon": graphon.graphon_to_dict(res.result),
        }
    if op == "good":
        if len(tokens) < 4 or tokens[1] != "power":
            raise ValueError("--op good expects: good power K DELTA")
        k = _op_int(tokens, 2, op)
        delta = float(tokens[3])
        F = graphon.power(k)
        gamma = graphon.edge_density(W)
        return {"D": graphon.D(F, W), "MAX": graphon.MAX(gamma, F), "delta": delta, "delta_good": graphon.is_delta_good(F, W, delta)}
    if op == "sort":
        return {"graphon": graphon.graphon_to_dict(graphon.sort_by_degree(W))}
    if op == "complement":
        return {"graphon": graphon.graphon_to_dict(graphon.complement(W))}
    if op == "corner0":
        return {"graphon": graphon.graphon_to_dict(graphon.corner_zero(_op_num(tokens, 1, op), W))}
    if op == "corner1":
        return {"graphon": graphon.graphon_to_dict(graphon.corner_one(W, _op_num(tokens, 1, op)))}
    raise ValueError(f"unknown graphon op {op!r}")


def cmd_graphon(args) -> int:
    W = graphon.read_graphon(args.input)
    report = run_graphon_op(W, args.op)
    if list(report) == ["graphon"]:
        # transforms emit a graphon file that can be fed back in
        _emit(json.dumps(report["graphon"], indent=2) + "\n", args.out)
    elif args.format == "json":
        _emit(json.dumps(report, default=_json_default, indent=2) + "\n", args.out)
    else:
        lines = [f"{key}\t{_render(v)}" for key, v in report.items() if key != "graphon"]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _render(v) -> str:
    if isinstance(v, list):
        return " ".join(_render(x) for x in v)
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, Fraction):
        return f"{v} ({float(v):.12g})"
    return _fmt(v)


# ---------------------------------------------------------------------------
# verify


def _case(name: str, passed: bool, **detail) -> dict:
    return {"name": name, "passed": bool(passed), **detail}


def suite_ord(n: int, k: int) -> list[dict]:
    cases = []
    for nn in range(2, n + 1):
        for m in range(1, comb(nn, 2) + 1):
            for kk in range(1, k + 1):
                c = oracle.certify_theorem_ord(nn, m, kk)
                cases.append(_case(f"ord n={nn} m={m} k={kk}", c.ok, max=c.max_count, min=c.min_count, graphs=c.graphs))
    return cases


def suite_rw(trials: int, k: int, seed: int, parts: int = 6) -> list[dict]:
    failures = []
    for trial in range(trials):
        W = oracle.random_step_graphon(parts, [seed, trial])
        for kk in range(1, k + 1):
            if not graphon.verify_rw_bound(W, kk):
                failures.append({"trial": trial, "k": kk})
    return [_case(f"rw trials={trials} k<={k} parts<={parts}", not failures, failures=failures[:20])]


def suite_product(trials: int, n: int, seed: int) -> list[dict]:
    cases = []
    for s, t in ((2, 2), (2, 3)):
        bad = []
        for trial in range(trials):
            G = oracle.random_colored_host(n, 3, [seed, trial])
            pc = oracle.product_counts(G, s, t)
            if not pc.holds:
                bad.append({"trial": trial, "n_st": pc.n_st, "n_s": pc.n_s, "n_t": pc.n_t})
        cases.append(_case(f"product s={s} t={t} n={n} trials={trials}", not bad, failures=bad[:20]))
    return cases


def suite_colored(n: int) -> list[dict]:
    cases = []
    F = constructions.build_Kst_pattern(2, 2)
    G1 = constructions.build_colored_case1(n, 0.25, 0.25)
    d1 = float(counting.colored_density(G1, F))
    cases.append(_case(f"case1 n={n} K'_2,2 density vs 3/8", abs(d1 - 0.375) <= 0.02, value=d1, target=0.375))
    G2 = constructions.build_colored_case2(n, 0.4, 0.4)
    d2 = float(counting.colored_density(G2, F))
    target = formulas.colored_max_density(2, 2, 0.4, 0.4)
    cases.append(_case(f"case2 n={n} K'_2,2 density vs {target:.6g}", abs(d2 - target) <= 0.02, value=d2, target=target))
    for c, want in ((1, 0.4), (2, 0.4), (3, 0.2)):
        got = float(color_class_density(G2, c))
        cases.append(_case(f"case2 n={n} color {c} density vs {want}", abs(got - want) <= 0.01, value=got, target=want))
    return cases


def cmd_verify(args) -> int:
    if args.suite == "ord":
        cases = suite_ord(args.n or 6, args.k or 3)
    elif args.suite == "rw":
        cases = suite_rw(args.trials or 10_000, args.k or 5, args.seed)
    elif args.suite == "product":
        cases = suite_product(args.trials or 1000, args.n or 12, args.seed)
    else:
        cases = suite_colored(args.n or 800)
    passed = all(c["passed"] for c in cases)
    report = {"suite": args.suite, "backend": _accel.backend_name(), "passed": passed, "cases": cases}
    if args.format == "json":
        _emit(json.dumps(report, default=_json_default, indent=2) + "\n", args.out)
    else:
        lines = [f"{'PASS' if c['passed'] else 'FAIL'}  {c['name']}" for c in cases]
        lines.append(f"{args.suite}: {sum(c['passed'] for c in cases)}/{len(cases)} passed")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if passed else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="densitylab", description="Ordered and colored subgraph density toolkit.")
    p.add_argument("--threads", type=int, default=None, help="worker threads for compiled kernels")
    p.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count copies of small patterns in a graph file")
    c.add_argument("--in", dest="input", required=True)
    c.add_argument("--stars", type=int, action="append", metavar="K")
    c.add_argument("--left-stars", type=int, action="append", metavar="K")
    c.add_argument("--M", action="store_true", help="ordered path 1-2-3")
    c.add_argument("--pattern", help="ordered pattern graph file")
    c.add_argument("--induced", help="graph file of a pattern counted as induced copies")
    c.add_argument("--kst", type=int, nargs=2, metavar=("S", "T"))
    c.add_argument("--colored-pattern", help="colored pattern file")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--out")
    c.set_defaults(func=cmd_count)

    b = sub.add_parser("construct", help="write an extremal construction as a graph file")
    b.add_argument("--family", choices=FAMILIES, required=True)
    b.add_argument("--n", type=int)
    b.add_argument("--m", type=int)
    b.add_argument("--x", type=float)
    b.add_argument("--gamma", type=float)
    b.add_argument("--xb", type=float)
    b.add_argument("--xg", type=float)
    b.add_argument("--s", type=int)
    b.add_argument("--t", type=int)
    b.add_argument("--out")
    b.set_defaults(func=cmd_construct)

    v = sub.add_parser("curve", help="sample a limit-density formula on a grid as CSV")
    v.add_argument("--formula", choices=CURVES, required=True)
    v.add_argument("--grid", type=int, default=101)
    v.add_argument("--k", type=int, default=2)
    v.add_argument("--s", type=int, default=2)
    v.add_argument("--t", type=int, default=2)
    v.add_argument("--out")
    v.set_defaults(func=cmd_curve)

    g = sub.add_parser("graphon", help="evaluate or transform a step graphon file")
    g.add_argument("--in", dest="input", required=True)
    g.add_argument("--op", nargs="+", required=True, metavar="TOKEN")
    g.add_argument("--format", choices=("text", "json"), default="text")
    g.add_argument("--out")
    g.set_defaults(func=cmd_graphon)

    r = sub.add_parser("verify", help="run a verification suite")
    r.add_argument("--suite", choices=SUITES, required=True)
    r.add_argument("--n", type=int)
    r.add_argument("--k", type=int)
    r.add_argument("--trials", type=int)
    r.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.add_argument("--out")
    r.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _accel.set_threads(args.threads)
    try:
        return args.func(args)
    except (ValueError, IndexError, OSError, graphon.InapplicableMove) as exc:
        print(f"densitylab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
