"""Command-line front end: ``groupsat <subcommand> ...``.

Exit codes: 0 success, 2 usage, 3 malformed input, 4 missing truth value,
5 size cap or budget exceeded, 6 variable cap of the oracle exceeded,
7 unreadable network file, 8 expression not hosted by the network.
"""

from __future__ import annotations

import argparse
import io
import sys

from . import bench
from .dsat import ComparisonStats, CsatAborted, cnf_satisfiable_via_dnf, dnf_satisfiable
from .expr import (
    DecomposeError,
    EnumerationBudgetError,
    EvaluationError,
    LengthMeasure,
    ParseError,
    coded,
    evaluate,
    length,
    parse,
)
from .network import (
    COST_MODELS,
    DEFAULT_NODE_BUDGET,
    POLICIES,
    NetworkFileError,
    NotInNetworkError,
    UnresolvedCellError,
    build,
    load,
    save,
)
from .normal_forms import (
    DEFAULT_CLAUSE_CAP,
    ClauseCapError,
    CnfExpr,
    DimacsError,
    DnfExpr,
    cnf_from_expr,
    dnf_from_expr,
    dumps_dimacs,
    loads_dimacs,
    to_cnf,
    to_dnf,
)
from .oracle import OracleCapError, classify

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_EVAL, EXIT_CAP, EXIT_ORACLE, EXIT_FILE, EXIT_MISSING = (
    0, 2, 3, 4, 5, 6, 7, 8,
)

_ERRORS = [
    (NetworkFileError, EXIT_FILE),
    (ParseError, EXIT_INPUT),
    (DimacsError, EXIT_INPUT),
    (DecomposeError, EXIT_INPUT),
    (EvaluationError, EXIT_EVAL),
    (ClauseCapError, EXIT_CAP),
    (CsatAborted, EXIT_CAP),
    (EnumerationBudgetError, EXIT_CAP),
    (OracleCapError, EXIT_ORACLE),
    (NotInNetworkError, EXIT_MISSING),
    (UnresolvedCellError, EXIT_MISSING),
]


class UsageError(Exception):
    pass


def _assignment(pairs: list[str]) -> dict[int, int]:
    out = {}
    for pair in pairs or ():
        name, _, bit = pair.partition("=")
        name = name.strip()
        if bit not in ("0", "1") or len(name) < 2 or name[0] != "x" or set(name[1:]) != {"1"}:
            raise UsageError(f"bad --assign {pair!r}; expected e.g. x11=1")
        out[len(name) - 1] = int(bit)
    return out


def _format_witness(witness: dict[int, int] | None) -> str:
    if witness is None:
        return "-"
    return " ".join(f"{coded(i)}={b}" for i, b in sorted(witness.items()))


def _read_normal_form(args, want):
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            nf = loads_dimacs(fh.read())
        if not isinstance(nf, want):
            raise UsageError(f"{args.file} holds a {type(nf).__name__}, expected {want.__name__}")
        return nf
    if not args.expr:
        raise UsageError("give an expression or --file")
    e = parse(args.expr)
    try:
        return dnf_from_expr(e) if want is DnfExpr else cnf_from_expr(e)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, out_path: str | None, stdout) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def _cmd_eval(args, out):
    e = parse(args.expr)
    out.write(f"{evaluate(e, _assignment(args.assign))}\n")
    if args.measure:
        out.write(f"length {length(e, LengthMeasure(args.measure))}\n")


def _cmd_classify(args, out):
    e = parse(args.expr)
    out.write(classify(e).symbol + "\n")
    if args.measure:
        out.write(f"length {length(e, LengthMeasure(args.measure))}\n")


def _cmd_normal_form(args, out):
    e = parse(args.expr)
    convert = to_dnf if args.command == "dnf" else to_cnf
    nf = convert(e, cap=args.cap)
    _emit(dumps_dimacs(nf) if args.dimacs else f"{nf}\n", args.out, out)


def _cmd_dsat(args, out):
    dnf = _read_normal_form(args, DnfExpr)
    sat, witness, stats = dnf_satisfiable(dnf, early_exit=not args.full_scan)
    out.write(("SAT" if sat else "UNSAT") + "\n")
    out.write(_format_witness(witness) + "\n")
    out.write(ComparisonStats.csv_header() + "\n" + stats.csv_row() + "\n")


def _cmd_csat(args, out):
    cnf = _read_normal_form(args, CnfExpr)
    result = cnf_satisfiable_via_dnf(cnf, cap=args.cap, early_exit=not args.full_scan)
    out.write(("SAT" if result.satisfiable else "UNSAT") + "\n")
    out.write(_format_witness(result.witness) + "\n")
    out.write(f"blowup {result.blowup.numerator}/{result.blowup.denominator}\n")
    out.write(ComparisonStats.csv_header() + "\n" + result.stats.csv_row() + "\n")


def _cmd_build_net(args, out):
    net = build(
        args.k,
        args.n,
        policy=args.policy,
        cost_model=args.cost_model,
        budget=args.budget,
        extra_parens=args.extra_parens,
    )
    if net.aborted:
        args.err.write(f"budget of {args.budget} trie nodes exceeded at frontier {net.frontier}\n")
        return EXIT_CAP
    save(net, args.out)
    m = net.metrics
    out.write(f"cells={m.cells} trie_nodes={m.trie_nodes} build_ops={m.build_ops}\n")


def _cmd_query_net(args, out):
    net = load(args.network)
    status, steps = net.query(args.expr, args.cost_model)
    out.write(f"{status.symbol} {steps}\n")


def _cmd_net_stats(args, out):
    net = load(args.network)
    m = net.metrics
    out.write("length,cells,cumulative_cells,unresolved_fraction\n")
    for n, total in m.cumulative_cells().items():
        out.write(f"{n},{m.cells_by_length[n]},{total},{m.unresolved_fraction(n):.6f}\n")
    out.write(
        f"# k={net.variable_count} n={net.frontier} policy={net.policy} cells={m.cells} "
        f"trie_nodes={m.trie_nodes} build_ops={m.build_ops} base_cells={m.base_cells} "
        f"fast_path_cells={m.fast_path_cells} fallback_cells={m.fallback_cells}\n"
    )


def _cmd_bench(args, out):
    s = args.scenario
    common = dict(timing=args.timing)
    if s == "net-growth":
        params = dict(k=args.k, n_min=args.n_min, n_max=args.n_max, policy=args.policy,
                      budget=args.budget)
    elif s == "dsat-scaling":
        params = dict(sizes=args.sizes, repeats=args.repeats, seed=args.seed,
                      n_vars=args.vars, max_width=args.width)
    elif s == "cnf-blowup":
        params = dict(k_min=args.k_min, k_max=args.k_max, cap=args.cap)
    else:
        params = dict(k=args.k, n=args.n_max, samples=args.samples, seed=args.seed,
                      expressions=args.expr or (), cost_model=args.cost_model,
                      budget=args.budget)
    records = bench.SCENARIOS[s](**params, **common)
    text = _csv(records)
    _emit(text, args.out, out)
    if any(r.aborted for r in records):
        return EXIT_CAP


def _csv(records):
    buf = io.StringIO()
    bench.write_csv(records, buf)
    return buf.getvalue()


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="groupsat", description="Boolean satisfiability: truth tables, DNF checks, lookup networks."
    )
    sub = p.add_subparsers(dest="command", required=True)

    def expr_cmd(name, help):
        q = sub.add_parser(name, help=help)
        q.add_argument("expr", help="expression, e.g. 'x1∨¬x11' or 'x1|!x11'")
        return q

    q = expr_cmd("eval", "evaluate under a truth assignment")
    q.add_argument("--assign", action="append", metavar="VAR=BIT", help="e.g. x11=1; repeatable")
    q.add_argument("--measure", choices="abcd", help="also print this length measure")
    q.set_defaults(func=_cmd_eval)

    q = expr_cmd("classify", "print 0 (unsatisfiable), 1 (satisfiable) or t (tautology)")
    q.add_argument("--measure", choices="abcd", help="also print this length measure")
    q.set_defaults(func=_cmd_classify)

    for name in ("dnf", "cnf"):
        q = expr_cmd(name, f"convert to {name.upper()}")
        q.add_argument("--dimacs", action="store_true", help="DIMACS-style output")
        q.add_argument("--cap", type=int, default=DEFAULT_CLAUSE_CAP)
        q.add_argument("--out")
        q.set_defaults(func=_cmd_normal_form)

    for name, func in (("dsat", _cmd_dsat), ("csat", _cmd_csat)):
        q = sub.add_parser(name, help=f"decide a {'DNF' if name == 'dsat' else 'CNF'}")
        q.add_argument("expr", nargs="?")
        q.add_argument("--file", help="DIMACS-style input ('p dnf' or 'p cnf')")
        q.add_argument("--full-scan", action="store_true", help="check every clause")
        q.add_argument("--cap", type=int, default=DEFAULT_CLAUSE_CAP)
        q.set_defaults(func=func)

    q = sub.add_parser("build-net", help="precompute a network and write it to a file")
    q.add_argument("--k", type=int, required=True, help="number of variables")
    q.add_argument("--n", type=int, required=True, help="maximum coded length")
    q.add_argument("--policy", choices=POLICIES, default="oracle")
    q.add_argument("--cost-model", choices=COST_MODELS, default="unit")
    q.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    q.add_argument("--extra-parens", action="store_true")
    q.add_argument("--out", required=True)
    q.set_defaults(func=_cmd_build_net)

    q = sub.add_parser("query-net", help="look up an expression in a saved network")
    q.add_argument("network")
    q.add_argument("expr")
    q.add_argument("--cost-model", choices=COST_MODELS)
    q.set_defaults(func=_cmd_query_net)

    q = sub.add_parser("net-stats", help="per-length cell counts of a saved network")
    q.add_argument("network")
    q.set_defaults(func=_cmd_net_stats)

    q = sub.add_parser("bench", help="run a benchmark scenario and write CSV")
    q.add_argument("scenario", choices=sorted(bench.SCENARIOS))
    q.add_argument("--k", type=int, default=2)
    q.add_argument("--n-min", type=int, default=4)
    q.add_argument("--n-max", type=int, default=9)
    q.add_argument("--k-min", type=int, default=1)
    q.add_argument("--k-max", type=int, default=10)
    q.add_argument("--sizes", type=int, nargs="+", default=[100, 1000, 10000])
    q.add_argument("--repeats", type=int, default=5)
    q.add_argument("--vars", type=int, default=50)
    q.add_argument("--width", type=int, default=10)
    q.add_argument("--samples", type=int, default=0)
    q.add_argument("--expr", action="append")
    q.add_argument("--policy", choices=POLICIES, default="oracle")
    q.add_argument("--cost-model", choices=COST_MODELS, default="unit")
    q.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    q.add_argument("--cap", type=int, default=DEFAULT_CLAUSE_CAP)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--timing", action="store_true", help="record wall time (breaks byte-identical reruns)")
    q.add_argument("--out")
    q.set_defaults(func=_cmd_bench)
    return p


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.err = stderr
    try:
        code = args.func(args, stdout)
    except UsageError as exc:
        stderr.write(f"groupsat: {exc}\n")
        return EXIT_USAGE
    except tuple(e for e, _ in _ERRORS) as exc:
        for kind, code in _ERRORS:
            if isinstance(exc, kind):
                stderr.write(f"groupsat: {exc}\n")
                return code
        raise
    except OSError as exc:
        stderr.write(f"groupsat: {exc}\n")
        return EXIT_FILE
    return code or EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
