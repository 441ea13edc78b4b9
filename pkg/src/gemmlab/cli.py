"""``gemmlab`` command line.

Exit status: 0 success, 1 usage or input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from gemmlab import bench, ccp, tables
from gemmlab.hwdesc import MachineDescError, load_machine
from gemmlab.microkernel import MicroKernelShape
from gemmlab.pack import FAULT_ENV

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> List[int]:
    """``64,96,128`` or an inclusive range ``64:256:32``."""
    try:
        if ":" in text:
            lo, hi, *step = (int(x) for x in text.split(":"))
            return list(range(lo, hi + 1, step[0] if step else 1))
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected '64,96' or '64:256:32', got {text!r}")


def _common(p: argparse.ArgumentParser, model: bool = True, run: bool = False):
    p.add_argument("--machine", default="carmel",
                   help="machine description file, or a shipped name (carmel, epyc7282)")
    p.add_argument("--csv", default="-", help="output path, '-' for stdout")
    if model:
        p.add_argument("--mk", default="auto", help="micro-kernel shape like 6x8, or auto")
        p.add_argument("--policy", default="refined", choices=sorted(ccp.POLICY_NAMES))
    if run:
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--parallel-loop", default="none", choices=("none", "g3", "g4"))
        p.add_argument("--reps", type=int, default=bench.MIN_REPS)
        p.add_argument("--verify", action="store_true", help="check results against the oracles")
        p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gemmlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("model", help="derive CCPs and cache occupancy for one problem")
    _common(p)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)

    p = sub.add_parser("table", help="recompute an occupancy table (fig4, t2, t3)")
    _common(p, model=False)
    p.add_argument("--table", required=True, choices=tables.TABLE_IDS)

    p = sub.add_parser("bench", help="benchmark sweeps")
    bsub = p.add_subparsers(dest="operation", required=True, parser_class=_Parser)
    g = bsub.add_parser("gemm", help="GEMM sweep over k")
    _common(g, run=True)
    g.add_argument("-m", type=int, default=2000)
    g.add_argument("-n", type=int, default=2000)
    g.add_argument("--k-list", type=_int_list, default=_int_list("64:256:32"))
    lu = bsub.add_parser("lu", help="blocked LU sweep over the block size")
    _common(lu, run=True)
    lu.add_argument("-s", type=int, default=2000)
    lu.add_argument("--b-list", type=_int_list, default=_int_list("64:256:64"))

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", choices=("all", "ccp", "pack", "gemm", "lu"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-fault", choices=("pack-padding",),
                   help="deliberately break a component to check that the suites notice")
    return parser


def _write(text: str, dest: str):
    if dest == "-":
        sys.stdout.write(text)
    else:
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)


def _shape(text: str) -> MicroKernelShape:
    try:
        return MicroKernelShape.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_model(args) -> int:
    hier = load_machine(args.machine)
    if args.mk == "auto":
        mk = bench.resolve_kernel(hier, "auto", args.m, args.n, args.k).shape
    else:
        mk = _shape(args.mk)
    row = tables.model_row(hier, mk, args.m, args.n, args.k, args.policy)
    _write(tables.to_csv([row], bench.metadata(hier, args.policy)), args.csv)
    return EXIT_OK


def cmd_table(args) -> int:
    hier = load_machine(args.machine)
    rows = tables.table_rows(hier, args.table)
    meta = bench.metadata(hier, "per-row") + [
        f"table={args.table} m=n={tables.PROBLEM_MN}; nc: model-default (excluded from golden comparison)"
    ]
    _write(tables.to_csv(rows, meta), args.csv)
    return EXIT_OK


def cmd_bench(args) -> int:
    hier = load_machine(args.machine)
    if args.mk != "auto":
        _shape(args.mk)
    if args.threads > 1 and args.parallel_loop == "none":
        raise UsageError("--threads > 1 needs --parallel-loop g3 or g4")
    common = dict(mk=args.mk, policy=args.policy, threads=args.threads,
                  parallel_loop=args.parallel_loop, reps=args.reps, verify=args.verify,
                  seed=args.seed)
    if args.operation == "gemm":
        records = bench.bench_gemm(hier, args.m, args.n, args.k_list, **common)
        failed = args.verify and any(r.check != "pass" for r in records)
    else:
        bad = [b for b in args.b_list if not 1 <= b <= args.s]
        if bad:
            raise UsageError(f"block sizes {bad} must satisfy 1 <= b <= s={args.s}")
        records = bench.bench_lu(hier, args.s, args.b_list, **common)
        failed = args.verify and any(float(r.check) > 50.0 for r in records)
    _write(bench.records_csv(records, bench.metadata(hier, args.policy, args.reps)), args.csv)
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_verify(args) -> int:
    from gemmlab.verify import SUITES

    saved = os.environ.get(FAULT_ENV)
    if args.inject_fault:
        os.environ[FAULT_ENV] = args.inject_fault
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    try:
        for name in names:
            res = SUITES[name](args.seed)
            print("\n".join(res.lines()))
            ok &= res.ok
    finally:
        if saved is None:
            os.environ.pop(FAULT_ENV, None)
        else:
            os.environ[FAULT_ENV] = saved
    return EXIT_OK if ok else EXIT_VERIFY


COMMANDS = {"model": cmd_model, "table": cmd_table, "bench": cmd_bench, "verify": cmd_verify}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, MachineDescError, ccp.ModelError, FileNotFoundError, ValueError) as exc:
        print(f"gemmlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
