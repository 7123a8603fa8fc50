"""Command-line driver.

Exit codes: 0 success, 1 infeasible or rejected, 2 input error,
3 a ``--selftest`` check failed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from .approx import approximate_d, approximate_opt_squared
from .errors import CapacityError, InputError
from .flow import verify_solution
from .hardness import reduce_hs_to_vc
from .io import gen_random, parse_hs, parse_instance, serialize_instance
from .kernel import KernelCaps, kernelize
from .oracle import DEFAULT_CAP, brute_force_opt
from .reduction import exhaust_rule1, rule2_check

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_SELFTEST = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _ids(text):
    try:
        return sorted({int(x) for x in text.replace(",", " ").split()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of vertex ids: {text!r}") from None


def _weights(text):
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated weight list: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", help="input file, '-' for stdin (default)")
    common.add_argument("--json", metavar="PATH|-", help="write the JSON report to PATH or stdout")
    common.add_argument("--output", metavar="PATH", help="write the produced instance to PATH")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--exact-cap", type=int, default=DEFAULT_CAP)
    common.add_argument("--selftest", action="store_true", help="cross-check results by brute force")
    common.add_argument("--timing", action="store_true", help="record wall time in the report")

    p = _Parser(prog="vecconn", description="Vector Connectivity toolkit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", parents=[common], help="exact optimum by exhaustive search")
    s.add_argument("--exact", action="store_true", help="accepted for clarity; solving is always exact")

    a = sub.add_parser("approx", parents=[common], help="approximate solution")
    a.add_argument("--mode", choices=["d", "opt2"], default="d")

    sub.add_parser("reduce", parents=[common], help="demand reduction and the d^2 k test")

    kp = sub.add_parser("kernel", parents=[common], help="kernelize")
    kp.add_argument("--max-new-vertices", type=int, default=KernelCaps.max_new_vertices)
    kp.add_argument("--full-kernel-d", type=int, default=KernelCaps.full_kernel_d)

    v = sub.add_parser("verify", parents=[common], help="check a candidate solution")
    v.add_argument("--solution", type=_ids, required=True, help="vertex ids, comma or space separated")

    g = sub.add_parser("gen", parents=[common], help="random instance")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--p", type=float, default=0.3, help="edge probability")
    g.add_argument("--d", type=int, default=2)
    g.add_argument("--k", type=int, default=3)
    g.add_argument("--demand-weights", type=_weights, help="weights for demands 0..d")

    sub.add_parser("fromhs", parents=[common], help="Hitting Set to Vector Connectivity")
    return p


def _read_input(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


class _Run:
    def __init__(self, args):
        self.args = args
        self.text = None
        self.lines: list[str] = []
        self.instance_text = None

    def source(self):
        self.text = _read_input(self.args.input)
        return self.text

    def checked(self, inst, S, what):
        S = sorted(S)
        if not verify_solution(inst, S):
            raise AssertionError(f"{what} produced an infeasible set")
        return S


def _solve(run, args):
    inst = parse_instance(run.source())
    res = brute_force_opt(inst, cap=args.exact_cap)
    opt, witness = res
    witness = run.checked(inst, witness, "exact search")
    run.lines.append(f"opt {opt}")
    run.lines.append("solution " + " ".join(map(str, witness)))
    ok = opt <= inst.k
    return {"opt": opt, "solution": witness, "within_budget": ok}, EXIT_OK if ok else EXIT_NO


def _approx(run, args):
    inst = parse_instance(run.source())
    if args.mode == "d":
        S = approximate_d(inst)
    else:
        S = approximate_opt_squared(inst, threads=args.threads)
    S = run.checked(inst, S, "approximation")
    payload = {"mode": args.mode, "size": len(S), "solution": S}
    if args.selftest:
        opt = brute_force_opt(inst, cap=args.exact_cap)[0]
        bound = inst.d * opt if args.mode == "d" else opt * opt
        if len(S) > bound:
            raise _SelftestFailure(f"size {len(S)} exceeds the guarantee {bound}")
        payload["selftest"] = {"opt": opt, "bound": bound}
    run.lines.append(f"size {len(S)}")
    run.lines.append("solution " + " ".join(map(str, S)))
    return payload, EXIT_OK


def _reduce(run, args):
    inst = parse_instance(run.source())
    reduced, trace = exhaust_rule1(inst)
    trace.rejected = not rule2_check(reduced)
    run.instance_text = serialize_instance(reduced)
    run.lines.append(f"demand vertices {len(inst.demand_vertices)} -> {len(reduced.demand_vertices)}")
    run.lines.append("rejected" if trace.rejected else "accepted")
    payload = {"trace": trace.to_dict(), "instance": run.instance_text}
    return payload, EXIT_NO if trace.rejected else EXIT_OK


def _kernel(run, args):
    inst = parse_instance(run.source())
    caps = KernelCaps(max_new_vertices=args.max_new_vertices, full_kernel_d=args.full_kernel_d)
    report = kernelize(inst, caps)
    run.instance_text = serialize_instance(report.instance)
    # the emitted kernel must parse back to the same instance
    back = parse_instance(run.instance_text)
    if back.graph != report.instance.graph or back.demands != report.instance.demands:
        raise AssertionError("kernel does not survive a serialization round trip")
    payload = report.to_dict()
    payload["instance"] = run.instance_text
    if args.selftest:
        before = brute_force_opt(inst, cap=args.exact_cap, limit=inst.k) is not None
        after = brute_force_opt(back, cap=args.exact_cap, limit=back.k) is not None
        if before != after:
            raise _SelftestFailure(f"input is {'yes' if before else 'no'} but the kernel is not")
        payload["selftest"] = {"yes": before}
    run.lines.append(f"vertices {inst.n} -> {report.instance.n}")
    run.lines.append("rejected" if report.rejected else "kernel")
    return payload, EXIT_NO if report.rejected else EXIT_OK


def _verify(run, args):
    inst = parse_instance(run.source())
    S = inst.graph.check_vertices(args.solution)
    ok = verify_solution(inst, S)
    within = len(S) <= inst.k
    run.lines.append("feasible" if ok else "infeasible")
    payload = {"solution": sorted(S), "feasible": ok, "within_budget": within}
    return payload, EXIT_OK if ok else EXIT_NO


def _gen(run, args):
    inst = gen_random(args.n, args.p, args.demand_weights, args.d, args.k, args.seed)
    run.instance_text = serialize_instance(inst)
    params = {"n": args.n, "p": args.p, "d": args.d, "k": args.k, "demand_weights": args.demand_weights}
    return {"params": params, "instance": run.instance_text}, EXIT_OK


def _fromhs(run, args):
    hs = parse_hs(run.source())
    inst = reduce_hs_to_vc(hs)
    run.instance_text = serialize_instance(inst)
    payload = {"n": inst.n, "k": inst.k, "d": inst.d, "instance": run.instance_text}
    return payload, EXIT_OK


class _SelftestFailure(Exception):
    pass


_COMMANDS = {
    "solve": _solve,
    "approx": _approx,
    "reduce": _reduce,
    "kernel": _kernel,
    "verify": _verify,
    "gen": _gen,
    "fromhs": _fromhs,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    run = _Run(args)
    start = time.perf_counter()
    try:
        if args.threads < 1:
            raise InputError("--threads must be at least 1")
        payload, code = _COMMANDS[args.command](run, args)
    except (InputError, CapacityError) as exc:
        print(f"vecconn {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except _SelftestFailure as exc:
        print(f"vecconn {args.command}: selftest failed: {exc}", file=sys.stderr)
        return EXIT_SELFTEST
    elapsed = round((time.perf_counter() - start) * 1000, 3)
    report = {
        "schema": 1,
        "command": args.command,
        "input_sha256": hashlib.sha256(run.text.encode()).hexdigest() if run.text is not None else None,
        "seed": args.seed,
        "timing_ms": elapsed if args.timing else None,
        "exit_code": code,
        "result": payload,
    }
    json_to_stdout = args.json == "-"
    if run.instance_text is not None:
        if args.output:
            _write(args.output, run.instance_text)
        elif not json_to_stdout:
            sys.stdout.write(run.instance_text)
    if not json_to_stdout and run.instance_text is None:
        for line in run.lines:
            print(line)
    elif run.lines and not json_to_stdout:
        for line in run.lines:
            print(line, file=sys.stderr)
    if args.json:
        _write(args.json, json.dumps(report, indent=2, sort_keys=True) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
