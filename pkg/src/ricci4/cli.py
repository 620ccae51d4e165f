"""Command-line front end: ``list``, ``flow``, ``verify``, ``decay``, ``compare``.

Exit codes: 0 ok, 1 error, 2 blowup, 3 wrong family, 64 usage.
Run options can also come from ``--config FILE`` (``key=value`` lines, keys
spelled like the long flags); flags given on the command line win.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

import numpy as np

from . import io as tio
from .catalog import CATALOG
from .closed_forms import exact_metric, solution_form
from .flow import (FlowError, FlowProblem, IntegrateOptions, asymptotic_profile,
                   classify_singularity, integrate)
from .lie_algebra import ALL_CLASSES, GeometrySpec, SpecError

EXIT_OK, EXIT_ERROR, EXIT_BLOWUP, EXIT_WRONG_FAMILY, EXIT_USAGE = 0, 1, 2, 3, 64

_BOOL = {"1": True, "true": True, "yes": True, "on": True,
         "0": False, "false": False, "no": False, "off": False}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _floats(text: str) -> tuple:
    try:
        return tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _ints(text: str) -> tuple:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _run_options(p: argparse.ArgumentParser, t_end: float) -> None:
    p.add_argument("--config", help="key=value file; command-line flags take precedence")
    p.add_argument("--class", dest="cls", type=str.upper, choices=ALL_CLASSES, metavar="CLASS")
    p.add_argument("--branch", "--family", dest="branch")
    p.add_argument("--k", type=float)
    p.add_argument("--mn", type=_ints, help="m,n for Sol^4_{m,n}")
    p.add_argument("--alpha", type=float, help="A7 family (ii): sets a_2 = alpha")
    p.add_argument("--a", type=_floats, help="frame parameters a_1,...")
    p.add_argument("--lambda", dest="lam", type=_floats, help="initial coefficients l1,l2,l3,l4")
    p.add_argument("--radii", type=_floats)
    p.add_argument("--normalized", action="store_true")
    p.add_argument("--t-end", type=float, default=t_end)
    p.add_argument("--rtol", type=float, default=1e-10)
    p.add_argument("--atol", type=float, default=1e-12)
    p.add_argument("--max-step", type=float)
    p.add_argument("--stride", type=int, default=1, help="keep every n-th accepted step")
    p.add_argument("--output", "-o")
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ricci4", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("list", help="catalogue of geometry classes")
    p.add_argument("--class", dest="cls", type=str.upper, choices=ALL_CLASSES, metavar="CLASS")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("flow", help="integrate a flow and write its samples")
    _run_options(p, 1.0)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("target", nargs="?", default=None, help="a class name or 'all'")
    p.add_argument("--class", dest="cls", type=str.upper, choices=ALL_CLASSES, metavar="CLASS")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--draws", type=int, default=20)
    p.add_argument("--no-flows", action="store_true", help="fixtures only")
    p.add_argument("--workers", type=int, default=4)

    p = sub.add_parser("decay", help="fit late-time power laws")
    _run_options(p, 1e4)
    p.add_argument("--window", type=float, default=10.0)

    p = sub.add_parser("compare", help="numeric vs closed-form table")
    _run_options(p, 1e3)
    p.add_argument("--points", type=int, default=20)
    return parser


# --------------------------------------------------------------------------
# config handling
# --------------------------------------------------------------------------

def read_config(path: str) -> dict:
    out = {}
    with open(path) as fh:
        for n, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{n}: expected key=value")
            key, val = (s.strip() for s in line.split("=", 1))
            out[key.replace("-", "_").lower()] = val
    return out


_KEY_ALIASES = {"class": "cls", "lambda": "lam", "family": "branch", "t_end": "t_end"}


def _apply_config(parser: argparse.ArgumentParser, sub: argparse.ArgumentParser,
                  argv: Sequence[str], path: str) -> argparse.Namespace:
    raw = read_config(path)
    actions = {a.dest: a for a in sub._actions}
    defaults = {}
    for key, val in raw.items():
        dest = _KEY_ALIASES.get(key, key)
        if dest not in actions or dest in ("config", "help"):
            raise UsageError(f"unknown config key {key!r}")
        act = actions[dest]
        if isinstance(act, argparse._StoreTrueAction):
            if val.lower() not in _BOOL:
                raise UsageError(f"config key {key!r} expects a boolean")
            defaults[dest] = _BOOL[val.lower()]
            continue
        try:
            conv = act.type(val) if act.type else val
        except (argparse.ArgumentTypeError, ValueError) as exc:
            raise UsageError(f"config key {key!r}: {exc}")
        if act.choices is not None and conv not in act.choices:
            raise UsageError(f"config key {key!r}: {val!r} is not one of {list(act.choices)}")
        defaults[dest] = conv
    sub.set_defaults(**defaults)
    return parser.parse_args(argv)


def _subparser(parser, name):
    for act in parser._actions:
        if isinstance(act, argparse._SubParsersAction):
            return act.choices[name]
    raise KeyError(name)


# --------------------------------------------------------------------------
# run config -> problem
# --------------------------------------------------------------------------

def spec_from_args(ns) -> GeometrySpec:
    if ns.cls is None:
        raise UsageError("--class is required")
    return GeometrySpec(ns.cls, k=ns.k, mn=ns.mn, radii=ns.radii)


def problem_from_args(ns) -> FlowProblem:
    spec = spec_from_args(ns)
    a = ns.a
    if ns.alpha is not None:
        if spec.cls != "A7":
            raise UsageError("--alpha applies to A7 only")
        a = tuple(a or (0.0, 0.0))
        if len(a) < 2:
            a = a + (0.0,) * (2 - len(a))
        a = (a[0], ns.alpha) + tuple(a[2:])
    if spec.is_lie_group and ns.lam is None:
        raise UsageError(f"{spec.cls} needs --lambda")
    if ns.lam is not None and len(ns.lam) != 4:
        raise UsageError("--lambda takes four values")
    return FlowProblem.build(spec, ns.lam, t_end=ns.t_end, a=a, family=ns.branch,
                             normalized=ns.normalized)


def options_from_args(ns, **kw) -> IntegrateOptions:
    return IntegrateOptions(rel_tol=ns.rtol, abs_tol=ns.atol, max_step=ns.max_step,
                            sample_stride=ns.stride).replace(**kw)


def config_dict(ns, problem: FlowProblem) -> dict:
    s = problem.spec
    return {"class": s.cls, "branch": problem.family, "k": s.k,
            "mn": list(s.mn) if s.mn else None, "radii": list(s.radii) if s.radii else None,
            "a": list(problem.frame_params), "lambda": [float(v) for v in problem.initial.values],
            "normalized": bool(problem.normalized), "t_end": problem.t_end,
            "rtol": ns.rtol, "atol": ns.atol}


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def cmd_list(ns) -> int:
    rows = [CATALOG[ns.cls]] if ns.cls else list(CATALOG.values())
    if ns.format == "json":
        print(json.dumps([r.as_dict() for r in rows], indent=2))
        return EXIT_OK
    print(f"{'class':<6} {'model':<26} {'params':<12} branches")
    for r in rows:
        print(f"{r.cls:<6} {r.model:<26} {','.join(r.params) or '-':<12} "
              f"{', '.join(r.branches) or '-'}")
    return EXIT_OK


def cmd_flow(ns) -> int:
    problem = problem_from_args(ns)
    opts = options_from_args(ns)
    try:
        traj = integrate(problem, opts)
    except FlowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    rec = tio.record_of(traj, config_dict(ns, problem))
    _emit(tio.dumps(rec, ns.format), ns.output)
    if traj.termination == "blowup_detected":
        print(f"blowup detected, T_est = {traj.T_est!r}", file=sys.stderr)
        return EXIT_BLOWUP
    return EXIT_OK


def cmd_verify(ns) -> int:
    from .verify import run_all, run_class
    target = ns.cls or (ns.target.upper() if ns.target else "ALL")
    flows = not ns.no_flows
    if target == "ALL":
        results = run_all(ns.seed, ns.draws, flows, ns.workers)
    elif target in ALL_CLASSES:
        results = {target: run_class(target, ns.seed, ns.draws, flows)}
    else:
        raise UsageError(f"unknown verify target {ns.target!r}")
    ok = True
    for cls, checks in results.items():
        for c in checks:
            print(f"{cls:<4} {c.line()}")
            ok &= c.passed
    if len(results) > 1:
        print()
        print(f"{'class':<6} {'checks':>6} {'failed':>6}  worst/tol")
        for cls, checks in results.items():
            failed = sum(not c.passed for c in checks)
            ratio = max((c.worst / c.tol if c.tol else (0.0 if c.worst == 0 else np.inf))
                        for c in checks) if checks else 0.0
            print(f"{cls:<6} {len(checks):>6} {failed:>6}  {ratio:.2e}")
    return EXIT_OK if ok else EXIT_ERROR


def cmd_decay(ns) -> int:
    problem = problem_from_args(ns)
    opts = options_from_args(ns)
    try:
        traj = integrate(problem, opts)
    except FlowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sing = classify_singularity(traj, window=ns.window) if len(traj) >= 50 else None
    report = {"class": problem.spec.cls, "branch": problem.family,
              "termination": traj.termination}
    if traj.termination == "blowup_detected":
        report.update({"singularity": sing.kind if sing else "inconclusive", "T_est": traj.T_est})
        _print_report(report, ns.format)
        return EXIT_WRONG_FAMILY
    try:
        prof = asymptotic_profile(traj, window=ns.window, min_time=min(1e3, ns.t_end))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report.update({"window": list(prof.window), "exponents": prof.exponents.tolist(),
                   "residuals": prof.residuals.tolist()})
    if prof.curvature_exponent is None:
        report["curvature"] = "flat"
    else:
        report.update({"curvature_exponent": prof.curvature_exponent,
                       "curvature_residual": prof.curvature_residual})
    if sing is not None:
        report["singularity"] = sing.kind
    _print_report(report, ns.format)
    return EXIT_OK


def _print_report(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report))
        return
    for key, val in report.items():
        if isinstance(val, list):
            val = ", ".join(f"{v:.6g}" for v in val)
        elif isinstance(val, float):
            val = f"{val:.6g}"
        print(f"{key:<20} {val}")


def cmd_compare(ns) -> int:
    problem = problem_from_args(ns)
    spec = problem.spec
    lam = problem.initial.values
    form = solution_form(spec, problem.family, lam)
    if form.kind not in ("exact", "implicit"):
        print(f"{spec.cls} ({problem.family}) has no closed form ({form.kind})", file=sys.stderr)
        return EXIT_WRONG_FAMILY
    hi = form.validity[1]
    top = min(ns.t_end, 0.99 * hi) if np.isfinite(hi) else ns.t_end
    times = np.logspace(np.log10(top) - 3.0, np.log10(top), ns.points)
    opts = options_from_args(ns, sample_times=tuple(times[:-1]), sample_stride=10 ** 9)
    try:
        traj = integrate(FlowProblem.build(spec, lam, t_end=top, a=problem.frame_params or None,
                                           family=problem.family), opts)
    except FlowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    alpha = problem.frame_params[1] if problem.family == "P6.ii" else None
    rows = []
    for t in times:
        i = int(np.argmin(np.abs(traj.times - t)))
        ex = exact_metric(spec, problem.family, lam, t, alpha=alpha).values
        num = traj.metric[i]
        rows.append([float(t), *num.tolist(), *ex.tolist(),
                     float(np.max(np.abs(num - ex) / np.abs(ex)))])
    if ns.format == "json":
        _emit(json.dumps({"columns": ["t", "A", "B", "C", "D", "A*", "B*", "C*", "D*", "rel_err"],
                          "rows": rows}) + "\n", ns.output)
    else:
        lines = ["t,A,B,C,D,A_exact,B_exact,C_exact,D_exact,rel_err"]
        lines += [",".join(repr(v) for v in r) for r in rows]
        _emit("\n".join(lines) + "\n", ns.output)
    worst = max(r[-1] for r in rows)
    print(f"worst relative error {worst:.3e}", file=sys.stderr)
    return EXIT_OK


COMMANDS = {"list": cmd_list, "flow": cmd_flow, "verify": cmd_verify, "decay": cmd_decay,
            "compare": cmd_compare}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(ns, "config", None):
            ns = _apply_config(parser, _subparser(parser, ns.command), argv, ns.config)
        return COMMANDS[ns.command](ns)
    except (UsageError, SpecError) as exc:
        print(f"ricci4: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"ricci4: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
