"""Command line interface: ``noether3 <command> ...``.

Every command except ``registry`` prints a JSON report whose ``body`` is a
deterministic function of the inputs; wall-clock timing lives beside it in
``meta``.  Exit codes: 0 success, 1 an inconclusive test or certification,
2 usage or schema errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence, TextIO

from . import __version__
from .certify import CASES, certify_negativity
from .cohomology import h1, nonvanishing_test, tate_minus1
from .errors import CapExceeded, CertificationFailed, NoetherError
from .groups import DEFAULT_CAP, LatticeAction, all_subgroups, restrict_action
from .noether import SCHEMAS, ProblemInstance, decide_group
from .parity import parity_test_refined, parity_test_simple
from .registry import DESCRIPTIONS, names, paper_module

PROG = "noether3"
CAP_ENV = "NOETHER_MAX_GROUP_ORDER"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def group_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError(f"{CAP_ENV} must be positive")
    return cap


def load_module(source: str) -> LatticeAction:
    """``registry:NAME`` or a path to a JSON lattice action."""
    cap = group_cap()
    if source.startswith("registry:"):
        L = paper_module(source[len("registry:"):])
        if L.group.order > cap:
            raise CapExceeded(f"group order {L.group.order} exceeds {CAP_ENV}={cap}")
        return L
    try:
        with open(source, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read module file {source}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"module file {source} is not valid JSON: {exc.msg}") from None
    L = LatticeAction.from_json(obj, cap=cap)
    L.validate()
    return L


def parse_assignments(text: str | None, what: str) -> dict[str, str]:
    """``"a=2,b=-3/4"`` -> ``{"a": "2", "b": "-3/4"}``."""
    out: dict[str, str] = {}
    if not text:
        return out
    for part in text.split(","):
        key, sep, val = part.partition("=")
        key, val = key.strip(), val.strip()
        if not sep or not key or not val:
            raise UsageError(f"bad {what} entry {part!r}, expected NAME=VALUE")
        if key in out:
            raise UsageError(f"{what} {key} given twice")
        out[key] = val
    return out


# ----------------------------------------------------------------------
# commands; each returns (exit code, body)


def _module_input(args) -> dict:
    return {"module": args.module}


def cmd_cohomology(args):
    L = load_module(args.module)
    groups = all_subgroups(L.group) if args.all_subgroups else [L.group]
    rows = []
    for H in groups:
        res = h1(restrict_action(L, H))
        rows.append({"subgroup": H.label, "order": H.order, "h1": res.to_json(), "summary": res.describe()})
    return 0, {"inputs": {**_module_input(args), "all_subgroups": args.all_subgroups}, "h1": rows}


def cmd_tate(args):
    L = load_module(args.module)
    res = tate_minus1(L)
    return 0, {"inputs": _module_input(args), "tate_minus1": {**res.to_json(), "summary": res.describe()}}


def cmd_test(args):
    L = load_module(args.module)
    if args.kind == "nonvanishing":
        out = nonvanishing_test(L)
    elif args.kind == "parity-simple":
        if args.invariant is None:
            raise UsageError("parity-simple needs --invariant")
        out = parity_test_simple(L, args.invariant)
    else:
        if args.invariant is None or args.flip is None or args.tau_star is None:
            raise UsageError("parity-refined needs --invariant, --flip and --tau-star")
        out = parity_test_refined(L, args.invariant, args.tau_star, args.flip)
    inputs = {**_module_input(args), "test": args.kind}
    for k in ("invariant", "flip", "tau_star"):
        if getattr(args, k) is not None:
            inputs[k] = getattr(args, k)
    return (0 if out.certified else 1), {"inputs": inputs, "outcome": out.to_json()}


def cmd_decide(args):
    signs = parse_assignments(args.signs, "sign")
    coeffs = parse_assignments(args.coeffs, "coefficient")
    if args.group not in SCHEMAS:
        raise UsageError(f"unknown group id {args.group!r}")
    p = ProblemInstance(args.group, coeffs, signs)
    return 0, {"inputs": p.to_json(), "verdict": decide_group(p).to_json()}


def cmd_certify(args):
    if args.case not in CASES:
        raise UsageError(f"unknown case {args.case!r}; known: {', '.join(CASES)}")
    try:
        cert = certify_negativity(args.case)
    except CertificationFailed as exc:
        return 1, {"inputs": {"case": args.case}, "error": str(exc)}
    return 0, {"inputs": {"case": args.case}, "certificate": cert.to_json()}


def cmd_batch(args):
    try:
        with open(args.file, encoding="utf-8") as fh:
            jobs = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read batch file {args.file}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"batch file is not valid JSON: {exc.msg}") from None
    if not isinstance(jobs, list):
        raise UsageError("batch file must hold a JSON array of jobs")
    argvs = []
    for i, job in enumerate(jobs):
        argv = job.get("argv") if isinstance(job, dict) else job
        if not isinstance(argv, list) or not all(isinstance(a, str) for a in argv):
            raise UsageError(f"job {i} must be a list of strings or {{\"argv\": [...]}}")
        argvs.append(argv)
    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        results = list(pool.map(_run_job, argvs))
    code = max((r["exit_code"] for r in results), default=0)
    return code, {"inputs": {"file": args.file, "count": len(argvs)}, "results": results}


def _run_job(argv: list[str]) -> dict:
    try:
        code, body = _dispatch(argv)
    except UsageError as exc:
        return {"argv": argv, "exit_code": 2, "error": str(exc)}
    except NoetherError as exc:
        return {"argv": argv, "exit_code": 2, "error": _message(exc)}
    return {"argv": argv, "exit_code": code, "body": body}


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable summary instead of JSON")

    p = _Parser(prog=PROG, description="Lattice cohomology and Noether problem decisions.")
    p.add_argument("--version", action="version", version=f"{PROG} {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    mod_help = "registry:NAME or a JSON file as printed by 'registry show'"

    c = sub.add_parser("cohomology", parents=[common], help="H^1 of a lattice action")
    c.add_argument("--module", required=True, help=mod_help)
    c.add_argument("--all-subgroups", action="store_true", help="tabulate H^1 over every subgroup")
    c.set_defaults(func=cmd_cohomology)

    t = sub.add_parser("tate", parents=[common], help="Tate cohomology in degree -1")
    t.add_argument("--module", required=True, help=mod_help)
    t.set_defaults(func=cmd_tate)

    x = sub.add_parser("test", parents=[common], help="run an irrationality test")
    x.add_argument("kind", choices=["nonvanishing", "parity-simple", "parity-refined"])
    x.add_argument("--module", required=True, help=mod_help)
    x.add_argument("--invariant", help="invariant basis element u (index or label)")
    x.add_argument("--flip", help="flip basis element w with e_w.tau = e_u - e_w")
    x.add_argument("--tau-star", help="name of the flipping group element, e.g. t3")
    x.set_defaults(func=cmd_test)

    schema_lines = "\n".join(
        f"  {gid:<8} signs: {','.join(sg) or '-':<24} coeffs: {','.join(cf)}" for gid, (sg, cf) in SCHEMAS.items()
    )
    d = sub.add_parser(
        "decide",
        parents=[common],
        help="decide a monomial Noether problem over Q",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description="Parameters per group:\n" + schema_lines
        + "\n\nGroups 3.4.2.1, 3.4.3.1 and 3.4.4.1 assume b = 1; normalize b before calling.",
    )
    d.add_argument("--group", required=True, help="one of " + ", ".join(SCHEMAS))
    d.add_argument("--signs", help="e.g. e1=-1,e2=1,e3=-1")
    d.add_argument("--coeffs", help="e.g. a=2,b=3,c=5/4")
    d.set_defaults(func=cmd_decide)

    f = sub.add_parser("certify", parents=[common], help="run a registered negativity certificate")
    f.add_argument("--case", required=True, help="one of " + ", ".join(CASES))
    f.set_defaults(func=cmd_certify)

    r = sub.add_parser("registry", parents=[common], help="list or print the built-in lattices")
    r.add_argument("action", choices=["list", "show"])
    r.add_argument("name", nargs="?")
    r.set_defaults(func=None)

    b = sub.add_parser("batch", parents=[common], help="run a JSON array of argv jobs")
    b.add_argument("--file", required=True)
    b.add_argument("--jobs", type=int, default=4, help="worker threads (default 4)")
    b.set_defaults(func=cmd_batch)
    return p


def _dispatch(argv: Sequence[str]):
    try:
        args = build_parser().parse_args(list(argv))
    except SystemExit:
        raise UsageError("help and version are not batch jobs") from None
    if args.command in ("registry", "batch"):
        raise UsageError(f"{args.command} cannot run inside a batch")
    return args.func(args)


def _message(exc: BaseException) -> str:
    return str(exc.args[0]) if exc.args else type(exc).__name__


def _registry(args, out: TextIO) -> int:
    if args.action == "list":
        rows = []
        for n in names():
            L = paper_module(n)
            rows.append({"name": n, "rank": L.rank, "order": L.group.order, "description": DESCRIPTIONS[n]})
        if args.pretty:
            for row in rows:
                out.write(f"{row['name']:<18} rank {row['rank']:>2}  |G| = {row['order']}  {row['description']}\n")
        else:
            out.write(json.dumps(rows, indent=2) + "\n")
        return 0
    if not args.name:
        raise UsageError("registry show needs a NAME")
    out.write(json.dumps(paper_module(args.name).to_json(), indent=2) + "\n")
    return 0


def summarize(command: str, code: int, body: dict) -> str:
    """Short plain-text rendering used by ``--pretty``."""
    lines = []
    if "h1" in body:
        for row in body["h1"]:
            lines.append(f"H1({row['subgroup']}, M) = {row['summary']}")
    if "tate_minus1" in body:
        lines.append(f"Tate H^-1(G, M) = {body['tate_minus1']['summary']}")
    if "outcome" in body:
        o = body["outcome"]
        lines.append(f"{o['test']}: {o['status']} ({o['reason']})")
    if "verdict" in body:
        v = body["verdict"]
        lines.append(f"{v['outcome']}: {v['reason']}")
        lines.extend(f"  via {s}" for s in v["chain"])
    if "certificate" in body:
        c = body["certificate"]
        lines.append(f"{c['case']}: {c['status']} via {c['test']} on {c['module']}")
        lines.append(f"  {c['reason']}")
    if "error" in body:
        lines.append(f"failed: {body['error']}")
    if "results" in body:
        for r in body["results"]:
            lines.append(f"[{r['exit_code']}] {' '.join(r['argv'])}")
    return "\n".join(lines) + "\n"


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = sys.argv[1:] if argv is None else list(argv)
    start = time.perf_counter()
    try:
        try:
            args = build_parser().parse_args(argv)
        except SystemExit as exc:  # --help / --version already printed
            return int(exc.code or 0)
        if args.command == "registry":
            return _registry(args, out)
        if args.command == "batch" and args.jobs < 1:
            raise UsageError("--jobs must be positive")
        code, body = args.func(args)
    except UsageError as exc:
        err.write(f"{PROG}: error: {exc}\n")
        return 2
    except NoetherError as exc:
        err.write(f"{PROG}: error: {_message(exc)}\n")
        return 2
    report = {
        "body": {"tool": PROG, "version": __version__, "command": args.command, "exit_code": code, **body},
        "meta": {"wall_clock_seconds": round(time.perf_counter() - start, 6)},
    }
    if args.pretty:
        out.write(summarize(args.command, code, body))
    else:
        out.write(json.dumps(report, indent=2) + "\n")
    return code


def main() -> None:
    sys.exit(run())
