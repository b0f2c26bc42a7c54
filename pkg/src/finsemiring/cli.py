"""Command-line front end.

Exit status: 0 success, 1 usage/parse/input error, 2 feasibility bound
exceeded, 3 counterexample or anomaly found by ``scan-conjecture``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .classify import classify, conjecture_scan
from .congruence import all_congruences, is_congruence_simple
from .constructions import (
    FiniteSemigroup,
    FiniteSemilattice,
    box_product,
    end1,
    g_of,
    semigroup_predicates,
    subsemiring_generated,
    two_element,
    v_of,
    y_of,
)
from .core import CapabilityError, FiniteSemiring, PreconditionError, TableError, element_report, verify_semiring
from .enumeration import SearchConstraints, enumerate_semirings
from .fileformat import ParseError, SemanticError, dump_algebra, load_algebra
from .ideals import is_bi_ideal_simple, is_ideal_simple

OK, USAGE, CAPABILITY, FOUND = 0, 1, 2, 3


@dataclass
class Report:
    command: list
    verdicts: dict = field(default_factory=dict)
    payload: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def to_json(self, with_timings: bool = False) -> str:
        d = {"command": self.command, "verdicts": self.verdicts, "payload": self.payload}
        if with_timings:
            d["timings"] = self.timings
        return json.dumps(d, sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        d = json.loads(text)
        return cls(d["command"], d["verdicts"], d["payload"], d.get("timings", {}))

    def human(self) -> str:
        lines = [" ".join(self.command)]
        for k, v in self.verdicts.items():
            lines.append(f"  {k}: {v}")
        for k, v in self.timings.items():
            lines.append(f"  [{k}: {v:.3f}s]")
        return "\n".join(lines)


class UsageError(Exception):
    pass


def semiring_json(S: FiniteSemiring) -> dict:
    return {"order": S.order, "add": [list(r) for r in S.add], "mul": [list(r) for r in S.mul]}


def _load(path, kind=FiniteSemiring):
    obj = load_algebra(path)
    if not isinstance(obj, kind):
        raise UsageError(f"{path}: expected a {kind.__name__}, got {type(obj).__name__}")
    if isinstance(obj, FiniteSemiring):
        rep = verify_semiring(obj.add, obj.mul)
        if not rep.ok:
            raise UsageError(f"{path}: not a semiring: {rep.violations[0]}")
    return obj


def _check(args, rep):
    obj = load_algebra(args.file)
    if isinstance(obj, FiniteSemiring):
        ax = verify_semiring(obj.add, obj.mul)
        rep.verdicts["semiring"] = ax.ok
        rep.payload["violations"] = [[name, list(w)] for name, w in ax.violations]
        if ax.ok:
            er = element_report(obj).as_dict()
            rep.payload["elements"] = er
            for key in ("mult_absorbing", "bi_absorbing", "zero"):
                if er[key] is not None:
                    rep.verdicts[key] = er[key]
            rep.verdicts["nontrivial_nilpotents"] = [x for x in er["nilpotents"] if x != er["mult_absorbing"]]
    elif isinstance(obj, FiniteSemigroup):
        rep.verdicts.update(semigroup_predicates(obj)._asdict())
    else:
        rep.verdicts["semilattice"] = True
        rep.verdicts["top"] = obj.top
    return OK


def _congruences(args, rep):
    S = _load(args.file)
    cs = all_congruences(S)
    rep.verdicts["count"] = len(cs)
    rep.payload["congruences"] = [[list(b) for b in p.blocks()] for p in cs]
    return OK


def _simple(args, rep):
    S = _load(args.file)
    rep.verdicts["congruence_simple"] = is_congruence_simple(S)
    rep.verdicts["ideal_simple"] = is_ideal_simple(S)
    rep.verdicts["bi_ideal_simple"] = is_bi_ideal_simple(S)
    return OK


def _classify(args, rep):
    S = _load(args.file)
    v = classify(S)
    rep.verdicts.update(v.as_dict())
    return OK


def _construct(args, rep):
    what = args.what
    if what[0] == "v" and len(what) == 2:
        S = v_of(_load(what[1], FiniteSemigroup))
    elif what[0] == "box" and len(what) == 3:
        S = box_product(_load(what[1]), _load(what[2]))
    elif what[0] == "end1" and len(what) == 2:
        E = end1(_load(what[1], FiniteSemilattice))
        if args.sub == "y":
            S, _ = subsemiring_generated(E.semiring, y_of(E))
        elif args.sub == "g":
            S, _ = subsemiring_generated(E.semiring, g_of(E))
        else:
            S = E.semiring
    elif len(what) == 1 and what[0][:1] == "t" and what[0][1:].isdigit():
        S = two_element(int(what[0][1:]))
    else:
        raise UsageError(f"unknown construction {' '.join(what)!r}")
    rep.verdicts["order"] = S.order
    rep.verdicts["semiring"] = verify_semiring(S.add, S.mul).ok
    rep.payload["semiring"] = semiring_json(S)
    text = dump_algebra(S, comment="constructed by: " + " ".join(what))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    elif not args.json:
        rep.payload["text"] = text
    return OK


def _constraints(args):
    return SearchConstraints(args.absorbing, args.no_nilpotents, args.congruence_simple, args.commutative)


def _enumerate(args, rep):
    c = _constraints(args)
    reps = enumerate_semirings(args.order, c, jobs=args.jobs, allow_large=args.allow_large)
    rep.verdicts["count"] = len(reps)
    rep.payload["constraints"] = c.as_dict()
    if not args.count_only:
        rep.payload["semirings"] = [semiring_json(S) for S in reps]
    return OK


def _scan(args, rep):
    scan = conjecture_scan(args.max_order, jobs=args.jobs, allow_large=args.allow_large)
    rep.verdicts["counts"] = {str(n): c for n, c in scan.counts.items()}
    rep.verdicts["counterexamples"] = len(scan.counterexamples)
    rep.verdicts["anomalies"] = len(scan.anomalies)
    rep.payload["status_counts"] = {str(n): c for n, c in scan.status_counts().items()}
    rep.payload["instances"] = {
        str(n): [{"semiring": semiring_json(S), "verdict": v.as_dict()} for S, v in items]
        for n, items in scan.instances.items()
    }
    rep.payload["anomalies"] = [{"semiring": semiring_json(S), "note": note} for S, note in scan.anomalies]
    return FOUND if scan.counterexamples or scan.anomalies else OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="write the structured report to stdout")
    common.add_argument("--timings", action="store_true", help="include timings in the structured report")
    common.add_argument("--allow-large", action="store_true", help="lift the enumeration order bounds")

    p = argparse.ArgumentParser(prog="finsemiring", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)
    for name, fn in (("check", _check), ("congruences", _congruences), ("simple", _simple), ("classify", _classify)):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("file")
        s.set_defaults(fn=fn)

    s = sub.add_parser("construct", parents=[common])
    s.add_argument("what", nargs="+", help="t<k> | v <semigroup> | box <f1> <f2> | end1 <semilattice>")
    s.add_argument("--sub", choices=("y", "g", "all"), default="all")
    s.add_argument("-o", "--output")
    s.set_defaults(fn=_construct)

    s = sub.add_parser("enumerate", parents=[common])
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--absorbing", action="store_true")
    s.add_argument("--no-nilpotents", action="store_true")
    s.add_argument("--congruence-simple", action="store_true")
    s.add_argument("--commutative", action="store_true")
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(fn=_enumerate)

    s = sub.add_parser("scan-conjecture", parents=[common])
    s.add_argument("--max-order", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(fn=_scan)
    return p


def run(argv: Sequence[str]) -> tuple[int, Report]:
    argv = list(argv)
    rep = Report(command=argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        rep.verdicts["error"] = "usage"
        return (OK if exc.code == 0 else USAGE), rep
    rep.command = echo(argv)
    t0 = time.perf_counter()
    try:
        status = args.fn(args, rep)
    except CapabilityError as exc:
        rep.verdicts["error"] = str(exc)
        status = CAPABILITY
    except (UsageError, ParseError, SemanticError, TableError, PreconditionError, ValueError, OSError) as exc:
        rep.verdicts["error"] = f"{type(exc).__name__}: {exc}"
        status = USAGE
    rep.timings[args.cmd] = time.perf_counter() - t0
    rep.verdicts["exit_status"] = status
    return status, rep


def echo(argv: Sequence[str]) -> list:
    """Command echo without flags that cannot change the result."""
    out, skip = [], False
    for a in argv:
        if skip:
            skip = False
        elif a == "--jobs":
            skip = True
        elif a not in ("--json", "--timings") and not a.startswith("--jobs="):
            out.append(a)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    status, rep = run(argv)
    if "--json" in argv:
        print(rep.to_json(with_timings="--timings" in argv))
    elif "error" in rep.verdicts and rep.verdicts["error"] != "usage":
        print(rep.human(), file=sys.stderr)
    elif rep.verdicts.get("error") != "usage":
        print(rep.human())
        if "text" in rep.payload:
            print(rep.payload["text"], end="")
    return status


if __name__ == "__main__":
    sys.exit(main())
