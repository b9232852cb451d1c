"""Command-line front end: ``compideal <command> <ideal file> [options]``.

Ideal files may be given as paths, ``-`` for stdin, or ``@name`` for a
bundled example (``compideal fixtures --list`` shows the names).

Exit codes: 0 success, 1 a verified statement came out false, 2 the input
is outside a result's hypotheses, 3 parse or usage error, 4 resource guard.
"""

import argparse
import json
import sys
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from . import groebner as gb
from .blowup import DEFAULT_MAX_DEPTH, chart_transform, constellation, point_basis
from .criteria import generator_bounds, mi_criterion
from .errors import IdealError, NotZeroDimensional
from .fixtures import corpus_names, corpus_text, run_all
from .hd import defect_report, hd_check, hilbert_table
from .monomial import MonomialIdeal, colength, maximal_ideal, mu, order
from .multiplicities import fiber_numerator, mixed_multiplicities, multiplicity
from .newton import closure
from .parsing import format_ideal, parse_ideal, parse_vars
from .reductions import DEFAULT_N_MAX, find_minimal_reduction, is_reduction, lemma61_checks

SAFE_INT = 2 ** 53

STATUS = {0: "ok", 1: "verified_false", 2: "hypothesis_violation",
          3: "usage_error", 4: "resource_guard"}


class UsageError(IdealError):
    exit_code = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= SAFE_INT else obj
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else jsonable(int(obj))
    if isinstance(obj, float):
        return obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "to_dict"):
        return jsonable(obj.to_dict())
    return str(obj)


def _read(source):
    if source.startswith("@"):
        name = source[1:]
        if name not in corpus_names():
            raise UsageError(f"no bundled example named {name!r}")
        return corpus_text(name)
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


class Context:
    def __init__(self, args):
        self.args = args
        self.names = parse_vars(args.vars) if args.vars else None
        self.seed = args.seed
        self.inputs = {}

    def load(self, source, label):
        parsed = parse_ideal(_read(source), names=self.names)
        self.inputs[label] = {"source": source, "kind": parsed.kind,
                              "vars": parsed.names, "generators": str(parsed)}
        return parsed

    def ideal_sources(self):
        return list(self.args.ideals) + list(self.args.ideal or [])

    def one(self, label="ideal"):
        sources = self.ideal_sources()
        if len(sources) != 1:
            raise UsageError(f"{self.args.command} takes exactly one ideal")
        return self.load(sources[0], label)

    def monomial(self):
        parsed = self.one()
        if not isinstance(parsed.ideal, MonomialIdeal):
            raise UsageError(f"{self.args.command} needs a monomial ideal")
        return parsed

    def polynomial(self, label="ideal"):
        parsed = self.one(label)
        I = parsed.ideal
        if isinstance(I, MonomialIdeal):
            I = gb.PolynomialIdeal.from_monomial(I)
        return parsed, I

    def reduction_pair(self):
        parsed = self.monomial()
        J = None
        if self.args.J:
            pj = parse_ideal(_read(self.args.J), names=parsed.names)
            J = pj.ideal
            if isinstance(J, MonomialIdeal):
                J = gb.PolynomialIdeal.from_monomial(J)
            self.inputs["J"] = {"source": self.args.J, "kind": pj.kind,
                                "vars": pj.names, "generators": str(pj)}
        return parsed, J


def cmd_order(ctx):
    I = ctx.one().ideal
    return {"order": order(I) if isinstance(I, MonomialIdeal) else I.order()}, 0


def cmd_mingens(ctx):
    p = ctx.monomial()
    return {"mu": mu(p.ideal), "generators": str(p)}, 0


def cmd_colength(ctx):
    I = ctx.one().ideal
    if isinstance(I, MonomialIdeal):
        return {"colength": colength(I), "method": "staircase"}, 0
    return {"colength": gb.gb_colength(I), "method": "groebner"}, 0


def cmd_closure(ctx):
    p = ctx.monomial()
    bar = closure(p.ideal)
    return {"generators": format_ideal(bar, p.names), "mu": mu(bar),
            "closed": bar == p.ideal}, 0


def cmd_is_closed(ctx):
    p = ctx.monomial()
    return {"closed": closure(p.ideal) == p.ideal}, 0


def cmd_basepoints(ctx):
    p = ctx.monomial()
    c = constellation(p.ideal, max_depth=ctx.args.max_depth)
    return {"point_basis": point_basis(c), "constellation": c.to_dict()}, 0


def cmd_hd_check(ctx):
    parsed = ctx.one()
    I = parsed.ideal
    if isinstance(I, MonomialIdeal):
        return hd_check(I).to_dict(), 0
    lengths = gb.exceptional_lengths(I)
    rep = defect_report(gb.gb_colength(I), [I.order()], I.dim, [sum(lengths)])
    out = rep.to_dict()
    out["chart_lengths"] = lengths
    out["note"] = ("the input is taken to be complete; each point of the first "
                   "exceptional divisor is counted once")
    return out, 0


def cmd_hilbert(ctx):
    p = ctx.monomial()
    return hilbert_table(p.ideal, n_max=ctx.args.max_n).to_dict(), 0


def cmd_mult(ctx):
    p = ctx.monomial()
    I = p.ideal
    e = multiplicity(I)
    mixed = mixed_multiplicities([maximal_ideal(I.dim), I], seed=ctx.seed)
    e_M = {i: mixed.mixed[(I.dim - i, i)] for i in range(I.dim + 1)}
    return {"e": e, "e_i(M|I)": e_M, "mixed": mixed.to_dict()}, 0


def cmd_mixed_mult(ctx):
    sources = ctx.ideal_sources()
    if not sources:
        raise UsageError("mixed-mult needs at least one ideal")
    ideals = []
    for k, src in enumerate(sources):
        p = ctx.load(src, f"ideal{k + 1}")
        if not isinstance(p.ideal, MonomialIdeal):
            raise UsageError("mixed-mult needs monomial ideals")
        ideals.append(p.ideal)
    report = mixed_multiplicities(ideals, seed=ctx.seed)
    code = 1 if report.discrepancies else 0
    return report.to_dict(), code


def cmd_fiber(ctx):
    p = ctx.monomial()
    return fiber_numerator(p.ideal, n_max=ctx.args.max_n).to_dict(), 0


def cmd_mi_check(ctx):
    p = ctx.monomial()
    report = mi_criterion(p.ideal)
    out = report.to_dict()
    if not report.applicable:
        out["binding"] = False
        return out, 2
    return out, 0 if report.criterion_consistent else 1


def cmd_bounds_check(ctx):
    p = ctx.monomial()
    report = generator_bounds(p.ideal)
    out = report.to_dict()
    if not report.applicable:
        out["binding"] = False
        return out, 2
    return out, 0 if report.bounds_hold else 1


def _chart(ctx, names):
    raw = ctx.args.chart
    if raw is None:
        raise UsageError("transform needs --chart (index or variable name)")
    if raw in names:
        return names.index(raw)
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"bad chart {raw!r}") from None


def cmd_transform(ctx):
    parsed = ctx.one()
    I = parsed.ideal
    i = _chart(ctx, parsed.names)
    if not 0 <= i < I.dim:
        raise UsageError(f"chart {i} out of range")
    if isinstance(I, MonomialIdeal):
        T = chart_transform(I, i)
        out = {"chart": i, "generators": format_ideal(T, parsed.names),
               "unit": T.is_unit}
        try:
            out["colength"] = colength(T)
        except IdealError:
            out["colength"] = None
        return out, 0
    T = gb.poly_transform(I, i)
    basis = T.groebner_basis()
    out = {"chart": i, "generators": format_ideal(T, parsed.names),
           "groebner_basis": [g.to_str(parsed.names) for g in basis]}
    try:
        out["colength"] = gb.gb_colength(T)
    except NotZeroDimensional:
        out["colength"] = None
    return out, 0


def cmd_gb_colength(ctx):
    parsed, I = ctx.polynomial()
    basis = I.groebner_basis()
    return {"colength": gb.gb_colength(I),
            "groebner_basis": [g.to_str(parsed.names) for g in basis]}, 0


def _find_J(ctx, I):
    found = find_minimal_reduction(I, seed=ctx.seed)
    if found is None:
        raise UsageError("no reduction found; supply one with --J")
    ctx.inputs["J"] = {"source": f"search(seed={ctx.seed})",
                       "generators": format_ideal(found.J)}
    return found.J


def cmd_reduction_check(ctx):
    parsed, J = ctx.reduction_pair()
    if J is None:
        J = _find_J(ctx, parsed.ideal)
    n_max = DEFAULT_N_MAX if ctx.args.max_n is None else ctx.args.max_n
    report = is_reduction(J, parsed.ideal, n_max)
    return report.to_dict(), 0


def cmd_lemma61(ctx):
    parsed, J = ctx.reduction_pair()
    if J is None:
        J = _find_J(ctx, parsed.ideal)
    kw = {} if ctx.args.max_n is None else {"n_max": ctx.args.max_n}
    report = lemma61_checks(parsed.ideal, J, **kw)
    rec = report.lemma61
    failed = rec["low_order_check"] is False or rec["high_order_check"] is False
    return report.to_dict(), 1 if failed else 0


def cmd_fixtures(ctx):
    if ctx.args.list:
        return {"examples": corpus_names()}, 0
    checks = run_all()
    failed = [c for c in checks if not c.passed]
    return {"total": len(checks), "failed": len(failed),
            "checks": [c.to_dict() for c in checks]}, 1 if failed else 0


COMMANDS = {
    "order": cmd_order,
    "mingens": cmd_mingens,
    "colength": cmd_colength,
    "closure": cmd_closure,
    "is-closed": cmd_is_closed,
    "basepoints": cmd_basepoints,
    "hd-check": cmd_hd_check,
    "hilbert": cmd_hilbert,
    "mult": cmd_mult,
    "mixed-mult": cmd_mixed_mult,
    "fiber": cmd_fiber,
    "mi-check": cmd_mi_check,
    "bounds-check": cmd_bounds_check,
    "transform": cmd_transform,
    "gb-colength": cmd_gb_colength,
    "reduction-check": cmd_reduction_check,
    "lemma61": cmd_lemma61,
    "fixtures": cmd_fixtures,
}


def build_parser():
    p = _Parser(prog="compideal", description="Exact computations with complete ideals.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("ideals", nargs="*", help="ideal files, '-' for stdin, @name for bundled examples")
    p.add_argument("--ideal", action="append", help="ideal file (same as a positional argument)")
    p.add_argument("--vars", help="variable names, e.g. 'x,y' or a count d for x1..xd")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--chart", help="chart for transform: 0-based index or variable name")
    p.add_argument("--J", help="file with the candidate reduction")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-depth", type=int, default=DEFAULT_MAX_DEPTH, dest="max_depth")
    p.add_argument("--no-timestamp", action="store_true", dest="no_timestamp")
    p.add_argument("--list", action="store_true", help="fixtures: list bundled examples")
    return p


def _render_text(report):
    lines = []
    for key in ("command", "status", "exit_code", "error"):
        if key in report:
            lines.append(f"{key}: {report[key]}")
    for label, info in report.get("inputs", {}).items():
        lines.append(f"{label}: {info.get('generators')}")
    result = report.get("result") or {}
    for key, value in result.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _execute(argv):
    report = {"command": None, "inputs": {}, "result": None, "status": None,
              "version": __version__}
    args = None
    try:
        args = build_parser().parse_args(argv)
        report["command"] = args.command
        ctx = Context(args)
        try:
            result, code = COMMANDS[args.command](ctx)
        finally:
            report["inputs"] = ctx.inputs
        report["result"] = result
    except IdealError as exc:
        code = exc.exit_code
        report["error"] = f"{type(exc).__name__}: {exc}"
    report["status"] = STATUS[code]
    report["exit_code"] = code
    stamp = args is None or not args.no_timestamp
    report["timestamp"] = datetime.now(timezone.utc).isoformat() if stamp else None
    return code, jsonable(report), args


def run(argv=None):
    """Run one command; returns (exit code, report dict)."""
    code, report, _ = _execute(argv)
    return code, report


def main(argv=None):
    code, report, args = _execute(argv)
    if args is not None and args.format == "text":
        print(_render_text(report))
    else:
        print(json.dumps(report, indent=2, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
