"""Command line: ``tauli {constants,table,thresholds,li,region,verify}``.

Exit status 0 on success, 1 on a table mismatch or failed verification,
2 on usage or domain errors.  An inadmissible parameter choice is a valid
answer and exits 0.
"""

import argparse
import csv
import json
import math
import sys

from . import constants as C
from . import oracle, regions, tables, thresholds
from .errors import DomainError, InadmissibleError, ZeroFileError
from .mobius import li_partial
from .zero_model import catalog_dirichlet, catalog_newform, load_model, load_zeros

FORMATS = ("human", "csv", "json-lines")


class UsageError(Exception):
    pass


# ----------------------------------------------------------------------------
# output


def _cell(v):
    if isinstance(v, float):
        return format(v, ".17g")
    if v is None:
        return ""
    return str(v)


def _human_cell(v):
    if isinstance(v, float):
        return format(v, ".12g")
    if v is None:
        return "-"
    return str(v)


def emit(records, fmt, out=None, title=None):
    """Write a list of dicts (all with the same keys, in order)."""
    out = out or sys.stdout
    if not records:
        return
    keys = list(records[0])
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(keys)
        for r in records:
            w.writerow([_cell(r[k]) for k in keys])
    elif fmt == "json-lines":
        for r in records:
            out.write(json.dumps({k: r[k] for k in keys}) + "\n")
    else:
        if title:
            out.write(title + "\n")
        rows = [[_human_cell(r[k]) for k in keys] for r in records]
        widths = [max(len(k), *(len(row[i]) for row in rows)) for i, k in enumerate(keys)]
        out.write("  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip() + "\n")
        for row in rows:
            out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


# ----------------------------------------------------------------------------
# model selection


def _add_model_args(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--dirichlet", type=int, metavar="Q", help="primitive character modulus q >= 3")
    g.add_argument("--newform", action="store_true", help="level 1 weight 12 newform")
    g.add_argument("--model", metavar="FILE", help="model file with key = value lines")


def _model_from(args):
    if args.dirichlet is not None:
        try:
            return catalog_dirichlet(args.dirichlet), f"dirichlet q={args.dirichlet}"
        except DomainError as exc:
            raise UsageError(f"--dirichlet: {exc}") from None
    if args.newform:
        return catalog_newform()[0], "newform level 1 weight 12"
    try:
        with open(args.model) as fh:
            return load_model(fh), args.model
    except (OSError, ZeroFileError) as exc:
        raise UsageError(f"--model: {exc}") from None


def _check_tau(tau):
    if not tau > 1 / math.e:
        raise UsageError(f"--tau: must exceed 1/e, got {tau}")


# ----------------------------------------------------------------------------
# subcommands


def cmd_constants(args):
    model, label = _model_from(args)
    _check_tau(args.tau)
    b = C.constant_bundle(model, args.tau)
    recs = [{"name": k, "value": v} for k, v in b.as_dict().items()]
    recs.append({"name": "K2 log factor", "value": abs(math.log(model.A_F + abs(b.M_F) / float(C.SQRT3_FLOOR)))})
    if args.T is not None:
        try:
            recs.append({"name": f"K3(T={args.T:g})", "value": b.K3(args.T)})
        except DomainError as exc:
            raise UsageError(f"--T: {exc}") from None
    try:
        recs.append({"name": "K3 > 0 from T", "value": C.k3_positivity_threshold(model, args.tau)})
    except DomainError:
        pass
    emit(recs, args.format, title=f"constants for {label}, tau={args.tau:g}")
    return 0


def cmd_table(args):
    rows = tables.reproduce(args.which, jobs=args.jobs)
    names = {
        1: ("N", "grid_max", "N_exceptional"),
        2: ("n0", "n1"),
        3: ("N_exceptional",),
    }[args.which]
    keys = {1: ("tau", "R"), 2: ("T", "tau", "R"), 3: ("tau", "R")}[args.which]
    recs = []
    for r in rows:
        rec = dict(zip(keys, r.key))
        for name, got, want in zip(names, r.computed, r.expected):
            rec[name] = got
            rec[name + "_expected"] = want
        rec["match"] = "ok" if r.ok else "MISMATCH"
        recs.append(rec)
    emit(recs, args.format, title=f"table {args.which}")
    bad = sum(not r.ok for r in rows)
    if bad:
        print(f"{bad} row(s) differ from the published values", file=sys.stderr)
        return 1
    return 0


def _report_records(report):
    recs = []
    for k in ("theorem", "N", "grid_max", "n0", "n1", "admissible", "binding", "reason"):
        v = getattr(report, k)
        if v is not None:
            recs.append({"name": k, "value": v})
    if report.theorem in ("main1", "exp1"):
        recs.append({"name": "grid count", "value": len(report.grid)})
    for k, v in report.diagnostics:
        recs.append({"name": k, "value": v})
    return recs


def cmd_thresholds(args):
    model, label = _model_from(args)
    _check_tau(args.tau)
    try:
        if args.theorem == 1:
            rep = thresholds.theorem1_N(model, args.tau, args.R)
        elif args.theorem == 3:
            rep = thresholds.theorem3_N(model, args.tau, args.R)
        else:
            if args.T is None:
                raise UsageError("--T is required for theorem 2")
            rep = thresholds.theorem2(model, args.T, args.tau, args.R, direct=args.direct)
    except DomainError as exc:
        raise UsageError(f"--R/--T: {exc}") from None
    emit(_report_records(rep), args.format, title=f"theorem {args.theorem} thresholds for {label}, tau={args.tau:g}, R={args.R}")
    if not rep.admissible:
        print(f"inadmissible: {rep.reason}", file=sys.stderr)
    return 0


def _parse_n_list(text):
    try:
        ns = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--n: not a comma separated list of integers: {text!r}") from None
    if not ns or min(ns) < 1:
        raise UsageError("--n: need positive integers")
    return ns


def cmd_li(args):
    _check_tau(args.tau)
    ns = _parse_n_list(args.n)
    try:
        if args.zeros == "-":
            zs = load_zeros(sys.stdin, args.tau)
        else:
            with open(args.zeros, "rb") as fh:
                zs = load_zeros(fh.read(), args.tau)
    except (OSError, ZeroFileError, DomainError) as exc:
        raise UsageError(f"--zeros: {exc}") from None
    recs = []
    for n in ns:
        v = li_partial(zs, n)
        recs.append({"n": n, "re": v.real, "im": v.imag, "terms": len(zs)})
    emit(recs, args.format, title=f"truncated tau-Li coefficients, tau={args.tau:g}")
    return 0


def cmd_region(args):
    Rs = [r.strip() for r in args.R.split(",") if r.strip()]
    try:
        rows = regions.comparison_curves(args.q, args.tau, Rs, t_max=args.t_max, samples=args.samples)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        if args.format == "json-lines":
            emit([{"re": a, "im": b, "label": c} for a, b, c in rows], "json-lines", out)
        else:
            regions.write_curve_csv(rows, out)
    finally:
        if args.out:
            out.close()
    return 0


def _run_one_suite(name, trials, seed):
    return name, oracle.run_suite(name, trials, seed)


def cmd_verify(args):
    names = list(oracle.SUITES) if args.suite == "all" else [args.suite]
    seed = 0 if args.seed is None else args.seed
    if args.jobs > 1 and len(names) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_run_one_suite, names, [args.trials] * len(names), [seed] * len(names)))
    else:
        results = [_run_one_suite(n, args.trials, seed) for n in names]
    recs = []
    failed = 0
    for name, verdicts in results:
        bad = [v for v in verdicts if not v.passed]
        failed += len(bad)
        # Signed slack of the tightest check; the detector compares two sides
        # of an equivalence, so it has none.
        if name == "detector":
            margin = None
        elif name == "min20":
            margin = min(v.lhs - v.rhs for v in verdicts)
        else:
            margin = min(v.rhs - v.lhs for v in verdicts)
        recs.append({"suite": name, "checks": len(verdicts), "passed": len(verdicts) - len(bad), "failed": len(bad), "worst margin": margin})
    emit(recs, args.format, title=f"verification, seed={seed}")
    return 1 if failed else 0


# ----------------------------------------------------------------------------
# parser


def _common(p, suppress):
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--format", choices=FORMATS, default=d if suppress else "human")
    p.add_argument("--seed", type=int, default=d)
    p.add_argument("--jobs", type=int, default=d if suppress else 1)


def build_parser():
    parser = argparse.ArgumentParser(prog="tauli", description="tau-Li coefficient zero-region thresholds")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        _common(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = add("constants", cmd_constants, "explicit constants M_F, K1..K4")
    _add_model_args(p)
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--T", type=float)

    p = add("table", cmd_table, "recompute a published table and diff it")
    p.add_argument("which", type=int, choices=(1, 2, 3))

    p = add("thresholds", cmd_thresholds, "N / grid or [n0, n1] for one theorem")
    p.add_argument("theorem", type=int, choices=(1, 2, 3))
    _add_model_args(p)
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--R", required=True, help="kept as text so 1.0000000001 is read exactly")
    p.add_argument("--T", type=float)
    p.add_argument("--direct", action="store_true", help="theorem 2 via the direct scan")

    p = add("li", cmd_li, "truncated tau-Li coefficients over a zero file")
    p.add_argument("--zeros", required=True, help="tab separated re/im file, '-' for stdin")
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--n", required=True, help="comma separated indices")

    p = add("region", cmd_region, "boundary curves as CSV")
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--R", required=True, help="one value or a comma separated list")
    p.add_argument("--q", type=int, help="add the classical curves for modulus q")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--t-max", type=float, default=80.0)
    p.add_argument("--out", help="output file (default stdout)")

    p = add("verify", cmd_verify, "brute-force oracle suites")
    p.add_argument("--suite", choices=(*oracle.SUITES, "all"), default="all")
    p.add_argument("--trials", type=int, default=100)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, InadmissibleError) as exc:
        print(f"tauli {args.command}: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
