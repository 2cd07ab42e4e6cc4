"""Command-line toolkit.

Subcommands: analyze one polynomial, search a coefficient space, run the
verification suites, evaluate closed-form bounds, or build a named family.
Data goes to stdout (or --out), progress to stderr.  Exit codes: 0 ok,
1 hard verification failure, 2 usage error, 3 cap exceeded.

Polynomial syntax: comma-separated F_p coordinates with an @slot marker
per term, terms concatenated with commas; "1,0,1@3,1@0" is the element
with coordinates (1,0,1) as coefficient of x^(q^3) plus the element 1 as
coefficient of x.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional

from .field import CapExceededError, ctx_create
from .linpoly import LinearizedPoly
from .linset import classify, weight_spectrum
from .bounds import (
    BoundParams,
    chebotarev_ni_bound,
    curve_bound,
    evaluate_bounds,
    r_lower_bound_curve,
)
from .families import (
    default_rank4_params,
    make_basis_club,
    make_lp,
    make_q5_club,
    make_rank4_rep,
    make_trace,
    make_twisted_trace,
    verify_family,
)
from .report import (
    ReportRecord,
    RunConfig,
    poly_input_dict,
    render_csv,
    render_json,
    spectrum_dict,
)
from .search import DEFAULT_SEARCH_CAP, run_search, space_size
from .verify import SUITES, run_suites


def parse_poly(ctx, text: str) -> LinearizedPoly:
    """Parse the coordinate@slot syntax into a polynomial."""
    codes = [0] * ctx.n
    pending: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if "@" in token:
            digit_str, slot_str = token.split("@", 1)
            pending.append(int(digit_str))
            slot = int(slot_str)
            if not 0 <= slot < ctx.n:
                raise ValueError(f"slot {slot} out of range for n={ctx.n}")
            if any(d < 0 or d >= ctx.p for d in pending):
                raise ValueError("coordinates must lie in [0, p)")
            codes[slot] = ctx.add(codes[slot], ctx.code_of(pending))
            pending = []
        else:
            pending.append(int(token))
    if pending:
        raise ValueError("dangling coordinates without an @slot marker")
    return LinearizedPoly.from_codes(ctx, codes)


def _emit(args, config: RunConfig, records, summary) -> None:
    if args.format == "json":
        text = render_json(config, records, summary)
    else:
        text = render_csv(config, records, summary)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _ctx_from_args(args):
    return ctx_create(args.p, args.e, args.n, max_order=args.cap)


def cmd_analyze(args) -> int:
    ctx = _ctx_from_args(args)
    f = parse_poly(ctx, args.poly)
    t0 = time.perf_counter()
    spec = weight_spectrum(f, args.t)
    bounds_rep = evaluate_bounds(f, args.t, spec)
    elapsed = time.perf_counter() - t0
    record = ReportRecord(
        input=poly_input_dict(f, args.t),
        spectrum=spectrum_dict(spec),
        classification=classify(spec).as_dict(),
        bounds=bounds_rep.as_dict() if bounds_rep else None,
        timing_s=round(elapsed, 6) if args.timing else None,
    )
    config = RunConfig("analyze", args.p, args.e, args.n, args.t)
    _emit(args, config, [record], {"records": 1})
    return 0


def cmd_search(args) -> int:
    ctx = _ctx_from_args(args)
    support = tuple(int(s) for s in args.support.split(","))
    ranges = {}
    for spec in args.range or []:
        slot, lo, hi = spec.split(":")
        ranges[int(slot)] = (int(lo), int(hi))
    size = space_size(ctx, support, ranges)
    print(f"searching {size} polynomials over GF({ctx.p}^{ctx.degree})", file=sys.stderr)
    records = []
    hist_all: dict[int, int] = {}
    hist_proper: dict[int, int] = {}
    by_lin: dict[int, int] = {}
    total = 0
    for rec in run_search(ctx, support, args.t, ranges, args.search_cap, args.workers):
        total += 1
        hist_all[rec.r] = hist_all.get(rec.r, 0) + 1
        by_lin[rec.linearity] = by_lin.get(rec.linearity, 0) + 1
        if rec.linearity == 1:
            hist_proper[rec.r] = hist_proper.get(rec.r, 0) + 1
        if args.records:
            records.append(
                ReportRecord(
                    input={
                        "p": ctx.p,
                        "e": ctx.e,
                        "n": ctx.n,
                        "t": rec.t,
                        "poly": [
                            {"slot": i, "coords": list(ctx.coeffs_of(c))}
                            for i, c in enumerate(rec.codes)
                            if c
                        ],
                    },
                    extra={
                        "counts": {str(i): c for i, c in sorted(rec.counts.items())},
                        "r": rec.r,
                        "max_weight": rec.max_weight,
                        "linearity": rec.linearity,
                    },
                )
            )
    summary = {
        "enumerated": total,
        "r_histogram_all": dict(sorted(hist_all.items())),
        "r_histogram_proper": dict(sorted(hist_proper.items())),
        "realized_r_all": sorted(hist_all),
        "realized_r_proper": sorted(hist_proper),
        "by_linearity_degree": dict(sorted(by_lin.items())),
    }
    summary["r_histogram_all"] = {str(k): v for k, v in summary["r_histogram_all"].items()}
    summary["r_histogram_proper"] = {str(k): v for k, v in summary["r_histogram_proper"].items()}
    summary["by_linearity_degree"] = {str(k): v for k, v in summary["by_linearity_degree"].items()}
    config = RunConfig(
        "search", args.p, args.e, args.n, args.t,
        extra={"support": list(support), "workers": args.workers},
    )
    _emit(args, config, records, summary)
    return 0


def cmd_verify(args) -> int:
    names = args.suite.split(",") if args.suite else ["all"]
    results = run_suites(names, q_filter=args.q, n_filter=args.n_filter)
    hard_fail = False
    records = []
    for res in results:
        print(res.line())
        if res.hard and not res.passed:
            hard_fail = True
        records.append(
            ReportRecord(
                input={"claim": res.claim},
                extra={
                    "description": res.description,
                    "hard": res.hard,
                    "passed": res.passed,
                    "details": res.details,
                },
            )
        )
    summary = {
        "claims": len(results),
        "passed": sum(1 for r in results if r.passed),
        "hard_failures": sum(1 for r in results if r.hard and not r.passed),
    }
    if args.out:
        config = RunConfig("verify", extra={"suites": names})
        _emit(args, config, records, summary)
    print(
        f"{summary['passed']}/{summary['claims']} claims passed, "
        f"{summary['hard_failures']} hard failures",
        file=sys.stderr,
    )
    return 1 if hard_fail else 0


def cmd_bounds(args) -> int:
    params = BoundParams(
        q=args.q, n=args.n, k=args.k, t=args.t, v=args.v, h=args.hdim, W=args.W
    )
    case = None
    if args.case != "auto":
        case = args.case
    elif args.t == 0:
        case = "t0"
    elif args.t == 1 and args.k >= 3:
        case = "t1"
    elif args.t >= 2:
        case = "t2plus"
    cb = curve_bound(params, case)
    rb = r_lower_bound_curve(params, case)
    cheb = chebotarev_ni_bound(args.q, args.n, max(args.k, args.t)) if args.t >= 1 else None
    record = ReportRecord(
        input={"q": args.q, "n": args.n, "k": args.k, "t": args.t, "v": args.v,
               "h": args.hdim, "W": args.W},
        bounds={
            "curve": cb.as_dict(),
            "r_curve": rb.as_dict(),
            "chebotarev": None if cheb is None else str(cheb),
        },
    )
    config = RunConfig("bounds", extra={"q": args.q, "n": args.n})
    _emit(args, config, [record], {})
    return 0


def cmd_family(args) -> int:
    ctx = _ctx_from_args(args)
    name = args.family
    if name == "trace":
        fam = make_trace(ctx)
    elif name == "twisted-trace":
        fam = make_twisted_trace(ctx, args.ell, args.m, args.s, args.j)
    elif name == "lp":
        if args.delta is None:
            raise ValueError("lp needs --delta")
        delta = parse_poly(ctx, args.delta + "@0").coeff(0)
        fam = make_lp(ctx, delta, args.s, args.lp_form)
    elif name == "q5-club":
        fam = make_q5_club(ctx)
    elif name == "basis-club":
        lam = ctx.generator() if args.lam is None else parse_poly(ctx, args.lam + "@0").coeff(0)
        fam = make_basis_club(ctx, lam)
    elif name.startswith("rank4:"):
        case = name.split(":", 1)[1]
        params = default_rank4_params(ctx, case)
        if params is None:
            print(f"case {case} has no valid parameters over this field", file=sys.stderr)
            return 0
        fam = make_rank4_rep(ctx, case, **params)
    else:
        raise ValueError(f"unknown family {name!r}")
    chk = verify_family(fam)
    spec = chk.spectrum
    record = ReportRecord(
        input={"family": fam.name, "p": ctx.p, "e": ctx.e, "n": ctx.n,
               "params": {k: (v.code if hasattr(v, "code") else v) for k, v in fam.params.items()},
               "t": fam.index},
        spectrum=spectrum_dict(spec),
        classification=chk.classification.as_dict(),
        extra={"expected": {k: str(v) for k, v in fam.expected.items()},
               "matches": chk.matches,
               "mismatches": list(chk.mismatches)},
    )
    config = RunConfig("family", args.p, args.e, args.n, extra={"family": name})
    _emit(args, config, [record], {"matches": chk.matches})
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qfat",
        description="Weight spectra and fatness of linear sets from linearized polynomials",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, field=True):
        if field:
            p.add_argument("--p", type=int, required=True, help="prime characteristic")
            p.add_argument("--e", type=int, default=1, help="q = p^e")
            p.add_argument("--n", type=int, required=True, help="extension degree over F_q")
        p.add_argument("--cap", type=int, default=1 << 26, help="field size cap")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--timing", action="store_true", help="include timings in records")

    p_an = sub.add_parser("analyze", help="spectrum, classification and bounds of one polynomial")
    add_common(p_an)
    p_an.add_argument("--t", type=int, default=0, help="index of the linear set")
    p_an.add_argument("--poly", required=True, help="coordinates@slot syntax")
    p_an.set_defaults(func=cmd_analyze)

    p_se = sub.add_parser("search", help="exhaustive scan of a coefficient space")
    add_common(p_se)
    p_se.add_argument("--t", type=int, default=0)
    p_se.add_argument("--support", required=True, help="comma-separated q-degree slots")
    p_se.add_argument("--range", action="append", help="slot:lo:hi code range, repeatable")
    p_se.add_argument("--workers", type=int, default=1)
    p_se.add_argument("--search-cap", type=int, default=DEFAULT_SEARCH_CAP)
    p_se.add_argument("--records", action="store_true", help="emit one record per polynomial")
    p_se.set_defaults(func=cmd_search)

    p_ve = sub.add_parser("verify", help="run verification suites against computed truth")
    add_common(p_ve, field=False)
    p_ve.add_argument("--suite", default="all", help=f"comma list from {sorted(SUITES)} or all")
    p_ve.add_argument("--q", type=int, help="restrict to one q")
    p_ve.add_argument("--n", dest="n_filter", type=int, help="restrict to one n")
    p_ve.set_defaults(func=cmd_verify)

    p_bo = sub.add_parser("bounds", help="evaluate the closed-form lower bounds")
    add_common(p_bo, field=False)
    p_bo.add_argument("--q", type=int, required=True)
    p_bo.add_argument("--n", type=int, required=True)
    p_bo.add_argument("--k", type=int, required=True)
    p_bo.add_argument("--t", type=int, default=0)
    p_bo.add_argument("--v", type=int, default=0)
    p_bo.add_argument("--hdim", type=int, default=0, help="kernel dimension")
    p_bo.add_argument("--W", type=int, default=2, help="maximum weight")
    p_bo.add_argument("--case", default="auto", choices=("auto", "t0", "t1", "t2plus"))
    p_bo.set_defaults(func=cmd_bounds)

    p_fa = sub.add_parser("family", help="construct a named family and verify its prediction")
    add_common(p_fa)
    p_fa.add_argument("--family", required=True,
                      help="trace | twisted-trace | lp | q5-club | basis-club | rank4:<case>")
    p_fa.add_argument("--ell", type=int, default=2)
    p_fa.add_argument("--m", type=int, default=2)
    p_fa.add_argument("--s", type=int, default=1)
    p_fa.add_argument("--j", type=int, default=0)
    p_fa.add_argument("--delta", help="F_p coordinates of delta (no @slot)")
    p_fa.add_argument("--lam", help="F_p coordinates of lambda (no @slot)")
    p_fa.add_argument("--lp-form", choices=("f", "g"), default="f")
    p_fa.set_defaults(func=cmd_family)

    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
