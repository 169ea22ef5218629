"""Command-line driver: ``hatzeta series|verify|numeric|eigen``.

Exit codes: 0 all checks pass, 1 some check failed or errored, 2 usage or
input error, 3 weight outside the rationally supported range.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import heckespace as hs
from . import numerics as nm
from .algebra import format_rational
from .periodpoly import HomPoly, poly_from_json, poly_to_json
from .qseries import eisenstein_series, eta_delta, zeta_hat_q, zeta_q, zeta_q_parity
from .report import RelationReport, reports_to_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2, 3

THM2_WEIGHTS = (4, 6, 8, 10, 12, 14, 16)


class UsageError(Exception):
    pass


def _weights(text: str) -> list[int]:
    """'12', '4,6,8' or '4-16' (even weights in range)."""
    try:
        if "-" in text:
            lo, hi = (int(x) for x in text.split("-", 1))
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad weight list {text!r}")


def _single_k(args, default: int | None = None) -> int:
    ks = args.k or ([default] if default is not None else None)
    if not ks or len(ks) != 1:
        raise UsageError("exactly one --k is required")
    return ks[0]


def _load_poly(path: str) -> HomPoly:
    try:
        return poly_from_json(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read period polynomial {path}: {exc}")


def _even_k(k: int, lo: int = 4) -> None:
    if k < lo or k % 2:
        raise UsageError(f"weight {k} must be even and >= {lo}")


# ------------------------------------------------------------------ series


def cmd_series(args) -> int:
    n = args.n
    if n < 0:
        raise UsageError("--n must be >= 0")
    kind = args.kind
    params: dict = {}
    if kind == "zeta":
        k = _single_k(args)
        if k < 1:
            raise UsageError("zeta needs --k >= 1")
        series, params = zeta_q(k, n), {"k": k}
    elif kind == "zetahat":
        if args.r is None or args.s is None or args.r < 1 or args.s < 1:
            raise UsageError("zetahat needs --r >= 1 and --s >= 1")
        series, params = zeta_hat_q(args.r, args.s, n), {"r": args.r, "s": args.s}
    elif kind == "parity":
        k = _single_k(args)
        if k < 1:
            raise UsageError("parity needs --k >= 1")
        series, params = zeta_q_parity(k, args.parity, n), {"k": k, "parity": args.parity}
    elif kind == "eta":
        series = eta_delta(n)
    else:
        k = _single_k(args)
        _even_k(k)
        series, params = eisenstein_series(k, n), {"k": k}
    coeffs = [format_rational(c) for c in series.coeffs]
    if args.format == "json":
        print(json.dumps({"kind": kind, "params": {k: str(v) for k, v in params.items()}, "order": n, "coeffs": coeffs}, indent=2, sort_keys=True))
    else:
        print(", ".join(coeffs))
    return EXIT_OK


# ------------------------------------------------------------------ verify


def _cusp_records(k: int, args, nmax: int) -> list[hs.EigenformRecord]:
    if args.poly:
        rec = hs.record_from_poly(_load_poly(args.poly), nmax)
        if rec.weight != k:
            raise UsageError(f"--poly has weight {rec.weight}, expected {k}")
        return [rec]
    return [r for r in hs.eigen_split(k, min(nmax, 20)) if r.is_cusp]


def _poly_targets(k: int, args) -> list[HomPoly]:
    """Eisenstein polynomial plus every rational cusp eigen-polynomial."""
    if args.poly:
        return [_load_poly(args.poly)]
    return [hs.eisenstein_poly(k)] + [r.period.poly for r in hs.eigen_split(k, 2) if r.is_cusp]


def _verify_reports(target: str, args) -> list[RelationReport]:
    N = args.n
    if target == "thm2":
        ks = args.k or list(THM2_WEIGHTS)
        for k in ks:
            _even_k(k)
        return [hs.assemble_thm2(k, N) for k in ks]
    if target == "example-k4k6":
        return hs.example_k4k6_reports(N)
    ks = args.k or [12]
    out: list[RelationReport] = []
    for k in ks:
        _even_k(k)
        if target == "thm1":
            recs = _cusp_records(k, args, N)
            if not recs:
                rep = RelationReport("thm1", {"k": k, "N": N}, "pass", f"dim S_{k} = 0: nothing to assemble")
                out.append(rep)
            for rec in recs:
                out.append(hs.thm1_report(rec.period, N))
            if k == 12 and not args.poly:
                out.append(hs.thm1_report(hs.delta_example(), N, eta_delta(N)))
                out.extend(hs.printed_delta_reports(N))
        elif target == "sigma":
            out.append(hs.sigma_report(k, args.nmax or 200))
        elif target == "hecke":
            nmax = args.nmax or 20
            for P in _poly_targets(k, args):
                out.append(hs.hecke_report(P, nmax))
            if k == 12 and not args.poly:
                out.append(hs.hecke_report(hs.delta_example().poly, max(nmax, 30), eta_delta(max(nmax, 30))))
        else:
            fn = {"t3": hs.t3_report, "lemma-t1": hs.lemma_t1_report, "lemma-t2": hs.lemma_t2_report}[target]
            out.extend(fn(P, N) for P in _poly_targets(k, args))
    return out


def _unsupported_report(check: str, exc: hs.UnsupportedWeight) -> RelationReport:
    return RelationReport(check, {"k": exc.k}, "error", str(exc))


def cmd_verify(args) -> int:
    if args.target == "all":
        return _run_all(args)
    try:
        reports = _verify_reports(args.target, args)
    except hs.UnsupportedWeight as exc:
        _emit([_unsupported_report(args.target, exc)], args.format)
        return EXIT_UNSUPPORTED
    return _emit(reports, args.format)


# ----------------------------------------------------------------- numeric


def _relation_coeffs(k: int, args) -> list[hs.RelationCoefficients]:
    if args.poly:
        return [hs.relation_coefficients(hs.PeriodData.from_poly(_load_poly(args.poly)))]
    if k == 12:
        return [hs.relation_coefficients(hs.delta_example())]
    return [hs.relation_coefficients(r.period) for r in hs.eigen_split(k, 2) if r.is_cusp]


def _numeric_reports(target: str, args) -> list[RelationReport]:
    tol = args.tol
    if target == "relation":
        out = []
        for k in args.k or [12]:
            _even_k(k)
            out.extend(nm.verify_relation(c, tol or 1e-8) for c in _relation_coeffs(k, args))
        return out
    if target == "gkz":
        out = []
        for k in args.k or [12]:
            _even_k(k)
            out.extend(nm.gkz_check(c, tol or 1e-6) for c in _relation_coeffs(k, args))
        return out
    if target == "sumformula":
        ks = args.k or list(range(3, 13))
        if min(ks) < 3:
            raise UsageError("sum formula needs k >= 3")
        return [nm.sum_formula_check(k, tol or 1e-6) for k in ks]
    if target in ("level2", "mdavasli"):
        fn = nm.level2_check if target == "level2" else nm.mdavasli_check
        if args.r is not None and args.s is not None:
            pairs = [(args.r, args.s)]
        elif args.r is None and args.s is None:
            pairs = [(r, s) for w in range(3, 11) for s in range(2, w) for r in [w - s]]
        else:
            raise UsageError(f"{target} needs both --r and --s (or neither for the sweep)")
        if any(r < 1 or s < 2 for r, s in pairs):
            raise UsageError("need r >= 1 and s >= 2")
        return [fn(r, s, tol or 1e-8) for r, s in pairs]
    if target == "harmonic":
        return [nm.harmonic_product_check(a, b, tol or 1e-7) for a, b in ((1, 1), (1, 2), (2, 2))]
    if target == "oz":
        ks = args.k or list(range(4, 11))
        return [nm.oz_sum_check(k, w, tol or 1e-7) for k in ks for w in (False, True)]
    # qlimit
    if args.kind == "eta":
        N = args.n if args.n_given else 300
        return [nm.q_limit_check(12, eta_delta(N), 0.0, qs=(0.5, 0.7, 0.9), abs_tol=1e-3, growth=7, name="qlimit-eta")]
    k = _single_k(args, 2)
    if k < 2:
        raise UsageError("qlimit needs --k >= 2")
    power = args.power if args.power is not None else k
    N = args.n if args.n_given else 2000
    series = zeta_q(k, N)
    if power == k:
        return [nm.q_limit_check(k, series, nm.zeta_num(k).value)]
    if power < k:
        raise UsageError("--power below the weight diverges as q -> 1")
    return [nm.q_limit_check(power, series, 0.0, abs_tol=1e-2, growth=k)]


def cmd_numeric(args) -> int:
    try:
        reports = _numeric_reports(args.target, args)
    except nm.BudgetExceeded as exc:
        reports = [RelationReport(args.target, {}, "error", f"budget exceeded: {exc}")]
    except nm.OrderTooSmall as exc:
        reports = [RelationReport(args.target, {}, "error", str(exc))]
    except hs.UnsupportedWeight as exc:
        _emit([_unsupported_report(args.target, exc)], args.format)
        return EXIT_UNSUPPORTED
    return _emit(reports, args.format)


# ------------------------------------------------------------------- eigen


def cmd_eigen(args) -> int:
    k = _single_k(args)
    _even_k(k)
    nmax = args.nmax or 20
    try:
        records = hs.eigen_split(k, nmax)
    except hs.UnsupportedWeight as exc:
        if args.format == "json":
            print(json.dumps({"weight": k, "status": "unsupported",
                              "charpoly": [format_rational(c) for c in exc.charpoly_full],
                              "charpoly_cusp": [format_rational(c) for c in exc.charpoly_cusp or []]}, indent=2, sort_keys=True))
        else:
            print(f"weight {k}: no rational eigenbasis")
            print(f"charpoly of T~_2 on W_k^ev: {hs.format_poly(exc.charpoly_full)}")
            print(f"charpoly on the cuspidal part: {hs.format_poly(exc.charpoly_cusp or [])}")
        return EXIT_UNSUPPORTED
    docs = []
    for i, rec in enumerate(records):
        name = f"weight{k}_{rec.eigenvalue_source}{'' if i < 2 else i}.json"
        fourier = [format_rational(c) for c in rec.fourier.coeffs]
        text = poly_to_json(rec.period.poly, source=rec.eigenvalue_source, fourier=fourier)
        if args.out:
            out = Path(args.out)
            out.mkdir(parents=True, exist_ok=True)
            (out / name).write_text(text + "\n")
        docs.append(json.loads(text))
    if args.format == "json":
        print(json.dumps(docs, indent=2, sort_keys=True))
    else:
        header = "n".rjust(4) + "".join(r.eigenvalue_source.rjust(28) for r in records)
        print(header)
        for n in range(1, nmax + 1):
            print(str(n).rjust(4) + "".join(format_rational(r.fourier[n]).rjust(28) for r in records))
        if args.out:
            print(f"wrote {len(records)} period polynomial file(s) to {args.out}")
    return EXIT_OK


# --------------------------------------------------------------------- all


def _run_all(args) -> int:
    N = args.n
    reports: list[RelationReport] = []
    reports.extend(hs.assemble_thm2(k, N) for k in THM2_WEIGHTS)
    reports.extend(hs.example_k4k6_reports(N))
    pd = hs.delta_example()
    reports.append(hs.thm1_report(pd, N, eta_delta(N)))
    reports.extend(hs.printed_delta_reports(N))
    for k in range(4, 17, 2):
        reports.append(hs.sigma_report(k, N))
        E = hs.eisenstein_poly(k)
        reports.append(hs.hecke_report(E, 20))
        reports.extend(fn(E, N) for fn in (hs.t3_report, hs.lemma_t1_report, hs.lemma_t2_report))
    reports.append(hs.hecke_report(pd.poly, 30, eta_delta(30)))
    reports.extend(fn(pd.poly, N) for fn in (hs.t3_report, hs.lemma_t1_report, hs.lemma_t2_report))
    reports.append(nm.verify_relation(hs.relation_coefficients(pd), 1e-8))
    for k in (16, 18, 20, 22):
        reports.extend(nm.verify_relation(hs.relation_coefficients(r.period), 1e-6) for r in hs.eigen_split(k, 2) if r.is_cusp)
    reports.extend(nm.sum_formula_check(k, 1e-6) for k in range(3, 13))
    reports.append(nm.gkz_check(hs.relation_coefficients(pd), 1e-6))
    reports.extend(nm.harmonic_product_check(a, b, 1e-7) for a, b in ((1, 1), (1, 2), (2, 2)))
    reports.extend(nm.oz_sum_check(k, w, 1e-7) for k in range(4, 11) for w in (False, True))
    code = _emit(reports, args.format)
    if args.format == "text":
        passed = sum(r.passed for r in reports)
        print(f"\nsummary: {passed}/{len(reports)} checks passed")
        by_check: dict[str, list[int]] = {}
        for r in reports:
            tally = by_check.setdefault(r.check, [0, 0])
            tally[0] += r.passed
            tally[1] += 1
        for name, (p, t) in sorted(by_check.items()):
            print(f"  {name:<16} {p:>3}/{t}")
    return code


# ------------------------------------------------------------------ output


def _emit(reports: list[RelationReport], fmt: str) -> int:
    reports = sorted(reports, key=RelationReport.sort_key)
    if fmt == "json":
        print(reports_to_json(reports))
    else:
        for r in reports:
            print(r.line())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=_weights, help="weight, list '4,6' or range '4-16'")
    common.add_argument("--r", type=int)
    common.add_argument("--s", type=int)
    common.add_argument("--n", "--terms", dest="n", type=int, default=None, help="truncation order")
    common.add_argument("--nmax", type=int, help="Hecke index sweep bound")
    common.add_argument("--tol", type=float)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--poly", metavar="FILE", help="period polynomial JSON")
    common.add_argument("--out", metavar="DIR")

    p = argparse.ArgumentParser(prog="hatzeta", description="q-analogues of modified double zeta values and their verification")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("series", parents=[common], help="print q-series coefficients")
    s.add_argument("kind", choices=("zeta", "zetahat", "parity", "eta", "eisenstein"))
    s.add_argument("--parity", choices=("odd", "even"), default="odd")
    v = sub.add_parser("verify", parents=[common], help="exact verification")
    v.add_argument("target", choices=("thm1", "thm2", "hecke", "sigma", "t3", "lemma-t1", "lemma-t2", "example-k4k6", "all"))
    n = sub.add_parser("numeric", parents=[common], help="numeric verification")
    n.add_argument("target", choices=("relation", "sumformula", "gkz", "level2", "mdavasli", "qlimit", "harmonic", "oz"))
    n.add_argument("--power", type=int, help="exponent of (1-q) for qlimit")
    n.add_argument("--kind", choices=("zeta", "eta"), default="zeta", help="series for qlimit")
    e = sub.add_parser("eigen", parents=[common], help="rational Hecke eigenforms via period polynomials")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.n_given = args.n is not None
    if args.n is None:
        args.n = 20 if args.command == "series" else 200
    if args.nmax is not None and args.nmax < 1:
        print("error: --nmax must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.tol is not None and args.tol <= 0:
        print("error: --tol must be positive", file=sys.stderr)
        return EXIT_USAGE
    handler = {"series": cmd_series, "verify": cmd_verify, "numeric": cmd_numeric, "eigen": cmd_eigen}[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
