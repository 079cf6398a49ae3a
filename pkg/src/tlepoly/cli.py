"""Command-line interface: ``tlepoly compute | table | verify``.

Exit codes: 0 success, 1 verification failure, 2 invalid parameters,
3 internal formula mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import gcd

from .fforacle import CHECKS, verify
from .gitq import CONVENTIONS
from .report import EPolyReport, InternalMismatch, InvalidParams, LinkParams
from .sl2link import epoly_sl2
from .sl3link import epoly_sl3

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2
EXIT_MISMATCH = 3

# sweep limits for ``table``
MAX_NM = 50
MAX_D = 12


class UsageError(Exception):
    pass


def compute_report(group: str, n: int, m: int, d: int, convention: str = "display") -> EPolyReport:
    params = LinkParams.make(n, m, d)
    if group == "sl2":
        return epoly_sl2(params)
    return epoly_sl3(params, convention)


# --- rendering ------------------------------------------------------------------

def _label(report: EPolyReport) -> str:
    return f"{report.group} torus link {report.params.orientation()}"


def render_text(report: EPolyReport, breakdown: bool) -> str:
    lines = [_label(report)]
    if report.group == "SL3":
        lines.append(f"sl3 factor: {report.convention}")
    if breakdown:
        for name, value, _ in report.stratum_polys():
            lines.append(f"  {name}: {value.to_text()}")
    lines.append(f"total: {report.total.to_text()}")
    for c in report.checks:
        lines.append(f"check {c.name}: {c.status}" + (f" ({c.detail})" if c.detail else ""))
    return "\n".join(lines)


def render_latex(report: EPolyReport, breakdown: bool) -> str:
    p = report.params
    lines = [f"% {_label(report)}", r"\begin{align*}"]
    if breakdown:
        for name, value, _ in report.stratum_polys():
            tag = name.replace("_", r"\_")
            lines.append(rf"e(\mathcal{{W}}_{{\text{{{tag}}}}}) &= {value.to_latex()} \\")
    lines.append(
        rf"e(X_{{\mathrm{{{report.group}}}}}(K^{{{p.d}}}_{{{p.n},{p.m}}})) &= {report.total.to_latex()}"
    )
    lines.append(r"\end{align*}")
    return "\n".join(lines)


def render_json(report: EPolyReport, breakdown: bool) -> str:
    data = report.to_json()
    if not breakdown:
        data["strata"] = []
    return json.dumps(data, indent=2)


def parse_report(text: str) -> EPolyReport:
    """Inverse of the JSON rendering."""
    return EPolyReport.from_json(json.loads(text))


# --- argument helpers -------------------------------------------------------------

def _parse_range(text: str, name: str, cap: int) -> range:
    try:
        if "-" in text:
            lo, hi = (int(x) for x in text.split("-", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"--{name}: expected N or LO-HI, got {text!r}") from None
    if lo < 1:
        raise UsageError(f"--{name}: values must be positive")
    if hi > cap:
        raise UsageError(f"--{name}: upper end {hi} exceeds the cap {cap}")
    return range(lo, hi + 1)


def _parse_int_list(text: str, name: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--{name}: expected a comma-separated list of integers") from None


def table_rows(groups, n_range, m_range, d_range, convention: str = "display") -> list[EPolyReport]:
    """One report per canonical (n, m, d); swapped duplicates are merged."""
    seen = set()
    out = []
    for group in groups:
        for d in d_range:
            for n in n_range:
                for m in m_range:
                    if gcd(n, m) != 1:
                        continue
                    params = LinkParams.make(n, m, d)
                    key = (group, params.n, params.m, d)
                    if key in seen:
                        continue
                    seen.add(key)
                    out.append(key)
    out.sort()
    return [compute_report(g, n, m, d, convention) for g, n, m, d in out]


def render_table(reports: list[EPolyReport], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["group", "n", "m", "d", "degree", "coeffs"])
        for r in reports:
            p = r.params
            w.writerow([r.group, p.n, p.m, p.d, r.total.degree, " ".join(r.total.to_json())])
        return buf.getvalue()
    if fmt == "json":
        return json.dumps(
            [
                {
                    "group": r.group,
                    **r.params.to_json(),
                    "degree": r.total.degree,
                    "total": r.total.to_json(),
                }
                for r in reports
            ],
            indent=2,
        ) + "\n"
    if fmt == "latex":
        lines = [r"\begin{tabular}{llll}", r"group & $(n,m,d)$ & degree & $e$ \\ \hline"]
        for r in reports:
            p = r.params
            lines.append(rf"{r.group} & $({p.n},{p.m},{p.d})$ & {r.total.degree} & ${r.total.to_latex()}$ \\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"
    return "".join(f"{r.group} n={r.params.n} m={r.params.m} d={r.params.d}: {r.total}\n" for r in reports)


def render_verification(report, fmt: str) -> str:
    if fmt == "json":
        return report.dumps()
    lines = []
    for r in report.rows:
        exp = "-" if r.expected is None else str(r.expected)
        obs = "-" if r.observed is None else str(r.observed)
        extra = f" [{r.params}]" if r.params else ""
        why = f"  {r.reason}" if r.reason else ""
        lines.append(f"{r.status.upper():4s} {r.check} p={r.p}{extra} expected={exp} observed={obs}{why}")
    counts = report.statuses()
    lines.append("summary: " + ", ".join(f"{k}={counts[k]}" for k in sorted(counts)))
    return "\n".join(lines)


# --- commands ---------------------------------------------------------------------

def cmd_compute(args) -> int:
    report = compute_report(args.group, args.n, args.m, args.d, args.sl3_factor)
    render = {"text": render_text, "latex": render_latex, "json": render_json}[args.format]
    print(render(report, args.breakdown))
    return EXIT_OK


def cmd_table(args) -> int:
    groups = ["sl2", "sl3"] if args.group == "all" else [args.group]
    reports = table_rows(
        groups,
        _parse_range(args.n, "n", MAX_NM),
        _parse_range(args.m, "m", MAX_NM),
        _parse_range(args.d, "d", MAX_D),
        args.sl3_factor,
    )
    sys.stdout.write(render_table(reports, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = None
    if args.checks:
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = [c for c in checks if c not in CHECKS]
        if unknown:
            raise UsageError(f"unknown checks {unknown}; choose from {', '.join(CHECKS)}")
    params = None
    if args.n is not None or args.m is not None:
        if args.n is None or args.m is None:
            raise UsageError("give both --n and --m")
        params = LinkParams.make(args.n, args.m, args.d)
    primes = _parse_int_list(args.q, "q")
    r_list = _parse_int_list(args.r, "r")
    try:
        report = verify(
            primes,
            params,
            checks,
            group=args.group,
            r_list=r_list,
            convention=args.sl3_factor,
            fixtures=args.fixtures,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(render_verification(report, args.format))
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tlepoly",
        description="E-polynomials of SL2 and SL3 character varieties of torus links.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_factor(p):
        p.add_argument(
            "--sl3-factor",
            choices=CONVENTIONS,
            default="display",
            help="factor used for e(SL3)^(d-1) in the SL3 strata (default: display)",
        )

    pc = sub.add_parser("compute", help="E-polynomial of one torus link")
    pc.add_argument("--group", choices=("sl2", "sl3"), type=str.lower, default="sl2")
    pc.add_argument("--n", type=int, required=True)
    pc.add_argument("--m", type=int, required=True)
    pc.add_argument("--d", type=int, default=1)
    pc.add_argument("--breakdown", action="store_true", help="print every stratum")
    pc.add_argument("--format", choices=("text", "latex", "json"), default="text")
    add_factor(pc)
    pc.set_defaults(func=cmd_compute)

    pt = sub.add_parser("table", help="sweep a parameter grid")
    pt.add_argument("--group", choices=("sl2", "sl3", "all"), type=str.lower, default="sl2")
    pt.add_argument("--n", default="1-5", help="N or LO-HI (default 1-5)")
    pt.add_argument("--m", default="1-5", help="N or LO-HI (default 1-5)")
    pt.add_argument("--d", default="1-3", help="N or LO-HI (default 1-3)")
    pt.add_argument("--format", choices=("csv", "text", "json", "latex"), default="csv")
    add_factor(pt)
    pt.set_defaults(func=cmd_table)

    pv = sub.add_parser("verify", help="compare with finite-field counts")
    pv.add_argument("--group", choices=("sl2", "sl3"), type=str.lower, default="sl2")
    pv.add_argument("--n", type=int)
    pv.add_argument("--m", type=int)
    pv.add_argument("--d", type=int, default=1)
    pv.add_argument("--q", default="5", help="comma-separated primes")
    pv.add_argument("--r", default="1,2", help="free-group ranks for the lambda checks")
    pv.add_argument("--checks", help="comma-separated: " + ", ".join(CHECKS))
    pv.add_argument("--fixtures", help="JSON file pinning observed counts")
    pv.add_argument("--format", choices=("text", "json"), default="text")
    add_factor(pv)
    pv.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        return args.func(args)
    except (InvalidParams, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InternalMismatch as exc:
        print(f"internal mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
