"""Command-line front end.

Exit codes: 0 success, 1 a verification case failed, 2 usage or parse
error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import annulus, powerpoly, qcalc, symfun
from .errors import InvariantError, UsageError
from .serialize import render

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3
SUITES = ("symfun", "powerpoly", "braiding", "annulus")


# verification cases: (suite, check, params) with check looked up in CHECKS at run time


def _defect_vanishes(n, N, k):
    return annulus.reduce_at_root(annulus.transparency_defect(n, N, k), N).is_zero()


def _oracle_agrees(n, N, k):
    target = powerpoly.powered_positive_elementary(n, N, k)
    return powerpoly.power_elementary(n, N, k) == powerpoly.symmetric_reduce_oracle(target)


def _chebyshev_step(N):
    """Q^(N+1) = f1 Q^(N) - Q^(N-1) at rank 1."""
    f1 = powerpoly.power_fundamental(1, 1, 1)
    return powerpoly.power_fundamental(1, N + 1, 1) == f1 * powerpoly.power_fundamental(
        1, N, 1
    ) - powerpoly.power_fundamental(1, N - 1, 1)


CHECKS = {
    "symfun": lambda name, n: symfun.verify_symfun_identity(name, n),
    "power-fundamental": powerpoly.verify_power_fundamental,
    "oracle": _oracle_agrees,
    "chebyshev": _chebyshev_step,
    "braiding": lambda name: qcalc.verify_braiding_identities(name),
    "loop-image": annulus.verify_loop_image,
    "defect-factorization": annulus.verify_defect_factorization,
    "defect-at-root": _defect_vanishes,
}


def suite_cases(suite, max_n=3, max_N=4):
    if suite == "symfun":
        return [("symfun", "symfun", (name, n)) for name in symfun.SYMFUN_IDENTITIES for n in range(1, max_n + 1)]
    if suite == "powerpoly":
        cases = [("powerpoly", "power-fundamental", (n, N)) for n in range(1, max_n + 1) for N in range(1, max_N + 1)]
        cases += [
            ("powerpoly", "oracle", (n, N, k))
            for n in range(1, min(2, max_n) + 1)
            for N in range(1, max_N + 1)
            for k in range(0, 2 * n + 1)
        ]
        cases += [("powerpoly", "chebyshev", (N,)) for N in range(2, max_N + 1)]
        return cases
    if suite == "braiding":
        return [("braiding", "braiding", (name,)) for name in qcalc.BRAIDING_IDENTITIES]
    if suite == "annulus":
        cases = [("annulus", "loop-image", (n,)) for n in range(1, max_n + 1)]
        grid = [(n, N, k) for n in range(1, max_n + 1) for N in range(1, max_N + 1) for k in range(1, n + 1)]
        cases += [("annulus", "defect-factorization", p) for p in grid]
        cases += [("annulus", "defect-at-root", p) for p in grid]
        return cases
    raise UsageError(f"unknown suite {suite!r}")


def run_case(case):
    suite, check, params = case
    start = time.perf_counter()
    ok = bool(CHECKS[check](*params))
    return CaseResult(suite, check, params, ok, time.perf_counter() - start)


@dataclass
class CaseResult:
    suite: str
    check: str
    params: tuple
    passed: bool
    seconds: float


@dataclass
class VerificationReport:
    suite: str
    cases: list = field(default_factory=list)

    @property
    def overall(self):
        return all(c.passed for c in self.cases)

    def to_text(self, timings=True):
        lines = []
        for c in self.cases:
            params = " ".join(str(p) for p in c.params)
            line = f"{'PASS' if c.passed else 'FAIL'}  {c.suite:<9} {c.check:<20} {params}"
            if timings:
                line += f"  {c.seconds:.3f}s"
            lines.append(line)
        passed = sum(c.passed for c in self.cases)
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'} ({passed}/{len(self.cases)} cases, suite {self.suite})")
        return "\n".join(lines)

    def to_json(self, timings=True):
        cases = []
        for c in self.cases:
            entry = {"suite": c.suite, "check": c.check, "params": list(c.params), "passed": c.passed}
            if timings:
                entry["seconds"] = round(c.seconds, 6)
            cases.append(entry)
        return json.dumps({"suite": self.suite, "cases": cases, "overall": self.overall}, indent=2)


def run_verification(suite, max_n=3, max_N=4, jobs=1):
    suites = SUITES if suite == "all" else (suite,)
    cases = [c for s in suites for c in suite_cases(s, max_n, max_N)]
    report = VerificationReport(suite)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            report.cases = list(pool.map(run_case, cases))
    else:
        report.cases = [run_case(c) for c in cases]
    return report


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog="typec-power", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("qpoly", help="Type C power fundamental polynomial Q_2n^(N,k) in f1..fn")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--N", type=_positive, required=True)
    p.add_argument("--k", type=int, required=True)
    fmt(p)

    p = sub.add_parser("epoly", help="elementary symmetric polynomial E_k,n in L1..Ln")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=int, required=True)
    fmt(p)

    p = sub.add_parser("fchar", help="fundamental character F_k,n (optionally powered by --N)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--N", type=_positive, default=1)
    fmt(p)

    p = sub.add_parser("ppoly", help="Type A power elementary polynomial P_2n^(N,k) (P-hat with --hat)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--N", type=_positive, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--hat", action="store_true", help="set e_2n = 1")
    fmt(p)

    p = sub.add_parser("defect", help="transparency defect in Z[q^±1][T^±1, X1..X(n-1)]")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--N", type=_positive, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--at-root", action="store_true", help="reduce modulo q^(2N) = 1")
    fmt(p)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-n", type=_positive, default=3)
    p.add_argument("--max-N", type=_positive, default=4)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-timings", action="store_true", help="omit wall times (byte-stable output)")
    return parser


def _check_range(k, lo, hi, what):
    if not lo <= k <= hi:
        raise UsageError(f"{what} needs {lo} <= k <= {hi}, got k={k}")


def _dispatch(args):
    if args.command == "qpoly":
        _check_range(args.k, 1, args.n, "qpoly")
        return render(powerpoly.power_fundamental(args.n, args.N, args.k), args.format), EXIT_OK
    if args.command == "epoly":
        _check_range(args.k, 0, 2 * args.n, "epoly")
        return render(symfun.elem_sym(args.k, args.n), args.format), EXIT_OK
    if args.command == "fchar":
        _check_range(args.k, 0, args.n, "fchar")
        return render(symfun.char_fund_power(args.k, args.N, args.n), args.format), EXIT_OK
    if args.command == "ppoly":
        if args.hat:
            _check_range(args.k, 0, 2 * args.n - 1, "ppoly --hat")
            p = powerpoly.power_elementary_sl(args.n, args.N, args.k)
        else:
            _check_range(args.k, 0, 2 * args.n, "ppoly")
            p = powerpoly.power_elementary(args.n, args.N, args.k)
        return render(p, args.format), EXIT_OK
    if args.command == "defect":
        _check_range(args.k, 1, args.n, "defect")
        d = annulus.transparency_defect(args.n, args.N, args.k)
        if args.at_root:
            d = annulus.reduce_at_root(d, args.N)
        return render(d, args.format), EXIT_OK
    if args.command == "verify":
        report = run_verification(args.suite, args.max_n, args.max_N, args.jobs)
        timings = not args.no_timings
        text = report.to_json(timings) if args.format == "json" else report.to_text(timings)
        return text, EXIT_OK if report.overall else EXIT_FAILED
    raise UsageError(f"unknown command {args.command!r}")


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        text, code = _dispatch(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
