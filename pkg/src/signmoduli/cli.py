"""Command-line interface.

Subcommands: classify (per-degree tables), search (one couple),
verify (assertion suites with JSON reports), report (delimited tables
plus rendered figures).  Exit codes form a contract scripts can branch
on: 0 success, 1 usage or incompatibility, 2 verification failure,
3 proven impossible, 4 unresolved.

Runs are reproducible: identical flags (and seed) give byte-identical
output, independent of worker count.  A config file in `key = value`
format can hold defaults; explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import comb
from pathlib import Path

from . import reports
from .classify import (
    CLASSIFY_BOUND,
    SearchConfig,
    classify_degree,
    realization_survey,
    search_witness,
)
from .counting import (
    BRUTE_FORCE_BOUND,
    catalan,
    chi,
    interlacing_couples,
    second_difference_zero_positions,
    t_dc_bruteforce,
    t_dc_catalan_sum,
    t_dc_closed,
)
from .filters import soundness_fuzz
from .patterns import (
    ChangePreservationPattern,
    Couple,
    ModuliOrder,
    SignPattern,
    sp_to_cpp,
)
from .resultants import (
    block_reduction_trace,
    structural_checks,
    verify_factorization,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2
EXIT_IMPOSSIBLE = 3
EXIT_UNRESOLVED = 4

VERIFY_SUITES = ("counts", "resultants", "theorem1", "filters")


class _Parser(argparse.ArgumentParser):
    # exit contract: usage errors are 1, not argparse's 2
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="signmoduli", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="key = value file with flag defaults")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--budget", type=int, default=None,
                       help="total candidate constructions per couple")
        p.add_argument("--format", choices=reports.FORMATS, default=None)
        p.add_argument("--out", default=None, help="write output here instead of stdout")

    p_classify = sub.add_parser("classify", help="resolve every couple of one degree")
    common(p_classify)
    p_classify.add_argument("--degree", type=int, required=True)
    p_classify.add_argument("--workers", type=int, default=None)

    p_search = sub.add_parser("search", help="resolve a single couple")
    common(p_search)
    p_search.add_argument("pattern", help="sign pattern (+/-) or change-preservation word (c/p)")
    p_search.add_argument("order", help="order of moduli, letters P/N ascending")

    p_verify = sub.add_parser("verify", help="run an assertion suite")
    common(p_verify)
    p_verify.add_argument("suite", choices=VERIFY_SUITES)
    p_verify.add_argument("--max-degree", type=int, default=None)
    p_verify.add_argument("--trials", type=int, default=None,
                          help="sample points per degree (resultants)")
    p_verify.add_argument("--samples", type=int, default=None,
                          help="fuzz sample count (filters)")
    p_verify.add_argument("--symbolic-bound", type=int, default=None,
                          help="largest degree checked fully symbolically")
    p_verify.add_argument("--strict", action="store_true", default=None,
                          help="escalate informational discrepancies to failures")

    p_report = sub.add_parser("report", help="tables plus figures")
    common(p_report)
    p_report.add_argument("--degree", type=int, default=None,
                          help="classification report; omit for the counting report")
    p_report.add_argument("--max-degree", type=int, default=None)
    p_report.add_argument("--workers", type=int, default=None)

    return parser


def _read_config_file(path: str) -> dict:
    values = {}
    text = Path(path).read_text()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key = value")
        key, _, value = line.partition("=")
        values[key.strip().replace("-", "_")] = value.strip()
    return values


_CONFIG_PARSERS = {
    "seed": int,
    "budget": int,
    "degree": int,
    "max_degree": int,
    "trials": int,
    "samples": int,
    "symbolic_bound": int,
    "workers": int,
    "format": str,
    "out": str,
    "strict": lambda s: s.lower() in ("1", "true", "yes", "on"),
    "base": Fraction,
    "spread": int,
}


def _effective(args: argparse.Namespace) -> dict:
    """Merge flag values over config-file values over builtin defaults."""
    merged: dict = {}
    if getattr(args, "config", None):
        raw = _read_config_file(args.config)
        for key, text in raw.items():
            if key not in _CONFIG_PARSERS:
                raise ValueError(f"unknown config key: {key}")
            merged[key] = _CONFIG_PARSERS[key](text)
    for key, value in vars(args).items():
        if key in ("command", "config"):
            continue
        if value is not None:
            merged[key] = value
    merged.setdefault("seed", 0)
    merged.setdefault("budget", 4000)
    merged.setdefault("format", "md")
    merged.setdefault("workers", 1)
    merged.setdefault("strict", False)
    return merged


def _search_config(opts: dict) -> SearchConfig:
    return SearchConfig(
        seed=opts["seed"],
        budget=opts["budget"],
        base=opts.get("base", Fraction(2)),
        spread=opts.get("spread", 2),
    )


def _emit(text: str, opts: dict) -> None:
    out = opts.get("out")
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_couple(pattern: str, order: str) -> Couple:
    if set(pattern) <= {"+", "-"} and pattern:
        cpp = sp_to_cpp(SignPattern(pattern))
    elif set(pattern) <= {"c", "p"} and pattern:
        cpp = ChangePreservationPattern(pattern)
    else:
        raise ValueError(f"cannot parse pattern {pattern!r}")
    return Couple(cpp, ModuliOrder(order))


def cmd_classify(opts: dict) -> int:
    degree = opts.get("degree")
    if degree is None or not 1 <= degree <= CLASSIFY_BOUND:
        print(f"classify: --degree must be in 1..{CLASSIFY_BOUND}", file=sys.stderr)
        return EXIT_USAGE
    table = classify_degree(degree, _search_config(opts), workers=opts["workers"])
    _emit(reports.render_classification(table, opts["format"]), opts)
    if table.matches_reference is False:
        print(f"classify: degree {degree} disagrees with the reference tables",
              file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_search(opts: dict) -> int:
    try:
        couple = _parse_couple(opts["pattern"], opts["order"])
    except ValueError as exc:
        print(f"search: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not couple.is_compatible:
        print(
            f"search: {couple.sign_pattern} with {couple.order} is "
            f"not compatible with Descartes' rule "
            f"(changes {couple.pattern.change_count}, "
            f"positive letters {couple.order.positive_count})",
            file=sys.stderr,
        )
        return EXIT_USAGE
    status = search_witness(couple, _search_config(opts))
    _emit(reports.render_search(couple, status, opts["format"]), opts)
    if status.kind == "realized":
        return EXIT_OK
    if status.kind == "impossible":
        return EXIT_IMPOSSIBLE
    return EXIT_UNRESOLVED


# --- verify suites ---------------------------------------------------------

def _suite_counts(opts: dict):
    bound = opts.get("max_degree", 12)
    checks = []
    brute_bound = min(bound, BRUTE_FORCE_BOUND)
    for d in range(1, bound + 1):
        agree = True
        detail = {}
        for c in range((d + 1) // 2 + 1):
            closed = t_dc_closed(d, c)
            alt = t_dc_catalan_sum(d, c)
            if closed != alt:
                agree = False
                detail[f"c={c}"] = {"closed": closed, "catalan_sum": alt}
            if d <= brute_bound:
                brute = t_dc_bruteforce(d, c)
                if closed != brute:
                    agree = False
                    detail[f"c={c} brute"] = {"closed": closed, "brute": brute}
        checks.append({
            "name": f"t_dc agreement d={d}",
            "ok": agree,
            "detail": detail or {"routes": 3 if d <= brute_bound else 2},
        })
    for d in range(1, bound + 1):
        total = chi(d)
        split = sum(comb(d, c) ** 2 for c in range(d + 1))
        checks.append({
            "name": f"chi double count d={d}",
            "ok": total == split,
            "detail": {"chi": str(total)},
        })
    baseline = [catalan(k) for k in range(8)]
    checks.append({
        "name": "catalan baseline",
        "ok": baseline == [1, 1, 2, 5, 14, 42, 132, 429],
        "detail": {"values": baseline},
    })
    squares = {d: second_difference_zero_positions(d) for d in range(2, 21)}
    zero_ds = sorted(d for d, z in squares.items() if z)
    checks.append({
        "name": "second difference zeros exactly at squares",
        "ok": zero_ds == [4, 9, 16],
        "detail": {"zero_degrees": zero_ds},
    })
    ratios = [
        f"{interlacing_couples(d)}/{chi(d)}" for d in range(1, bound + 1)
    ]
    checks.append({
        "name": "interlacing ratio tabulation",
        "ok": True,
        "detail": {"ratios": ratios, "informational": True},
    })
    return checks


def _suite_resultants(opts: dict):
    bound = opts.get("max_degree", 6)
    trials = opts.get("trials", 24)
    seed = opts["seed"]
    strict = opts["strict"]
    symbolic_bound = opts.get("symbolic_bound", 4)
    checks = []
    for d in range(1, bound + 1):
        rep = verify_factorization(d, trials=trials, seed=seed,
                                   symbolic_bound=symbolic_bound)
        expected = (-2) ** d
        ok = rep.ok and rep.fitted_constant == expected
        if strict and not rep.matches_claim:
            ok = False
        checks.append({
            "name": f"factorization constant d={d}",
            "ok": ok,
            "detail": {
                "fitted": reports.fraction_str(rep.fitted_constant),
                "uniform": rep.constant_is_uniform,
                "power_of_two": rep.abs_is_power_of_two,
                "symbolic": rep.symbolic_checked,
                "claimed_elsewhere": reports.fraction_str(rep.claimed),
                "matches_claim": rep.matches_claim,
                "informational_discrepancy": not rep.matches_claim,
            },
        })
    for d in range(2, bound + 1):
        rep = structural_checks(d)
        checks.append({
            "name": f"quasi-homogeneity and corners d={d}",
            "ok": rep.ok,
            "detail": {"weight_target": rep.weight_target},
        })
    for d in range(2, min(bound, 6) + 1):
        trace = block_reduction_trace(d)
        checks.append({
            "name": f"block reduction d={d}",
            "ok": trace.ok,
            "detail": {
                "permutation_sign": trace.permutation_sign,
                "prefactor_matches_claim": trace.prefactor_matches_claim,
                "deviations": list(trace.deviations),
            },
        })
    return checks


def _suite_theorem1(opts: dict):
    bound = opts.get("max_degree", 5)
    cfg = _search_config(opts)
    checks = []
    for d in range(1, bound + 1):
        rep = realization_survey(d, cfg)
        for name, part in rep["parts"].items():
            checks.append({
                "name": f"{name} d={d}",
                "ok": part["status"] != "failed",
                "detail": part,
            })
    return checks


def _suite_filters(opts: dict):
    samples = opts.get("samples", 100_000)
    seed = opts["seed"]
    bound = opts.get("max_degree", 10)
    violations = soundness_fuzz(samples, seed, bound)
    checks = [{
        "name": f"soundness fuzz ({samples} samples, degrees <= {bound})",
        "ok": not violations,
        "detail": {
            "violations": [
                {"pattern": str(c.sign_pattern), "order": str(c.order), "filter": f}
                for c, f in violations[:20]
            ],
        },
    }]
    for d in range(1, 6):
        table = classify_degree(d, _search_config(opts))
        checks.append({
            "name": f"filters complete at d={d}",
            "ok": table.matches_reference is True,
            "detail": {
                "impossible": table.impossible_count,
                "unresolved": table.unresolved_count,
            },
        })
    return checks


def cmd_verify(opts: dict) -> int:
    suite = opts["suite"]
    runner = {
        "counts": _suite_counts,
        "resultants": _suite_resultants,
        "theorem1": _suite_theorem1,
        "filters": _suite_filters,
    }[suite]
    checks = runner(opts)
    ok = all(c["ok"] for c in checks)
    payload = {"suite": suite, "ok": ok, "checks": checks}
    _emit(json.dumps(reports.jsonable(payload), indent=2, sort_keys=True) + "\n", opts)
    for c in checks:
        print(reports.check_line(c["ok"], c["name"]), file=sys.stderr)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_report(opts: dict) -> int:
    out = opts.get("out")
    fig_dir = Path(out).parent if out else Path.cwd()
    stem = Path(out).stem if out else "signmoduli"
    degree = opts.get("degree")
    if degree is not None:
        if not 1 <= degree <= CLASSIFY_BOUND:
            print(f"report: --degree must be in 1..{CLASSIFY_BOUND}", file=sys.stderr)
            return EXIT_USAGE
        table = classify_degree(degree, _search_config(opts), workers=opts["workers"])
        _emit(reports.render_classification(table, opts["format"]), opts)
        fig = fig_dir / f"{stem}_degree{degree}.png"
        reports.render_classification_figure(table, str(fig))
        print(f"figure: {fig}", file=sys.stderr)
        return EXIT_OK
    bound = opts.get("max_degree", 16)
    if bound < 1:
        print("report: --max-degree must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    _emit(reports.render_counts(bound, opts["format"]), opts)
    fig = fig_dir / f"{stem}_ratios.png"
    reports.render_ratio_figure(str(fig), bound)
    print(f"figure: {fig}", file=sys.stderr)
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        opts = _effective(args)
    except (ValueError, OSError) as exc:
        print(f"signmoduli: {exc}", file=sys.stderr)
        return EXIT_USAGE
    handler = {
        "classify": cmd_classify,
        "search": cmd_search,
        "verify": cmd_verify,
        "report": cmd_report,
    }[args.command]
    return handler(opts)


if __name__ == "__main__":
    sys.exit(main())
