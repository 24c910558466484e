"""Rendering results as JSON, CSV, Markdown, and figures.

Every renderer is a pure function from result objects to a string, so
output is byte-identical across runs.  Large counts are serialized as
decimal strings, exact rationals as "num/den", symbolic polynomials as
sorted term lists, and witnesses as lists of "num/den" roots.  Figure
helpers render to files and are kept separate from the delimited
output so the latter stays machine-readable.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import fields, is_dataclass
from fractions import Fraction

from .classify import ClassificationTable
from .counting import chi, interlacing_couples
from .filters import RealizationStatus
from .multipoly import MultivariatePolynomial
from .patterns import Couple, cpp_to_sp
from .reference_tables import TABLE_BOUND, table_ratio, table_realizable_count
from .resultants import RationalMatrix
from .witnesses import RootConfiguration

FORMATS = ("json", "csv", "md")


def fraction_str(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def term_list(poly: MultivariatePolynomial) -> list[str]:
    """Sorted term strings, graded-lex descending: '-4*a0*a2^3'."""
    out = []
    for expo in sorted(poly.terms, key=lambda e: (sum(e), e), reverse=True):
        coef = poly.terms[expo]
        bits = [str(coef)]
        for i, e in enumerate(expo):
            if e == 1:
                bits.append(f"a{i}")
            elif e > 1:
                bits.append(f"a{i}^{e}")
        out.append("*".join(bits))
    return out


def jsonable(x):
    """Recursive conversion to JSON-serializable structures."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str, float)):
        return x
    if isinstance(x, Fraction):
        return fraction_str(x)
    if isinstance(x, MultivariatePolynomial):
        return term_list(x)
    if isinstance(x, RationalMatrix):
        return [[jsonable(v) for v in row] for row in x.rows]
    if isinstance(x, RootConfiguration):
        return x.to_strings()
    if isinstance(x, Couple):
        return {
            "pattern": str(x.pattern),
            "sign_pattern": str(x.sign_pattern),
            "order": str(x.order),
        }
    if isinstance(x, RealizationStatus):
        out = {"kind": x.kind}
        if x.witness is not None:
            out["witness"] = x.witness.to_strings()
        if x.filter is not None:
            out["filter"] = x.filter
        return out
    if is_dataclass(x) and not isinstance(x, type):
        return {f.name: jsonable(getattr(x, f.name)) for f in fields(x)}
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = list(x)
        if isinstance(x, (set, frozenset)):
            items = sorted(items, key=repr)
        return [jsonable(v) for v in items]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def render_json(payload) -> str:
    return json.dumps(jsonable(payload), indent=2, sort_keys=True) + "\n"


def _csv_string(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _md_table(header, rows) -> str:
    cells = [ [str(c) for c in row] for row in rows ]
    widths = [
        max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
        for i, h in enumerate(header)
    ]
    def line(items):
        return "| " + " | ".join(s.ljust(w) for s, w in zip(items, widths)) + " |"
    out = [line(header), line(["-" * w for w in widths])]
    out.extend(line(r) for r in cells)
    return "\n".join(out) + "\n"


# --- counting report ------------------------------------------------------

def counts_rows(max_degree: int):
    """Per-degree counts: all couples, interlacing couples, exact
    realized counts where the tables reach."""
    rows = []
    for d in range(1, max_degree + 1):
        total = chi(d)
        inter = interlacing_couples(d)
        realized = table_realizable_count(d) if d <= TABLE_BOUND else None
        rows.append({
            "degree": d,
            "couples": total,
            "interlacing_couples": inter,
            "interlacing_ratio": Fraction(inter, total),
            "realized": realized,
            "realized_ratio": table_ratio(d) if d <= TABLE_BOUND else None,
        })
    return rows


def render_counts(max_degree: int, fmt: str) -> str:
    rows = counts_rows(max_degree)
    if fmt == "json":
        payload = [
            {
                "degree": r["degree"],
                "couples": str(r["couples"]),
                "interlacing_couples": str(r["interlacing_couples"]),
                "interlacing_ratio": fraction_str(r["interlacing_ratio"]),
                "realized": None if r["realized"] is None else str(r["realized"]),
                "realized_ratio": (
                    None if r["realized_ratio"] is None
                    else fraction_str(r["realized_ratio"])
                ),
            }
            for r in rows
        ]
        return render_json(payload)
    header = ["degree", "couples", "interlacing_couples",
              "interlacing_ratio", "realized", "realized_ratio"]
    table = [
        [
            r["degree"], r["couples"], r["interlacing_couples"],
            fraction_str(r["interlacing_ratio"]),
            "" if r["realized"] is None else r["realized"],
            "" if r["realized_ratio"] is None else fraction_str(r["realized_ratio"]),
        ]
        for r in rows
    ]
    if fmt == "csv":
        return _csv_string(header, table)
    if fmt == "md":
        return _md_table(header, table)
    raise ValueError(f"unknown format: {fmt}")


# --- classification report ------------------------------------------------

def _pattern_groups(table: ClassificationTable):
    groups: dict[str, list] = {}
    order_seen: list[str] = []
    for couple, st in table.records:
        key = str(couple.sign_pattern)
        if key not in groups:
            groups[key] = []
            order_seen.append(key)
        groups[key].append((couple, st))
    return [(k, groups[k]) for k in order_seen]


def classification_payload(table: ClassificationTable) -> dict:
    """Per-couple records plus a summary; the JSON wire format."""
    records = []
    for couple, st in table.records:
        record = {
            "pattern": str(couple.sign_pattern),
            "order": str(couple.order),
            "status": st.kind,
        }
        if st.witness is not None:
            record["witness"] = st.witness.to_strings()
        if st.filter is not None:
            record["filter"] = st.filter
        records.append(record)
    return {
        "degree": table.degree,
        "summary": {
            "couples": table.total,
            "realized": table.realized_count,
            "impossible": table.impossible_count,
            "unresolved": table.unresolved_count,
            "ratio_lower": fraction_str(table.ratio_lower),
            "ratio_upper": fraction_str(table.ratio_upper),
            "matches_reference": table.matches_reference,
        },
        "records": records,
    }


def render_classification(table: ClassificationTable, fmt: str) -> str:
    if fmt == "json":
        return render_json(classification_payload(table))
    header = ["sign_pattern", "changes", "compatible", "realized",
              "impossible", "unresolved", "realized_orders"]
    rows = []
    for sp, items in _pattern_groups(table):
        realized = [str(c.order) for c, st in items if st.kind == "realized"]
        n_imp = sum(1 for _, st in items if st.kind == "impossible")
        n_unr = sum(1 for _, st in items if st.kind == "unresolved")
        rows.append([
            sp, items[0][0].pattern.change_count, len(items),
            len(realized), n_imp, n_unr, " ".join(realized),
        ])
    if fmt == "csv":
        return _csv_string(header, rows)
    if fmt == "md":
        summary = (
            f"degree {table.degree}: {table.realized_count} of "
            f"{table.total} couples realized "
            f"(ratio in [{fraction_str(table.ratio_lower)}, "
            f"{fraction_str(table.ratio_upper)}])\n\n"
        )
        return summary + _md_table(header, rows)
    raise ValueError(f"unknown format: {fmt}")


# --- single-couple search report ------------------------------------------

def render_search(couple: Couple, status: RealizationStatus, fmt: str) -> str:
    payload = {
        "couple": jsonable(couple),
        "status": jsonable(status),
    }
    if fmt == "json":
        return render_json(payload)
    rows = [[
        str(couple.sign_pattern), str(couple.order), status.kind,
        status.filter or "",
        " ".join(status.witness.to_strings()) if status.witness else "",
    ]]
    header = ["sign_pattern", "order", "status", "filter", "witness"]
    if fmt == "csv":
        return _csv_string(header, rows)
    if fmt == "md":
        return _md_table(header, rows)
    raise ValueError(f"unknown format: {fmt}")


# --- survey report ---------------------------------------------------------

def render_survey(report: dict, fmt: str) -> str:
    if fmt == "json":
        return render_json(report)
    header = ["part", "status", "detail"]
    rows = []
    for name, part in report["parts"].items():
        detail = {k: v for k, v in part.items() if k != "status"}
        rows.append([name, part["status"], json.dumps(jsonable(detail), sort_keys=True)])
    if fmt == "csv":
        return _csv_string(header, rows)
    if fmt == "md":
        head = f"degree {report['degree']}: ok={report['ok']}\n\n"
        return head + _md_table(header, rows)
    raise ValueError(f"unknown format: {fmt}")


# --- verification lines ----------------------------------------------------

def check_line(ok: bool, name: str, detail: str = "") -> str:
    mark = "ok  " if ok else "FAIL"
    return f"{mark} {name}" + (f": {detail}" if detail else "")


# --- figures ---------------------------------------------------------------

def _use_agg():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_ratio_figure(path: str, max_degree: int = 16) -> str:
    """Ratio curves: interlacing couples over all couples, with the
    exact realized ratios marked where the tables pin them."""
    plt = _use_agg()
    rows = counts_rows(max_degree)
    degrees = [r["degree"] for r in rows]
    inter = [float(r["interlacing_ratio"]) for r in rows]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(degrees, inter, "o-", label="interlacing / all couples")
    known_d = [r["degree"] for r in rows if r["realized_ratio"] is not None]
    known = [float(r["realized_ratio"]) for r in rows if r["realized_ratio"] is not None]
    if known:
        ax.plot(known_d, known, "s--", label="realized / all couples (exact)")
    ax.set_xlabel("degree")
    ax.set_ylabel("ratio")
    ax.set_ylim(0, 1.05)
    ax.set_xticks(degrees)
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_classification_figure(table: ClassificationTable, path: str) -> str:
    """Stacked bars per change count: realized, impossible, unresolved."""
    plt = _use_agg()
    by_c: dict[int, list[int]] = {}
    for couple, st in table.records:
        c = couple.pattern.change_count
        bucket = by_c.setdefault(c, [0, 0, 0])
        idx = {"realized": 0, "impossible": 1, "unresolved": 2}[st.kind]
        bucket[idx] += 1
    cs = sorted(by_c)
    realized = [by_c[c][0] for c in cs]
    impossible = [by_c[c][1] for c in cs]
    unresolved = [by_c[c][2] for c in cs]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.bar(cs, realized, label="realized", color="#2a7")
    ax.bar(cs, impossible, bottom=realized, label="impossible", color="#b44")
    bottoms = [a + b for a, b in zip(realized, impossible)]
    if any(unresolved):
        ax.bar(cs, unresolved, bottom=bottoms, label="unresolved", color="#999")
    ax.set_xlabel("sign changes")
    ax.set_ylabel("couples")
    ax.set_title(f"degree {table.degree}")
    ax.set_xticks(cs)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
