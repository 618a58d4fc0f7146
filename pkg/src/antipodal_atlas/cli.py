"""Command line surface: catalog listing, antipodal reports, reference tables, checks.

Table output is generated from the engine at run time. Symbolic cells come
from affine fits of swept engine values (corner indices, d-factors) or from
catalogued formula strings; `verify` re-checks both against the engine on a
numeric grid, so nothing printed here is trusted data.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction as Q
from typing import Callable, NamedTuple

from . import antipodal, catalog, centers, oracle, polytopes, roots

SCHEMA_VERSION = 1

_FRAKTUR = {"a": "\U0001d51e", "b": "\U0001d51f", "c": "\U0001d520",
            "d": "\U0001d521", "e": "\U0001d522", "f": "\U0001d523",
            "g": "\U0001d524"}
_SUB = str.maketrans("0123456789r+-", "₀₁₂₃₄₅"
                     "₆₇₈₉ᵣ₊₋")

_CAPTIONS = {
    1: polytopes.TABLE1_CAPTION,
    2: centers.TABLE2_CAPTION,
    3: "simply connected spaces: maximal corners and component dimensions",
    4: "quotient spaces: subgroup options and component dimensions",
    5: "simply connected groups: maximal corners and component dimensions",
    6: "group quotients: subgroup options and component dimensions",
}

_CSV_HEADERS = {
    1: ["sigma", "max_corners", "factors"],
    2: ["sigma", "gamma", "max_outer", "psi_factors"],
    3: ["type", "space", "sigma", "max_corners", "dimensions"],
    4: ["type", "space", "sigma", "gamma", "dimensions"],
    5: ["group", "sigma", "max_corners", "dimensions"],
    6: ["group", "sigma", "gamma", "dimensions"],
}

_TEXT_HEADERS = {
    1: ["sigma", "max corners", "factors"],
    2: ["sigma", "gamma", "max outer points", "psi factors"],
    3: ["type", "space", "sigma", "max corners", "dimensions"],
    4: ["type", "space", "sigma", "gamma", "dimensions"],
    5: ["group", "sigma", "max corners", "dimensions"],
    6: ["group", "sigma", "gamma", "dimensions"],
}


class TableMismatchError(RuntimeError):
    """A rendered table row disagrees with the engine it was generated from."""

    def __init__(self, label: str, detail: str):
        super().__init__(f"{label}: {detail}")
        self.label = label


# ---------------------------------------------------------------- rendering


def _sub_expr(expr: str, ascii_mode: bool) -> str:
    """Subscript text for an index expression, TeX-style in ascii mode."""
    if not ascii_mode and set(expr) <= set("0123456789r+-"):
        return expr.translate(_SUB)
    return f"_{expr}" if len(expr) == 1 else f"_{{{expr}}}"


def _sigma_text(family: str, rank_text: str, ascii_mode: bool) -> str:
    fam = roots.normalize_family(family)
    if fam in roots.EXCEPTIONAL_RANK:
        if ascii_mode:
            return fam
        return _FRAKTUR[fam[0]] + fam[1:].translate(_SUB)
    letters = fam if ascii_mode else "".join(_FRAKTUR[ch] for ch in fam)
    return letters + _sub_expr(rank_text, ascii_mode)


def _corner_text(expr: str, ascii_mode: bool) -> str:
    return "e" + _sub_expr(expr, ascii_mode)


def _half_text(ascii_mode: bool) -> str:
    return "1/2" if ascii_mode else "½"


def _dots(ascii_mode: bool) -> str:
    return "..." if ascii_mode else "…"


def _base_exprs_text(form: str, exprs: tuple[str, ...], ascii_mode: bool,
                     rank_text: str = "r") -> str:
    """Display one base-point pattern whose indices are expression strings."""
    if form == "corner":
        return _corner_text(exprs[0], ascii_mode)
    if form == "half_sum":
        inner = "+".join(_corner_text(e, ascii_mode) for e in exprs)
        return f"{_half_text(ascii_mode)}({inner})"
    if form == "full_sum":
        if rank_text.isdigit():
            n = int(rank_text)
            head = f"1/{n + 1}"
        else:
            head = f"1/({rank_text}+1)"
        first = _corner_text("1", ascii_mode)
        last = _corner_text(rank_text, ascii_mode)
        return f"{head}({first}+{_dots(ascii_mode)}+{last})"
    terms = " + ".join(_corner_text(e, ascii_mode) for e in exprs)
    return terms


def _split_product(label: str) -> list[str]:
    """Split a product label on +, ignoring any + inside subscript braces."""
    parts, depth, cur = [], 0, ""
    for ch in label:
        depth += (ch == "{") - (ch == "}")
        if ch == "+" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return parts


def _gamma_text(label: str, ascii_mode: bool) -> str:
    if ascii_mode or label == "otherwise":
        return label
    if label.startswith("{e,p"):
        idx = label[len("{e,p"):].rstrip("}").lstrip("_").strip("{}")
        return "{e,p" + _sub_expr(idx, False) + "}"
    rendered = []
    for part in _split_product(label):
        head, _, rest = part.partition("_")
        rest = rest.strip("{}")
        rendered.append(head + (_sub_expr(rest, False) if rest else ""))
    return "⊕".join(rendered)


def _note_text(note: str, ascii_mode: bool) -> str:
    if ascii_mode or not note:
        return note
    return note.replace("<=", "≤").replace(">=", "≥")


def _formula_text(expr: str, ascii_mode: bool) -> str:
    """Human form of a catalogued formula string: r*r -> r^2, drop the stars."""
    out = expr.replace(" ", "")
    square = "r^2" if ascii_mode else "r²"
    out = out.replace("r*r", square)
    return out.replace("*", "")


def _render(header: list[str], rows: list[list[str]], fmt: str,
            caption: str = "") -> str:
    if fmt == "json":
        return json.dumps([dict(zip(header, row)) for row in rows], indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = []
    if caption:
        lines.append(caption)
        lines.append("")
    lines.append(" | ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    lines.append("-+-".join("-" * w for w in widths))
    for row in rows:
        lines.append(" | ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


# ---------------------------------------------------------- affine patterns


def _fit_affine(samples: list[tuple[int, int]], label: str,
                what: str) -> tuple[Q, Q]:
    """Exact affine law through integer samples; error if they disagree."""
    if len(samples) == 1:
        return Q(0), Q(samples[0][1])
    (x0, y0), (x1, y1) = samples[0], samples[-1]
    a = Q(y1 - y0, x1 - x0)
    b = Q(y0) - a * x0
    if any(a * x + b != y for x, y in samples):
        raise TableMismatchError(label, f"{what} is not affine in r: {samples}")
    return a, b


def _affine_expr(a: Q, b: Q, var: str = "r") -> str:
    if a == 0:
        return str(int(b))
    den = math.lcm(a.denominator, b.denominator)
    coef = int(a * den)
    off = int(b * den)
    head = var if coef == 1 else f"{coef}{var}"
    if off > 0:
        head = f"{head}+{off}"
    elif off < 0:
        head = f"{head}-{-off}"
    if den == 1:
        return head
    return f"{head}/{den}" if off == 0 and coef == 1 else f"({head})/{den}"


def _sigma_ascii(family: str, rank: int) -> str:
    fam = roots.normalize_family(family)
    return fam if fam in roots.EXCEPTIONAL_RANK else f"{fam}_{rank}"


# ------------------------------------------------------------------ table 1


class _CornerSweep(NamedTuple):
    family: str
    rank_texts: tuple[str, ...]
    note: str
    params: tuple[int, ...]
    rank_of: Callable[[int], int]
    param_ok: Callable[[int], bool]


def _always(_r: int) -> bool:
    return True


def _ident(r: int) -> int:
    return r


_T1_SWEEPS = (
    _CornerSweep("a", ("2r",), "", (1, 2, 3, 4, 5, 6), lambda r: 2 * r, _always),
    _CornerSweep("a", ("2r-1",), "", (1, 2, 3, 4, 5, 6), lambda r: 2 * r - 1, _always),
    _CornerSweep("b", ("2", "3"), "", (2, 3), _ident, lambda r: r in (2, 3)),
    _CornerSweep("b", ("4",), "", (4,), _ident, lambda r: r == 4),
    _CornerSweep("b", ("r",), "r > 4", (5, 6, 7, 8), _ident, lambda r: r > 4),
    _CornerSweep("c", ("r",), "", (2, 3, 4, 5, 6), _ident, lambda r: r >= 2),
    _CornerSweep("d", ("4",), "", (4,), _ident, lambda r: r == 4),
    _CornerSweep("d", ("r",), "r > 4", (5, 6, 7, 8), _ident, lambda r: r > 4),
    _CornerSweep("e6", ("6",), "", (6,), _ident, lambda r: r == 6),
    _CornerSweep("e7", ("7",), "", (7,), _ident, lambda r: r == 7),
    _CornerSweep("e8", ("8",), "", (8,), _ident, lambda r: r == 8),
    _CornerSweep("f4", ("4",), "", (4,), _ident, lambda r: r == 4),
    _CornerSweep("g2", ("2",), "", (2,), _ident, lambda r: r == 2),
    _CornerSweep("bc", ("r",), "", (1, 2, 3, 4, 5, 6), _ident, _always),
)


def _sweep_is_symbolic(sweep: _CornerSweep) -> bool:
    return any("r" in text for text in sweep.rank_texts)


def _fitted_corners(family: str, params: tuple[int, ...],
                    rank_of: Callable[[int], int],
                    label: str) -> tuple[list[str], list[int]]:
    """Corner-index expressions and d-factors fitted from an engine sweep."""
    systems = [roots.build(family, rank_of(p)) for p in params]
    found = [[b.corner_indices[0] for b in polytopes.maximal_corners(rs)]
             for rs in systems]
    if len({len(f) for f in found}) != 1:
        raise TableMismatchError(label, f"corner count varies over the sweep: {found}")
    exprs, factors = [], []
    for pos in range(len(found[0])):
        a, b = _fit_affine([(p, f[pos]) for p, f in zip(params, found)],
                           label, "maximal corner index")
        dvals = {rs.d[f[pos] - 1] for rs, f in zip(systems, found)}
        if len(dvals) != 1:
            raise TableMismatchError(label, f"corner factor varies over the sweep: {dvals}")
        exprs.append(_affine_expr(a, b))
        factors.append(dvals.pop())
    return exprs, factors


def _table1_rows(ascii_mode: bool, at: int | None) -> list[list[str]]:
    rows = []
    for sweep in _T1_SWEEPS:
        symbolic = _sweep_is_symbolic(sweep)
        params = sweep.params
        if at is not None and symbolic:
            if not sweep.param_ok(at):
                continue
            params = (at,)
        label = f"Table 1 / {sweep.family}_{sweep.rank_texts[0]}"
        exprs, factors = _fitted_corners(sweep.family, params, sweep.rank_of, label)
        if at is not None and symbolic:
            texts = (str(sweep.rank_of(at)),)
        else:
            texts = sweep.rank_texts
        sigma = ", ".join(_sigma_text(sweep.family, t, ascii_mode) for t in texts)
        if sweep.note and not (at is not None and symbolic):
            sigma += f"  {_note_text(sweep.note, ascii_mode)}"
        corners = "; ".join(_corner_text(e, ascii_mode) for e in exprs)
        facts = "; ".join(f"d{_sub_expr(e, ascii_mode)}={v}"
                          for e, v in zip(exprs, factors))
        rows.append([sigma, corners, facts])
    return rows


# ------------------------------------------------------------------ table 2


class _QuotientSweep(NamedTuple):
    family: str
    rank_text: str
    note: str
    gamma_label: str
    params: tuple[int, ...]
    param_ok: Callable[[int], bool]


_T2_SWEEPS = (
    _QuotientSweep("a", "r", "r >= 3 odd, (r+1)/2 even", "Z_2",
                   (3, 7, 11), lambda r: r % 4 == 3),
    _QuotientSweep("a", "r", "r >= 3 odd, (r+1)/2 odd", "Z_2",
                   (5, 9), lambda r: r % 4 == 1 and r >= 5),
    _QuotientSweep("a", "r", "", "Z_{r+1}", (2, 3, 4, 5), lambda r: r >= 1),
    _QuotientSweep("a", "r", "", "otherwise", (), lambda r: False),
    _QuotientSweep("b", "r", "", "Z_2", (2, 3, 4, 5, 6), lambda r: r >= 2),
    _QuotientSweep("c", "r", "r even", "Z_2", (2, 4, 6),
                   lambda r: r >= 2 and r % 2 == 0),
    _QuotientSweep("c", "r", "r odd", "Z_2", (3, 5, 7),
                   lambda r: r >= 3 and r % 2 == 1),
    _QuotientSweep("d", "r", "r even", "Z_2+Z_2", (4, 6, 8),
                   lambda r: r >= 4 and r % 2 == 0),
    _QuotientSweep("d", "r", "r odd", "Z_4", (5, 7, 9),
                   lambda r: r >= 5 and r % 2 == 1),
    _QuotientSweep("d", "r", "", "{e,p_1}", (4, 5, 6, 7), lambda r: r >= 4),
    _QuotientSweep("d", "r", "r even, r <= 6", "{e,p_{r-1}}", (4, 6),
                   lambda r: r in (4, 6)),
    _QuotientSweep("d", "8", "", "{e,p_{r-1}}", (8,), lambda r: r == 8),
    _QuotientSweep("d", "r", "r even, r >= 10", "{e,p_{r-1}}", (10, 12),
                   lambda r: r >= 10 and r % 2 == 0),
    _QuotientSweep("d", "r", "r even, r <= 6", "{e,p_r}", (4, 6),
                   lambda r: r in (4, 6)),
    _QuotientSweep("d", "8", "", "{e,p_r}", (8,), lambda r: r == 8),
    _QuotientSweep("d", "r", "r even, r >= 10", "{e,p_r}", (10, 12),
                   lambda r: r >= 10 and r % 2 == 0),
    _QuotientSweep("e6", "6", "", "Z_3", (6,), lambda r: r == 6),
    _QuotientSweep("e7", "7", "", "Z_2", (7,), lambda r: r == 7),
)


def _gamma_cell(sweep: _QuotientSweep, at: int | None, ascii_mode: bool) -> str:
    label = sweep.gamma_label
    if at is not None and "r" in label:
        label = centers.resolve_subgroup(roots.build(sweep.family, at), label).label
    return _gamma_text(label, ascii_mode)


def _fitted_bases(sweep: _QuotientSweep, params: tuple[int, ...],
                  label: str) -> list[tuple[str, tuple[str, ...], tuple[int, ...]]]:
    """Per published base: (form, index expressions, d-factors), fitted."""
    patterns = [centers.expected_orbit_bases(sweep.family, p, sweep.gamma_label)
                for p in params]

    def shape(pat):
        return tuple((form, None if form == "full_sum" else len(idx))
                     for form, idx in pat)

    if len({shape(pat) for pat in patterns}) != 1:
        raise TableMismatchError(label, f"base pattern varies over the sweep: {patterns}")
    systems = [roots.build(sweep.family, p) for p in params]
    out = []
    for pos, (form, indices) in enumerate(patterns[0]):
        if form == "full_sum":
            off = [rs.rank for rs in systems if any(v != 1 for v in rs.d)]
            if off:
                raise TableMismatchError(
                    label, f"full-sum factor is not 1 at ranks {off}")
            out.append((form, (), ()))
            continue
        exprs, factors = [], []
        for k in range(len(indices)):
            samples = [(p, pat[pos][1][k]) for p, pat in zip(params, patterns)]
            a, b = _fit_affine(samples, label, "base corner index")
            dvals = {rs.d[pat[pos][1][k] - 1] for rs, pat in zip(systems, patterns)}
            if len(dvals) != 1:
                raise TableMismatchError(label, f"psi factor varies over the sweep: {dvals}")
            exprs.append(_affine_expr(a, b))
            factors.append(dvals.pop())
        out.append((form, tuple(exprs), tuple(factors)))
    return out


def _factor_cell(form: str, factors: tuple[int, ...], ascii_mode: bool,
                 rank_text: str) -> str:
    if form == "corner":
        return str(factors[0])
    if form == "half_sum":
        return "(" + ",".join(str(v) for v in factors) + ")"
    if form == "full_sum":
        return f"(1,{_dots(ascii_mode)},1)"
    return "(" + ",".join(str(v) for v in factors) + ")"


def _table2_rows(ascii_mode: bool, at: int | None) -> list[list[str]]:
    rows = []
    for sweep in _T2_SWEEPS:
        symbolic = "r" in sweep.rank_text
        params = sweep.params
        rank_text = sweep.rank_text
        if at is not None and symbolic:
            if not sweep.param_ok(at):
                continue
            params = (at,)
            rank_text = str(at)
        label = f"Table 2 / {sweep.family}_{sweep.rank_text} {sweep.gamma_label}"
        sigma = _sigma_text(sweep.family, rank_text, ascii_mode)
        if sweep.note and not (at is not None and symbolic):
            sigma += f"  {_note_text(sweep.note, ascii_mode)}"
        if sweep.gamma_label == "otherwise":
            rows.append([sigma, "otherwise", "unknown", ""])
            continue
        gamma = _gamma_cell(sweep, at if symbolic else None, ascii_mode)
        bases = _fitted_bases(sweep, params, label)
        base_cell = "; ".join(_base_exprs_text(form, exprs, ascii_mode, rank_text)
                              for form, exprs, _ in bases)
        factor_cell = "; ".join(_factor_cell(form, factors, ascii_mode, rank_text)
                                for form, _, factors in bases)
        rows.append([sigma, gamma, base_cell, factor_cell])
    return rows


# -------------------------------------------------------------- tables 3..6


def _rank_text_of(row: catalog.SpaceDescriptor) -> str:
    if row.has_free_r:
        return row.rank_expr.replace("*", "").replace(" ", "")
    return str(row.rank(row.r_min))


def _space_cell(row: catalog.SpaceDescriptor, ascii_mode: bool) -> str:
    if row.condition:
        return f"{row.name}  ({_note_text(row.condition, ascii_mode)})"
    return row.name


def _fit_params(row: catalog.SpaceDescriptor) -> list[int]:
    limit = max(9, row.r_min + 2)
    return row.admissible_r(limit)[:3]


def _row_corner_cell(row: catalog.SpaceDescriptor, ascii_mode: bool,
                     at: int | None) -> str:
    label = f"Table {row.table} / {row.name}"
    params = tuple([at] if at is not None and row.has_free_r else _fit_params(row))
    exprs, _factors = _fitted_corners(row.family, params, row.rank, label)
    return "; ".join(_corner_text(e, ascii_mode) for e in exprs)


def _row_dim_cell(row: catalog.SpaceDescriptor, ascii_mode: bool,
                  at: int | None, at_q: int | None) -> str:
    if not row.orbit_dim_formulas:
        return "unknown"
    if at is None:
        return "; ".join(_formula_text(f, ascii_mode) for f in row.orbit_dim_formulas)
    bound = at if row.has_free_r else row.r_min
    q = (at_q or 1) if row.has_q else None
    report = antipodal.antipodal_report(row, bound, q)
    return "; ".join(str(d) for d in report.dimensions)


def _catalog_table_rows(n: int, ascii_mode: bool, at: int | None,
                        at_q: int | None) -> list[list[str]]:
    rows = []
    for row in catalog.spaces():
        if row.table != n:
            continue
        if at is not None and row.has_free_r and not row.admits(
                at, (at_q or 1) if row.has_q else None):
            continue
        bound_at = at if row.has_free_r else None
        sigma = _sigma_text(row.family, _rank_text_of(row) if bound_at is None
                            else str(row.rank(bound_at)), ascii_mode)
        space = _space_cell(row, ascii_mode)
        dims = _row_dim_cell(row, ascii_mode, at, at_q)
        if n in (3, 5):
            corners = _row_corner_cell(row, ascii_mode, bound_at)
            cells = [space, sigma, corners, dims]
        else:
            labels = row.gamma_labels
            if bound_at is not None:
                rs = roots.build(row.family, row.rank(bound_at))
                labels = tuple(
                    centers.resolve_subgroup(rs, g).label if "r" in g else g
                    for g in labels if g != "otherwise") or labels
            gamma = " or ".join(_gamma_text(g, ascii_mode) for g in labels)
            cells = [space, sigma, gamma, dims]
        if n in (3, 4):
            cells.insert(0, row.cartan_label)
        rows.append(cells)
    return rows


def render_table(n: int, fmt: str = "text", ascii_mode: bool = False,
                 at: int | None = None, at_q: int | None = None) -> str:
    """One reference table, generated from the engine and the catalog."""
    if fmt in ("csv", "json"):
        ascii_mode = True
    if n == 1:
        rows = _table1_rows(ascii_mode, at)
    elif n == 2:
        rows = _table2_rows(ascii_mode, at)
    else:
        rows = _catalog_table_rows(n, ascii_mode, at, at_q)
    header = _CSV_HEADERS[n] if fmt in ("csv", "json") else _TEXT_HEADERS[n]
    caption = f"table {n}: {_CAPTIONS[n]}"
    return _render(header, rows, fmt, caption)


# ------------------------------------------------------------ report output


def _coords_doc(point: tuple[Q, ...]) -> list[list[int]]:
    return [[c.numerator, c.denominator] for c in point]


def _base_doc(base: polytopes.BasePoint) -> dict:
    return {
        "form": base.form,
        "corner_indices": list(base.corner_indices),
        "coords": _coords_doc(base.point),
    }


def report_document(report: antipodal.AntipodalReport) -> dict:
    """JSON-stable document for one antipodal report."""
    return {
        "schema_version": SCHEMA_VERSION,
        "space": report.space.name,
        "params": {"r": report.r, "q": report.q},
        "gamma": report.gamma.label if report.gamma is not None else None,
        "status": report.status,
        "orbits": [
            {
                "base": _base_doc(orbit.base),
                "j_set_size": len(orbit.tangent_roots),
                "dimension": orbit.dimension,
            }
            for orbit in report.orbits
        ],
        "equivalent_maxima": [
            {"base": _base_doc(m.base), "orbit_index": m.orbit_index}
            for m in report.equivalent_maxima
        ],
        "unlisted_ties": [
            {
                "base": _base_doc(t.base),
                "j_set_size": len(t.tangent_roots),
                "dimension": t.dimension,
            }
            for t in report.unlisted_ties
        ],
    }


def _base_value_text(base: polytopes.BasePoint, rank: int, ascii_mode: bool) -> str:
    if base.form == "corner":
        return _corner_text(str(base.corner_indices[0]), ascii_mode)
    if base.form == "half_sum":
        exprs = tuple(str(i) for i in base.corner_indices)
        return _base_exprs_text("half_sum", exprs, ascii_mode)
    if base.form == "full_sum":
        return _base_exprs_text("full_sum", (), ascii_mode, str(rank))
    terms = [f"{w} {_corner_text(str(j + 1), ascii_mode)}"
             for j, w in enumerate(base.weights) if w != 0]
    return " + ".join(terms)


def _report_text(report: antipodal.AntipodalReport, ascii_mode: bool) -> str:
    rank = report.space.rank(report.r)
    lines = [
        f"space: {report.space.name}  [{report.space.cartan_label},"
        f" table {report.space.table}]",
        f"sigma: {_sigma_text(report.space.family, str(rank), ascii_mode)}",
        "params: r=" + str(report.r) + ("" if report.q is None else f", q={report.q}"),
    ]
    if report.gamma is not None:
        lines.append(f"gamma: {_gamma_text(report.gamma.label, ascii_mode)}")
    lines.append(f"status: {report.status}")
    if not report.orbits and report.status == antipodal.EXCLUDED_UNKNOWN:
        lines.append("no validated description for this quotient")
    for i, orbit in enumerate(report.orbits, start=1):
        base = _base_value_text(orbit.base, rank, ascii_mode)
        lines.append(f"orbit {i}: base {base} ({orbit.base.form}),"
                     f" tangent roots {len(orbit.tangent_roots)},"
                     f" dimension {orbit.dimension}")
    for m in report.equivalent_maxima:
        base = _base_value_text(m.base, rank, ascii_mode)
        lines.append(f"equivalent maximum: {base} ({m.base.form}, deck image"
                     f" of orbit {m.orbit_index + 1}'s base)")
    for t in report.unlisted_ties:
        base = _base_value_text(t.base, rank, ascii_mode)
        lines.append(f"unlisted tie: {base} ({t.base.form}),"
                     f" tangent roots {len(t.tangent_roots)},"
                     f" dimension {t.dimension}")
    if report.orbits:
        dims = ", ".join(str(d) for d in report.dimensions)
        lines.append(f"component dimensions: {dims}")
    return "\n".join(lines)


def _report_csv(report: antipodal.AntipodalReport) -> str:
    header = ["space", "r", "q", "gamma", "status", "kind", "form",
              "corner_indices", "weights", "j_set_size", "dimension"]
    gamma = report.gamma.label if report.gamma is not None else ""
    q = "" if report.q is None else str(report.q)
    fixed = [report.space.name, str(report.r), q, gamma, report.status]

    def base_cells(base: polytopes.BasePoint) -> list[str]:
        return [base.form, ";".join(str(i) for i in base.corner_indices),
                ";".join(str(w) for w in base.weights)]

    rows = []
    for orbit in report.orbits:
        rows.append(fixed + ["orbit"] + base_cells(orbit.base)
                    + [str(len(orbit.tangent_roots)), str(orbit.dimension)])
    for m in report.equivalent_maxima:
        rows.append(fixed + ["equivalent_maximum"] + base_cells(m.base)
                    + ["", str(m.orbit_index)])
    for t in report.unlisted_ties:
        rows.append(fixed + ["unlisted_tie"] + base_cells(t.base)
                    + [str(len(t.tangent_roots)), str(t.dimension)])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


# -------------------------------------------------------------- subcommands


def _space_sigma_ascii(row: catalog.SpaceDescriptor) -> str:
    fam = roots.normalize_family(row.family)
    if fam in roots.EXCEPTIONAL_RANK:
        return fam
    text = _rank_text_of(row)
    return f"{fam}_{text}" if len(text) == 1 else f"{fam}_{{{text}}}"


def cmd_list(fmt: str) -> int:
    rows = []
    for row in catalog.spaces():
        gammas = ";".join(row.gamma_labels)
        rows.append([row.name, row.cartan_label, _space_sigma_ascii(row),
                     row.rank_expr, gammas])
    if fmt == "text":
        header = ["name", "label", "sigma", "rank", "gammas", "table", "condition"]
        wide = []
        for row, spec in zip(rows, catalog.spaces()):
            wide.append(row[:4] + [row[4] or "-", str(spec.table),
                                   spec.condition or "-"])
        print(_render(header, wide, "text"))
        return 0
    print(_render(["name", "cartan_label", "sigma", "rank_expr", "gammas"],
                  rows, fmt))
    return 0


def _describe_doc(row: catalog.SpaceDescriptor) -> dict:
    return {
        "name": row.name,
        "cartan_label": row.cartan_label,
        "table": row.table,
        "family": roots.normalize_family(row.family),
        "rank_expr": row.rank_expr,
        "r_min": row.r_min,
        "r_max": row.r_max,
        "r_parity": row.r_parity,
        "has_q": row.has_q,
        "condition": row.condition,
        "gamma_labels": list(row.gamma_labels),
        "multiplicities": [[length, expr] for length, expr in row.multiplicities],
        "dim_formula": row.dim_formula,
        "orbit_dim_formulas": list(row.orbit_dim_formulas),
        "aliases": list(row.aliases),
    }


def cmd_describe(name: str, r: int | None, q: int | None, fmt: str,
                 ascii_mode: bool) -> int:
    hits = catalog.find_spaces(name)
    if not hits:
        print(f"error: no catalogued space named {name!r}", file=sys.stderr)
        return 2
    if fmt == "json":
        print(json.dumps([_describe_doc(row) for row in hits], indent=2))
        return 0
    if fmt == "csv":
        rows = [[row.name, row.cartan_label, _space_sigma_ascii(row),
                 row.rank_expr, ";".join(row.gamma_labels)] for row in hits]
        print(_render(["name", "cartan_label", "sigma", "rank_expr", "gammas"],
                      rows, "csv"))
        return 0
    blocks = []
    for row in hits:
        lines = [f"{row.name}  [{row.cartan_label}, table {row.table}]"]
        lines.append(f"  sigma: {_sigma_text(row.family, _rank_text_of(row), ascii_mode)}")
        top = "" if row.r_max is None else str(row.r_max)
        span = f"r = {row.r_min}..{top}" if top else f"r >= {row.r_min}"
        if row.r_parity:
            span += f", r {row.r_parity}"
        if row.has_q:
            span += ", q >= 1"
        lines.append(f"  parameters: {span}")
        if row.condition:
            lines.append(f"  condition: {_note_text(row.condition, ascii_mode)}")
        lines.append(f"  dimension: {_formula_text(row.dim_formula, ascii_mode)}")
        mults = ", ".join(f"|a|^2={length}: {_formula_text(expr, ascii_mode)}"
                          for length, expr in row.multiplicities)
        lines.append(f"  multiplicities: {mults}")
        if row.gamma_labels:
            lines.append("  gammas: " + ", ".join(
                _gamma_text(g, ascii_mode) for g in row.gamma_labels))
        if row.orbit_dim_formulas:
            lines.append("  component dimensions: " + "; ".join(
                _formula_text(f, ascii_mode) for f in row.orbit_dim_formulas))
        if row.aliases:
            lines.append("  aliases: " + ", ".join(row.aliases))
        if r is not None:
            q_eff = q if row.has_q else None
            if row.admits(r, q_eff if row.has_q else None) or not row.has_free_r:
                bound = r if row.has_free_r else row.r_min
                if row.admits(bound, (q_eff or 1) if row.has_q else None):
                    rank = row.rank(bound)
                    dim = catalog.dim_space(row, bound, (q_eff or 1) if row.has_q else None)
                    lines.append(f"  at r={bound}"
                                 + (f", q={q_eff or 1}" if row.has_q else "")
                                 + f": rank {rank}, dimension {dim}")
        blocks.append("\n".join(lines))
    print("\n\n".join(blocks))
    return 0


def cmd_antipodal(name: str, r: int | None, q: int | None,
                  gamma: str | None, fmt: str, allow_unvalidated: bool,
                  ascii_mode: bool) -> int:
    try:
        space, bound = antipodal.resolve_space(name, r, q, gamma_label=gamma)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        report = antipodal.antipodal_report(space, bound, q, gamma_label=gamma)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if report.status == antipodal.EXCLUDED_UNKNOWN:
        if not allow_unvalidated:
            print(f"error: no validated description for {space.name} with"
                  f" gamma {report.gamma.label}; rerun with --allow-unvalidated"
                  " to compute it anyway", file=sys.stderr)
            return 3
        try:
            report = antipodal.antipodal_report(space, bound, q,
                                                gamma_label=gamma, force=True)
        except ValueError:
            pass  # no concrete subgroup to force; emit the refusal report
    if fmt == "json":
        print(json.dumps(report_document(report), indent=2))
    elif fmt == "csv":
        print(_report_csv(report))
    else:
        print(_report_text(report, ascii_mode))
    return 0


def _parse_evaluate(text: str) -> dict[str, int]:
    out = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        key, _, value = piece.partition("=")
        key = key.strip()
        if key not in ("r", "q") or not value.strip().lstrip("-").isdigit():
            raise ValueError(f"cannot parse evaluation point {piece!r};"
                             " expected r=<int> or q=<int>")
        out[key] = int(value)
    if "r" not in out:
        raise ValueError("evaluation point needs r=<int>")
    return out


def cmd_table(n: int, fmt: str, evaluate: str | None, ascii_mode: bool) -> int:
    at = at_q = None
    if evaluate is not None:
        try:
            point = _parse_evaluate(evaluate)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        at, at_q = point["r"], point.get("q")
    try:
        print(render_table(n, fmt, ascii_mode, at, at_q))
    except TableMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


# -------------------------------------------------------------------- verify


def _verify_table1() -> list[tuple[str, Callable[[], None]]]:
    checks = []
    sweeps = {"a": range(1, 13), "b": range(2, 13), "c": range(2, 13),
              "d": range(4, 13), "bc": range(1, 13),
              "e6": (6,), "e7": (7,), "e8": (8,), "f4": (4,), "g2": (2,)}

    def check(family: str, rank: int) -> Callable[[], None]:
        def run() -> None:
            rs = roots.build(family, rank)
            found = [b.corner_indices[0] for b in polytopes.maximal_corners(rs)]
            expected = polytopes.expected_maximal_corners(family, rank)
            if found != expected:
                raise AssertionError(f"maximal corners {found} != {expected}")
        return run

    for family, ranks in sweeps.items():
        for rank in ranks:
            checks.append((f"Table 1 / {_sigma_ascii(family, rank)}",
                           check(family, rank)))
    return checks


def _verify_table2() -> list[tuple[str, Callable[[], None]]]:
    checks = []

    def check(family: str, rank: int, label: str) -> Callable[[], None]:
        def run() -> None:
            rs = roots.build(family, rank)
            gamma = centers.resolve_subgroup(rs, label)
            poly = polytopes.p_gamma(rs, gamma)
            found = {b.weights for b in polytopes.max_prime(poly)}
            declared = {b.weights for b in centers.expected_base_points(rs, gamma)}
            extras = set(centers.known_extra_maxima(rs, gamma))
            if found != declared | extras:
                raise AssertionError(
                    f"outer maxima {sorted(found)} != {sorted(declared | extras)}")
        return run

    cases: list[tuple[str, int, str]] = []
    for rank in range(3, 13, 2):
        cases.append(("a", rank, "Z_2"))
    for rank in range(2, 13):
        cases.append(("a", rank, "Z_{r+1}"))
        cases.append(("b", rank, "Z_2"))
        cases.append(("c", rank, "Z_2"))
    for rank in range(4, 13):
        label = "Z_2+Z_2" if rank % 2 == 0 else "Z_4"
        cases.append(("d", rank, label))
        cases.append(("d", rank, "{e,p_1}"))
        if rank % 2 == 0:
            cases.append(("d", rank, "{e,p_{r-1}}"))
            cases.append(("d", rank, "{e,p_r}"))
    cases.append(("e6", 6, "Z_3"))
    cases.append(("e7", 7, "Z_2"))
    for family, rank, label in cases:
        checks.append((f"Table 2 / {_sigma_ascii(family, rank)} {label}",
                       check(family, rank, label)))
    return checks


def _verify_catalog() -> list[tuple[str, Callable[[], None]]]:
    checks = []

    def check_dims(row: catalog.SpaceDescriptor, r: int, q: int | None,
                   gamma_label: str | None) -> Callable[[], None]:
        def run() -> None:
            report = antipodal.antipodal_report(row, r, q, gamma_label=gamma_label)
            if not row.orbit_dim_formulas:
                if report.status != antipodal.EXCLUDED_UNKNOWN:
                    raise AssertionError(f"expected an excluded case, got {report.status}")
                return
            expected = tuple(catalog.evaluate(f, r=r, q=q)
                             for f in row.orbit_dim_formulas)
            if report.dimensions != expected:
                raise AssertionError(
                    f"dimensions {report.dimensions} != {expected} at r={r}, q={q}")
        return run

    def check_total(row: catalog.SpaceDescriptor, r: int,
                    q: int | None) -> Callable[[], None]:
        def run() -> None:
            rs = roots.build(row.family, row.rank(r))
            total = rs.rank + sum(catalog.multiplicity(row, root, r, q)
                                  for root in rs.positive_roots)
            dim = catalog.dim_space(row, r, q)
            if total != dim:
                raise AssertionError(f"rank + multiplicities {total} != dim {dim}")
        return run

    for row in catalog.spaces():
        limit = max(8, row.r_min + 2)
        r_values = row.admissible_r(limit)[:4]
        q_values = (1, 2) if row.has_q else (None,)
        labels: tuple[str | None, ...] = (None,)
        if not row.simply_connected and "otherwise" not in row.gamma_labels:
            labels = row.gamma_labels
        for r in r_values:
            for q in q_values:
                suffix = f" r={r}" + (f" q={q}" if q is not None else "")
                for lab in labels:
                    tag = f" {lab}" if lab is not None and len(labels) > 1 else ""
                    checks.append((f"Table {row.table} / {row.name}{tag}{suffix}",
                                   check_dims(row, r, q, lab)))
                checks.append((f"dim identity / {row.name}{suffix}",
                               check_total(row, r, q)))
    return checks


def _verify_jsets() -> list[tuple[str, Callable[[], None]]]:
    checks = []

    def check(family: str, rank: int) -> Callable[[], None]:
        def run() -> None:
            rs = roots.build(family, rank)
            for j in range(1, rank + 1):
                weights = tuple(Q(k == j - 1) for k in range(rank))
                base = polytopes.base_point(rs, weights)
                via_base = {root.vector for root in antipodal.tangent_roots(rs, base)}
                via_j = {root.vector for root in antipodal.j_single(rs, j)}
                if via_base != via_j:
                    raise AssertionError(f"corner {j}: unified set != indexed set")
        return run

    for family, rank in (("a", 6), ("b", 5), ("c", 5), ("d", 6), ("bc", 4),
                         ("e6", 6), ("e7", 7), ("e8", 8), ("f4", 4), ("g2", 2)):
        checks.append((f"J-sets / {_sigma_ascii(family, rank)}", check(family, rank)))
    return checks


def _verify_deep() -> list[tuple[str, Callable[[], None]]]:
    checks = []

    def check_roots_of(family: str, rank: int) -> Callable[[], None]:
        def run() -> None:
            report = oracle.check_roots(family, rank)
            if not report.agreed:
                raise AssertionError(f"mismatches: {report.mismatches[:3]}")
        return run

    sweeps = {"a": range(1, 13), "b": range(2, 13), "c": range(2, 13),
              "d": range(4, 13), "bc": range(1, 13),
              "e6": (6,), "e7": (7,), "e8": (8,), "f4": (4,), "g2": (2,)}
    for family, ranks in sweeps.items():
        for rank in ranks:
            checks.append((f"roots oracle / {_sigma_ascii(family, rank)}",
                           check_roots_of(family, rank)))

    def check_vertices(make: Callable[[], polytopes.PGammaPolytope]) -> Callable[[], None]:
        def run() -> None:
            report = oracle.vertex_check_oracle(make())
            if not report.agreed:
                raise AssertionError(f"mismatches: {report.mismatches[:3]}")
        return run

    def quotient(family: str, rank: int, label: str) -> Callable[[], polytopes.PGammaPolytope]:
        def make() -> polytopes.PGammaPolytope:
            rs = roots.build(family, rank)
            return polytopes.p_gamma(rs, centers.resolve_subgroup(rs, label))
        return make

    vertex_cases = [
        ("simplex a_2", lambda: polytopes.simplex_polytope(roots.build("a", 2))),
        ("b_4 Z_2", quotient("b", 4, "Z_2")),
        ("c_5 Z_2", quotient("c", 5, "Z_2")),
        ("d_6 Z_2+Z_2", quotient("d", 6, "Z_2+Z_2")),
        ("d_8 {e,p_7}", quotient("d", 8, "{e,p_{r-1}}")),
        ("a_7 Z_8", quotient("a", 7, "Z_{r+1}")),
        ("e7 Z_2", quotient("e7", 7, "Z_2")),
    ]
    for name, make in vertex_cases:
        checks.append((f"vertex oracle / {name}", check_vertices(make)))
    return checks


def cmd_verify(deep: bool) -> int:
    checks = (_verify_table1() + _verify_table2() + _verify_catalog()
              + _verify_jsets())
    if deep:
        checks += _verify_deep()
    failures = 0
    groups: dict[str, int] = {}
    for label, run in checks:
        group = label.split(" / ")[0]
        groups[group] = groups.get(group, 0) + 1
        try:
            run()
        except Exception as exc:  # report, never throw: exit code carries the verdict
            failures += 1
            print(f"FAIL {label}: {exc}")
    for group, count in groups.items():
        print(f"checked {group}: {count} cases")
    if failures:
        print(f"{failures} of {len(checks)} checks failed")
        return 1
    print(f"all {len(checks)} checks passed")
    return 0


# ---------------------------------------------------------------- dispatch


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antipodal-atlas",
        description="Antipodal sets of compact symmetric spaces, exactly:"
                    " maximal corners, tangent root sets, orbit dimensions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json", "csv"),
                       default="text", help="output format (default text)")

    def add_ascii(p: argparse.ArgumentParser) -> None:
        p.add_argument("--ascii", action="store_true",
                       help="ascii-only text output")

    p_list = sub.add_parser("list", help="list every catalogued space")
    add_format(p_list)

    p_desc = sub.add_parser("describe", help="show the catalog rows of one space")
    p_desc.add_argument("name")
    p_desc.add_argument("--r", type=int, default=None)
    p_desc.add_argument("--q", type=int, default=None)
    add_format(p_desc)
    add_ascii(p_desc)

    p_anti = sub.add_parser("antipodal",
                            help="compute the antipodal description of a space")
    p_anti.add_argument("name")
    p_anti.add_argument("--r", type=int, default=None)
    p_anti.add_argument("--q", type=int, default=None)
    p_anti.add_argument("--gamma", default=None,
                        help="quotient subgroup label, e.g. Z_2 or {e,p_1}")
    p_anti.add_argument("--allow-unvalidated", action="store_true",
                        help="compute quotients outside the validated catalog")
    add_format(p_anti)
    add_ascii(p_anti)

    p_table = sub.add_parser("table", help="emit one of the six reference tables")
    p_table.add_argument("number", type=int, choices=range(1, 7))
    p_table.add_argument("--evaluate", default=None, metavar="r=..,q=..",
                         help="instantiate parameterized rows at a numeric point")
    add_format(p_table)
    add_ascii(p_table)

    p_verify = sub.add_parser("verify",
                              help="re-check every table against the engine")
    p_verify.add_argument("--deep", action="store_true",
                          help="also run the independent oracles")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.command == "list":
        return cmd_list(args.format)
    if args.command == "describe":
        return cmd_describe(args.name, args.r, args.q, args.format, args.ascii)
    if args.command == "antipodal":
        return cmd_antipodal(args.name, args.r, args.q, args.gamma,
                             args.format, args.allow_unvalidated, args.ascii)
    if args.command == "table":
        return cmd_table(args.number, args.format, args.evaluate, args.ascii)
    return cmd_verify(args.deep)


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
