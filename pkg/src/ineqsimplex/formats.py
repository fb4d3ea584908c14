"""Text and JSON problem formats, tableau rendering, and JSONL traces.

Text format, one statement per line::

    # comment
    vars 3
    min 1 0 -2          (optional; makes the document a linear program)
    row 1 3 0 >= 2

Numbers are integers, ``p/q`` fractions, or decimals with ``.`` or ``,``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .model import InequalitySystem, LinearProgram, ModelError, make_system
from .rational import RationalParseError, rat_parse, render, render_decimal


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


# -- text ------------------------------------------------------------------

def _numbers(tokens, line):
    try:
        return [rat_parse(t) for t in tokens]
    except RationalParseError as exc:
        raise ParseError(str(exc), line) from None


def parse_text(text: str):
    n = None
    c = None
    A, b = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, *rest = line.split()
        if head == "vars":
            if n is not None:
                raise ParseError("duplicate 'vars'", lineno)
            if len(rest) != 1 or not rest[0].isdigit() or int(rest[0]) < 1:
                raise ParseError("'vars' takes one positive integer", lineno)
            n = int(rest[0])
        elif head in ("min", "row"):
            if n is None:
                raise ParseError(f"'{head}' before 'vars'", lineno)
            if head == "min":
                if c is not None:
                    raise ParseError("duplicate 'min'", lineno)
                if len(rest) != n:
                    raise ParseError(f"'min' needs {n} coefficients, got {len(rest)}", lineno)
                c = _numbers(rest, lineno)
            else:
                if len(rest) != n + 2 or rest[-2] != ">=":
                    raise ParseError(f"expected 'row' with {n} coefficients, '>=' and a bound", lineno)
                vals = _numbers(rest[:n] + rest[-1:], lineno)
                A.append(vals[:n])
                b.append(vals[n])
        else:
            raise ParseError(f"unknown keyword {head!r}", lineno)
    if n is None:
        raise ParseError("missing 'vars' line")
    system = make_system(A, b, n)
    if c is not None:
        return LinearProgram(tuple(c), system)
    return system


def emit_text(model, comment: str | None = None) -> str:
    system = model.system if isinstance(model, LinearProgram) else model
    lines = []
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    lines.append(f"vars {system.n}")
    if isinstance(model, LinearProgram):
        lines.append("min " + " ".join(render(v) for v in model.c))
    for row, rhs in zip(system.A, system.b):
        lines.append("row " + " ".join(render(v) for v in row) + f" >= {render(rhs)}")
    return "\n".join(lines) + "\n"


# -- JSON ------------------------------------------------------------------

def _json_numbers(values, key):
    if not isinstance(values, list):
        raise ParseError(f"'{key}' must be an array")
    out = []
    for v in values:
        if not isinstance(v, str):
            raise ParseError(f"'{key}' entries must be strings holding exact numbers, got {v!r}")
        try:
            out.append(rat_parse(v))
        except RationalParseError as exc:
            raise ParseError(f"'{key}': {exc}") from None
    return out


def parse_json(text):
    if isinstance(text, (str, bytes)):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    else:
        doc = text
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    unknown = set(doc) - {"n", "A", "b", "c"}
    if unknown:
        raise ParseError(f"unknown key {sorted(unknown)[0]!r}")
    n = doc.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError("'n' must be a positive integer")
    if "A" not in doc:
        raise ParseError("missing key 'A'")
    if "b" not in doc:
        raise ParseError("missing key 'b'")
    if not isinstance(doc["A"], list):
        raise ParseError("'A' must be an array of arrays")
    A = [_json_numbers(row, "A") for row in doc["A"]]
    b = _json_numbers(doc["b"], "b")
    try:
        system = make_system(A, b, n)
    except ModelError as exc:
        raise ParseError(f"'A': {exc}") from None
    if "c" in doc:
        c = _json_numbers(doc["c"], "c")
        if len(c) != n:
            raise ParseError(f"'c' has {len(c)} entries, expected {n}")
        return LinearProgram(tuple(c), system)
    return system


def emit_json(model) -> str:
    system = model.system if isinstance(model, LinearProgram) else model
    doc = {"n": system.n}
    if isinstance(model, LinearProgram):
        doc["c"] = [render(v) for v in model.c]
    doc["A"] = [[render(v) for v in row] for row in system.A]
    doc["b"] = [render(v) for v in system.b]
    return json.dumps(doc) + "\n"


def parse_any(text: str, name: str = ""):
    """JSON if the name ends in ``.json`` or the text starts with ``{``, text format otherwise."""
    if name.endswith(".json") or text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


# -- rendering -------------------------------------------------------------

def format_entry(v: Fraction, style: str = "fraction", places: int = 3, sep: str = ".") -> str:
    if style == "fraction":
        return render(v)
    if style == "decimal":
        return render_decimal(v, places, sep)
    raise ValueError(f"unknown style {style!r}")


def render_tableau(tab, style: str = "fraction", places: int = 3, sep: str = ".") -> str:
    """Column numbers (1-based), then the w-row, then one row per variable."""
    header = [str(j + 1) for j in range(tab.width)]
    body = [[format_entry(v, style, places, sep) for v in tab.w_row]]
    body += [[format_entry(v, style, places, sep) for v in row] for row in tab.rows]
    widths = [max(len(r[j]) for r in [header] + body) for j in range(tab.width)]
    lines = []
    for i, r in enumerate([header] + body):
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip())
        if i == 0:
            lines.append("-" * len(lines[0]))
    return "\n".join(lines) + "\n"


def format_vector(v) -> str:
    return "(" + ", ".join(render(x) for x in v) + ")"


# -- traces ----------------------------------------------------------------

def verdict_record(outcome, threshold=None) -> dict:
    rec = {"verdict": outcome.verdict, "pivots": outcome.pivots}
    if threshold is not None:
        rec["threshold"] = render(threshold)
    if outcome.verdict == "feasible":
        rec["x"] = [render(v) for v in outcome.x]
    elif outcome.verdict == "infeasible":
        rec["entering_col"] = outcome.entering + 1
        rec["farkas_y"] = [render(v) for v in outcome.farkas.y]
        rec["farkas_s"] = [render(v) for v in outcome.farkas.s]
        rec["last_point"] = [render(v) for v in outcome.last_point]
        rec["violated_rows"] = [i + 1 for i in outcome.violated]
    if outcome.fallback_used:
        rec["fallback_used"] = True
    return rec


def trace_records(outcome, threshold=None) -> list:
    """Pivot records (1-based rows and columns) followed by one verdict record."""
    recs = [
        {
            "step": p.step,
            "entering_col": p.entering_col + 1,
            "leaving_row": p.leaving_row + 1,
            "pivot_value": render(p.pivot_value),
            "w_row_after": [render(v) for v in p.w_row_after],
        }
        for p in outcome.trace
    ]
    recs.append(verdict_record(outcome, threshold))
    return recs


def emit_trace(outcome, fmt: str = "jsonl") -> str:
    """JSONL trace of one outcome, or of a ``[(t, outcome), ...]`` threshold run."""
    if fmt != "jsonl":
        raise ValueError(f"unsupported trace format {fmt!r}")
    if isinstance(outcome, list):
        recs = [r for t, out in outcome for r in trace_records(out, t)]
    else:
        recs = trace_records(outcome)
    return "".join(json.dumps(r) + "\n" for r in recs)
