"""Plain-text serialization of function tables and schemes.

FunctionFile: line 1 is "q k"; then q^k lines, one non-negative label
per line, in lexicographic message order (leftmost coordinate most
significant).

SchemeFile: line 1 is "kind q k r" with kind in {linear, table}.  A
linear file continues with the k generator rows (k+r space-separated
element indices each, leading identity block required); a table file
continues with q^k parity rows of r indices in message order.

Field elements are always written as canonical integer indices, so the
formats are identical for prime and extension fields.  Serialization is
deterministic and both formats round-trip byte-identically (parsers
tolerate trailing whitespace).  FormatError line numbers are 1-based
file lines; a truncated file reports the first missing line.
"""

from __future__ import annotations

from .codes import GeneratorMatrix
from .errors import FormatError, NotSystematic, RankDeficient
from .fcc import FccScheme, FunctionTable
from .gf import Field


def _int_tokens(line: str, lineno: int, expected: int, what: str) -> list[int]:
    tokens = line.split()
    if len(tokens) != expected:
        raise FormatError(
            f"{what}: expected {expected} value(s), got {len(tokens)}", lineno
        )
    out = []
    for tok in tokens:
        if not tok.isdigit():
            raise FormatError(f"{what}: {tok!r} is not a non-negative integer", lineno)
        out.append(int(tok))
    return out


def _split_lines(text: str) -> list[str]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def _body_line(lines: list[str], index: int, total: int, what: str) -> str:
    """Body line ``index`` (0-based, file line index+2) or a missing-line error."""
    lineno = index + 2
    if lineno - 1 >= len(lines):
        raise FormatError(f"missing {what} line {index + 1} of {total}", lineno)
    return lines[lineno - 1]


def _reject_extra(lines: list[str], used: int) -> None:
    for idx in range(used, len(lines)):
        if lines[idx].strip():
            raise FormatError("unexpected extra line", idx + 1)


def serialize_function_file(f: FunctionTable) -> str:
    out = [f"{f.q} {f.k}"]
    out.extend(str(v) for v in f.values)
    return "\n".join(out) + "\n"


def parse_function_file(text: str) -> FunctionTable:
    lines = _split_lines(text)
    if not lines or not lines[0].strip():
        raise FormatError("empty function file", 1)
    q, k = _int_tokens(lines[0], 1, 2, "header")
    Field(q)  # InvalidOrder for non-prime-power q
    expected = q**k
    values = []
    for i in range(expected):
        line = _body_line(lines, i, expected, "value")
        values.append(_int_tokens(line, i + 2, 1, "value")[0])
    _reject_extra(lines, expected + 1)
    return FunctionTable(q=q, k=k, values=tuple(values))


def serialize_scheme_file(scheme: FccScheme) -> str:
    out = [f"{scheme.kind} {scheme.q} {scheme.k} {scheme.r}"]
    if scheme.kind == "linear":
        rows = scheme.generator.rows
    else:
        rows = scheme.parity_table
    out.extend(" ".join(str(x) for x in row) for row in rows)
    return "\n".join(out) + "\n"


def parse_scheme_file(text: str) -> FccScheme:
    lines = _split_lines(text)
    if not lines or not lines[0].strip():
        raise FormatError("empty scheme file", 1)
    head = lines[0].split()
    if len(head) != 4:
        raise FormatError("header must be 'kind q k r'", 1)
    kind = head[0]
    if kind not in ("linear", "table"):
        raise FormatError(f"unknown scheme kind {kind!r}", 1)
    q, k, r = _int_tokens(" ".join(head[1:]), 1, 3, "header")
    field = Field(q)
    body_rows = k if kind == "linear" else q**k
    width = k + r if kind == "linear" else r
    rows = []
    for i in range(body_rows):
        line = _body_line(lines, i, body_rows, "row")
        row = _int_tokens(line, i + 2, width, "row")
        bad = next((x for x in row if x >= q), None)
        if bad is not None:
            raise FormatError(f"element index {bad} outside [0, {q})", i + 2)
        rows.append(tuple(row))
    _reject_extra(lines, body_rows + 1)
    if kind == "linear":
        try:
            return FccScheme.linear(GeneratorMatrix(field, rows))
        except (NotSystematic, RankDeficient) as exc:
            raise FormatError(str(exc), 2) from exc
    return FccScheme.tabular(q, k, rows)
