"""Matrix files.

Plain text: the first non-blank line holds n, followed by n rows of n
whitespace-separated numbers (integers, decimals or p/q). Lines starting with
'#' are comments. JSON: {"n": n, "entries": [[...], ...]} with entries given
as strings or numbers. Decimals are read as exact base-10 rationals.
"""
import json
import re
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Tuple

from ..matcore import RationalMatrix
from ..utils.errors import MatrixParseError

_TOKEN = re.compile(r"\S+")


def _scalar(token: str, line: int, column: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise MatrixParseError(f"invalid number {token!r}", line, column)


def _parse_text(text: str) -> RationalMatrix:
    lines = [
        (lineno, line)
        for lineno, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise MatrixParseError("no matrix found", 1, 1)
    header_line, header = lines[0]
    header_column = len(header) - len(header.lstrip()) + 1
    try:
        n = int(header.strip())
    except ValueError:
        raise MatrixParseError(f"expected the order n, got {header.strip()!r}", header_line, header_column)
    if n < 1:
        raise MatrixParseError(f"order must be positive, got {n}", header_line, header_column)

    body = lines[1:]
    if len(body) != n:
        where = body[n][0] if len(body) > n else (body[-1][0] + 1 if body else header_line + 1)
        raise MatrixParseError(f"expected {n} rows, found {len(body)}", where, 1)

    rows = []
    for lineno, line in body:
        tokens = list(_TOKEN.finditer(line))
        if len(tokens) != n:
            column = tokens[n].start() + 1 if len(tokens) > n else len(line) + 1
            raise MatrixParseError(f"expected {n} entries, found {len(tokens)}", lineno, column)
        rows.append(tuple(_scalar(t.group(), lineno, t.start() + 1) for t in tokens))
    return RationalMatrix(tuple(rows))


def _line_column(text: str, offset: int) -> Tuple[int, int]:
    line_start = text.rfind("\n", 0, offset) + 1
    return text.count("\n", 0, offset) + 1, offset - line_start + 1


def _locate_entry(text: str, row: int, col: Optional[int] = None) -> Tuple[int, int]:
    """Position of entries[row], or entries[row][col], in the JSON source.

    Walks the array after the "entries" key counting value starts at depth 1
    (rows) and depth 2 (entries). (0, 0) when nothing matches.
    """
    key = text.find('"entries"')
    start = text.find("[", key) if key >= 0 else -1
    if start < 0:
        return 0, 0
    depth, r, c = 0, -1, -1
    expect_value = in_string = escaped = False
    for offset in range(start, len(text)):
        ch = text[offset]
        if in_string:
            if escaped:
                escaped = False
            elif ch == "\\":
                escaped = True
            elif ch == '"':
                in_string = False
            continue
        if expect_value and not ch.isspace() and ch not in "]}":
            expect_value = False
            if depth == 1:
                r, c = r + 1, -1
                if r == row and col is None:
                    return _line_column(text, offset)
            elif depth == 2 and r == row:
                c += 1
                if c == col:
                    return _line_column(text, offset)
        if ch == '"':
            in_string = True
        elif ch in "[{":
            depth += 1
            expect_value = ch == "[" and depth <= 2
        elif ch in "]}":
            depth -= 1
            if depth == 0:
                break
        elif ch == "," and depth <= 2:
            expect_value = True
    return 0, 0


def _json_scalar(value: Any, row: int, col: int, text: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, str):
        raise MatrixParseError(
            f"entries[{row}][{col}]: expected a number, got {value!r}", *_locate_entry(text, row, col)
        )
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise MatrixParseError(
            f"entries[{row}][{col}]: invalid number {value!r}", *_locate_entry(text, row, col)
        )


def _parse_json(text: str) -> RationalMatrix:
    try:
        # numbers arrive as their source text so decimals stay exact
        data = json.loads(text, parse_float=str, parse_int=str)
    except json.JSONDecodeError as e:
        raise MatrixParseError(e.msg, e.lineno, e.colno)
    if not isinstance(data, dict) or "n" not in data or "entries" not in data:
        raise MatrixParseError('JSON matrix needs the keys "n" and "entries"', 1, 1)
    try:
        n = int(data["n"])
    except (TypeError, ValueError):
        raise MatrixParseError(f'"n" must be an integer, got {data["n"]!r}', 1, 1)
    entries = data["entries"]
    if n < 1 or not isinstance(entries, list) or len(entries) != n:
        raise MatrixParseError(f'"entries" must hold {n} rows', 1, 1)
    rows = []
    for r, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != n:
            raise MatrixParseError(f"entries[{r}] must hold {n} entries", *_locate_entry(text, r))
        rows.append(tuple(_json_scalar(v, r, c, text) for c, v in enumerate(row)))
    return RationalMatrix(tuple(rows))


def parse_matrix(text: str) -> RationalMatrix:
    stripped = text.strip()
    if not stripped:
        raise MatrixParseError("empty matrix file", 1, 1)
    if stripped.startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def load_matrix(path: str) -> RationalMatrix:
    """Read a matrix file; '-' reads standard input"""
    if path == "-":
        return parse_matrix(sys.stdin.read())
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        line = raw.count(b"\n", 0, e.start) + 1
        column = e.start - (raw.rfind(b"\n", 0, e.start) + 1) + 1
        raise MatrixParseError("file is not valid UTF-8", line, column)
    return parse_matrix(text)


def serialize_matrix(a: RationalMatrix, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps({"n": a.n, "entries": a.to_strings()})
    lines = [str(a.n)] + [" ".join(row) for row in a.to_strings()]
    return "\n".join(lines) + "\n"


def format_decimal(x: Fraction, digits: int) -> str:
    """Exact half-even rounding of x to `digits` decimal places"""
    rounded = round(x, digits)
    with localcontext() as ctx:
        ctx.prec = len(str(abs(rounded.numerator))) + digits + 2
        value = Decimal(rounded.numerator) / Decimal(rounded.denominator)
        return str(value.quantize(Decimal(1).scaleb(-digits)))
