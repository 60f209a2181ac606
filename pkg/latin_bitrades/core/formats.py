"""
Formats Module

This module reads and writes the text formats of squares and bitrades:
the plain square format, the overlay grid ("s/s'" in trade cells) and the
bitrade JSON form.
"""

import json
from typing import List, Optional, Tuple

from latin_bitrades.core.partial_latin_square import EMPTY, Bitrade, Entry, PartialLatinSquare
from latin_bitrades.utils.errors import ParseError, PreconditionError

EMPTY_TOKEN = "."


def _content_lines(text: str) -> List[Tuple[int, str]]:
    """Return (line number, stripped line) for non-blank, non-comment lines."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def parse_square(text: str, source: str = "<string>") -> PartialLatinSquare:
    """
    Parse the square text format.

    Line 1 holds the order n; it is followed by n lines of n tokens, each a
    decimal symbol or "." for an empty cell.

    Args:
        text: File contents
        source: Name used in error locations

    Returns:
        The parsed partial Latin square

    Raises:
        ParseError: With the offending file and line on malformed input
    """
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty square file", location=source)

    number, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise ParseError(f"expected the order, got {header!r}", location=f"{source}:{number}")
    if n <= 0:
        raise ParseError(f"order must be positive, got {n}", location=f"{source}:{number}")
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} rows, found {len(lines) - 1}", location=source)

    grid = []
    for number, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError(f"expected {n} cells, found {len(tokens)}", location=f"{source}:{number}")
        row = []
        for token in tokens:
            if token == EMPTY_TOKEN:
                row.append(EMPTY)
                continue
            try:
                symbol = int(token)
            except ValueError:
                raise ParseError(f"bad cell {token!r}", location=f"{source}:{number}")
            if not 0 <= symbol < n:
                raise ParseError(f"symbol {symbol} outside 0..{n - 1}", location=f"{source}:{number}")
            row.append(symbol)
        grid.append(row)

    try:
        return PartialLatinSquare(grid)
    except PreconditionError as e:
        raise ParseError(e.message, location=source)


def format_square(p: PartialLatinSquare) -> str:
    """Render a square in the square text format."""
    lines = [str(p.order)]
    for row in p.grid:
        lines.append(" ".join(EMPTY_TOKEN if s == EMPTY else str(int(s)) for s in row))
    return "\n".join(lines) + "\n"


def format_overlay(square: PartialLatinSquare, bitrade: Bitrade) -> str:
    """
    Render a bitrade over its ambient square.

    Trade cells print "s/s'" (T symbol, slash, T' symbol); other cells print
    the square's symbol, or "." when empty.

    Args:
        square: Ambient square
        bitrade: Bitrade embedded in the square

    Returns:
        n lines of space-separated tokens, newline terminated
    """
    if square.order != bitrade.order:
        raise PreconditionError(f"order mismatch: {square.order} vs {bitrade.order}")

    trade = bitrade.t.symbol_lookup()
    mate = bitrade.t_mate.symbol_lookup()
    lines = []
    for r in range(square.order):
        tokens = []
        for c in range(square.order):
            if (r, c) in trade:
                tokens.append(f"{trade[(r, c)]}/{mate.get((r, c), EMPTY_TOKEN)}")
            else:
                symbol = square.get(r, c)
                tokens.append(EMPTY_TOKEN if symbol is None else str(symbol))
        lines.append(" ".join(tokens))
    return "\n".join(lines) + "\n"


def parse_overlay(text: str, source: str = "<string>") -> Tuple[PartialLatinSquare, Bitrade]:
    """
    Parse an overlay grid back into its square and bitrade.

    Args:
        text: Overlay text, one row per line
        source: Name used in error locations

    Returns:
        (square, bitrade)

    Raises:
        ParseError: On malformed tokens or a ragged grid
    """
    lines = _content_lines(text)
    n = len(lines)
    grid, t_entries, mate_entries = [], [], []
    for r, (number, line) in enumerate(lines):
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError(f"expected {n} cells, found {len(tokens)}", location=f"{source}:{number}")
        row = []
        for c, token in enumerate(tokens):
            try:
                if "/" in token:
                    left, right = token.split("/", 1)
                    s, s_mate = int(left), int(right)
                    t_entries.append((r, c, s))
                    mate_entries.append((r, c, s_mate))
                    row.append(s)
                else:
                    row.append(EMPTY if token == EMPTY_TOKEN else int(token))
            except ValueError:
                raise ParseError(f"bad overlay cell {token!r}", location=f"{source}:{number}")
        grid.append(row)

    try:
        return PartialLatinSquare(grid), Bitrade.from_entries(n, t_entries, mate_entries)
    except PreconditionError as e:
        raise ParseError(e.message, location=source)


def first_overlay_difference(expected: str, actual: str) -> Optional[str]:
    """
    Locate the first differing cell between two overlay texts.

    Returns:
        A description such as "row 2, column 5: expected '3/1', got '3'",
        or None when the grids agree token by token
    """
    expected_rows = [line.split() for line in expected.strip().splitlines()]
    actual_rows = [line.split() for line in actual.strip().splitlines()]
    for r in range(max(len(expected_rows), len(actual_rows))):
        left = expected_rows[r] if r < len(expected_rows) else []
        right = actual_rows[r] if r < len(actual_rows) else []
        for c in range(max(len(left), len(right))):
            want = left[c] if c < len(left) else "<missing>"
            got = right[c] if c < len(right) else "<missing>"
            if want != got:
                return f"row {r}, column {c}: expected {want!r}, got {got!r}"
    return None


def bitrade_to_json(bitrade: Bitrade) -> str:
    """Serialize a bitrade with lexicographically sorted entries."""
    payload = {
        "n": bitrade.order,
        "t": [list(e) for e in bitrade.t.sorted_entries()],
        "t_mate": [list(e) for e in bitrade.t_mate.sorted_entries()],
    }
    return json.dumps(payload)


def bitrade_from_json(text: str, source: str = "<string>") -> Bitrade:
    """
    Parse the bitrade JSON form {"n": .., "t": [[r,c,s],..], "t_mate": [..]}.

    Raises:
        ParseError: On invalid JSON, missing keys or malformed entries
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", location=f"{source}:{e.lineno}")

    try:
        n = int(payload["n"])
        t_entries = [Entry(*map(int, item)) for item in payload["t"]]
        mate_entries = [Entry(*map(int, item)) for item in payload["t_mate"]]
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed bitrade JSON: {e}", location=source)

    try:
        return Bitrade.from_entries(n, t_entries, mate_entries)
    except PreconditionError as e:
        raise ParseError(e.message, location=source)


def parse_entry(text: str) -> Entry:
    """Parse "r,c,s" (commas or spaces) into an Entry."""
    parts = text.replace(",", " ").split()
    if len(parts) != 3:
        raise ParseError(f"an entry needs three coordinates, got {text!r}")
    try:
        return Entry(*(int(p) for p in parts))
    except ValueError:
        raise ParseError(f"bad entry {text!r}")
