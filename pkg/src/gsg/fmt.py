"""Plain-text .gsg files: a header line, optional display names, then k tables.

Grammar (blank lines separate the parts)::

    n k
    elements NAME...   (optional, n unique non-numeric tokens)
    ops NAME...        (optional, k unique non-numeric tokens)

    OPNAME             (label, present when op names are declared)
    row of n tokens    (x n rows; tokens are element names or indices)
    ...                (k tables)

Without declarations the serializer emits the compact all-index form, so the
trivial one-element family is the two-line document ``1 1`` / ``0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import GammaGroupoid, GammaSemigroup, build_tables

_TOKEN = re.compile(r"\S+")


class ParseError(ValueError):
    """Malformed .gsg text; carries the 1-based line (and column) position."""

    def __init__(self, message: str, line: int, column: int | None = None):
        at = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{message} ({at})")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class GsgDocument:
    """A parsed groupoid plus the display names used in its source text."""

    groupoid: GammaGroupoid
    element_names: tuple[str, ...] | None
    op_names: tuple[str, ...] | None

    def element_label(self, x: int) -> str:
        return self.element_names[x] if self.element_names else str(x)

    def op_label(self, op: int) -> str:
        return self.op_names[op] if self.op_names else f"op{op}"

    def resolve_element(self, token: str) -> int:
        """Element index for a display name or numeric index token."""
        if self.element_names and token in self.element_names:
            return self.element_names.index(token)
        if token.isdigit() and int(token) < self.groupoid.n:
            return int(token)
        raise ValueError(f"unknown element {token!r}")


def _tokens(line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def _check_names(kind: str, names: list[tuple[str, int]], lineno: int) -> tuple[str, ...]:
    seen: dict[str, int] = {}
    for name, col in names:
        if name.isdigit():
            raise ParseError(f"{kind} name {name!r} must not be numeric", lineno, col)
        if name in seen:
            raise ParseError(f"duplicate {kind} name {name!r}", lineno, col)
        seen[name] = col
    return tuple(name for name, _ in names)


def parse_gsg(text: str) -> GsgDocument:
    """Parse .gsg text into a groupoid plus its display names.

    Every rejection names the 1-based line (and column where it applies).
    """
    lines = text.splitlines()
    pending = [
        (i + 1, _tokens(line)) for i, line in enumerate(lines) if line.strip()
    ]
    pos = 0

    def next_line() -> tuple[int, list[tuple[str, int]]]:
        nonlocal pos
        if pos >= len(pending):
            last = pending[-1][0] if pending else 1
            raise ParseError("unexpected end of document", last)
        item = pending[pos]
        pos += 1
        return item

    lineno, header = next_line() if pending else (1, [])
    if not pending:
        raise ParseError("empty document, expected header 'n k'", 1)
    if len(header) != 2 or not all(tok.isdigit() for tok, _ in header):
        raise ParseError("malformed header, expected 'n k'", lineno)
    n, k = int(header[0][0]), int(header[1][0])
    if n < 1 or k < 1:
        raise ParseError(f"need n >= 1 and k >= 1, got n={n} k={k}", lineno)

    element_names: tuple[str, ...] | None = None
    op_names: tuple[str, ...] | None = None
    while pos < len(pending) and pending[pos][1][0][0] in ("elements", "ops"):
        lineno, toks = next_line()
        keyword = toks[0][0]
        names = toks[1:]
        if keyword == "elements":
            if element_names is not None:
                raise ParseError("repeated 'elements' declaration", lineno)
            if len(names) != n:
                raise ParseError(
                    f"expected {n} element names, got {len(names)}", lineno
                )
            element_names = _check_names("element", names, lineno)
        else:
            if op_names is not None:
                raise ParseError("repeated 'ops' declaration", lineno)
            if len(names) != k:
                raise ParseError(f"expected {k} operation names, got {len(names)}", lineno)
            op_names = _check_names("operation", names, lineno)

    name_index = (
        {name: i for i, name in enumerate(element_names)} if element_names else {}
    )

    def resolve(token: str, lineno: int, col: int) -> int:
        if token in name_index:
            return name_index[token]
        if token.isdigit():
            v = int(token)
            if v >= n:
                raise ParseError(f"entry {v} out of range [0, {n})", lineno, col)
            return v
        raise ParseError(f"unknown token {token!r}", lineno, col)

    def is_element_token(token: str) -> bool:
        return token in name_index or (token.isdigit() and int(token) < n)

    entries: list[int] = []
    for t in range(k):
        lineno, toks = next_line()
        if op_names is not None:
            # labeled form: a single-token label line naming table t
            if len(toks) != 1 or toks[0][0] != op_names[t]:
                raise ParseError(
                    f"expected table label {op_names[t]!r}", lineno, toks[0][1]
                )
            lineno, toks = next_line()
        elif len(toks) == 1 and not is_element_token(toks[0][0]):
            # unlabeled form still tolerates ad-hoc labels
            lineno, toks = next_line()
        for r in range(n):
            if r > 0:
                lineno, toks = next_line()
            if len(toks) != n:
                raise ParseError(
                    f"expected {n} entries in table row, got {len(toks)}", lineno
                )
            entries.extend(resolve(tok, lineno, col) for tok, col in toks)
    if pos < len(pending):
        lineno, toks = next_line()
        raise ParseError("unexpected content after last table", lineno, toks[0][1])

    return GsgDocument(
        groupoid=build_tables(n, k, entries),
        element_names=element_names,
        op_names=op_names,
    )


def serialize_gsg(
    g: GammaGroupoid | GammaSemigroup,
    element_names: tuple[str, ...] | None = None,
    op_names: tuple[str, ...] | None = None,
) -> str:
    """Canonical .gsg text; round-trips through parse_gsg at the index level."""
    base = g.base if isinstance(g, GammaSemigroup) else g
    if element_names is not None:
        if len(element_names) != base.n:
            raise ValueError(
                f"expected {base.n} element names, got {len(element_names)}"
            )
        if len(set(element_names)) != base.n:
            raise ValueError("duplicate element names")
    if op_names is not None:
        if len(op_names) != base.k:
            raise ValueError(f"expected {base.k} operation names, got {len(op_names)}")
        if len(set(op_names)) != base.k:
            raise ValueError("duplicate operation names")

    def tok(x: int) -> str:
        return element_names[x] if element_names else str(x)

    lines = [f"{base.n} {base.k}"]
    if element_names:
        lines.append("elements " + " ".join(element_names))
    if op_names:
        lines.append("ops " + " ".join(op_names))
    declared = element_names is not None or op_names is not None
    for t, table in enumerate(base.tables):
        if declared or t > 0:
            lines.append("")
        if op_names:
            lines.append(op_names[t])
        lines.extend(" ".join(tok(v) for v in row) for row in table)
    return "\n".join(lines) + "\n"
