"""Cayley-table families: several binary operations sharing one finite carrier.

A family is a stack of ``k`` tables over the elements ``0..n-1``.  Each table
is total by construction, so closure and well-definedness hold structurally;
the certified variant additionally guarantees the mixed associativity law
``(a op1 b) op2 c == a op1 (b op2 c)`` for every element triple and every
ordered pair of operation symbols.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

# An element of the carrier extended by the adjoined identity: a table index,
# or None for the identity (absorbed on both sides by every operation).
ExtElement = int | None

Tables = tuple[tuple[tuple[int, ...], ...], ...]


class TableError(ValueError):
    """Raised when table data is malformed (bad shape or out-of-range entry)."""


@dataclass(frozen=True)
class GammaGroupoid:
    """A finite carrier with an indexed family of total binary operations.

    Associativity is not assumed; see :func:`validate`.
    """

    n: int
    k: int
    tables: Tables

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 1:
            raise TableError(f"need n >= 1 and k >= 1, got n={self.n} k={self.k}")
        if len(self.tables) != self.k:
            raise TableError(f"expected {self.k} tables, got {len(self.tables)}")
        for t, table in enumerate(self.tables):
            if len(table) != self.n or any(len(row) != self.n for row in table):
                raise TableError(f"table {t} is not {self.n}x{self.n}")
            for r, row in enumerate(table):
                for c, v in enumerate(row):
                    if not 0 <= v < self.n:
                        raise TableError(
                            f"entry {v} out of range [0, {self.n}) "
                            f"at table {t}, row {r}, column {c}"
                        )

    def apply(self, op: int, a: int, b: int) -> int:
        """Product ``a op b`` by table lookup."""
        return self.tables[op][a][b]


@dataclass(frozen=True)
class GammaSemigroup:
    """A groupoid whose full mixed associativity check passed.

    ``checked`` records how many equations were verified (``k**2 * n**3``);
    instances should be obtained through :func:`validate` or a constructor
    that guarantees associativity.
    """

    base: GammaGroupoid
    checked: int

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def k(self) -> int:
        return self.base.k

    @property
    def tables(self) -> Tables:
        return self.base.tables

    def apply(self, op: int, a: int, b: int) -> int:
        return self.base.tables[op][a][b]


@dataclass(frozen=True)
class AssociativityViolation:
    """One failed instance of ``(a op1 b) op2 c == a op1 (b op2 c)``."""

    first_op: int
    second_op: int
    a: int
    b: int
    c: int
    lhs: int
    rhs: int

    def key(self) -> tuple[int, int, int, int, int]:
        return (self.first_op, self.second_op, self.a, self.b, self.c)


@dataclass(frozen=True)
class Word:
    """Alternating sequence ``e0 op1 e1 op2 ... opM eM`` over the extended carrier.

    Elements may be the adjoined identity (None); operations are symbol
    indices.  Associativity makes the bracketing of real elements immaterial,
    so evaluation folds left to right, skipping identities.
    """

    elements: tuple[ExtElement, ...]
    ops: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.elements) == 0:
            raise ValueError("word must contain at least one element")
        if len(self.ops) != len(self.elements) - 1:
            raise ValueError(
                f"word with {len(self.elements)} elements needs "
                f"{len(self.elements) - 1} operations, got {len(self.ops)}"
            )


def check_element(g: GammaGroupoid | GammaSemigroup, x: int) -> None:
    """Reject element indices outside [0, n)."""
    if not 0 <= x < g.n:
        raise ValueError(f"element index {x} out of range [0, {g.n})")


def check_op(g: GammaGroupoid | GammaSemigroup, op: int) -> None:
    """Reject operation-symbol indices outside [0, k)."""
    if not 0 <= op < g.k:
        raise ValueError(f"operation index {op} out of range [0, {g.k})")


def build_tables(n: int, k: int, entries: Sequence[int]) -> GammaGroupoid:
    """Build a groupoid from ``k * n * n`` flat entries, table-major row-major.

    Rejects a wrong entry count, and out-of-range entries naming the first
    offending (table, row, column).
    """
    if n < 1 or k < 1:
        raise TableError(f"need n >= 1 and k >= 1, got n={n} k={k}")
    entries = list(entries)
    if len(entries) != k * n * n:
        raise TableError(f"expected {k * n * n} entries for n={n} k={k}, got {len(entries)}")
    for i, v in enumerate(entries):
        if not 0 <= v < n:
            t, rest = divmod(i, n * n)
            r, c = divmod(rest, n)
            raise TableError(
                f"entry {v} out of range [0, {n}) at table {t}, row {r}, column {c}"
            )
    tables = tuple(
        tuple(
            tuple(entries[t * n * n + r * n : t * n * n + r * n + n])
            for r in range(n)
        )
        for t in range(k)
    )
    return GammaGroupoid(n=n, k=k, tables=tables)


def from_single_op(table: Sequence[Sequence[int]]) -> GammaGroupoid:
    """Wrap one n x n table as a k=1 family (bridge to ordinary semigroups)."""
    n = len(table)
    flat = [v for row in table for v in row]
    if any(len(row) != n for row in table):
        raise TableError(f"table is not {n}x{n}")
    return build_tables(n, 1, flat)


def associativity_violations(g: GammaGroupoid) -> list[AssociativityViolation]:
    """Every failed mixed-associativity equation, ordered by (op1, op2, a, b, c)."""
    n = g.n
    tabs = g.tables
    out: list[AssociativityViolation] = []
    for gi, tg in enumerate(tabs):
        for mi, tm in enumerate(tabs):
            for a in range(n):
                tga = tg[a]
                for b in range(n):
                    left_row = tm[tga[b]]
                    tmb = tm[b]
                    for c in range(n):
                        lhs = left_row[c]
                        rhs = tga[tmb[c]]
                        if lhs != rhs:
                            out.append(
                                AssociativityViolation(gi, mi, a, b, c, lhs, rhs)
                            )
    return out


def equations_to_check(g: GammaGroupoid | GammaSemigroup) -> int:
    """Number of associativity equations for a full check: k^2 * n^3."""
    return g.k * g.k * g.n ** 3


def validate(g: GammaGroupoid) -> GammaSemigroup | list[AssociativityViolation]:
    """Certify a groupoid, or return the full violation list.

    Failure is a value: a non-empty list of violations, never an exception.
    """
    violations = associativity_violations(g)
    if violations:
        return violations
    return GammaSemigroup(base=g, checked=equations_to_check(g))


# Built-in order-3 family over two operations; both tables are cyclic-shift
# tables, and every mixed triple associates.
_EXAMPLE_ENTRIES = (
    0, 1, 2,
    1, 2, 0,
    2, 0, 1,

    1, 2, 0,
    2, 0, 1,
    0, 1, 2,
)

EXAMPLE_ELEMENT_NAMES = ("a", "b", "c")
EXAMPLE_OP_NAMES = ("gamma", "mu")


def example_order3() -> GammaSemigroup:
    """The built-in 3-element, 2-operation family, validated."""
    result = validate(build_tables(3, 2, _EXAMPLE_ENTRIES))
    assert isinstance(result, GammaSemigroup)
    return result


def eval_word(g: GammaSemigroup, w: Word) -> ExtElement:
    """Fold a word left to right; identity elements are absorbed.

    The result is the identity only when every element of the word is the
    identity.  End positions may be the identity freely; an interior identity
    is absorbed together with the operation to its left.
    """
    for e in w.elements:
        if e is not None:
            check_element(g, e)
    for op in w.ops:
        check_op(g, op)
    tabs = g.tables
    acc = w.elements[0]
    for op, e in zip(w.ops, w.elements[1:]):
        if e is None:
            continue
        if acc is None:
            acc = e
        else:
            acc = tabs[op][acc][e]
    return acc
