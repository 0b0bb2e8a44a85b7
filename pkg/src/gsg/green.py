"""Green's relations R, L, H and R∘L, principal one-sided ideals, and egg-boxes.

R relates two elements when each is a right translate of the other (witnesses
taken over the carrier extended by the adjoined identity); L is the left-sided
dual; H is their meet.  Equivalently, R holds exactly when the principal right
ideals coincide; both routes are implemented so they can cross-check each
other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .core import GammaSemigroup, check_element

Side = Literal["right", "left"]
Relation = Literal["R", "L", "H", "RoL"]

ElementSet = tuple[int, ...]  # strictly increasing element indices


@dataclass(frozen=True)
class Partition:
    """Equivalence classes over [0, n); classes are ordered by least element."""

    class_of: tuple[int, ...]
    classes: tuple[ElementSet, ...]

    def __post_init__(self) -> None:
        n = len(self.class_of)
        seen = [False] * n
        for i, cls in enumerate(self.classes):
            if not cls:
                raise ValueError("empty class")
            for x in cls:
                if seen[x]:
                    raise ValueError(f"element {x} appears in two classes")
                seen[x] = True
                if self.class_of[x] != i:
                    raise ValueError(f"class_of[{x}] inconsistent with classes")
        if not all(seen):
            raise ValueError("classes do not cover the carrier")

    def class_containing(self, a: int) -> ElementSet:
        return self.classes[self.class_of[a]]


@dataclass(frozen=True)
class CongruenceReport:
    """Outcome of checking one relation for the congruence property."""

    relation: str  # "R" (left congruence) or "L" (right congruence)
    holds: bool
    violations: tuple[tuple[int, int, int, int], ...]  # (a, b, c, op)


@dataclass(frozen=True)
class EggBoxBlock:
    """One connected component of R ∪ L, presented as an R-class x L-class grid."""

    r_classes: tuple[ElementSet, ...]
    l_classes: tuple[ElementSet, ...]
    cells: tuple[tuple[ElementSet, ...], ...]  # cells[i][j] = r_classes[i] ∩ l_classes[j]


@dataclass(frozen=True)
class EggBox:
    blocks: tuple[EggBoxBlock, ...]
    warnings: tuple[str, ...]


def principal_ideal(g: GammaSemigroup, a: int, side: Side) -> ElementSet:
    """The principal right ideal {a} ∪ aΓG, or its left dual {a} ∪ GΓa."""
    check_element(g, a)
    reach = _context(g).right_reach if side == "right" else _context(g).left_reach
    return tuple(sorted(reach[a]))


@dataclass(frozen=True)
class _GreenContext:
    """Per-instance caches shared by the relation machinery."""

    right_reach: tuple[frozenset[int], ...]
    left_reach: tuple[frozenset[int], ...]
    r_rel: tuple[tuple[bool, ...], ...]
    l_rel: tuple[tuple[bool, ...], ...]
    r_partition: Partition
    l_partition: Partition
    h_partition: Partition


def _partition_from_components(n: int, rel: tuple[tuple[bool, ...], ...]) -> Partition:
    # classes = connected components of the relation graph, ordered by least element
    class_of = [-1] * n
    classes: list[ElementSet] = []
    for start in range(n):
        if class_of[start] >= 0:
            continue
        cid = len(classes)
        stack = [start]
        class_of[start] = cid
        members = [start]
        while stack:
            x = stack.pop()
            row = rel[x]
            for y in range(n):
                if row[y] and class_of[y] < 0:
                    class_of[y] = cid
                    members.append(y)
                    stack.append(y)
        classes.append(tuple(sorted(members)))
    return Partition(class_of=tuple(class_of), classes=tuple(classes))


@lru_cache(maxsize=65536)
def _context(g: GammaSemigroup) -> _GreenContext:
    n = g.n
    tabs = g.tables
    rng = range(n)
    right_reach = tuple(
        frozenset({a}) | {t[a][x] for t in tabs for x in rng} for a in rng
    )
    left_reach = tuple(
        frozenset({a}) | {t[x][a] for t in tabs for x in rng} for a in rng
    )
    # witness form over the extended carrier: mutual one-step reachability
    r_rel = tuple(
        tuple(b in right_reach[a] and a in right_reach[b] for b in rng) for a in rng
    )
    l_rel = tuple(
        tuple(b in left_reach[a] and a in left_reach[b] for b in rng) for a in rng
    )
    h_rel = tuple(
        tuple(r_rel[a][b] and l_rel[a][b] for b in rng) for a in rng
    )
    return _GreenContext(
        right_reach=right_reach,
        left_reach=left_reach,
        r_rel=r_rel,
        l_rel=l_rel,
        r_partition=_partition_from_components(n, r_rel),
        l_partition=_partition_from_components(n, l_rel),
        h_partition=_partition_from_components(n, h_rel),
    )


def related(g: GammaSemigroup, a: int, b: int, rel: Relation) -> bool:
    """Decide aRb / aLb / aHb / a(R∘L)b via witness search."""
    check_element(g, a)
    check_element(g, b)
    ctx = _context(g)
    if rel == "R":
        return ctx.r_rel[a][b]
    if rel == "L":
        return ctx.l_rel[a][b]
    if rel == "H":
        return ctx.r_rel[a][b] and ctx.l_rel[a][b]
    if rel == "RoL":
        return rol_intermediary(g, a, b) is not None
    raise ValueError(f"unknown relation {rel!r}")


def rol_intermediary(g: GammaSemigroup, a: int, c: int) -> int | None:
    """Least m with (a,m) in R and (m,c) in L, or None if a(R∘L)c fails."""
    check_element(g, a)
    check_element(g, c)
    ctx = _context(g)
    row = ctx.r_rel[a]
    for m in range(g.n):
        if row[m] and ctx.l_rel[m][c]:
            return m
    return None


def partition(g: GammaSemigroup, rel: Literal["R", "L", "H"]) -> Partition:
    """The partition induced by the relation."""
    ctx = _context(g)
    if rel == "R":
        return ctx.r_partition
    if rel == "L":
        return ctx.l_partition
    if rel == "H":
        return ctx.h_partition
    raise ValueError(f"unknown relation {rel!r}")


def congruence_check(g: GammaSemigroup) -> tuple[CongruenceReport, CongruenceReport]:
    """Verify that R is a left congruence and L a right congruence.

    Both must hold on any valid instance; the check exists to machine-verify
    that and to reject corrupted inputs.
    """
    n = g.n
    tabs = g.tables
    ctx = _context(g)
    r_viol: list[tuple[int, int, int, int]] = []
    l_viol: list[tuple[int, int, int, int]] = []
    for a in range(n):
        for b in range(n):
            if ctx.r_rel[a][b]:
                for c in range(n):
                    for op, t in enumerate(tabs):
                        if not ctx.r_rel[t[c][a]][t[c][b]]:
                            r_viol.append((a, b, c, op))
            if ctx.l_rel[a][b]:
                for c in range(n):
                    for op, t in enumerate(tabs):
                        if not ctx.l_rel[t[a][c]][t[b][c]]:
                            l_viol.append((a, b, c, op))
    return (
        CongruenceReport("R", not r_viol, tuple(r_viol)),
        CongruenceReport("L", not l_viol, tuple(l_viol)),
    )


def rol_symmetric(g: GammaSemigroup) -> bool:
    """Whether R∘L equals L∘R on this instance (checked, never assumed)."""
    for a in range(g.n):
        for c in range(a + 1, g.n):
            if (rol_intermediary(g, a, c) is None) != (rol_intermediary(g, c, a) is None):
                return False
    return True


def eggbox(g: GammaSemigroup) -> EggBox:
    """Egg-box presentation: blocks are connected components of R ∪ L.

    Within a block, rows are R-classes, columns are L-classes, and cell (i, j)
    is their intersection (possibly empty).  If R∘L fails to be symmetric the
    box is still well formed and a warning is attached.
    """
    n = g.n
    ctx = _context(g)
    union_rel = tuple(
        tuple(ctx.r_rel[a][b] or ctx.l_rel[a][b] for b in range(n)) for a in range(n)
    )
    block_partition = _partition_from_components(n, union_rel)
    blocks: list[EggBoxBlock] = []
    for block in block_partition.classes:
        in_block = set(block)
        r_ids = sorted({ctx.r_partition.class_of[x] for x in block})
        l_ids = sorted({ctx.l_partition.class_of[x] for x in block})
        r_classes = tuple(ctx.r_partition.classes[i] for i in r_ids)
        l_classes = tuple(ctx.l_partition.classes[j] for j in l_ids)
        # R- and L-classes never straddle blocks
        assert all(set(cls) <= in_block for cls in r_classes + l_classes)
        cells = tuple(
            tuple(tuple(sorted(set(rc) & set(lc))) for lc in l_classes)
            for rc in r_classes
        )
        blocks.append(EggBoxBlock(r_classes=r_classes, l_classes=l_classes, cells=cells))
    warnings: tuple[str, ...] = ()
    if not rol_symmetric(g):
        warnings = ("relation composition R∘L is not symmetric on this instance",)
    return EggBox(blocks=tuple(blocks), warnings=warnings)
