"""Exhaustive census of small table families, labeled and up to isomorphism.

The search fills table cells in a fixed order (operation-major, then
row-major) and prunes on every associativity equation as soon as all four of
its lookups are determined.  Isomorph rejection keeps exactly the solutions
that are their own canonical form, where the canonical form is the
lexicographically least relabeling under all element and operation-symbol
permutations.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Literal

from .core import GammaGroupoid, GammaSemigroup, build_tables, equations_to_check

Mode = Literal["labeled", "up_to_iso"]

CanonicalKey = bytes  # (n, k, flattened least relabeling)


class BoundsError(ValueError):
    """Requested census size exceeds the configured desk-scale bounds."""


@dataclass(frozen=True)
class CensusBounds:
    max_n: int = 4
    max_k: int = 2


DEFAULT_BOUNDS = CensusBounds()


@dataclass(frozen=True)
class IsoWitness:
    """Bijections (element-level phi, symbol-level psi) transporting every product."""

    phi: tuple[int, ...]
    psi: tuple[int, ...]


@dataclass(frozen=True)
class CensusResult:
    n: int
    k: int
    mode: Mode
    count: int
    representatives: tuple[GammaSemigroup, ...] | None


@lru_cache(maxsize=None)
def _perm_pairs(n: int, k: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]], ...]:
    """All (phi, phi_inv, psi, psi_inv) pairs, identity pair first."""
    out = []
    for phi in itertools.permutations(range(n)):
        phi_inv = [0] * n
        for i, p in enumerate(phi):
            phi_inv[p] = i
        for psi in itertools.permutations(range(k)):
            psi_inv = [0] * k
            for i, p in enumerate(psi):
                psi_inv[p] = i
            out.append((phi, tuple(phi_inv), psi, tuple(psi_inv)))
    return tuple(out)


def _flatten(g: GammaGroupoid) -> tuple[int, ...]:
    return tuple(v for table in g.tables for row in table for v in row)


def _relabel(
    flat: tuple[int, ...],
    n: int,
    phi: tuple[int, ...],
    phi_inv: tuple[int, ...],
    psi_inv: tuple[int, ...],
) -> tuple[int, ...]:
    # entry at (sym j, row x, col y) of the image comes from
    # (psi_inv[j], phi_inv[x], phi_inv[y]) of the source
    nn = n * n
    return tuple(
        phi[flat[psi_inv[j] * nn + phi_inv[x] * n + phi_inv[y]]]
        for j in range(len(psi_inv))
        for x in range(n)
        for y in range(n)
    )


def _tables_of(g: GammaGroupoid | GammaSemigroup) -> GammaGroupoid:
    return g.base if isinstance(g, GammaSemigroup) else g


def canonical_form(g: GammaGroupoid | GammaSemigroup) -> CanonicalKey:
    """Least relabeling of the flattened (n, k, tables) encoding.

    Equal keys characterize isomorphic families; the key of a canonical
    representative is the representative itself.
    """
    base = _tables_of(g)
    n, k = base.n, base.k
    if n > 255 or k > 255:
        raise BoundsError("canonical keys support n, k up to 255")
    flat = _flatten(base)
    best = flat
    for phi, phi_inv, psi, psi_inv in _perm_pairs(n, k):
        candidate = _relabel(flat, n, phi, phi_inv, psi_inv)
        if candidate < best:
            best = candidate
    return bytes((n, k)) + bytes(best)


def from_canonical_key(key: CanonicalKey) -> GammaGroupoid:
    """Rebuild the groupoid encoded by a canonical key."""
    n, k = key[0], key[1]
    return build_tables(n, k, list(key[2:]))


def isomorphic(
    g: GammaGroupoid | GammaSemigroup, h: GammaGroupoid | GammaSemigroup
) -> IsoWitness | None:
    """A witness relabeling g onto h exactly, or None."""
    gb, hb = _tables_of(g), _tables_of(h)
    if (gb.n, gb.k) != (hb.n, hb.k):
        return None
    flat_g, flat_h = _flatten(gb), _flatten(hb)
    for phi, phi_inv, psi, psi_inv in _perm_pairs(gb.n, gb.k):
        if _relabel(flat_g, gb.n, phi, phi_inv, psi_inv) == flat_h:
            return IsoWitness(phi=phi, psi=psi)
    return None


def _is_canonical(flat: tuple[int, ...], n: int, k: int) -> bool:
    # early-abort comparison against every nontrivial relabeling
    nn = n * n
    for phi, phi_inv, psi, psi_inv in _perm_pairs(n, k):
        pos = 0
        for j in range(k):
            base = psi_inv[j] * nn
            for x in range(n):
                row = base + phi_inv[x] * n
                for y in range(n):
                    v = phi[flat[row + phi_inv[y]]]
                    w = flat[pos]
                    if v != w:
                        if v < w:
                            return False
                        pos = -1  # this relabeling is larger; next one
                        break
                    pos += 1
                if pos < 0:
                    break
            if pos < 0:
                break
    return True


@lru_cache(maxsize=None)
def _triggers(
    n: int, k: int
) -> tuple[tuple[tuple[int, int, int, int], ...], ...]:
    """Per-cell constraint triggers for the backtracking search.

    Constraint (g, m, a, b, c) reads cells p1=(g,a,b) and p3=(m,b,c) plus two
    value-dependent cells; it is first examined when the later of p1, p3 is
    filled.  Entries are (p1, p3, m*n*n + c, g*n*n + a*n).
    """
    nn = n * n
    triggers: list[list[tuple[int, int, int, int]]] = [[] for _ in range(k * nn)]
    for g in range(k):
        for m in range(k):
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        p1 = g * nn + a * n + b
                        p3 = m * nn + b * n + c
                        triggers[max(p1, p3)].append(
                            (p1, p3, m * nn + c, g * nn + a * n)
                        )
    return tuple(tuple(t) for t in triggers)


def _solutions(n: int, k: int, prefix: tuple[int, ...] = ()) -> Iterator[tuple[int, ...]]:
    """All associative assignments extending the prefix, in cell-lex order."""
    total = k * n * n
    triggers = _triggers(n, k)
    cells = [-1] * total
    watch: list[list[tuple[int, int]]] = [[] for _ in range(total)]

    def fill(pos: int, v: int) -> list[int] | None:
        """Set cells[pos]=v and run all newly decidable checks.

        Returns the list of watch registrations (for undo), or None on a
        violated equation with the registrations already rolled back.
        """
        cells[pos] = v
        added: list[int] = []
        for p1, p3, m_base, g_base in triggers[pos]:
            q2 = m_base + cells[p1] * n
            q4 = g_base + cells[p3]
            if q2 <= pos and q4 <= pos:
                if cells[q2] != cells[q4]:
                    for d in added:
                        watch[d].pop()
                    return None
            else:
                d = q2 if q2 > q4 else q4
                watch[d].append((q2, q4))
                added.append(d)
        for q2, q4 in watch[pos]:
            if cells[q2] != cells[q4]:
                for d in added:
                    watch[d].pop()
                return None
        return added

    def undo(added: list[int]) -> None:
        for d in added:
            watch[d].pop()

    def dfs(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == total:
            yield tuple(cells)
            return
        for v in range(n):
            added = fill(pos, v)
            if added is not None:
                yield from dfs(pos + 1)
                undo(added)
        cells[pos] = -1

    applied: list[list[int]] = []
    ok = True
    for i, v in enumerate(prefix):
        added = fill(i, v)
        if added is None:
            ok = False
            break
        applied.append(added)
    if ok:
        yield from dfs(len(prefix))
    for added in reversed(applied):
        undo(added)


def _to_semigroup(n: int, k: int, flat: tuple[int, ...]) -> GammaSemigroup:
    base = build_tables(n, k, flat)
    # the search admits exactly the assignments with zero violations
    return GammaSemigroup(base=base, checked=equations_to_check(base))


def _branch_flats(n: int, k: int, mode: Mode, prefix: tuple[int, ...]) -> list[tuple[int, ...]]:
    if mode == "labeled":
        return list(_solutions(n, k, prefix))
    return [flat for flat in _solutions(n, k, prefix) if _is_canonical(flat, n, k)]


def _check_bounds(n: int, k: int, bounds: CensusBounds) -> None:
    if n < 1 or k < 1:
        raise BoundsError(f"need n >= 1 and k >= 1, got n={n} k={k}")
    if n > bounds.max_n or k > bounds.max_k:
        raise BoundsError(
            f"census size n={n} k={k} exceeds configured bounds "
            f"n <= {bounds.max_n}, k <= {bounds.max_k}"
        )


def iter_semigroups(
    n: int,
    k: int,
    mode: Mode = "labeled",
    jobs: int = 1,
    bounds: CensusBounds = DEFAULT_BOUNDS,
) -> Iterator[GammaSemigroup]:
    """Stream the census in deterministic order.

    Labeled mode yields every associative assignment; up_to_iso mode yields
    only canonical representatives.  The stream is identical for every degree
    of parallelism: with jobs > 1 the search tree is split on a fixed cell
    prefix and branch results are merged in canonical branch order.
    """
    _check_bounds(n, k, bounds)
    total = k * n * n
    if jobs <= 1 or total <= 2:
        for flat in _branch_flats(n, k, mode, ()):
            yield _to_semigroup(n, k, flat)
        return
    # split on enough leading cells to give each worker several branches
    depth = 1
    while n ** depth < 4 * jobs and depth < min(total, 6):
        depth += 1
    prefixes = list(itertools.product(range(n), repeat=depth))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for flats in pool.map(
            _branch_flats,
            itertools.repeat(n),
            itertools.repeat(k),
            itertools.repeat(mode),
            prefixes,
            chunksize=max(1, len(prefixes) // (4 * jobs)),
        ):
            for flat in flats:
                yield _to_semigroup(n, k, flat)


def enumerate_semigroups(
    n: int,
    k: int,
    mode: Mode = "labeled",
    emit: bool = False,
    jobs: int = 1,
    bounds: CensusBounds = DEFAULT_BOUNDS,
) -> CensusResult:
    """Run the census; optionally keep the representatives."""
    count = 0
    reps: list[GammaSemigroup] | None = [] if emit else None
    for sg in iter_semigroups(n, k, mode=mode, jobs=jobs, bounds=bounds):
        count += 1
        if reps is not None:
            reps.append(sg)
    return CensusResult(
        n=n,
        k=k,
        mode=mode,
        count=count,
        representatives=tuple(reps) if reps is not None else None,
    )
