"""Translation maps between Green classes, returned as checkable certificates.

For an R-related pair, right translation by a witness carries one L-class onto
the other; for an R∘L-related pair, a two-sided translation carries one H-cell
onto the other.  Certificates materialize both mapping tables and record the
verification outcomes, so an independent script can re-check them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ExtElement, GammaSemigroup, Word, check_element, check_op, eval_word
from .green import _context


class NotRelatedError(ValueError):
    """The requested pair is not related under the required Green relation."""


class WitnessError(ValueError):
    """A supplied witness fails its defining equation."""


@dataclass(frozen=True)
class Witness:
    """One (operation, extended element) pair realizing a Green translation."""

    op: int
    elem: ExtElement  # None is the adjoined identity


MappingTable = tuple[tuple[int, int], ...]  # (source, image) pairs, sorted by source


def _apply_right(g: GammaSemigroup, x: int, w: Witness) -> int:
    value = eval_word(g, Word(elements=(x, w.elem), ops=(w.op,)))
    assert value is not None
    return value


def _apply_left(g: GammaSemigroup, x: int, w: Witness) -> int:
    value = eval_word(g, Word(elements=(w.elem, x), ops=(w.op,)))
    assert value is not None
    return value


def find_witnesses(g: GammaSemigroup, a: int, b: int, side: str) -> tuple[Witness, ...]:
    """All witnesses translating a to b on the given side.

    Right side: pairs (op, s) with ``a op s == b``; left side: ``s op a == b``.
    Identity witnesses are listed first (one per operation, exactly when
    a == b), then real witnesses in ascending (element, operation) order.
    Empty when no witness exists, i.e. when b is not reachable from a.
    """
    check_element(g, a)
    check_element(g, b)
    if side not in ("right", "left"):
        raise ValueError(f"unknown side {side!r}")
    out: list[Witness] = []
    if a == b:
        out.extend(Witness(op=op, elem=None) for op in range(g.k))
    tabs = g.tables
    for x in range(g.n):
        for op in range(g.k):
            value = tabs[op][a][x] if side == "right" else tabs[op][x][a]
            if value == b:
                out.append(Witness(op=op, elem=x))
    return tuple(out)


def _verify_witness(
    g: GammaSemigroup, src: int, dst: int, w: Witness, side: str, role: str
) -> None:
    check_op(g, w.op)
    if w.elem is not None:
        check_element(g, w.elem)
    got = _apply_right(g, src, w) if side == "right" else _apply_left(g, src, w)
    if got != dst:
        s = "1" if w.elem is None else str(w.elem)
        eq = f"{src} op{w.op} {s}" if side == "right" else f"{s} op{w.op} {src}"
        raise WitnessError(f"{role} witness fails: {eq} = {got}, expected {dst}")


@dataclass(frozen=True)
class LemmaCertificate:
    """Right-translation bijection between the L-classes of an R-related pair.

    ``sigma`` maps the L-class of ``a`` by x -> x op s; ``sigma_prime`` maps
    the L-class of ``b`` back by y -> y op' s'.  The three flags record the
    exhaustive verification: images land in the right class, the composites
    are identities, and every translate stays R-related to its source.
    """

    a: int
    b: int
    forward: Witness   # a op s == b
    backward: Witness  # b op' s' == a
    sigma: MappingTable
    sigma_prime: MappingTable
    well_defined: bool
    mutually_inverse: bool
    r_class_preserving: bool

    @property
    def all_checks_pass(self) -> bool:
        return self.well_defined and self.mutually_inverse and self.r_class_preserving


def green_lemma(
    g: GammaSemigroup,
    a: int,
    b: int,
    chosen: tuple[Witness, Witness] | None = None,
) -> LemmaCertificate:
    """Build and verify the L-class translation certificate for an R-related pair.

    Witnesses default to the first ones found; a supplied pair is checked
    against its defining equations first.  The pair a == b is accepted (the
    identity witnesses make the translation total over R-pairs).
    """
    check_element(g, a)
    check_element(g, b)
    ctx = _context(g)
    if not ctx.r_rel[a][b]:
        raise NotRelatedError(f"elements {a} and {b} are not R-related")
    if chosen is None:
        forward = find_witnesses(g, a, b, "right")[0]
        backward = find_witnesses(g, b, a, "right")[0]
    else:
        forward, backward = chosen
        _verify_witness(g, a, b, forward, "right", "forward")
        _verify_witness(g, b, a, backward, "right", "backward")

    class_a = ctx.l_partition.class_containing(a)
    class_b = ctx.l_partition.class_containing(b)
    sigma = tuple((x, _apply_right(g, x, forward)) for x in class_a)
    sigma_prime = tuple((y, _apply_right(g, y, backward)) for y in class_b)

    set_a, set_b = set(class_a), set(class_b)
    well_defined = all(img in set_b for _, img in sigma) and all(
        img in set_a for _, img in sigma_prime
    )
    sigma_map = dict(sigma)
    sigma_prime_map = dict(sigma_prime)
    mutually_inverse = (
        well_defined
        and all(sigma_prime_map[sigma_map[x]] == x for x in class_a)
        and all(sigma_map[sigma_prime_map[y]] == y for y in class_b)
    )
    r_class_preserving = all(ctx.r_rel[img][x] for x, img in sigma) and all(
        ctx.r_rel[img][y] for y, img in sigma_prime
    )
    return LemmaCertificate(
        a=a,
        b=b,
        forward=forward,
        backward=backward,
        sigma=sigma,
        sigma_prime=sigma_prime,
        well_defined=well_defined,
        mutually_inverse=mutually_inverse,
        r_class_preserving=r_class_preserving,
    )


@dataclass(frozen=True)
class TheoremCertificate:
    """Two-sided translation bijection between the H-cells of an R∘L-related pair.

    With b the intermediary (a R b, b L c) and witnesses for the four
    translation equations, ``sigma`` maps H(a) by x -> t op x op' s evaluated
    as a word, and ``sigma_prime`` maps H(c) back.  A passing certificate
    implies the two H-cells have equal size.
    """

    a: int
    c: int
    b: int
    right_forward: Witness   # a op s == b
    right_backward: Witness  # b op s' == a
    left_forward: Witness    # t op b == c
    left_backward: Witness   # t' op c == b
    sigma: MappingTable
    sigma_prime: MappingTable
    well_defined_sigma: bool
    well_defined_sigma_prime: bool
    mutually_inverse: bool

    @property
    def all_checks_pass(self) -> bool:
        return self.well_defined_sigma and self.well_defined_sigma_prime and self.mutually_inverse


def _h_cell(g: GammaSemigroup, x: int) -> tuple[int, ...]:
    ctx = _context(g)
    return ctx.h_partition.class_containing(x)


def green_theorem(
    g: GammaSemigroup,
    a: int,
    c: int,
    chosen: tuple[Witness, Witness, Witness, Witness] | None = None,
    intermediary: int | None = None,
) -> TheoremCertificate:
    """Build and verify the H-cell translation certificate for an R∘L-related pair.

    The intermediary defaults to the least element b with a R b and b L c;
    witnesses default to the first ones found for each of the four equations.
    """
    check_element(g, a)
    check_element(g, c)
    ctx = _context(g)
    if intermediary is None:
        b = None
        for m in range(g.n):
            if ctx.r_rel[a][m] and ctx.l_rel[m][c]:
                b = m
                break
        if b is None:
            raise NotRelatedError(
                f"elements {a} and {c} are not R∘L-related: "
                f"no intermediary b with ({a},b) in R and (b,{c}) in L"
            )
    else:
        b = intermediary
        check_element(g, b)
        if not (ctx.r_rel[a][b] and ctx.l_rel[b][c]):
            raise WitnessError(
                f"intermediary {b} invalid: needs ({a},{b}) in R and ({b},{c}) in L"
            )

    if chosen is None:
        right_forward = find_witnesses(g, a, b, "right")[0]
        right_backward = find_witnesses(g, b, a, "right")[0]
        left_forward = find_witnesses(g, b, c, "left")[0]
        left_backward = find_witnesses(g, c, b, "left")[0]
    else:
        right_forward, right_backward, left_forward, left_backward = chosen
        _verify_witness(g, a, b, right_forward, "right", "right forward")
        _verify_witness(g, b, a, right_backward, "right", "right backward")
        _verify_witness(g, b, c, left_forward, "left", "left forward")
        _verify_witness(g, c, b, left_backward, "left", "left backward")

    h_a = _h_cell(g, a)
    h_c = _h_cell(g, c)

    def two_sided(x: int, left: Witness, right: Witness) -> int:
        value = eval_word(
            g,
            Word(elements=(left.elem, x, right.elem), ops=(left.op, right.op)),
        )
        assert value is not None
        return value

    sigma = tuple((x, two_sided(x, left_forward, right_forward)) for x in h_a)
    sigma_prime = tuple((y, two_sided(y, left_backward, right_backward)) for y in h_c)

    set_a, set_c = set(h_a), set(h_c)
    well_defined_sigma = all(img in set_c for _, img in sigma)
    well_defined_sigma_prime = all(img in set_a for _, img in sigma_prime)
    sigma_map = dict(sigma)
    sigma_prime_map = dict(sigma_prime)
    mutually_inverse = (
        well_defined_sigma
        and well_defined_sigma_prime
        and all(sigma_prime_map[sigma_map[x]] == x for x in h_a)
        and all(sigma_map[sigma_prime_map[y]] == y for y in h_c)
    )
    return TheoremCertificate(
        a=a,
        c=c,
        b=b,
        right_forward=right_forward,
        right_backward=right_backward,
        left_forward=left_forward,
        left_backward=left_backward,
        sigma=sigma,
        sigma_prime=sigma_prime,
        well_defined_sigma=well_defined_sigma,
        well_defined_sigma_prime=well_defined_sigma_prime,
        mutually_inverse=mutually_inverse,
    )
