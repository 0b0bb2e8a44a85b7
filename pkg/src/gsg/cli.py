"""Command-line interface: every toolkit operation over .gsg files.

Exit codes: 0 when the command succeeds and any checked property holds,
1 when a checked property fails (not associative, not related, failed
certificate), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .census import (
    BoundsError,
    CensusBounds,
    DEFAULT_BOUNDS,
    enumerate_semigroups,
)
from .core import (
    EXAMPLE_ELEMENT_NAMES,
    EXAMPLE_OP_NAMES,
    GammaSemigroup,
    TableError,
    associativity_violations,
    equations_to_check,
    example_order3,
    validate,
)
from .fmt import GsgDocument, ParseError, parse_gsg, serialize_gsg
from .green import congruence_check, eggbox, partition, principal_ideal
from .maps import (
    LemmaCertificate,
    NotRelatedError,
    TheoremCertificate,
    Witness,
    find_witnesses,
    green_lemma,
    green_theorem,
)

BOUNDS_ENV = "GSG_ENUM_BOUNDS"


def _load(path: str) -> GsgDocument:
    return parse_gsg(Path(path).read_text(encoding="utf-8"))


def _require_semigroup(doc: GsgDocument) -> GammaSemigroup:
    result = validate(doc.groupoid)
    if isinstance(result, GammaSemigroup):
        return result
    raise NotAssociativeError(len(result))


class NotAssociativeError(Exception):
    def __init__(self, violations: int):
        super().__init__(f"input is not associative ({violations} violations)")


def _fmt_set(doc: GsgDocument, elems: tuple[int, ...]) -> str:
    return "{" + ", ".join(doc.element_label(x) for x in elems) + "}"


def _fmt_witness(doc: GsgDocument, w: Witness) -> str:
    elem = "1" if w.elem is None else doc.element_label(w.elem)
    return f"op={doc.op_label(w.op)} elem={elem}"


def _resolve(doc: GsgDocument, token: str) -> int:
    try:
        return doc.resolve_element(token)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


class UsageError(Exception):
    pass


def cmd_validate(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    violations = associativity_violations(doc.groupoid)
    total = equations_to_check(doc.groupoid)
    print(f"associativity: {total} equations checked, {len(violations)} violations")
    for v in violations:
        ga, mu = doc.op_label(v.first_op), doc.op_label(v.second_op)
        a, b, c = (doc.element_label(x) for x in (v.a, v.b, v.c))
        print(
            f"  ({a} {ga} {b}) {mu} {c} = {doc.element_label(v.lhs)}"
            f" but {a} {ga} ({b} {mu} {c}) = {doc.element_label(v.rhs)}"
        )
    return 1 if violations else 0


def cmd_green(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    sg = _require_semigroup(doc)
    rels = [args.rel] if args.rel else ["R", "L", "H"]
    for rel in rels:
        part = partition(sg, rel)
        print(f"{rel}-classes: {len(part.classes)}")
        for cls in part.classes:
            print(f"  {_fmt_set(doc, cls)}")
    return 0


def cmd_eggbox(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    sg = _require_semigroup(doc)
    box = eggbox(sg)
    print(f"egg-box: {len(box.blocks)} block(s)")
    for i, block in enumerate(box.blocks):
        rows, cols = len(block.r_classes), len(block.l_classes)
        print(f"block {i}: {rows} R-class(es) x {cols} L-class(es)")
        texts = [
            ["{" + ",".join(doc.element_label(x) for x in cell) + "}" if cell else "-"
             for cell in row]
            for row in block.cells
        ]
        width = max(len(t) for row in texts for t in row)
        for row in texts:
            print("  " + "  ".join(t.ljust(width) for t in row).rstrip())
    for warning in box.warnings:
        print(f"warning: {warning}")
    return 0


def cmd_ideals(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    sg = _require_semigroup(doc)
    a = _resolve(doc, args.elem)
    ideal = principal_ideal(sg, a, args.side)
    label = "R" if args.side == "right" else "L"
    print(f"{label}({doc.element_label(a)}) = {_fmt_set(doc, ideal)}")
    return 0


def _print_mapping(doc: GsgDocument, name: str, table) -> None:
    print(f"  {name}:")
    for src, img in table:
        print(f"    {doc.element_label(src)} -> {doc.element_label(img)}")


def _print_lemma(doc: GsgDocument, cert: LemmaCertificate) -> None:
    print(
        f"lemma certificate: a={doc.element_label(cert.a)} b={doc.element_label(cert.b)}"
    )
    print(f"  forward witness:  {_fmt_witness(doc, cert.forward)}")
    print(f"  backward witness: {_fmt_witness(doc, cert.backward)}")
    _print_mapping(doc, "sigma", cert.sigma)
    _print_mapping(doc, "sigma_prime", cert.sigma_prime)
    flags = (
        f"well_defined={'pass' if cert.well_defined else 'FAIL'}"
        f" mutually_inverse={'pass' if cert.mutually_inverse else 'FAIL'}"
        f" r_class_preserving={'pass' if cert.r_class_preserving else 'FAIL'}"
    )
    print(f"  checks: {flags}")


def cmd_lemma(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    sg = _require_semigroup(doc)
    a, b = _resolve(doc, args.a), _resolve(doc, args.b)
    if args.all_witnesses:
        forwards = find_witnesses(sg, a, b, "right")
        backwards = find_witnesses(sg, b, a, "right")
        if not forwards or not backwards:
            print(f"elements {args.a} and {args.b} are not R-related")
            return 1
        ok = True
        first = True
        for fw in forwards:
            for bw in backwards:
                if not first:
                    print()
                first = False
                cert = green_lemma(sg, a, b, chosen=(fw, bw))
                _print_lemma(doc, cert)
                ok = ok and cert.all_checks_pass
        return 0 if ok else 1
    cert = green_lemma(sg, a, b)
    _print_lemma(doc, cert)
    return 0 if cert.all_checks_pass else 1


def cmd_theorem(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    sg = _require_semigroup(doc)
    a, c = _resolve(doc, args.a), _resolve(doc, args.c)
    cert = green_theorem(sg, a, c)
    print(
        f"theorem certificate: a={doc.element_label(cert.a)}"
        f" c={doc.element_label(cert.c)} via b={doc.element_label(cert.b)}"
    )
    print(f"  right forward witness:  {_fmt_witness(doc, cert.right_forward)}")
    print(f"  right backward witness: {_fmt_witness(doc, cert.right_backward)}")
    print(f"  left forward witness:   {_fmt_witness(doc, cert.left_forward)}")
    print(f"  left backward witness:  {_fmt_witness(doc, cert.left_backward)}")
    _print_mapping(doc, "sigma", cert.sigma)
    _print_mapping(doc, "sigma_prime", cert.sigma_prime)
    flags = (
        f"well_defined_sigma={'pass' if cert.well_defined_sigma else 'FAIL'}"
        f" well_defined_sigma_prime={'pass' if cert.well_defined_sigma_prime else 'FAIL'}"
        f" mutually_inverse={'pass' if cert.mutually_inverse else 'FAIL'}"
    )
    print(f"  checks: {flags}")
    print(f"  |H(a)| = {len(cert.sigma)}, |H(c)| = {len(cert.sigma_prime)}")
    return 0 if cert.all_checks_pass else 1


def _bounds_from_env() -> CensusBounds:
    raw = os.environ.get(BOUNDS_ENV)
    if not raw:
        return DEFAULT_BOUNDS
    parts = raw.replace("x", ",").split(",")
    if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
        raise UsageError(
            f"cannot parse {BOUNDS_ENV}={raw!r}; expected 'MAX_N,MAX_K'"
        )
    return CensusBounds(max_n=int(parts[0]), max_k=int(parts[1]))


def cmd_enumerate(args: argparse.Namespace) -> int:
    bounds = _bounds_from_env()
    mode = "up_to_iso" if args.iso else "labeled"
    emit_dir = Path(args.emit) if args.emit else None
    result = enumerate_semigroups(
        args.n, args.k, mode=mode, emit=emit_dir is not None, jobs=args.jobs, bounds=bounds
    )
    print(f"n={result.n} k={result.k} mode={result.mode} count={result.count}")
    if emit_dir is not None:
        emit_dir.mkdir(parents=True, exist_ok=True)
        manifest = [f"n {result.n}", f"k {result.k}", f"mode {result.mode}", f"count {result.count}"]
        assert result.representatives is not None
        for i, sg in enumerate(result.representatives):
            name = f"{i:06d}.gsg"
            (emit_dir / name).write_text(serialize_gsg(sg), encoding="utf-8")
            manifest.append(f"file {name}")
        (emit_dir / "manifest.txt").write_text(
            "\n".join(manifest) + "\n", encoding="utf-8"
        )
        print(f"wrote {result.count} file(s) to {emit_dir}")
    return 0


def cmd_example(args: argparse.Namespace) -> int:
    sg = example_order3()
    sys.stdout.write(
        serialize_gsg(sg, element_names=EXAMPLE_ELEMENT_NAMES, op_names=EXAMPLE_OP_NAMES)
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gsg",
        description="Finite gamma-semigroup toolkit over .gsg table files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the associativity law, list violations")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("green", help="print Green relation partitions")
    p.add_argument("file")
    p.add_argument("--rel", choices=["R", "L", "H"], default=None)
    p.set_defaults(func=cmd_green)

    p = sub.add_parser("eggbox", help="print the egg-box grid, one block per stanza")
    p.add_argument("file")
    p.set_defaults(func=cmd_eggbox)

    p = sub.add_parser("ideals", help="print a principal one-sided ideal")
    p.add_argument("file")
    p.add_argument("--elem", required=True)
    p.add_argument("--side", choices=["right", "left"], required=True)
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("lemma", help="L-class translation certificate for an R-pair")
    p.add_argument("file")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--all-witnesses", action="store_true")
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("theorem", help="H-cell translation certificate for an R∘L-pair")
    p.add_argument("file")
    p.add_argument("--a", required=True)
    p.add_argument("--c", required=True)
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("enumerate", help="census of all families of a given size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--iso", action="store_true", help="count up to isomorphism")
    p.add_argument("--emit", metavar="DIR", help="write one .gsg per representative")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("example", help="print the built-in order-3 family")
    p.set_defaults(func=cmd_example)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotAssociativeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NotRelatedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (BoundsError, TableError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
