"""Command line front end.

Exit status: 0 on success (including an UNREALIZABLE verdict), 1 when the
input is well formed but mathematically invalid, 2 when it cannot be parsed.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import __version__
from .classifier import Rejection, fixed_point_variant, invariants_of, validate
from .composer import FlowDescriptor, alexander_of_flow, compose_split, compose_sum, realize_any_knot
from .documents import Document, DocumentError, DomainError, dump_flow, load_document
from .franks import linking_attractor_repeller
from .groups import alexander_from_presentation
from .knots import alexander_of, parse_knot
from .laurent import LaurentPoly, equal_up_to_units
from .symbolic import LORENZ_ALPHABET, LORENZ_INCIDENCE, OrbitWord, count_closed_orbits, enumerate_orbits
from .template import linking_number

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE = 0, 1, 2


class UsageError(Exception):
    """Bad command line arguments or wrong document kind."""


def _load(path: str, *kinds: str) -> Document:
    doc = load_document(path)
    if kinds and doc.kind not in kinds:
        raise DocumentError(f"{path}:$.kind: expected {' or '.join(kinds)}, got {doc.kind!r}")
    return doc


def _orbit_word(text: str) -> OrbitWord:
    bad = set(text) - set(LORENZ_ALPHABET)
    if not text or bad:
        raise DomainError(f"orbit word {text!r} must be a nonempty word in x and y")
    return OrbitWord.of(text)


def cmd_orbits(args, out) -> int:
    a = _load(args.input, "template").value if args.input else LORENZ_INCIDENCE
    if args.max_period < 1:
        raise DomainError("--max-period must be at least 1")
    for n in range(1, args.max_period + 1):
        if args.count_only:
            print(f"{n}: {count_closed_orbits(a, n)}", file=out)
        else:
            for w in enumerate_orbits(a, n):
                print(w, file=out)
    return EXIT_OK


def cmd_link(args, out) -> int:
    w1, w2 = _orbit_word(args.w1), _orbit_word(args.w2)
    print(linking_number(w1, w2), file=out)
    return EXIT_OK


def _alexander_raw(doc: Document) -> LaurentPoly:
    if doc.kind == "saddle":
        saddle = doc.value
        delta = saddle.delta_a if saddle.delta_a is not None else saddle.delta_r
        if delta is None:
            raise DomainError(f"{doc.source}: saddle has no linking matrix")
        return delta
    if doc.kind == "presentation":
        pres, phi = doc.value
        return alexander_from_presentation(pres, phi)
    if doc.kind == "knot":
        return alexander_of(doc.value)
    if doc.kind == "flow":
        return alexander_of_flow(doc.value)
    raise DocumentError(f"{doc.source}:$.kind: no Alexander polynomial for a {doc.kind} document")


def cmd_alex(args, out) -> int:
    if (args.input is None) == (args.expr is None):
        raise UsageError("alex needs exactly one of --input FILE or a knot expression")
    if args.input is not None:
        delta = _alexander_raw(_load(args.input))
    else:
        try:
            knot = parse_knot(args.expr)
        except ValueError as exc:
            raise DocumentError(f"<argument>: {exc}") from None
        delta = alexander_of(knot)
    print(delta if args.raw else delta.normalize(), file=out)
    return EXIT_OK


def cmd_classify(args, out) -> int:
    proposal, fixed = _load(args.input, "proposal").value
    verdict = fixed_point_variant(proposal) if fixed else validate(proposal)
    if isinstance(verdict, Rejection):
        print(f"UNREALIZABLE {verdict}", file=out)
        return EXIT_OK
    print(f"REALIZABLE {verdict}", file=out)
    if not fixed:
        inv = invariants_of(verdict)
        print(f"ar_link: {inv.ar_link.value}", file=out)
        print(f"lk_abs: {inv.lk_abs}", file=out)
        print(f"delta_a: {inv.delta_a}", file=out)
        print(f"delta_r: {inv.delta_r}", file=out)
    return EXIT_OK


def _flows(args) -> list[FlowDescriptor]:
    paths = list(args.inputs) + list(args.input or [])
    if len(paths) != 2:
        raise UsageError(f"compose {args.sub} needs exactly two flow documents, got {len(paths)}")
    return [_load(p, "flow").value for p in paths]


def _check_alexander(sub: str, result: FlowDescriptor, parts: Sequence[FlowDescriptor]) -> bool:
    got = alexander_of_flow(result)
    if sub == "sum":
        expected = alexander_of_flow(parts[0]) * alexander_of_flow(parts[1])
    elif sub == "split":
        expected = alexander_of_flow(parts[0])
    else:
        expected = alexander_of(result.attractor)
    return equal_up_to_units(got, expected)


def cmd_compose(args, out) -> int:
    if args.sub == "realize":
        sources = list(args.inputs) + list(args.input or [])
        if len(sources) != 1:
            raise UsageError("compose realize needs exactly one knot expression or knot document")
        src = sources[0]
        if args.input:
            knot = _load(src, "knot").value
        else:
            try:
                knot = parse_knot(src)
            except ValueError as exc:
                raise DocumentError(f"<argument>: {exc}") from None
        parts: list[FlowDescriptor] = []
        result = realize_any_knot(knot)
    else:
        parts = _flows(args)
        result = (compose_sum if args.sub == "sum" else compose_split)(*parts)
    out.write(dump_flow(result))
    if args.check_alexander:
        ok = _check_alexander(args.sub, result, parts)
        print(f"alexander-check: {'PASS' if ok else 'FAIL'}", file=sys.stderr)
        return EXIT_OK if ok else EXIT_DOMAIN
    return EXIT_OK


def cmd_franks(args, out) -> int:
    doc = _load(args.input, "saddle", "flow")
    saddles = [doc.value] if doc.kind == "saddle" else list(doc.value.saddles)
    print(linking_attractor_repeller(saddles), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smaleflows",
        description="Knot invariants and realizability checks for nonsingular Smale flows on S^3.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbits", help="list periodic orbits of a template's subshift")
    p.add_argument("--input", help="template document (default: the Lorenz template)")
    p.add_argument("--max-period", type=int, required=True, metavar="N")
    p.add_argument("--count-only", action="store_true", help="print orbit counts per period")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("link", help="linking number of two orbits on the standard Lorenz template")
    p.add_argument("w1")
    p.add_argument("w2")
    p.set_defaults(func=cmd_link)

    p = sub.add_parser("alex", help="Alexander polynomial of a saddle, presentation, flow or knot")
    p.add_argument("expr", nargs="?", help="knot expression, e.g. 'torus(2,3) # torus(2,3)'")
    p.add_argument("--input", help="saddle, presentation, knot or flow document")
    p.add_argument("--raw", action="store_true", help="print without normalizing by units")
    p.set_defaults(func=cmd_alex)

    p = sub.add_parser("classify", help="decide realizability of a Lorenz-Smale configuration")
    p.add_argument("--input", required=True, help="proposal document")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("compose", help="build a flow by connected sum, split, or knot realization")
    p.add_argument("sub", choices=("sum", "split", "realize"))
    p.add_argument("inputs", nargs="*", help="flow documents (sum, split) or a knot expression (realize)")
    p.add_argument("--input", action="append", help="input document; may be repeated")
    p.add_argument("--check-alexander", action="store_true",
                   help="verify the Alexander product identity and report PASS/FAIL on stderr")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("franks", help="|lk(a, r)| from the saddle structure matrices")
    p.add_argument("--input", required=True, help="saddle or flow document")
    p.set_defaults(func=cmd_franks)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (DocumentError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, ValueError, ArithmeticError, NotImplementedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
