"""JSON documents read and written by the command line tool.

Every document is a JSON object with a top-level ``kind``.  Structural
problems (bad JSON, missing or mistyped fields) raise :class:`DocumentError`;
values that are well formed but mathematically invalid raise
:class:`DomainError`.  Both carry a ``source:path`` location.
"""

from __future__ import annotations

import json
import re
from typing import Any, Callable, TypeVar

from .classifier import ConfigProposal, LinkKind
from .composer import FlowDescriptor
from .franks import LinkingMatrix, SaddleData
from .groups import AbelianizationMap, GroupPresentation, PresentationError
from .knots import KnotType, parse_knot
from .laurent import LaurentPoly
from .symbolic import IncidenceMatrix, StructureMatrix

__all__ = [
    "KINDS",
    "DocumentError",
    "DomainError",
    "Document",
    "load_document",
    "parse_document",
    "saddle_to_dict",
    "flow_to_dict",
    "dump_flow",
]

KINDS = ("template", "saddle", "presentation", "proposal", "flow", "knot")

T_ = TypeVar("T_")


class DocumentError(ValueError):
    """The document cannot be parsed."""


class DomainError(ValueError):
    """The document parses but describes an invalid object."""


class Document:
    """A parsed document: its ``kind`` and the library object it describes."""

    def __init__(self, kind: str, value: Any, source: str, raw: dict):
        self.kind = kind
        self.value = value
        self.source = source
        self.raw = raw

    def __repr__(self) -> str:
        return f"Document({self.kind!r}, {self.value!r})"


class _Reader:
    def __init__(self, source: str):
        self.source = source

    def fail(self, path: str, msg: str) -> DocumentError:
        return DocumentError(f"{self.source}:{path}: {msg}")

    def field(self, obj: dict, key: str, path: str, types, default=...):
        if key not in obj:
            if default is ...:
                raise self.fail(path, f"missing required field '{key}'")
            return default
        value = obj[key]
        if types is int and isinstance(value, bool):
            raise self.fail(f"{path}.{key}", "expected an integer")
        if not isinstance(value, types):
            names = types.__name__ if isinstance(types, type) else "/".join(t.__name__ for t in types)
            raise self.fail(f"{path}.{key}", f"expected {names}, got {type(value).__name__}")
        return value

    def int_matrix(self, value: Any, path: str) -> list[list[int]]:
        if not isinstance(value, list) or not value:
            raise self.fail(path, "expected a nonempty list of rows")
        rows = []
        for i, row in enumerate(value):
            if not isinstance(row, list):
                raise self.fail(f"{path}[{i}]", "expected a list")
            for j, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool):
                    raise self.fail(f"{path}[{i}][{j}]", "expected an integer")
            rows.append(list(row))
        return rows

    def domain(self, path: str, build: Callable[[], T_]) -> T_:
        try:
            return build()
        except (ValueError, ArithmeticError) as exc:
            if isinstance(exc, (DocumentError, DomainError)):
                raise
            raise DomainError(f"{self.source}:{path}: {exc}") from None

    def text(self, path: str, build: Callable[[], T_]) -> T_:
        """Like :meth:`domain`, but failures are syntax errors in an embedded string."""
        try:
            return build()
        except ValueError as exc:
            raise self.fail(path, str(exc)) from None


def load_document(path: str) -> Document:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError(f"{path}: cannot read: {exc.strerror}") from None
    return parse_document(text, source=path)


def parse_document(text: str, source: str = "<input>") -> Document:
    r = _Reader(source)
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{source}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None
    if not isinstance(raw, dict):
        raise r.fail("$", "document must be a JSON object")
    kind = r.field(raw, "kind", "$", str)
    if kind not in KINDS:
        raise r.fail("$.kind", f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    value = _PARSERS[kind](r, raw, "$")
    return Document(kind, value, source, raw)


# --- per-kind parsers --------------------------------------------------------


def _template(r: _Reader, obj: dict, path: str) -> IncidenceMatrix:
    rows = r.int_matrix(r.field(obj, "incidence", path, list), f"{path}.incidence")
    alphabet = r.field(obj, "alphabet", path, str, None)
    return r.domain(f"{path}.incidence", lambda: IncidenceMatrix(rows, alphabet))


def _linking(r: _Reader, obj: dict, key: str, path: str, s: StructureMatrix) -> LinkingMatrix | None:
    spec = r.field(obj, key, path, (dict, type(None)), None)
    if spec is None:
        return None
    exps = r.int_matrix(r.field(spec, "exponents", f"{path}.{key}", list), f"{path}.{key}.exponents")
    return r.domain(f"{path}.{key}", lambda: LinkingMatrix.from_structure(s, exps))


def _poly(r: _Reader, obj: dict, key: str, path: str) -> LaurentPoly | None:
    text = r.field(obj, key, path, (str, type(None)), None)
    if text is None:
        return None
    return r.text(f"{path}.{key}", lambda: LaurentPoly.parse(text))


def _saddle(r: _Reader, obj: dict, path: str) -> SaddleData:
    label = r.field(obj, "label", path, str, "")
    rows = r.field(obj, "structure", path, (list, type(None)), None)
    if rows is None:
        det = r.field(obj, "det_structure", path, int)
        delta_a = _poly(r, obj, "delta_a", path)
        delta_r = _poly(r, obj, "delta_r", path)
        return r.domain(path, lambda: SaddleData.opaque(det, delta_a, delta_r, label))
    rows = r.int_matrix(rows, f"{path}.structure")
    s = r.domain(f"{path}.structure", lambda: StructureMatrix(rows))
    la = _linking(r, obj, "linking_a", path, s)
    lr = _linking(r, obj, "linking_r", path, s)
    saddle = r.domain(path, lambda: SaddleData.from_matrices(s, la, lr, label))
    # recorded determinants are optional, but must agree when present
    for key, derived in (("delta_a", saddle.delta_a), ("delta_r", saddle.delta_r)):
        given = _poly(r, obj, key, path)
        if given is not None and given != derived:
            raise DomainError(f"{r.source}:{path}.{key}: recorded {given} but the matrix gives {derived}")
    det = r.field(obj, "det_structure", path, int, None)
    if det is not None and det != saddle.det_structure:
        raise DomainError(f"{r.source}:{path}.det_structure: recorded {det} but det(I - S) = {saddle.det_structure}")
    return saddle


def _presentation(r: _Reader, obj: dict, path: str) -> tuple[GroupPresentation, AbelianizationMap | None]:
    text = r.field(obj, "presentation", path, str)
    pres = r.text(f"{path}.presentation", lambda: GroupPresentation.parse(text))
    ab = r.field(obj, "abelianization", path, (dict, type(None)), None)
    if ab is None:
        return pres, None
    exps = []
    for g in pres.generators:
        exps.append(r.field(ab, g, f"{path}.abelianization", int))
    extra = set(ab) - set(pres.generators)
    if extra:
        raise r.fail(f"{path}.abelianization", f"unknown generators {sorted(extra)}")
    phi = AbelianizationMap(tuple(exps))
    try:
        phi.check(pres)
    except PresentationError as exc:
        raise DomainError(f"{r.source}:{path}.abelianization: {exc}") from None
    return pres, phi


def _knot_field(r: _Reader, obj: dict, key: str, path: str, default=...) -> KnotType:
    text = r.field(obj, key, path, str, default)
    if not isinstance(text, str):
        return text
    return r.text(f"{path}.{key}", lambda: parse_knot(text))


_LINK_RE = re.compile(r"Other(?:\((.*)\))?")


def _proposal(r: _Reader, obj: dict, path: str) -> tuple[ConfigProposal, bool]:
    link_text = r.field(obj, "ar_link", path, str)
    if link_text == "Hopf":
        link, label = LinkKind.HOPF, ""
    elif link_text == "TrefoilMeridian":
        link, label = LinkKind.TREFOIL_MERIDIAN, ""
    elif (m := _LINK_RE.fullmatch(link_text)) is not None:
        link, label = LinkKind.OTHER, m.group(1) or ""
    else:
        raise r.fail(f"{path}.ar_link", f"expected Hopf, TrefoilMeridian or Other(label), got {link_text!r}")
    proposal = ConfigProposal(
        x_core=_knot_field(r, obj, "x_core", path),
        y_core=_knot_field(r, obj, "y_core", path),
        x_twist=r.field(obj, "x_twist", path, int),
        y_twist=r.field(obj, "y_twist", path, int),
        bands_linked=r.field(obj, "bands_linked", path, bool),
        ar_link=link,
        ar_label=label,
        concentric=r.field(obj, "concentric", path, bool, False),
    )
    return proposal, r.field(obj, "fixed_points", path, bool, False)


def _flow(r: _Reader, obj: dict, path: str) -> FlowDescriptor:
    saddles_raw = r.field(obj, "saddles", path, list)
    saddles = []
    for i, s in enumerate(saddles_raw):
        if not isinstance(s, dict):
            raise r.fail(f"{path}.saddles[{i}]", "expected an object")
        saddles.append(_saddle(r, s, f"{path}.saddles[{i}]"))
    attractor = _knot_field(r, obj, "attractor", path)
    repeller = _knot_field(r, obj, "repeller", path)
    fields = dict(
        repeller_is_meridian_of_attractor=r.field(obj, "repeller_is_meridian_of_attractor", path, bool),
        repeller_disk_condition=r.field(obj, "repeller_disk_condition", path, bool),
        lk_ar_abs=r.field(obj, "lk_ar_abs", path, int, None),
        attractor_count=r.field(obj, "attractor_count", path, int, 1),
        repeller_count=r.field(obj, "repeller_count", path, int, 1),
        mutual_meridians=r.field(obj, "mutual_meridians", path, bool, False),
    )
    return r.domain(path, lambda: FlowDescriptor(attractor, repeller, saddles=tuple(saddles), **fields))


def _knot(r: _Reader, obj: dict, path: str) -> KnotType:
    return _knot_field(r, obj, "knot", path)


_PARSERS = {
    "template": _template,
    "saddle": _saddle,
    "presentation": _presentation,
    "proposal": _proposal,
    "flow": _flow,
    "knot": _knot,
}


# --- emission ----------------------------------------------------------------


def _opt_poly(p: LaurentPoly | None) -> str | None:
    return None if p is None else str(p)


def saddle_to_dict(s: SaddleData) -> dict:
    return {
        "label": s.label,
        "structure": None if s.structure is None else [list(r) for r in s.structure.entries],
        "linking_a": None if s.linking_a is None else {"exponents": [list(r) for r in s.linking_a.exponents]},
        "linking_r": None if s.linking_r is None else {"exponents": [list(r) for r in s.linking_r.exponents]},
        "det_structure": s.det_structure,
        "delta_a": _opt_poly(s.delta_a),
        "delta_r": _opt_poly(s.delta_r),
    }


def flow_to_dict(f: FlowDescriptor) -> dict:
    return {
        "kind": "flow",
        "attractor": str(f.attractor),
        "repeller": str(f.repeller),
        "attractor_count": f.attractor_count,
        "repeller_count": f.repeller_count,
        "repeller_is_meridian_of_attractor": f.repeller_is_meridian_of_attractor,
        "repeller_disk_condition": f.repeller_disk_condition,
        "mutual_meridians": f.mutual_meridians,
        "lk_ar_abs": f.lk_ar_abs,
        "saddles": [saddle_to_dict(s) for s in f.saddles],
    }


def dump_flow(f: FlowDescriptor) -> str:
    return json.dumps(flow_to_dict(f), indent=2, ensure_ascii=False) + "\n"
