"""JSON documents for every value the command line reads or writes.

A document is {"kind": ..., "version": 1, "payload": ...} rendered with
sorted keys and a trailing newline, so identical values print to identical
bytes.  Rational positions travel as "num/den" strings.  A stream may hold
one document or an array of them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arcs import Arc, Crossing
from .errors import DocumentError
from .openbook import PartialOpenBook
from .plumbing import PretzelSpec, StarPlumbing, TwistedAnnulus
from .surface import Boundary, BoundaryPoint, End, Glued, PolygonPresentation

CURRENT_VERSION = 1
KINDS = ("surface", "arc", "pob", "star", "pretzel", "report")


@dataclass(frozen=True)
class Document:
    kind: str
    version: int
    payload: object

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DocumentError(f"unknown document kind {self.kind!r}")
        if self.version != CURRENT_VERSION:
            raise DocumentError(f"unsupported version {self.version!r}")


def _fraction_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _parse_fraction(s) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise DocumentError(f"bad rational {s!r}") from e


def surface_payload(p: PolygonPresentation) -> dict:
    sides = []
    for s in p.sides:
        if isinstance(s, Boundary):
            sides.append({"boundary": s.label})
        else:
            sides.append({"pair": s.pair, "end": s.end.value})
    return {"sides": sides}


def surface_from(payload) -> PolygonPresentation:
    try:
        sides = []
        for s in payload["sides"]:
            if "boundary" in s:
                sides.append(Boundary(s["boundary"]))
            else:
                sides.append(Glued(s["pair"], End(s["end"])))
        return PolygonPresentation(tuple(sides))
    except (KeyError, TypeError, ValueError) as e:
        raise DocumentError(f"bad surface payload: {e}") from e


def _point_payload(pt: BoundaryPoint) -> dict:
    return {"side": pt.side, "position": _fraction_str(pt.position)}


def _point_from(payload) -> BoundaryPoint:
    try:
        return BoundaryPoint(payload["side"], _parse_fraction(payload["position"]))
    except (KeyError, TypeError) as e:
        raise DocumentError(f"bad boundary point: {e}") from e


def arc_payload(a: Arc) -> dict:
    return {
        "start": _point_payload(a.start),
        "end": _point_payload(a.end),
        "crossings": [{"pair": c.pair, "direction": c.direction} for c in a.crossings],
    }


def arc_from(payload) -> Arc:
    try:
        word = tuple(
            Crossing(c["pair"], int(c["direction"])) for c in payload["crossings"]
        )
        return Arc(_point_from(payload["start"]), _point_from(payload["end"]), word)
    except (KeyError, TypeError, ValueError) as e:
        raise DocumentError(f"bad arc payload: {e}") from e


def star_payload(star: StarPlumbing) -> dict:
    return {"halftwists": [s.halftwists for s in star.summands]}


def star_from(payload) -> StarPlumbing:
    try:
        return StarPlumbing(
            tuple(TwistedAnnulus(int(t)) for t in payload["halftwists"])
        )
    except (KeyError, TypeError, ValueError) as e:
        raise DocumentError(f"bad star payload: {e}") from e


def pretzel_payload(spec: PretzelSpec) -> dict:
    return {"coefficients": list(spec.coefficients)}


def pretzel_from(payload) -> PretzelSpec:
    try:
        return PretzelSpec(tuple(int(c) for c in payload["coefficients"]))
    except (KeyError, TypeError, ValueError) as e:
        raise DocumentError(f"bad pretzel payload: {e}") from e


def pob_payload(pob: PartialOpenBook, star: Optional[StarPlumbing] = None) -> dict:
    out = {
        "surface": surface_payload(pob.surface),
        "basis": [arc_payload(a) for a in pob.basis],
        "images": [arc_payload(a) for a in pob.images],
    }
    if star is not None:
        out["star"] = star_payload(star)
    return out


def pob_from(payload) -> tuple[PartialOpenBook, Optional[StarPlumbing]]:
    try:
        pob = PartialOpenBook(
            surface_from(payload["surface"]),
            tuple(arc_from(a) for a in payload["basis"]),
            tuple(arc_from(a) for a in payload["images"]),
        )
    except (KeyError, TypeError) as e:
        raise DocumentError(f"bad pob payload: {e}") from e
    star = star_from(payload["star"]) if "star" in payload else None
    return pob, star


def surface_document(p: PolygonPresentation) -> Document:
    return Document("surface", CURRENT_VERSION, surface_payload(p))


def arc_document(a: Arc) -> Document:
    return Document("arc", CURRENT_VERSION, arc_payload(a))


def pob_document(pob: PartialOpenBook, star: Optional[StarPlumbing] = None) -> Document:
    return Document("pob", CURRENT_VERSION, pob_payload(pob, star))


def star_document(star: StarPlumbing) -> Document:
    return Document("star", CURRENT_VERSION, star_payload(star))


def pretzel_document(spec: PretzelSpec) -> Document:
    return Document("pretzel", CURRENT_VERSION, pretzel_payload(spec))


def report_document(payload: dict) -> Document:
    return Document("report", CURRENT_VERSION, payload)


def _doc_json(doc: Document) -> dict:
    return {"kind": doc.kind, "version": doc.version, "payload": doc.payload}


def print_document(doc: Document) -> str:
    return json.dumps(_doc_json(doc), indent=2, sort_keys=True) + "\n"


def print_documents(docs) -> str:
    return json.dumps([_doc_json(d) for d in docs], indent=2, sort_keys=True) + "\n"


def parse_documents(text: str) -> list[Document]:
    """Documents from a JSON stream holding one object or one array."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"not valid JSON: {e}") from e
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise DocumentError("expected a document object or array of them")
    out = []
    for item in data:
        if not isinstance(item, dict):
            raise DocumentError("document entries must be objects")
        missing = {"kind", "version", "payload"} - item.keys()
        if missing:
            raise DocumentError(f"document missing fields: {sorted(missing)}")
        out.append(Document(item["kind"], item["version"], item["payload"]))
    return out


def parse_document(text: str) -> Document:
    docs = parse_documents(text)
    if len(docs) != 1:
        raise DocumentError(f"expected exactly one document, got {len(docs)}")
    return docs[0]
