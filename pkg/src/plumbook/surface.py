"""Polygon presentations of compact orientable surfaces with boundary.

A surface is described by a single polygon whose sides are listed in
counterclockwise order.  Each side is either a free boundary side or one half
of a glued pair; regluing the pairs recovers the surface.  The two halves of a
pair carry distinct end markers (left/right), which pins the identification to
the orientation-compatible one: traversing the left occurrence forward matches
traversing the right occurrence backward.

Everything downstream (arc words, open books, plumbings) works on top of this
one representation, so the invariants here are deliberately strict: boundary
labels are unique, every pair occurs exactly once per end marker, and every
polygon corner must land on the surface boundary.  The last condition keeps
the chamber decomposition of the universal cover a tree, which the arc
calculus relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import InvalidPresentationError, Violation


class End(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class Boundary:
    """A free boundary side, named so arcs can anchor endpoints to it."""

    label: str


@dataclass(frozen=True)
class Glued:
    """One half of an identified pair of sides."""

    pair: str
    end: End


Side = Union[Boundary, Glued]


@dataclass(frozen=True)
class PolygonPresentation:
    """The polygon, sides in counterclockwise order.

    Corner i is the counterclockwise start of side i, so side i runs from
    corner i to corner i+1 (mod n).
    """

    sides: tuple[Side, ...]

    def __post_init__(self):
        object.__setattr__(self, "sides", tuple(self.sides))


@dataclass(frozen=True)
class BoundaryPoint:
    """A marked point on a boundary side, at a rational position in (0, 1).

    Positions order points along the side in the counterclockwise direction
    of the polygon.  Only the relative order of positions ever matters.
    """

    side: str
    position: Fraction

    def __post_init__(self):
        object.__setattr__(self, "position", Fraction(self.position))


class _Geometry:
    """Indexed view of a presentation shared by the arc machinery."""

    __slots__ = ("presentation", "n", "boundary_index", "pair_sides")

    def __init__(self, p: PolygonPresentation):
        self.presentation = p
        self.n = len(p.sides)
        self.boundary_index: dict[str, int] = {}
        left: dict[str, int] = {}
        right: dict[str, int] = {}
        for i, s in enumerate(p.sides):
            if isinstance(s, Boundary):
                self.boundary_index[s.label] = i
            elif s.end is End.LEFT:
                left[s.pair] = i
            else:
                right[s.pair] = i
        self.pair_sides: dict[str, tuple[int, int]] = {
            pair: (left[pair], right[pair]) for pair in left if pair in right
        }


@lru_cache(maxsize=512)
def _geometry(p: PolygonPresentation) -> _Geometry:
    return _Geometry(p)


def _corner_orbits(p: PolygonPresentation) -> list[int]:
    """Union-find roots of polygon corners under the pair identifications.

    Gluing left occurrence i to right occurrence j reversed identifies
    corner i with corner j+1 and corner i+1 with corner j.
    """
    n = len(p.sides)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for i, j in _geometry(p).pair_sides.values():
        union(i, (j + 1) % n)
        union((i + 1) % n, j)
    return [find(c) for c in range(n)]


def validate(p: PolygonPresentation) -> list[Violation]:
    """Check all presentation invariants; empty list means valid."""
    out: list[Violation] = []
    if not p.sides:
        return [Violation("EmptyPolygon", "presentation has no sides")]

    seen_labels: set[str] = set()
    occurrences: dict[str, list[End]] = {}
    for s in p.sides:
        if isinstance(s, Boundary):
            if s.label in seen_labels:
                out.append(Violation("DuplicateLabel", f"boundary label {s.label!r} used twice"))
            seen_labels.add(s.label)
        else:
            occurrences.setdefault(s.pair, []).append(s.end)

    pairs_ok = True
    for pair, ends in sorted(occurrences.items()):
        if len(ends) != 2:
            out.append(
                Violation("UnmatchedPair", f"pair {pair!r} occurs {len(ends)} time(s), expected 2")
            )
            pairs_ok = False
        elif ends[0] is ends[1]:
            # two same-end halves cannot be glued orientation-compatibly
            out.append(
                Violation(
                    "UnmatchedPair",
                    f"pair {pair!r} has two {ends[0].value} halves, expected one of each",
                )
            )
            pairs_ok = False

    if not seen_labels:
        out.append(Violation("NoBoundary", "all sides glued: closed surfaces are rejected"))

    if pairs_ok and seen_labels:
        n = len(p.sides)
        roots = _corner_orbits(p)
        # corner c borders sides c-1 and c; it is a boundary vertex iff some
        # corner in its orbit touches a Boundary side
        on_boundary: set[int] = set()
        for c in range(n):
            if isinstance(p.sides[c], Boundary) or isinstance(p.sides[(c - 1) % n], Boundary):
                on_boundary.add(roots[c])
        interior = sorted({roots[c] for c in range(n)} - on_boundary)
        for root in interior:
            members = [c for c in range(n) if roots[c] == root]
            out.append(
                Violation(
                    "InteriorVertex",
                    f"corner orbit {members} lies in the surface interior; "
                    "arc normal forms need every polygon vertex on the boundary",
                )
            )
    return out


def _require_valid(p: PolygonPresentation) -> None:
    violations = validate(p)
    if violations:
        raise InvalidPresentationError(violations)


def euler_characteristic(p: PolygonPresentation) -> int:
    """V - E + F of the glued-up complex: one face, one edge per boundary side
    or glued pair, and one vertex per corner orbit."""
    _require_valid(p)
    geo = _geometry(p)
    vertices = len(set(_corner_orbits(p)))
    edges = len(geo.boundary_index) + len(geo.pair_sides)
    return vertices - edges + 1


def boundary_components(p: PolygonPresentation) -> tuple[tuple[str, ...], ...]:
    """Boundary circles as cyclic words of boundary-side labels.

    Walk corners counterclockwise: a boundary side is emitted and crossed,
    while a glued side is jumped (the walk continues at the corner identified
    with the far end of its partner).  Each cycle is one boundary circle.
    """
    _require_valid(p)
    geo = _geometry(p)
    n = geo.n
    components: list[tuple[str, ...]] = []
    emitted: set[int] = set()
    for start in range(n):
        if not isinstance(p.sides[start], Boundary) or start in emitted:
            continue
        word: list[str] = []
        c = start
        while True:
            side = p.sides[c]
            if isinstance(side, Boundary):
                if c in emitted:
                    break
                emitted.add(c)
                word.append(side.label)
                c = (c + 1) % n
            else:
                i, j = geo.pair_sides[side.pair]
                c = (j + 1) % n if c == i else (i + 1) % n
            if c == start:
                break
        components.append(tuple(word))
    return tuple(components)


def genus(p: PolygonPresentation) -> int:
    chi = euler_characteristic(p)
    b = len(boundary_components(p))
    num = 2 - chi - b
    if num < 0 or num % 2:
        # unreachable with left/right paired gluings; kept as a hard check
        raise InvalidPresentationError(
            [Violation("NonOrientable", f"chi={chi}, b={b} admit no nonnegative integer genus")]
        )
    return num // 2


def _signature(p: PolygonPresentation, rotation: int) -> tuple:
    """Label-free side sequence starting at `rotation`, for canonical rotation."""
    n = len(p.sides)
    bmap: dict[str, int] = {}
    pmap: dict[str, int] = {}
    sig = []
    for k in range(n):
        s = p.sides[(rotation + k) % n]
        if isinstance(s, Boundary):
            sig.append(("B", bmap.setdefault(s.label, len(bmap))))
        else:
            sig.append(("G", pmap.setdefault(s.pair, len(pmap)), s.end.value))
    return tuple(sig)


def _canonical_data(
    p: PolygonPresentation,
) -> list[tuple[PolygonPresentation, int, dict[str, str], dict[str, str]]]:
    """All minimal-signature rotations with their relabeling maps.

    Usually a single candidate; symmetric polygons may give several, and
    callers that canonicalize richer structures break the tie themselves.
    """
    n = len(p.sides)
    best = None
    rotations: list[int] = []
    for r in range(n):
        sig = _signature(p, r)
        if best is None or sig < best:
            best, rotations = sig, [r]
        elif sig == best:
            rotations.append(r)
    out = []
    for r in rotations:
        bmap: dict[str, int] = {}
        pmap: dict[str, int] = {}
        sides: list[Side] = []
        for k in range(n):
            s = p.sides[(r + k) % n]
            if isinstance(s, Boundary):
                sides.append(Boundary(f"b{bmap.setdefault(s.label, len(bmap))}"))
            else:
                sides.append(Glued(f"p{pmap.setdefault(s.pair, len(pmap))}", s.end))
        label_map = {old: f"b{i}" for old, i in bmap.items()}
        pair_map = {old: f"p{i}" for old, i in pmap.items()}
        out.append((PolygonPresentation(tuple(sides)), r, label_map, pair_map))
    return out


def canonical_relabel(p: PolygonPresentation) -> PolygonPresentation:
    """Rotation- and label-independent normal form of a presentation.

    Two presentations describe the same polygon with sides renamed and the
    cyclic order rotated iff their canonical forms are equal.
    """
    _require_valid(p)
    return _canonical_data(p)[0][0]


def merge_boundary_runs(
    p: PolygonPresentation,
) -> tuple[PolygonPresentation, dict[str, tuple[str, int, int]]]:
    """Fuse maximal cyclic runs of consecutive boundary sides into single sides.

    Returns the fused presentation and, per old label, the new label plus the
    (index, length) of the old side inside its run, so marked points rescale
    as position -> (index + position) / length.  Merging does not change the
    surface; it only coarsens the boundary subdivision.
    """
    _require_valid(p)
    n = len(p.sides)
    point_map: dict[str, tuple[str, int, int]] = {}
    if all(isinstance(s, Boundary) for s in p.sides):
        label = p.sides[0].label
        for k, s in enumerate(p.sides):
            point_map[s.label] = (label, k, n)
        return PolygonPresentation((Boundary(label),)), point_map

    start = next(
        i
        for i in range(n)
        if not isinstance(p.sides[i - 1], Boundary) or not isinstance(p.sides[i], Boundary)
    )
    # from `start`, no boundary run wraps around the seam
    sides: list[Side] = []
    run: list[str] = []

    def flush() -> None:
        if run:
            for k, old in enumerate(run):
                point_map[old] = (run[0], k, len(run))
            sides.append(Boundary(run[0]))
            run.clear()

    for k in range(n):
        s = p.sides[(start + k) % n]
        if isinstance(s, Boundary):
            run.append(s.label)
        else:
            flush()
            sides.append(s)
    flush()
    return PolygonPresentation(tuple(sides)), point_map
