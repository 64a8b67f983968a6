"""Properly embedded arcs as crossing words, with intersection and order tools.

An arc is stored as its two boundary endpoints plus the sequence of glued
pairs it crosses, each crossing signed by direction (+1 exits through the
left half of the pair, -1 through the right half).  On a presentation whose
polygon corners all lie on the surface boundary, the chambers of the
universal cover form a tree, reduced words are tree geodesics, and every
question below becomes finite combinatorics on the polygon's cyclic order:

* interior intersection numbers count, over all relative placements of two
  lifted strands, the placements where the strands are forced to cross;
  a placement either shares a corridor run (decided by comparing entry and
  exit order around the end chambers) or meets in a single chamber (decided
  by chord linking on the polygon circle);
* the first-divergence comparison walks two arcs out of a shared boundary
  side and reports which one peels off to the right, measured
  counterclockwise from the point of entry into the chamber where they part;
* twisting about a band core inserts one signed crossing for every essential
  meeting of the arc with the core.

Exact endpoint coincidences never count as crossings: strands emanating from
a shared point can always be combed apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .errors import (
    MixedSurfacesError,
    NoSharedStartError,
    UnknownPairError,
)
from .surface import (
    BoundaryPoint,
    PolygonPresentation,
    _Geometry,
    _geometry,
    _require_valid,
)

from enum import Enum
from functools import lru_cache


@lru_cache(maxsize=512)
def _valid_geometry(p: PolygonPresentation) -> _Geometry:
    """Geometry of a presentation that has passed validation once."""
    _require_valid(p)
    return _geometry(p)


@dataclass(frozen=True)
class Crossing:
    pair: str
    direction: int

    def __post_init__(self):
        if self.direction not in (1, -1):
            raise ValueError(f"crossing direction must be +1 or -1, got {self.direction}")

    def inverse(self) -> "Crossing":
        return Crossing(self.pair, -self.direction)


@dataclass(frozen=True)
class Arc:
    start: BoundaryPoint
    end: BoundaryPoint
    crossings: tuple[Crossing, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))


class Divergence(Enum):
    RIGHT_OF = "RightOf"
    LEFT_OF = "LeftOf"
    EQUAL = "Equal"


# An address is a location on the polygon circle: a marked point on a side
# (side_index, position) or a whole glued side acting as a door
# (side_index, None).
Address = tuple[int, Optional[Fraction]]


def _door_out(geo: _Geometry, c: Crossing) -> int:
    """Side through which a strand leaves its chamber when performing c."""
    left, right = geo.pair_sides[c.pair]
    return left if c.direction > 0 else right


def _door_in(geo: _Geometry, c: Crossing) -> int:
    """Side through which the strand re-enters after performing c."""
    left, right = geo.pair_sides[c.pair]
    return right if c.direction > 0 else left


def _check_endpoint(geo: _Geometry, pt: BoundaryPoint) -> None:
    if pt.side not in geo.boundary_index:
        raise MixedSurfacesError(f"boundary side {pt.side!r} is not on this presentation")
    if not (0 < pt.position < 1):
        raise ValueError(f"endpoint position {pt.position} outside the open unit interval")


class _ArcData:
    """Per-arc view used by the counting machinery: one chamber slot per
    word prefix, each slot holding its entry and exit address."""

    __slots__ = ("arc", "word", "slots", "doors")

    def __init__(self, geo: _Geometry, arc: Arc):
        self.arc = arc
        self.word = arc.crossings
        start_idx = geo.boundary_index[arc.start.side]
        end_idx = geo.boundary_index[arc.end.side]
        entries: list[Address] = [(start_idx, arc.start.position)]
        exits: list[Address] = []
        for c in self.word:
            exits.append((_door_out(geo, c), None))
            entries.append((_door_in(geo, c), None))
        exits.append((end_idx, arc.end.position))
        self.slots: list[tuple[Address, Address]] = list(zip(entries, exits))
        self.doors: list[frozenset[int]] = [
            frozenset(side for side, pos in slot if pos is None) for slot in self.slots
        ]


def _prepare(geo: _Geometry, arc: Arc) -> _ArcData:
    _check_endpoint(geo, arc.start)
    _check_endpoint(geo, arc.end)
    for c in arc.crossings:
        if c.pair not in geo.pair_sides:
            raise MixedSurfacesError(f"pair {c.pair!r} is not on this presentation")
    return _ArcData(geo, arc)


def _key(n: int, ref_side: int, ref_param: Optional[Fraction], addr: Address) -> Fraction:
    """Counterclockwise position of an address, measured from a reference.

    The reference is either a whole door side (ref_param None) or a marked
    point; addresses on the reference side behind the point wrap to the end.
    Doors are keyed at their midpoint, which is safe because distinct
    addresses never share a side unless both are marked points.
    """
    side, pos = addr
    t = pos if pos is not None else Fraction(1, 2)
    off = (side - ref_side) % n
    key = off + t
    if ref_param is not None and off == 0 and t < ref_param:
        key += n
    return key


def _in_open(x: Fraction, lo: Fraction, hi: Fraction) -> bool:
    """Strict membership in the counterclockwise open interval lo -> hi."""
    if lo < hi:
        return lo < x < hi
    return x > lo or x < hi


def reduce(p: PolygonPresentation, a: Arc) -> Arc:
    """Cancel adjacent opposite crossings of the same pair until none remain.

    On presentations without interior vertices this free cancellation is
    complete: reduced words are universal-cover geodesics, so no further
    boundary-parallel backtracks can exist, and the reduced word together
    with the endpoints determines the endpoint-fixed isotopy class.
    """
    geo = _valid_geometry(p)
    for c in a.crossings:
        if c.pair not in geo.pair_sides:
            raise UnknownPairError(c.pair)
    _check_endpoint(geo, a.start)
    _check_endpoint(geo, a.end)
    if a.start == a.end:
        raise ValueError("arc endpoints coincide exactly; use distinct positions")
    stack: list[Crossing] = []
    for c in a.crossings:
        if stack and stack[-1] == c.inverse():
            stack.pop()
        else:
            stack.append(c)
    return Arc(a.start, a.end, tuple(stack))


def reverse(a: Arc) -> Arc:
    return Arc(a.end, a.start, tuple(c.inverse() for c in reversed(a.crossings)))


def _forward_alignments(
    u: tuple[Crossing, ...], w: tuple[Crossing, ...]
) -> Iterator[tuple[int, int, int]]:
    """Maximal common-subword placements (m0, k0, length) of u against w.

    Each corresponds to one relative placement of the two lifted strands in
    which they run through at least one shared corridor.
    """
    for m0 in range(len(u)):
        for k0 in range(len(w)):
            if u[m0] != w[k0]:
                continue
            if m0 and k0 and u[m0 - 1] == w[k0 - 1]:
                continue
            r = 0
            while m0 + r < len(u) and k0 + r < len(w) and u[m0 + r] == w[k0 + r]:
                r += 1
            yield m0, k0, r


def _corridor_linked(
    geo: _Geometry, da: _ArcData, db: _ArcData, m0: int, k0: int, r: int
) -> bool:
    """Whether two strands sharing corridors m0..m0+r / k0..k0+r must cross.

    Entries into the first shared chamber are ordered counterclockwise from
    the common exit door, exits from the last shared chamber from the common
    entry door; the strands are forced to cross exactly when the two orders
    agree (each door passage reverses the transverse order once and is
    compensated by the chamber between, leaving this invariant).
    """
    n = geo.n
    d_out = _door_out(geo, da.word[m0])
    ein_a = da.slots[m0][0]
    ein_b = db.slots[k0][0]
    if ein_a == ein_b:
        return False
    d_in = _door_in(geo, da.word[m0 + r - 1])
    eout_a = da.slots[m0 + r][1]
    eout_b = db.slots[k0 + r][1]
    if eout_a == eout_b:
        return False
    order_in = _key(n, d_out, None, ein_a) < _key(n, d_out, None, ein_b)
    order_out = _key(n, d_in, None, eout_a) < _key(n, d_in, None, eout_b)
    return order_in == order_out


def _chamber_linked(
    n: int, sa: tuple[Address, Address], sb: tuple[Address, Address]
) -> bool:
    """Whether two single-chamber strand segments must cross: their endpoint
    addresses interleave around the polygon circle.  Exact shared points tie
    and never cross."""
    a1, a2 = sa
    b1, b2 = sb
    if b1 in sa or b2 in sa:
        return False
    lo = _key(n, 0, None, a1)
    hi = _key(n, 0, None, a2)
    inside = _in_open(_key(n, 0, None, b1), lo, hi) + _in_open(_key(n, 0, None, b2), lo, hi)
    return inside == 1


def _count_distinct(geo: _Geometry, da: _ArcData, db: _ArcData, db_rev: _ArcData) -> int:
    total = 0
    for m0, k0, r in _forward_alignments(da.word, db.word):
        total += _corridor_linked(geo, da, db, m0, k0, r)
    for m0, k0, r in _forward_alignments(da.word, db_rev.word):
        total += _corridor_linked(geo, da, db_rev, m0, k0, r)
    for m, doors_a in enumerate(da.doors):
        sa = da.slots[m]
        for k, doors_b in enumerate(db.doors):
            if doors_a & doors_b:
                continue
            total += _chamber_linked(geo.n, sa, db.slots[k])
    return total


def _count_self(geo: _Geometry, da: _ArcData, da_rev: _ArcData) -> int:
    length = len(da.word)
    total = 0
    for m0, k0, r in _forward_alignments(da.word, da.word):
        if m0 == 0 and k0 == 0 and r == length:
            continue
        total += _corridor_linked(geo, da, da, m0, k0, r)
    for m0, k0, r in _forward_alignments(da.word, da_rev.word):
        if m0 + k0 == length:
            # the strand laid against its own reversal: same lift, not a pair
            continue
        total += _corridor_linked(geo, da, da_rev, m0, k0, r)
    for m, doors_a in enumerate(da.doors):
        sa = da.slots[m]
        for k, doors_b in enumerate(da.doors):
            if m == k or (doors_a & doors_b):
                continue
            total += _chamber_linked(geo.n, sa, da.slots[k])
    if total % 2:
        raise AssertionError("self-intersection double count came out odd")
    return total // 2


def minimal_position(
    p: PolygonPresentation, a: Arc, b: Arc
) -> tuple[Arc, Arc, int]:
    """Reduced representatives of both classes and their forced interior
    intersection count.

    The reduced words already realize minimal position: every removable bigon
    between two strands shows up as a relative placement whose end orders do
    not force a crossing, and such placements contribute nothing here.
    """
    geo = _valid_geometry(p)
    ra = reduce(p, a)
    rb = reduce(p, b)
    da = _prepare(geo, ra)
    # duplicates of one unoriented class, either parametrization, are a
    # self-intersection query, not a pair of parallel copies
    if ra == rb or ra == reverse(rb):
        count = _count_self(geo, da, _prepare(geo, reverse(ra)))
    else:
        db = _prepare(geo, rb)
        count = _count_distinct(geo, da, db, _prepare(geo, reverse(rb)))
    return ra, rb, count


def interior_intersections(p: PolygonPresentation, a: Arc, b: Arc) -> int:
    return minimal_position(p, a, b)[2]


def is_embedded(p: PolygonPresentation, a: Arc) -> bool:
    """Whether the reduced representative has no forced self-crossings."""
    geo = _valid_geometry(p)
    ra = reduce(p, a)
    da = _prepare(geo, ra)
    return _count_self(geo, da, _prepare(geo, reverse(ra))) == 0


def is_isotopic(
    p: PolygonPresentation, a: Arc, b: Arc, endpoints_fixed: bool = True
) -> bool:
    """Isotopy of arcs, orientation-blind.

    With endpoints fixed this is equality of reduced words and endpoints (up
    to reversing one arc).  Without, each endpoint may additionally slide
    along its own boundary side as long as it passes no other endpoint of
    the two arcs.
    """
    ra = reduce(p, a)
    rb = reduce(p, b)
    if endpoints_fixed:
        return ra == rb or ra == reverse(rb)

    def slidable(x: BoundaryPoint, y: BoundaryPoint, others: tuple[BoundaryPoint, ...]) -> bool:
        if x.side != y.side:
            return False
        lo, hi = sorted((x.position, y.position))
        return not any(o.side == x.side and lo < o.position < hi for o in others)

    for cand in (rb, reverse(rb)):
        if ra.crossings != cand.crossings:
            continue
        if slidable(ra.start, cand.start, (ra.end, cand.end)) and slidable(
            ra.end, cand.end, (ra.start, cand.start)
        ):
            return True
    return False


def first_divergence(p: PolygonPresentation, a: Arc, b: Arc) -> Divergence:
    """Which side of a the arc b departs on, seen from their shared start.

    Both arcs must leave the same boundary side; coincident start points are
    the clean case, adjacent start positions on one side are accepted and
    compared through the same counterclockwise scan.  At the first chamber
    where the two crossing words part ways, the exit addresses are ordered
    counterclockwise starting from the entry point (or entry door); the arc
    whose exit comes first departs to the right of the other.
    """
    geo = _valid_geometry(p)
    ra = reduce(p, a)
    rb = reduce(p, b)
    if ra.start.side != rb.start.side:
        raise NoSharedStartError(
            f"arcs start on different boundary sides {ra.start.side!r} and {rb.start.side!r}"
        )
    if ra == rb:
        return Divergence.EQUAL
    da = _prepare(geo, ra)
    db = _prepare(geo, rb)
    la, lb = len(ra.crossings), len(rb.crossings)
    m = 0
    while m <= min(la, lb):
        ea = da.slots[m][1]
        eb = db.slots[m][1]
        if ea != eb:
            if m == 0:
                ref_side = geo.boundary_index[ra.start.side]
                ref_param: Optional[Fraction] = ra.start.position
            else:
                ref_side = _door_in(geo, ra.crossings[m - 1])
                ref_param = None
            key_a = _key(geo.n, ref_side, ref_param, ea)
            key_b = _key(geo.n, ref_side, ref_param, eb)
            return Divergence.RIGHT_OF if key_b < key_a else Divergence.LEFT_OF
        m += 1
    # identical words and end, distinct start positions on the shared side:
    # the counterclockwise copy stays on the right all along
    return (
        Divergence.RIGHT_OF
        if rb.start.position > ra.start.position
        else Divergence.LEFT_OF
    )


def twist_about_band(p: PolygonPresentation, a: Arc, pair: str, sign: int) -> Arc:
    """Image of an arc under the Dehn twist about the core of a glued band.

    The band core crosses the pair once, so each chamber carries exactly one
    strand of it, running between the pair's two doors.  For every chamber of
    the arc whose chord essentially meets that strand, the twisted arc takes
    one detour through the band: a single inserted crossing, signed by the
    twist handedness and by which door the chord faces.

    Supported for arcs that do not already cross the band themselves, which
    covers every construction in this package (band-dual arcs and their
    composites over other bands).
    """
    geo = _valid_geometry(p)
    if pair not in geo.pair_sides:
        raise UnknownPairError(pair)
    if sign not in (1, -1):
        raise ValueError(f"twist sign must be +1 or -1, got {sign}")
    ra = reduce(p, a)
    if any(c.pair == pair for c in ra.crossings):
        raise ValueError(
            f"twist about {pair!r} needs an arc not already crossing that band"
        )
    da = _prepare(geo, ra)
    left, right = geo.pair_sides[pair]
    core: tuple[Address, Address] = ((left, None), (right, None))
    pieces: list[Crossing] = []
    for m, slot in enumerate(da.slots):
        if _chamber_linked(geo.n, slot, core):
            lo = _key(geo.n, 0, None, slot[0])
            hi = _key(geo.n, 0, None, slot[1])
            faces_left = _in_open(_key(geo.n, 0, None, (left, None)), lo, hi)
            orientation = 1 if faces_left else -1
            pieces.append(Crossing(pair, sign * orientation))
        if m < len(ra.crossings):
            pieces.append(ra.crossings[m])
    return reduce(p, Arc(ra.start, ra.end, tuple(pieces)))
