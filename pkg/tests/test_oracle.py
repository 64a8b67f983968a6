"""Agreement between the word-based engine and the strip model of the annulus.

strip_oracle computes intersection numbers from nothing but endpoints and
winding, by lifting to the universal cover and counting endpoint
interleavings over deck shifts.  The package engine works on crossing words
of arbitrary presentations.  On the hexagon annulus both must agree, word
by word, endpoint grid by endpoint grid.
"""

import itertools
import random
from fractions import Fraction

from strip_oracle import oracle_intersections

from plumbook.arcs import Arc, Crossing, interior_intersections
from plumbook.surface import Boundary, BoundaryPoint, End, Glued, PolygonPresentation

HEXAGON = PolygonPresentation(
    (
        Boundary("B1"),
        Glued("c", End.LEFT),
        Boundary("B2"),
        Boundary("B3"),
        Glued("c", End.RIGHT),
        Boundary("B4"),
    )
)

# hexagon side indices of the four boundary labels, counterclockwise
SIDE_INDEX = {"B1": 0, "B2": 2, "B3": 3, "B4": 5}
LABELS = sorted(SIDE_INDEX)


def make(s0, t0, s1, t1, signs):
    engine_arc = Arc(
        BoundaryPoint(s0, t0),
        BoundaryPoint(s1, t1),
        tuple(Crossing("c", s) for s in signs),
    )
    oracle_arc = ((SIDE_INDEX[s0], t0), (SIDE_INDEX[s1], t1), tuple(signs))
    return engine_arc, oracle_arc


def words(max_len):
    out = [()]
    for length in range(1, max_len + 1):
        out += list(itertools.product((1, -1), repeat=length))
    return out


def family(t_start, t_end, max_len):
    return [
        make(s0, t_start, s1, t_end, w)
        for s0 in LABELS
        for s1 in LABELS
        for w in words(max_len)
    ]


def test_grid_pairs_agree_with_strip_model():
    fam_a = family(Fraction(1, 4), Fraction(1, 3), 2)
    fam_b = family(Fraction(1, 2), Fraction(2, 3), 2)
    checked = 0
    for ea, oa in fam_a:
        for eb, ob in fam_b:
            assert interior_intersections(HEXAGON, ea, eb) == oracle_intersections(
                oa, ob
            ), (oa, ob)
            checked += 1
    assert checked == 112 * 112


def test_self_intersections_agree_with_strip_model():
    for ea, oa in family(Fraction(1, 4), Fraction(1, 3), 3):
        assert interior_intersections(HEXAGON, ea, ea) == oracle_intersections(oa, oa), oa


def test_random_long_words_agree_with_strip_model():
    rng = random.Random(20240611)
    for _ in range(400):
        t = [Fraction(rng.randrange(1, 12), 12) for _ in range(4)]
        s = [rng.choice(LABELS) for _ in range(4)]
        if (s[0], t[0]) == (s[1], t[1]) or (s[2], t[2]) == (s[3], t[3]):
            continue
        w1 = tuple(rng.choice((1, -1)) for _ in range(rng.randrange(0, 6)))
        w2 = tuple(rng.choice((1, -1)) for _ in range(rng.randrange(0, 6)))
        e1, o1 = make(s[0], t[0], s[1], t[1], w1)
        e2, o2 = make(s[2], t[2], s[3], t[3], w2)
        assert interior_intersections(HEXAGON, e1, e2) == oracle_intersections(o1, o2)
        assert interior_intersections(HEXAGON, e1, e1) == oracle_intersections(o1, o1)


def test_oracle_matches_frozen_hopf_values():
    # the same four numbers frozen in test_arcs, straight from the strip model
    basis = ((0, Fraction(1, 3)), (2, Fraction(1, 3)), ())
    pos_image = ((0, Fraction(2, 3)), (2, Fraction(2, 3)), (1,))
    neg_image = ((0, Fraction(2, 3)), (2, Fraction(2, 3)), (-1,))
    assert oracle_intersections(basis, pos_image) == 0
    assert oracle_intersections(basis, neg_image) == 2
    winding_a = ((2, Fraction(1, 4)), (3, Fraction(1, 4)), (1,))
    winding_b = ((2, Fraction(1, 2)), (3, Fraction(1, 2)), (1, 1))
    assert oracle_intersections(winding_a, winding_b) == 1
    opposite_a = ((0, Fraction(1, 4)), (2, Fraction(1, 4)), (1,))
    opposite_b = ((0, Fraction(1, 2)), (2, Fraction(1, 2)), (-1,))
    assert oracle_intersections(opposite_a, opposite_b) == 3
