"""Independent numeric oracles used to cross-check the symbolic core.

The classifier here never consults the package's kind table.  Each
decorated number is modelled as a concrete set of rationals built with a
small positive width DELTA:

    std a      {a}
    left a     (a - DELTA, a)
    right a    (a, a + DELTA)
    bimonad a  (a - DELTA, a) union (a, a + DELTA)

and the six-valued relation is recovered purely from set geometry:
identical sets are equal; a set lying wholly below another is strictly
smaller; a proper subset whose complement sits on one side gives the
non-strict relation from that side; anything else is incomparable.

The model is faithful only when distinct underlying values differ by
more than 2 * DELTA, so case generators draw values from a grid three
orders of magnitude coarser than DELTA.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from neutrocalc import MonadKind, NsNumber, OrderRelation

DELTA = Fraction(1, 10**6)

KINDS = (MonadKind.STD, MonadKind.LEFT, MonadKind.RIGHT, MonadKind.BIMONAD)

# A piece is (lo, hi, lo_open, hi_open); a closed point has lo == hi.
Piece = tuple[Fraction, Fraction, bool, bool]


def model_pieces(x: NsNumber) -> tuple[Piece, ...]:
    a = x.value
    if x.kind is MonadKind.STD:
        return ((a, a, False, False),)
    if x.kind is MonadKind.LEFT:
        return ((a - DELTA, a, True, True),)
    if x.kind is MonadKind.RIGHT:
        return ((a, a + DELTA, True, True),)
    return ((a - DELTA, a, True, True), (a, a + DELTA, True, True))


def _sup(pieces) -> tuple[Fraction, bool]:
    top = max(pieces, key=lambda p: p[1])
    return top[1], not top[3]


def _inf(pieces) -> tuple[Fraction, bool]:
    bottom = min(pieces, key=lambda p: p[0])
    return bottom[0], not bottom[2]


def _all_below(a_pieces, b_pieces) -> bool:
    sup_a, att_a = _sup(a_pieces)
    inf_b, att_b = _inf(b_pieces)
    if sup_a < inf_b:
        return True
    if sup_a == inf_b:
        return not (att_a and att_b)
    return False


def classify(x: NsNumber, y: NsNumber) -> OrderRelation:
    """Positional classification of the two model sets."""
    a_pieces, b_pieces = model_pieces(x), model_pieces(y)
    set_a, set_b = frozenset(a_pieces), frozenset(b_pieces)
    if set_a == set_b:
        return OrderRelation.EQ_N
    if _all_below(a_pieces, b_pieces):
        return OrderRelation.LT_N
    if _all_below(b_pieces, a_pieces):
        return OrderRelation.GT_N
    if set_a < set_b:
        rest = tuple(sorted(set_b - set_a))
        if _all_below(a_pieces, rest):
            return OrderRelation.LE_N  # x coincides with the lower part of y
        if _all_below(rest, a_pieces):
            return OrderRelation.GE_N  # x coincides with the upper part of y
        return OrderRelation.INCOMPARABLE
    if set_b < set_a:
        rest = tuple(sorted(set_a - set_b))
        if _all_below(rest, b_pieces):
            return OrderRelation.LE_N  # x carries extra mass below y
        if _all_below(b_pieces, rest):
            return OrderRelation.GE_N  # x carries extra mass above y
        return OrderRelation.INCOMPARABLE
    return OrderRelation.INCOMPARABLE


def grid_value(rng: Random, lo: int = -2000, hi: int = 2000) -> Fraction:
    """A value from the conformance grid (step 1/1000, far above 2*DELTA)."""
    return Fraction(rng.randint(lo, hi), 1000)


def random_nsnumber(rng: Random, value: Fraction | None = None) -> NsNumber:
    if value is None:
        value = grid_value(rng)
    return NsNumber(value, rng.choice(KINDS))


def _representative(n: NsNumber, rng: Random) -> Fraction:
    eps = Fraction(rng.randint(1, 10**9), 10**9) * DELTA
    if n.kind is MonadKind.STD:
        return n.value
    if n.kind is MonadKind.LEFT:
        return n.value - eps
    if n.kind is MonadKind.RIGHT:
        return n.value + eps
    return n.value - eps if rng.random() < 0.5 else n.value + eps


def sum_kind(x: NsNumber, y: NsNumber, rng: Random, samples: int = 200) -> MonadKind:
    """Decoration of x + y inferred from where representative sums land.

    Samples independent representatives of each operand and records on
    which side of the exact value-sum the rational sums fall.
    """
    center = x.value + y.value
    sides = set()
    for _ in range(samples):
        s = _representative(x, rng) + _representative(y, rng)
        if s < center:
            sides.add(-1)
        elif s > center:
            sides.add(1)
        else:
            sides.add(0)
    if sides == {0}:
        return MonadKind.STD
    if sides == {-1}:
        return MonadKind.LEFT
    if sides == {1}:
        return MonadKind.RIGHT
    return MonadKind.BIMONAD
