"""Nonstandard intervals with decorated endpoints.

An NsInterval is a pair of NsNumbers lo ≤N hi; membership, infimum and
supremum are all resolved by the six-valued comparison, so a decorated
endpoint can admit or exclude same-value probes by kind alone.  The unit
interval used for truth degrees runs from the left monad of 0 to the
right monad of 1, so offsets infinitesimally below 0 or above 1 are
still members.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import EmptySet, InvalidInterval
from .monads import (
    MonadKind,
    NsNumber,
    OrderRelation,
    as_fraction,
    compare_ns,
    left,
    right,
    roughly_leq,
    std,
)

__all__ = [
    "NsInterval",
    "UNIT_INTERVAL",
    "contains",
    "inf_ns",
    "sup_ns",
    "inf_ns_set",
    "sup_ns_set",
    "rough_contains",
    "anomaly_check",
    "AnomalyReport",
]

_AT_MOST = frozenset({OrderRelation.LT_N, OrderRelation.LE_N, OrderRelation.EQ_N})


@dataclass(frozen=True)
class NsInterval:
    lo: NsNumber
    hi: NsNumber

    def __post_init__(self):
        if compare_ns(self.lo, self.hi) not in _AT_MOST:
            raise InvalidInterval(f"]{self.lo}, {self.hi}[ has endpoints out of order")

    def __str__(self) -> str:
        return f"]{self.lo}, {self.hi}["


#: Truth-degree carrier: everything from infinitesimally below 0 up to
#: infinitesimally above 1.
UNIT_INTERVAL = NsInterval(left(0), right(1))


def contains(interval: NsInterval, x: NsNumber) -> bool:
    """Membership decided entirely by compare_ns on both endpoints.

    Non-strict outcomes count as inclusion, so a bimonad probe sitting on
    a left-monad endpoint is a member while a std probe on that same
    endpoint is not.
    """
    return (
        compare_ns(interval.lo, x) in _AT_MOST
        and compare_ns(x, interval.hi) in _AT_MOST
    )


def inf_ns(interval: NsInterval) -> NsNumber:
    """Greatest lower bound of the interval; the decorated endpoint itself."""
    return interval.lo


def sup_ns(interval: NsInterval) -> NsNumber:
    """Least upper bound of the interval; the decorated endpoint itself."""
    return interval.hi


# At a fixed value the four kinds form a diamond: LEFT below everything,
# RIGHT above everything, STD and BIMONAD incomparable in the middle.
def _kind_glb(a: MonadKind, b: MonadKind) -> MonadKind:
    if a is b:
        return a
    if MonadKind.LEFT in (a, b):
        return MonadKind.LEFT
    if MonadKind.RIGHT in (a, b):
        return a if b is MonadKind.RIGHT else b
    return MonadKind.LEFT  # std meets bimonad from below


def _kind_lub(a: MonadKind, b: MonadKind) -> MonadKind:
    if a is b:
        return a
    if MonadKind.RIGHT in (a, b):
        return MonadKind.RIGHT
    if MonadKind.LEFT in (a, b):
        return a if b is MonadKind.LEFT else b
    return MonadKind.RIGHT  # std joins bimonad from above


def inf_ns_set(values: Iterable[NsNumber]) -> NsNumber:
    """Greatest NsNumber that is ≤N every element of the set.

    Elements above the minimal value never constrain the answer.  Among
    the kinds present at the minimal value the diamond's meet applies; in
    particular a std/bimonad mix has no comparable member below it other
    than the left monad of that value.
    """
    items = list(values)
    if not items:
        raise EmptySet("inf over an empty set")
    m = min(x.value for x in items)
    kind = None
    for x in items:
        if x.value == m:
            kind = x.kind if kind is None else _kind_glb(kind, x.kind)
    return NsNumber(m, kind)


def sup_ns_set(values: Iterable[NsNumber]) -> NsNumber:
    """Least NsNumber that is ≥N every element of the set."""
    items = list(values)
    if not items:
        raise EmptySet("sup over an empty set")
    m = max(x.value for x in items)
    kind = None
    for x in items:
        if x.value == m:
            kind = x.kind if kind is None else _kind_lub(kind, x.kind)
    return NsNumber(m, kind)


def rough_contains(a, b, x: NsNumber) -> bool:
    """Membership of x in the rough interval from a to b.

    Under the rough order only underlying values matter, so the interval
    is the same whatever decorations its endpoints carry.
    """
    a, b = as_fraction(a), as_fraction(b)
    if a > b:
        raise ValueError("rough interval requires a <= b")
    return roughly_leq(std(a), x) and roughly_leq(x, std(b))


@dataclass(frozen=True)
class AnomalyReport:
    """Membership of the same probes in two differently-decorated rough intervals.

    outer nominally reaches past b, inner nominally starts past a and
    stops short of b; rough semantics cannot tell them apart, so the
    membership vectors coincide and each interval contains the other.
    """

    lower: Fraction
    upper: Fraction
    outer_notation: str
    inner_notation: str
    probes: tuple[NsNumber, ...]
    outer_membership: tuple[bool, ...]
    inner_membership: tuple[bool, ...]

    @property
    def discrepancies(self) -> tuple[int, ...]:
        return tuple(
            i
            for i, (u, v) in enumerate(zip(self.outer_membership, self.inner_membership))
            if u != v
        )

    @property
    def memberships_coincide(self) -> bool:
        return not self.discrepancies


def anomaly_check(a, b, probes: Iterable[NsNumber]) -> AnomalyReport:
    """Probe the two rough intervals ]a, R(b)[ and ]R(a), L(b)[.

    Decorations drop out of the rough membership predicate, so both
    columns of the report are computed by the same test on (a, b); the
    point of the report is that the nominally wider and nominally
    narrower intervals admit exactly the same probes.
    """
    a, b = as_fraction(a), as_fraction(b)
    if not a < b:
        raise ValueError("anomaly check requires a < b")
    probes = tuple(probes)
    outer = tuple(rough_contains(a, b, x) for x in probes)
    inner = tuple(rough_contains(a, b, x) for x in probes)
    return AnomalyReport(
        lower=a,
        upper=b,
        outer_notation=f"]{std(a)}, {right(b)}[",
        inner_notation=f"]{right(a)}, {left(b)}[",
        probes=probes,
        outer_membership=outer,
        inner_membership=inner,
    )
