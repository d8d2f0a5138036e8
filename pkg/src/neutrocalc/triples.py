"""Truth/indeterminacy/falsity triples and their value-domain operations.

A triple is homogeneous: all three components share one shape.  Supported
shapes are single values, closed intervals, hesitant (finite) sets, and
nonstandard components built from monad-decorated numbers or intervals.
Triples themselves never enforce a range; offset components (below 0 or
above 1) are legal data and `validate` reports where they fall relative
to the active bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import EmptyComponent, InvalidInterval, ShapeMismatch
from .intervals import NsInterval, inf_ns_set, sup_ns_set
from .monads import MonadKind, NsNumber, add_ns, as_fraction, std, _plain

__all__ = [
    "Component",
    "SingleValued",
    "IntervalValued",
    "Hesitant",
    "Nonstandard",
    "NeutroTriple",
    "OffsetBounds",
    "UNIT_BOUNDS",
    "ComponentBounds",
    "component_bounds",
    "triple_sums",
    "Violation",
    "ValidationReport",
    "validate",
    "classify_logic",
    "Role",
    "TruthGrade",
    "truth_grade",
    "scale_triple",
]


class Component:
    """Marker base for the four component shapes."""

    __slots__ = ()


@dataclass(frozen=True)
class SingleValued(Component):
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", as_fraction(self.value))

    def __str__(self) -> str:
        return _plain(self.value)


@dataclass(frozen=True)
class IntervalValued(Component):
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if self.lo > self.hi:
            raise InvalidInterval(f"[{_plain(self.lo)}, {_plain(self.hi)}] is reversed")

    def __str__(self) -> str:
        return f"[{_plain(self.lo)}, {_plain(self.hi)}]"


@dataclass(frozen=True)
class Hesitant(Component):
    """A finite, deduplicated set of candidate degrees, kept sorted."""

    values: tuple[Fraction, ...]

    def __init__(self, values):
        canonical = tuple(sorted({as_fraction(v) for v in values}))
        if not canonical:
            raise EmptyComponent("hesitant component needs at least one value")
        object.__setattr__(self, "values", canonical)

    def __str__(self) -> str:
        return "{" + ", ".join(_plain(v) for v in self.values) + "}"


@dataclass(frozen=True)
class Nonstandard(Component):
    """A finite union of decorated numbers and decorated intervals."""

    members: tuple

    def __init__(self, members):
        if isinstance(members, (NsNumber, NsInterval)):
            members = (members,)
        members = tuple(members)
        if not members:
            raise EmptyComponent("nonstandard component needs at least one member")
        for m in members:
            if not isinstance(m, (NsNumber, NsInterval)):
                raise TypeError("nonstandard members must be NsNumber or NsInterval")
        object.__setattr__(self, "members", members)

    def __str__(self) -> str:
        return " ∪ ".join(str(m) for m in self.members)


@dataclass(frozen=True)
class NeutroTriple:
    """Homogeneous (T, I, F) triple."""

    t: Component
    i: Component
    f: Component

    def __post_init__(self):
        if not (type(self.t) is type(self.i) is type(self.f)):
            raise ShapeMismatch(
                "triple components must share one shape, got "
                f"{type(self.t).__name__}/{type(self.i).__name__}/{type(self.f).__name__}"
            )
        for c in (self.t, self.i, self.f):
            if not isinstance(c, Component):
                raise TypeError("triple fields must be components")

    @property
    def shape(self) -> str:
        return {
            SingleValued: "single",
            IntervalValued: "interval",
            Hesitant: "hesitant",
            Nonstandard: "nonstandard",
        }[type(self.t)]

    @classmethod
    def single(cls, t, i, f) -> "NeutroTriple":
        return cls(SingleValued(t), SingleValued(i), SingleValued(f))

    @classmethod
    def nonstandard(cls, t: NsNumber, i: NsNumber, f: NsNumber) -> "NeutroTriple":
        return cls(Nonstandard(t), Nonstandard(i), Nonstandard(f))


@dataclass(frozen=True)
class OffsetBounds:
    """Component range [psi, omega] with psi <= 0 < 1 <= omega."""

    psi: Fraction
    omega: Fraction

    def __post_init__(self):
        object.__setattr__(self, "psi", as_fraction(self.psi))
        object.__setattr__(self, "omega", as_fraction(self.omega))
        if not (self.psi <= 0 < 1 <= self.omega):
            raise ValueError("bounds must satisfy psi <= 0 < 1 <= omega")


UNIT_BOUNDS = OffsetBounds(Fraction(0), Fraction(1))


@dataclass(frozen=True)
class ComponentBounds:
    inf: NsNumber
    sup: NsNumber


def component_bounds(c: Component) -> ComponentBounds:
    """Decorated infimum and supremum of one component."""
    if isinstance(c, SingleValued):
        n = std(c.value)
        return ComponentBounds(n, n)
    if isinstance(c, IntervalValued):
        return ComponentBounds(std(c.lo), std(c.hi))
    if isinstance(c, Hesitant):
        return ComponentBounds(std(c.values[0]), std(c.values[-1]))
    if isinstance(c, Nonstandard):
        los = [m if isinstance(m, NsNumber) else m.lo for m in c.members]
        his = [m if isinstance(m, NsNumber) else m.hi for m in c.members]
        return ComponentBounds(inf_ns_set(los), sup_ns_set(his))
    raise TypeError(f"not a component: {type(c).__name__}")


def triple_sums(x: NeutroTriple) -> tuple[NsNumber, NsNumber]:
    """Decorated lower and upper bounds of T + I + F."""
    bt, bi, bf = (component_bounds(c) for c in (x.t, x.i, x.f))
    n_inf = add_ns(add_ns(bt.inf, bi.inf), bf.inf)
    n_sup = add_ns(add_ns(bt.sup, bi.sup), bf.sup)
    return n_inf, n_sup


@dataclass(frozen=True)
class Violation:
    where: str  # "t" | "i" | "f" | "sum"
    message: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()


def _component_values(c: Component) -> list[Fraction]:
    if isinstance(c, SingleValued):
        return [c.value]
    if isinstance(c, IntervalValued):
        return [c.lo, c.hi]
    if isinstance(c, Hesitant):
        return list(c.values)
    # Range checks look only at underlying values; decorations at the
    # boundary (left monad of psi, right monad of omega) still pass.
    values = []
    for m in c.members:
        if isinstance(m, NsNumber):
            values.append(m.value)
        else:
            values.extend([m.lo.value, m.hi.value])
    return values


def validate(x: NeutroTriple, bounds: OffsetBounds = UNIT_BOUNDS) -> ValidationReport:
    """Check component ranges and the triple sum against the bounds.

    Violations are reported, never raised; offset data is legitimate
    input and the caller decides what to do with a failing report.
    """
    violations: list[Violation] = []
    for where, c in (("t", x.t), ("i", x.i), ("f", x.f)):
        for v in _component_values(c):
            if v < bounds.psi:
                violations.append(
                    Violation(where, f"value {_plain(v)} below lower bound {_plain(bounds.psi)}")
                )
            elif v > bounds.omega:
                violations.append(
                    Violation(where, f"value {_plain(v)} above upper bound {_plain(bounds.omega)}")
                )
    n_inf, n_sup = triple_sums(x)
    lo, hi = 3 * bounds.psi, 3 * bounds.omega
    if n_inf.value < lo:
        violations.append(
            Violation("sum", f"lower sum {_plain(n_inf.value)} below {_plain(lo)}")
        )
    if n_sup.value > hi:
        violations.append(
            Violation("sum", f"upper sum {_plain(n_sup.value)} above {_plain(hi)}")
        )
    return ValidationReport(ok=not violations, violations=tuple(violations))


_TOL = Fraction(1, 10**9)


def _eq(a: Fraction, b) -> bool:
    return abs(a - b) <= _TOL


def _lt(a: Fraction, b) -> bool:
    return a < b and not _eq(a, b)


def _gt(a: Fraction, b) -> bool:
    return a > b and not _eq(a, b)


def classify_logic(t, i, f, scale: str = "unit") -> frozenset[str]:
    """Name every logic whose defining condition the triple satisfies.

    Classification happens on the unit scale; pass scale="percent" for
    degrees quoted out of 100.  Equality is tested at tolerance 1e-9.
    """
    if scale not in ("unit", "percent"):
        raise ValueError("scale must be 'unit' or 'percent'")
    t, i, f = (as_fraction(v) for v in (t, i, f))
    if scale == "percent":
        t, i, f = t / 100, i / 100, f / 100
    n = t + i + f
    labels = set()
    if _gt(n, 0) and _lt(n, 1):
        labels.add("intuitionistic")
    if _eq(n, 1) and _eq(i, 0):
        labels.add("fuzzy")
        if (_eq(t, 0) or _eq(t, 1)) and (_eq(f, 0) or _eq(f, 1)):
            labels.add("boolean")
    if all(not _lt(v, 0) and not _gt(v, 1) for v in (t, i, f)):
        labels.add("multi-valued")
    if _gt(n, 1) and _lt(t, 1) and _lt(f, 1):
        labels.add("paraconsistent")
    if _eq(t, 1) and _eq(f, 1) and _eq(i, 0):
        labels.add("dialetheism")
    if _gt(t, 1):
        labels.add("overtrue")
    return frozenset(labels)


class Role(Enum):
    T = "T"
    I = "I"
    F = "F"


class TruthGrade(Enum):
    ABSOLUTE_TRUTH = "absolute-truth"
    RELATIVE_TRUTH = "relative-truth"
    ABSOLUTE_NEGATIVE = "absolute-negative"
    RELATIVE_NEGATIVE = "relative-negative"
    ORDINARY = "ordinary"


def truth_grade(x: NsNumber, role: Role) -> TruthGrade:
    """Grade a degree as absolute (all worlds) or relative (some world).

    Truth peaks at 1: the right monad of 1 exceeds every world's truth,
    the standard 1 is truth in at least one world.  Falsity and
    indeterminacy grade at their floor 0, where the left monad dips
    below every world's degree.
    """
    if role is Role.T:
        if x.kind is MonadKind.RIGHT and x.value == 1:
            return TruthGrade.ABSOLUTE_TRUTH
        if x.kind is MonadKind.STD and x.value == 1:
            return TruthGrade.RELATIVE_TRUTH
        return TruthGrade.ORDINARY
    if x.kind is MonadKind.LEFT and x.value == 0:
        return TruthGrade.ABSOLUTE_NEGATIVE
    if x.kind is MonadKind.STD and x.value == 0:
        return TruthGrade.RELATIVE_NEGATIVE
    return TruthGrade.ORDINARY


def _scale_component(c: Component, q: Fraction) -> Component:
    if isinstance(c, SingleValued):
        return SingleValued(c.value * q)
    if isinstance(c, IntervalValued):
        return IntervalValued(c.lo * q, c.hi * q)
    if isinstance(c, Hesitant):
        return Hesitant(v * q for v in c.values)
    members = []
    for m in c.members:
        if isinstance(m, NsNumber):
            members.append(NsNumber(m.value * q, m.kind))
        else:
            members.append(
                NsInterval(NsNumber(m.lo.value * q, m.lo.kind), NsNumber(m.hi.value * q, m.hi.kind))
            )
    return Nonstandard(members)


def scale_triple(x: NeutroTriple, factor) -> NeutroTriple:
    """Multiply every degree by a positive factor; decorations stay put.

    Used to canonicalize percent-scale input onto the unit scale.
    """
    q = as_fraction(factor)
    if q <= 0:
        raise ValueError("scale factor must be positive")
    return NeutroTriple(
        _scale_component(x.t, q), _scale_component(x.i, q), _scale_component(x.f, q)
    )
