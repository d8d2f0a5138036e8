"""Triple-valued logic connectives over three t-norm kernels.

Conjunction always meets T and joins F; disjunction mirrors that.  The
families differ only in how indeterminacy travels:

* t-aligned:  I follows the T column
* f-aligned:  I follows the F column
* plithogenic: I is the even blend of both directions

Negation swaps T and F and implication is definitionally
disj(neg(x), y), in the same family.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import ShapeMismatch, UnsupportedNonstandardConfig
from .monads import MonadKind, NsNumber, add_ns, as_fraction, max_ns, min_ns
from .triples import (
    Hesitant,
    IntervalValued,
    NeutroTriple,
    Nonstandard,
    SingleValued,
)

__all__ = [
    "TNormFamily",
    "OperatorFamily",
    "OperatorConfig",
    "DEFAULT_CONFIG",
    "ClampWarning",
    "tnorm",
    "tconorm",
    "neg",
    "conj",
    "disj",
    "impl",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class TNormFamily(Enum):
    MIN_MAX = "minmax"
    PRODUCT = "product"
    LUKASIEWICZ = "luk"


class OperatorFamily(Enum):
    T_ALIGNED = "ti"
    F_ALIGNED = "if"
    PLITHOGENIC = "plith"


@dataclass(frozen=True)
class OperatorConfig:
    family: OperatorFamily = OperatorFamily.F_ALIGNED
    tnorm: TNormFamily = TNormFamily.MIN_MAX


DEFAULT_CONFIG = OperatorConfig()


class ClampWarning(UserWarning):
    """An offset degree was clamped into [0, 1] for kernel application."""


def tnorm(a, b, family: TNormFamily = TNormFamily.MIN_MAX) -> Fraction:
    """min(a, b) / ab / max(0, a + b - 1) on degrees in [0, 1]."""
    a, b = as_fraction(a), as_fraction(b)
    if family is TNormFamily.MIN_MAX:
        return min(a, b)
    if family is TNormFamily.PRODUCT:
        return a * b
    return max(_ZERO, a + b - _ONE)


def tconorm(a, b, family: TNormFamily = TNormFamily.MIN_MAX) -> Fraction:
    """max(a, b) / a + b - ab / min(1, a + b) on degrees in [0, 1]."""
    a, b = as_fraction(a), as_fraction(b)
    if family is TNormFamily.MIN_MAX:
        return max(a, b)
    if family is TNormFamily.PRODUCT:
        return a + b - a * b
    return min(_ONE, a + b)


def _clamped(v: Fraction) -> Fraction:
    if v < _ZERO or v > _ONE:
        warnings.warn(
            f"degree {float(v)} clamped into [0, 1] for kernel application",
            ClampWarning,
            stacklevel=4,
        )
        return min(max(v, _ZERO), _ONE)
    return v


def neg(x: NeutroTriple) -> NeutroTriple:
    """Swap truth and falsity; indeterminacy stays put.  Any shape."""
    return NeutroTriple(t=x.f, i=x.i, f=x.t)


def conj(x: NeutroTriple, y: NeutroTriple, cfg: OperatorConfig = DEFAULT_CONFIG) -> NeutroTriple:
    return _combine(x, y, cfg, is_conj=True)


def disj(x: NeutroTriple, y: NeutroTriple, cfg: OperatorConfig = DEFAULT_CONFIG) -> NeutroTriple:
    return _combine(x, y, cfg, is_conj=False)


def impl(x: NeutroTriple, y: NeutroTriple, cfg: OperatorConfig = DEFAULT_CONFIG) -> NeutroTriple:
    """x -> y as disj(neg(x), y) in the same family."""
    return disj(neg(x), y, cfg)


def _combine(x: NeutroTriple, y: NeutroTriple, cfg: OperatorConfig, is_conj: bool) -> NeutroTriple:
    if type(x.t) is not type(y.t):
        raise ShapeMismatch(f"operand shapes differ: {x.shape} vs {y.shape}")
    if isinstance(x.t, Nonstandard):
        return _combine_nonstandard(x, y, cfg, is_conj)

    def meet(a, b):
        return tnorm(_clamped(a), _clamped(b), cfg.tnorm)

    def join(a, b):
        return tconorm(_clamped(a), _clamped(b), cfg.tnorm)

    def blend(a, b):
        return (meet(a, b) + join(a, b)) / 2

    t_op, f_op = (meet, join) if is_conj else (join, meet)
    if cfg.family is OperatorFamily.T_ALIGNED:
        i_op = t_op
    elif cfg.family is OperatorFamily.F_ALIGNED:
        i_op = f_op
    else:
        i_op = blend
    return NeutroTriple(
        t=_map2(t_op, x.t, y.t),
        i=_map2(i_op, x.i, y.i),
        f=_map2(f_op, x.f, y.f),
    )


def _map2(op, cx, cy):
    if isinstance(cx, SingleValued):
        return SingleValued(op(cx.value, cy.value))
    if isinstance(cx, IntervalValued):
        # Kernels are monotone in both arguments, so endpointwise
        # application yields the exact image interval.
        return IntervalValued(op(cx.lo, cy.lo), op(cx.hi, cy.hi))
    return Hesitant(op(u, v) for u in cx.values for v in cy.values)


def _ns_operand(c: Nonstandard) -> NsNumber:
    if len(c.members) != 1 or not isinstance(c.members[0], NsNumber):
        raise UnsupportedNonstandardConfig(
            "connectives accept nonstandard components holding exactly one number"
        )
    n = c.members[0]
    if n.kind is MonadKind.BIMONAD:
        raise UnsupportedNonstandardConfig("bimonad operands cannot be ranked by min/max")
    return n


def _ns_half(n: NsNumber) -> NsNumber:
    return NsNumber(n.value / 2, n.kind)


def _combine_nonstandard(
    x: NeutroTriple, y: NeutroTriple, cfg: OperatorConfig, is_conj: bool
) -> NeutroTriple:
    if cfg.tnorm is not TNormFamily.MIN_MAX:
        raise UnsupportedNonstandardConfig(
            "nonstandard operands support only the min/max kernel"
        )

    def blend(a, b):
        return add_ns(_ns_half(min_ns(a, b)), _ns_half(max_ns(a, b)))

    t_op, f_op = (min_ns, max_ns) if is_conj else (max_ns, min_ns)
    if cfg.family is OperatorFamily.T_ALIGNED:
        i_op = t_op
    elif cfg.family is OperatorFamily.F_ALIGNED:
        i_op = f_op
    else:
        i_op = blend
    pairs = [(x.t, y.t, t_op), (x.i, y.i, i_op), (x.f, y.f, f_op)]
    t, i, f = (Nonstandard(op(_ns_operand(cx), _ns_operand(cy))) for cx, cy, op in pairs)
    return NeutroTriple(t=t, i=i, f=f)
