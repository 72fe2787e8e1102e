"""Lattice intervals ``[lo, hi] = {z : lo <= z <= hi}`` and the empty interval."""
from dataclasses import dataclass
from typing import Any

from .errors import EmptyOperand, ForeignElement, InfiniteCarrier
from .lattice import render


@dataclass(frozen=True)
class Interval:
    lo: Any = None
    hi: Any = None

    @property
    def empty(self):
        return self.lo is None

    def __str__(self):
        if self.empty:
            return "[]"
        return f"[{render(self.lo)}, {render(self.hi)}]"

    def __repr__(self):
        return f"Interval({self})"


EMPTY = Interval()


def _admit(L, *vs):
    for v in vs:
        if not L.admits(v):
            raise ForeignElement(f"{render(v)} is not an element of {L.name}", (v,))


def make_interval(L, lo, hi):
    """``[lo, hi]`` if ``lo <= hi`` in ``L``, otherwise :data:`EMPTY`."""
    _admit(L, lo, hi)
    return Interval(lo, hi) if L.leq(lo, hi) else EMPTY


def point(L, x):
    return make_interval(L, x, x)


def _nonempty(*intervals):
    for a in intervals:
        if a.empty:
            raise EmptyOperand("operation is undefined on the empty interval")


def interval_leq(L, a, b):
    """Endpoint-wise order on non-empty intervals."""
    _nonempty(a, b)
    return L.leq(a.lo, b.lo) and L.leq(a.hi, b.hi)


def interval_inf(L, a, b):
    _nonempty(a, b)
    return Interval(L.meet(a.lo, b.lo), L.meet(a.hi, b.hi))


def interval_sup(L, a, b):
    _nonempty(a, b)
    return Interval(L.join(a.lo, b.lo), L.join(a.hi, b.hi))


def interval_negate(L, a):
    if a.empty:
        return EMPTY
    return Interval(L.negate(a.hi), L.negate(a.lo))


def contains(L, a, z):
    return not a.empty and L.leq(a.lo, z) and L.leq(z, a.hi)


def members(L, a):
    """The finite set ``{z : lo <= z <= hi}``."""
    if not L.finite:
        raise InfiniteCarrier(f"cannot enumerate an interval of {L.name}")
    if a.empty:
        return frozenset()
    return L.between(a.lo, a.hi)


def all_intervals(L, include_empty=False):
    """Every non-empty interval of a finite carrier, in element order."""
    out = [Interval(x, y) for x in L.elements() for y in L.elements() if L.leq(x, y)]
    if include_empty:
        out.append(EMPTY)
    return out


def subset(L, a, b):
    """Set inclusion of interval ``a`` in interval ``b`` on a chain or finite carrier."""
    if a.empty:
        return True
    if L.finite:
        return members(L, a) <= members(L, b)
    return not b.empty and L.leq(b.lo, a.lo) and L.leq(a.hi, b.hi)


def as_interval(L, zs):
    """The interval whose member set is ``zs``, or None if ``zs`` is not an interval."""
    zs = frozenset(zs)
    if not zs:
        return EMPTY
    lo = hi = None
    for z in zs:
        lo = z if lo is None else L.meet(lo, z)
        hi = z if hi is None else L.join(hi, z)
    candidate = Interval(lo, hi)
    return candidate if members(L, candidate) == zs else None
