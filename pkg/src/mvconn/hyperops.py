"""Interval-valued connectives.

A :class:`HyperConnective` maps two elements to an interval:

* from a dual pair ``(T, S)``: ``x ⊓ y = [T(x,y), x ∧ y]`` and
  ``x ⊔ y = [x ∨ y, S(x,y)]``;
* from an ordered quadruple: ``x ⊓ y = [T1(x,y), T2(x,y)]`` and
  ``x ⊔ y = [S2(x,y), S1(x,y)]``.

The first form is the quadruple ``(T, S; ∧, ∨)``, so both are stored the
same way and only ``mode`` tells them apart.  Closed forms for an element
against an interval and for three-fold products are only offered in pair
mode; :func:`extend_to_sets` is the brute-force reference for both.
"""
from .connectives import GeneralizedQuadruple
from .errors import EmptyOperand, InfiniteCarrier, ModeUnsupported, UnsupportedCarrier
from .intervals import Interval, interval_negate, make_interval, members

PAIR = "pair"
QUADRUPLE = "quadruple"

MEET_OPS = ("meet", "hmeet", "⊓")
JOIN_OPS = ("join", "hjoin", "⊔")


class HyperConnective:
    def __init__(self, carrier, T1, T2, S1, S2, mode, name):
        self.carrier = carrier
        self.T1, self.T2, self.S1, self.S2 = T1, T2, S1, S2
        self.mode = mode
        self.name = name

    @classmethod
    def from_pair(cls, pair):
        L = pair.carrier
        w = pair.closure_failure()
        if w is not None:
            raise UnsupportedCarrier(
                f"pair {pair.name} is not closed on {L.name}: "
                f"T or S leaves the carrier at ({', '.join(map(L.render, w))})", w)
        return cls(L, pair.T, L.meet, pair.S, L.join, PAIR, pair.name)

    @classmethod
    def from_quadruple(cls, quad: GeneralizedQuadruple):
        return cls(quad.carrier, quad.T1, quad.T2, quad.S1, quad.S2, QUADRUPLE, quad.name)

    @property
    def generalized(self):
        return self.mode == QUADRUPLE

    # the T and S of pair mode
    @property
    def T(self):
        return self.T1

    @property
    def S(self):
        return self.S1

    def __repr__(self):
        return f"HyperConnective({self.name!r}, mode={self.mode}, carrier={self.carrier.name})"

    def hyper_meet(self, x, y):
        self.carrier.check(x, y)
        return make_interval(self.carrier, self.T1(x, y), self.T2(x, y))

    def hyper_join(self, x, y):
        self.carrier.check(x, y)
        return make_interval(self.carrier, self.S2(x, y), self.S1(x, y))

    def op(self, which):
        if which in MEET_OPS:
            return self.hyper_meet
        if which in JOIN_OPS:
            return self.hyper_join
        raise ValueError(f"unknown hyperoperation {which!r}")

    def _pair_mode(self, what):
        if self.generalized:
            raise ModeUnsupported(f"{what} has no closed form for quadruple-built connectives")

    def meet_on_interval(self, x, J):
        """``x ⊓ J`` as an interval; needs the pair to distribute over ∨ and ∧."""
        self._pair_mode("x ⊓ [y, z]")
        if J.empty:
            raise EmptyOperand("x ⊓ [] is undefined")
        self.carrier.check(x)
        L = self.carrier
        return make_interval(L, self.T(x, J.lo), L.meet(x, J.hi))

    def join_on_interval(self, x, J):
        self._pair_mode("x ⊔ [y, z]")
        if J.empty:
            raise EmptyOperand("x ⊔ [] is undefined")
        self.carrier.check(x)
        L = self.carrier
        return make_interval(L, L.join(x, J.lo), self.S(x, J.hi))

    def meet3(self, x, y, z):
        self._pair_mode("x ⊓ y ⊓ z")
        self.carrier.check(x, y, z)
        L = self.carrier
        return make_interval(L, self.T(self.T(x, y), z), L.meet(L.meet(x, y), z))

    def join3(self, x, y, z):
        self._pair_mode("x ⊔ y ⊔ z")
        self.carrier.check(x, y, z)
        L = self.carrier
        return make_interval(L, L.join(L.join(x, y), z), self.S(self.S(x, y), z))

    def meet_intervals(self, A, B):
        """``A ⊓ B`` for two intervals of a chain: ``[T(A.lo, B.lo), A.hi ∧ B.hi]``."""
        self._pair_mode("[a, b] ⊓ [c, d]")
        self._chain_only()
        if A.empty or B.empty:
            return Interval()
        L = self.carrier
        return make_interval(L, self.T(A.lo, B.lo), L.meet(A.hi, B.hi))

    def join_intervals(self, A, B):
        self._pair_mode("[a, b] ⊔ [c, d]")
        self._chain_only()
        if A.empty or B.empty:
            return Interval()
        L = self.carrier
        return make_interval(L, L.join(A.lo, B.lo), self.S(A.hi, B.hi))

    def _chain_only(self):
        if not self.carrier.chain:
            raise ModeUnsupported("interval-by-interval closed forms need a chain carrier")

    def hyper_negate_law(self, x, y, which="join"):
        """Both sides of ``(x ⊔ y)' = x' ⊓ y'`` (or of the dual with ``which="meet"``)."""
        neg = self.carrier.negate
        if which in JOIN_OPS:
            return interval_negate(self.carrier, self.hyper_join(x, y)), self.hyper_meet(neg(x), neg(y))
        return interval_negate(self.carrier, self.hyper_meet(x, y)), self.hyper_join(neg(x), neg(y))


def extend_to_sets(H, which, A, B):
    """``∪ {members(a op b) : a in A, b in B}`` on a finite carrier."""
    L = H.carrier
    if not L.finite:
        raise InfiniteCarrier("set extension needs a finite carrier")
    op = H.op(which)
    out = set()
    for a in A:
        for b in B:
            out |= members(L, op(a, b))
    return frozenset(out)
