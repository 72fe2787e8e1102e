"""Single-valued t-norms and t-conorms, dual pairs and ordered quadruples."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

from .errors import OrderViolation, UnsupportedCarrier
from .report import Report, first_failure
from .sampling import DEFAULT, tuples

ONE = Fraction(1)
ZERO = Fraction(0)

ARITHMETIC = {
    "lukasiewicz": (lambda x, y: max(ZERO, x + y - 1), lambda x, y: min(ONE, x + y)),
    "product": (lambda x, y: x * y, lambda x, y: x + y - x * y),
    "drastic": (lambda x, y: y if x == 1 else x if y == 1 else ZERO,
                lambda x, y: y if x == 0 else x if y == 0 else ONE),
}
BUILTINS = ("meet-join",) + tuple(ARITHMETIC)


@dataclass(frozen=True)
class ConnectivePair:
    """A t-norm ``T`` and its dual t-conorm ``S`` on ``carrier``."""

    name: str
    T: Callable[[Any, Any], Any] = field(repr=False)
    S: Callable[[Any, Any], Any] = field(repr=False)
    carrier: Any = field(repr=False)

    def closure_failure(self):
        """First pair whose ``T`` or ``S`` value leaves a finite carrier, else None."""
        L = self.carrier
        if not L.finite:
            return None
        return first_failure(tuples(L, 2), lambda x, y: self.T(x, y) in L and self.S(x, y) in L)

    @property
    def closed(self):
        return self.closure_failure() is None


def builtin_pair(name, carrier):
    if name == "meet-join":
        return ConnectivePair(name, carrier.meet, carrier.join, carrier)
    if name not in ARITHMETIC:
        raise KeyError(f"unknown connective pair {name!r}; built-ins are {', '.join(BUILTINS)}")
    if not carrier.numeric:
        raise UnsupportedCarrier(f"{name} needs arithmetic; {carrier.name} has none")
    T, S = ARITHMETIC[name]
    return ConnectivePair(name, T, S, carrier)


def get_pair(name, carrier):
    """A built-in pair, or one defined by tables in the carrier's document."""
    tables = getattr(carrier, "connectives", {}).get(name)
    if tables is not None:
        T, S = tables["T"], tables["S"]
        return ConnectivePair(name, lambda x, y: T[x, y], lambda x, y: S[x, y], carrier)
    return builtin_pair(name, carrier)


def _params(L, sampling):
    params = {"carrier": L.name}
    if not L.finite:
        params.update((sampling or DEFAULT).as_params())
    return params


def _monotone(L, op):
    le = L.leq

    def predicate(x, y, z):
        return not le(x, y) or le(op(x, z), op(y, z))
    return predicate


def _axioms(L, op, unit, suite, sym, sampling):
    report = Report(suite, params=_params(L, sampling))
    report.add("unit", f"{sym}({'1' if unit == L.top else '0'},x) = x",
               first_failure(tuples(L, 1, sampling), lambda x: op(unit, x) == x))
    report.add("commutativity", f"{sym}(x,y) = {sym}(y,x)",
               first_failure(tuples(L, 2, sampling), lambda x, y: op(x, y) == op(y, x)))
    report.add("associativity", f"{sym}(x,{sym}(y,z)) = {sym}({sym}(x,y),z)",
               first_failure(tuples(L, 3, sampling),
                             lambda x, y, z: op(x, op(y, z)) == op(op(x, y), z)))
    report.add("monotonicity", f"x <= y => {sym}(x,z) <= {sym}(y,z)",
               first_failure(tuples(L, 3, sampling), _monotone(L, op)))
    return report


def check_tnorm(T, carrier, sampling=None):
    return _axioms(carrier, T, carrier.top, "tnorm", "T", sampling)


def check_tconorm(S, carrier, sampling=None):
    return _axioms(carrier, S, carrier.bottom, "tconorm", "S", sampling)


def check_duality(pair, sampling=None):
    L, T, S, neg = pair.carrier, pair.T, pair.S, pair.carrier.negate
    report = Report("duality", params={**_params(L, sampling), "pair": pair.name})
    report.add("dual", "T(x,y)' = S(x',y')",
               first_failure(tuples(L, 2, sampling), lambda x, y: neg(T(x, y)) == S(neg(x), neg(y))))
    report.add("dual-inverse", "S(x,y)' = T(x',y')",
               first_failure(tuples(L, 2, sampling), lambda x, y: neg(S(x, y)) == T(neg(x), neg(y))))
    report.add("tnorm-annihilator", "T(0,x) = 0",
               first_failure(tuples(L, 1, sampling), lambda x: T(L.bottom, x) == L.bottom))
    report.add("tconorm-annihilator", "S(1,x) = 1",
               first_failure(tuples(L, 1, sampling), lambda x: S(L.top, x) == L.top))
    return report


def check_distributivity(pair, sampling=None):
    """T and S distribute over join and meet in the first argument."""
    L, T, S, m, j = pair.carrier, pair.T, pair.S, pair.carrier.meet, pair.carrier.join
    report = Report("distributivity", params={**_params(L, sampling), "pair": pair.name,
                                              "chain": bool(L.chain)})
    note = "chain carrier: holds for every monotone pair" if L.chain else ""
    triples = tuples(L, 3, sampling)
    report.add("T-over-join", "T(x v y,z) = T(x,z) v T(y,z)",
               first_failure(triples, lambda x, y, z: T(j(x, y), z) == j(T(x, z), T(y, z))), note)
    report.add("T-over-meet", "T(x ^ y,z) = T(x,z) ^ T(y,z)",
               first_failure(triples, lambda x, y, z: T(m(x, y), z) == m(T(x, z), T(y, z))), note)
    report.add("S-over-join", "S(x v y,z) = S(x,z) v S(y,z)",
               first_failure(triples, lambda x, y, z: S(j(x, y), z) == j(S(x, z), S(y, z))), note)
    report.add("S-over-meet", "S(x ^ y,z) = S(x,z) ^ S(y,z)",
               first_failure(triples, lambda x, y, z: S(m(x, y), z) == m(S(x, z), S(y, z))), note)
    return report


def check_bounds(pair, sampling=None):
    L, T, S, le = pair.carrier, pair.T, pair.S, pair.carrier.leq
    report = Report("bounds", params={**_params(L, sampling), "pair": pair.name})
    ps = tuples(L, 2, sampling)
    report.add("T-below-meet", "T(x,y) <= x ^ y", first_failure(ps, lambda x, y: le(T(x, y), L.meet(x, y))))
    report.add("S-above-join", "x v y <= S(x,y)", first_failure(ps, lambda x, y: le(L.join(x, y), S(x, y))))
    report.add("T-below-left", "T(x,y) <= x", first_failure(ps, lambda x, y: le(T(x, y), x)))
    report.add("S-above-left", "x <= S(x,y)", first_failure(ps, lambda x, y: le(x, S(x, y))))
    return report


@dataclass(frozen=True)
class GeneralizedQuadruple:
    """Two dual pairs with ``T1 <= T2`` and ``S2 <= S1`` pointwise."""

    lower: ConnectivePair
    upper: ConnectivePair
    t2_is_meet: bool
    s2_is_join: bool
    t2_witness: Optional[tuple] = None
    s2_witness: Optional[tuple] = None

    @property
    def name(self):
        return f"{self.lower.name},{self.upper.name}"

    @property
    def carrier(self):
        return self.lower.carrier

    T1 = property(lambda self: self.lower.T)
    S1 = property(lambda self: self.lower.S)
    T2 = property(lambda self: self.upper.T)
    S2 = property(lambda self: self.upper.S)


def make_quadruple(lower, upper, sampling=None):
    """Validate the pointwise order between two pairs and bundle them.

    Raises :class:`OrderViolation` with the first offending ``(x, y)``.
    """
    L = lower.carrier
    if upper.carrier is not L:
        raise UnsupportedCarrier("both pairs must live on the same carrier")
    ps = tuples(L, 2, sampling)
    w = first_failure(ps, lambda x, y: L.leq(lower.T(x, y), upper.T(x, y)))
    if w is not None:
        raise OrderViolation(f"T1 <= T2 fails for ({lower.name}, {upper.name})", w)
    w = first_failure(ps, lambda x, y: L.leq(upper.S(x, y), lower.S(x, y)))
    if w is not None:
        raise OrderViolation(f"S2 <= S1 fails for ({lower.name}, {upper.name})", w)
    tw = first_failure(ps, lambda x, y: upper.T(x, y) == L.meet(x, y))
    sw = first_failure(ps, lambda x, y: upper.S(x, y) == L.join(x, y))
    return GeneralizedQuadruple(lower, upper, tw is None, sw is None, tw, sw)
