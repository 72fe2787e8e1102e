"""deMorgan lattice carriers.

Two kinds of carrier are provided:

* :class:`FiniteLattice` -- an explicit finite lattice built from an order
  relation (covers or full pairs) and a negation map.  Meet and join tables
  are derived from the order and every invariant is checked on
  construction.
* :class:`UnitInterval` -- the chain of exact rationals in ``[0, 1]`` with
  ``min``, ``max`` and ``1 - x``.

:class:`RationalChain` is a finite equidistant grid inside the unit
interval.  Its elements are :class:`~fractions.Fraction` values, so the
arithmetic connectives can be evaluated on it directly.
"""
import itertools
import json
from fractions import Fraction
from functools import cached_property
from pathlib import Path

import networkx as nx

from .sampling import DEFAULT, tuples
from .errors import (BadNegation, ForeignElement, InfiniteCarrier, MalformedDocument,
                     NotALattice, NotDistributive)
from .report import Report, first_failure


def render(x):
    if isinstance(x, frozenset):
        return "{" + ",".join(sorted(map(str, x))) + "}"
    return str(x)


class Carrier:
    """Common interface of finite and infinite carriers."""

    name = "carrier"
    finite = True
    chain = False
    #: elements are fractions in [0, 1] ordered numerically with negation 1 - x
    numeric = False

    def meet(self, x, y):
        raise NotImplementedError

    def join(self, x, y):
        raise NotImplementedError

    def leq(self, x, y):
        raise NotImplementedError

    def negate(self, x):
        raise NotImplementedError

    def elements(self):
        raise InfiniteCarrier(f"{self.name} has no finite enumeration")

    def __contains__(self, x):
        raise NotImplementedError

    def check(self, *xs):
        for x in xs:
            if x not in self:
                raise ForeignElement(f"{render(x)!s} is not an element of {self.name}", (x,))

    def admits(self, v):
        """Whether ``v`` may serve as an interval endpoint on this carrier."""
        return v in self

    def render(self, x):
        return render(x)

    def parse(self, text):
        raise NotImplementedError

    def __len__(self):
        return len(self.elements())


class UnitInterval(Carrier):
    """Exact rationals in ``[0, 1]``."""

    name = "unit"
    finite = False
    chain = True
    numeric = True
    bottom = Fraction(0)
    top = Fraction(1)

    def meet(self, x, y):
        return min(x, y)

    def join(self, x, y):
        return max(x, y)

    def leq(self, x, y):
        return x <= y

    def negate(self, x):
        return 1 - x

    def __contains__(self, x):
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool) and 0 <= x <= 1

    def parse(self, text):
        return _parse_fraction(text, self)

    def __len__(self):
        raise InfiniteCarrier("unit interval is infinite")

    def __repr__(self):
        return "UnitInterval()"


def _parse_fraction(text, carrier):
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ForeignElement(f"cannot read {text!r} as a rational", (text,)) from None
    if not (0 <= value <= 1):
        raise ForeignElement(f"{value} lies outside [0, 1]", (value,))
    return value


class FiniteLattice(Carrier):
    """A finite bounded lattice with a negation map.

    ``leq`` may list covering pairs only; the reflexive-transitive closure
    is taken before anything else.  With ``validate=True`` (the default)
    the constructor raises on the first violated law: :class:`NotALattice`,
    :class:`NotDistributive` or :class:`BadNegation`.  With
    ``validate=False`` only the lattice structure itself is required, which
    lets :func:`check_demorgan_lattice` report on broken negations.
    """

    def __init__(self, elements, leq, negation, name="lattice", validate=True, connectives=None):
        self.name = name
        self._labels = tuple(elements)
        if not self._labels:
            raise NotALattice("a lattice needs at least one element")
        self._index = {x: i for i, x in enumerate(self._labels)}
        if len(self._index) != len(self._labels):
            raise MalformedDocument("duplicate element identifiers")
        n = len(self._labels)

        graph = nx.DiGraph()
        graph.add_nodes_from(range(n))
        for a, b in leq:
            if a not in self._index or b not in self._index:
                raise ForeignElement(f"order pair ({render(a)}, {render(b)}) uses an unknown element", (a, b))
            graph.add_edge(self._index[a], self._index[b])
        closure = nx.transitive_closure(graph, reflexive=True)
        # down[i]: bitmask of j <= i
        self._down = [0] * n
        for a, b in closure.edges:
            self._down[b] |= 1 << a
        for i in range(n):
            for j in range(i + 1, n):
                if self._le(i, j) and self._le(j, i):
                    raise NotALattice("order is not antisymmetric",
                                      (self._labels[i], self._labels[j]))
        self._up = [0] * n
        for i in range(n):
            for j in range(n):
                if self._le(i, j):
                    self._up[i] |= 1 << j

        self._meet = [[0] * n for _ in range(n)]
        self._join = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m = self._extremum(self._down[i] & self._down[j], self._down)
                if m is None:
                    raise NotALattice("no unique greatest lower bound",
                                      (self._labels[i], self._labels[j]))
                s = self._extremum(self._up[i] & self._up[j], self._up)
                if s is None:
                    raise NotALattice("no unique least upper bound",
                                      (self._labels[i], self._labels[j]))
                self._meet[i][j] = self._meet[j][i] = m
                self._join[i][j] = self._join[j][i] = s

        full = (1 << n) - 1
        self.bottom = self.top = None
        for i in range(n):
            if self._up[i] == full:
                self.bottom = self._labels[i]
            if self._down[i] == full:
                self.top = self._labels[i]
        if self.bottom is None or self.top is None:
            raise NotALattice("lattice has no bottom or no top")

        negation = dict(negation)
        missing = [x for x in self._labels if x not in negation]
        if missing:
            raise BadNegation("negation is not defined everywhere", (missing[0],))
        bad = [x for x in self._labels if negation[x] not in self._index]
        if bad:
            raise BadNegation("negation leaves the carrier", (bad[0],))
        self._neg = [self._index[negation[x]] for x in self._labels]
        self.connectives = dict(connectives or {})
        self._between = {}

        if validate:
            self._validate()

    @staticmethod
    def _extremum(mask, cone):
        # the unique element m of mask whose cone equals mask
        found = None
        i = 0
        rest = mask
        while rest:
            if rest & 1 and cone[i] == mask:
                found = i
                break
            rest >>= 1
            i += 1
        return found

    def _le(self, i, j):
        return bool(self._down[j] >> i & 1)

    def _validate(self):
        w = first_failure(tuples(self, 3), self._distributes)
        if w is not None:
            raise NotDistributive("meet does not distribute over join", w)
        for law, _, predicate, arity in _NEGATION_LAWS:
            w = first_failure(tuples(self, arity), predicate(self))
            if w is not None:
                raise BadNegation(f"negation violates {law}", w)

    def _distributes(self, x, y, z):
        return self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))

    # carrier interface

    def elements(self):
        return self._labels

    def __contains__(self, x):
        try:
            return x in self._index
        except TypeError:
            return False

    def index(self, x):
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise ForeignElement(f"{render(x)} is not an element of {self.name}", (x,)) from None

    def meet(self, x, y):
        return self._labels[self._meet[self.index(x)][self.index(y)]]

    def join(self, x, y):
        return self._labels[self._join[self.index(x)][self.index(y)]]

    def leq(self, x, y):
        return self._le(self.index(x), self.index(y))

    def negate(self, x):
        return self._labels[self._neg[self.index(x)]]

    @cached_property
    def chain(self):
        n = len(self._labels)
        return all(self._le(i, j) or self._le(j, i) for i in range(n) for j in range(n))

    def between(self, lo, hi):
        """Frozen set of elements z with lo <= z <= hi (memoized)."""
        key = (lo, hi)
        found = self._between.get(key)
        if found is None:
            found = frozenset(z for z in self._labels if self.leq(lo, z) and self.leq(z, hi))
            self._between[key] = found
        return found

    def parse(self, text):
        text = text.strip()
        for x in self._labels:
            if render(x) == text:
                return x
        raise ForeignElement(f"{text!r} is not an element of {self.name}", (text,))

    def order_pairs(self):
        """The full order relation as a set of label pairs."""
        return {(x, y) for x in self._labels for y in self._labels if self.leq(x, y)}

    def __len__(self):
        return len(self._labels)

    def __repr__(self):
        return f"FiniteLattice({self.name!r}, {len(self)} elements)"


class RationalChain(FiniteLattice):
    """The grid ``{0, 1/(n-1), ..., 1}`` with negation ``1 - x``.

    Order, meet, join and negation also accept off-grid rationals in
    ``[0, 1]``; this is what lets interval endpoints computed by a
    non-closed connective (e.g. the product) be compared with grid points.
    """

    numeric = True

    def __init__(self, n, name=None):
        if n < 2:
            raise ValueError("chain:N requires N >= 2")
        grid = [Fraction(i, n - 1) for i in range(n)]
        super().__init__(grid, zip(grid, grid[1:]), {x: 1 - x for x in grid},
                         name=name or f"chain:{n}", validate=False)

    chain = True

    def admits(self, v):
        return UnitInterval.__contains__(self, v)

    def meet(self, x, y):
        return min(x, y)

    def join(self, x, y):
        return max(x, y)

    def leq(self, x, y):
        return x <= y

    def negate(self, x):
        return 1 - x

    def parse(self, text):
        value = _parse_fraction(text, self)
        self.check(value)
        return value


def chain(n):
    return RationalChain(n)


def boolean(n, letters="abcdefghij"):
    """Powerset of an ``n``-letter alphabet ordered by inclusion, complement as negation."""
    atoms = letters[:n]
    subsets = [frozenset(c) for k in range(n + 1) for c in itertools.combinations(atoms, k)]
    full = frozenset(atoms)
    covers = [(s, s | {a}) for s in subsets for a in atoms if a not in s]
    return FiniteLattice(subsets, covers, {s: full - s for s in subsets}, name=f"bool:{n}")


UNIT = UnitInterval()


def load_lattice(document, validate=True):
    """Build a :class:`FiniteLattice` from a lattice-description document.

    ``document`` is a parsed JSON object, a JSON string, or a path.  The
    optional ``connectives`` field maps names to ``{"T": table, "S": table}``
    where each table is a nested array indexed by element order.
    """
    if isinstance(document, Path) or (isinstance(document, str) and not document.lstrip().startswith("{")):
        try:
            document = Path(document).read_text(encoding="utf-8")
        except OSError as e:
            raise MalformedDocument(f"cannot read lattice document: {e}") from None
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            raise MalformedDocument(f"invalid JSON: {e}") from None
    if not isinstance(document, dict):
        raise MalformedDocument("document must be a JSON object")

    name = document.get("name", "lattice")
    if not isinstance(name, str):
        raise MalformedDocument("field 'name' must be a string")
    elements = document.get("elements")
    if not isinstance(elements, list) or not elements or not all(isinstance(e, str) for e in elements):
        raise MalformedDocument("field 'elements' must be a non-empty array of strings")
    if len(set(elements)) != len(elements):
        raise MalformedDocument("field 'elements' contains duplicates")
    leq = document.get("leq", [])
    if not isinstance(leq, list) or not all(
            isinstance(p, list) and len(p) == 2 and all(isinstance(e, str) for e in p) for p in leq):
        raise MalformedDocument("field 'leq' must be an array of 2-element string arrays")
    for p in leq:
        for e in p:
            if e not in elements:
                raise MalformedDocument(f"field 'leq' mentions unknown element {e!r}")
    negation = document.get("negation")
    if not isinstance(negation, dict):
        raise MalformedDocument("field 'negation' must be an object")
    for k, v in negation.items():
        if k not in elements or v not in elements:
            raise MalformedDocument(f"field 'negation' maps {k!r} -> {v!r} outside the elements")
    if set(negation) != set(elements):
        raise MalformedDocument("field 'negation' must map every element")

    connectives = {}
    raw = document.get("connectives", {})
    if not isinstance(raw, dict):
        raise MalformedDocument("field 'connectives' must be an object")
    n = len(elements)
    for cname, entry in raw.items():
        if not isinstance(entry, dict) or set(entry) - {"T", "S"} or not {"T", "S"} <= set(entry):
            raise MalformedDocument(f"connective {cname!r} must have exactly fields 'T' and 'S'")
        tables = {}
        for key in ("T", "S"):
            table = entry[key]
            if (not isinstance(table, list) or len(table) != n
                    or not all(isinstance(row, list) and len(row) == n for row in table)):
                raise MalformedDocument(f"connectives.{cname}.{key} must be a {n}x{n} array")
            for row in table:
                for e in row:
                    if e not in elements:
                        raise MalformedDocument(f"connectives.{cname}.{key} contains unknown element {e!r}")
            tables[key] = {(elements[i], elements[j]): table[i][j] for i in range(n) for j in range(n)}
        connectives[cname] = tables

    return FiniteLattice(elements, [tuple(p) for p in leq], negation, name=name,
                         validate=validate, connectives=connectives)


def _neg_laws():
    def involution(L):
        return lambda x: L.negate(L.negate(x)) == x

    def antitone(L):
        return lambda x, y: not L.leq(x, y) or L.leq(L.negate(y), L.negate(x))

    def demorgan_meet(L):
        return lambda x, y: L.negate(L.meet(x, y)) == L.join(L.negate(x), L.negate(y))

    def demorgan_join(L):
        return lambda x, y: L.negate(L.join(x, y)) == L.meet(L.negate(x), L.negate(y))

    return (
        ("involution", "(x')' = x", involution, 1),
        ("antitone", "x <= y => y' <= x'", antitone, 2),
        ("demorgan-meet", "(x ^ y)' = x' v y'", demorgan_meet, 2),
        ("demorgan-join", "(x v y)' = x' ^ y'", demorgan_join, 2),
    )


_NEGATION_LAWS = _neg_laws()


def _lattice_laws(L):
    m, j, le = L.meet, L.join, L.leq
    return (
        ("meet-commutative", "x ^ y = y ^ x", 2, lambda x, y: m(x, y) == m(y, x)),
        ("join-commutative", "x v y = y v x", 2, lambda x, y: j(x, y) == j(y, x)),
        ("meet-associative", "(x ^ y) ^ z = x ^ (y ^ z)", 3,
         lambda x, y, z: m(m(x, y), z) == m(x, m(y, z))),
        ("join-associative", "(x v y) v z = x v (y v z)", 3,
         lambda x, y, z: j(j(x, y), z) == j(x, j(y, z))),
        ("absorption", "x ^ (x v y) = x = x v (x ^ y)", 2,
         lambda x, y: m(x, j(x, y)) == x and j(x, m(x, y)) == x),
        ("idempotence", "x ^ x = x = x v x", 1, lambda x: m(x, x) == x and j(x, x) == x),
        ("glb", "x ^ y is the greatest lower bound", 3,
         lambda x, y, z: le(m(x, y), x) and le(m(x, y), y)
         and (not (le(z, x) and le(z, y)) or le(z, m(x, y)))),
        ("lub", "x v y is the least upper bound", 3,
         lambda x, y, z: le(x, j(x, y)) and le(y, j(x, y))
         and (not (le(x, z) and le(y, z)) or le(j(x, y), z))),
        ("order-consistency", "x <= y <=> x ^ y = x <=> x v y = y", 2,
         lambda x, y: le(x, y) == (m(x, y) == x) == (j(x, y) == y)),
        ("bounds", "0 <= x <= 1", 1, lambda x: le(L.bottom, x) and le(x, L.top)),
        ("distributivity", "x ^ (y v z) = (x ^ y) v (x ^ z)", 3,
         lambda x, y, z: m(x, j(y, z)) == j(m(x, y), m(x, z))),
    )


def check_demorgan_lattice(L, sampling=None):
    """Re-verify every deMorgan lattice law on ``L`` and report each one.

    Exhaustive on finite carriers, sampled on the unit interval.
    """
    report = Report("lattice", params={"carrier": L.name})
    if not L.finite:
        report.params.update((sampling or DEFAULT).as_params())
    for name, anchor, arity, predicate in _lattice_laws(L):
        report.add(name, anchor, first_failure(tuples(L, arity, sampling), predicate))
    for name, anchor, factory, arity in _NEGATION_LAWS:
        report.add(name, anchor, first_failure(tuples(L, arity, sampling), factory(L)))
    return report
