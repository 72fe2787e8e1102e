"""Tiny expression language for the ``eval`` command.

Grammar::

    expr     := call | interval | "(" expr ")" | element
    call     := ("meet" | "join" | "hmeet" | "hjoin") "(" expr "," expr ")"
    interval := "[" element "," element "]"

Elements are whatever the carrier can parse: ``3/10`` or ``0.25`` on
rational carriers, ``{a,b}`` on powersets, plain identifiers otherwise.
"""
import re

from .errors import LatticeError, ModeUnsupported
from .hyperops import extend_to_sets
from .intervals import Interval, as_interval, interval_inf, interval_sup, make_interval, members

OPERATORS = ("meet", "join", "hmeet", "hjoin")

_TOKEN = re.compile(r"\s*(?:(?P<punct>[(),\[\]])|(?P<set>\{[^}]*\})|(?P<word>[^\s(),\[\]{}]+))")


class ElementSet(frozenset):
    """Result of a set extension that is not an interval."""


class ExprError(LatticeError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


def tokenize(text):
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ExprError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, carrier):
        self.tokens = tokenize(text)
        self.i = 0
        self.carrier = carrier

    def peek(self):
        return self.tokens[self.i]

    def take(self, value=None):
        tok = self.tokens[self.i]
        if value is not None and tok[1] != value:
            raise ExprError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def element(self):
        kind, value, pos = self.take()
        if kind not in ("word", "set"):
            raise ExprError(f"expected an element, found {value or 'end of input'!r}", pos)
        try:
            return ("elem", self.carrier.parse(value), pos)
        except LatticeError as e:
            raise ExprError(str(e), pos) from None

    def expr(self):
        kind, value, pos = self.peek()
        if value == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if value == "[":
            self.take()
            lo = self.element()
            self.take(",")
            hi = self.element()
            self.take("]")
            return ("interval", (lo, hi), pos)
        if kind == "word" and value in OPERATORS and self.tokens[self.i + 1][1] == "(":
            self.take()
            self.take("(")
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take(")")
            return ("call", (value, left, right), pos)
        return self.element()

    def parse(self):
        node = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ExprError(f"unexpected {value!r}", pos)
        return node


def parse(text, carrier):
    return _Parser(text, carrier).parse()


def evaluate(text, H):
    """Evaluate ``text`` with hyperoperations from ``H``.

    Returns an element, an :class:`Interval`, or an :class:`ElementSet`
    (a set extension that is not an interval).
    """
    return _eval(parse(text, H.carrier), H)


def _eval(node, H):
    kind, payload, pos = node
    L = H.carrier
    if kind == "elem":
        return payload
    if kind == "interval":
        lo, hi = payload
        return make_interval(L, lo[1], hi[1])
    op, left, right = payload
    a, b = _eval(left, H), _eval(right, H)
    try:
        if op in ("meet", "join"):
            return _lattice_op(L, op, a, b, pos)
        return _hyper_op(H, op, a, b)
    except ModeUnsupported as e:
        raise ExprError(str(e), pos) from None


def _is_element(v):
    return not isinstance(v, (Interval, ElementSet))


def _lattice_op(L, op, a, b, pos):
    if _is_element(a) and _is_element(b):
        return L.meet(a, b) if op == "meet" else L.join(a, b)
    if isinstance(a, ElementSet) or isinstance(b, ElementSet):
        raise ExprError(f"{op} is not defined on non-interval sets", pos)
    a = a if isinstance(a, Interval) else make_interval(L, a, a)
    b = b if isinstance(b, Interval) else make_interval(L, b, b)
    try:
        return interval_inf(L, a, b) if op == "meet" else interval_sup(L, a, b)
    except LatticeError as e:
        raise ExprError(str(e), pos) from None


def _hyper_op(H, op, a, b):
    L = H.carrier
    which = "meet" if op == "hmeet" else "join"
    if _is_element(a) and _is_element(b):
        return H.op(which)(a, b)
    if _is_element(b):
        a, b = b, a
    if _is_element(a) and isinstance(b, Interval) and not H.generalized:
        if b.empty:
            return b
        return H.meet_on_interval(a, b) if which == "meet" else H.join_on_interval(a, b)
    if L.finite:
        left = [a] if _is_element(a) else _as_set(L, a)
        result = extend_to_sets(H, which, left, _as_set(L, b))
        return as_interval(L, result) or ElementSet(result)
    if isinstance(a, Interval) and isinstance(b, Interval) and not H.generalized:
        return H.meet_intervals(a, b) if which == "meet" else H.join_intervals(a, b)
    raise ModeUnsupported(f"h{which} of these operands needs a finite carrier")


def _as_set(L, v):
    return v if isinstance(v, ElementSet) else members(L, v)


def render_value(L, v):
    if isinstance(v, Interval):
        return str(v)
    if isinstance(v, ElementSet):
        return "{" + ", ".join(L.render(z) for z in _ordered(L, v)) + "}"
    return L.render(v)


def _ordered(L, zs):
    order = {z: i for i, z in enumerate(L.elements())}
    return sorted(zs, key=order.__getitem__)
