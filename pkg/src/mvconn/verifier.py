"""Law suites for interval-valued connectives and the full regression run.

Each ``check_*`` function returns a :class:`~mvconn.report.Report`.  On
finite carriers every law is scanned exhaustively; on the unit interval a
seeded sample is used and identities that need set enumeration are
evaluated through their closed forms (which are checked against the
enumeration oracle on finite chains).
"""
from dataclasses import dataclass

from . import connectives as conn
from .errors import InfiniteCarrier, OrderViolation
from .hyperops import HyperConnective, extend_to_sets
from .intervals import all_intervals, contains, interval_leq, make_interval, members, subset
from .lattice import check_demorgan_lattice
from .report import FAIL, PASS, Report, first_failure
from .sampling import DEFAULT, tuples

PAIR_ONLY = "closed form only established for pair-built connectives"
NEEDS_FINITE = "needs set enumeration on a finite carrier"


def _params(H, sampling):
    params = {"carrier": H.carrier.name, "connective": H.name, "mode": H.mode}
    if not H.carrier.finite:
        params.update((sampling or DEFAULT).as_params())
    return params


def _in_extension(H, which, A, B, x):
    """Whether ``x`` lies in the set extension of ``A op B`` (finite carriers)."""
    op = H.op(which)
    return any(contains(H.carrier, op(a, b), x) for a in A for b in B)


def check_hyperops(H, sampling=None):
    """t-norm-like and lattice-like properties of ⊓ and ⊔."""
    L = H.carrier
    m, j, le, neg = L.meet, L.join, L.leq, L.negate
    hm, hj = H.hyper_meet, H.hyper_join
    report = Report("hyperops", params=_params(H, sampling))
    ones, twos, threes = (tuples(L, k, sampling) for k in (1, 2, 3))

    report.add("commutativity", "x ⊓ y = y ⊓ x, x ⊔ y = y ⊔ x",
               first_failure(twos, lambda x, y: hm(x, y) == hm(y, x) and hj(x, y) == hj(y, x)))
    report.add("boundary", "x ∈ 1 ⊓ x, 0 ∈ 0 ⊓ x, x ∈ 0 ⊔ x, 1 ∈ 1 ⊔ x",
               first_failure(ones, lambda x: contains(L, hm(L.top, x), x)
                             and contains(L, hm(L.bottom, x), L.bottom)
                             and contains(L, hj(L.bottom, x), x)
                             and contains(L, hj(L.top, x), L.top)))

    def monotone(x, y, z):
        for a, b in ((x, y), (y, x)):
            if le(a, b) and not (interval_leq(L, hm(a, z), hm(b, z))
                                 and interval_leq(L, hj(a, z), hj(b, z))):
                return False
        return True
    report.add("monotonicity", "x <= y => x ⊓ z ⪯ y ⊓ z, x ⊔ z ⪯ y ⊔ z", first_failure(threes, monotone))

    anchor = "x ⊓ [y,z] = [T(x,y), x ∧ z], x ⊔ [y,z] = [x ∨ y, S(x,z)]"
    if H.generalized:
        report.skip("interval-closed-form", anchor, PAIR_ONLY)
    elif not L.finite:
        report.skip("interval-closed-form", anchor, NEEDS_FINITE)
    else:
        domain = [(x, J) for x in L.elements() for J in all_intervals(L)]
        report.add("interval-closed-form", anchor, first_failure(domain, lambda x, J: (
            members(L, H.meet_on_interval(x, J)) == extend_to_sets(H, "meet", [x], members(L, J))
            and members(L, H.join_on_interval(x, J)) == extend_to_sets(H, "join", [x], members(L, J)))))

    anchor = "(x ⊓ y) ⊓ z = x ⊓ (y ⊓ z) = [T(x,y,z), x ∧ y ∧ z], dually for ⊔"
    if H.generalized:
        report.skip("associativity-closed-form", anchor, PAIR_ONLY)
    elif not L.finite:
        report.skip("associativity-closed-form", anchor, NEEDS_FINITE)
    else:
        def assoc(x, y, z):
            for which, closed in (("meet", H.meet3), ("join", H.join3)):
                op = H.op(which)
                target = members(L, closed(x, y, z))
                if extend_to_sets(H, which, members(L, op(x, y)), [z]) != target:
                    return False
                if extend_to_sets(H, which, [x], members(L, op(y, z))) != target:
                    return False
            return True
        report.add("associativity-closed-form", anchor, first_failure(threes, assoc))

    report.add("idempotent-membership", "x ∈ x ⊓ x, x ∈ x ⊔ x",
               first_failure(ones, lambda x: contains(L, hm(x, x), x) and contains(L, hj(x, x), x)))

    anchor = "x ∈ x ⊓ (x ⊔ y), x ∈ x ⊔ (x ⊓ y)"
    if L.finite:
        report.add("absorption-membership", anchor, first_failure(twos, lambda x, y: (
            _in_extension(H, "meet", [x], members(L, hj(x, y)), x)
            and _in_extension(H, "join", [x], members(L, hm(x, y)), x))))
    elif H.generalized:
        report.skip("absorption-membership", anchor, NEEDS_FINITE)
    else:
        report.add("absorption-membership", anchor, first_failure(twos, lambda x, y: (
            contains(L, H.meet_on_interval(x, hj(x, y)), x)
            and contains(L, H.join_on_interval(x, hm(x, y)), x))))

    report.add("order-compatibility", "x <= y <=> y ∈ x ⊔ y <=> x ∈ x ⊓ y",
               first_failure(twos, lambda x, y: le(x, y) == contains(L, hj(x, y), y) == contains(L, hm(x, y), x)))

    report.extend(check_hyper_duality(H, sampling))

    anchor = "[T(x,y∨z), x∧(y∨z)] ⊆ x⊓(y⊔z) ∩ (x⊓y)⊔(x⊓z), dually"
    if H.generalized:
        report.skip("distributive-inclusions", anchor, PAIR_ONLY)
    else:
        T, S = H.T, H.S

        def inclusions(x, y, z):
            lhs1 = make_interval(L, T(x, j(y, z)), m(x, j(y, z)))
            lhs2 = make_interval(L, j(x, m(y, z)), S(x, m(y, z)))
            if L.finite:
                rhs1 = (extend_to_sets(H, "meet", [x], members(L, hj(y, z)))
                        & extend_to_sets(H, "join", members(L, hm(x, y)), members(L, hm(x, z))))
                rhs2 = (extend_to_sets(H, "join", [x], members(L, hm(y, z)))
                        & extend_to_sets(H, "meet", members(L, hj(x, y)), members(L, hj(x, z))))
                return members(L, lhs1) <= rhs1 and members(L, lhs2) <= rhs2
            return (subset(L, lhs1, H.meet_on_interval(x, hj(y, z)))
                    and subset(L, lhs1, H.join_intervals(hm(x, y), hm(x, z)))
                    and subset(L, lhs2, H.join_on_interval(x, hm(y, z)))
                    and subset(L, lhs2, H.meet_intervals(hj(x, y), hj(x, z))))
        report.add("distributive-inclusions", anchor, first_failure(threes, inclusions))
    return report


def check_hyper_duality(H, sampling=None):
    """``(x ⊔ y)' = x' ⊓ y'`` and ``(x ⊓ y)' = x' ⊔ y'`` as interval identities."""
    report = Report("hyper-duality", params=_params(H, sampling))

    def law(which):
        def predicate(x, y):
            left, right = H.hyper_negate_law(x, y, which)
            return left == right
        return predicate
    twos = tuples(H.carrier, 2, sampling)
    report.add("negated-join", "(x ⊔ y)' = x' ⊓ y'", first_failure(twos, law("join")))
    report.add("negated-meet", "(x ⊓ y)' = x' ⊔ y'", first_failure(twos, law("meet")))
    return report


def check_superlattice(H, sampling=None):
    """Superlattice axioms A1-A5 with ⊓ as the lower and ⊔ as the upper hyperoperation."""
    L = H.carrier
    le = L.leq
    hm, hj = H.hyper_meet, H.hyper_join
    report = Report("superlattice", params=_params(H, sampling))
    ones, twos, threes = (tuples(L, k, sampling) for k in (1, 2, 3))

    report.add("A1", "x ∈ x ⊓ x, x ∈ x ⊔ x",
               first_failure(ones, lambda x: contains(L, hm(x, x), x) and contains(L, hj(x, x), x)))
    report.add("A2", "x ⊓ y = y ⊓ x, x ⊔ y = y ⊔ x",
               first_failure(twos, lambda x, y: hm(x, y) == hm(y, x) and hj(x, y) == hj(y, x)))

    anchor = "(x ⊓ y) ⊓ z = x ⊓ (y ⊓ z), (x ⊔ y) ⊔ z = x ⊔ (y ⊔ z)"
    if L.finite:
        def assoc(x, y, z):
            for which in ("meet", "join"):
                op = H.op(which)
                left = extend_to_sets(H, which, members(L, op(x, y)), [z])
                if left != extend_to_sets(H, which, [x], members(L, op(y, z))):
                    return False
            return True
        report.add("A3", anchor, first_failure(threes, assoc), "set extension")
    elif H.generalized:
        report.skip("A3", anchor, NEEDS_FINITE)
    else:
        report.add("A3", anchor, first_failure(threes, lambda x, y, z: (
            H.meet_on_interval(z, hm(x, y)) == H.meet_on_interval(x, hm(y, z))
            and H.join_on_interval(z, hj(x, y)) == H.join_on_interval(x, hj(y, z)))),
            "closed form on sampled triples")

    anchor = "x ∈ (x ⊓ y) ⊔ x, x ∈ (x ⊔ y) ⊓ x"
    if L.finite:
        report.add("A4", anchor, first_failure(twos, lambda x, y: (
            _in_extension(H, "join", members(L, hm(x, y)), [x], x)
            and _in_extension(H, "meet", members(L, hj(x, y)), [x], x))))
    elif H.generalized:
        report.skip("A4", anchor, NEEDS_FINITE)
    else:
        report.add("A4", anchor, first_failure(twos, lambda x, y: (
            contains(L, H.join_on_interval(x, hm(x, y)), x)
            and contains(L, H.meet_on_interval(x, hj(x, y)), x))))

    report.add("A5", "x <= y <=> y ∈ x ⊔ y <=> x ∈ x ⊓ y",
               first_failure(twos, lambda x, y: le(x, y) == contains(L, hj(x, y), y) == contains(L, hm(x, y), x)))
    return report


@dataclass(frozen=True)
class InducedOrder:
    """``x ⩽ y`` iff ``y ∈ x ⊔ y``."""

    carrier: object
    relation: frozenset

    def leq(self, x, y):
        return (x, y) in self.relation

    @property
    def coincides(self):
        return self.relation == frozenset(self.carrier.order_pairs())


def check_induced_order(H):
    """Axioms A6-A8 and the order they induce; finite carriers only.

    Returns ``(report, order)`` where ``order`` is None unless A1 and A6-A8
    hold and the induced relation is a partial order.
    """
    L = H.carrier
    if not L.finite:
        raise InfiniteCarrier("A6-A8 are checked exhaustively on finite carriers only")
    hm, hj = H.hyper_meet, H.hyper_join
    report = Report("induced-order", params=_params(H, None))
    ones, twos, threes = (tuples(L, k) for k in (1, 2, 3))

    def up(x, y, z):
        return contains(L, hj(x, y), z)

    report.add("A1", "x ∈ x ⊓ x, x ∈ x ⊔ x",
               first_failure(ones, lambda x: contains(L, hm(x, x), x) and up(x, x, x)))
    report.add("A6", "y ∈ x ⊔ y <=> x ∈ x ⊓ y",
               first_failure(twos, lambda x, y: up(x, y, y) == contains(L, hm(x, y), x)))
    report.add("A7", "x ∈ x ⊔ y and y ∈ x ⊔ y => x = y",
               first_failure(twos, lambda x, y: not (up(x, y, x) and up(x, y, y)) or x == y))
    report.add("A8", "x ∈ x ⊔ y and y ∈ y ⊔ z => x ∈ x ⊔ z",
               first_failure(threes, lambda x, y, z: not (up(x, y, x) and up(y, z, y)) or up(x, z, x)))

    relation = frozenset((x, y) for x, y in twos if up(x, y, y))
    order = InducedOrder(L, relation)
    axioms_hold = report.passed
    names = ("reflexive", "antisymmetric", "transitive")
    if axioms_hold:
        rel = order.leq
        report.add("reflexive", "x ⩽ x", first_failure(ones, lambda x: rel(x, x)))
        report.add("antisymmetric", "x ⩽ y and y ⩽ x => x = y",
                   first_failure(twos, lambda x, y: not (rel(x, y) and rel(y, x)) or x == y))
        report.add("transitive", "x ⩽ y and y ⩽ z => x ⩽ z",
                   first_failure(threes, lambda x, y, z: not (rel(x, y) and rel(y, z)) or rel(x, z)))
    else:
        for name in names:
            report.skip(name, "induced relation", "A1/A6-A8 do not all hold")
    first_diff = first_failure(twos, lambda x, y: order.leq(x, y) == L.leq(x, y))
    report.add("coincides-with-order", "x ⩽ y <=> x <= y", first_diff)
    report.params["coincides"] = first_diff is None
    is_order = axioms_hold and all(report[n].verdict == PASS for n in names)
    return report, (order if is_order else None)


def check_order_characterization(quad, sampling=None):
    """``T2 = ∧`` iff ``x <= y <=> x ∈ x ⊓ y``, and dually ``S2 = ∨`` iff the ⊔ form.

    Both sides are theorems, so an inconsistent verdict signals a defect.
    The equivalence is tested on the sampled pairs plus ``(x ∧ y, y)`` for
    each of them, which is where a violation must show whenever ``T2 < ∧``.
    """
    L = quad.carrier
    H = HyperConnective.from_quadruple(quad)
    report = Report("characterization", params=_params(H, sampling))
    base = tuples(L, 2, sampling)
    meet_domain = list(dict.fromkeys(list(base) + [(L.meet(x, y), y) for x, y in base]))
    join_domain = list(dict.fromkeys(list(base) + [(x, L.join(x, y)) for x, y in base]))

    meet_w = first_failure(meet_domain, lambda x, y: L.leq(x, y) == contains(L, H.hyper_meet(x, y), x))
    join_w = first_failure(join_domain, lambda x, y: L.leq(x, y) == contains(L, H.hyper_join(x, y), y))

    for side, is_lattice_op, w, sym, op_name in (
            ("meet-side", quad.t2_is_meet, meet_w, "T2 = ∧", "x ∈ x ⊓ y"),
            ("join-side", quad.s2_is_join, join_w, "S2 = ∨", "y ∈ x ⊔ y")):
        holds = w is None
        consistent = holds == is_lattice_op
        detail = (f"{'consistent' if consistent else 'INCONSISTENT'}: "
                  f"{sym} {'yes' if is_lattice_op else 'no'}; x <= y <=> {op_name} "
                  f"{'holds' if holds else 'fails'}")
        witness = None if consistent else (w or (quad.t2_witness if side == "meet-side" else quad.s2_witness))
        report.add(side, f"{sym} <=> (x <= y <=> {op_name})", witness, detail,
                   verdict=PASS if consistent else FAIL)
        report.params[side] = {"lattice_op": is_lattice_op, "equivalence": holds,
                               "consistent": consistent,
                               "equivalence_witness": None if w is None else [L.render(v) for v in w]}
    return report


def _merge(target, report, prefix):
    target.extend(report, prefix)
    return report.passed


def run_regression(carrier, pair=None, quad=None, sampling=None):
    """Run every applicable suite in dependency order and merge the results.

    Exactly one of ``pair`` (a :class:`ConnectivePair`) or ``quad`` (a
    ``(lower, upper)`` tuple of pairs) must be given.  A suite whose
    prerequisites failed is recorded as skipped.
    """
    if (pair is None) == (quad is None):
        raise ValueError("give exactly one of pair or quad")
    pairs = [pair] if pair is not None else list(quad)
    label = pair.name if pair is not None else ",".join(p.name for p in pairs)
    out = Report("regression", params={"carrier": carrier.name, "connective": label,
                                       "mode": "pair" if pair is not None else "quadruple"})
    if not carrier.finite:
        out.params.update((sampling or DEFAULT).as_params())

    def skip(suite, why):
        out.skip(suite, "", f"skipped: {why}")

    if not _merge(out, check_demorgan_lattice(carrier, sampling), "lattice"):
        for suite in ("connectives", "duality", "distributivity", "hyperops",
                      "superlattice", "induced-order", "characterization"):
            skip(suite, "lattice laws failed")
        return out

    distinct = list({p.name: p for p in pairs}.values())
    axioms_ok = True
    for p in distinct:
        axioms_ok &= _merge(out, conn.check_tnorm(p.T, carrier, sampling), f"tnorm[{p.name}]")
        axioms_ok &= _merge(out, conn.check_tconorm(p.S, carrier, sampling), f"tconorm[{p.name}]")
    if not axioms_ok:
        for suite in ("duality", "distributivity", "hyperops", "superlattice",
                      "induced-order", "characterization"):
            skip(suite, "t-norm/t-conorm axioms failed")
        return out

    dual_ok = dist_ok = True
    for p in distinct:
        _merge(out, conn.check_bounds(p, sampling), f"bounds[{p.name}]")
        dual_ok &= _merge(out, conn.check_duality(p, sampling), f"duality[{p.name}]")
        dist_ok &= _merge(out, conn.check_distributivity(p, sampling), f"distributivity[{p.name}]")

    if pair is not None:
        meet_join = conn.builtin_pair("meet-join", carrier)
        lower, upper = pair, meet_join
    else:
        lower, upper = quad
    try:
        q = conn.make_quadruple(lower, upper, sampling)
    except OrderViolation as e:
        out.add("quadruple-order", "T1 <= T2, S2 <= S1", e.witness, str(e))
        for suite in ("hyperops", "superlattice", "induced-order", "characterization"):
            skip(suite, "quadruple order violated")
        return out
    H = HyperConnective.from_pair(pair) if pair is not None else HyperConnective.from_quadruple(q)

    if not dual_ok:
        skip("hyperops", "duality failed")
        skip("superlattice", "duality failed")
    elif not dist_ok:
        skip("hyperops", "T/S do not distribute over the lattice operations")
        skip("superlattice", "T/S do not distribute over the lattice operations")
    else:
        _merge(out, check_hyperops(H, sampling), "hyperops")
        _merge(out, check_superlattice(H, sampling), "superlattice")
        if carrier.finite:
            _merge(out, check_induced_order(H)[0], "induced-order")
        else:
            skip("induced-order", "exhaustive check needs a finite carrier")
    _merge(out, check_order_characterization(q, sampling), "characterization")
    return out
