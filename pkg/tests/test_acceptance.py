"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line (shown in the terminal summary
and printed live with ``-s``) and must finish within the time budget.
"""
import itertools
import time
from contextlib import contextmanager
from fractions import Fraction as F

import pytest

import conftest
from mvconn import (UNIT, HyperConnective, boolean, builtin_pair, chain, check_bounds,
                    check_distributivity, check_hyper_duality, check_hyperops,
                    check_order_characterization, check_superlattice, extend_to_sets,
                    load_lattice, make_quadruple, members)
from mvconn.connectives import BUILTINS
from mvconn.errors import BadNegation, NotDistributive, OrderViolation
from mvconn.intervals import all_intervals, contains
from mvconn.sampling import DEFAULT, tuples

BUDGET = 10.0
HALF = F(1, 2)


@contextmanager
def criterion(number, title):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        within = elapsed < BUDGET
        verdict = "PASS" if ok and within else "FAIL"
        line = f"{verdict} criterion {number}: {title} ({elapsed:.2f}s)"
        if ok and not within:
            line += f" exceeded {BUDGET:.0f}s budget"
        conftest.ACCEPTANCE_LINES.append(line)
        print(line)
    assert within, f"criterion {number} took {elapsed:.2f}s"


def pair_hyper(name, L):
    return HyperConnective.from_pair(builtin_pair(name, L))


def test_superlattice_axioms_exhaustive():
    with criterion(1, "A1-A5 exhaustive on bool:3 (meet-join) and chain:11 (lukasiewicz)"):
        for L, name, count in ((boolean(3), "meet-join", 512), (chain(11), "lukasiewicz", 1331)):
            assert len(tuples(L, 3)) == count
            report = check_superlattice(pair_hyper(name, L))
            assert report.passed, report.failures()
            assert [c.name for c in report.checks] == ["A1", "A2", "A3", "A4", "A5"]


def test_closed_forms_match_set_extension():
    with criterion(2, "closed forms equal set extension on chain:11 (lukasiewicz)"):
        L = chain(11)
        H = pair_hyper("lukasiewicz", L)
        elems = L.elements()
        for x in elems:
            for J in all_intervals(L):
                Jset = members(L, J)
                assert members(L, H.meet_on_interval(x, J)) == extend_to_sets(H, "meet", [x], Jset)
                assert members(L, H.join_on_interval(x, J)) == extend_to_sets(H, "join", [x], Jset)
        for x, y, z in itertools.product(elems, repeat=3):
            for which, closed in (("meet", H.meet3), ("join", H.join3)):
                op = H.op(which)
                target = members(L, closed(x, y, z))
                assert extend_to_sets(H, which, members(L, op(x, y)), [z]) == target
                assert extend_to_sets(H, which, [x], members(L, op(y, z))) == target


def test_builtin_pairs_distribute():
    with criterion(3, "all built-in pairs distribute over join and meet on 10,000 rational triples"):
        assert (DEFAULT.samples, DEFAULT.denominator_bound) == (10_000, 64)
        for name in BUILTINS:
            report = check_distributivity(builtin_pair(name, UNIT))
            assert report.passed, (name, report.failures())
            assert report.params["samples"] == 10_000


def test_hyper_duality():
    with criterion(4, "interval deMorgan laws on bool:3, chain:11 and 10,000 product pairs"):
        cases = [(boolean(3), "meet-join"), (chain(11), "meet-join"), (chain(11), "lukasiewicz"),
                 (chain(11), "drastic"), (UNIT, "product")]
        for L, name in cases:
            report = check_hyper_duality(pair_hyper(name, L))
            assert report.passed, (L.name, name, report.failures())
        assert len(tuples(boolean(3), 2)) == 64


def test_distributive_inclusions():
    with criterion(5, "distributive inclusions on chain:11 (lukasiewicz) and 10,000 product triples"):
        for L, name in ((chain(11), "lukasiewicz"), (UNIT, "product")):
            check = check_hyperops(pair_hyper(name, L))["distributive-inclusions"]
            assert check.verdict == "pass", (L.name, check.witness)


def test_order_characterization():
    with criterion(6, "(lukasiewicz, product) fails A5 at x=y=1/2; (lukasiewicz, meet-join) passes; both consistent"):
        luk, prod, mj = (builtin_pair(n, UNIT) for n in ("lukasiewicz", "product", "meet-join"))
        q = make_quadruple(luk, prod)
        H = HyperConnective.from_quadruple(q)
        a5 = check_superlattice(H)["A5"]
        assert a5.witness == (HALF, HALF)
        x, y = a5.witness
        assert H.hyper_meet(x, y).lo == 0 and H.hyper_meet(x, y).hi == F(1, 4)
        assert UNIT.meet(x, y) == HALF and not contains(UNIT, H.hyper_meet(x, y), UNIT.meet(x, y))

        C = chain(11)
        q_mj = make_quadruple(builtin_pair("lukasiewicz", C), builtin_pair("meet-join", C))
        assert check_superlattice(HyperConnective.from_quadruple(q_mj))["A5"].verdict == "pass"

        for quad in (q, make_quadruple(luk, mj), q_mj):
            report = check_order_characterization(quad)
            assert report.passed
            for side in ("meet-side", "join-side"):
                assert report[side].detail.startswith("consistent")


def test_bounds():
    with criterion(7, "T <= meet <= x <= join <= S for every built-in pair"):
        for name in BUILTINS:
            for L in (UNIT, chain(11)):
                report = check_bounds(builtin_pair(name, L))
                assert report.passed, (name, L.name, report.failures())
        assert check_bounds(builtin_pair("meet-join", boolean(3))).passed


def test_negative_controls(fixtures):
    with criterion(8, "M3 rejected, identity negation rejected, (product, lukasiewicz) order violation at 1/2"):
        with pytest.raises(NotDistributive) as exc:
            load_lattice(fixtures / "m3.json")
        x, y, z = exc.value.witness
        M3 = load_lattice(fixtures / "m3.json", validate=False)
        assert M3.meet(x, M3.join(y, z)) != M3.join(M3.meet(x, y), M3.meet(x, z))

        with pytest.raises(BadNegation) as exc:
            load_lattice(fixtures / "bool2_identity.json")
        assert "antitone" in str(exc.value)
        a, b = exc.value.witness
        B = load_lattice(fixtures / "bool2_identity.json", validate=False)
        assert a == B.bottom and B.leq(a, b) and not B.leq(B.negate(b), B.negate(a))

        with pytest.raises(OrderViolation) as exc:
            make_quadruple(builtin_pair("product", UNIT), builtin_pair("lukasiewicz", UNIT))
        assert exc.value.witness == (HALF, HALF)
