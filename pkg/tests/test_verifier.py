import json
from fractions import Fraction as F

import pytest

from mvconn import (UNIT, HyperConnective, Report, Sampling, builtin_pair, chain, check_hyper_duality,
                    check_hyperops, check_induced_order, check_order_characterization,
                    check_superlattice, load_lattice, make_quadruple, run_regression)
from mvconn.errors import InfiniteCarrier
from mvconn.intervals import contains
from mvconn.report import FAIL, PASS, SKIP

HALF = F(1, 2)
SMALL = Sampling(samples=1_000, seed=5)


def quad(lower, upper, L):
    return make_quadruple(builtin_pair(lower, L), builtin_pair(upper, L))


def pair_hyper(name, L):
    return HyperConnective.from_pair(builtin_pair(name, L))


@pytest.mark.parametrize("name", ["meet-join", "lukasiewicz", "drastic"])
def test_superlattice_holds_on_c11(name, c11):
    report = check_superlattice(pair_hyper(name, c11))
    assert report.passed, report.failures()
    assert [c.name for c in report.checks] == ["A1", "A2", "A3", "A4", "A5"]


def test_superlattice_on_cube(bool3):
    assert check_superlattice(pair_hyper("meet-join", bool3)).passed


def test_superlattice_on_unit_uses_closed_forms(prod_unit):
    report = check_superlattice(HyperConnective.from_pair(prod_unit), SMALL)
    assert report.passed
    assert report["A3"].detail == "closed form on sampled triples"
    assert report.params["samples"] == 1_000


def test_generalized_quadruple_fails_a5_at_half():
    H = HyperConnective.from_quadruple(quad("lukasiewicz", "product", UNIT))
    report = check_superlattice(H, SMALL)
    assert report["A5"].witness == (HALF, HALF)
    assert report["A3"].verdict == SKIP
    x, y = report["A5"].witness
    # re-evaluate the witness: x <= y, yet x is outside [T1, T2] = [0, 1/4]
    assert UNIT.leq(x, y) and not contains(UNIT, H.hyper_meet(x, y), x)


def test_generalized_quadruple_on_c11_witnesses_reproduce(c11):
    H = HyperConnective.from_quadruple(quad("lukasiewicz", "product", c11))
    report = check_superlattice(H)
    assert not report.passed
    x, y = report["A5"].witness
    hm, hj = H.hyper_meet(x, y), H.hyper_join(x, y)
    assert not (c11.leq(x, y) == contains(c11, hj, y) == contains(c11, hm, x))


def test_lukasiewicz_meet_join_quadruple_is_pair_mode(c11):
    q = quad("lukasiewicz", "meet-join", c11)
    Hq = HyperConnective.from_quadruple(q)
    Hp = pair_hyper("lukasiewicz", c11)
    for x in c11.elements():
        for y in c11.elements():
            assert Hq.hyper_meet(x, y) == Hp.hyper_meet(x, y)
            assert Hq.hyper_join(x, y) == Hp.hyper_join(x, y)
    assert check_superlattice(Hq)["A5"].verdict == PASS


def test_hyperops_report_on_c11(c11):
    report = check_hyperops(pair_hyper("lukasiewicz", c11))
    assert report.passed
    names = {c.name for c in report.checks}
    assert {"interval-closed-form", "associativity-closed-form", "negated-join",
            "distributive-inclusions"} <= names


def test_hyperops_skips_closed_forms_in_quadruple_mode(c11):
    report = check_hyperops(HyperConnective.from_quadruple(quad("lukasiewicz", "product", c11)))
    assert report["interval-closed-form"].verdict == SKIP
    assert report["distributive-inclusions"].verdict == SKIP


def test_hyper_duality_product_unit(prod_unit):
    assert check_hyper_duality(HyperConnective.from_pair(prod_unit), SMALL).passed


def test_order_characterization_consistent():
    for lower, upper in (("lukasiewicz", "product"), ("lukasiewicz", "meet-join"), ("drastic", "product")):
        report = check_order_characterization(quad(lower, upper, UNIT), SMALL)
        assert report.passed, (lower, upper)
        assert report["meet-side"].detail.startswith("consistent")
    report = check_order_characterization(quad("lukasiewicz", "product", UNIT), SMALL)
    assert report.params["meet-side"]["lattice_op"] is False
    assert report.params["meet-side"]["equivalence"] is False
    report = check_order_characterization(quad("lukasiewicz", "meet-join", UNIT), SMALL)
    assert report.params["join-side"]["equivalence"] is True


def test_order_characterization_degenerate():
    # T1 = T2 = meet: every hyper-meet is a single point
    report = check_order_characterization(quad("meet-join", "meet-join", UNIT), SMALL)
    assert report.passed
    assert report.params["meet-side"]["lattice_op"] is True


def test_induced_order_coincides(bool3, c5):
    for L in (bool3, c5, chain(2)):
        for name in ("meet-join",) if L is bool3 else ("meet-join", "lukasiewicz"):
            report, order = check_induced_order(pair_hyper(name, L))
            assert report.passed
            assert order is not None and order.coincides
            assert report.params["coincides"]


def test_induced_order_reports_generalized_failure(c11):
    H = HyperConnective.from_quadruple(quad("lukasiewicz", "product", c11))
    report, order = check_induced_order(H)
    assert not report.passed
    assert order is None
    skipped = [c.name for c in report.checks if c.verdict == SKIP]
    assert skipped in ([], ["reflexive", "antisymmetric", "transitive"])


def test_induced_order_needs_finite(luk_unit):
    with pytest.raises(InfiniteCarrier):
        check_induced_order(HyperConnective.from_pair(luk_unit))


def test_regression_cube(bool3):
    report = run_regression(bool3, pair=builtin_pair("meet-join", bool3))
    assert report.passed
    assert not [c for c in report.checks if c.verdict == SKIP]


def test_regression_c11_lukasiewicz(c11):
    assert run_regression(c11, pair=builtin_pair("lukasiewicz", c11)).passed


def test_regression_quadruple_c11(c11):
    report = run_regression(c11, quad=(builtin_pair("lukasiewicz", c11), builtin_pair("product", c11)))
    assert not report.passed
    assert report["superlattice.A5"].verdict == FAIL
    assert report["characterization.meet-side"].verdict == PASS


def test_regression_order_violation_skips_rest():
    report = run_regression(UNIT, quad=(builtin_pair("product", UNIT), builtin_pair("lukasiewicz", UNIT)),
                            sampling=SMALL)
    assert report["quadruple-order"].witness == (HALF, HALF)
    assert report["superlattice"].verdict == SKIP


def test_regression_bad_lattice_skips(fixtures):
    L = load_lattice(fixtures / "bool2_identity.json", validate=False)
    report = run_regression(L, pair=builtin_pair("meet-join", L))
    assert report["lattice.antitone"].verdict == FAIL
    assert report["hyperops"].verdict == SKIP


def test_regression_needs_exactly_one(c5):
    with pytest.raises(ValueError):
        run_regression(c5)


def test_report_json_round_trip(c11):
    report = run_regression(c11, quad=(builtin_pair("lukasiewicz", c11), builtin_pair("product", c11)))
    back = Report.from_dict(json.loads(report.to_json(c11.render)))
    assert back.passed == report.passed
    assert [c.name for c in back.checks] == [c.name for c in report.checks]
    assert back["superlattice.A5"].witness == tuple(c11.render(v) for v in report["superlattice.A5"].witness)
