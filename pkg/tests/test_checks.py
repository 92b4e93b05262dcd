from fractions import Fraction

import pytest

from skewgrowth.checks import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    check_cancellative,
    check_inversion,
    check_lcm_reduction,
    check_recursion,
    run_all_checks,
)
from skewgrowth.dirichlet import growth_series, series_one
from skewgrowth.models import RewriteModel
from skewgrowth.presentation import parse_presentation
from skewgrowth.towers import skew_growth

LEFT_BAD = parse_presentation("gen a : 1\ngen b : 1\ngen c : 1\nrel a b = a c\n")
RIGHT_BAD = parse_presentation("gen a : 1\ngen b : 1\ngen c : 1\nrel b a = c a\n")


@pytest.fixture(scope="module")
def left_bad_table():
    return RewriteModel(LEFT_BAD, name="left-bad").enumerate_up_to(Fraction(4))


def test_battery_passes_on_builtins(example3_table, braid3_table, free2_table,
                                    zpos_table, mp_table):
    for table in (example3_table, braid3_table, free2_table, zpos_table, mp_table):
        for report in run_all_checks(table):
            assert report.status in (PASS, NOT_APPLICABLE), (table.kind, report)


def test_battery_order_and_names(braid3_table):
    names = [r.name for r in run_all_checks(braid3_table)]
    assert names == ["cancellativity", "inversion", "recursion", "lcm-reduction"]


def test_left_violation_witness(left_bad_table):
    report = check_cancellative(left_bad_table)
    assert report.status == FAIL
    assert report.counterexample == {
        "side": "left", "factor": "a", "first": "b", "second": "c",
        "product_degree": "2",
    }
    assert report.max_degree_verified == Fraction(2)


def test_right_violation_witness():
    table = RewriteModel(RIGHT_BAD).enumerate_up_to(Fraction(4))
    report = check_cancellative(table)
    assert report.status == FAIL
    assert report.counterexample["side"] == "right"
    assert {report.counterexample["first"], report.counterexample["second"]} == {"b", "c"}


def test_inversion_fails_for_noncancellative_input(left_bad_table):
    report = check_inversion(left_bad_table)
    assert report.status == FAIL
    assert report.counterexample["degree"] == "2"
    assert "cancellativity probe: fail" in report.notes


def test_recursion_agrees_with_inversion_on_failure(left_bad_table):
    inversion = check_inversion(left_bad_table)
    recursion = check_recursion(left_bad_table)
    assert recursion.status == FAIL
    assert recursion.max_degree_verified == inversion.max_degree_verified


def test_product_really_deviates(left_bad_table):
    growth = growth_series(left_bad_table)
    skew = skew_growth(left_bad_table)
    from skewgrowth.dirichlet import series_mul

    product = series_mul(growth, skew)
    assert product != series_one(left_bad_table.key_kind, left_bad_table.cutoff)


def test_lcm_reduction_statuses(example3_table, braid3_table, free2_table,
                                zpos_table, mp_table):
    assert check_lcm_reduction(braid3_table).status == PASS
    assert check_lcm_reduction(free2_table).status == PASS
    assert check_lcm_reduction(zpos_table).status == PASS
    assert check_lcm_reduction(example3_table).status == NOT_APPLICABLE
    assert check_lcm_reduction(mp_table).status == NOT_APPLICABLE


def test_lcm_reduction_reports_the_offending_subset(example3_table):
    report = check_lcm_reduction(example3_table)
    assert report.counterexample["subset"] == ["a", "b"]
    assert report.counterexample["minimal_common_multiples"] == ["aa", "ab"]


def test_report_json_schema(braid3_table):
    payload = check_cancellative(braid3_table).to_json()
    assert payload == {
        "name": "cancellativity",
        "status": "pass",
        "max_degree_verified": "8",
        "counterexample": None,
        "notes": "no collision among products of degree <= cutoff",
    }


def test_trivial_table_checks_pass():
    # every generator is heavier than the cutoff: only the unit survives
    table = RewriteModel(parse_presentation("gen a : 9\n")).enumerate_up_to(Fraction(4))
    assert table.n_elements == 1
    skew = skew_growth(table)
    assert skew == series_one(table.key_kind, table.cutoff)
    for report in run_all_checks(table):
        assert report.status in (PASS, NOT_APPLICABLE)


def test_pass_reports_carry_cutoff(zpos_table):
    report = check_recursion(zpos_table)
    assert report.status == PASS
    assert report.max_degree_verified == 30
