import pytest
from hypothesis import given, settings, strategies as st

from syspres.conditions import (
    check_conditions_via_orders,
    check_systolic_conditions,
    prefix_orders,
    witness_cap,
)
from syspres.corpus import corpus_table, f2xf2_table, random_valid_table
from syspres.garside import AmalgamSpec, garside_table
from syspres.table import IDENTITY, InvalidTableError, ProductTable
from syspres.words import counterexample_table

# Frozen direct-checker witnesses of the single failing condition of R_i.
R_WITNESSES = {
    1: (("u", "w", "a", "b", "c", "d"), ("u", "w", "d", "c", "b", "a"),
        ("w", "u", "b", "a", "d", "c"), ("w", "u", "c", "d", "a", "b")),
    2: (("v", "x", "a", "b", "c", "d"), ("v", "x", "b", "a", "d", "c"),
        ("x", "v", "c", "d", "a", "b"), ("x", "v", "d", "c", "b", "a")),
    3: (("u", "v", "x", "b", "c"), ("u", "x", "v", "c", "b")),
    4: (("v", "w", "x", "a", "d"), ("x", "w", "v", "d", "a")),
    5: (("v", "u", "x", "w"), ("v", "w", "x", "u"), ("x", "u", "v", "w"), ("x", "w", "v", "u")),
}


@pytest.mark.parametrize("i", range(1, 6))
def test_counterexample_fails_only_its_condition(i):
    report = check_systolic_conditions(counterexample_table(i))
    assert report.failed == (i,)
    assert report[i].witnesses == R_WITNESSES[i]
    assert report[i].count == len(R_WITNESSES[i])


@pytest.mark.parametrize("i", range(1, 6))
def test_order_checker_on_counterexamples(i):
    assert check_conditions_via_orders(counterexample_table(i)).failed == (i,)


def test_f2xf2_fails_condition_five():
    report = check_systolic_conditions(f2xf2_table())
    assert report.verdicts == (True, True, True, True, False)
    assert report[5].count == 8
    assert report[5].witnesses[0] == ("a", "b", "c", "d")


def test_single_generator_passes():
    t = ProductTable(("a",))
    assert check_systolic_conditions(t).overall
    assert check_conditions_via_orders(t).overall


def test_g33_passes_via_orders():
    assert check_conditions_via_orders(garside_table(AmalgamSpec.of((3, 3)))).overall


def test_gcd_failing_table_fails_condition_three():
    report = check_systolic_conditions(corpus_table("gcd-fail"))
    assert report.failed == (3,)
    assert report[3].witnesses == (("a", "b", "c", "r", "s"), ("a", "c", "b", "s", "r"))


def test_direct_checker_refuses_invalid_table():
    with pytest.raises(InvalidTableError):
        check_systolic_conditions(ProductTable.from_triples("ab", [("a", "b", "a")]))


def test_witness_cap(monkeypatch):
    monkeypatch.setenv("SYSPRES_WITNESS_CAP", "3")
    assert witness_cap() == 3
    res = check_systolic_conditions(f2xf2_table())[5]
    assert len(res.witnesses) == 3 and res.truncated and res.count == 8
    monkeypatch.setenv("SYSPRES_WITNESS_CAP", "lots")
    with pytest.raises(ValueError):
        witness_cap()


def test_prefix_orders_of_g23():
    orders = prefix_orders(garside_table(AmalgamSpec.of((2, 3))))
    a, b, ab = "f1_x1", "f1_x2", "f1_x1_k2"
    assert orders.le_left(IDENTITY, a)
    assert orders.le_left(a, ab) and not orders.le_left(b, ab)
    assert orders.le_right(b, ab) and not orders.le_right(a, ab)
    assert orders.le_left(a, "D") and orders.le_right(a, "D")
    assert orders.violations() == []


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_prefix_orders_are_partial_orders_on_valid_tables(seed):
    orders = prefix_orders(random_valid_table(seed))
    assert orders.violations() == []


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_checkers_agree_per_condition(seed):
    t = random_valid_table(seed)
    assert check_systolic_conditions(t).verdicts == check_conditions_via_orders(t).verdicts


def test_order_checker_reports_defects_on_invalid_tables():
    # a*b = c and c*d = a make a and c mutually below each other
    t = ProductTable.from_triples("a b c d".split(), [("a", "b", "c"), ("c", "d", "a")])
    diags = check_conditions_via_orders(t).diagnostics
    assert any("antisymmetric" in d for d in diags)
