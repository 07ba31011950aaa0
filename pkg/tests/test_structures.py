"""Exhaustive checks of the structure container and the axiom checker."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from meadows import (
    AXIOM_NAMES,
    FiniteStructure,
    check_axioms,
    evaluate_axiom,
    is_commutative_ring,
    is_meadow,
    make_gf,
    make_zmod_ring,
    totalize_inverse,
    validate_structure,
)
from meadows.structures import AXIOM_VARIABLES


def z10():
    return totalize_inverse(make_zmod_ring(10))


def test_axiom_name_catalogue():
    assert AXIOM_NAMES == (
        "add-assoc", "add-comm", "add-zero", "add-inverse",
        "mul-assoc", "mul-comm", "mul-one", "distributivity",
        "Ref", "Ril",
    )


def test_structure_equality_and_elements():
    a = z10()
    b = z10()
    assert a == b
    assert a != make_gf(2, 2)
    assert list(a.elements()) == list(range(10))
    assert a.label(3) == "3"


def test_tables_are_read_only():
    m = z10()
    with pytest.raises(ValueError):
        m.add[0, 0] = 5


def test_validate_structure_clean():
    assert validate_structure(z10()) == []


def test_validate_reports_out_of_range():
    m = make_zmod_ring(10)
    add = m.add.copy()
    add[2, 7] = 10
    bad = FiniteStructure(order=10, zero=0, one=1, add=add, mul=m.mul,
                          neg=m.neg, inv=m.inv)
    defects = validate_structure(bad)
    assert any("add[2][7]" in d and "10" in d for d in defects)


def test_validate_reports_bad_constants():
    m = make_zmod_ring(3)
    bad = FiniteStructure(order=3, zero=3, one=1, add=m.add, mul=m.mul,
                          neg=m.neg, inv=m.inv)
    assert any("zero" in d for d in validate_structure(bad))


def test_validate_reports_shape_mismatch():
    m = make_zmod_ring(4)
    bad = FiniteStructure(order=4, zero=0, one=1, add=m.add, mul=m.mul,
                          neg=m.neg, inv=[0, 1, 2])
    assert any("inv" in d for d in validate_structure(bad))


def test_validate_rejects_duplicate_labels():
    m = make_zmod_ring(2)
    bad = FiniteStructure(order=2, zero=0, one=1, add=m.add, mul=m.mul,
                          neg=m.neg, inv=[0, 1], labels=("x", "x"))
    assert any("label" in d for d in validate_structure(bad))


def test_check_axioms_all_pass_on_meadow():
    report = check_axioms(z10())
    assert report.all_pass
    assert report.failed == ()
    assert report.witnesses == {}


def test_identity_inverse_on_z4_fails_ril_with_least_witness():
    # x^-1 = x is not a valid inverse on Z/4: 2*(2*2^-1) = 2*0 = 0 != 2.
    ring = make_zmod_ring(4)
    report = check_axioms(ring)
    assert report.results["Ril"] is False
    assert report.witnesses["Ril"] == (2,)
    assert set(report.failed) == {"Ril"}


def test_witness_is_lexicographically_first():
    # Break commutativity at a late cell and an early cell; the early one wins.
    m = make_zmod_ring(5)
    add = m.add.copy()
    add[1, 3] = 0  # 1+3 is 4; its mirror 3+1 stays 4
    add[4, 2] = 0
    bad = FiniteStructure(order=5, zero=0, one=1, add=add, mul=m.mul,
                          neg=m.neg, inv=m.inv)
    report = check_axioms(bad, axioms=("add-comm",))
    assert report.witnesses["add-comm"] == (1, 3)


def test_check_axioms_subset_only():
    report = check_axioms(make_zmod_ring(4), axioms=("add-assoc", "mul-comm"))
    assert set(report.results) == {"add-assoc", "mul-comm"}
    assert report.all_pass


def test_check_axioms_rejects_invalid_structure():
    m = make_zmod_ring(3)
    bad = FiniteStructure(order=3, zero=0, one=1, add=m.add, mul=m.mul,
                          neg=m.neg, inv=[0, 1, 5])
    with pytest.raises(ValueError):
        check_axioms(bad)


def test_check_axioms_rejects_unknown_name():
    with pytest.raises(ValueError):
        check_axioms(z10(), axioms=("no-such-axiom",))


@pytest.mark.parametrize("axiom", AXIOM_NAMES)
def test_scalar_evaluator_agrees_with_vectorized(axiom):
    """evaluate_axiom is the independent slow route; on a small meadow the
    vectorized verdict must agree with full enumeration."""
    m = totalize_inverse(make_zmod_ring(6))
    arity = len(AXIOM_VARIABLES[axiom])
    holds = all(
        lhs == rhs
        for assignment in itertools.product(range(6), repeat=arity)
        for lhs, rhs in [evaluate_axiom(m, axiom, assignment)]
    )
    assert holds == check_axioms(m, axioms=(axiom,)).results[axiom]


def test_scalar_evaluator_detects_ril_failure():
    ring = make_zmod_ring(4)
    lhs, rhs = evaluate_axiom(ring, "Ril", (2,))
    assert (lhs, rhs) == (0, 2)


def test_is_commutative_ring_and_is_meadow():
    assert is_commutative_ring(make_zmod_ring(4))  # ring, but bad inverse
    assert not is_meadow(make_zmod_ring(4))
    assert is_meadow(z10())
    assert is_meadow(make_gf(3, 2))


def test_order_one_meadow():
    one = FiniteStructure(order=1, zero=0, one=0, add=[[0]], mul=[[0]],
                          neg=[0], inv=[0])
    assert validate_structure(one) == []
    assert is_meadow(one)
