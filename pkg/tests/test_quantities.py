"""Quantity normalization tests."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pickplace.quantities import DIMENSION_UNITS, UNIT_SCALE, Quantity


@pytest.mark.parametrize(
    "quantity,base",
    [
        (Quantity(25, "g", "oak"), Fraction(25)),
        (Quantity(15, "kg", "cedar"), Fraction(15000)),
        (Quantity(500, "mg", "steel"), Fraction(1, 2)),
        (Quantity(30, "cm", "rope"), Fraction(3, 10)),
        (Quantity(2, "m", "wire"), Fraction(2)),
        (Quantity(750, "ml", "milk"), Fraction(3, 4)),
        (Quantity(18, None, "marbles"), Fraction(18)),
    ],
)
def test_normalization_table(quantity, base):
    assert quantity.normalized == base


def test_cross_unit_ordering():
    # grams beat kilograms only when the numbers say so
    assert Quantity(25, "g", "oak").normalized < Quantity(15, "kg", "cedar").normalized
    assert Quantity(1, "kg", "a").normalized == Quantity(1000, "g", "b").normalized


def test_names():
    assert Quantity(25, "g", "oak").compact_name == "25g of oak"
    assert Quantity(25, "g", "oak").spaced_name == "25 g of oak"
    assert Quantity(18, None, "marbles").compact_name == "18 marbles"
    assert Quantity(18, None, "marbles").spaced_name == "18 marbles"


def test_dimensions():
    assert Quantity(1, "kg", "x").dimension == "mass"
    assert Quantity(1, "cm", "x").dimension == "length"
    assert Quantity(1, "l", "x").dimension == "volume"
    assert Quantity(1, None, "x").dimension == "count"


def test_every_unit_has_a_dimension_and_scale():
    for units in DIMENSION_UNITS.values():
        for unit in units:
            assert unit in UNIT_SCALE


@given(
    count=st.integers(min_value=1, max_value=99),
    dimension=st.sampled_from(sorted(DIMENSION_UNITS)),
)
def test_scaling_respects_unit_ladders(count, dimension):
    """Within a dimension, a bigger unit never normalizes smaller."""
    units = DIMENSION_UNITS[dimension]
    values = [Quantity(count, u, "x").normalized for u in units]
    assert values == sorted(values)
    assert len(set(values)) == len(values)
