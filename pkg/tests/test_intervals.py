"""Compatibility predicate: truth table, laws, and wire format."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from shiftrigid.intervals import (
    NEG_INF,
    POS_INF,
    Endpoint,
    Interval,
    first_incompatible_pair,
    is_compatible,
    is_rigid,
)


def iv(lo, lo_closed, hi, hi_closed) -> Interval:
    def ep(x):
        if x == "-inf":
            return NEG_INF
        if x == "+inf":
            return POS_INF
        if isinstance(x, tuple):
            return Endpoint.gap(x[0], x[1])
        return Endpoint.grid(x)

    return Interval(ep(lo), lo_closed, ep(hi), hi_closed)


# One row per configuration of the predicate: (I, J, compatible).
# C/O mark closed/open ends; gap points are written (index, offset).
TRUTH_TABLE = [
    # nesting, including shared endpoints with compatible boundaries
    (iv(0, True, 2, True), iv(1, True, 1, True), True),           # point inside
    (iv(0, True, 2, True), iv(0, False, 1, True), True),          # shared lo, inner open
    (iv(0, True, 1, True), iv(0, True, 2, False), True),          # shared lo, both closed
    (iv(0, False, 2, False), iv(0, False, 2, False), True),       # equal intervals
    (iv("-inf", False, 1, False), iv(0, True, 1, False), True),   # ray over finite
    (iv("-inf", False, "+inf", False), iv(0, True, 0, True), True),  # line over point
    (iv("-inf", False, "+inf", False), iv(2, False, "+inf", False), True),  # line over ray
    # separation by a nonempty gap
    (iv(0, True, 1, True), iv(2, True, 3, True), True),
    (iv(0, True, 1, True), iv((1, Fraction(1, 2)), False, 2, True), True),
    (iv("-inf", False, 0, True), iv(1, False, "+inf", False), True),
    # touching at one endpoint: compatible only when open on both sides
    (iv(0, True, 1, False), iv(1, False, 2, True), True),
    (iv(0, True, 1, False), iv(1, True, 2, True), False),
    (iv(0, True, 1, True), iv(1, False, 2, True), False),
    (iv(0, True, 1, True), iv(1, True, 2, True), False),
    (iv("-inf", False, 0, True), iv(0, True, "+inf", False), False),
    (iv("-inf", False, 0, False), iv(0, False, "+inf", False), True),
    # crossings
    (iv(0, True, 2, True), iv(1, True, 3, True), False),
    (iv(0, True, 2, False), iv(1, False, 3, False), False),
    (iv("-inf", False, 1, True), iv(0, True, 2, True), False),
    (iv(0, True, "+inf", False), iv(1, True, 1, True), True),      # nested, not crossing
    (iv("-inf", False, 1, False), iv(0, False, "+inf", False), False),
    # shared endpoint, boundaries forcing a proper overlap (not nested)
    (iv(0, True, 1, True), iv(0, False, 2, True), False),
    (iv(0, True, 2, False), iv(1, True, 2, True), False),
]


@pytest.mark.parametrize("a,b,expect", TRUTH_TABLE)
def test_truth_table(a, b, expect):
    assert is_compatible(a, b) is expect


def test_grid_examples_from_worked_cases():
    # touching grid intervals, both open at the contact point
    assert is_compatible(iv(0, True, 1, False), iv(1, False, 2, True))
    # same contact, closed on both sides
    assert not is_compatible(iv(0, True, 1, True), iv(1, True, 2, True))
    # a ray over a half-open interval it contains
    assert is_compatible(iv("-inf", False, 1, False), iv(0, True, 1, False))
    # nested with a shared closed left end
    assert is_compatible(iv(0, True, 2, True), iv(0, False, 1, True))
    assert is_compatible(iv(0, True, 1, True), iv(0, True, 2, False))
    # proper crossing
    assert not is_compatible(iv(0, True, 2, True), iv(1, True, 3, True))


def test_rigid_list_and_witness():
    items = [iv(0, True, 1, False), iv(1, False, 2, True), iv("-inf", False, 2, True)]
    assert is_rigid(items)
    items.append(iv(1, True, 3, True))
    assert not is_rigid(items)
    pair = first_incompatible_pair(items)
    assert pair is not None
    i, j = pair
    assert not is_compatible(items[i], items[j])


def test_self_pair_convention():
    a = iv(0, False, (0, Fraction(2, 3)), True)
    assert is_compatible(a, a)
    assert is_rigid([a, a])


def test_validation_rejects_malformed():
    with pytest.raises(ValueError):
        iv(1, True, 0, True)  # reversed
    with pytest.raises(ValueError):
        iv(0, True, 0, False)  # half-open point
    with pytest.raises(ValueError):
        Endpoint.gap(0, Fraction(3, 2))  # offset outside the gap
    with pytest.raises(ValueError):
        Endpoint.gap(0, 0)
    with pytest.raises(ValueError):
        Interval(POS_INF, False, POS_INF, False)


def test_infinite_ends_normalized_open():
    a = Interval(NEG_INF, True, Endpoint.grid(0), True)
    assert a.lo_closed is False
    b = Interval(Endpoint.grid(0), True, POS_INF, True)
    assert b.hi_closed is False


# -- hypothesis strategies --------------------------------------------------

_offsets = st.sampled_from([Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(3, 4)])


@st.composite
def endpoints(draw):
    kind = draw(st.sampled_from(["grid", "gap", "ninf", "pinf"]))
    if kind == "ninf":
        return NEG_INF
    if kind == "pinf":
        return POS_INF
    i = draw(st.integers(-4, 4))
    if kind == "grid":
        return Endpoint.grid(i)
    return Endpoint.gap(i, draw(_offsets))


@st.composite
def intervals(draw):
    a = draw(endpoints())
    b = draw(endpoints())
    if b.key() < a.key():
        a, b = b, a
    if a.band == 2 or b.band == 0:
        a, b = NEG_INF, POS_INF
    if a.key() == b.key():
        if not a.is_finite:
            b = POS_INF if a.band == 0 else a
            a = NEG_INF
            return Interval(a, False, b, False)
        return Interval.point(a)
    lo_closed = draw(st.booleans()) if a.is_finite else False
    hi_closed = draw(st.booleans()) if b.is_finite else False
    return Interval(a, lo_closed, b, hi_closed)


@given(intervals(), intervals())
def test_compatibility_symmetric(a, b):
    assert is_compatible(a, b) == is_compatible(b, a)


@given(intervals())
def test_compatibility_reflexive(a):
    assert is_compatible(a, a)


@given(intervals())
def test_json_round_trip(a):
    assert Interval.from_json(a.to_json()) == a


@given(intervals(), intervals(), st.lists(st.integers(-50, 50), min_size=18, max_size=18, unique=True))
def test_order_invariance(a, b, image):
    """The verdict depends only on the relative order of the endpoint data."""
    keys = sorted({e.key() for e in (a.lo, a.hi, b.lo, b.hi) if e.is_finite})
    image = sorted(image)[: len(keys)]
    relabel = {k: Endpoint.grid(v) for k, v in zip(keys, image)}

    def move(e: Endpoint) -> Endpoint:
        return relabel[e.key()] if e.is_finite else e

    a2 = Interval(move(a.lo), a.lo_closed, move(a.hi), a.hi_closed)
    b2 = Interval(move(b.lo), b.lo_closed, move(b.hi), b.hi_closed)
    assert is_compatible(a, b) == is_compatible(a2, b2)


@given(intervals(), intervals(), st.integers(-3, 3))
def test_joint_shift_invariance(a, b, k):
    assert is_compatible(a, b) == is_compatible(a.shifted(k), b.shifted(k))
