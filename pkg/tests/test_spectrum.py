"""Exact spectrum generation, aggregation, and counting."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import numpy as np

from laakso import (
    ValidationError,
    counting_function,
    dimensions,
    eigenvalue_of_key,
    first_distinct,
    full_spectrum,
    level_spectrum,
    parse_sequence,
    shape_spectrum,
)

TABLE1_MULTIPLICITIES = [1, 3, 1, 8, 1, 3, 26, 3, 1, 8, 1, 3, 38, 3, 1, 8, 1, 3, 86, 3]

sequences = st.sampled_from(["2", "3", "2,3", "3,2", "4", "2,3,4"])


# -- per-shape families ------------------------------------------------------


def test_v_family_alternating_level_one():
    # I_1 = 2: modes (2k+1)^2 pi^2 I_1^2 / 4 = pi^2, 9 pi^2, 25 pi^2, ...
    seq = parse_sequence("2,3")
    assert shape_spectrum("V", seq, 1, 100.0) == [(2, 2), (6, 2)]
    assert shape_spectrum("V", seq, 1, 50.0) == [(2, 2)]


def test_loop_family_empty_for_constant_two():
    seq = parse_sequence("2")
    for n in (1, 2, 3, 5):
        assert shape_spectrum("loop", seq, n, math.inf if n > 3 else 1e9) == []


def test_quarter_cross_family():
    seq = parse_sequence("2,3")
    assert shape_spectrum("cross-quarter", seq, 2, 360.0) == [(6, 1), (12, 1)]
    assert shape_spectrum("cross-quarter", seq, 2, 100.0) == [(6, 1)]


def test_full_cross_is_double_of_quarter_per_cross():
    seq = parse_sequence("3,2")
    for n in (2, 3, 4):
        full = dict(shape_spectrum("cross-full", seq, n, 1e6))
        quarter = dict(shape_spectrum("cross-quarter", seq, n, 1e6))
        assert set(full.values()) == {2 * next(iter(quarter.values()))}


def test_shape_level_compatibility():
    seq = parse_sequence("2,3")
    with pytest.raises(ValidationError):
        shape_spectrum("line", seq, 1, 10.0)
    with pytest.raises(ValidationError):
        shape_spectrum("V", seq, 0, 10.0)
    with pytest.raises(ValidationError):
        shape_spectrum("cross-full", seq, 1, 10.0)
    with pytest.raises(ValidationError):
        shape_spectrum("pentagon", seq, 1, 10.0)


# -- merged tables -----------------------------------------------------------


def test_alternating_low_spectrum():
    table = full_spectrum(parse_sequence("2,3"), 360.0)
    assert [(e.m, e.multiplicity) for e in table.entries] == [
        (0, 1),
        (2, 3),
        (4, 1),
        (6, 8),
        (8, 1),
        (10, 3),
        (12, 26),
    ]
    values = table.values()
    assert values[1] == pytest.approx(9.8696, abs=5e-5)
    assert values[6] == pytest.approx(355.31, abs=5e-3)


def test_alternating_first_twenty_distinct():
    table = first_distinct(parse_sequence("2,3"), 20)
    assert table.multiplicity_list() == TABLE1_MULTIPLICITIES
    for k, e in enumerate(table.entries):
        assert e.value == pytest.approx((k * math.pi) ** 2, abs=5e-3)


def test_alternating_high_multiplicities():
    table = full_spectrum(parse_sequence("2,3"), 3600.0)
    by_m = {e.m: e.multiplicity for e in table.entries}
    assert by_m[24] == 38  # (12 pi)^2
    assert by_m[36] == 86  # (18 pi)^2


def test_tiny_lambda_max_keeps_only_zero():
    table = full_spectrum(parse_sequence("2"), 1.0)
    assert [(e.m, e.multiplicity) for e in table.entries] == [(0, 1)]


def test_level_spectrum_constant_two_level_one():
    table = level_spectrum(parse_sequence("2"), 1, 800.0)
    assert [(e.m, e.multiplicity) for e in table.entries] == [
        (0, 1), (2, 3), (4, 1), (6, 3), (8, 1),
        (10, 3), (12, 1), (14, 3), (16, 1), (18, 3),
    ]


def test_level_zero_is_unit_interval():
    table = level_spectrum(parse_sequence("2,3"), 0, 100.0)
    assert [(e.m, e.multiplicity) for e in table.entries] == [
        (0, 1), (2, 1), (4, 1), (6, 1),
    ]


def test_level_spectrum_converges_to_full():
    seq = parse_sequence("2,3")
    lam = 2000.0
    assert level_spectrum(seq, 12, lam).entries == full_spectrum(seq, lam).entries


def test_explicit_prefix_caps_levels():
    seq = parse_sequence("seq:2,3,2")
    table = full_spectrum(seq, 4000.0)
    assert table.level_cap == 3
    reference = level_spectrum(parse_sequence("2,3"), 3, 4000.0)
    assert [(e.m, e.multiplicity) for e in table.entries] == [
        (e.m, e.multiplicity) for e in reference.entries
    ]


# -- counting function -------------------------------------------------------


def test_counting_small_values():
    table = full_spectrum(parse_sequence("2,3"), 400.0)
    assert counting_function(table, 10.0) == 4
    assert counting_function(table, 0.0) == 1
    assert counting_function(table, 356.0) == 43


def test_counting_beyond_range_raises():
    table = full_spectrum(parse_sequence("2,3"), 400.0)
    with pytest.raises(ValidationError):
        counting_function(table, 401.0)


@given(sequences, st.floats(min_value=1.0, max_value=5e3))
@settings(max_examples=40, deadline=None)
def test_counting_monotone(spec, lam):
    table = full_spectrum(parse_sequence(spec), 5e3)
    assert counting_function(table, lam) <= counting_function(table, 5e3)
    assert counting_function(table, 0.0) == 1


def test_weyl_slope_tracks_spectral_dimension():
    for spec in ("2", "2,3", "3"):
        seq = parse_sequence(spec)
        table = full_spectrum(seq, 1.05e6)
        lams = np.geomspace(1e3, 1e6, 40)
        counts = np.array([counting_function(table, lam) for lam in lams])
        slope = np.polyfit(np.log(lams), np.log(counts), 1)[0]
        expected = dimensions(seq).spectral / 2.0
        assert abs(slope - expected) <= 0.05 * expected


# -- structural invariants ---------------------------------------------------


@given(sequences, st.floats(min_value=50.0, max_value=2e4))
@settings(max_examples=30, deadline=None)
def test_entries_strictly_increasing_and_consistent(spec, lam):
    table = full_spectrum(parse_sequence(spec), lam)
    keys = [e.m for e in table.entries]
    assert keys == sorted(set(keys))
    for e in table.entries:
        assert e.multiplicity == sum(c.count for c in e.contributions) >= 1
        assert e.contributions
        assert e.value == eigenvalue_of_key(e.m)
        assert e.value <= lam


@given(sequences, st.floats(min_value=50.0, max_value=2e4))
@settings(max_examples=30, deadline=None)
def test_aggregation_matches_per_family_recount(spec, lam):
    """Coincident keys merge across families with nothing lost."""
    seq = parse_sequence(spec)
    table = full_spectrum(seq, lam)
    recount: dict[int, int] = {0: 1}
    for m, count in shape_spectrum("line", seq, 0, lam):
        if m:
            recount[m] = recount.get(m, 0) + count
    n = 1
    while eigenvalue_of_key(seq.scale(n)) <= lam:
        shapes = ["V", "loop"] if n == 1 else ["V", "loop", "cross-full", "cross-quarter"]
        for shape in shapes:
            for m, count in shape_spectrum(shape, seq, n, lam):
                recount[m] = recount.get(m, 0) + count
        n += 1
    assert {e.m: e.multiplicity for e in table.entries} == recount


def test_serialization_round_trip_keys():
    import json

    table = full_spectrum(parse_sequence("2,3"), 360.0)
    payload = json.loads(table.to_json())
    assert payload["sequence"] == "2,3"
    assert [int(e["m"]) for e in payload["entries"]] == [e.m for e in table.entries]
    csv_text = table.to_csv()
    assert csv_text.splitlines()[0] == "lambda,multiplicity"
    assert len(csv_text.splitlines()) == len(table.entries) + 1
