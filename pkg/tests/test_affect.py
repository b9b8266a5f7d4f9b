"""Affect mapping, palettes, energy, stress and purpose quantities."""

import datetime as dt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from moodfilm.affect import (
    SCHEMES,
    AffectState,
    Ambience,
    Quadrant,
    StressKind,
    Weather,
    classify_quadrant,
    energy_level,
    palette_for,
    purpose_outcome,
    stress_profile,
    to_affect,
)

from conftest import WEEK_START, make_report

_likert = st.integers(1, 7)


def test_to_affect_examples():
    assert to_affect(4, 4) == AffectState(0.0, 0.0)
    assert to_affect(1, 7) == AffectState(-1.0, 1.0)
    a = to_affect(7, 6)
    assert a.valence == 1.0
    assert a.arousal == pytest.approx(0.667, abs=1e-3)


@given(st.integers(0, 3))
def test_to_affect_odd_symmetry(k):
    plus = to_affect(4 + k, 4 + k)
    minus = to_affect(4 - k, 4 - k)
    assert plus.valence == pytest.approx(-minus.valence)
    assert plus.arousal == pytest.approx(-minus.arousal)


def test_quadrant_examples():
    assert classify_quadrant(AffectState(0, 0)) is Quadrant.CONTENT
    assert classify_quadrant(AffectState(-0.8, 0.6)) is Quadrant.DISTRESSED
    assert classify_quadrant(AffectState(-0.5, -0.5)) is Quadrant.DEPRESSED
    assert classify_quadrant(AffectState(0.5, 0.5)) is Quadrant.EXCITED
    assert classify_quadrant(AffectState(0.5, -0.5)) is Quadrant.CONTENT


@given(st.floats(-1, 1, allow_nan=False), st.floats(-1, 1, allow_nan=False))
@settings(max_examples=300)
def test_quadrant_total(v, a):
    assert classify_quadrant(AffectState(v, a)) in Quadrant


@given(
    st.floats(-1, 1, allow_nan=False),
    st.floats(-1, 1, allow_nan=False),
    st.floats(0.01, 1.0, allow_nan=False),
)
@settings(max_examples=300)
def test_quadrant_scale_invariant_outside_band(v, a, lam):
    scaled = AffectState(v * lam, a * lam)
    if scaled.intensity() > 0.15:
        assert classify_quadrant(scaled) is classify_quadrant(AffectState(v, a))


def test_palette_endpoints_and_interpolation():
    content_lo = palette_for(Quadrant.CONTENT, 0.0)
    scheme = SCHEMES[Quadrant.CONTENT]
    assert content_lo.sky_rgb == scheme.sky_lo
    assert content_lo.fog_density == scheme.fog_lo
    assert content_lo.light_temperature == scheme.temp_lo

    stormy = palette_for(Quadrant.DISTRESSED, 1.0)
    assert stormy.weather is Weather.STORM
    assert stormy.ambience is Ambience.EERIE

    halfway = palette_for(Quadrant.DEPRESSED, 0.5)
    assert halfway.fog_density == pytest.approx(0.45, abs=1e-6)


def test_palette_storm_implies_dark_ambience():
    for q in Quadrant:
        for intensity in (0.0, 0.3, 1.0):
            p = palette_for(q, intensity)
            if p.weather is Weather.STORM:
                assert p.ambience in (Ambience.EERIE, Ambience.RUMBLE)


@given(st.sampled_from(list(Quadrant)), st.floats(0, 1), st.floats(0, 1))
@settings(max_examples=200)
def test_palette_continuous_in_intensity(q, i1, i2):
    a = palette_for(q, i1)
    b = palette_for(q, i2)
    span = abs(i1 - i2)
    assert abs(a.fog_density - b.fog_density) <= 0.7 * span + 1e-9
    assert abs(a.light_temperature - b.light_temperature) <= 1500 * span + 1e-6
    assert a.weather is b.weather


def test_energy_examples():
    full = energy_level(8.0, 7, 60)
    assert full.value == pytest.approx(1.0)
    assert not full.fatigued

    empty = energy_level(0.0, 1, 0)
    assert empty.value == 0.0
    assert empty.fatigued

    short = energy_level(2.0, 1, 0)
    assert short.value == pytest.approx(0.075)
    assert short.fatigued


@given(
    st.floats(0, 16), st.integers(1, 7), st.integers(0, 300),
    st.floats(0, 16), st.integers(1, 7), st.integers(0, 300),
)
@settings(max_examples=200)
def test_energy_monotone(h1, q1, e1, h2, q2, e2):
    if h1 <= h2 and q1 <= q2 and e1 <= e2:
        assert energy_level(h1, q1, e1).value <= energy_level(h2, q2, e2).value + 1e-12


def test_stress_examples():
    none = stress_profile(0, 3)
    assert none.kind is StressKind.NO_STRESSOR and none.intensity == 0.0

    challenge = stress_profile(6, 7)
    assert challenge.kind is StressKind.CHALLENGE
    assert challenge.intensity == pytest.approx(0.857, abs=1e-3)

    assert stress_profile(6, 0).kind is StressKind.THREAT


@given(st.integers(0, 7))
def test_stress_kind_fixed_over_level_when_stressed(handling):
    kinds = {stress_profile(level, handling).kind for level in range(2, 8)}
    assert len(kinds) == 1


@given(st.integers(0, 7), st.integers(0, 7))
@settings(max_examples=100)
def test_stress_intensity_iff_stressor(level, handling):
    response = stress_profile(level, handling)
    assert (response.kind is StressKind.NO_STRESSOR) == (response.intensity == 0.0)


def _purpose_week(i, p, a, days=5):
    return [
        make_report(
            WEEK_START + dt.timedelta(days=d),
            purpose_interest=i, purpose_purposeful=p, purpose_achievement=a,
        )
        for d in range(days)
    ]


def test_purpose_examples():
    floor = purpose_outcome(_purpose_week(1, 1, 1))
    assert floor.score == 0.0
    assert floor.moon_distance_m == 200.0
    assert not floor.reaches_moon

    ceiling = purpose_outcome(_purpose_week(7, 7, 7))
    assert ceiling.score == pytest.approx(1.0)
    assert ceiling.moon_distance_m == pytest.approx(50.0)
    assert ceiling.reaches_moon

    neutral = purpose_outcome(_purpose_week(4, 4, 4))
    assert neutral.score == pytest.approx(0.5)
    assert neutral.reaches_moon  # boundary is inclusive


@given(_likert, _likert, _likert, _likert, _likert, _likert)
@settings(max_examples=100)
def test_purpose_monotone_per_item(i1, p1, a1, i2, p2, a2):
    if i1 <= i2 and p1 <= p2 and a1 <= a2:
        low = purpose_outcome(_purpose_week(i1, p1, a1))
        high = purpose_outcome(_purpose_week(i2, p2, a2))
        assert low.score <= high.score + 1e-12
        assert low.moon_distance_m >= high.moon_distance_m - 1e-9
