"""Mapping from survey answers to affect, palette, energy, stress and purpose.

All functions are stateless and pure. The palette scheme endpoints are the
published constants in docs/palettes.md; the viewer reproduces colors from
the emitted script, never from this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .survey import DailyReport

NEUTRAL_BAND = 0.15  # max(|v|,|a|) at or below this reads as a calm day

# energy_level weights and fatigue thresholds (documented constants)
ENERGY_W_QUALITY = 0.4
ENERGY_W_HOURS = 0.3
ENERGY_W_EXERCISE = 0.3
FULL_SLEEP_HOURS = 8.0
FULL_EXERCISE_MINUTES = 60.0
FATIGUE_SLEEP_HOURS = 6.0
FATIGUE_ENERGY = 0.3

# purpose -> moon geometry
MOON_FAR_M = 200.0
MOON_SPAN_M = 150.0
MOON_REACH_SCORE = 0.5  # inclusive: a fully neutral week still ends hopefully


@dataclass(frozen=True)
class AffectState:
    valence: float  # [-1, 1]
    arousal: float  # [-1, 1]

    def intensity(self) -> float:
        return max(abs(self.valence), abs(self.arousal))


class Quadrant(str, Enum):
    EXCITED = "excited"
    DISTRESSED = "distressed"
    DEPRESSED = "depressed"
    CONTENT = "content"


class Weather(str, Enum):
    CLEAR = "clear"
    MIST = "mist"
    OVERCAST = "overcast"
    STORM = "storm"


class Ambience(str, Enum):
    BIRDS_BREEZE = "birds_breeze"
    WIND = "wind"
    EERIE = "eerie"
    RUMBLE = "rumble"


@dataclass(frozen=True)
class Palette:
    sky_rgb: tuple[float, float, float]
    fog_density: float  # [0, 1]
    light_temperature: float  # Kelvin, [2000, 10000]
    weather: Weather
    ambience: Ambience


@dataclass(frozen=True)
class _Scheme:
    sky_lo: tuple[float, float, float]
    sky_hi: tuple[float, float, float]
    fog_lo: float
    fog_hi: float
    temp_lo: float
    temp_hi: float
    weather: Weather
    ambience: Ambience


# Endpoint values are mirrored verbatim in docs/palettes.md.
SCHEMES: dict[Quadrant, _Scheme] = {
    Quadrant.CONTENT: _Scheme(
        sky_lo=(0.80, 0.74, 0.90),
        sky_hi=(0.70, 0.60, 0.86),
        fog_lo=0.10,
        fog_hi=0.25,
        temp_lo=6500.0,
        temp_hi=5500.0,
        weather=Weather.MIST,
        ambience=Ambience.BIRDS_BREEZE,
    ),
    Quadrant.EXCITED: _Scheme(
        sky_lo=(0.92, 0.80, 0.58),
        sky_hi=(1.00, 0.84, 0.42),
        fog_lo=0.05,
        fog_hi=0.00,
        temp_lo=5500.0,
        temp_hi=4500.0,
        weather=Weather.CLEAR,
        ambience=Ambience.BIRDS_BREEZE,
    ),
    Quadrant.DEPRESSED: _Scheme(
        sky_lo=(0.55, 0.58, 0.62),
        sky_hi=(0.35, 0.38, 0.45),
        fog_lo=0.30,
        fog_hi=0.60,
        temp_lo=7000.0,
        temp_hi=8500.0,
        weather=Weather.OVERCAST,
        ambience=Ambience.WIND,
    ),
    Quadrant.DISTRESSED: _Scheme(
        sky_lo=(0.45, 0.32, 0.32),
        sky_hi=(0.25, 0.12, 0.12),
        fog_lo=0.35,
        fog_hi=0.70,
        temp_lo=4500.0,
        temp_hi=3000.0,
        weather=Weather.STORM,
        ambience=Ambience.EERIE,
    ),
}


@dataclass(frozen=True)
class EnergyLevel:
    value: float  # [0, 1]
    fatigued: bool


class StressKind(str, Enum):
    NO_STRESSOR = "no_stressor"
    CHALLENGE = "challenge"
    THREAT = "threat"


@dataclass(frozen=True)
class StressResponse:
    kind: StressKind
    intensity: float  # [0, 1]; 0 iff NO_STRESSOR


@dataclass(frozen=True)
class PurposeOutcome:
    score: float  # [0, 1]
    moon_distance_m: float
    reaches_moon: bool


def to_affect(mood_valence: int, mood_arousal: int) -> AffectState:
    """Linear map of the two 1..7 mood answers onto the affect chart."""
    return AffectState((mood_valence - 4) / 3.0, (mood_arousal - 4) / 3.0)


def classify_quadrant(a: AffectState) -> Quadrant:
    if a.intensity() <= NEUTRAL_BAND:
        return Quadrant.CONTENT
    if a.valence >= 0:
        return Quadrant.EXCITED if a.arousal >= 0 else Quadrant.CONTENT
    return Quadrant.DISTRESSED if a.arousal >= 0 else Quadrant.DEPRESSED


def _lerp(lo: float, hi: float, t: float) -> float:
    return lo + (hi - lo) * t


def palette_for(quadrant: Quadrant, intensity: float) -> Palette:
    """Environment look for a quadrant at a given intensity in [0, 1]."""
    s = SCHEMES[quadrant]
    return Palette(
        sky_rgb=tuple(_lerp(lo, hi, intensity) for lo, hi in zip(s.sky_lo, s.sky_hi)),
        fog_density=_lerp(s.fog_lo, s.fog_hi, intensity),
        light_temperature=_lerp(s.temp_lo, s.temp_hi, intensity),
        weather=s.weather,
        ambience=s.ambience,
    )


def energy_level(sleep_hours: float, sleep_quality: int, exercise_minutes: int) -> EnergyLevel:
    value = (
        ENERGY_W_QUALITY * (sleep_quality - 1) / 6.0
        + ENERGY_W_HOURS * min(sleep_hours / FULL_SLEEP_HOURS, 1.0)
        + ENERGY_W_EXERCISE * min(exercise_minutes / FULL_EXERCISE_MINUTES, 1.0)
    )
    value = min(max(value, 0.0), 1.0)
    fatigued = sleep_hours < FATIGUE_SLEEP_HOURS or value < FATIGUE_ENERGY
    return EnergyLevel(value=value, fatigued=fatigued)


def stress_profile(stress_level: int, stress_handling: int) -> StressResponse:
    if stress_level <= 1:
        return StressResponse(StressKind.NO_STRESSOR, 0.0)
    kind = StressKind.CHALLENGE if stress_handling >= 4 else StressKind.THREAT
    return StressResponse(kind, stress_level / 7.0)


def purpose_outcome(reports: list[DailyReport] | tuple[DailyReport, ...]) -> PurposeOutcome:
    """Weekly purpose score from the three daily purpose items."""
    day_scores = [
        ((r.purpose_interest - 1) + (r.purpose_purposeful - 1) + (r.purpose_achievement - 1))
        / 18.0
        for r in reports
    ]
    score = sum(day_scores) / len(day_scores)
    return PurposeOutcome(
        score=score,
        moon_distance_m=MOON_FAR_M - MOON_SPAN_M * score,
        reaches_moon=score >= MOON_REACH_SCORE,
    )
