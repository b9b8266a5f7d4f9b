"""Story planning: choosing chapter days, ordering events, budgeting time.

A week compiles to at most four chapters (the highest-scoring days), each
bracketed by wander legs, with interior events sorted by intensity so every
chapter rises toward its most dramatic beat.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass, replace
from enum import Enum

from .affect import (
    AffectState,
    EnergyLevel,
    PurposeOutcome,
    Quadrant,
    StressKind,
    StressResponse,
    classify_quadrant,
    energy_level,
    purpose_outcome,
    stress_profile,
    to_affect,
)
from .survey import DailyReport, Partner, SocialKind, SocialRecord, WeekData


class Mode(str, Enum):
    PERSONALIZED = "personalized"
    CONTROL = "control"


class EventKind(str, Enum):
    WANDER = "wander"
    SOCIAL = "social"
    STRESS = "stress"
    SLEEP = "sleep"
    EXERCISE_BOOST = "exercise_boost"


# interior ordering: mildest first, climax last
INTENSITY_RANK = {
    EventKind.EXERCISE_BOOST: 0,
    EventKind.SOCIAL: 1,
    EventKind.SLEEP: 2,
    EventKind.STRESS: 3,
}

PARTNER_SCALE = {Partner.SUBMISSIVE: 0.6, Partner.PEER: 1.0, Partner.DOMINANT: 1.5}

WANDER_NOMINAL_S = 35.0
EVENT_NOMINAL_S = 25.0
CHAPTER_MIN_S = 60.0
CHAPTER_MAX_S = 140.0
INTRO_S = 10.0
ENDING_S = 20.0
WEEK_MIN_S = 360.0
WEEK_MAX_S = 480.0
SPARSE_MIN_PER_CHAPTER_S = 90.0
MAX_CHAPTERS = 4

EXERCISE_BOOST_MINUTES = 30
LATE_NIGHT_FROM = dt.time(1, 0)
LATE_NIGHT_TO = dt.time(5, 0)

@dataclass(frozen=True)
class EventSpec:
    kind: EventKind
    nominal_duration_s: float
    social_kind: SocialKind | None = None
    partner_scale: float | None = None
    response: StressResponse | None = None
    severity: float | None = None  # sleep debt, (0, 1]


@dataclass(frozen=True)
class ChapterPlan:
    date: dt.date
    title: str | None  # memory cue; None in control mode
    affect: AffectState
    quadrant: Quadrant
    energy: EnergyLevel
    events: tuple[EventSpec, ...]  # wander-bracketed, interior by intensity rank
    duration_s: float
    late_night: bool


@dataclass(frozen=True)
class StoryPlan:
    chapters: tuple[ChapterPlan, ...]
    outcome: PurposeOutcome
    mode: Mode
    total_duration_s: float
    wander_scale: float  # 1.0 unless the four-chapter budget needed stretching


def dramatic_score(report: DailyReport) -> float:
    """|v| + 0.5|a| + 0.5*(stress/7), computed as one exact integer ratio so
    days with equal drama always compare equal (ties then break by date)."""
    numerator = (
        14 * abs(report.mood_valence - 4)  # 42 * |v| with v = (L-4)/3
        + 7 * abs(report.mood_arousal - 4)  # 42 * 0.5|a|
        + 3 * report.stress_level  # 42 * 0.5*(stress/7)
    )
    return numerator / 42.0


def select_chapter_days(week: WeekData) -> list[DailyReport]:
    """The up-to-four highest-scoring days, ties to the earlier date,
    returned in chronological order."""
    k = min(MAX_CHAPTERS, len(week.reports))
    ranked = sorted(week.reports, key=lambda r: (-dramatic_score(r), r.date))
    return sorted(ranked[:k], key=lambda r: r.date)


def plan_chapter(report: DailyReport) -> ChapterPlan:
    affect = to_affect(report.mood_valence, report.mood_arousal)
    energy = energy_level(report.sleep_hours, report.sleep_quality, report.exercise_minutes)
    stress = stress_profile(report.stress_level, report.stress_handling)

    interior: list[EventSpec] = []
    if report.exercise_minutes >= EXERCISE_BOOST_MINUTES:
        interior.append(EventSpec(EventKind.EXERCISE_BOOST, EVENT_NOMINAL_S))
    if report.social.kind is not SocialKind.NONE:
        interior.append(
            EventSpec(
                EventKind.SOCIAL,
                EVENT_NOMINAL_S,
                social_kind=report.social.kind,
                partner_scale=PARTNER_SCALE[report.social.partner],
            )
        )
    if energy.fatigued:
        interior.append(
            EventSpec(EventKind.SLEEP, EVENT_NOMINAL_S, severity=1.0 - energy.value)
        )
    if stress.kind is not StressKind.NO_STRESSOR:
        interior.append(EventSpec(EventKind.STRESS, EVENT_NOMINAL_S, response=stress))
    interior.sort(key=lambda e: INTENSITY_RANK[e.kind])

    wander = EventSpec(EventKind.WANDER, WANDER_NOMINAL_S)
    events = (wander, *interior, wander)
    raw = WANDER_NOMINAL_S * 2 + EVENT_NOMINAL_S * len(interior)
    return ChapterPlan(
        date=report.date,
        title=report.memory_cue,
        affect=affect,
        quadrant=classify_quadrant(affect),
        energy=energy,
        events=events,
        duration_s=min(max(raw, CHAPTER_MIN_S), CHAPTER_MAX_S),
        late_night=LATE_NIGHT_FROM <= report.bedtime < LATE_NIGHT_TO,
    )


def interior_events(chapter: ChapterPlan) -> tuple[EventSpec, ...]:
    return chapter.events[1:-1]


def allocate_durations(
    chapters: list[ChapterPlan],
) -> tuple[list[ChapterPlan], float, float]:
    """Settle chapter durations and the week total.

    Full four-chapter weeks are pulled into [WEEK_MIN_S, WEEK_MAX_S] by
    scaling every wander portion with one shared factor. Sparse weeks keep
    their raw budget unless it falls under 90 s per chapter, in which case
    the wander portions stretch up to that floor.
    """
    total = INTRO_S + sum(c.duration_s for c in chapters) + ENDING_S
    target = None
    if len(chapters) == MAX_CHAPTERS:
        if not WEEK_MIN_S <= total <= WEEK_MAX_S:
            target = WEEK_MIN_S if total < WEEK_MIN_S else WEEK_MAX_S
    elif total < SPARSE_MIN_PER_CHAPTER_S * len(chapters):
        target = SPARSE_MIN_PER_CHAPTER_S * len(chapters)
    scale = 1.0
    if target is not None:
        interior_total = sum(EVENT_NOMINAL_S * len(interior_events(c)) for c in chapters)
        wander_total = sum(c.duration_s for c in chapters) - interior_total
        scale = (target - INTRO_S - ENDING_S - interior_total) / wander_total
        chapters = [
            replace(
                c,
                duration_s=EVENT_NOMINAL_S * len(interior_events(c))
                + scale * (c.duration_s - EVENT_NOMINAL_S * len(interior_events(c))),
            )
            for c in chapters
        ]
        total = target
    return list(chapters), total, scale


def plan_story(week: WeekData | None, mode: Mode) -> StoryPlan:
    """Compile a week (or the built-in control week) into a story plan."""
    if mode is Mode.CONTROL:
        week = control_week()
    assert week is not None
    chapters = [plan_chapter(r) for r in select_chapter_days(week)]
    if mode is Mode.CONTROL:
        chapters = [replace(c, title=None) for c in chapters]
    chapters, total, scale = allocate_durations(chapters)
    return StoryPlan(
        chapters=tuple(chapters),
        outcome=purpose_outcome(week.reports),
        mode=mode,
        total_duration_s=total,
        wander_scale=scale,
    )


def _control_report(
    date: str,
    mood: tuple[int, int],
    bedtime: str,
    sleep: tuple[float, int],
    exercise: int,
    social: tuple[int, SocialKind, Partner],
    stress: tuple[int, int],
    purpose: tuple[int, int, int],
    cue: str,
) -> DailyReport:
    return DailyReport(
        date=dt.date.fromisoformat(date),
        mood_valence=mood[0],
        mood_arousal=mood[1],
        bedtime=dt.time.fromisoformat(bedtime),
        sleep_hours=sleep[0],
        sleep_quality=sleep[1],
        exercise_minutes=exercise,
        social=SocialRecord(amount=social[0], kind=social[1], partner=social[2]),
        stress_level=stress[0],
        stress_handling=stress[1],
        purpose_interest=purpose[0],
        purpose_purposeful=purpose[1],
        purpose_achievement=purpose[2],
        memory_cue=cue,
    )


def control_week() -> WeekData:
    """The fixed week behind control mode: a quiet start, a stormy fight,
    a good social day, and an uphill finish. Mirrored in
    fixtures/control-week.json for cross-implementation checks."""
    reports = (
        _control_report(
            "2000-01-03", (5, 3), "23:00", (7.5, 5), 20,
            (4, SocialKind.NONE, Partner.PEER), (0, 4), (5, 5, 5), "a quiet start",
        ),
        _control_report(
            "2000-01-04", (2, 6), "01:30", (7.0, 4), 0,
            (5, SocialKind.FIGHT, Partner.PEER), (6, 1), (4, 4, 4), "the rocks",
        ),
        _control_report(
            "2000-01-05", (6, 5), "22:30", (8.0, 6), 45,
            (6, SocialKind.HAPPY, Partner.PEER), (0, 4), (6, 6, 6), "a good run",
        ),
        _control_report(
            "2000-01-06", (7, 5), "22:00", (8.0, 7), 30,
            (4, SocialKind.NONE, Partner.PEER), (0, 4), (7, 6, 6), "uphill, gladly",
        ),
    )
    return WeekData(
        user_id="control",
        week_start=dt.date.fromisoformat("2000-01-03"),
        reports=reports,
    )
