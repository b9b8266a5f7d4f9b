"""Shared builders for reports and weeks used across the suite."""

from __future__ import annotations

import datetime as dt
import random

from moodfilm.survey import (
    DailyReport,
    Partner,
    SocialKind,
    SocialRecord,
    WeekData,
    assemble_week,
)

WEEK_START = dt.date(2025, 9, 1)


def make_report(date: dt.date = WEEK_START, **overrides) -> DailyReport:
    """A mid-scale report with selective overrides."""
    fields = dict(
        date=date,
        mood_valence=4,
        mood_arousal=4,
        bedtime=dt.time(23, 0),
        sleep_hours=7.0,
        sleep_quality=4,
        exercise_minutes=0,
        social=SocialRecord(4, SocialKind.NONE, Partner.PEER),
        stress_level=0,
        stress_handling=4,
        purpose_interest=4,
        purpose_purposeful=4,
        purpose_achievement=4,
        memory_cue="an ordinary day",
    )
    fields.update(overrides)
    return DailyReport(**fields)


def random_report(rng: random.Random, date: dt.date) -> DailyReport:
    kind = rng.choice(list(SocialKind))
    return make_report(
        date,
        mood_valence=rng.randint(1, 7),
        mood_arousal=rng.randint(1, 7),
        bedtime=dt.time(rng.randint(0, 23), rng.choice([0, 15, 30, 45])),
        sleep_hours=round(rng.uniform(0.0, 12.0), 1),
        sleep_quality=rng.randint(1, 7),
        exercise_minutes=rng.choice([0, 0, 10, 20, 30, 45, 60, 90, 120]),
        social=SocialRecord(
            rng.randint(1, 7),
            kind,
            Partner.PEER if kind is SocialKind.NONE else rng.choice(list(Partner)),
        ),
        stress_level=rng.randint(0, 7),
        stress_handling=rng.randint(0, 7),
        purpose_interest=rng.randint(1, 7),
        purpose_purposeful=rng.randint(1, 7),
        purpose_achievement=rng.randint(1, 7),
        memory_cue=f"day {date.isoformat()}",
    )


def random_week(
    rng: random.Random, n_days: int = 7, start: dt.date = WEEK_START
) -> WeekData:
    days = sorted(rng.sample(range(7), n_days))
    reports = [random_report(rng, start + dt.timedelta(days=d)) for d in days]
    return assemble_week(reports, start)
