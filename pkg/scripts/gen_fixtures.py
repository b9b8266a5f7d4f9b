#!/usr/bin/env python3
"""Regenerate committed fixtures from the package's own constants.

Writes fixtures/control-week.json (the built-in control week, for
cross-implementation reproduction) and the viewer test scripts under
frontend/tests/fixtures/. Tests assert these files stay in sync with the
code, so run this after touching the control week or the scene format.
"""

import json
from pathlib import Path

from moodfilm import control_week, compile_script, serialize, report_to_dict
from moodfilm.story import Mode

ROOT = Path(__file__).resolve().parent.parent


def control_week_obj() -> dict:
    week = control_week()
    return {
        "user_id": week.user_id,
        "week_start": week.week_start.isoformat(),
        "reports": [report_to_dict(r) for r in week.reports],
    }


def main() -> None:
    fixtures = ROOT / "fixtures"
    fixtures.mkdir(exist_ok=True)
    path = fixtures / "control-week.json"
    path.write_text(json.dumps(control_week_obj(), indent=2, sort_keys=True) + "\n")
    print(f"wrote {path}")

    viewer_fixtures = ROOT / "frontend" / "tests" / "fixtures"
    if viewer_fixtures.parent.parent.exists():
        viewer_fixtures.mkdir(parents=True, exist_ok=True)
        demo = viewer_fixtures / "demo.scene.json"
        demo.write_bytes(serialize(compile_script(None, Mode.CONTROL, 0)))
        print(f"wrote {demo}")

        import datetime as dt

        from moodfilm.survey import assemble_week, parse_daily_report

        week = assemble_week(
            [parse_daily_report(json.dumps(r)) for r in _sample_week()],
            dt.date(2025, 9, 1),
        )
        personalized = viewer_fixtures / "personalized.scene.json"
        personalized.write_bytes(serialize(compile_script(week, Mode.PERSONALIZED, 7)))
        print(f"wrote {personalized}")


def _sample_week() -> list[dict]:
    def day(date, **kw):
        base = {
            "date": date, "mood_valence": 4, "mood_arousal": 4, "bedtime": "23:00",
            "sleep_hours": 7.0, "sleep_quality": 4, "exercise_minutes": 0,
            "social": {"amount": 4, "kind": "none", "partner": "peer"},
            "stress_level": 0, "stress_handling": 4, "purpose_interest": 4,
            "purpose_purposeful": 4, "purpose_achievement": 4,
            "memory_cue": f"sample {date}",
        }
        base.update(kw)
        return base

    return [
        day("2025-09-01", mood_valence=6, mood_arousal=6, exercise_minutes=60,
            sleep_hours=8.0, sleep_quality=7, memory_cue="long run in the sun"),
        day("2025-09-02", mood_valence=2, mood_arousal=6, stress_level=6, stress_handling=1,
            social={"amount": 5, "kind": "fight", "partner": "dominant"},
            memory_cue="deadline storm"),
        day("2025-09-04", mood_valence=2, mood_arousal=2, sleep_hours=2.0, sleep_quality=1,
            bedtime="02:30", memory_cue="barely slept"),
        day("2025-09-05", mood_valence=6, mood_arousal=4,
            social={"amount": 6, "kind": "happy", "partner": "peer"},
            memory_cue="Pho Basil"),
        day("2025-09-07", mood_valence=7, mood_arousal=5, purpose_interest=7,
            purpose_purposeful=6, purpose_achievement=6, memory_cue="moon over the bay"),
    ]


if __name__ == "__main__":
    main()
