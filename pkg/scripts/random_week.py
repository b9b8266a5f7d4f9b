#!/usr/bin/env python3
"""Fill a data directory with a seeded random week of check-in files.

Usage: python3 scripts/random_week.py OUT_DIR [--seed N] [--start YYYY-MM-DD]
       [--days N]

Handy for trying the CLI end to end:
    python3 scripts/random_week.py /tmp/demo-week --seed 3
    moodfilm compile --data-dir /tmp/demo-week --week-start 2025-09-01 --out demo.scene.json
"""

import argparse
import datetime as dt
import random
from pathlib import Path

from moodfilm.survey import parse_daily_report, report_filename, serialize_report

CUES = [
    "Back to work after Labor Day...", "Rainy beautiful sunset", "Pho Basil",
    "defused bombs", "tell me why", "You are beautiful", "long walk home",
    "quiet library day", "the big presentation", "late night talks",
]


def random_record(rng: random.Random, date: dt.date) -> dict:
    kind = rng.choice(["none", "none", "neutral", "happy", "fight", "rejection"])
    return {
        "date": date.isoformat(),
        "mood_valence": rng.randint(1, 7),
        "mood_arousal": rng.randint(1, 7),
        "bedtime": f"{rng.choice([21, 22, 23, 0, 1, 2]):02d}:{rng.choice([0, 15, 30, 45]):02d}",
        "sleep_hours": round(rng.uniform(3.0, 10.0), 1),
        "sleep_quality": rng.randint(1, 7),
        "exercise_minutes": rng.choice([0, 0, 15, 30, 45, 60, 90]),
        "social": {
            "amount": rng.randint(1, 7),
            "kind": kind,
            "partner": rng.choice(["submissive", "peer", "dominant"]),
        },
        "stress_level": rng.randint(0, 7),
        "stress_handling": rng.randint(0, 7),
        "purpose_interest": rng.randint(1, 7),
        "purpose_purposeful": rng.randint(1, 7),
        "purpose_achievement": rng.randint(1, 7),
        "memory_cue": rng.choice(CUES),
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out_dir", type=Path)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--start", default="2025-09-01")
    parser.add_argument("--days", type=int, default=7)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    start = dt.date.fromisoformat(args.start)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for offset in range(args.days):
        date = start + dt.timedelta(days=offset)
        report = parse_daily_report(random_record(rng, date))
        path = args.out_dir / report_filename(report.date)
        path.write_text(serialize_report(report), encoding="utf-8")
        print(f"wrote {path}")
    print(f"week starts {start.isoformat()}")


if __name__ == "__main__":
    main()
