"""Command-line entry point: check-in entry, compilation, validation, demo.

Exit codes: 0 success, 1 data/validation failure, 2 usage error.
"""

from __future__ import annotations

import datetime as dt
import json
import sys
from pathlib import Path

import click

from . import scenescript, story, survey

_DATA_DIR_OPTION = click.option(
    "--data-dir",
    envvar="MOODFILM_DATA",
    type=click.Path(file_okay=False, path_type=Path),
    help="Directory of *.report.json check-ins (or set MOODFILM_DATA).",
)


def _parse_date(value: str, flag: str) -> dt.date:
    try:
        return dt.date.fromisoformat(value)
    except ValueError:
        raise click.UsageError(f"{flag} must be YYYY-MM-DD, got {value!r}")


@click.group()
def main():
    """Turn a week of daily mood check-ins into an animated story script."""


@main.command()
@_DATA_DIR_OPTION
@click.option("--date", "date_str", required=True, help="Check-in date, YYYY-MM-DD.")
@click.option("--mood", default=4, type=int, help="Pleasantness today, 1-7.")
@click.option("--arousal", default=4, type=int, help="Energy/activation today, 1-7.")
@click.option("--bedtime", default="23:00", help="Bedtime last night, HH:MM.")
@click.option("--sleep-hours", default=7.0, type=float, help="Hours slept, 0-16.")
@click.option("--sleep-quality", default=4, type=int, help="Sleep quality, 1-7.")
@click.option("--exercise-minutes", default=0, type=int, help="Minutes exercised, 0-300.")
@click.option("--social-amount", default=4, type=int, help="Amount of social interaction, 1-7.")
@click.option(
    "--social-kind",
    default="none",
    type=click.Choice([k.value for k in survey.SocialKind]),
    help="Kind of the day's main interaction.",
)
@click.option(
    "--social-partner",
    default="peer",
    type=click.Choice([p.value for p in survey.Partner]),
    help="Who it was with.",
)
@click.option("--stress-level", default=0, type=int, help="How stressful today was, 0-7.")
@click.option(
    "--stress-handling", default=4, type=int,
    help="0 = anxious and overwhelmed ... 7 = things under control.",
)
@click.option("--purpose-interest", default=4, type=int, help="Interest in life, 1-7.")
@click.option("--purpose-purposeful", default=4, type=int, help="Felt purposeful, 1-7.")
@click.option("--purpose-achievement", default=4, type=int, help="Personal achievement, 1-7.")
@click.option("--cue", required=True, help="One line that will remind you of today (<=80 chars).")
def checkin(data_dir, date_str, mood, arousal, bedtime, sleep_hours, sleep_quality,
            exercise_minutes, social_amount, social_kind, social_partner, stress_level,
            stress_handling, purpose_interest, purpose_purposeful, purpose_achievement, cue):
    """Record one validated daily check-in file."""
    if data_dir is None:
        raise click.UsageError("--data-dir (or MOODFILM_DATA) is required")
    record = {
        "date": date_str,
        "mood_valence": mood,
        "mood_arousal": arousal,
        "bedtime": bedtime,
        "sleep_hours": sleep_hours,
        "sleep_quality": sleep_quality,
        "exercise_minutes": exercise_minutes,
        "social": {"amount": social_amount, "kind": social_kind, "partner": social_partner},
        "stress_level": stress_level,
        "stress_handling": stress_handling,
        "purpose_interest": purpose_interest,
        "purpose_purposeful": purpose_purposeful,
        "purpose_achievement": purpose_achievement,
        "memory_cue": cue,
    }
    try:
        report = survey.parse_daily_report(record)
    except survey.ReportError as exc:
        click.echo(f"invalid check-in: {exc}", err=True)
        sys.exit(1)
    data_dir.mkdir(parents=True, exist_ok=True)
    path = data_dir / survey.report_filename(report.date)
    path.write_text(survey.serialize_report(report), encoding="utf-8")
    click.echo(f"wrote {path}")


@main.command(name="compile")
@_DATA_DIR_OPTION
@click.option("--week-start", help="First day of the week window, YYYY-MM-DD.")
@click.option("--seed", default=0, type=int, help="64-bit generation seed.")
@click.option(
    "--mode",
    default="personalized",
    type=click.Choice([m.value for m in story.Mode]),
)
@click.option(
    "--out", default="story.scene.json", type=click.Path(dir_okay=False, path_type=Path),
    help="Output scene-script path.",
)
def compile_cmd(data_dir, week_start, seed, mode, out):
    """Compile a week of check-ins into a scene script."""
    mode = story.Mode(mode)
    week = None
    if mode is story.Mode.PERSONALIZED:
        if data_dir is None:
            raise click.UsageError("--data-dir (or MOODFILM_DATA) is required for personalized mode")
        if week_start is None:
            raise click.UsageError("--week-start is required for personalized mode")
        start = _parse_date(week_start, "--week-start")
        try:
            week = survey.load_week_dir(data_dir, start)
        except survey.EmptyWeek as exc:
            click.echo(str(exc), err=True)
            sys.exit(1)
        except survey.ReportError as exc:
            click.echo(f"bad check-in file: {exc}", err=True)
            sys.exit(1)
    script = scenescript.compile_script(week, mode, seed)
    out.write_bytes(scenescript.serialize(script))
    obj = scenescript.script_to_obj(script)
    ending = "reaches the moon" if obj["outcome"]["reaches_moon"] else "moon stays distant"
    click.echo(
        f"wrote {out}: {len(obj['chapters'])} chapters, "
        f"{obj['total_duration_s']:.1f} s, {ending}"
    )


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
def validate(path):
    """Validate a scene script (or a *.report.json check-in)."""
    data = path.read_bytes()
    if path.name.endswith(".report.json"):
        try:
            survey.parse_daily_report(data)
        except survey.ReportError as exc:
            click.echo(f"invalid: {exc}", err=True)
            sys.exit(1)
        click.echo("ok")
        return
    violations = scenescript.validate_script(data)
    if violations:
        for v in violations:
            click.echo(str(v), err=True)
        sys.exit(1)
    click.echo("ok")


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
def inspect(path):
    """Summarize a scene script: chapters, events, durations, ending."""
    try:
        obj = json.loads(path.read_bytes())
    except json.JSONDecodeError as exc:
        click.echo(f"parse error: {exc}", err=True)
        sys.exit(1)
    if not isinstance(obj, dict):
        click.echo("parse error: not a JSON object", err=True)
        sys.exit(1)
    click.echo(scenescript.inspect_script(obj))


@main.command()
@click.option(
    "--out", default="control.scene.json", type=click.Path(dir_okay=False, path_type=Path),
    help="Output path for the control scene script.",
)
def demo(out):
    """Emit the built-in control story (byte-identical on every run)."""
    script = scenescript.compile_script(None, story.Mode.CONTROL, 0)
    out.write_bytes(scenescript.serialize(script))
    obj = scenescript.script_to_obj(script)
    click.echo(f"wrote {out}: {len(obj['chapters'])} chapters, {obj['total_duration_s']:.1f} s")


if __name__ == "__main__":
    main()
