"""Daily self-report records: validation, parsing, and week assembly.

One check-in is a JSON object in a file named ``YYYY-MM-DD.report.json``; a
week is a directory of such files. The exact field set and ranges are
documented in docs/report-schema.md. Validation never clamps: every bad
value raises exactly one typed error.
"""

from __future__ import annotations

import datetime as dt
import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

CUE_MAX_CHARS = 80
EXERCISE_CAP_MINUTES = 300
SLEEP_MAX_HOURS = 16.0
WEEK_DAYS = 7


class ReportError(ValueError):
    """Base class for check-in validation failures."""


class MissingField(ReportError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"missing field: {name}")


class OutOfRange(ReportError):
    def __init__(self, name: str, value, allowed: str):
        self.name = name
        self.value = value
        self.allowed = allowed
        super().__init__(f"{name}={value!r} out of range (allowed: {allowed})")


class BadDate(ReportError):
    def __init__(self, value):
        self.value = value
        super().__init__(f"bad date: {value!r} (expected YYYY-MM-DD)")


class CueTooLong(ReportError):
    def __init__(self, length: int):
        self.length = length
        super().__init__(f"memory_cue is {length} chars (max {CUE_MAX_CHARS})")


class CueEmpty(ReportError):
    def __init__(self):
        super().__init__("memory_cue is empty")


class EmptyWeek(ReportError):
    def __init__(self, week_start: dt.date):
        self.week_start = week_start
        super().__init__(f"no reports fall in the week starting {week_start.isoformat()}")


class SocialKind(str, Enum):
    NONE = "none"
    NEUTRAL = "neutral"
    HAPPY = "happy"
    FIGHT = "fight"
    REJECTION = "rejection"


class Partner(str, Enum):
    SUBMISSIVE = "submissive"
    PEER = "peer"
    DOMINANT = "dominant"


@dataclass(frozen=True)
class SocialRecord:
    amount: int  # 1..7; ignored downstream when kind is NONE
    kind: SocialKind
    partner: Partner  # normalized to PEER when kind is NONE


@dataclass(frozen=True)
class DailyReport:
    date: dt.date
    mood_valence: int  # 1..7, unpleasant..pleasant
    mood_arousal: int  # 1..7, calm..activated
    bedtime: dt.time
    sleep_hours: float  # 0..16
    sleep_quality: int  # 1..7
    exercise_minutes: int  # 0..300
    social: SocialRecord
    stress_level: int  # 0..7, 0 = no stressor
    stress_handling: int  # 0..7, 0 = overwhelmed, 7 = in control
    purpose_interest: int  # 1..7
    purpose_purposeful: int  # 1..7
    purpose_achievement: int  # 1..7
    memory_cue: str  # 1..80 chars, shown as the chapter title


@dataclass(frozen=True)
class WeekData:
    user_id: str
    week_start: dt.date
    reports: tuple[DailyReport, ...]  # ascending by date, all within the 7-day window


def _require(obj: dict, name: str):
    if name not in obj:
        raise MissingField(name)
    return obj[name]


def _int_in(name: str, value, lo: int, hi: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise OutOfRange(name, value, f"{lo}..{hi}")
    if not lo <= value <= hi:
        raise OutOfRange(name, value, f"{lo}..{hi}")
    return value


def _parse_date(value) -> dt.date:
    if not isinstance(value, str):
        raise BadDate(value)
    try:
        return dt.date.fromisoformat(value)
    except ValueError:
        raise BadDate(value) from None


def _parse_bedtime(value) -> dt.time:
    if isinstance(value, str):
        try:
            parsed = dt.time.fromisoformat(value)
        except ValueError:
            raise OutOfRange("bedtime", value, "HH:MM") from None
        return parsed.replace(second=0, microsecond=0)
    raise OutOfRange("bedtime", value, "HH:MM")


def _parse_cue(value) -> str:
    if not isinstance(value, str) or not value.strip():
        raise CueEmpty()
    if len(value) > CUE_MAX_CHARS:
        raise CueTooLong(len(value))
    return value


def _parse_enum(name: str, value, enum_cls):
    try:
        return enum_cls(value)
    except ValueError:
        allowed = "|".join(m.value for m in enum_cls)
        raise OutOfRange(name, value, allowed) from None


def _parse_social(value) -> SocialRecord:
    if not isinstance(value, dict):
        raise OutOfRange("social", value, "object with amount, kind, partner")
    amount = _int_in("social.amount", _require_nested(value, "social", "amount"), 1, 7)
    kind = _parse_enum("social.kind", _require_nested(value, "social", "kind"), SocialKind)
    if kind is SocialKind.NONE:
        partner = Partner.PEER
    else:
        partner = _parse_enum("social.partner", _require_nested(value, "social", "partner"), Partner)
    return SocialRecord(amount=amount, kind=kind, partner=partner)


def _require_nested(obj: dict, prefix: str, name: str):
    if name not in obj:
        raise MissingField(f"{prefix}.{name}")
    return obj[name]


def parse_daily_report(raw: str | bytes | dict) -> DailyReport:
    """Parse and validate one check-in record.

    Accepts the JSON text of a ``*.report.json`` file or an already-decoded
    object. Raises a ReportError subclass on the first invalid field.
    """
    if isinstance(raw, (str, bytes)):
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ReportError(f"not a valid JSON record: {exc}") from None
    else:
        obj = raw
    if not isinstance(obj, dict):
        raise ReportError("check-in record must be a JSON object")

    date = _parse_date(_require(obj, "date"))
    sleep_hours = _require(obj, "sleep_hours")
    if isinstance(sleep_hours, bool) or not isinstance(sleep_hours, (int, float)):
        raise OutOfRange("sleep_hours", sleep_hours, f"0..{SLEEP_MAX_HOURS:g}")
    if not 0.0 <= float(sleep_hours) <= SLEEP_MAX_HOURS:
        raise OutOfRange("sleep_hours", sleep_hours, f"0..{SLEEP_MAX_HOURS:g}")

    return DailyReport(
        date=date,
        mood_valence=_int_in("mood_valence", _require(obj, "mood_valence"), 1, 7),
        mood_arousal=_int_in("mood_arousal", _require(obj, "mood_arousal"), 1, 7),
        bedtime=_parse_bedtime(_require(obj, "bedtime")),
        sleep_hours=float(sleep_hours),
        sleep_quality=_int_in("sleep_quality", _require(obj, "sleep_quality"), 1, 7),
        exercise_minutes=_int_in(
            "exercise_minutes", _require(obj, "exercise_minutes"), 0, EXERCISE_CAP_MINUTES
        ),
        social=_parse_social(_require(obj, "social")),
        stress_level=_int_in("stress_level", _require(obj, "stress_level"), 0, 7),
        stress_handling=_int_in("stress_handling", _require(obj, "stress_handling"), 0, 7),
        purpose_interest=_int_in("purpose_interest", _require(obj, "purpose_interest"), 1, 7),
        purpose_purposeful=_int_in("purpose_purposeful", _require(obj, "purpose_purposeful"), 1, 7),
        purpose_achievement=_int_in(
            "purpose_achievement", _require(obj, "purpose_achievement"), 1, 7
        ),
        memory_cue=_parse_cue(_require(obj, "memory_cue")),
    )


def report_to_dict(report: DailyReport) -> dict:
    """Plain-JSON form of a report, keys exactly as in the file format."""
    return {
        "date": report.date.isoformat(),
        "mood_valence": report.mood_valence,
        "mood_arousal": report.mood_arousal,
        "bedtime": report.bedtime.strftime("%H:%M"),
        "sleep_hours": report.sleep_hours,
        "sleep_quality": report.sleep_quality,
        "exercise_minutes": report.exercise_minutes,
        "social": {
            "amount": report.social.amount,
            "kind": report.social.kind.value,
            "partner": report.social.partner.value,
        },
        "stress_level": report.stress_level,
        "stress_handling": report.stress_handling,
        "purpose_interest": report.purpose_interest,
        "purpose_purposeful": report.purpose_purposeful,
        "purpose_achievement": report.purpose_achievement,
        "memory_cue": report.memory_cue,
    }


def serialize_report(report: DailyReport) -> str:
    return json.dumps(report_to_dict(report), sort_keys=True, indent=2) + "\n"


def report_filename(date: dt.date) -> str:
    return f"{date.isoformat()}.report.json"


def assemble_week(
    reports: list[DailyReport], week_start: dt.date, user_id: str = "local"
) -> WeekData:
    """Filter reports to the 7-day window starting at week_start.

    Duplicate dates resolve last-write-wins (input order is submission
    order). Raises EmptyWeek when nothing falls inside the window.
    """
    window_end = week_start + dt.timedelta(days=WEEK_DAYS - 1)
    by_date: dict[dt.date, DailyReport] = {}
    for report in reports:
        if week_start <= report.date <= window_end:
            by_date[report.date] = report
    if not by_date:
        raise EmptyWeek(week_start)
    ordered = tuple(by_date[d] for d in sorted(by_date))
    return WeekData(user_id=user_id, week_start=week_start, reports=ordered)


def load_week_dir(data_dir: str | Path, week_start: dt.date, user_id: str = "local") -> WeekData:
    """Read every ``*.report.json`` in a directory and assemble the week."""
    directory = Path(data_dir)
    reports = []
    for path in sorted(directory.glob("*.report.json")):
        reports.append(parse_daily_report(path.read_text(encoding="utf-8")))
    if not reports:
        raise EmptyWeek(week_start)
    return assemble_week(reports, week_start, user_id=user_id)
