"""moodfilm: compile a week of daily mood check-ins into an animated story script."""

from .affect import (
    AffectState,
    EnergyLevel,
    Palette,
    PurposeOutcome,
    Quadrant,
    StressKind,
    StressResponse,
    classify_quadrant,
    energy_level,
    palette_for,
    purpose_outcome,
    stress_profile,
    to_affect,
)
from .scenescript import (
    SceneScript,
    Violation,
    compile_script,
    inspect_script,
    script_to_obj,
    serialize,
    validate_script,
)
from .story import (
    ChapterPlan,
    EventKind,
    EventSpec,
    Mode,
    StoryPlan,
    control_week,
    dramatic_score,
    plan_chapter,
    plan_story,
    select_chapter_days,
)
from .survey import (
    DailyReport,
    EmptyWeek,
    ReportError,
    SocialKind,
    SocialRecord,
    WeekData,
    assemble_week,
    load_week_dir,
    parse_daily_report,
    report_to_dict,
    serialize_report,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
