"""Camera, lens, lighting and audio scheduling over a compiled timeline.

Camera cues always partition [0, total] exactly: fixed cues (intro, event
specials, ending) are laid down first and every gap is filled with the
rotating four-shot cycle. All randomness is seeded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .affect import Palette, Quadrant
from .rng import Rng
from .story import EventKind

SHOT_MIN_S = 2.0
_SHOT_MIN_PAD_S = 2.01  # generation floor so 3-decimal rounding never dips below 2.0
ROTATE_MIN_S = 4.0
ROTATE_MAX_S = 8.0
OVERHEAD_SOLITUDE_S = 6.0
STRESS_CLOSEUP_FRACTION = 0.4  # extreme close-up, then weather pan

CROSSFADE_S = 5.0
LATE_NIGHT_DIM = 0.6

PANT_SPEED_MPS = 2.0
PANT_MIN_S = 3.0
BARK_S = 2.0
HOWL_S = 3.0


class ShotKind(str, Enum):
    # rotating progress shots
    FRONTAL = "frontal"
    AGENT_POV = "agent_pov"
    CLOSE_UP = "close_up"
    SIDE = "side"
    # specials
    DUTCH_ANGLE = "dutch_angle"
    OVERHEAD_SOLITUDE = "overhead_solitude"
    EXTREME_CLOSE_UP = "extreme_close_up"
    WEATHER_PAN = "weather_pan"
    MOON_REVEAL = "moon_reveal"
    LOW_TRACKING_RUN = "low_tracking_run"
    HIGH_WIDE = "high_wide"


ROTATING_SHOTS = (ShotKind.FRONTAL, ShotKind.AGENT_POV, ShotKind.CLOSE_UP, ShotKind.SIDE)


class LensKind(str, Enum):
    DEPTH_OF_FIELD_BLUR = "depth_of_field_blur"
    RECOLOR = "recolor"
    DOUBLE_FOCUS = "double_focus"


@dataclass(frozen=True)
class LensEffect:
    kind: LensKind
    strength: float  # [0, 1]


@dataclass(frozen=True)
class CameraCue:
    t0: float
    t1: float
    shot: ShotKind
    effects: tuple[LensEffect, ...] = ()


@dataclass(frozen=True)
class LightingKeyframe:
    t: float
    sky_rgb: tuple[float, float, float]
    fog_density: float
    light_temperature: float


class Sound(str, Enum):
    BIRDS_BREEZE = "birds_breeze"
    WIND = "wind"
    EERIE = "eerie"
    RUMBLE = "rumble"
    PANT = "pant"
    SNORE = "snore"
    BARK = "bark"
    HOWL = "howl"
    MUSIC_CALM = "music_calm"
    MUSIC_TENSE = "music_tense"
    MUSIC_TRIUMPH = "music_triumph"


@dataclass(frozen=True)
class AudioCue:
    t0: float
    t1: float
    sound: Sound


@dataclass(frozen=True)
class EventWindow:
    kind: EventKind
    t0: float
    t1: float
    threat: bool = False  # stress windows only


@dataclass
class ChapterTimeline:
    """Everything scheduling needs to know about one chapter's span."""

    t0: float
    t1: float
    quadrant: Quadrant
    intensity: float
    palette: Palette
    late_night: bool
    solitary: bool  # no social event that day
    windows: list[EventWindow] = field(default_factory=list)
    walk_stretches: list[tuple[float, float]] = field(default_factory=list)
    speed_mps: float = 0.0


@dataclass
class Timeline:
    total_s: float
    intro_end: float
    ending_start: float
    chapters: list[ChapterTimeline]
    reaches_moon: bool


def lens_for(shot: ShotKind, quadrant: Quadrant, intensity: float) -> tuple[LensEffect, ...]:
    """Fixed lens table, plus an intensity-strength recolor on every cue of
    a distressed chapter."""
    effects: list[LensEffect] = []
    if shot in (ShotKind.CLOSE_UP, ShotKind.EXTREME_CLOSE_UP):
        effects.append(LensEffect(LensKind.DEPTH_OF_FIELD_BLUR, 0.6))
    elif shot is ShotKind.DUTCH_ANGLE:
        effects.append(LensEffect(LensKind.DOUBLE_FOCUS, 0.5))
    if quadrant is Quadrant.DISTRESSED:
        effects.append(LensEffect(LensKind.RECOLOR, intensity))
    return tuple(effects)


def _forced_cues(timeline: Timeline) -> list[tuple[float, float, ShotKind]]:
    fixed: list[tuple[float, float, ShotKind]] = [
        (0.0, timeline.intro_end, ShotKind.HIGH_WIDE),
        (timeline.ending_start, timeline.total_s, ShotKind.MOON_REVEAL),
    ]
    for ch in timeline.chapters:
        for w in ch.windows:
            if w.kind is EventKind.SLEEP:
                fixed.append((w.t0, w.t1, ShotKind.DUTCH_ANGLE))
            elif w.kind is EventKind.STRESS:
                span = w.t1 - w.t0
                if span < 2 * _SHOT_MIN_PAD_S:
                    fixed.append((w.t0, w.t1, ShotKind.EXTREME_CLOSE_UP))
                else:
                    split = w.t0 + max(_SHOT_MIN_PAD_S, STRESS_CLOSEUP_FRACTION * span)
                    fixed.append((w.t0, split, ShotKind.EXTREME_CLOSE_UP))
                    fixed.append((split, w.t1, ShotKind.WEATHER_PAN))
            elif w.kind is EventKind.EXERCISE_BOOST:
                fixed.append((w.t0, w.t1, ShotKind.LOW_TRACKING_RUN))
    fixed.sort()
    return fixed


def _insert_solitude(
    fixed: list[tuple[float, float, ShotKind]], timeline: Timeline
) -> list[tuple[float, float, ShotKind]]:
    """One slow overhead orbit per solitary chapter, placed in its largest
    camera gap."""
    for ch in timeline.chapters:
        if not ch.solitary:
            continue
        occupied = sorted(
            (max(f0, ch.t0), min(f1, ch.t1)) for f0, f1, _ in fixed if f0 < ch.t1 and f1 > ch.t0
        )
        best = (0.0, ch.t0, ch.t0)
        cursor = ch.t0
        for a, b in occupied + [(ch.t1, ch.t1)]:
            if a - cursor > best[0]:
                best = (a - cursor, cursor, a)
            cursor = max(cursor, b)
        gap_len, g0, g1 = best
        if gap_len < SHOT_MIN_S:
            continue
        if gap_len <= OVERHEAD_SOLITUDE_S + 2 * _SHOT_MIN_PAD_S:
            fixed.append((g0, g1, ShotKind.OVERHEAD_SOLITUDE))
        else:
            mid = (g0 + g1) / 2.0
            fixed.append(
                (mid - OVERHEAD_SOLITUDE_S / 2.0, mid + OVERHEAD_SOLITUDE_S / 2.0,
                 ShotKind.OVERHEAD_SOLITUDE)
            )
        fixed.sort()
    return fixed


def schedule_cameras(timeline: Timeline, seed: int) -> list[CameraCue]:
    """Partition [0, total] into camera cues: fixed specials first, rotating
    fill everywhere else, no consecutive repeats, every cue >= 2 s."""
    rng = Rng(seed)
    fixed = _insert_solitude(_forced_cues(timeline), timeline)

    # close sub-minimum gaps by stretching the earlier fixed cue
    merged: list[tuple[float, float, ShotKind]] = []
    for cue in fixed:
        if merged and cue[0] - merged[-1][1] < _SHOT_MIN_PAD_S and cue[0] > merged[-1][1]:
            prev = merged[-1]
            merged[-1] = (prev[0], cue[0], prev[2])
        merged.append(cue)
    fixed = merged

    cues: list[CameraCue] = []
    prev_shot: ShotKind | None = None

    def fill_gap(a: float, b: float) -> None:
        nonlocal prev_shot
        cursor = a
        while b - cursor > 1e-9:
            remaining = b - cursor
            if remaining <= ROTATE_MAX_S:
                d = remaining
            elif remaining <= ROTATE_MAX_S + ROTATE_MIN_S:
                d = remaining / 2.0
            else:
                d = rng.uniform(ROTATE_MIN_S, ROTATE_MAX_S)
            choices = [s for s in ROTATING_SHOTS if s is not prev_shot]
            shot = rng.choice(choices)
            end = b if b - (cursor + d) < 1e-9 else cursor + d
            cues.append(CameraCue(cursor, end, shot))
            prev_shot = shot
            cursor = end

    cursor = 0.0
    for f0, f1, shot in fixed:
        if f0 - cursor > 1e-9:
            fill_gap(cursor, f0)
        cues.append(CameraCue(f0, f1, shot))
        prev_shot = shot
        cursor = f1
    if timeline.total_s - cursor > 1e-9:
        fill_gap(cursor, timeline.total_s)

    return _attach_lenses(cues, timeline)


def _attach_lenses(cues: list[CameraCue], timeline: Timeline) -> list[CameraCue]:
    chapters = timeline.chapters

    def context_for(t: float) -> ChapterTimeline:
        for ch in chapters:
            if t < ch.t1:
                return ch
        return chapters[-1]

    out = []
    for cue in cues:
        ch = context_for(cue.t0)
        out.append(
            CameraCue(cue.t0, cue.t1, cue.shot, lens_for(cue.shot, ch.quadrant, ch.intensity))
        )
    return out


def _music_for(ch: ChapterTimeline) -> Sound:
    # positive-valence quadrants keep the calm layer, negative go tense
    if ch.quadrant in (Quadrant.CONTENT, Quadrant.EXCITED):
        return Sound.MUSIC_CALM
    return Sound.MUSIC_TENSE


def schedule_audio(timeline: Timeline) -> list[AudioCue]:
    cues: list[AudioCue] = []
    chapters = timeline.chapters
    last = len(chapters) - 1
    for i, ch in enumerate(chapters):
        amb0 = 0.0 if i == 0 else ch.t0
        amb1 = timeline.total_s if i == last else ch.t1
        cues.append(AudioCue(amb0, amb1, Sound(ch.palette.ambience.value)))
        music1 = timeline.ending_start if i == last else ch.t1
        cues.append(AudioCue(amb0, music1, _music_for(ch)))
        for w in ch.windows:
            if w.kind is EventKind.SLEEP:
                cues.append(AudioCue(w.t0, w.t1, Sound.SNORE))
            elif w.kind is EventKind.SOCIAL:
                cues.append(AudioCue(w.t0, min(w.t0 + BARK_S, ch.t1), Sound.BARK))
            elif w.kind is EventKind.STRESS and w.threat:
                cues.append(AudioCue(w.t0, min(w.t0 + HOWL_S, ch.t1), Sound.HOWL))
        if ch.speed_mps > PANT_SPEED_MPS:
            for a, b in ch.walk_stretches:
                if b - a >= PANT_MIN_S:
                    cues.append(AudioCue(a, b, Sound.PANT))
    ending_music = Sound.MUSIC_TRIUMPH if timeline.reaches_moon else Sound.MUSIC_CALM
    cues.append(AudioCue(timeline.ending_start, timeline.total_s, ending_music))
    cues.sort(key=lambda c: (c.t0, c.t1, c.sound.value))
    return cues


def _effective_palette(ch: ChapterTimeline) -> tuple[tuple[float, float, float], float, float]:
    sky = ch.palette.sky_rgb
    if ch.late_night:
        sky = tuple(c * LATE_NIGHT_DIM for c in sky)
    return sky, ch.palette.fog_density, ch.palette.light_temperature


def lighting_track(timeline: Timeline) -> list[LightingKeyframe]:
    """Two keyframes per chapter: hold the previous look at the boundary,
    reach the chapter's own look after a 5 s crossfade."""
    frames: list[LightingKeyframe] = []
    prev = None
    for i, ch in enumerate(timeline.chapters):
        own = _effective_palette(ch)
        start = 0.0 if i == 0 else ch.t0
        from_palette = own if prev is None else prev
        frames.append(LightingKeyframe(start, *from_palette))
        frames.append(LightingKeyframe(start + CROSSFADE_S, *own))
        prev = own
    return frames
