"""Compile pipeline and canonical scene-script serialization/validation.

A scene script is the sole contract with the viewer: a versioned JSON
timeline of camera, agent, lighting, audio, spawn and title cues plus the
embedded per-chapter heightfields (schema: docs/scene-schema.md).
Serialization is canonical (sorted keys, <=3-decimal numbers, trailing
newline) so equal scripts are byte-identical everywhere.
"""

from __future__ import annotations

import datetime as dt
import json
import math
from dataclasses import dataclass
from enum import Enum

from .affect import Quadrant, StressKind, palette_for
from .cinema import (
    AudioCue,
    CameraCue,
    ChapterTimeline,
    EventWindow,
    LensKind,
    LightingKeyframe,
    ROTATING_SHOTS,
    SHOT_MIN_S,
    ShotKind,
    Sound,
    Timeline,
    lighting_track,
    schedule_audio,
    schedule_cameras,
)
from .rng import M64, Rng, derive
from .story import (
    ENDING_S,
    EVENT_NOMINAL_S,
    INTRO_S,
    ChapterPlan,
    EventKind,
    EventSpec,
    Mode,
    interior_events,
    plan_story,
)
from .survey import WeekData
from .world import (
    CELL_M,
    GRID_SIZE,
    THREAT_HOLD_S,
    Cell,
    Path,
    Terrain,
    Waypoint,
    agent_speed,
    generate_terrain,
    place_rock_band,
    place_social,
    plan_path,
    replan_on_block,
)

SCRIPT_VERSION = "1"
TITLE_S = 4.0
GATE_CELL: Cell = (56, 56)

# route sizing: walk at most this fraction of the chapter's walking budget
_ROUTE_BUDGET_FRACTION = 0.45
_ROUTE_FIT_FRACTION = 0.72
_ROUTE_MAX_M = 90.0
_ROUTE_MIN_M = 4.0
_GATE_SHORTFALL_CELLS = 4

RUN_CLIP_SPEED_MPS = 1.8


class AgentClip(str, Enum):
    WALK_HAPPY = "walk_happy"
    WALK_SAD = "walk_sad"
    RUN_ENERGETIC = "run_energetic"
    TRUDGE = "trudge"
    SIT_LONELY = "sit_lonely"
    PLAY_BOW = "play_bow"
    FIGHT_STANCE = "fight_stance"
    COWER_SCARED = "cower_scared"
    BRAVE_CHARGE = "brave_charge"
    FALL_ASLEEP = "fall_asleep"
    MOON_IDLE = "moon_idle"


class SpawnKind(str, Enum):
    PARTNER_DOG = "partner_dog"
    ROCK_RAIN = "rock_rain"


@dataclass(frozen=True)
class AgentCue:
    t0: float
    t1: float
    clip: AgentClip
    speed_mps: float
    waypoints: tuple[Waypoint, ...]  # the path segment this cue animates


@dataclass(frozen=True)
class SpawnRecord:
    kind: SpawnKind
    t0: float
    x: float | None = None
    y: float | None = None
    z: float | None = None
    scale: float | None = None
    social: str | None = None
    cells: tuple[Cell, ...] | None = None
    core_cells: tuple[Cell, ...] | None = None
    shrink_t: float | None = None
    clear_t: float | None = None


@dataclass(frozen=True)
class TitleCue:
    t0: float
    t1: float
    text: str


@dataclass(frozen=True)
class ChapterInfo:
    t0: float
    t1: float
    date: dt.date
    valence: float
    arousal: float
    quadrant: Quadrant
    weather: str
    events: tuple[dict, ...]  # interior event descriptors
    title: str | None


@dataclass
class SceneScript:
    version: str
    mode: Mode
    seed: int
    total_duration_s: float
    outcome: dict
    terrain: list[Terrain]
    chapters: list[ChapterInfo]
    camera: list[CameraCue]
    agent: list[AgentCue]
    lighting: list[LightingKeyframe]
    audio: list[AudioCue]
    spawns: list[SpawnRecord]
    titles: list[TitleCue]


def _walk_clip(chapter: ChapterPlan, speed: float) -> AgentClip:
    if chapter.quadrant is Quadrant.EXCITED:
        return AgentClip.RUN_ENERGETIC if speed >= RUN_CLIP_SPEED_MPS else AgentClip.WALK_HAPPY
    if chapter.quadrant is Quadrant.CONTENT:
        return AgentClip.WALK_HAPPY
    if chapter.quadrant is Quadrant.DEPRESSED:
        return AgentClip.TRUDGE if chapter.energy.fatigued else AgentClip.WALK_SAD
    return AgentClip.WALK_SAD


_EVENT_CLIPS = {
    "happy": AgentClip.PLAY_BOW,
    "neutral": AgentClip.PLAY_BOW,
    "fight": AgentClip.FIGHT_STANCE,
    "rejection": AgentClip.SIT_LONELY,
}


def _event_descriptor(ev: EventSpec) -> dict:
    d: dict = {"kind": ev.kind.value}
    if ev.kind is EventKind.SOCIAL:
        d["social"] = ev.social_kind.value
        d["partner_scale"] = ev.partner_scale
    elif ev.kind is EventKind.STRESS:
        d["response"] = ev.response.kind.value
        d["intensity"] = ev.response.intensity
    elif ev.kind is EventKind.SLEEP:
        d["severity"] = ev.severity
    return d


def _clamp_cell(c: float, r: float, lo: int = 2, hi: int = GRID_SIZE - 3) -> Cell:
    return (
        min(max(int(round(c)), lo), hi),
        min(max(int(round(r)), lo), hi),
    )


def _chapter_geometry(
    is_final: bool, reaches_moon: bool, direct_m: float, rng_angle: float, rng_start: tuple[int, int]
) -> tuple[Cell, Cell]:
    """Start/goal cells for one chapter; the final chapter ends at the moon
    gate exactly when the week's purpose outcome reaches it."""
    if is_final:
        margin = 0.0 if reaches_moon else _GATE_SHORTFALL_CELLS * CELL_M
        span_cells = (direct_m + margin) / CELL_M
        start = _clamp_cell(
            GATE_CELL[0] + span_cells * math.cos(rng_angle),
            GATE_CELL[1] + span_cells * math.sin(rng_angle),
        )
        if reaches_moon:
            return start, GATE_CELL
        dx = GATE_CELL[0] - start[0]
        dy = GATE_CELL[1] - start[1]
        dist = math.hypot(dx, dy)
        if dist <= _GATE_SHORTFALL_CELLS:
            goal = _clamp_cell(start[0] + dx / 2.0, start[1] + dy / 2.0)
        else:
            f = (dist - _GATE_SHORTFALL_CELLS) / dist
            goal = _clamp_cell(start[0] + dx * f, start[1] + dy * f)
        if goal == GATE_CELL:
            goal = (GATE_CELL[0] - 2, GATE_CELL[1] - 2)
        if goal == start:
            goal = _clamp_cell(start[0] + 2, start[1])
        return start, goal
    start = rng_start
    base = math.atan2(GATE_CELL[1] - start[1], GATE_CELL[0] - start[0])
    angle = base + rng_angle
    goal = _clamp_cell(
        start[0] + direct_m / CELL_M * math.cos(angle),
        start[1] + direct_m / CELL_M * math.sin(angle),
        lo=2,
        hi=52,
    )
    if goal == start:
        goal = _clamp_cell(start[0] + 2, start[1] + 2, lo=2, hi=52)
    return start, goal


@dataclass
class _ChapterBuild:
    terrain: Terrain
    info: ChapterInfo
    timeline: ChapterTimeline
    agent_cues: list[AgentCue]
    spawns: list[SpawnRecord]


def _wp(terrain: Terrain, cell: Cell, t: float) -> Waypoint:
    return Waypoint(cell[0] * CELL_M, cell[1] * CELL_M, terrain.height_at(cell), t)


def _step_time(terrain: Terrain, a: Cell, b: Cell, speed: float) -> float:
    d = math.hypot(
        (b[0] - a[0]) * CELL_M,
        (b[1] - a[1]) * CELL_M,
        terrain.height_at(b) - terrain.height_at(a),
    )
    return d / speed


def _compile_chapter(
    chapter: ChapterPlan,
    index: int,
    is_final: bool,
    ch_t0: float,
    ch_t1: float,
    reaches_moon: bool,
    seed: int,
) -> _ChapterBuild:
    terrain = generate_terrain(chapter.affect, derive(seed, "terrain", index))
    speed = agent_speed(chapter.energy, chapter.affect)
    interior = interior_events(chapter)
    n = len(interior)
    est_walk = (ch_t1 - ch_t0) - EVENT_NOMINAL_S * n
    rng = Rng(derive(seed, "route", index))
    angle_jitter = rng.uniform(-0.6, 0.6) if is_final else rng.uniform(-0.35, 0.35)
    if is_final:
        angle = -3.0 * math.pi / 4.0 + angle_jitter
    else:
        angle = angle_jitter
    start_cell = (rng.randint(4, 16), rng.randint(4, 16))

    avoid = frozenset() if (not is_final or reaches_moon) else frozenset({GATE_CELL})
    direct_m = min(max(_ROUTE_BUDGET_FRACTION * speed * est_walk, _ROUTE_MIN_M), _ROUTE_MAX_M)
    path: Path | None = None
    for attempt in range(4):
        start, goal = _chapter_geometry(is_final, reaches_moon, direct_m, angle, start_cell)
        path = plan_path(
            terrain,
            start,
            goal,
            chapter.energy,
            None,
            derive(seed, "path", index, attempt),
            speed,
            avoid=avoid,
        )
        if path.waypoints[-1].t <= _ROUTE_FIT_FRACTION * est_walk or attempt == 3:
            break
        direct_m *= 0.6
    assert path is not None

    # event anchors: waypoint nearest each route-time fraction, non-decreasing
    route_time = path.waypoints[-1].t
    anchors: list[int] = []
    hi = max(1, len(path.cells) - 2)
    prev_anchor = 1
    for k in range(1, n + 1):
        target = route_time * k / (n + 1)
        best = min(
            range(len(path.waypoints)), key=lambda j: abs(path.waypoints[j].t - target)
        )
        anchor = min(max(best, prev_anchor), hi)
        anchors.append(anchor)
        prev_anchor = anchor

    walk_clip = _walk_clip(chapter, speed)
    cells = list(path.cells)
    t = ch_t0
    wps: list[Waypoint] = [_wp(terrain, cells[0], t)]
    agent_cues: list[AgentCue] = []
    spawns: list[SpawnRecord] = []
    windows: list[EventWindow] = []
    walk_stretches: list[tuple[float, float]] = []
    charge_until: float | None = None

    def emit_walk(upto: int, cur: int) -> int:
        """Walk cells[cur..upto], emitting agent cues; returns new index."""
        nonlocal t
        if upto <= cur:
            return cur
        leg_start = t
        leg_wps = [wps[-1]]
        for j in range(cur + 1, upto + 1):
            t += _step_time(terrain, cells[j - 1], cells[j], speed)
            wp = _wp(terrain, cells[j], t)
            wps.append(wp)
            leg_wps.append(wp)
        walk_stretches.append((leg_start, t))
        if charge_until is not None and leg_start < charge_until:
            # clip split snaps to a waypoint so every cue boundary stays on-surface
            split_at = 0
            for j, wp in enumerate(leg_wps):
                if wp.t <= charge_until:
                    split_at = j
            if split_at > 0:
                agent_cues.append(
                    AgentCue(
                        leg_start,
                        leg_wps[split_at].t,
                        AgentClip.BRAVE_CHARGE,
                        speed,
                        tuple(leg_wps[: split_at + 1]),
                    )
                )
            if split_at < len(leg_wps) - 1:
                agent_cues.append(
                    AgentCue(
                        leg_wps[split_at].t,
                        t,
                        walk_clip,
                        speed,
                        tuple(leg_wps[split_at:]),
                    )
                )
        else:
            agent_cues.append(AgentCue(leg_start, t, walk_clip, speed, tuple(leg_wps)))
        return upto

    def emit_hold(t1: float, clip: AgentClip) -> None:
        nonlocal t
        if t1 <= t:
            return
        a = wps[-1]
        b = Waypoint(a.x, a.y, a.z, t1)
        wps.append(b)
        agent_cues.append(AgentCue(t, t1, clip, 0.0, (a, b)))
        t = t1

    cur = 0
    for ev, anchor in zip(interior, anchors):
        cur = emit_walk(anchor, cur)
        onset = t
        win_end = min(onset + EVENT_NOMINAL_S, ch_t1)
        if ev.kind is EventKind.STRESS:
            threat = ev.response.kind is StressKind.THREAT
            windows.append(EventWindow(EventKind.STRESS, onset, win_end, threat=threat))
            band = place_rock_band(terrain, path, cur, onset)
            rp = replan_on_block(
                terrain, path, band, cur, ev.response, chapter.energy, speed, avoid=avoid
            )
            shrink_t = clear_t = None
            if rp is None:
                hold = THREAT_HOLD_S if threat else 0.0
            else:
                hold = rp.hold_s
                cont_walk = sum(
                    _step_time(terrain, a, b, speed)
                    for a, b in zip(rp.continuation.cells, rp.continuation.cells[1:])
                )
                if onset + hold + cont_walk > ch_t1:
                    # detour would overrun the chapter: wait out the band instead
                    hold = 2 * THREAT_HOLD_S
                    shrink_t = onset + THREAT_HOLD_S
                    clear_t = onset + 2 * THREAT_HOLD_S
                else:
                    cells[cur + 1 :] = list(rp.continuation.cells[1:])
                    if rp.shrink_time_s is not None:
                        shrink_t = rp.shrink_time_s
                    if rp.clear_time_s is not None:
                        clear_t = rp.clear_time_s
            spawns.append(
                SpawnRecord(
                    kind=SpawnKind.ROCK_RAIN,
                    t0=onset,
                    cells=tuple(sorted(band.cells)),
                    core_cells=tuple(sorted(band.core_cells)),
                    shrink_t=shrink_t,
                    clear_t=clear_t,
                )
            )
            if hold > 0:
                emit_hold(min(onset + hold, ch_t1), AgentClip.COWER_SCARED)
            else:
                charge_until = win_end
        else:
            windows.append(EventWindow(ev.kind, onset, win_end))
            if ev.kind is EventKind.SOCIAL:
                placement = place_social(
                    terrain, path, cur, ev.partner_scale, derive(seed, "spawn", index)
                )
                spawns.append(
                    SpawnRecord(
                        kind=SpawnKind.PARTNER_DOG,
                        t0=onset,
                        x=placement.x,
                        y=placement.y,
                        z=placement.z,
                        scale=placement.scale,
                        social=ev.social_kind.value,
                    )
                )
                clip = _EVENT_CLIPS[ev.social_kind.value]
            elif ev.kind is EventKind.SLEEP:
                clip = AgentClip.FALL_ASLEEP
            else:
                clip = AgentClip.RUN_ENERGETIC
            emit_hold(win_end, clip)

    cur = emit_walk(len(cells) - 1, cur)
    arrival = t
    if arrival > ch_t1 + 1e-6:
        raise RuntimeError(
            f"chapter {index} overran its budget: arrival {arrival:.3f} > {ch_t1:.3f}"
        )
    idle_clip = (
        AgentClip.MOON_IDLE if (is_final and reaches_moon) else AgentClip.SIT_LONELY
    )
    emit_hold(ch_t1, idle_clip)

    intensity = chapter.affect.intensity()
    palette = palette_for(chapter.quadrant, intensity)
    solitary = not any(e.kind is EventKind.SOCIAL for e in interior)
    timeline = ChapterTimeline(
        t0=ch_t0,
        t1=ch_t1,
        quadrant=chapter.quadrant,
        intensity=intensity,
        palette=palette,
        late_night=chapter.late_night,
        solitary=solitary,
        windows=windows,
        walk_stretches=walk_stretches,
        speed_mps=speed,
    )
    info = ChapterInfo(
        t0=ch_t0,
        t1=ch_t1,
        date=chapter.date,
        valence=chapter.affect.valence,
        arousal=chapter.affect.arousal,
        quadrant=chapter.quadrant,
        weather=palette.weather.value,
        events=tuple(_event_descriptor(e) for e in interior),
        title=chapter.title,
    )
    return _ChapterBuild(terrain, info, timeline, agent_cues, spawns)


def compile_script(week: WeekData | None, mode: Mode, seed: int) -> SceneScript:
    """Run the full pipeline: plan -> terrain/route/events -> cue tracks."""
    seed &= M64
    plan = plan_story(week, mode)
    total = plan.total_duration_s
    ending_start = total - ENDING_S

    builds: list[_ChapterBuild] = []
    t_cursor = INTRO_S
    n = len(plan.chapters)
    for i, chapter in enumerate(plan.chapters):
        ch_t1 = ending_start if i == n - 1 else t_cursor + chapter.duration_s
        builds.append(
            _compile_chapter(
                chapter, i, i == n - 1, t_cursor, ch_t1, plan.outcome.reaches_moon, seed
            )
        )
        t_cursor = ch_t1

    timeline = Timeline(
        total_s=total,
        intro_end=INTRO_S,
        ending_start=ending_start,
        chapters=[b.timeline for b in builds],
        reaches_moon=plan.outcome.reaches_moon,
    )

    # agent idles through the intro and the moon-reveal ending
    first = builds[0]
    intro_wp_a = first.agent_cues[0].waypoints[0]
    intro_cue = AgentCue(
        0.0,
        INTRO_S,
        AgentClip.SIT_LONELY,
        0.0,
        (
            Waypoint(intro_wp_a.x, intro_wp_a.y, intro_wp_a.z, 0.0),
            Waypoint(intro_wp_a.x, intro_wp_a.y, intro_wp_a.z, INTRO_S),
        ),
    )
    last = builds[-1]
    end_wp = last.agent_cues[-1].waypoints[-1]
    ending_clip = AgentClip.MOON_IDLE if plan.outcome.reaches_moon else AgentClip.SIT_LONELY
    ending_cue = AgentCue(
        ending_start,
        total,
        ending_clip,
        0.0,
        (
            Waypoint(end_wp.x, end_wp.y, end_wp.z, ending_start),
            Waypoint(end_wp.x, end_wp.y, end_wp.z, total),
        ),
    )
    agent = [intro_cue] + [cue for b in builds for cue in b.agent_cues] + [ending_cue]

    titles: list[TitleCue] = []
    if mode is Mode.PERSONALIZED:
        for i, b in enumerate(builds):
            t0 = 0.0 if i == 0 else b.info.t0
            titles.append(TitleCue(t0, t0 + TITLE_S, b.info.title or ""))

    return SceneScript(
        version=SCRIPT_VERSION,
        mode=mode,
        seed=seed,
        total_duration_s=total,
        outcome={
            "score": plan.outcome.score,
            "moon_distance_m": plan.outcome.moon_distance_m,
            "reaches_moon": plan.outcome.reaches_moon,
        },
        terrain=[b.terrain for b in builds],
        chapters=[b.info for b in builds],
        camera=schedule_cameras(timeline, derive(seed, "camera")),
        agent=agent,
        lighting=lighting_track(timeline),
        audio=schedule_audio(timeline),
        spawns=sorted(
            (s for b in builds for s in b.spawns), key=lambda s: (s.t0, s.kind.value)
        ),
        titles=titles,
    )


# --- canonical serialization ------------------------------------------------


def _fmt_number(x: float | int) -> str:
    if isinstance(x, int):
        return str(x)
    r = round(x, 3)
    if r == 0:
        return "0"
    s = f"{r:.3f}".rstrip("0").rstrip(".")
    return s if s else "0"


def _canon(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return _fmt_number(value)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=True)
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_canon(v) for v in value) + "]"
    if isinstance(value, dict):
        parts = []
        for key in sorted(value):
            parts.append(json.dumps(key, ensure_ascii=True) + ":" + _canon(value[key]))
        return "{" + ",".join(parts) + "}"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _waypoints_obj(wps: tuple[Waypoint, ...]) -> list[list[float]]:
    return [[w.x, w.y, w.z, w.t] for w in wps]


def script_to_obj(script: SceneScript) -> dict:
    """Plain-JSON form of a script (no dataclasses, no enums)."""
    chapters = []
    for c in script.chapters:
        entry = {
            "t0": c.t0,
            "t1": c.t1,
            "date": c.date.isoformat(),
            "valence": c.valence,
            "arousal": c.arousal,
            "quadrant": c.quadrant.value,
            "weather": c.weather,
            "events": [dict(e) for e in c.events],
        }
        if c.title is not None:
            entry["title"] = c.title
        chapters.append(entry)

    spawns = []
    for s in script.spawns:
        entry: dict = {"kind": s.kind.value, "t0": s.t0}
        if s.kind is SpawnKind.PARTNER_DOG:
            entry.update(x=s.x, y=s.y, z=s.z, scale=s.scale, social=s.social)
        else:
            entry["cells"] = [list(c) for c in s.cells]
            entry["core_cells"] = [list(c) for c in s.core_cells]
            if s.shrink_t is not None:
                entry["shrink_t"] = s.shrink_t
            if s.clear_t is not None:
                entry["clear_t"] = s.clear_t
        spawns.append(entry)

    return {
        "version": script.version,
        "mode": script.mode.value,
        "seed": script.seed,
        "total_duration_s": script.total_duration_s,
        "outcome": dict(script.outcome),
        "terrain": [
            {
                "seed": t.seed,
                "amplitude_m": t.amplitude_m,
                "cell_m": t.cell_m,
                "size": GRID_SIZE,
                "heights": [float(h) for row in t.heights for h in row],
            }
            for t in script.terrain
        ],
        "chapters": chapters,
        "tracks": {
            "camera": [
                {
                    "t0": c.t0,
                    "t1": c.t1,
                    "shot": c.shot.value,
                    "effects": [
                        {"kind": e.kind.value, "strength": e.strength} for e in c.effects
                    ],
                }
                for c in script.camera
            ],
            "agent": [
                {
                    "t0": a.t0,
                    "t1": a.t1,
                    "clip": a.clip.value,
                    "speed_mps": a.speed_mps,
                    "waypoints": _waypoints_obj(a.waypoints),
                }
                for a in script.agent
            ],
            "lighting": [
                {
                    "t": k.t,
                    "sky_rgb": list(k.sky_rgb),
                    "fog_density": k.fog_density,
                    "light_temperature": k.light_temperature,
                }
                for k in script.lighting
            ],
            "audio": [{"t0": a.t0, "t1": a.t1, "sound": a.sound.value} for a in script.audio],
            "spawns": spawns,
            "titles": [{"t0": t.t0, "t1": t.t1, "text": t.text} for t in script.titles],
        },
    }


def serialize(script: SceneScript | dict) -> bytes:
    obj = script_to_obj(script) if isinstance(script, SceneScript) else script
    return (_canon(obj) + "\n").encode("utf-8")


# --- validation ---------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


_TIME_TOL = 1e-9
_LEN_TOL = 2e-3  # 3-decimal rounding can shave up to a millisecond per endpoint

_ENUMS = {
    "shot": {s.value for s in ShotKind},
    "clip": {c.value for c in AgentClip},
    "sound": {s.value for s in Sound},
    "lens": {k.value for k in LensKind},
    "spawn": {k.value for k in SpawnKind},
    "mode": {m.value for m in Mode},
}
_ROTATING_VALUES = {s.value for s in ROTATING_SHOTS}


def _is_num(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


class _Checker:
    def __init__(self):
        self.violations: list[Violation] = []

    def add(self, code: str, message: str) -> None:
        self.violations.append(Violation(code, message))

    def require(self, obj: dict, name: str, where: str):
        if not isinstance(obj, dict) or name not in obj:
            self.add("missing-field", f"{where}.{name}")
            return None
        return obj[name]

    def num(self, obj: dict, name: str, where: str) -> float | None:
        v = self.require(obj, name, where)
        if v is None:
            return None
        if not _is_num(v):
            self.add("bad-type", f"{where}.{name} must be a number")
            return None
        return float(v)


def _check_cue_track(
    ck: _Checker, cues, where: str, total: float, overlap_code: str = "track-overlap"
) -> list[tuple[float, float, dict]]:
    """Shared structural checks: t0/t1 present, in-bounds, time-sorted."""
    spans = []
    if not isinstance(cues, list):
        ck.add("bad-type", f"{where} must be an array")
        return spans
    prev_t0 = -math.inf
    for i, cue in enumerate(cues):
        if not isinstance(cue, dict):
            ck.add("bad-type", f"{where}[{i}] must be an object")
            continue
        t0 = ck.num(cue, "t0", f"{where}[{i}]")
        t1 = ck.num(cue, "t1", f"{where}[{i}]")
        if t0 is None or t1 is None:
            continue
        if t0 < -_TIME_TOL or t1 > total + _TIME_TOL or t1 < t0:
            ck.add("time-out-of-bounds", f"{where}[{i}] spans [{t0}, {t1}] outside [0, {total}]")
        if t0 < prev_t0 - _TIME_TOL:
            ck.add("track-unsorted", f"{where}[{i}] starts before its predecessor")
        prev_t0 = max(prev_t0, t0)
        spans.append((t0, t1, cue))
    return spans


def validate_script(data: bytes | str | dict) -> list[Violation]:
    """Schema/structure checks; returns an empty list when the script is ok.

    Never raises on malformed input. The violation codes are documented in
    docs/scene-schema.md together with the mutation suite they gate.
    """
    ck = _Checker()
    if isinstance(data, (bytes, str)):
        try:
            obj = json.loads(data)
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            ck.add("parse-error", str(exc))
            return ck.violations
    else:
        obj = data
    if not isinstance(obj, dict):
        ck.add("parse-error", "top level must be a JSON object")
        return ck.violations

    version = ck.require(obj, "version", "$")
    if version is not None and version != SCRIPT_VERSION:
        ck.add("unsupported-version", f"version {version!r} (expected {SCRIPT_VERSION!r})")
        return ck.violations

    mode = ck.require(obj, "mode", "$")
    if mode is not None and mode not in _ENUMS["mode"]:
        ck.add("bad-enum", f"mode {mode!r}")
    total = ck.num(obj, "total_duration_s", "$")
    seed = ck.require(obj, "seed", "$")
    if seed is not None and (isinstance(seed, bool) or not isinstance(seed, int)):
        ck.add("bad-type", "$.seed must be an integer")
    outcome = ck.require(obj, "outcome", "$")
    if isinstance(outcome, dict):
        ck.num(outcome, "score", "$.outcome")
        ck.num(outcome, "moon_distance_m", "$.outcome")
        reaches = ck.require(outcome, "reaches_moon", "$.outcome")
        if reaches is not None and not isinstance(reaches, bool):
            ck.add("bad-type", "$.outcome.reaches_moon must be a boolean")
    elif outcome is not None:
        ck.add("bad-type", "$.outcome must be an object")

    chapters = ck.require(obj, "chapters", "$")
    terrain = ck.require(obj, "terrain", "$")
    tracks = ck.require(obj, "tracks", "$")
    if total is None or not isinstance(tracks, dict):
        if tracks is not None and not isinstance(tracks, dict):
            ck.add("bad-type", "$.tracks must be an object")
        return ck.violations

    if isinstance(terrain, list):
        for i, entry in enumerate(terrain):
            if not isinstance(entry, dict):
                ck.add("bad-type", f"$.terrain[{i}] must be an object")
                continue
            heights = ck.require(entry, "heights", f"$.terrain[{i}]")
            size = ck.require(entry, "size", f"$.terrain[{i}]")
            if isinstance(heights, list) and isinstance(size, int):
                if len(heights) != size * size:
                    ck.add(
                        "terrain-shape",
                        f"$.terrain[{i}].heights has {len(heights)} values, expected {size * size}",
                    )
    elif terrain is not None:
        ck.add("bad-type", "$.terrain must be an array")

    n_chapters = 0
    if isinstance(chapters, list):
        n_chapters = len(chapters)
        prev_t1 = None
        for i, c in enumerate(chapters):
            if not isinstance(c, dict):
                ck.add("bad-type", f"$.chapters[{i}] must be an object")
                continue
            t0 = ck.num(c, "t0", f"$.chapters[{i}]")
            t1 = ck.num(c, "t1", f"$.chapters[{i}]")
            if t0 is not None and t1 is not None:
                if t0 < -_TIME_TOL or t1 > total + _TIME_TOL or t1 <= t0:
                    ck.add("time-out-of-bounds", f"$.chapters[{i}] span [{t0}, {t1}]")
                if prev_t1 is not None and t0 < prev_t1 - _TIME_TOL:
                    ck.add("track-overlap", f"$.chapters[{i}] overlaps its predecessor")
                prev_t1 = t1
    elif chapters is not None:
        ck.add("bad-type", "$.chapters must be an array")

    # camera: exact partition of [0, total]
    camera = tracks.get("camera")
    if camera is None:
        ck.add("missing-field", "$.tracks.camera")
    else:
        spans = _check_cue_track(ck, camera, "$.tracks.camera", total)
        prev_shot = None
        for i, (t0, t1, cue) in enumerate(spans):
            shot = cue.get("shot")
            if shot is None:
                ck.add("missing-field", f"$.tracks.camera[{i}].shot")
            elif shot not in _ENUMS["shot"]:
                ck.add("bad-enum", f"$.tracks.camera[{i}].shot {shot!r}")
            if t1 - t0 < SHOT_MIN_S - _LEN_TOL:
                ck.add("cue-too-short", f"$.tracks.camera[{i}] lasts {t1 - t0:.3f} s")
            if (
                shot in _ROTATING_VALUES
                and prev_shot == shot
            ):
                ck.add("camera-repeat", f"$.tracks.camera[{i}] repeats {shot!r}")
            prev_shot = shot
            effects = cue.get("effects")
            if isinstance(effects, list):
                for e in effects:
                    if isinstance(e, dict) and e.get("kind") not in _ENUMS["lens"]:
                        ck.add("bad-enum", f"$.tracks.camera[{i}] lens {e.get('kind')!r}")
        if spans:
            if abs(spans[0][0]) > _LEN_TOL:
                ck.add("camera-gap", f"camera track starts at {spans[0][0]}, not 0")
            if abs(spans[-1][1] - total) > _LEN_TOL:
                ck.add("camera-gap", f"camera track ends at {spans[-1][1]}, not {total}")
            for (a0, a1, _), (b0, b1, _) in zip(spans, spans[1:]):
                if b0 - a1 > _LEN_TOL:
                    ck.add("camera-gap", f"camera track gap at {a1}")
                elif a1 - b0 > _LEN_TOL:
                    ck.add("camera-overlap", f"camera cues overlap at {b0}")
        elif total > 0:
            ck.add("camera-gap", "camera track is empty")

    # agent: sorted, non-overlapping cues with enum clips
    agent = tracks.get("agent")
    if agent is None:
        ck.add("missing-field", "$.tracks.agent")
    else:
        spans = _check_cue_track(ck, agent, "$.tracks.agent", total)
        for i, (t0, t1, cue) in enumerate(spans):
            clip = cue.get("clip")
            if clip is None:
                ck.add("missing-field", f"$.tracks.agent[{i}].clip")
            elif clip not in _ENUMS["clip"]:
                ck.add("bad-enum", f"$.tracks.agent[{i}].clip {clip!r}")
        for (a0, a1, _), (b0, b1, _) in zip(spans, spans[1:]):
            if a1 - b0 > _LEN_TOL:
                ck.add("track-overlap", f"$.tracks.agent overlap at {b0}")

    # lighting: time-sorted keyframes
    lighting = tracks.get("lighting")
    if lighting is None:
        ck.add("missing-field", "$.tracks.lighting")
    elif not isinstance(lighting, list):
        ck.add("bad-type", "$.tracks.lighting must be an array")
    else:
        prev_t = -math.inf
        for i, kf in enumerate(lighting):
            if not isinstance(kf, dict):
                ck.add("bad-type", f"$.tracks.lighting[{i}] must be an object")
                continue
            tt = ck.num(kf, "t", f"$.tracks.lighting[{i}]")
            if tt is None:
                continue
            if tt < -_TIME_TOL or tt > total + _TIME_TOL:
                ck.add("time-out-of-bounds", f"$.tracks.lighting[{i}].t = {tt}")
            if tt < prev_t - _TIME_TOL:
                ck.add("track-unsorted", f"$.tracks.lighting[{i}] out of order")
            prev_t = max(prev_t, tt)

    # audio: sorted by t0; the same sound never overlaps itself
    audio = tracks.get("audio")
    if audio is None:
        ck.add("missing-field", "$.tracks.audio")
    else:
        spans = _check_cue_track(ck, audio, "$.tracks.audio", total)
        per_sound: dict[str, float] = {}
        for i, (t0, t1, cue) in enumerate(spans):
            sound = cue.get("sound")
            if sound is None:
                ck.add("missing-field", f"$.tracks.audio[{i}].sound")
                continue
            if sound not in _ENUMS["sound"]:
                ck.add("bad-enum", f"$.tracks.audio[{i}].sound {sound!r}")
                continue
            if sound in per_sound and t0 < per_sound[sound] - _LEN_TOL:
                ck.add("track-overlap", f"$.tracks.audio[{i}] {sound!r} overlaps itself")
            per_sound[sound] = max(per_sound.get(sound, -math.inf), t1)

    # spawns
    spawn_list = tracks.get("spawns")
    if spawn_list is None:
        ck.add("missing-field", "$.tracks.spawns")
    elif not isinstance(spawn_list, list):
        ck.add("bad-type", "$.tracks.spawns must be an array")
    else:
        for i, s in enumerate(spawn_list):
            if not isinstance(s, dict):
                ck.add("bad-type", f"$.tracks.spawns[{i}] must be an object")
                continue
            kind = s.get("kind")
            if kind not in _ENUMS["spawn"]:
                ck.add("bad-enum", f"$.tracks.spawns[{i}].kind {kind!r}")
            st = ck.num(s, "t0", f"$.tracks.spawns[{i}]")
            if st is not None and (st < -_TIME_TOL or st > total + _TIME_TOL):
                ck.add("time-out-of-bounds", f"$.tracks.spawns[{i}].t0 = {st}")

    # titles: present iff personalized, one per chapter
    titles = tracks.get("titles")
    if titles is None:
        ck.add("missing-field", "$.tracks.titles")
    else:
        spans = _check_cue_track(ck, titles, "$.tracks.titles", total)
        for i, (t0, t1, cue) in enumerate(spans):
            if "text" not in cue:
                ck.add("missing-field", f"$.tracks.titles[{i}].text")
            elif not isinstance(cue["text"], str):
                ck.add("bad-type", f"$.tracks.titles[{i}].text must be a string")
        if mode == Mode.CONTROL.value and len(spans) > 0:
            ck.add("title-mode-mismatch", "control scripts carry no titles")
        if mode == Mode.PERSONALIZED.value:
            if len(spans) == 0 and n_chapters > 0:
                ck.add("title-mode-mismatch", "personalized scripts must carry titles")
            elif n_chapters and len(spans) != n_chapters:
                ck.add(
                    "title-count",
                    f"{len(spans)} titles for {n_chapters} chapters",
                )

    return ck.violations


# --- human-readable summary ---------------------------------------------------


def _describe_events(events: list[dict]) -> str:
    if not events:
        return "wander only"
    parts = []
    for e in events:
        kind = e.get("kind", "?")
        if kind == "social":
            parts.append(f"social({e.get('social')}, x{_fmt_number(e.get('partner_scale', 1.0))})")
        elif kind == "stress":
            parts.append(f"stress({e.get('response')})")
        elif kind == "sleep":
            parts.append(f"sleep(severity {_fmt_number(e.get('severity', 0.0))})")
        else:
            parts.append(str(kind))
    return ", ".join(parts)


def inspect_script(obj: dict) -> str:
    """Per-chapter summary table plus totals and the ending."""
    lines = []
    mode = obj.get("mode", "?")
    total = obj.get("total_duration_s", 0.0)
    chapters = obj.get("chapters", [])
    lines.append(
        f"mood movie — {mode}, seed {obj.get('seed', '?')}, "
        f"{_fmt_number(total)} s, {len(chapters)} chapters"
    )
    for i, c in enumerate(chapters, start=1):
        duration = c.get("t1", 0.0) - c.get("t0", 0.0)
        row = (
            f"  {i}  {c.get('date', '?')}  {c.get('quadrant', '?'):<11}"
            f"{_describe_events(c.get('events', [])):<42}{_fmt_number(duration):>7} s"
        )
        if "title" in c:
            row += f'  "{c["title"]}"'
        lines.append(row)
    outcome = obj.get("outcome", {})
    if outcome.get("reaches_moon"):
        ending = "reaches the moon"
    else:
        ending = "gazes at the distant moon"
    lines.append(
        f"ending: {ending} — purpose {_fmt_number(outcome.get('score', 0.0))}, "
        f"moon {_fmt_number(outcome.get('moon_distance_m', 0.0))} m"
    )
    return "\n".join(lines)
