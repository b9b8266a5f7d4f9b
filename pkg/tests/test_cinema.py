"""Camera partition, forced specials, lens table, audio and lighting rules."""

import pytest

from moodfilm.affect import Quadrant, palette_for
from moodfilm.cinema import (
    AudioCue,
    ChapterTimeline,
    EventWindow,
    LensKind,
    ROTATING_SHOTS,
    SHOT_MIN_S,
    ShotKind,
    Sound,
    Timeline,
    lens_for,
    lighting_track,
    schedule_audio,
    schedule_cameras,
)
from moodfilm.story import EventKind


def make_chapter(
    t0,
    t1,
    quadrant=Quadrant.CONTENT,
    intensity=0.3,
    late_night=False,
    solitary=True,
    windows=(),
    walk_stretches=(),
    speed=1.2,
):
    return ChapterTimeline(
        t0=t0,
        t1=t1,
        quadrant=quadrant,
        intensity=intensity,
        palette=palette_for(quadrant, intensity),
        late_night=late_night,
        solitary=solitary,
        windows=list(windows),
        walk_stretches=list(walk_stretches),
        speed_mps=speed,
    )


def make_timeline(chapters, reaches_moon=True):
    total = chapters[-1].t1 + 20.0
    return Timeline(
        total_s=total,
        intro_end=10.0,
        ending_start=chapters[-1].t1,
        chapters=chapters,
        reaches_moon=reaches_moon,
    )


def assert_partition(cues, total):
    assert cues[0].t0 == 0.0
    assert cues[-1].t1 == total
    for a, b in zip(cues, cues[1:]):
        assert a.t1 == b.t0, f"gap or overlap at {a.t1} vs {b.t0}"
    for cue in cues:
        assert cue.t1 - cue.t0 >= SHOT_MIN_S - 1e-9


def test_rotating_fill_partitions_an_eventless_chapter():
    timeline = make_timeline([make_chapter(10.0, 80.0, solitary=False)])
    cues = schedule_cameras(timeline, 17)
    assert_partition(cues, 100.0)
    rotating = [c for c in cues if c.shot in ROTATING_SHOTS]
    # 70 s of chapter filled with 4-8 s cues
    assert 9 <= len(rotating) <= 18
    for a, b in zip(cues, cues[1:]):
        if a.shot in ROTATING_SHOTS and b.shot in ROTATING_SHOTS:
            assert a.shot is not b.shot
    assert cues[0].shot is ShotKind.HIGH_WIDE
    assert cues[-1].shot is ShotKind.MOON_REVEAL


def test_sleep_window_forces_dutch_angle():
    windows = [EventWindow(EventKind.SLEEP, 40.0, 65.0)]
    timeline = make_timeline([make_chapter(10.0, 105.0, windows=windows, solitary=False)])
    cues = schedule_cameras(timeline, 3)
    assert_partition(cues, 125.0)
    dutch = [c for c in cues if c.shot is ShotKind.DUTCH_ANGLE]
    assert len(dutch) == 1
    assert dutch[0].t0 == 40.0 and dutch[0].t1 == 65.0


def test_stress_window_forces_closeup_then_weather_pan():
    windows = [EventWindow(EventKind.STRESS, 50.0, 75.0, threat=True)]
    timeline = make_timeline([make_chapter(10.0, 105.0, windows=windows, solitary=False)])
    cues = schedule_cameras(timeline, 3)
    assert_partition(cues, 125.0)
    ecu = next(c for c in cues if c.shot is ShotKind.EXTREME_CLOSE_UP)
    pan = next(c for c in cues if c.shot is ShotKind.WEATHER_PAN)
    assert ecu.t0 == 50.0 and ecu.t1 == pan.t0 and pan.t1 == 75.0


def test_solitary_chapter_gets_one_overhead_orbit():
    timeline = make_timeline([make_chapter(10.0, 90.0, solitary=True)])
    cues = schedule_cameras(timeline, 11)
    assert_partition(cues, 110.0)
    assert sum(1 for c in cues if c.shot is ShotKind.OVERHEAD_SOLITUDE) == 1


def test_social_chapter_has_no_overhead_orbit():
    windows = [EventWindow(EventKind.SOCIAL, 45.0, 70.0)]
    timeline = make_timeline([make_chapter(10.0, 105.0, windows=windows, solitary=False)])
    cues = schedule_cameras(timeline, 11)
    assert all(c.shot is not ShotKind.OVERHEAD_SOLITUDE for c in cues)


def test_schedule_is_deterministic_per_seed():
    timeline = make_timeline([make_chapter(10.0, 90.0)])
    assert schedule_cameras(timeline, 5) == schedule_cameras(timeline, 5)
    assert schedule_cameras(timeline, 5) != schedule_cameras(timeline, 6)


def test_lens_table():
    assert lens_for(ShotKind.FRONTAL, Quadrant.CONTENT, 0.4) == ()
    ecu = lens_for(ShotKind.EXTREME_CLOSE_UP, Quadrant.EXCITED, 0.9)
    assert [(e.kind, e.strength) for e in ecu] == [(LensKind.DEPTH_OF_FIELD_BLUR, 0.6)]
    dutch = lens_for(ShotKind.DUTCH_ANGLE, Quadrant.DEPRESSED, 0.2)
    assert [(e.kind, e.strength) for e in dutch] == [(LensKind.DOUBLE_FOCUS, 0.5)]
    side = lens_for(ShotKind.SIDE, Quadrant.DISTRESSED, 0.8)
    assert [(e.kind, e.strength) for e in side] == [(LensKind.RECOLOR, 0.8)]


def test_distressed_chapter_recolors_every_cue():
    timeline = make_timeline(
        [make_chapter(10.0, 90.0, quadrant=Quadrant.DISTRESSED, intensity=0.7)]
    )
    cues = schedule_cameras(timeline, 2)
    for cue in cues:
        kinds = [e.kind for e in cue.effects]
        assert LensKind.RECOLOR in kinds


def test_audio_snore_spans_sleep_window():
    windows = [EventWindow(EventKind.SLEEP, 40.0, 65.0)]
    chapter = make_chapter(10.0, 105.0, windows=windows, walk_stretches=[(10.0, 40.0)])
    cues = schedule_audio(make_timeline([chapter]))
    snores = [c for c in cues if c.sound is Sound.SNORE]
    assert snores == [AudioCue(40.0, 65.0, Sound.SNORE)]


def test_audio_pant_needs_sustained_speed():
    slow = make_chapter(10.0, 80.0, walk_stretches=[(10.0, 70.0)], speed=1.9)
    assert not [
        c for c in schedule_audio(make_timeline([slow])) if c.sound is Sound.PANT
    ]
    fast = make_chapter(10.0, 80.0, walk_stretches=[(10.0, 12.5), (20.0, 70.0)], speed=2.3)
    pants = [c for c in schedule_audio(make_timeline([fast])) if c.sound is Sound.PANT]
    assert pants == [AudioCue(20.0, 70.0, Sound.PANT)]  # the 2.5 s stretch is too short


def test_audio_ending_music_follows_outcome():
    chapter = make_chapter(10.0, 80.0)
    reached = schedule_audio(make_timeline([chapter], reaches_moon=True))
    ending = [c for c in reached if c.t0 == 80.0 and c.sound.value.startswith("music")]
    assert [c.sound for c in ending] == [Sound.MUSIC_TRIUMPH]
    missed = schedule_audio(make_timeline([chapter], reaches_moon=False))
    ending = [c for c in missed if c.t0 == 80.0 and c.sound.value.startswith("music")]
    assert [c.sound for c in ending] == [Sound.MUSIC_CALM]


def test_audio_howl_only_for_threats():
    threat = EventWindow(EventKind.STRESS, 40.0, 65.0, threat=True)
    challenge = EventWindow(EventKind.STRESS, 40.0, 65.0, threat=False)
    with_threat = schedule_audio(
        make_timeline([make_chapter(10.0, 105.0, windows=[threat])])
    )
    assert any(c.sound is Sound.HOWL and c.t0 == 40.0 for c in with_threat)
    with_challenge = schedule_audio(
        make_timeline([make_chapter(10.0, 105.0, windows=[challenge])])
    )
    assert not any(c.sound is Sound.HOWL for c in with_challenge)


def test_audio_snore_and_pant_never_overlap():
    windows = [EventWindow(EventKind.SLEEP, 40.0, 65.0)]
    chapter = make_chapter(
        10.0, 120.0, windows=windows,
        walk_stretches=[(10.0, 40.0), (65.0, 110.0)], speed=2.5,
    )
    cues = schedule_audio(make_timeline([chapter]))
    snores = [c for c in cues if c.sound is Sound.SNORE]
    pants = [c for c in cues if c.sound is Sound.PANT]
    assert snores and pants
    for s in snores:
        for p in pants:
            assert s.t1 <= p.t0 or p.t1 <= s.t0


def test_audio_music_per_quadrant():
    chapters = [
        make_chapter(10.0, 80.0, quadrant=Quadrant.EXCITED),
        make_chapter(80.0, 150.0, quadrant=Quadrant.DEPRESSED),
    ]
    cues = schedule_audio(make_timeline(chapters))
    assert AudioCue(0.0, 80.0, Sound.MUSIC_CALM) in cues
    assert AudioCue(80.0, 150.0, Sound.MUSIC_TENSE) in cues


def test_lighting_two_keyframes_per_chapter_with_crossfade():
    chapters = [
        make_chapter(10.0, 80.0, quadrant=Quadrant.CONTENT, intensity=0.2),
        make_chapter(80.0, 150.0, quadrant=Quadrant.DISTRESSED, intensity=0.8),
    ]
    frames = lighting_track(make_timeline(chapters))
    assert len(frames) == 4
    assert [f.t for f in frames] == [0.0, 5.0, 80.0, 85.0]
    # the boundary keyframe holds the previous chapter's look
    assert frames[2].sky_rgb == frames[1].sky_rgb
    assert frames[3].sky_rgb == palette_for(Quadrant.DISTRESSED, 0.8).sky_rgb


def test_lighting_identical_palettes_crossfade_invisibly():
    chapters = [
        make_chapter(10.0, 80.0, quadrant=Quadrant.CONTENT, intensity=0.2),
        make_chapter(80.0, 150.0, quadrant=Quadrant.CONTENT, intensity=0.2),
    ]
    frames = lighting_track(make_timeline(chapters))
    assert frames[2].sky_rgb == frames[3].sky_rgb
    assert frames[2].fog_density == frames[3].fog_density


def test_lighting_late_night_dims_the_opening():
    bright = make_chapter(10.0, 80.0, quadrant=Quadrant.EXCITED, intensity=0.5)
    dim = make_chapter(10.0, 80.0, quadrant=Quadrant.EXCITED, intensity=0.5, late_night=True)
    bright_frames = lighting_track(make_timeline([bright]))
    dim_frames = lighting_track(make_timeline([dim]))
    for a, b in zip(dim_frames[1].sky_rgb, bright_frames[1].sky_rgb):
        assert a == pytest.approx(0.6 * b)
    assert dim_frames[1].fog_density == bright_frames[1].fog_density
