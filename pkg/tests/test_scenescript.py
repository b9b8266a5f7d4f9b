"""Compile determinism, canonical serialization, validator mutations, inspect."""

import json
import random

import pytest

from moodfilm.scenescript import (
    _fmt_number,
    compile_script,
    inspect_script,
    script_to_obj,
    serialize,
    validate_script,
)
from moodfilm.story import Mode

from conftest import random_week


@pytest.fixture(scope="module")
def control_bytes():
    return serialize(compile_script(None, Mode.CONTROL, 0))


@pytest.fixture(scope="module")
def personalized():
    week = random_week(random.Random(42), 7)
    script = compile_script(week, Mode.PERSONALIZED, 7)
    return week, script, serialize(script)


def test_compile_control_has_no_titles(control_bytes):
    obj = json.loads(control_bytes)
    assert obj["tracks"]["titles"] == []
    assert obj["mode"] == "control"


def test_serialize_is_deterministic(personalized):
    week, script, data = personalized
    again = serialize(compile_script(week, Mode.PERSONALIZED, 7))
    assert again == data


def test_total_duration_in_band_for_full_week(personalized):
    _, _, data = personalized
    obj = json.loads(data)
    assert 360.0 <= obj["total_duration_s"] <= 480.0


def test_seed_changes_only_staging(personalized):
    week, _, data = personalized
    a = json.loads(data)
    b = json.loads(serialize(compile_script(week, Mode.PERSONALIZED, 8)))
    keep = lambda obj: (
        [c["date"] for c in obj["chapters"]],
        [c.get("title") for c in obj["chapters"]],
        [c["events"] for c in obj["chapters"]],
        obj["outcome"],
        obj["total_duration_s"],
    )
    assert keep(a) == keep(b)
    assert a["tracks"]["camera"] != b["tracks"]["camera"]


def test_number_formatting_rules():
    assert _fmt_number(1.5004999) == "1.5"
    assert _fmt_number(2.0) == "2"
    assert _fmt_number(-0.0001) == "0"
    assert _fmt_number(0.125) == "0.125"
    assert _fmt_number(123.4567) == "123.457"
    assert _fmt_number(10) == "10"
    assert _fmt_number(-3.25) == "-3.25"


def test_serialization_is_construction_order_independent():
    obj = {"b": 1.5, "a": [1.0, {"z": True, "y": "text"}]}
    reordered = {"a": [1.0, {"y": "text", "z": True}], "b": 1.5}
    assert serialize(obj) == serialize(reordered)
    assert serialize(obj) == b'{"a":[1,{"y":"text","z":true}],"b":1.5}\n'


def test_round_trip_at_three_decimals(personalized):
    _, _, data = personalized
    assert serialize(json.loads(data)) == data


def test_compiled_scripts_validate_clean(personalized, control_bytes):
    _, _, data = personalized
    assert validate_script(data) == []
    assert validate_script(control_bytes) == []


def test_validator_never_raises_on_garbage():
    for junk in (b"", b"\x00\xff", b"[1,2,3]", b'{"version":"1"}', b'"just a string"'):
        violations = validate_script(junk)
        assert violations, junk


# the ten documented mutation classes -> expected violation code


def _mutate_truncate(obj, data):
    return data[: len(data) // 2]


def _mutate_version(obj, data):
    obj["version"] = "2"
    return serialize(obj)


def _mutate_drop_camera(obj, data):
    del obj["tracks"]["camera"]
    return serialize(obj)


def _mutate_duration_type(obj, data):
    obj["total_duration_s"] = "long"
    return serialize(obj)


def _mutate_bad_shot(obj, data):
    obj["tracks"]["camera"][0]["shot"] = "zoom"
    return serialize(obj)


def _mutate_camera_gap(obj, data):
    cue = obj["tracks"]["camera"][2]
    cue["t0"] = cue["t0"] + 5.0
    return serialize(obj)


def _mutate_camera_overlap(obj, data):
    cue = obj["tracks"]["camera"][2]
    cue["t1"] = cue["t1"] + 5.0
    return serialize(obj)


def _mutate_short_cue(obj, data):
    cue = obj["tracks"]["camera"][2]
    nxt = obj["tracks"]["camera"][3]
    cue["t1"] = cue["t0"] + 1.0
    nxt["t0"] = cue["t1"]
    return serialize(obj)


def _mutate_audio_past_end(obj, data):
    obj["tracks"]["audio"][-1]["t1"] = obj["total_duration_s"] + 30.0
    return serialize(obj)


def _mutate_title_in_control(obj, data):
    obj["tracks"]["titles"] = [{"t0": 0.0, "t1": 4.0, "text": "sneaky"}]
    return serialize(obj)


MUTATIONS = [
    (_mutate_truncate, "parse-error"),
    (_mutate_version, "unsupported-version"),
    (_mutate_drop_camera, "missing-field"),
    (_mutate_duration_type, "bad-type"),
    (_mutate_bad_shot, "bad-enum"),
    (_mutate_camera_gap, "camera-gap"),
    (_mutate_camera_overlap, "camera-overlap"),
    (_mutate_short_cue, "cue-too-short"),
    (_mutate_audio_past_end, "time-out-of-bounds"),
    (_mutate_title_in_control, "title-mode-mismatch"),
]


@pytest.mark.parametrize("mutate,code", MUTATIONS, ids=[c for _, c in MUTATIONS])
def test_mutation_rejected_with_correct_code(control_bytes, mutate, code):
    obj = json.loads(control_bytes)
    mutated = mutate(obj, control_bytes)
    violations = validate_script(mutated)
    assert code in {v.code for v in violations}, violations


def test_missing_personalized_titles_flagged(personalized):
    _, _, data = personalized
    obj = json.loads(data)
    obj["tracks"]["titles"] = []
    assert "title-mode-mismatch" in {v.code for v in validate_script(serialize(obj))}


def test_title_count_must_match_chapters(personalized):
    _, _, data = personalized
    obj = json.loads(data)
    obj["tracks"]["titles"] = obj["tracks"]["titles"][:-1]
    assert "title-count" in {v.code for v in validate_script(serialize(obj))}


def test_camera_repeat_flagged(control_bytes):
    obj = json.loads(control_bytes)
    cues = obj["tracks"]["camera"]
    rotating = {"frontal", "agent_pov", "close_up", "side"}
    idx = next(i for i, c in enumerate(cues[:-1]) if cues[i + 1]["shot"] in rotating)
    cues[idx]["shot"] = cues[idx + 1]["shot"]
    assert "camera-repeat" in {v.code for v in validate_script(serialize(obj))}


def test_inspect_control_lists_the_scripted_beats(control_bytes):
    text = inspect_script(json.loads(control_bytes))
    assert "fight" in text
    assert "happy" in text
    assert "stress(threat)" in text
    assert "wander only" in text
    assert "435" in text  # total duration matches the plan


def test_inspect_shows_titles_for_personalized(personalized):
    _, script, data = personalized
    text = inspect_script(json.loads(data))
    for chapter in json.loads(data)["chapters"]:
        assert f'"{chapter["title"]}"' in text


def test_script_obj_terrain_shape(personalized):
    _, script, data = personalized
    obj = json.loads(data)
    assert len(obj["terrain"]) == len(obj["chapters"])
    for entry in obj["terrain"]:
        assert entry["size"] == 64
        assert len(entry["heights"]) == 64 * 64
        assert entry["cell_m"] == 2
