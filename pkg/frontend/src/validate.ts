/** Scene-script validation, mirroring the compiler-side rules so a file the
 * CLI accepts loads here and vice versa. Violations are `code: message`. */

import type { SceneScript } from "./types.js";

export interface Violation { code: string; message: string; }

const SHOT_KINDS = new Set([
  "frontal", "agent_pov", "close_up", "side", "dutch_angle", "overhead_solitude",
  "extreme_close_up", "weather_pan", "moon_reveal", "low_tracking_run", "high_wide",
]);
const ROTATING = new Set(["frontal", "agent_pov", "close_up", "side"]);
const CLIP_KINDS = new Set([
  "walk_happy", "walk_sad", "run_energetic", "trudge", "sit_lonely", "play_bow",
  "fight_stance", "cower_scared", "brave_charge", "fall_asleep", "moon_idle",
]);
const SOUND_KINDS = new Set([
  "birds_breeze", "wind", "eerie", "rumble", "pant", "snore", "bark", "howl",
  "music_calm", "music_tense", "music_triumph",
]);
const SPAWN_KINDS = new Set(["partner_dog", "rock_rain"]);

const SHOT_MIN_S = 2.0;
const LEN_TOL = 2e-3;

function isNum(x: unknown): x is number {
  return typeof x === "number" && Number.isFinite(x);
}

export function validateScript(raw: string | unknown): Violation[] {
  const out: Violation[] = [];
  const add = (code: string, message: string) => out.push({ code, message });

  let obj: any = raw;
  if (typeof raw === "string") {
    try {
      obj = JSON.parse(raw);
    } catch (err) {
      add("parse-error", String(err));
      return out;
    }
  }
  if (typeof obj !== "object" || obj === null || Array.isArray(obj)) {
    add("parse-error", "top level must be a JSON object");
    return out;
  }

  if (!("version" in obj)) {
    add("missing-field", "$.version");
  } else if (obj.version !== "1") {
    add("unsupported-version", `version ${JSON.stringify(obj.version)} (expected "1")`);
    return out;
  }

  if (!("mode" in obj)) add("missing-field", "$.mode");
  else if (obj.mode !== "personalized" && obj.mode !== "control") add("bad-enum", `mode ${obj.mode}`);

  if (!("total_duration_s" in obj)) add("missing-field", "$.total_duration_s");
  else if (!isNum(obj.total_duration_s)) add("bad-type", "$.total_duration_s must be a number");
  const total: number | null = isNum(obj.total_duration_s) ? obj.total_duration_s : null;

  if (!("outcome" in obj)) add("missing-field", "$.outcome");
  else if (typeof obj.outcome !== "object" || obj.outcome === null) add("bad-type", "$.outcome must be an object");
  else {
    for (const key of ["score", "moon_distance_m"]) {
      if (!(key in obj.outcome)) add("missing-field", `$.outcome.${key}`);
      else if (!isNum(obj.outcome[key])) add("bad-type", `$.outcome.${key} must be a number`);
    }
    if (!("reaches_moon" in obj.outcome)) add("missing-field", "$.outcome.reaches_moon");
    else if (typeof obj.outcome.reaches_moon !== "boolean") add("bad-type", "$.outcome.reaches_moon must be a boolean");
  }

  if (!("terrain" in obj)) add("missing-field", "$.terrain");
  else if (!Array.isArray(obj.terrain)) add("bad-type", "$.terrain must be an array");
  else {
    obj.terrain.forEach((entry: any, i: number) => {
      if (typeof entry !== "object" || entry === null) {
        add("bad-type", `$.terrain[${i}] must be an object`);
        return;
      }
      if (!Array.isArray(entry.heights)) add("missing-field", `$.terrain[${i}].heights`);
      else if (isNum(entry.size) && entry.heights.length !== entry.size * entry.size) {
        add("terrain-shape", `$.terrain[${i}].heights has ${entry.heights.length} values`);
      }
    });
  }

  if (!("chapters" in obj)) add("missing-field", "$.chapters");
  const nChapters = Array.isArray(obj.chapters) ? obj.chapters.length : 0;

  if (!("tracks" in obj)) {
    add("missing-field", "$.tracks");
    return out;
  }
  if (typeof obj.tracks !== "object" || obj.tracks === null) {
    add("bad-type", "$.tracks must be an object");
    return out;
  }
  if (total === null) return out;

  const checkSpans = (cues: any[], where: string): [number, number, any][] => {
    const spans: [number, number, any][] = [];
    let prev = -Infinity;
    cues.forEach((cue: any, i: number) => {
      if (typeof cue !== "object" || cue === null) {
        add("bad-type", `${where}[${i}] must be an object`);
        return;
      }
      if (!isNum(cue.t0) || !isNum(cue.t1)) {
        add(isNum(cue.t0) && isNum(cue.t1) ? "bad-type" : "missing-field", `${where}[${i}].t0/t1`);
        return;
      }
      if (cue.t0 < -1e-9 || cue.t1 > total + 1e-9 || cue.t1 < cue.t0) {
        add("time-out-of-bounds", `${where}[${i}] spans [${cue.t0}, ${cue.t1}]`);
      }
      if (cue.t0 < prev - 1e-9) add("track-unsorted", `${where}[${i}] starts before its predecessor`);
      prev = Math.max(prev, cue.t0);
      spans.push([cue.t0, cue.t1, cue]);
    });
    return spans;
  };

  const tracks = obj.tracks;
  for (const name of ["camera", "agent", "lighting", "audio", "spawns", "titles"]) {
    if (!(name in tracks)) add("missing-field", `$.tracks.${name}`);
    else if (!Array.isArray(tracks[name])) add("bad-type", `$.tracks.${name} must be an array`);
  }

  if (Array.isArray(tracks.camera)) {
    const spans = checkSpans(tracks.camera, "$.tracks.camera");
    let prevShot: string | null = null;
    spans.forEach(([t0, t1, cue], i) => {
      if (!("shot" in cue)) add("missing-field", `$.tracks.camera[${i}].shot`);
      else if (!SHOT_KINDS.has(cue.shot)) add("bad-enum", `$.tracks.camera[${i}].shot ${cue.shot}`);
      if (t1 - t0 < SHOT_MIN_S - LEN_TOL) add("cue-too-short", `$.tracks.camera[${i}] lasts ${(t1 - t0).toFixed(3)} s`);
      if (ROTATING.has(cue.shot) && cue.shot === prevShot) {
        add("camera-repeat", `$.tracks.camera[${i}] repeats ${cue.shot}`);
      }
      prevShot = cue.shot;
    });
    if (spans.length > 0) {
      if (Math.abs(spans[0][0]) > LEN_TOL) add("camera-gap", `camera track starts at ${spans[0][0]}`);
      if (Math.abs(spans[spans.length - 1][1] - total) > LEN_TOL) {
        add("camera-gap", `camera track ends at ${spans[spans.length - 1][1]}, not ${total}`);
      }
      for (let i = 1; i < spans.length; i++) {
        const gap = spans[i][0] - spans[i - 1][1];
        if (gap > LEN_TOL) add("camera-gap", `camera track gap at ${spans[i - 1][1]}`);
        else if (gap < -LEN_TOL) add("camera-overlap", `camera cues overlap at ${spans[i][0]}`);
      }
    } else if (total > 0) {
      add("camera-gap", "camera track is empty");
    }
  }

  if (Array.isArray(tracks.agent)) {
    const spans = checkSpans(tracks.agent, "$.tracks.agent");
    spans.forEach(([, , cue], i) => {
      if (!CLIP_KINDS.has(cue.clip)) add("bad-enum", `$.tracks.agent[${i}].clip ${cue.clip}`);
      if (!Array.isArray(cue.waypoints) || cue.waypoints.length < 2) {
        add("bad-type", `$.tracks.agent[${i}].waypoints must hold at least two points`);
      }
    });
    for (let i = 1; i < spans.length; i++) {
      if (spans[i - 1][1] - spans[i][0] > LEN_TOL) add("track-overlap", `$.tracks.agent overlap at ${spans[i][0]}`);
    }
  }

  if (Array.isArray(tracks.lighting)) {
    let prevT = -Infinity;
    tracks.lighting.forEach((kf: any, i: number) => {
      if (!isNum(kf?.t)) {
        add("missing-field", `$.tracks.lighting[${i}].t`);
        return;
      }
      if (kf.t < -1e-9 || kf.t > total + 1e-9) add("time-out-of-bounds", `$.tracks.lighting[${i}].t = ${kf.t}`);
      if (kf.t < prevT - 1e-9) add("track-unsorted", `$.tracks.lighting[${i}] out of order`);
      prevT = Math.max(prevT, kf.t);
    });
  }

  if (Array.isArray(tracks.audio)) {
    const spans = checkSpans(tracks.audio, "$.tracks.audio");
    const perSound = new Map<string, number>();
    spans.forEach(([t0, t1, cue], i) => {
      if (!SOUND_KINDS.has(cue.sound)) {
        add("bad-enum", `$.tracks.audio[${i}].sound ${cue.sound}`);
        return;
      }
      const lastEnd = perSound.get(cue.sound);
      if (lastEnd !== undefined && t0 < lastEnd - LEN_TOL) {
        add("track-overlap", `$.tracks.audio[${i}] ${cue.sound} overlaps itself`);
      }
      perSound.set(cue.sound, Math.max(lastEnd ?? -Infinity, t1));
    });
  }

  if (Array.isArray(tracks.spawns)) {
    tracks.spawns.forEach((s: any, i: number) => {
      if (!SPAWN_KINDS.has(s?.kind)) add("bad-enum", `$.tracks.spawns[${i}].kind ${s?.kind}`);
      if (!isNum(s?.t0)) add("missing-field", `$.tracks.spawns[${i}].t0`);
      else if (s.t0 < -1e-9 || s.t0 > total + 1e-9) add("time-out-of-bounds", `$.tracks.spawns[${i}].t0 = ${s.t0}`);
    });
  }

  if (Array.isArray(tracks.titles)) {
    const spans = checkSpans(tracks.titles, "$.tracks.titles");
    spans.forEach(([, , cue], i) => {
      if (typeof cue.text !== "string") add("bad-type", `$.tracks.titles[${i}].text must be a string`);
    });
    if (obj.mode === "control" && spans.length > 0) {
      add("title-mode-mismatch", "control scripts carry no titles");
    }
    if (obj.mode === "personalized") {
      if (spans.length === 0 && nChapters > 0) add("title-mode-mismatch", "personalized scripts must carry titles");
      else if (nChapters > 0 && spans.length !== nChapters) {
        add("title-count", `${spans.length} titles for ${nChapters} chapters`);
      }
    }
  }

  return out;
}

/** Parse + validate; returns the typed script or throws with the violation list. */
export function parseScript(text: string): SceneScript {
  const violations = validateScript(text);
  if (violations.length > 0) {
    const summary = violations.map((v) => `${v.code}: ${v.message}`).join("\n");
    throw new Error(summary);
  }
  return JSON.parse(text) as SceneScript;
}
