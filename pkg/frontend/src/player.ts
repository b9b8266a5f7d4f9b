/** Headless playback state: clock, active-cue lookup, interpolation.
 * Everything here is pure so the whole player logic tests without a DOM;
 * render.ts maps a Frame onto three.js objects. */

import type {
  AgentCue,
  AudioCue,
  CameraCue,
  SceneScript,
  TitleCue,
} from "./types.js";

export interface AgentPose {
  x: number;
  y: number;
  z: number;
  headingX: number;
  headingY: number;
  clip: string;
  speed: number;
}

export interface Lighting {
  sky: [number, number, number];
  fog: number;
  temperature: number;
}

export interface Frame {
  t: number;
  chapterIndex: number;
  camera: CameraCue;
  agent: AgentPose;
  lighting: Lighting;
  audio: AudioCue[];
  title: TitleCue | null;
  captions: string[];
}

export interface PlayerState {
  script: SceneScript;
  clock: number;
  playing: boolean;
  titlesShown: Set<number>; // indices of title cues that have been on screen
}

export function loadScript(script: SceneScript): PlayerState {
  return { script, clock: 0, playing: false, titlesShown: new Set() };
}

export function chapterIndexAt(script: SceneScript, t: number): number {
  const chapters = script.chapters;
  for (let i = 0; i < chapters.length; i++) {
    if (t < chapters[i].t1) return i;
  }
  return chapters.length - 1;
}

/** The unique camera cue containing t (cues partition the timeline). */
export function activeCameraCue(script: SceneScript, t: number): CameraCue {
  const cues = script.tracks.camera;
  let lo = 0;
  let hi = cues.length - 1;
  while (lo < hi) {
    const mid = (lo + hi) >> 1;
    if (t < cues[mid].t1) hi = mid;
    else lo = mid + 1;
  }
  return cues[lo];
}

export function activeAudioCues(script: SceneScript, t: number): AudioCue[] {
  return script.tracks.audio.filter((a) => a.t0 <= t && t < a.t1);
}

export function activeTitle(script: SceneScript, t: number): TitleCue | null {
  for (const title of script.tracks.titles) {
    if (title.t0 <= t && t < title.t1) return title;
  }
  return null;
}

function activeAgentCue(script: SceneScript, t: number): AgentCue {
  const cues = script.tracks.agent;
  for (const cue of cues) {
    if (t < cue.t1) return cue;
  }
  return cues[cues.length - 1];
}

export function agentPoseAt(script: SceneScript, t: number): AgentPose {
  const cue = activeAgentCue(script, t);
  const wps = cue.waypoints;
  let x = wps[0][0];
  let y = wps[0][1];
  let z = wps[0][2];
  let hx = 1;
  let hy = 0;
  for (let i = 1; i < wps.length; i++) {
    const [bx, by, bz, bt] = wps[i];
    const [ax, ay, az, at] = wps[i - 1];
    if (t <= bt || i === wps.length - 1) {
      const span = bt - at;
      const f = span > 0 ? Math.min(Math.max((t - at) / span, 0), 1) : 0;
      x = ax + (bx - ax) * f;
      y = ay + (by - ay) * f;
      z = az + (bz - az) * f;
      const len = Math.hypot(bx - ax, by - ay);
      if (len > 0) {
        hx = (bx - ax) / len;
        hy = (by - ay) / len;
      }
      break;
    }
  }
  return { x, y, z, headingX: hx, headingY: hy, clip: cue.clip, speed: cue.speed_mps };
}

export function lightingAt(script: SceneScript, t: number): Lighting {
  const frames = script.tracks.lighting;
  if (frames.length === 0) return { sky: [0.5, 0.5, 0.5], fog: 0, temperature: 6500 };
  let prev = frames[0];
  let next = frames[0];
  for (const kf of frames) {
    if (kf.t <= t) prev = kf;
    if (kf.t >= t) {
      next = kf;
      break;
    }
    next = kf;
  }
  const span = next.t - prev.t;
  const f = span > 0 ? (t - prev.t) / span : 0;
  const mix = (a: number, b: number) => a + (b - a) * f;
  return {
    sky: [
      mix(prev.sky_rgb[0], next.sky_rgb[0]),
      mix(prev.sky_rgb[1], next.sky_rgb[1]),
      mix(prev.sky_rgb[2], next.sky_rgb[2]),
    ],
    fog: mix(prev.fog_density, next.fog_density),
    temperature: mix(prev.light_temperature, next.light_temperature),
  };
}

const CAPTION_TEXT: Record<string, string> = {
  birds_breeze: "birdsong and a light breeze",
  wind: "a cold wind",
  eerie: "an eerie drone",
  rumble: "a low rumble",
  pant: "panting",
  snore: "snoring",
  bark: "a bark!",
  howl: "a mournful howl",
  music_calm: "calm music",
  music_tense: "tense music",
  music_triumph: "triumphant music",
};

export function frameAt(script: SceneScript, t: number): Frame {
  const clamped = Math.min(Math.max(t, 0), script.total_duration_s);
  const audio = activeAudioCues(script, clamped);
  return {
    t: clamped,
    chapterIndex: chapterIndexAt(script, clamped),
    camera: activeCameraCue(script, clamped),
    agent: agentPoseAt(script, clamped),
    lighting: lightingAt(script, clamped),
    audio,
    title: activeTitle(script, clamped),
    captions: audio.map((a) => CAPTION_TEXT[a.sound] ?? a.sound),
  };
}

/** Advance the clock; playback clamps and stops at the end of the script. */
export function advance(state: PlayerState, dt: number): Frame {
  if (state.playing) {
    state.clock = Math.min(state.clock + dt, state.script.total_duration_s);
    if (state.clock >= state.script.total_duration_s) state.playing = false;
  }
  return markFrame(state, frameAt(state.script, state.clock));
}

export function seek(state: PlayerState, t: number): Frame {
  state.clock = Math.min(Math.max(t, 0), state.script.total_duration_s);
  return markFrame(state, frameAt(state.script, state.clock));
}

function markFrame(state: PlayerState, frame: Frame): Frame {
  if (frame.title !== null) {
    state.titlesShown.add(state.script.tracks.titles.indexOf(frame.title));
  }
  return frame;
}

/** Rock cells active at time t, for rendering the band. */
export function activeRockCells(script: SceneScript, t: number): [number, number][] {
  const active: [number, number][] = [];
  for (const spawn of script.tracks.spawns) {
    if (spawn.kind !== "rock_rain" || t < spawn.t0) continue;
    const chapterEnd = script.chapters[chapterIndexAt(script, spawn.t0)].t1;
    if (t >= chapterEnd) continue;
    const clear = Math.min(spawn.clear_t ?? chapterEnd, chapterEnd);
    const shrink = Math.min(spawn.shrink_t ?? clear, chapterEnd);
    if (t < shrink) active.push(...spawn.cells);
    else if (t < clear) active.push(...spawn.core_cells);
  }
  return active;
}
