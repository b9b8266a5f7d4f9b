import { readFileSync } from "node:fs";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import {
  activeCameraCue,
  activeRockCells,
  advance,
  agentPoseAt,
  frameAt,
  lightingAt,
  loadScript,
  seek,
} from "../src/player.js";
import { cameraPoseFor } from "../src/poses.js";
import { parseScript } from "../src/validate.js";
import type { SceneScript } from "../src/types.js";

const load = (name: string): SceneScript =>
  parseScript(readFileSync(join(__dirname, "fixtures", name), "utf-8"));

const demo = load("demo.scene.json");
const personalized = load("personalized.scene.json");

describe("playback", () => {
  it("loads the demo script at clock zero", () => {
    const state = loadScript(demo);
    expect(state.clock).toBe(0);
    expect(state.script.total_duration_s).toBeGreaterThan(0);
  });

  it("plays the demo to completion and stops", () => {
    const state = loadScript(demo);
    state.playing = true;
    let frames = 0;
    while (state.playing && frames < 100000) {
      advance(state, 0.25);
      frames++;
    }
    expect(state.clock).toBe(demo.total_duration_s);
    expect(state.playing).toBe(false);
    // advancing past the end keeps the clock clamped
    const frame = advance(state, 1.0);
    expect(frame.t).toBe(demo.total_duration_s);
  });

  it("matches the script's active camera cue at 100 sampled times", () => {
    for (let i = 0; i < 100; i++) {
      const t = (demo.total_duration_s * i) / 100;
      const cue = activeCameraCue(demo, t);
      const manual = demo.tracks.camera.find((c) => c.t0 <= t && t < c.t1);
      expect(cue).toBe(manual);
      expect(frameAt(demo, t).camera).toBe(manual);
    }
  });

  it("queues one title card per chapter on a personalized script", () => {
    expect(personalized.tracks.titles.length).toBe(personalized.chapters.length);
    const state = loadScript(personalized);
    state.playing = true;
    while (state.playing) advance(state, 0.2);
    expect(state.titlesShown.size).toBe(personalized.chapters.length);
  });

  it("shows the first title card at t = 0", () => {
    const frame = frameAt(personalized, 0);
    expect(frame.title?.text).toBe(personalized.tracks.titles[0].text);
  });

  it("keeps the agent on the terrain surface while interpolating", () => {
    for (let i = 0; i <= 200; i++) {
      const t = (demo.total_duration_s * i) / 200;
      const pose = agentPoseAt(demo, t);
      const frame = frameAt(demo, t);
      const terrain = demo.terrain[frame.chapterIndex];
      const col = Math.min(Math.max(Math.round(pose.x / terrain.cell_m), 0), terrain.size - 1);
      const row = Math.min(Math.max(Math.round(pose.y / terrain.cell_m), 0), terrain.size - 1);
      const ground = terrain.heights[row * terrain.size + col];
      // linear interpolation between adjacent cells stays within one cell's relief
      expect(Math.abs(pose.z - ground)).toBeLessThan(2.0);
    }
  });

  it("clamps seeks past the end", () => {
    const state = loadScript(demo);
    const frame = seek(state, demo.total_duration_s + 50);
    expect(frame.t).toBe(demo.total_duration_s);
  });

  it("interpolates lighting between keyframes", () => {
    const frames = demo.tracks.lighting;
    const a = frames[0];
    const b = frames.find((k) => k.t > a.t)!;
    const mid = lightingAt(demo, (a.t + b.t) / 2);
    for (let c = 0; c < 3; c++) {
      const lo = Math.min(a.sky_rgb[c], b.sky_rgb[c]);
      const hi = Math.max(a.sky_rgb[c], b.sky_rgb[c]);
      expect(mid.sky[c]).toBeGreaterThanOrEqual(lo - 1e-9);
      expect(mid.sky[c]).toBeLessThanOrEqual(hi + 1e-9);
    }
  });

  it("activates snore captions inside sleep windows", () => {
    const snore = personalized.tracks.audio.find((a) => a.sound === "snore");
    expect(snore).toBeDefined();
    const frame = frameAt(personalized, (snore!.t0 + snore!.t1) / 2);
    expect(frame.captions).toContain("snoring");
    const dutch = frame.camera.shot;
    expect(dutch).toBe("dutch_angle");
  });

  it("exposes rock bands only while they are active", () => {
    const rock = demo.tracks.spawns.find((s) => s.kind === "rock_rain");
    expect(rock).toBeDefined();
    if (rock?.kind !== "rock_rain") return;
    expect(activeRockCells(demo, rock.t0 - 1).length).toBe(0);
    expect(activeRockCells(demo, rock.t0 + 0.5).length).toBe(rock.cells.length);
    if (rock.clear_t !== undefined) {
      expect(activeRockCells(demo, rock.clear_t + 0.1).length).toBe(0);
    }
  });

  it("produces a finite camera pose for every shot kind", () => {
    for (let i = 0; i < 50; i++) {
      const t = (demo.total_duration_s * i) / 50;
      const frame = frameAt(demo, t);
      const pose = cameraPoseFor(frame.camera.shot, frame.agent, t, demo.outcome.moon_distance_m);
      for (const v of [...pose.position, ...pose.lookAt, pose.rollDeg, pose.fovDeg]) {
        expect(Number.isFinite(v)).toBe(true);
      }
    }
  });

  it("rolls the camera 18 degrees for dutch angles", () => {
    const pose = cameraPoseFor(
      "dutch_angle",
      { x: 0, y: 0, z: 0, headingX: 1, headingY: 0, clip: "fall_asleep", speed: 0 },
      0,
      100,
    );
    expect(pose.rollDeg).toBe(18);
  });
});
