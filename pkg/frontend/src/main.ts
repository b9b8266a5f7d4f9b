/** App wiring: tabs, file loading, the playback loop, and the check-in form. */

import {
  CUE_MAX,
  PARTNERS,
  SOCIAL_KINDS,
  defaultCheckin,
  reportFilename,
  toReportJson,
  validateCheckin,
  type CheckinInput,
} from "./checkin.js";
import { advance, loadScript, seek, type Frame, type PlayerState } from "./player.js";
import { SceneRenderer } from "./render.js";
import { parseScript } from "./validate.js";

const $ = <T extends HTMLElement>(id: string): T => document.getElementById(id) as T;

let state: PlayerState | null = null;
let renderer: SceneRenderer | null = null;
let lastTick = performance.now();

function setError(text: string): void {
  const box = $("load-errors");
  box.textContent = text;
  box.style.display = text ? "block" : "none";
}

function loadText(text: string): void {
  try {
    const script = parseScript(text);
    state = loadScript(script);
    setError("");
    if (!renderer) renderer = new SceneRenderer($("stage") as HTMLCanvasElement);
    renderer.load(script);
    const scrubber = $("scrubber") as HTMLInputElement;
    scrubber.max = String(script.total_duration_s);
    scrubber.value = "0";
    $("player-info").textContent =
      `${script.mode}, ${script.chapters.length} chapters, ` +
      `${script.total_duration_s.toFixed(1)} s, ` +
      (script.outcome.reaches_moon ? "reaches the moon" : "the moon stays distant");
    state.playing = true;
  } catch (err) {
    state = null;
    setError(String(err instanceof Error ? err.message : err));
  }
}

function applyFrame(frame: Frame): void {
  if (!state || !renderer) return;
  renderer.draw(frame);
  ($("scrubber") as HTMLInputElement).value = String(frame.t);
  $("clock").textContent = `${frame.t.toFixed(1)} s — ${frame.camera.shot.replace(/_/g, " ")}`;
  const title = $("title-card");
  title.textContent = frame.title?.text ?? "";
  title.style.opacity = frame.title ? "1" : "0";
  $("captions").textContent = frame.captions.join(" · ");
}

function tick(now: number): void {
  const dt = Math.min((now - lastTick) / 1000, 0.25);
  lastTick = now;
  if (state && renderer) {
    applyFrame(advance(state, dt));
    ($("play") as HTMLButtonElement).textContent = state.playing ? "pause" : "play";
  }
  requestAnimationFrame(tick);
}

function wirePlayer(): void {
  ($("file") as HTMLInputElement).addEventListener("change", async (event) => {
    const file = (event.target as HTMLInputElement).files?.[0];
    if (file) loadText(await file.text());
  });
  $("load-demo").addEventListener("click", async () => {
    try {
      const response = await fetch("tests/fixtures/demo.scene.json");
      loadText(await response.text());
    } catch (err) {
      setError(`could not fetch the demo script (serve this directory): ${err}`);
    }
  });
  $("play").addEventListener("click", () => {
    if (!state) return;
    if (!state.playing && state.clock >= state.script.total_duration_s) seek(state, 0);
    state.playing = !state.playing;
  });
  ($("scrubber") as HTMLInputElement).addEventListener("input", (event) => {
    if (!state) return;
    applyFrame(seek(state, Number((event.target as HTMLInputElement).value)));
  });
  const stage = $("stage") as HTMLCanvasElement;
  const fit = () => renderer?.resize(stage.clientWidth, stage.clientHeight);
  new ResizeObserver(fit).observe(stage);
  requestAnimationFrame(tick);
}

// --- check-in form ----------------------------------------------------------

const FORM_FIELDS: [keyof CheckinInput, string, string][] = [
  ["date", "date", "date"],
  ["mood_valence", "mood: unpleasant 1 .. 7 pleasant", "number"],
  ["mood_arousal", "energy: calm 1 .. 7 activated", "number"],
  ["bedtime", "bedtime (HH:MM)", "time"],
  ["sleep_hours", "hours slept (0-16)", "number"],
  ["sleep_quality", "sleep quality (1-7)", "number"],
  ["exercise_minutes", "exercise minutes (0-300)", "number"],
  ["social_amount", "social amount (1-7)", "number"],
  ["social_kind", "interaction kind", "select"],
  ["social_partner", "interaction partner", "select"],
  ["stress_level", "stress level (0-7)", "number"],
  ["stress_handling", "0 overwhelmed .. 7 in control", "number"],
  ["purpose_interest", "interest in life (1-7)", "number"],
  ["purpose_purposeful", "felt purposeful (1-7)", "number"],
  ["purpose_achievement", "achievement (1-7)", "number"],
  ["memory_cue", "one line to remember today by", "text"],
];

function buildForm(): void {
  const form = $("checkin-form");
  const today = new Date().toISOString().slice(0, 10);
  const values = defaultCheckin(today);
  for (const [field, label, kind] of FORM_FIELDS) {
    const row = document.createElement("label");
    row.className = "field";
    const caption = document.createElement("span");
    caption.textContent = label;
    let input: HTMLInputElement | HTMLSelectElement;
    if (kind === "select") {
      input = document.createElement("select");
      const options = field === "social_kind" ? SOCIAL_KINDS : PARTNERS;
      for (const option of options) {
        const el = document.createElement("option");
        el.value = option;
        el.textContent = option;
        input.appendChild(el);
      }
    } else {
      input = document.createElement("input");
      input.type = kind;
      if (kind === "number") {
        input.step = field === "sleep_hours" ? "0.5" : "1";
      }
      if (field === "memory_cue") input.maxLength = CUE_MAX + 40; // let validation speak
    }
    input.id = `f-${field}`;
    input.value = String(values[field]);
    const error = document.createElement("em");
    error.id = `e-${field}`;
    row.append(caption, input, error);
    form.appendChild(row);
  }
  $("download").addEventListener("click", () => {
    const input = readForm();
    const errors = validateCheckin(input);
    for (const [field] of FORM_FIELDS) {
      $(`e-${field}`).textContent = errors.find((e) => e.field === field)?.message ?? "";
    }
    if (errors.length > 0) return;
    const blob = new Blob([toReportJson(input)], { type: "application/json" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = reportFilename(input);
    link.click();
    URL.revokeObjectURL(link.href);
  });
}

function readForm(): CheckinInput {
  const value = (field: string) => ($(`f-${field}`) as HTMLInputElement).value;
  const num = (field: string) => Number(value(field));
  return {
    date: value("date"),
    mood_valence: num("mood_valence"),
    mood_arousal: num("mood_arousal"),
    bedtime: value("bedtime"),
    sleep_hours: num("sleep_hours"),
    sleep_quality: num("sleep_quality"),
    exercise_minutes: num("exercise_minutes"),
    social_amount: num("social_amount"),
    social_kind: value("social_kind"),
    social_partner: value("social_partner"),
    stress_level: num("stress_level"),
    stress_handling: num("stress_handling"),
    purpose_interest: num("purpose_interest"),
    purpose_purposeful: num("purpose_purposeful"),
    purpose_achievement: num("purpose_achievement"),
    memory_cue: value("memory_cue"),
  };
}

function wireTabs(): void {
  for (const name of ["player", "checkin"]) {
    $(`tab-${name}`).addEventListener("click", () => {
      for (const other of ["player", "checkin"]) {
        $(`panel-${other}`).style.display = other === name ? "" : "none";
        $(`tab-${other}`).classList.toggle("active", other === name);
      }
    });
  }
}

wireTabs();
wirePlayer();
buildForm();
