/** Check-in form model: validation mirrors the compiler's survey rules so an
 * emitted file always round-trips through the CLI parser with zero errors. */

export interface CheckinInput {
  date: string;
  mood_valence: number;
  mood_arousal: number;
  bedtime: string;
  sleep_hours: number;
  sleep_quality: number;
  exercise_minutes: number;
  social_amount: number;
  social_kind: string;
  social_partner: string;
  stress_level: number;
  stress_handling: number;
  purpose_interest: number;
  purpose_purposeful: number;
  purpose_achievement: number;
  memory_cue: string;
}

export interface FieldError { field: string; message: string; }

export const SOCIAL_KINDS = ["none", "neutral", "happy", "fight", "rejection"];
export const PARTNERS = ["submissive", "peer", "dominant"];
export const CUE_MAX = 80;

const DATE_RE = /^\d{4}-\d{2}-\d{2}$/;
const TIME_RE = /^([01]\d|2[0-3]):[0-5]\d$/;

function intIn(
  errors: FieldError[], field: string, value: number, lo: number, hi: number,
): void {
  if (!Number.isInteger(value) || value < lo || value > hi) {
    errors.push({ field, message: `must be a whole number ${lo}..${hi}` });
  }
}

export function validateCheckin(input: CheckinInput): FieldError[] {
  const errors: FieldError[] = [];
  if (!DATE_RE.test(input.date) || Number.isNaN(Date.parse(input.date))) {
    errors.push({ field: "date", message: "must be YYYY-MM-DD" });
  }
  intIn(errors, "mood_valence", input.mood_valence, 1, 7);
  intIn(errors, "mood_arousal", input.mood_arousal, 1, 7);
  if (!TIME_RE.test(input.bedtime)) {
    errors.push({ field: "bedtime", message: "must be HH:MM" });
  }
  if (!Number.isFinite(input.sleep_hours) || input.sleep_hours < 0 || input.sleep_hours > 16) {
    errors.push({ field: "sleep_hours", message: "must be 0..16" });
  }
  intIn(errors, "sleep_quality", input.sleep_quality, 1, 7);
  intIn(errors, "exercise_minutes", input.exercise_minutes, 0, 300);
  intIn(errors, "social_amount", input.social_amount, 1, 7);
  if (!SOCIAL_KINDS.includes(input.social_kind)) {
    errors.push({ field: "social_kind", message: `one of ${SOCIAL_KINDS.join(", ")}` });
  }
  if (!PARTNERS.includes(input.social_partner)) {
    errors.push({ field: "social_partner", message: `one of ${PARTNERS.join(", ")}` });
  }
  intIn(errors, "stress_level", input.stress_level, 0, 7);
  intIn(errors, "stress_handling", input.stress_handling, 0, 7);
  intIn(errors, "purpose_interest", input.purpose_interest, 1, 7);
  intIn(errors, "purpose_purposeful", input.purpose_purposeful, 1, 7);
  intIn(errors, "purpose_achievement", input.purpose_achievement, 1, 7);
  if (input.memory_cue.trim().length === 0) {
    errors.push({ field: "memory_cue", message: "required" });
  } else if (input.memory_cue.length > CUE_MAX) {
    errors.push({ field: "memory_cue", message: `max ${CUE_MAX}` });
  }
  return errors;
}

/** File content for YYYY-MM-DD.report.json (keys sorted, 2-space indent,
 * trailing newline — the same shape the CLI writes). */
export function toReportJson(input: CheckinInput): string {
  const record = {
    bedtime: input.bedtime,
    date: input.date,
    exercise_minutes: input.exercise_minutes,
    memory_cue: input.memory_cue,
    mood_arousal: input.mood_arousal,
    mood_valence: input.mood_valence,
    purpose_achievement: input.purpose_achievement,
    purpose_interest: input.purpose_interest,
    purpose_purposeful: input.purpose_purposeful,
    sleep_hours: input.sleep_hours,
    sleep_quality: input.sleep_quality,
    social: {
      amount: input.social_amount,
      kind: input.social_kind,
      partner: input.social_kind === "none" ? "peer" : input.social_partner,
    },
    stress_handling: input.stress_handling,
    stress_level: input.stress_level,
  };
  return JSON.stringify(record, null, 2) + "\n";
}

export function reportFilename(input: CheckinInput): string {
  return `${input.date}.report.json`;
}

export function defaultCheckin(date: string): CheckinInput {
  return {
    date,
    mood_valence: 4,
    mood_arousal: 4,
    bedtime: "23:00",
    sleep_hours: 7,
    sleep_quality: 4,
    exercise_minutes: 0,
    social_amount: 4,
    social_kind: "none",
    social_partner: "peer",
    stress_level: 0,
    stress_handling: 4,
    purpose_interest: 4,
    purpose_purposeful: 4,
    purpose_achievement: 4,
    memory_cue: "",
  };
}
