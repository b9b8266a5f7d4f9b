/** Scene-script v1 shapes, mirroring docs/scene-schema.md. */

export type Mode = "personalized" | "control";

export type ShotKind =
  | "frontal" | "agent_pov" | "close_up" | "side"
  | "dutch_angle" | "overhead_solitude" | "extreme_close_up" | "weather_pan"
  | "moon_reveal" | "low_tracking_run" | "high_wide";

export const ROTATING_SHOTS: ShotKind[] = ["frontal", "agent_pov", "close_up", "side"];

export type AgentClip =
  | "walk_happy" | "walk_sad" | "run_energetic" | "trudge" | "sit_lonely"
  | "play_bow" | "fight_stance" | "cower_scared" | "brave_charge"
  | "fall_asleep" | "moon_idle";

export type Sound =
  | "birds_breeze" | "wind" | "eerie" | "rumble" | "pant" | "snore" | "bark"
  | "howl" | "music_calm" | "music_tense" | "music_triumph";

export type LensKind = "depth_of_field_blur" | "recolor" | "double_focus";

export interface LensEffect { kind: LensKind; strength: number; }

export interface CameraCue { t0: number; t1: number; shot: ShotKind; effects: LensEffect[]; }

/** Waypoint tuples are [x, y, z, t]. */
export type Waypoint = [number, number, number, number];

export interface AgentCue {
  t0: number; t1: number; clip: AgentClip; speed_mps: number; waypoints: Waypoint[];
}

export interface LightingKeyframe {
  t: number; sky_rgb: [number, number, number]; fog_density: number; light_temperature: number;
}

export interface AudioCue { t0: number; t1: number; sound: Sound; }

export interface PartnerSpawn {
  kind: "partner_dog"; t0: number; x: number; y: number; z: number; scale: number; social: string;
}

export interface RockSpawn {
  kind: "rock_rain"; t0: number; cells: [number, number][]; core_cells: [number, number][];
  shrink_t?: number; clear_t?: number;
}

export type SpawnRecord = PartnerSpawn | RockSpawn;

export interface TitleCue { t0: number; t1: number; text: string; }

export interface ChapterEntry {
  t0: number; t1: number; date: string; valence: number; arousal: number;
  quadrant: string; weather: string; events: Record<string, unknown>[]; title?: string;
}

export interface TerrainEntry {
  seed: number; amplitude_m: number; cell_m: number; size: number; heights: number[];
}

export interface SceneScript {
  version: string;
  mode: Mode;
  seed: number;
  total_duration_s: number;
  outcome: { score: number; moon_distance_m: number; reaches_moon: boolean };
  terrain: TerrainEntry[];
  chapters: ChapterEntry[];
  tracks: {
    camera: CameraCue[];
    agent: AgentCue[];
    lighting: LightingKeyframe[];
    audio: AudioCue[];
    spawns: SpawnRecord[];
    titles: TitleCue[];
  };
}
