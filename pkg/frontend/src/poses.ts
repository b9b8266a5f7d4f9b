/** Camera pose table: shot kind + agent pose -> camera placement.
 * Pure math (no three.js) so the table is unit-testable. */

import type { ShotKind } from "./types.js";
import type { AgentPose } from "./player.js";

export interface CameraPose {
  position: [number, number, number];
  lookAt: [number, number, number];
  rollDeg: number;
  fovDeg: number;
}

const HEAD_HEIGHT = 0.55;

export function cameraPoseFor(
  shot: ShotKind,
  agent: AgentPose,
  t: number,
  moonDistance: number,
): CameraPose {
  const { x, y, z, headingX: hx, headingY: hy } = agent;
  const head: [number, number, number] = [x, y, z + HEAD_HEIGHT];
  const px = -hy; // lateral unit vector
  const py = hx;
  switch (shot) {
    case "frontal":
      return { position: [x + hx * 2.2, y + hy * 2.2, z + 0.8], lookAt: head, rollDeg: 0, fovDeg: 50 };
    case "agent_pov":
      return {
        position: [x + hx * 0.3, y + hy * 0.3, z + HEAD_HEIGHT],
        lookAt: [x + hx * 10, y + hy * 10, z + HEAD_HEIGHT],
        rollDeg: 0,
        fovDeg: 60,
      };
    case "close_up":
      return { position: [x + hx * 1.2 + px * 0.4, y + hy * 1.2 + py * 0.4, z + 0.7], lookAt: head, rollDeg: 0, fovDeg: 35 };
    case "side":
      return { position: [x + px * 3.0, y + py * 3.0, z + 1.0], lookAt: head, rollDeg: 0, fovDeg: 50 };
    case "dutch_angle":
      return { position: [x + hx * 1.6 + px * 1.0, y + hy * 1.6 + py * 1.0, z + 1.2], lookAt: head, rollDeg: 18, fovDeg: 45 };
    case "overhead_solitude": {
      const angle = t * 0.25; // slow orbit
      return {
        position: [x + Math.cos(angle) * 2.5, y + Math.sin(angle) * 2.5, z + 9.0],
        lookAt: [x, y, z],
        rollDeg: 0,
        fovDeg: 40,
      };
    }
    case "extreme_close_up":
      return { position: [x + hx * 0.5, y + hy * 0.5, z + 0.55], lookAt: head, rollDeg: 0, fovDeg: 28 };
    case "weather_pan": {
      const sweep = Math.sin(t * 0.4) * 0.6;
      return {
        position: [x - hx * 2.0, y - hy * 2.0, z + 1.5],
        lookAt: [x + hx * 5 + px * sweep * 5, y + hy * 5 + py * sweep * 5, z + 14],
        rollDeg: 0,
        fovDeg: 65,
      };
    }
    case "moon_reveal":
      return {
        position: [x - hx * 4.0, y - hy * 4.0, z + 1.4],
        lookAt: [x + hx * moonDistance, y + hy * moonDistance, z + moonDistance * 0.45],
        rollDeg: 0,
        fovDeg: 55,
      };
    case "low_tracking_run":
      return { position: [x - hx * 2.5, y - hy * 2.5, z + 0.4], lookAt: head, rollDeg: 0, fovDeg: 55 };
    case "high_wide":
      return { position: [x - hx * 14 + px * 6, y - hy * 14 + py * 6, z + 16], lookAt: [x, y, z], rollDeg: 0, fovDeg: 55 };
  }
}
