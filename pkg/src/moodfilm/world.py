"""Per-chapter terrain, agent routing, event placement and replanning.

Terrain is a static 64x64 heightfield per chapter (stressors are overlay
obstacles, never terrain morphs, so routes can always be re-planned against
unchanged geometry). Cells are addressed as (col, row); world coordinates
are x = col * CELL_M, y = row * CELL_M, z = heights[row, col].
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .affect import AffectState, EnergyLevel, StressKind, StressResponse
from .noise import fbm_grid
from .rng import Rng, derive

GRID_SIZE = 64
CELL_M = 2.0

AMPLITUDE_BASE_M = 2.0
AMPLITUDE_VALENCE_M = 6.0
AMPLITUDE_AROUSAL_M = 2.0

SLOPE_LIMIT = 1.0  # 45 degrees; steeper steps are impassable
SLOPE_COST_GAIN = 2.0
ENERGY_COST_RELIEF = 2.0

DETOUR_CORRIDOR_CELLS = 10

SPEED_BASE_MPS = 0.8
SPEED_ENERGY_MPS = 1.2
SPEED_AROUSAL_MPS = 0.4

SOCIAL_SPAWN_LATERAL_M = 6.0
BAND_NEAR_M = 10.0
BAND_FAR_M = 14.0
BAND_HALF_WIDTH_CELLS = 10

THREAT_HOLD_S = 8.0  # scared-animation window; band halves after it, clears after two

Cell = tuple[int, int]

_NEIGHBORS = (
    (1, 0), (-1, 0), (0, 1), (0, -1),
    (1, 1), (1, -1), (-1, 1), (-1, -1),
)


class NoRouteError(Exception):
    """Goal unreachable on the current terrain/obstacle state."""


@dataclass(frozen=True)
class Terrain:
    heights: np.ndarray  # (GRID_SIZE, GRID_SIZE) float64 meters, row-major
    cell_m: float
    seed: int
    amplitude_m: float

    def height_at(self, cell: Cell) -> float:
        return float(self.heights[cell[1], cell[0]])

    def in_grid(self, cell: Cell) -> bool:
        return 0 <= cell[0] < GRID_SIZE and 0 <= cell[1] < GRID_SIZE


@dataclass(frozen=True)
class Waypoint:
    x: float
    y: float
    z: float
    t: float


@dataclass(frozen=True)
class Path:
    waypoints: tuple[Waypoint, ...]
    cells: tuple[Cell, ...]  # one per waypoint
    start: Cell
    goal: Cell


class ObstacleKind(str, Enum):
    ROCK_RAIN = "rock_rain"


@dataclass(frozen=True)
class ObstacleField:
    kind: ObstacleKind
    spawn_time_s: float
    cells: frozenset[Cell]
    core_cells: frozenset[Cell]  # survives the 50% shrink (inner half of the band)


def terrain_amplitude(affect: AffectState) -> float:
    """Steepness scale of the surroundings: 2 m for a pleasant calm day, up
    to 10 m for a low-valence high-arousal one."""
    return (
        AMPLITUDE_BASE_M
        + AMPLITUDE_VALENCE_M * max(0.0, -affect.valence)
        + AMPLITUDE_AROUSAL_M * abs(affect.arousal)
    )


def generate_terrain(affect: AffectState, seed: int) -> Terrain:
    amplitude = terrain_amplitude(affect)
    heights = amplitude * fbm_grid(GRID_SIZE, GRID_SIZE, seed)
    heights.setflags(write=False)
    return Terrain(heights=heights, cell_m=CELL_M, seed=seed, amplitude_m=amplitude)


def agent_speed(energy: EnergyLevel, affect: AffectState, sleeping: bool = False) -> float:
    """Walking speed in m/s; halved while a sleep event is active."""
    speed = (
        SPEED_BASE_MPS
        + SPEED_ENERGY_MPS * energy.value
        + SPEED_AROUSAL_MPS * max(0.0, affect.arousal)
    )
    return speed / 2.0 if sleeping else speed


def _step_m(a: Cell, b: Cell) -> float:
    return math.hypot(b[0] - a[0], b[1] - a[1]) * CELL_M


def step_slope(terrain: Terrain, a: Cell, b: Cell) -> float:
    """Signed rise over run between two neighboring cell centers."""
    return (terrain.height_at(b) - terrain.height_at(a)) / _step_m(a, b)


def _step_cost(terrain: Terrain, a: Cell, b: Cell, energy_value: float) -> float | None:
    slope = step_slope(terrain, a, b)
    if abs(slope) > SLOPE_LIMIT:
        return None
    penalty = SLOPE_COST_GAIN * max(0.0, slope) / (1.0 + ENERGY_COST_RELIEF * energy_value)
    return _step_m(a, b) * (1.0 + penalty)


def _astar(
    terrain: Terrain, start: Cell, goal: Cell, blocked: frozenset[Cell], energy_value: float
) -> list[Cell]:
    """Least-cost 8-connected route; euclidean heuristic is admissible
    because every step cost is at least the step length."""
    if start == goal:
        return [start]
    open_heap: list[tuple[float, int, Cell]] = []
    g: dict[Cell, float] = {start: 0.0}
    came: dict[Cell, Cell] = {}
    counter = 0  # tie-breaker keeps heap ordering deterministic
    heapq.heappush(open_heap, (_step_m(start, goal), counter, start))
    closed: set[Cell] = set()
    while open_heap:
        _, _, current = heapq.heappop(open_heap)
        if current == goal:
            path = [current]
            while current in came:
                current = came[current]
                path.append(current)
            return path[::-1]
        if current in closed:
            continue
        closed.add(current)
        for dc, dr in _NEIGHBORS:
            nxt = (current[0] + dc, current[1] + dr)
            if not terrain.in_grid(nxt) or nxt in blocked or nxt in closed:
                continue
            cost = _step_cost(terrain, current, nxt, energy_value)
            if cost is None:
                continue
            tentative = g[current] + cost
            if tentative < g.get(nxt, math.inf):
                g[nxt] = tentative
                came[nxt] = current
                counter += 1
                heapq.heappush(open_heap, (tentative + _step_m(nxt, goal), counter, nxt))
    raise NoRouteError(f"no route from {start} to {goal}")


def _pick_detour(
    terrain: Terrain, start: Cell, goal: Cell, blocked: frozenset[Cell], rng: Rng
) -> Cell | None:
    """One random waypoint inside the corridor around the direct line, so
    repeated weeks never retrace the exact same route."""
    dx = goal[0] - start[0]
    dy = goal[1] - start[1]
    length = math.hypot(dx, dy)
    if length < 4.0:
        return None
    px, py = -dy / length, dx / length
    for _ in range(8):
        along = rng.uniform(0.35, 0.65)
        lateral = rng.uniform(-DETOUR_CORRIDOR_CELLS, DETOUR_CORRIDOR_CELLS)
        cand = (
            int(round(start[0] + along * dx + lateral * px)),
            int(round(start[1] + along * dy + lateral * py)),
        )
        if terrain.in_grid(cand) and cand not in blocked and cand not in (start, goal):
            return cand
    return None


def _timed_path(
    terrain: Terrain, cells: list[Cell], speed_mps: float, t0: float
) -> tuple[tuple[Waypoint, ...], float]:
    t = t0
    waypoints = []
    prev: Cell | None = None
    for cell in cells:
        if prev is not None:
            step = math.hypot(
                (cell[0] - prev[0]) * CELL_M,
                (cell[1] - prev[1]) * CELL_M,
                terrain.height_at(cell) - terrain.height_at(prev),
            )
            t += step / speed_mps
        waypoints.append(
            Waypoint(cell[0] * CELL_M, cell[1] * CELL_M, terrain.height_at(cell), t)
        )
        prev = cell
    return tuple(waypoints), t


def plan_path(
    terrain: Terrain,
    start: Cell,
    goal: Cell,
    energy: EnergyLevel,
    obstacles: ObstacleField | None,
    seed: int,
    speed_mps: float,
    t0: float = 0.0,
    with_detour: bool = True,
    avoid: frozenset[Cell] = frozenset(),
) -> Path:
    """A* route with one seeded detour waypoint; waypoint times are spaced
    so implied 3D speed equals speed_mps exactly."""
    blocked = (obstacles.cells if obstacles is not None else frozenset()) | avoid
    if start in blocked or goal in blocked:
        raise NoRouteError("start or goal is blocked")
    rng = Rng(derive(seed, "detour"))
    via = _pick_detour(terrain, start, goal, blocked, rng) if with_detour else None
    if via is None:
        cells = _astar(terrain, start, goal, blocked, energy.value)
    else:
        try:
            first = _astar(terrain, start, via, blocked, energy.value)
            second = _astar(terrain, via, goal, blocked, energy.value)
            cells = first + second[1:]
        except NoRouteError:
            cells = _astar(terrain, start, goal, blocked, energy.value)
    waypoints, _ = _timed_path(terrain, cells, speed_mps, t0)
    return Path(waypoints=waypoints, cells=tuple(cells), start=start, goal=goal)


def path_position_at(path: Path, t: float) -> tuple[float, float, float]:
    """Linear interpolation along the waypoint list, clamped to the ends."""
    wps = path.waypoints
    if t <= wps[0].t:
        return wps[0].x, wps[0].y, wps[0].z
    for a, b in zip(wps, wps[1:]):
        if t <= b.t:
            span = b.t - a.t
            f = 0.0 if span <= 0 else (t - a.t) / span
            return (
                a.x + (b.x - a.x) * f,
                a.y + (b.y - a.y) * f,
                a.z + (b.z - a.z) * f,
            )
    return wps[-1].x, wps[-1].y, wps[-1].z


def _direction_at(path: Path, index: int) -> tuple[float, float]:
    """Unit travel direction at a waypoint index (falls back to +x)."""
    cells = path.cells
    if len(cells) < 2:
        return 1.0, 0.0
    if index >= len(cells) - 1:
        a, b = cells[-2], cells[-1]
    else:
        a, b = cells[index], cells[index + 1]
    dx, dy = b[0] - a[0], b[1] - a[1]
    length = math.hypot(dx, dy)
    if length == 0:
        return 1.0, 0.0
    return dx / length, dy / length


@dataclass(frozen=True)
class SocialPlacement:
    cell: Cell
    x: float
    y: float
    z: float
    scale: float


def place_social(
    terrain: Terrain, path: Path, waypoint_index: int, partner_scale: float, seed: int
) -> SocialPlacement:
    """Partner dog spawned ~6 m lateral of the agent, snapped to the grid."""
    rng = Rng(derive(seed, "social", waypoint_index))
    dx, dy = _direction_at(path, waypoint_index)
    side = rng.choice((-1.0, 1.0))
    lateral_cells = SOCIAL_SPAWN_LATERAL_M / CELL_M
    base = path.cells[waypoint_index]
    cand = (
        int(round(base[0] - dy * side * lateral_cells)),
        int(round(base[1] + dx * side * lateral_cells)),
    )
    cell = (min(max(cand[0], 0), GRID_SIZE - 1), min(max(cand[1], 0), GRID_SIZE - 1))
    if cell == base:  # clamped onto the agent: nudge one cell off
        cell = (min(base[0] + 1, GRID_SIZE - 1), base[1])
    return SocialPlacement(
        cell=cell,
        x=cell[0] * CELL_M,
        y=cell[1] * CELL_M,
        z=terrain.height_at(cell),
        scale=partner_scale,
    )


def place_rock_band(
    terrain: Terrain, path: Path, waypoint_index: int, spawn_time_s: float
) -> ObstacleField:
    """Rock-rain band 10-14 m ahead of the agent, crossing the corridor."""
    dx, dy = _direction_at(path, waypoint_index)
    px, py = -dy, dx
    base = path.cells[waypoint_index]
    cells: set[Cell] = set()
    core: set[Cell] = set()
    ahead = BAND_NEAR_M
    while ahead <= BAND_FAR_M + 1e-9:
        cx = base[0] + dx * ahead / CELL_M
        cy = base[1] + dy * ahead / CELL_M
        lateral = -BAND_HALF_WIDTH_CELLS
        while lateral <= BAND_HALF_WIDTH_CELLS:
            cell = (int(round(cx + px * lateral)), int(round(cy + py * lateral)))
            if terrain.in_grid(cell):
                cells.add(cell)
                if abs(lateral) <= BAND_HALF_WIDTH_CELLS / 2:
                    core.add(cell)
            lateral += 0.5
        ahead += 0.5
    return ObstacleField(
        kind=ObstacleKind.ROCK_RAIN,
        spawn_time_s=spawn_time_s,
        cells=frozenset(cells),
        core_cells=frozenset(core),
    )


@dataclass(frozen=True)
class Replan:
    continuation: Path  # from the agent's cell, timestamps absolute
    hold_s: float  # 0 challenge, 8 threat, 16 wait-and-clear
    shrink_time_s: float | None  # band reduced to core at this time
    clear_time_s: float | None  # band fully gone at this time


def replan_on_block(
    terrain: Terrain,
    path: Path,
    field: ObstacleField,
    at_index: int,
    response: StressResponse,
    energy: EnergyLevel,
    speed_mps: float,
    avoid: frozenset[Cell] = frozenset(),
) -> Replan | None:
    """Continuation after a rock band spawns on the remaining route.

    Challenge: immediate re-plan around the full band. Threat: hold 8 s
    (scared), band shrinks to its core, re-plan; if still unroutable the
    band clears entirely after another 8 s. Returns None when the band
    does not touch the remaining route.
    """
    remaining = path.cells[at_index:]
    if not any(c in field.cells for c in remaining):
        return None
    pos = path.cells[at_index]
    t_block = path.waypoints[at_index].t
    goal = path.goal

    def plan_around(blocked: frozenset[Cell], t0: float) -> Path:
        cells = _astar(terrain, pos, goal, blocked | avoid, energy.value)
        waypoints, _ = _timed_path(terrain, cells, speed_mps, t0)
        return Path(waypoints=waypoints, cells=tuple(cells), start=pos, goal=goal)

    if response.kind is StressKind.CHALLENGE:
        try:
            return Replan(
                continuation=plan_around(field.cells, t_block),
                hold_s=0.0,
                shrink_time_s=None,
                clear_time_s=None,
            )
        except NoRouteError:
            pass  # fall through to wait-and-clear
    else:
        try:
            return Replan(
                continuation=plan_around(field.core_cells, t_block + THREAT_HOLD_S),
                hold_s=THREAT_HOLD_S,
                shrink_time_s=t_block + THREAT_HOLD_S,
                clear_time_s=None,
            )
        except NoRouteError:
            pass

    # wait-and-clear: after two holds the band is gone and the plain route works
    t_clear = t_block + 2 * THREAT_HOLD_S
    return Replan(
        continuation=plan_around(frozenset(), t_clear),
        hold_s=2 * THREAT_HOLD_S,
        shrink_time_s=t_block + THREAT_HOLD_S,
        clear_time_s=t_clear,
    )
