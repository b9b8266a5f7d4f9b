"""Seeded 2D value noise on an integer lattice.

The lattice hash, bilinear interpolation and octave stack are pinned down
exactly (and documented in docs/scene-schema.md) so that any implementation
of the same integer arithmetic reproduces identical heightfields bit for bit.

`value_noise` / `fbm` are the scalar reference; `fbm_grid` is the vectorized
production path and must agree with the reference exactly (tested).
"""

from __future__ import annotations

import math

import numpy as np

from .rng import M64, mix64

_X_MULT = 0x9E3779B97F4A7C15
_Y_MULT = 0xC2B2AE3D27D4EB4F

OCTAVES = 4
PERSISTENCE = 0.5
LACUNARITY = 2.0
BASE_CELL = 16.0  # lattice spacing of the first octave, in grid cells


def _octave_seed(seed: int, octave: int) -> int:
    return mix64((seed + 0x5851F42D4C957F2D * (octave + 1)) & M64)


def lattice_value(ix: int, iy: int, seed: int) -> float:
    """Hash lattice point (ix, iy) to a uniform double in [0, 1)."""
    h = mix64((seed ^ (ix * _X_MULT) ^ (iy * _Y_MULT)) & M64)
    return (h >> 11) * 2.0**-53


def value_noise(x: float, y: float, seed: int) -> float:
    """Bilinear interpolation of lattice values; x, y in lattice units."""
    ix = math.floor(x)
    iy = math.floor(y)
    fx = x - ix
    fy = y - iy
    v00 = lattice_value(ix, iy, seed)
    v10 = lattice_value(ix + 1, iy, seed)
    v01 = lattice_value(ix, iy + 1, seed)
    v11 = lattice_value(ix + 1, iy + 1, seed)
    return (v00 * (1.0 - fx) + v10 * fx) * (1.0 - fy) + (v01 * (1.0 - fx) + v11 * fx) * fy


def fbm(x: float, y: float, seed: int) -> float:
    """Four-octave fractal sum, normalized to [0, 1); x, y in grid cells."""
    total = 0.0
    norm = 0.0
    amp = 1.0
    spacing = BASE_CELL
    for k in range(OCTAVES):
        total += amp * value_noise(x / spacing, y / spacing, _octave_seed(seed, k))
        norm += amp
        amp *= PERSISTENCE
        spacing /= LACUNARITY
    return total / norm


def _mix64_np(z: np.ndarray) -> np.ndarray:
    z = z ^ (z >> np.uint64(30))
    z = z * np.uint64(0xBF58476D1CE4E5B9)
    z = z ^ (z >> np.uint64(27))
    z = z * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def _lattice_grid(ix: np.ndarray, iy: np.ndarray, seed: int) -> np.ndarray:
    h = np.uint64(seed) ^ (ix * np.uint64(_X_MULT)) ^ (iy * np.uint64(_Y_MULT))
    return (_mix64_np(h) >> np.uint64(11)).astype(np.float64) * 2.0**-53


def fbm_grid(width: int, height: int, seed: int) -> np.ndarray:
    """fbm sampled at every grid cell; shape (height, width), row-major."""
    xs = np.arange(width, dtype=np.float64)
    ys = np.arange(height, dtype=np.float64)
    gx, gy = np.meshgrid(xs, ys)
    total = np.zeros((height, width))
    norm = 0.0
    amp = 1.0
    spacing = BASE_CELL
    with np.errstate(over="ignore"):
        for k in range(OCTAVES):
            lx = gx / spacing
            ly = gy / spacing
            ix = np.floor(lx).astype(np.int64).astype(np.uint64)
            iy = np.floor(ly).astype(np.int64).astype(np.uint64)
            fx = lx - np.floor(lx)
            fy = ly - np.floor(ly)
            s = _octave_seed(seed, k)
            one = np.uint64(1)
            v00 = _lattice_grid(ix, iy, s)
            v10 = _lattice_grid(ix + one, iy, s)
            v01 = _lattice_grid(ix, iy + one, s)
            v11 = _lattice_grid(ix + one, iy + one, s)
            octave = (v00 * (1.0 - fx) + v10 * fx) * (1.0 - fy) + (v01 * (1.0 - fx) + v11 * fx) * fy
            total += amp * octave
            norm += amp
            amp *= PERSISTENCE
            spacing /= LACUNARITY
    return total / norm
