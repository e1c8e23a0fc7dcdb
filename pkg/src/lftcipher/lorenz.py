"""Lorenz-system keystream generation.

The system

    dx/dt = a(y - x)
    dy/dt = bx - y - xz
    dz/dt = xy - cz

is integrated with classical fixed-step RK4 (cross-platform determinism;
an adaptive integrator would not give bit-identical streams).  After a
burn-in prefix is discarded, a small disturbance nudges x and y every
10000 samples to break any residual periodicity.  Fractional parts of the
samples, interleaved x1,y1,z1,x2,..., form the sequence k from which the
permutation, XOR mask and S-box selector streams are digested.

All real arithmetic is 64-bit binary floating point; identical parameters
give bit-identical keystreams on one platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

DISTURBANCE_INTERVAL = 10000
DEFAULT_BURN_IN = 100


class IntegrationError(ArithmeticError):
    """State became non-finite during integration."""


@dataclass(frozen=True)
class LorenzParams:
    """Coefficients, initial conditions (the secret key) and step size."""

    x0: float
    y0: float
    z0: float
    a: float = 10.0
    b: float = 28.0
    c: float = 8 / 3
    step: float = 0.01
    burn_in: int = DEFAULT_BURN_IN

    def __post_init__(self) -> None:
        for name in ("x0", "y0", "z0", "a", "b", "c", "step"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v}")
        if self.step <= 0:
            raise ValueError(f"step must be positive, got {self.step}")
        if self.burn_in < 0:
            raise ValueError(f"burn_in must be >= 0, got {self.burn_in}")


@dataclass(frozen=True, eq=False)
class LorenzTrajectory:
    """Raw or normalized (x, y, z) sample streams."""

    xs: np.ndarray
    ys: np.ndarray
    zs: np.ndarray

    def __len__(self) -> int:
        return len(self.xs)


@dataclass(frozen=True, eq=False)
class Keystream:
    """Digested chaotic material: k in [0,1), permutation, mask, selectors."""

    k: np.ndarray
    perm: np.ndarray
    mask: np.ndarray
    selectors: np.ndarray

    def __len__(self) -> int:
        return len(self.k)


def lorenz_derivatives(
    x: float, y: float, z: float, a: float, b: float, c: float
) -> tuple[float, float, float]:
    """Right-hand side of the Lorenz system."""
    return a * (y - x), b * x - y - x * z, x * y - c * z


def rk4_step(
    x: float, y: float, z: float, a: float, b: float, c: float, h: float
) -> tuple[float, float, float]:
    """One classical 4th-order Runge-Kutta step."""
    k1x, k1y, k1z = lorenz_derivatives(x, y, z, a, b, c)
    k2x, k2y, k2z = lorenz_derivatives(
        x + h / 2 * k1x, y + h / 2 * k1y, z + h / 2 * k1z, a, b, c
    )
    k3x, k3y, k3z = lorenz_derivatives(
        x + h / 2 * k2x, y + h / 2 * k2y, z + h / 2 * k2z, a, b, c
    )
    k4x, k4y, k4z = lorenz_derivatives(
        x + h * k3x, y + h * k3y, z + h * k3z, a, b, c
    )
    return (
        x + h / 6 * (k1x + 2 * k2x + 2 * k3x + k4x),
        y + h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y),
        z + h / 6 * (k1z + 2 * k2z + 2 * k3z + k4z),
    )


def integrate(params: LorenzParams, count: int) -> LorenzTrajectory:
    """Fixed-step RK4 trajectory of `count` samples after burn-in.

    Post-burn-in samples are indexed t = 1, 2, ...; at every t = 1 mod
    10000 the disturbance is applied to the freshly computed sample (and
    therefore feeds the following steps): x += 0.1, y -= 0.2 when z <= 0,
    else x += 0.2, y -= 0.1.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    x, y, z = params.x0, params.y0, params.z0
    a, b, c, h = params.a, params.b, params.c, params.step
    for i in range(params.burn_in):
        x, y, z = rk4_step(x, y, z, a, b, c, h)
        if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(z)):
            raise IntegrationError(f"non-finite state at burn-in step {i + 1}")
    xs = np.empty(count)
    ys = np.empty(count)
    zs = np.empty(count)
    for t in range(1, count + 1):
        x, y, z = rk4_step(x, y, z, a, b, c, h)
        if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(z)):
            raise IntegrationError(
                f"non-finite state at step {params.burn_in + t}"
            )
        if t % DISTURBANCE_INTERVAL == 1:
            if z <= 0:
                x += 0.1
                y -= 0.2
            else:
                x += 0.2
                y -= 0.1
        xs[t - 1] = x
        ys[t - 1] = y
        zs[t - 1] = z
    return LorenzTrajectory(xs, ys, zs)


def fractional(traj: LorenzTrajectory) -> LorenzTrajectory:
    """Keep v - floor(v) per coordinate, landing in [0, 1) for any sign."""
    return LorenzTrajectory(
        traj.xs - np.floor(traj.xs),
        traj.ys - np.floor(traj.ys),
        traj.zs - np.floor(traj.zs),
    )


def interleave(traj: LorenzTrajectory, length: int) -> np.ndarray:
    """k = x1, y1, z1, x2, y2, z2, ... truncated to exactly `length`."""
    if length < 0:
        raise ValueError("length must be >= 0")
    need = -(-length // 3)
    if len(traj) < need:
        raise ValueError(
            f"trajectory too short: {len(traj)} samples, need {need} for length {length}"
        )
    return np.column_stack((traj.xs, traj.ys, traj.zs)).ravel()[:length].copy()


def derive_keystream(k, sbox_count: int = 16) -> Keystream:
    """Digest a k sequence (entries in [0,1)) into the cipher's streams.

    mask[i]      = round(k_i * 10^4) mod 256, round half away from zero
    perm         = stable argsort of k (ties broken by lower index first)
    selectors[i] = floor(k_i * 10^4) mod sbox_count

    The position shuffle is realized as the rank permutation of k, the
    standard reading for this family of designs.
    """
    k = np.asarray(k, dtype=np.float64)
    if k.ndim != 1:
        raise ValueError("k must be one-dimensional")
    if k.size and (k.min() < 0.0 or k.max() >= 1.0):
        raise ValueError("k entries must lie in [0, 1)")
    scaled = k * 1e4
    mask = (np.floor(scaled + 0.5).astype(np.int64) % 256).astype(np.uint8)
    selectors = (np.floor(scaled).astype(np.int64) % sbox_count).astype(np.uint8)
    perm = np.argsort(k, kind="stable")
    if k.size and not np.array_equal(np.bincount(perm, minlength=k.size), np.ones(k.size, dtype=np.int64)):
        raise AssertionError("derived perm is not a permutation")
    return Keystream(k=k.copy(), perm=perm, mask=mask, selectors=selectors)


def keystream(params: LorenzParams, length: int, sbox_count: int = 16) -> Keystream:
    """Integrate, normalize, interleave and digest in one call."""
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    traj = integrate(params, -(-length // 3))
    return derive_keystream(interleave(fractional(traj), length), sbox_count)
