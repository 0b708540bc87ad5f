"""Deterministic cart-pole simulator in three variants: the standard planar
benchmark (2d), a high-gravity copy (2dg), and a simplified 3d version built
from two independent planar systems.

Supports the empirical measures on top: constant-action limit, Monte Carlo
band-survival sparsity, and random-rollout feature/action entropy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidAction, InvalidParameter
from .measures import histogram, shannon_entropy

VARIANTS = ("2d", "2dg", "3d")

# initial state components are drawn uniformly from this interval
INIT_BOUND = 0.05


@dataclass(frozen=True)
class CartPoleParams:
    """Physical constants for one cart-pole variant.

    Gravity may be zero so integrator sanity checks can switch it off;
    everything else must be positive.
    """

    gravity: float = 9.8
    cart_mass: float = 1.0
    pole_mass: float = 0.1
    pole_half_length: float = 0.5
    force_magnitude: float = 10.0
    timestep: float = 0.02
    position_threshold: float = 2.4
    angle_threshold: float = 12 * 2 * math.pi / 360
    variant: str = "2d"

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise InvalidParameter(f"variant must be one of {VARIANTS}")
        if self.gravity < 0:
            raise InvalidParameter("gravity cannot be negative")
        for name in (
            "cart_mass",
            "pole_mass",
            "pole_half_length",
            "force_magnitude",
            "timestep",
            "position_threshold",
            "angle_threshold",
        ):
            if getattr(self, name) <= 0:
                raise InvalidParameter(f"{name} must be positive")

    @property
    def action_count(self) -> int:
        return 4 if self.variant == "3d" else 2

    @property
    def axis_count(self) -> int:
        return 2 if self.variant == "3d" else 1

    @property
    def state_size(self) -> int:
        # one (x, x_dot, theta, theta_dot) block per axis
        return 4 * self.axis_count


def params_for_variant(variant: str) -> CartPoleParams:
    if variant == "2d":
        return CartPoleParams(variant="2d")
    if variant == "2dg":
        return CartPoleParams(gravity=250.0, variant="2dg")
    if variant == "3d":
        return CartPoleParams(variant="3d")
    raise InvalidParameter(f"variant must be one of {VARIANTS}")


def _planar_update(x, x_dot, theta, theta_dot, force, p: CartPoleParams):
    """One semi-implicit Euler step of the planar dynamics.

    Works elementwise on scalars and numpy arrays alike.
    """
    total_mass = p.cart_mass + p.pole_mass
    pole_ml = p.pole_mass * p.pole_half_length
    sin = np.sin(theta)
    cos = np.cos(theta)
    temp = (force + pole_ml * theta_dot**2 * sin) / total_mass
    theta_acc = (p.gravity * sin - cos * temp) / (
        p.pole_half_length * (4.0 / 3.0 - p.pole_mass * cos**2 / total_mass)
    )
    x_acc = temp - pole_ml * theta_acc * cos / total_mass
    return (
        x + p.timestep * x_dot,
        x_dot + p.timestep * x_acc,
        theta + p.timestep * theta_dot,
        theta_dot + p.timestep * theta_acc,
    )


def _axis_forces(action: int, params: CartPoleParams, magnitude: float):
    """Force applied to each axis for one discrete action.

    Planar variants: 0 pushes left, 1 pushes right. 3d: 0/1 push the x axis
    left/right, 2/3 push the y axis left/right; the other axis coasts.
    """
    if not isinstance(action, (int, np.integer)) or isinstance(action, bool):
        raise InvalidAction(f"action must be an integer, got {action!r}")
    if not 0 <= action < params.action_count:
        raise InvalidAction(
            f"action {action} outside the {params.variant} action set "
            f"0..{params.action_count - 1}"
        )
    direction = 1.0 if action % 2 else -1.0
    if params.variant != "3d":
        return (direction * magnitude,)
    if action < 2:
        return (direction * magnitude, 0.0)
    return (0.0, direction * magnitude)


def step(
    state: tuple[float, ...],
    action: int,
    params: CartPoleParams,
    force_override: float | None = None,
) -> tuple[float, ...]:
    """Advance one timestep; returns a new flat state tuple.

    force_override replaces the push magnitude (0.0 gives unforced dynamics)
    and exists for equilibrium and integrator tests.
    """
    if len(state) != params.state_size:
        raise InvalidParameter(
            f"{params.variant} state has {params.state_size} components"
        )
    magnitude = params.force_magnitude if force_override is None else force_override
    forces = _axis_forces(action, params, magnitude)
    out: list[float] = []
    for axis, force in enumerate(forces):
        block = state[4 * axis : 4 * axis + 4]
        out.extend(_planar_update(*block, force, params))
    return tuple(float(v) for v in out)


def is_failed(state: tuple[float, ...], params: CartPoleParams) -> bool:
    """True when any axis leaves the track or drops the pole."""
    for axis in range(params.axis_count):
        x, _, theta, _ = state[4 * axis : 4 * axis + 4]
        if abs(x) > params.position_threshold or abs(theta) > params.angle_threshold:
            return True
    return False


def _batch_step(states: np.ndarray, forces: tuple[float, ...], p: CartPoleParams) -> np.ndarray:
    out = np.empty_like(states)
    for axis, force in enumerate(forces):
        i = 4 * axis
        out[:, i], out[:, i + 1], out[:, i + 2], out[:, i + 3] = _planar_update(
            states[:, i], states[:, i + 1], states[:, i + 2], states[:, i + 3], force, p
        )
    return out


def _batch_failed(states: np.ndarray, p: CartPoleParams) -> np.ndarray:
    failed = np.zeros(len(states), dtype=bool)
    for axis in range(p.axis_count):
        i = 4 * axis
        failed |= np.abs(states[:, i]) > p.position_threshold
        failed |= np.abs(states[:, i + 2]) > p.angle_threshold
    return failed


def constant_action_limit(params: CartPoleParams, trials: int, seed: int) -> float:
    """Mean number of identical pushes a fresh episode survives.

    Every trial starts from a uniform [-0.05, 0.05] state and repeats the
    positive x push until the failure predicate fires; the failing step is
    included in the count.
    """
    if trials < 1:
        raise InvalidParameter("trials must be at least 1")
    rng = np.random.default_rng(seed)
    states = rng.uniform(-INIT_BOUND, INIT_BOUND, size=(trials, params.state_size))
    forces = _axis_forces(1, params, params.force_magnitude)
    steps = np.zeros(trials)
    alive = np.ones(trials, dtype=bool)
    count = 0
    while alive.any():
        count += 1
        states[alive] = _batch_step(states[alive], forces, params)
        failed_now = alive & _batch_failed(states, params)
        steps[failed_now] = count
        alive &= ~failed_now
    return float(steps.mean())


# chunk size for Monte Carlo walks; fixed so results never depend on memory
_WALK_CHUNK = 16384


def analytic_sparsity(
    limit: float,
    episode_length: int = 200,
    samples: int = 100_000,
    seed: int = 0,
    axes: int = 1,
) -> float:
    """Monte Carlo fraction of random action walks that stay near balance.

    Each sample is one ±1 random walk per axis, all of episode_length steps;
    the sample survives when every axis's running sum stays within its band.
    Fractional limits round stochastically per sample, band = floor(limit + U),
    which is unbiased, reduces to the plain integer band at integer limits,
    and keeps survival strictly monotone in the limit under a shared seed.
    """
    if limit <= 0:
        raise InvalidParameter("limit must be positive")
    if episode_length < 1 or samples < 1:
        raise InvalidParameter("episode_length and samples must be positive")
    if axes not in (1, 2):
        raise InvalidParameter("axes must be 1 or 2")
    if limit >= episode_length:
        return 1.0
    rng = np.random.default_rng(seed)
    survived = 0
    done = 0
    while done < samples:
        block = min(_WALK_CHUNK, samples - done)
        bands = np.floor(limit + rng.random(block))[:, None]
        ok = np.ones(block, dtype=bool)
        for _ in range(axes):
            steps = rng.integers(0, 2, size=(block, episode_length)) * 2 - 1
            walk = np.cumsum(steps, axis=1)
            ok &= (np.abs(walk) <= bands).all(axis=1)
        survived += int(ok.sum())
        done += block
    return survived / samples


@dataclass(frozen=True)
class RolloutConfig:
    """Sampling plan for random-rollout entropy."""

    seed: int
    sample_count: int = 20_000
    bin_count: int = 256
    max_steps: int = 500

    def __post_init__(self) -> None:
        if self.sample_count < 1:
            raise InvalidParameter("sample_count must be at least 1")
        if self.bin_count < 1:
            raise InvalidParameter("bin_count must be at least 1")
        if self.max_steps < 1:
            raise InvalidParameter("max_steps must be at least 1")


def rollout_entropy(
    params: CartPoleParams, cfg: RolloutConfig
) -> tuple[float, float]:
    """Entropy of feature and action distributions under random play.

    Collects (pre-step state, action) pairs from uniformly random actions,
    restarting the episode on failure or after max_steps. Each feature is
    min-max normalized over the collected sample and histogrammed into
    bin_count bins; returns (sum of per-feature bits, action bits).
    """
    rng = np.random.default_rng(cfg.seed)
    n = params.state_size
    features = np.empty((cfg.sample_count, n))
    actions = np.empty(cfg.sample_count, dtype=np.int64)

    def fresh() -> tuple[float, ...]:
        return tuple(rng.uniform(-INIT_BOUND, INIT_BOUND, size=n))

    state = fresh()
    age = 0
    for i in range(cfg.sample_count):
        action = int(rng.integers(params.action_count))
        features[i] = state
        actions[i] = action
        state = step(state, action, params)
        age += 1
        if age >= cfg.max_steps or is_failed(state, params):
            state = fresh()
            age = 0

    feature_bits = 0.0
    for j in range(n):
        column = features[:, j]
        lo, hi = float(column.min()), float(column.max())
        if hi == lo:
            continue
        hist = histogram(column, cfg.bin_count, (lo, hi))
        feature_bits += shannon_entropy(hist.probabilities())
    counts = np.bincount(actions, minlength=params.action_count)
    action_bits = shannon_entropy(counts / counts.sum())
    return feature_bits, float(action_bits)
