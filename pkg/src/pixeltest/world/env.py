"""Environment state and transition kinematics.

All motion arithmetic uses exact binary fractions (stride 0.25, gravity
0.125) so identical action sequences give bitwise-identical state traces.
The two injected bug archetypes are realized here: CLIP_THROUGH cells admit
forward penetration into solid geometry, PHANTOM_SUPPORT cells freeze a jump
at its apex so the agent stands on nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .types import (
    CELL_SIZE,
    FLOAT_EPSILON,
    GRAVITY,
    JUMP_VELOCITY,
    STEP_UP_LIMIT,
    STRIDE,
    TURN_DELTA,
    TURN_STEPS,
    WALL_HEIGHT,
    Action,
    Anomaly,
    AnomalyKind,
    BugKind,
    Pose,
    StepInfo,
    WorldSpec,
)

AGENT_MAX_Z = 1.5  # ceiling clamp keeps the eye inside the wall volume


@dataclass(frozen=True)
class EnvState:
    """Immutable simulation state; step() returns a new one."""

    world: WorldSpec
    x: float
    y: float
    z: float
    heading_idx: int  # heading = heading_idx * (2*pi / 24), exact canonical form
    vz: float
    airborne: bool
    frozen: bool  # standing on phantom support
    step_count: int
    episode_seed: int

    @property
    def heading(self) -> float:
        return (self.heading_idx % TURN_STEPS) * TURN_DELTA

    @property
    def pose(self) -> Pose:
        return Pose(self.x, self.y, self.z, self.heading, self.vz)

    @property
    def cell(self) -> tuple[int, int]:
        return self.world.cell_at(self.x, self.y)


def reset(world: WorldSpec, episode_seed: int = 0) -> tuple[EnvState, np.ndarray]:
    """Place the agent at the world spawn pose and render the first frame."""
    from .render import render

    heading_idx = int(round(world.spawn.heading / TURN_DELTA)) % TURN_STEPS
    state = EnvState(
        world=world,
        x=world.spawn.x,
        y=world.spawn.y,
        z=world.spawn.z,
        heading_idx=heading_idx,
        vz=0.0,
        airborne=False,
        frozen=False,
        step_count=0,
        episode_seed=episode_seed,
    )
    return state, render(state)


def place_agent(
    state: EnvState, x: float, y: float, heading_idx: int, z: float | None = None
) -> EnvState:
    """Teleport helper for tests, demonstrations, and evaluation probes."""
    world = state.world
    cx, cy = world.cell_at(x, y)
    if world.is_solid(cx, cy):
        raise ValueError(f"cannot place agent inside solid cell {(cx, cy)}")
    zz = world.floor_at(cx, cy) if z is None else z
    return replace(
        state,
        x=x,
        y=y,
        z=zz,
        heading_idx=heading_idx % TURN_STEPS,
        vz=0.0,
        airborne=False,
        frozen=False,
    )


_MOVE_OFFSETS = {
    Action.FORWARD: 0.0,
    Action.BACK: np.pi,
    Action.LEFT: np.pi / 2.0,
    Action.RIGHT: -np.pi / 2.0,
}


def _can_enter(world: WorldSpec, action: Action, cx: int, cy: int, z: float) -> bool:
    if world.is_solid(cx, cy):
        return action is Action.FORWARD and world.bug_region_at(cx, cy, BugKind.CLIP_THROUGH)
    return world.floor_at(cx, cy) <= z + 1e-12


def advance(state: EnvState, action: Action) -> tuple[EnvState, StepInfo]:
    """One deterministic transition without rendering."""
    world = state.world
    action = Action(action)
    x, y, z = state.x, state.y, state.z
    heading_idx = state.heading_idx
    vz = state.vz
    airborne = state.airborne
    frozen = state.frozen
    collided = False

    if action is Action.TURN_LEFT:
        heading_idx = (heading_idx + 1) % TURN_STEPS
    elif action is Action.TURN_RIGHT:
        heading_idx = (heading_idx - 1) % TURN_STEPS
    elif action is Action.JUMP:
        if not airborne:
            vz = JUMP_VELOCITY
            airborne = True
            frozen = False
    else:
        heading = heading_idx * TURN_DELTA + _MOVE_OFFSETS[action]
        tx = x + STRIDE * float(np.cos(heading))
        ty = y + STRIDE * float(np.sin(heading))
        tcx, tcy = world.cell_at(tx, ty)
        step_z = z if (airborne or frozen) else z + STEP_UP_LIMIT
        if _can_enter(world, action, tcx, tcy, step_z):
            x, y = tx, ty
        else:
            collided = True

    cx, cy = world.cell_at(x, y)
    floor_here = world.floor_at(cx, cy)
    in_phantom = world.bug_region_at(cx, cy, BugKind.PHANTOM_SUPPORT)

    if frozen and not in_phantom:
        # walked off the phantom cell: support vanishes
        frozen = False
        airborne = True

    if airborne:
        z_new = z + vz - GRAVITY / 2.0
        vz = vz - GRAVITY
        if z_new > AGENT_MAX_Z:
            z_new = AGENT_MAX_Z
            vz = 0.0
        z = z_new
        if vz == 0.0 and in_phantom:
            # apex reached over phantom support: freeze mid-air
            airborne = False
            frozen = True
        elif z <= floor_here:
            z = floor_here
            vz = 0.0
            airborne = False
    elif not frozen:
        if z > floor_here:
            # stepped off a ledge: start falling next integration
            airborne = True
            vz = 0.0
        else:
            z = floor_here

    new_state = EnvState(
        world=world,
        x=x,
        y=y,
        z=z,
        heading_idx=heading_idx,
        vz=vz,
        airborne=airborne,
        frozen=frozen,
        step_count=state.step_count + 1,
        episode_seed=state.episode_seed,
    )
    info = StepInfo(
        pose=new_state.pose,
        collided=collided,
        anomalies=tuple(check_anomalies(new_state)),
    )
    return new_state, info


def step(state: EnvState, action: Action) -> tuple[EnvState, np.ndarray, StepInfo]:
    """Full transition: advance the state and render the new observation."""
    from .render import render

    new_state, info = advance(state, action)
    return new_state, render(new_state), info


def check_anomalies(state: EnvState) -> list[Anomaly]:
    """Ground-truth bug oracle over the current state.

    CLIPPING: agent position inside a solid cell. FLOATING: resting more than
    FLOAT_EPSILON above the local floor with no vertical motion and no jump
    in progress.
    """
    world = state.world
    anomalies = []
    cx, cy = state.cell
    if world.is_solid(cx, cy):
        anomalies.append(Anomaly(AnomalyKind.CLIPPING, state.pose, state.step_count))
    floor_here = world.floor_at(cx, cy)
    if (
        not state.airborne
        and state.vz == 0.0
        and state.z > floor_here + FLOAT_EPSILON
        and not world.is_solid(cx, cy)
    ):
        anomalies.append(Anomaly(AnomalyKind.FLOATING, state.pose, state.step_count))
    return anomalies


def jump_arc_steps() -> int:
    """Closed-form duration of the ballistic arc in steps."""
    return int(np.ceil(2.0 * JUMP_VELOCITY / GRAVITY))


__all__ = [
    "EnvState",
    "reset",
    "step",
    "advance",
    "check_anomalies",
    "place_agent",
    "jump_arc_steps",
    "AGENT_MAX_Z",
    "WALL_HEIGHT",
    "CELL_SIZE",
]
