"""Deterministic 2.5D game simulator: generation, stepping, rendering, oracles."""

from .env import (
    AGENT_MAX_Z,
    EnvState,
    advance,
    check_anomalies,
    jump_arc_steps,
    place_agent,
    reset,
    step,
)
from .generate import GenerationError, flood_fill_reachable, generate_world
from .render import PROJECTION_SCALE, project_object_boxes, render, render_uint8
from .sprites import ALL_CLASSES, BASE_CLASSES, NOVEL_CLASS
from .types import (
    CELL_SIZE,
    EYE_HEIGHT,
    FLOAT_EPSILON,
    GRAVITY,
    JUMP_VELOCITY,
    N_ACTIONS,
    OBJECT_HEIGHT,
    OBJECT_WIDTH,
    OBS_CHANNELS,
    OBS_HEIGHT,
    OBS_WIDTH,
    PLATFORM_HEIGHT,
    STRIDE,
    TURN_DELTA,
    TURN_STEPS,
    WALL_HEIGHT,
    Action,
    Anomaly,
    AnomalyKind,
    BugKind,
    BugRegion,
    GenParams,
    Palette,
    PlacedObject,
    Pose,
    StepInfo,
    WorldSpec,
)

__all__ = [
    "Action",
    "Anomaly",
    "AnomalyKind",
    "BugKind",
    "BugRegion",
    "EnvState",
    "GenParams",
    "GenerationError",
    "Palette",
    "PlacedObject",
    "Pose",
    "StepInfo",
    "WorldSpec",
    "generate_world",
    "flood_fill_reachable",
    "reset",
    "step",
    "advance",
    "check_anomalies",
    "place_agent",
    "render",
    "render_uint8",
    "project_object_boxes",
    "jump_arc_steps",
    "N_ACTIONS",
    "OBS_HEIGHT",
    "OBS_WIDTH",
    "OBS_CHANNELS",
    "CELL_SIZE",
    "STRIDE",
    "TURN_DELTA",
    "TURN_STEPS",
    "GRAVITY",
    "JUMP_VELOCITY",
    "WALL_HEIGHT",
    "PLATFORM_HEIGHT",
    "EYE_HEIGHT",
    "FLOAT_EPSILON",
    "OBJECT_WIDTH",
    "OBJECT_HEIGHT",
    "AGENT_MAX_Z",
    "PROJECTION_SCALE",
    "TURN_DELTA",
]
