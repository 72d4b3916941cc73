"""Core data types for the simulated game world."""

from __future__ import annotations

import base64
import enum
import json
from dataclasses import dataclass, field

import numpy as np

# Geometry constants shared by simulation and rendering. All vertical values
# are exact binary fractions so step arithmetic never accumulates error.
CELL_SIZE = 1.0
WALL_HEIGHT = 2.0
PLATFORM_HEIGHT = 0.5
STEP_UP_LIMIT = 0.3
STRIDE = 0.25
TURN_STEPS = 24  # 15 degrees per turn
GRAVITY = 0.125
JUMP_VELOCITY = 0.375  # 6-step ballistic arc: ceil(2 * v0 / g) = 6
EYE_HEIGHT = 0.5
OBJECT_HEIGHT = 0.625
OBJECT_WIDTH = 0.625
FLOAT_EPSILON = 0.05

OBS_HEIGHT = 64
OBS_WIDTH = 64
OBS_CHANNELS = 3

TURN_DELTA = 2.0 * np.pi / TURN_STEPS


class Action(enum.IntEnum):
    """The agent's discrete action set (first-person shooter controls)."""

    FORWARD = 0
    BACK = 1
    LEFT = 2
    RIGHT = 3
    TURN_LEFT = 4
    TURN_RIGHT = 5
    JUMP = 6


N_ACTIONS = len(Action)


class AnomalyKind(enum.Enum):
    FLOATING = "FLOATING"
    CLIPPING = "CLIPPING"


class BugKind(enum.Enum):
    CLIP_THROUGH = "CLIP_THROUGH"
    PHANTOM_SUPPORT = "PHANTOM_SUPPORT"


@dataclass(frozen=True)
class Pose:
    """Ground-truth agent pose. Heading canonical in [0, 2*pi)."""

    x: float
    y: float
    z: float
    heading: float
    vertical_velocity: float = 0.0

    @property
    def position(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=np.float64)


@dataclass(frozen=True)
class Anomaly:
    kind: AnomalyKind
    pose: Pose
    step_index: int

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "pose": {
                "x": self.pose.x,
                "y": self.pose.y,
                "z": self.pose.z,
                "heading": self.pose.heading,
                "vertical_velocity": self.pose.vertical_velocity,
            },
            "step_index": self.step_index,
        }

    @staticmethod
    def from_dict(d: dict) -> "Anomaly":
        p = d["pose"]
        return Anomaly(
            kind=AnomalyKind(d["kind"]),
            pose=Pose(p["x"], p["y"], p["z"], p["heading"], p["vertical_velocity"]),
            step_index=d["step_index"],
        )


@dataclass(frozen=True)
class StepInfo:
    """Ground truth emitted per step. Never fed to any policy."""

    pose: Pose
    collided: bool
    anomalies: tuple[Anomaly, ...] = ()


@dataclass(frozen=True)
class PlacedObject:
    class_name: str
    position: tuple[float, float, float]
    sprite_id: str


@dataclass(frozen=True)
class BugRegion:
    kind: BugKind
    cell: tuple[int, int]


@dataclass(frozen=True)
class GenParams:
    """Procedural generation knobs. Defaults produce a mid-size test map."""

    width: int = 32
    height: int = 32
    room_count: int = 6
    room_min: int = 4
    room_max: int = 8
    corridor_width: int = 1
    platform_count: int = 4
    pillar_count: int = 4
    object_counts: dict[str, int] = field(default_factory=dict)
    bug_counts: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "width": self.width,
            "height": self.height,
            "room_count": self.room_count,
            "room_min": self.room_min,
            "room_max": self.room_max,
            "corridor_width": self.corridor_width,
            "platform_count": self.platform_count,
            "pillar_count": self.pillar_count,
            "object_counts": dict(sorted(self.object_counts.items())),
            "bug_counts": dict(sorted(self.bug_counts.items())),
        }

    @staticmethod
    def from_dict(d: dict) -> "GenParams":
        return GenParams(
            width=d.get("width", 32),
            height=d.get("height", 32),
            room_count=d.get("room_count", 6),
            room_min=d.get("room_min", 4),
            room_max=d.get("room_max", 8),
            corridor_width=d.get("corridor_width", 1),
            platform_count=d.get("platform_count", 4),
            pillar_count=d.get("pillar_count", 4),
            object_counts=dict(d.get("object_counts", {})),
            bug_counts=dict(d.get("bug_counts", {})),
        )


def _encode_bitmap(arr: np.ndarray) -> dict:
    return {
        "shape": list(arr.shape),
        "data": base64.b64encode(arr.astype(np.uint8).tobytes()).decode("ascii"),
    }


def _decode_bitmap(d: dict) -> np.ndarray:
    raw = base64.b64decode(d["data"])
    return np.frombuffer(raw, dtype=np.uint8).reshape(d["shape"]).copy()


@dataclass
class Palette:
    """Per-world colours plus the sprite bitmaps for every object class.

    Sprite bitmaps are HxWx4 uint8 (RGB + alpha mask).
    """

    wall_rgb: tuple[int, int, int]
    floor_rgb: tuple[int, int, int]
    sky_rgb: tuple[int, int, int]
    platform_rgb: tuple[int, int, int]
    sprites: dict[str, np.ndarray]

    def to_dict(self) -> dict:
        return {
            "wall_rgb": list(self.wall_rgb),
            "floor_rgb": list(self.floor_rgb),
            "sky_rgb": list(self.sky_rgb),
            "platform_rgb": list(self.platform_rgb),
            "sprites": {k: _encode_bitmap(v) for k, v in sorted(self.sprites.items())},
        }

    @staticmethod
    def from_dict(d: dict) -> "Palette":
        return Palette(
            wall_rgb=tuple(d["wall_rgb"]),
            floor_rgb=tuple(d["floor_rgb"]),
            sky_rgb=tuple(d["sky_rgb"]),
            platform_rgb=tuple(d["platform_rgb"]),
            sprites={k: _decode_bitmap(v) for k, v in d["sprites"].items()},
        )


@dataclass
class WorldSpec:
    """A fully generated world: grid geometry, objects, injected bug regions.

    ``solid`` and ``floor`` are (height, width) arrays indexed [row=y, col=x].
    """

    seed: int
    params: GenParams
    solid: np.ndarray  # bool (H, W)
    floor: np.ndarray  # float64 (H, W)
    shade: np.ndarray  # float64 (H, W), per-cell wall shade multiplier
    objects: list[PlacedObject]
    bug_regions: list[BugRegion]
    spawn: Pose
    palette: Palette

    @property
    def width(self) -> int:
        return self.solid.shape[1]

    @property
    def height(self) -> int:
        return self.solid.shape[0]

    def cell_at(self, x: float, y: float) -> tuple[int, int]:
        return int(np.floor(x / CELL_SIZE)), int(np.floor(y / CELL_SIZE))

    def is_solid(self, cx: int, cy: int) -> bool:
        if cx < 0 or cy < 0 or cx >= self.width or cy >= self.height:
            return True
        return bool(self.solid[cy, cx])

    def floor_at(self, cx: int, cy: int) -> float:
        if cx < 0 or cy < 0 or cx >= self.width or cy >= self.height:
            return 0.0
        return float(self.floor[cy, cx])

    def bug_region_at(self, cx: int, cy: int, kind: BugKind) -> bool:
        return any(r.kind is kind and r.cell == (cx, cy) for r in self.bug_regions)

    @property
    def bounds(self) -> tuple[np.ndarray, np.ndarray]:
        lo = np.zeros(3, dtype=np.float64)
        hi = np.array([self.width * CELL_SIZE, self.height * CELL_SIZE, WALL_HEIGHT])
        return lo, hi

    def to_json(self) -> str:
        """Canonical serialization: sorted keys, compact separators."""
        doc = {
            "seed": self.seed,
            "params": self.params.to_dict(),
            "solid": [[int(v) for v in row] for row in self.solid],
            "floor": [[float(v) for v in row] for row in self.floor],
            "shade": [[float(v) for v in row] for row in self.shade],
            "objects": [
                {
                    "class_name": o.class_name,
                    "position": [float(c) for c in o.position],
                    "sprite_id": o.sprite_id,
                }
                for o in self.objects
            ],
            "bug_regions": [
                {"kind": r.kind.value, "cell": list(r.cell)} for r in self.bug_regions
            ],
            "spawn": {
                "x": self.spawn.x,
                "y": self.spawn.y,
                "z": self.spawn.z,
                "heading": self.spawn.heading,
                "vertical_velocity": self.spawn.vertical_velocity,
            },
            "palette": self.palette.to_dict(),
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json(text: str) -> "WorldSpec":
        doc = json.loads(text)
        sp = doc["spawn"]
        return WorldSpec(
            seed=doc["seed"],
            params=GenParams.from_dict(doc["params"]),
            solid=np.array(doc["solid"], dtype=bool),
            floor=np.array(doc["floor"], dtype=np.float64),
            shade=np.array(doc["shade"], dtype=np.float64),
            objects=[
                PlacedObject(o["class_name"], tuple(o["position"]), o["sprite_id"])
                for o in doc["objects"]
            ],
            bug_regions=[
                BugRegion(BugKind(r["kind"]), tuple(r["cell"]))
                for r in doc["bug_regions"]
            ],
            spawn=Pose(sp["x"], sp["y"], sp["z"], sp["heading"], sp["vertical_velocity"]),
            palette=Palette.from_dict(doc["palette"]),
        )
