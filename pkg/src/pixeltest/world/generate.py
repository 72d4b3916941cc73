"""Procedural world generation.

Generation is a pure function of (seed, params): rooms are carved into a
solid grid, connected by corridors, then decorated with platforms, pillars,
objects and injected bug regions. Every non-solid cell is guaranteed
reachable from spawn (verified by flood fill before returning).
"""

from __future__ import annotations

from collections import deque

import numpy as np

from .sprites import sprite_library
from .types import (
    CELL_SIZE,
    PLATFORM_HEIGHT,
    TURN_DELTA,
    BugKind,
    BugRegion,
    GenParams,
    Palette,
    PlacedObject,
    Pose,
    WorldSpec,
)


class GenerationError(ValueError):
    """Raised when params cannot be satisfied on the generated layout."""


def flood_fill_reachable(solid: np.ndarray, start: tuple[int, int]) -> set[tuple[int, int]]:
    """BFS over non-solid cells, 4-connected. Returns reachable (cx, cy) set."""
    h, w = solid.shape
    sx, sy = start
    if solid[sy, sx]:
        return set()
    seen = {(sx, sy)}
    queue = deque([(sx, sy)])
    while queue:
        cx, cy = queue.popleft()
        for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            nx, ny = cx + dx, cy + dy
            if 0 <= nx < w and 0 <= ny < h and not solid[ny, nx] and (nx, ny) not in seen:
                seen.add((nx, ny))
                queue.append((nx, ny))
    return seen


def _carve_rooms(solid, rng, params):
    rooms = []
    h, w = solid.shape
    attempts = 0
    while len(rooms) < params.room_count and attempts < 500:
        attempts += 1
        rw = int(rng.integers(params.room_min, params.room_max + 1))
        rh = int(rng.integers(params.room_min, params.room_max + 1))
        x0 = int(rng.integers(1, max(2, w - rw - 1)))
        y0 = int(rng.integers(1, max(2, h - rh - 1)))
        solid[y0 : y0 + rh, x0 : x0 + rw] = False
        rooms.append((x0, y0, rw, rh))
    if len(rooms) < params.room_count:
        raise GenerationError(
            f"could not place {params.room_count} rooms in a "
            f"{w}x{h} grid after {attempts} attempts"
        )
    return rooms


def _carve_corridor(solid, a, b, width):
    ax, ay = a
    bx, by = b
    half = max(0, width - 1)
    for x in range(min(ax, bx), max(ax, bx) + 1):
        solid[ay : ay + 1 + half, x] = False
    for y in range(min(ay, by), max(ay, by) + 1):
        solid[y, bx : bx + 1 + half] = False


def _room_center(room):
    x0, y0, rw, rh = room
    return (x0 + rw // 2, y0 + rh // 2)


def _clip_to_interior(solid, coords):
    h, w = solid.shape
    x, y = coords
    return (min(max(x, 1), w - 2), min(max(y, 1), h - 2))


def _make_palette(rng) -> Palette:
    """Per-seed background colours, sampled far apart across seeds."""
    hue = rng.uniform(0.0, 1.0)

    def hsv(h, s, v):
        import colorsys

        r, g, b = colorsys.hsv_to_rgb(h % 1.0, s, v)
        return (int(r * 255), int(g * 255), int(b * 255))

    wall = hsv(hue, rng.uniform(0.25, 0.55), rng.uniform(0.45, 0.75))
    floor = hsv((hue + 0.45) % 1.0, rng.uniform(0.1, 0.3), rng.uniform(0.2, 0.4))
    sky = hsv((hue + 0.2) % 1.0, rng.uniform(0.1, 0.4), rng.uniform(0.7, 0.95))
    platform = hsv((hue + 0.08) % 1.0, rng.uniform(0.3, 0.5), rng.uniform(0.5, 0.8))
    return Palette(
        wall_rgb=wall,
        floor_rgb=floor,
        sky_rgb=sky,
        platform_rgb=platform,
        sprites=sprite_library(),
    )


def generate_world(seed: int, params: GenParams | None = None) -> WorldSpec:
    params = params or GenParams()
    if params.width < 8 or params.height < 8:
        raise GenerationError("map must be at least 8x8 cells")
    rng = np.random.default_rng(np.random.SeedSequence([seed, 0x57_4F_52_4C]))

    solid = np.ones((params.height, params.width), dtype=bool)
    rooms = _carve_rooms(solid, rng, params)
    for i in range(1, len(rooms)):
        # connect each room to a previously placed one: connectivity by construction
        j = int(rng.integers(0, i))
        _carve_corridor(solid, _room_center(rooms[i]), _room_center(rooms[j]), params.corridor_width)
    # border stays solid
    solid[0, :] = True
    solid[-1, :] = True
    solid[:, 0] = True
    solid[:, -1] = True

    spawn_cell = _clip_to_interior(solid, _room_center(rooms[0]))
    if solid[spawn_cell[1], spawn_cell[0]]:
        solid[spawn_cell[1], spawn_cell[0]] = False

    # pillars: re-solidify interior cells, rejecting any that break reachability
    placed_pillars = 0
    for _ in range(params.pillar_count * 8):
        if placed_pillars >= params.pillar_count:
            break
        cx = int(rng.integers(1, params.width - 1))
        cy = int(rng.integers(1, params.height - 1))
        if solid[cy, cx] or (cx, cy) == spawn_cell:
            continue
        solid[cy, cx] = True
        open_cells = int((~solid).sum())
        if len(flood_fill_reachable(solid, spawn_cell)) != open_cells:
            solid[cy, cx] = False
            continue
        placed_pillars += 1

    open_list = [
        (cx, cy)
        for cy in range(params.height)
        for cx in range(params.width)
        if not solid[cy, cx]
    ]
    reach = flood_fill_reachable(solid, spawn_cell)
    if len(reach) != len(open_list):
        raise GenerationError("generated layout is not fully connected")

    floor = np.zeros((params.height, params.width), dtype=np.float64)
    candidates = [c for c in open_list if c != spawn_cell]
    rng.shuffle(candidates)
    taken: set[tuple[int, int]] = set()

    placed_platforms = 0
    for cell in list(candidates):
        if placed_platforms >= params.platform_count:
            break
        floor[cell[1], cell[0]] = PLATFORM_HEIGHT
        placed_platforms += 1
        taken.add(cell)

    # objects on flat open cells, one per cell
    flat = [c for c in candidates if c not in taken]
    objects: list[PlacedObject] = []
    for class_name in sorted(params.object_counts):
        count = params.object_counts[class_name]
        for _ in range(count):
            if not flat:
                raise GenerationError(
                    f"not enough open cells to place {count} x {class_name}"
                )
            cell = flat.pop()
            taken.add(cell)
            x = (cell[0] + 0.5) * CELL_SIZE
            y = (cell[1] + 0.5) * CELL_SIZE
            objects.append(PlacedObject(class_name, (x, y, 0.0), class_name))

    bug_regions: list[BugRegion] = []
    clip_count = params.bug_counts.get("CLIP_THROUGH", 0)
    phantom_count = params.bug_counts.get("PHANTOM_SUPPORT", 0)

    # CLIP_THROUGH regions are solid cells adjacent to a reachable open cell
    solid_adjacent = [
        (cx, cy)
        for cy in range(1, params.height - 1)
        for cx in range(1, params.width - 1)
        if solid[cy, cx]
        and any(
            (cx + dx, cy + dy) in reach for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1))
        )
    ]
    rng.shuffle(solid_adjacent)
    if clip_count > len(solid_adjacent):
        raise GenerationError(
            f"cannot place {clip_count} CLIP_THROUGH regions: "
            f"only {len(solid_adjacent)} candidate solid cells"
        )
    for _ in range(clip_count):
        bug_regions.append(BugRegion(BugKind.CLIP_THROUGH, solid_adjacent.pop()))

    if phantom_count > len(flat):
        raise GenerationError(
            f"cannot place {phantom_count} PHANTOM_SUPPORT regions: "
            f"only {len(flat)} free open cells"
        )
    for _ in range(phantom_count):
        cell = flat.pop()
        taken.add(cell)
        bug_regions.append(BugRegion(BugKind.PHANTOM_SUPPORT, cell))

    heading_idx = int(rng.integers(0, 24))
    spawn = Pose(
        x=(spawn_cell[0] + 0.5) * CELL_SIZE,
        y=(spawn_cell[1] + 0.5) * CELL_SIZE,
        z=float(floor[spawn_cell[1], spawn_cell[0]]),
        heading=heading_idx * TURN_DELTA,
    )

    shade = 0.75 + 0.25 * rng.random((params.height, params.width))

    return WorldSpec(
        seed=seed,
        params=params,
        solid=solid,
        floor=floor,
        shade=shade,
        objects=objects,
        bug_regions=bug_regions,
        spawn=spawn,
        palette=_make_palette(rng),
    )
