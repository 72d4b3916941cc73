"""First-person column-raycast renderer.

Produces the agent's sole input: a 64x64x3 frame in [0, 1]. Colours are
computed in uint8 and divided by 255, so frames survive PNG round-trips and
checkpoint storage bit-exactly. Rendering is a pure function of state.
"""

from __future__ import annotations

import numpy as np

from .env import EnvState
from .types import (
    EYE_HEIGHT,
    OBJECT_HEIGHT,
    OBJECT_WIDTH,
    OBS_HEIGHT,
    OBS_WIDTH,
    PLATFORM_HEIGHT,
    WALL_HEIGHT,
    WorldSpec,
)

FOV = np.pi / 3.0
_TAN_HALF_FOV = np.tan(FOV / 2.0)
PROJECTION_SCALE = (OBS_WIDTH / 2.0) / _TAN_HALF_FOV

_MAX_DDA_ITER = 160
_MIN_DEPTH = 1e-4
_FOG_SLOPE = 0.05
_FOG_FLOOR = 0.30
_SIDE_SHADE = 0.80


def _fog(dist):
    return np.clip(1.0 - _FOG_SLOPE * dist, _FOG_FLOOR, 1.0)


def _cast_columns(world: WorldSpec, x: float, y: float, heading: float):
    """Vectorized DDA over all screen columns.

    Returns wall hit distances, texture u, shade multipliers, and the first
    raised-floor (platform face) crossing per column.
    """
    w = OBS_WIDTH
    dirx, diry = np.cos(heading), np.sin(heading)
    planex, planey = -np.sin(heading) * _TAN_HALF_FOV, np.cos(heading) * _TAN_HALF_FOV
    cam = 2.0 * (np.arange(w) + 0.5) / w - 1.0
    rdx = dirx + planex * cam
    rdy = diry + planey * cam

    with np.errstate(divide="ignore"):
        delta_x = np.abs(1.0 / rdx)
        delta_y = np.abs(1.0 / rdy)
    step_x = np.where(rdx < 0, -1, 1)
    step_y = np.where(rdy < 0, -1, 1)

    map_x = np.full(w, int(np.floor(x)), dtype=np.int64)
    map_y = np.full(w, int(np.floor(y)), dtype=np.int64)
    side_x = np.where(rdx < 0, (x - map_x) * delta_x, (map_x + 1.0 - x) * delta_x)
    side_y = np.where(rdy < 0, (y - map_y) * delta_y, (map_y + 1.0 - y) * delta_y)

    active = np.ones(w, dtype=bool)
    side = np.zeros(w, dtype=np.int8)
    wall_dist = np.full(w, np.inf)
    wall_shade = np.ones(w)
    wall_u = np.zeros(w)

    plat_dist = np.full(w, np.inf)
    plat_shade = np.ones(w)

    solid = world.solid
    floor = world.floor
    shade = world.shade
    h_cells, w_cells = solid.shape

    for _ in range(_MAX_DDA_ITER):
        if not active.any():
            break
        go_x = side_x < side_y
        adv_x = active & go_x
        adv_y = active & ~go_x
        map_x[adv_x] += step_x[adv_x]
        side[adv_x] = 0
        map_y[adv_y] += step_y[adv_y]
        side[adv_y] = 1
        dist = np.where(go_x, side_x, side_y)
        side_x[adv_x] += delta_x[adv_x]
        side_y[adv_y] += delta_y[adv_y]

        inside = (map_x >= 0) & (map_x < w_cells) & (map_y >= 0) & (map_y < h_cells)
        cx = np.clip(map_x, 0, w_cells - 1)
        cy = np.clip(map_y, 0, h_cells - 1)
        hit = active & (~inside | solid[cy, cx])
        if hit.any():
            d = np.maximum(dist[hit], _MIN_DEPTH)
            wall_dist[hit] = d
            wall_shade[hit] = np.where(
                side[hit] == 1, shade[cy[hit], cx[hit]] * _SIDE_SHADE, shade[cy[hit], cx[hit]]
            )
            hx = x + rdx[hit] * d
            hy = y + rdy[hit] * d
            wall_u[hit] = np.where(side[hit] == 1, hx - np.floor(hx), hy - np.floor(hy))
            active[hit] = False

        plat = active & inside & (floor[cy, cx] >= PLATFORM_HEIGHT) & ~np.isfinite(plat_dist)
        if plat.any():
            plat_dist[plat] = np.maximum(dist[plat], _MIN_DEPTH)
            plat_shade[plat] = shade[cy[plat], cx[plat]]

    wall_dist[~np.isfinite(wall_dist)] = _MAX_DDA_ITER
    return wall_dist, wall_u, wall_shade, side, plat_dist, plat_shade


def _rows_for(eye_z: float, z_world: float, dist: np.ndarray) -> np.ndarray:
    return OBS_HEIGHT / 2.0 + (eye_z - z_world) * PROJECTION_SCALE / dist


def render(state: EnvState) -> np.ndarray:
    """Render the egocentric view for a state. Returns float32 (H, W, 3)."""
    return render_uint8(state).astype(np.float32) / 255.0


def render_uint8(state: EnvState) -> np.ndarray:
    world = state.world
    eye_z = state.z + EYE_HEIGHT
    heading = state.heading

    wall_dist, wall_u, wall_shade, _side, plat_dist, plat_shade = _cast_columns(
        world, state.x, state.y, heading
    )

    h, w = OBS_HEIGHT, OBS_WIDTH
    pal = world.palette
    rows = np.arange(h, dtype=np.float64)[:, None]

    # background: sky above the horizon row, perspective-shaded floor below
    img = np.empty((h, w, 3), dtype=np.float64)
    sky = np.array(pal.sky_rgb, dtype=np.float64)
    floor_col = np.array(pal.floor_rgb, dtype=np.float64)
    denom = rows[:, 0] - h / 2.0
    with np.errstate(divide="ignore", invalid="ignore"):
        floor_t = np.where(denom > 0.1, eye_z * PROJECTION_SCALE / np.maximum(denom, 0.1), 60.0)
    row_fog = _fog(floor_t)
    sky_grad = 1.0 - 0.25 * (h / 2.0 - np.minimum(rows[:, 0], h / 2.0)) / (h / 2.0)
    is_floor = rows[:, 0] >= h / 2.0
    img[:] = np.where(
        is_floor[:, None, None],
        (floor_col[None, None, :] * row_fog[:, None, None]),
        (sky[None, None, :] * sky_grad[:, None, None]),
    )

    # full-height walls
    y_top = _rows_for(eye_z, WALL_HEIGHT, wall_dist)
    y_bot = _rows_for(eye_z, 0.0, wall_dist)
    edge = (wall_u < 0.04) | (wall_u > 0.96)
    tex = np.where(edge, 0.55, 1.0)
    wall_cols = (
        np.array(pal.wall_rgb, dtype=np.float64)[None, :]
        * (wall_shade * tex * _fog(wall_dist))[:, None]
    )
    wall_mask = (rows >= y_top[None, :]) & (rows < y_bot[None, :])
    img = np.where(wall_mask[:, :, None], wall_cols[None, :, :], img)

    # platform faces (0 .. PLATFORM_HEIGHT), drawn only where nearer than the wall
    visible_plat = plat_dist < wall_dist
    if visible_plat.any():
        p_top = _rows_for(eye_z, PLATFORM_HEIGHT, plat_dist)
        p_bot = _rows_for(eye_z, 0.0, plat_dist)
        plat_cols = (
            np.array(pal.platform_rgb, dtype=np.float64)[None, :]
            * (plat_shade * _fog(plat_dist))[:, None]
        )
        plat_mask = (
            (rows >= p_top[None, :]) & (rows < p_bot[None, :]) & visible_plat[None, :]
        )
        img = np.where(plat_mask[:, :, None], plat_cols[None, :, :], img)

    _draw_sprites(img, state, wall_dist)

    return np.clip(np.rint(img), 0, 255).astype(np.uint8)


def _sprite_geometry(state: EnvState, obj):
    """Camera-space geometry for one object; None when behind the camera."""
    heading = state.heading
    dirx, diry = np.cos(heading), np.sin(heading)
    px, py = -np.sin(heading), np.cos(heading)
    relx = obj.position[0] - state.x
    rely = obj.position[1] - state.y
    depth = relx * dirx + rely * diry
    if depth < 0.15:
        return None
    lateral = relx * px + rely * py
    eye_z = state.z + EYE_HEIGHT
    center_col = OBS_WIDTH / 2.0 + PROJECTION_SCALE * lateral / depth
    half_w = (OBJECT_WIDTH / 2.0) * PROJECTION_SCALE / depth
    base_z = obj.position[2]
    y_top = _rows_for(eye_z, base_z + OBJECT_HEIGHT, np.array([depth]))[0]
    y_bot = _rows_for(eye_z, base_z, np.array([depth]))[0]
    return depth, center_col - half_w, center_col + half_w, y_top, y_bot


def _draw_sprites(img, state: EnvState, wall_dist):
    objs = []
    for obj in state.world.objects:
        geo = _sprite_geometry(state, obj)
        if geo is not None:
            objs.append((geo[0], obj, geo))
    objs.sort(key=lambda t: -t[0])  # far to near

    for depth, obj, (dp, x0, x1, y_top, y_bot) in objs:
        sprite = state.world.palette.sprites[obj.sprite_id]
        sh, sw = sprite.shape[:2]
        c0 = max(int(np.ceil(x0 - 0.5)), 0)
        c1 = min(int(np.ceil(x1 - 0.5)), OBS_WIDTH)
        r0 = max(int(np.ceil(y_top - 0.5)), 0)
        r1 = min(int(np.ceil(y_bot - 0.5)), OBS_HEIGHT)
        if c0 >= c1 or r0 >= r1 or x1 - x0 < 0.5 or y_bot - y_top < 0.5:
            continue
        cols = np.arange(c0, c1)
        vis = depth < wall_dist[cols]
        if not vis.any():
            continue
        tex_c = np.clip(((cols + 0.5 - x0) / (x1 - x0) * sw).astype(int), 0, sw - 1)
        rows_px = np.arange(r0, r1)
        tex_r = np.clip(((rows_px + 0.5 - y_top) / (y_bot - y_top) * sh).astype(int), 0, sh - 1)
        tile = sprite[np.ix_(tex_r, tex_c)]
        alpha = (tile[:, :, 3] > 0) & vis[None, :]
        shaded = tile[:, :, :3].astype(np.float64) * _fog(depth)
        region = img[r0:r1, c0:c1, :]
        region[alpha] = shaded[alpha]


def project_object_boxes(state: EnvState, min_visibility: float = 0.0):
    """Ground-truth projected bounding boxes for labeled-scene synthesis.

    Returns a list of dicts: class_name, bbox (x0, y0, x1, y1) clipped to the
    frame, visibility in [0, 1] (fraction of box columns not occluded by
    walls), and camera depth.
    """
    wall_dist, *_ = _cast_columns(state.world, state.x, state.y, state.heading)
    out = []
    for obj in state.world.objects:
        geo = _sprite_geometry(state, obj)
        if geo is None:
            continue
        depth, x0, x1, y_top, y_bot = geo
        cx0 = max(x0, 0.0)
        cx1 = min(x1, float(OBS_WIDTH))
        cy0 = max(y_top, 0.0)
        cy1 = min(y_bot, float(OBS_HEIGHT))
        if cx1 - cx0 < 1.0 or cy1 - cy0 < 1.0:
            continue
        c0, c1 = int(np.floor(cx0)), int(np.ceil(cx1))
        cols = np.arange(c0, max(c1, c0 + 1))
        cols = cols[(cols >= 0) & (cols < OBS_WIDTH)]
        visibility = float((depth < wall_dist[cols]).mean()) if len(cols) else 0.0
        if visibility < min_visibility:
            continue
        out.append(
            {
                "class_name": obj.class_name,
                "bbox": (cx0, cy0, cx1, cy1),
                "visibility": visibility,
                "depth": float(depth),
            }
        )
    return out
