/** Canvas rendering of the editor scene. Drawing goes through a minimal
 * context interface so tests can substitute a recording stub. */

import type { CircleSpec, Polyline, SkinResponse } from "./types.js";

export interface Ctx2D {
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  stroke(): void;
  fill(): void;
  clearRect(x: number, y: number, w: number, h: number): void;
  setLineDash(segments: number[]): void;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  fillStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
}

export interface Viewport {
  /** world units -> pixels */
  scale: number;
  /** world origin in pixels */
  originX: number;
  originY: number;
  width: number;
  height: number;
}

export function worldToScreen(vp: Viewport, x: number, y: number): [number, number] {
  // math y-axis points up; canvas y points down
  return [vp.originX + x * vp.scale, vp.originY - y * vp.scale];
}

export function screenToWorld(vp: Viewport, px: number, py: number): [number, number] {
  return [(px - vp.originX) / vp.scale, (vp.originY - py) / vp.scale];
}

/** Fit the viewport around the circles with some padding. */
export function fitViewport(
  circles: CircleSpec[],
  width: number,
  height: number,
): Viewport {
  if (circles.length === 0) {
    return { scale: 60, originX: width / 2, originY: height / 2, width, height };
  }
  let x0 = Infinity;
  let x1 = -Infinity;
  let y0 = Infinity;
  let y1 = -Infinity;
  for (const c of circles) {
    x0 = Math.min(x0, c.x - c.r);
    x1 = Math.max(x1, c.x + c.r);
    y0 = Math.min(y0, c.y - c.r);
    y1 = Math.max(y1, c.y + c.r);
  }
  const pad = 0.15 * Math.max(x1 - x0, y1 - y0, 1);
  x0 -= pad;
  x1 += pad;
  y0 -= pad;
  y1 += pad;
  const scale = Math.min(width / (x1 - x0), height / (y1 - y0));
  return {
    scale,
    originX: width / 2 - scale * (x0 + x1) / 2,
    originY: height / 2 + scale * (y0 + y1) / 2,
    width,
    height,
  };
}

export interface LayerCounts {
  circles: number;
  mat: number;
  skinLeft: number;
  skinRight: number;
  touchpoints: number;
  offsets: number;
  diagnostics: number;
}

const COLORS = {
  circle: "#999",
  circleSelected: "#222",
  mat: "#c46ab0",
  skinLeft: "#0a66cc",
  skinRight: "#cc3333",
  touchpoint: "#111",
  offset: "#7ab87a",
  diagnostic: "#e08800",
};

function strokePolyline(ctx: Ctx2D, vp: Viewport, pts: Polyline): void {
  if (pts.length < 2) return;
  ctx.beginPath();
  const [mx, my] = worldToScreen(vp, pts[0][0], pts[0][1]);
  ctx.moveTo(mx, my);
  for (let i = 1; i < pts.length; i++) {
    const [x, y] = worldToScreen(vp, pts[i][0], pts[i][1]);
    ctx.lineTo(x, y);
  }
  ctx.stroke();
}

/** Draw the full scene; returns how many primitives each layer drew. */
export function renderScene(
  ctx: Ctx2D,
  vp: Viewport,
  circles: CircleSpec[],
  selected: number | null,
  response: SkinResponse | null,
): LayerCounts {
  const counts: LayerCounts = {
    circles: 0,
    mat: 0,
    skinLeft: 0,
    skinRight: 0,
    touchpoints: 0,
    offsets: 0,
    diagnostics: 0,
  };
  ctx.clearRect(0, 0, vp.width, vp.height);
  ctx.setLineDash([]);

  ctx.lineWidth = 1;
  for (let i = 0; i < circles.length; i++) {
    const c = circles[i];
    ctx.strokeStyle = i === selected ? COLORS.circleSelected : COLORS.circle;
    const [cx, cy] = worldToScreen(vp, c.x, c.y);
    ctx.beginPath();
    ctx.arc(cx, cy, c.r * vp.scale, 0, 2 * Math.PI);
    ctx.stroke();
    counts.circles++;
  }

  if (!response) return counts;

  ctx.strokeStyle = COLORS.mat;
  ctx.setLineDash([6, 4]);
  for (const seg of response.mat) {
    if (!seg) continue;
    strokePolyline(ctx, vp, seg.map(([x, y]) => [x, y] as [number, number]));
    counts.mat++;
  }
  ctx.setLineDash([]);

  ctx.lineWidth = 2;
  ctx.strokeStyle = COLORS.skinLeft;
  for (const seg of response.skins.left) {
    if (!seg) continue;
    strokePolyline(ctx, vp, seg);
    counts.skinLeft++;
  }
  ctx.strokeStyle = COLORS.skinRight;
  for (const seg of response.skins.right) {
    if (!seg) continue;
    strokePolyline(ctx, vp, seg);
    counts.skinRight++;
  }

  ctx.lineWidth = 1;
  ctx.strokeStyle = COLORS.offset;
  for (const row of response.offsets) {
    for (const side of [row.left, row.right]) {
      for (const seg of side) {
        if (!seg) continue;
        strokePolyline(ctx, vp, seg);
        counts.offsets++;
      }
    }
  }

  ctx.fillStyle = COLORS.touchpoint;
  for (const tp of response.touch_points) {
    if (!tp) continue;
    for (const p of [tp.plus, tp.minus]) {
      const [x, y] = worldToScreen(vp, p[0], p[1]);
      ctx.beginPath();
      ctx.arc(x, y, 3, 0, 2 * Math.PI);
      ctx.fill();
      counts.touchpoints++;
    }
  }

  ctx.strokeStyle = COLORS.diagnostic;
  ctx.lineWidth = 2;
  for (const d of response.diagnostics) {
    if (!d.point) continue;
    const [x, y] = worldToScreen(vp, d.point[0], d.point[1]);
    ctx.beginPath();
    ctx.arc(x, y, 7, 0, 2 * Math.PI);
    ctx.stroke();
    counts.diagnostics++;
  }
  return counts;
}
