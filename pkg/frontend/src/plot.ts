// Canvas rendering. Input arrays arrive straight from the API and are only
// mapped to pixels here.

import type { CurvesPayload, ScanPayload } from "./api.js";

export interface Viewport {
  xmin: number;
  xmax: number;
  ymin: number;
  ymax: number;
}

export function dataBounds(
  xs: number[][],
  ys: number[][],
  pad = 0.05,
): Viewport {
  let xmin = Infinity, xmax = -Infinity, ymin = Infinity, ymax = -Infinity;
  for (const arr of xs) for (const v of arr) { if (v < xmin) xmin = v; if (v > xmax) xmax = v; }
  for (const arr of ys) for (const v of arr) { if (v < ymin) ymin = v; if (v > ymax) ymax = v; }
  if (!isFinite(xmin)) { xmin = -1; xmax = 1; }
  if (!isFinite(ymin)) { ymin = -1; ymax = 1; }
  if (xmin === xmax) { xmin -= 1; xmax += 1; }
  if (ymin === ymax) { ymin -= 1; ymax += 1; }
  const dx = (xmax - xmin) * pad;
  const dy = (ymax - ymin) * pad;
  return { xmin: xmin - dx, xmax: xmax + dx, ymin: ymin - dy, ymax: ymax + dy };
}

export function clampViewport(v: Viewport, ylim: number): Viewport {
  return {
    ...v,
    ymin: Math.max(v.ymin, -ylim),
    ymax: Math.min(v.ymax, ylim),
  };
}

const MARGIN = { left: 46, right: 10, top: 10, bottom: 30 };

function mapper(v: Viewport, width: number, height: number) {
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;
  return {
    px: (x: number) => MARGIN.left + ((x - v.xmin) / (v.xmax - v.xmin)) * plotW,
    py: (y: number) => MARGIN.top + (1 - (y - v.ymin) / (v.ymax - v.ymin)) * plotH,
  };
}

function drawAxes(
  ctx: CanvasRenderingContext2D,
  v: Viewport,
  width: number,
  height: number,
  xlabel: string,
  ylabel: string,
) {
  const { px, py } = mapper(v, width, height);
  ctx.strokeStyle = "#888";
  ctx.fillStyle = "#444";
  ctx.lineWidth = 1;
  ctx.font = "11px sans-serif";
  ctx.strokeRect(MARGIN.left, MARGIN.top, width - MARGIN.left - MARGIN.right,
    height - MARGIN.top - MARGIN.bottom);
  const xticks = 6, yticks = 6;
  ctx.textAlign = "center";
  for (let i = 0; i <= xticks; i++) {
    const x = v.xmin + ((v.xmax - v.xmin) * i) / xticks;
    ctx.fillText(x.toPrecision(3), px(x), height - MARGIN.bottom + 14);
  }
  ctx.textAlign = "right";
  for (let i = 0; i <= yticks; i++) {
    const y = v.ymin + ((v.ymax - v.ymin) * i) / yticks;
    ctx.fillText(y.toPrecision(3), MARGIN.left - 4, py(y) + 4);
  }
  ctx.textAlign = "center";
  ctx.fillText(xlabel, (MARGIN.left + width - MARGIN.right) / 2, height - 4);
  ctx.save();
  ctx.translate(10, (MARGIN.top + height - MARGIN.bottom) / 2);
  ctx.rotate(-Math.PI / 2);
  ctx.fillText(ylabel, 0, 0);
  ctx.restore();
}

function polyline(
  ctx: CanvasRenderingContext2D,
  xs: number[],
  ys: number[],
  v: Viewport,
  width: number,
  height: number,
) {
  const { px, py } = mapper(v, width, height);
  ctx.beginPath();
  let pen = false;
  for (let i = 0; i < xs.length; i++) {
    const inside = ys[i] >= v.ymin && ys[i] <= v.ymax;
    if (!inside) { pen = false; continue; }
    if (pen) ctx.lineTo(px(xs[i]), py(ys[i]));
    else { ctx.moveTo(px(xs[i]), py(ys[i])); pen = true; }
  }
  ctx.stroke();
}

export function drawCurves(canvas: HTMLCanvasElement, payload: CurvesPayload): void {
  const ctx = canvas.getContext("2d")!;
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);
  const v = clampViewport(
    dataBounds(
      [payload.fold.b1, payload.flip.b1, payload.ns.b1],
      [payload.fold.w12, payload.flip.w12, payload.ns.w12],
    ),
    20,
  );
  drawAxes(ctx, v, width, height, "b1", "w12");
  ctx.lineWidth = 1.6;
  ctx.strokeStyle = "#1a6fb4";
  ctx.setLineDash([]);
  polyline(ctx, payload.fold.b1, payload.fold.w12, v, width, height);
  ctx.strokeStyle = "#c44e52";
  ctx.setLineDash([8, 5]);
  polyline(ctx, payload.flip.b1, payload.flip.w12, v, width, height);
  ctx.strokeStyle = "#2a8a5c";
  ctx.setLineDash([2, 4]);
  polyline(ctx, payload.ns.b1, payload.ns.w12, v, width, height);
  ctx.setLineDash([]);
}

export function drawScan(
  canvas: HTMLCanvasElement,
  payload: ScanPayload,
  param: string,
): void {
  const ctx = canvas.getContext("2d")!;
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);

  const legs: Record<string, { p: number[]; x: number[] }> = {
    first: { p: [], x: [] },
    second: { p: [], x: [] },
  };
  for (const pt of payload.points) {
    legs[pt.leg].p.push(pt.params[param]);
    legs[pt.leg].x.push(pt.x);
  }
  const v = dataBounds(
    [legs.first.p, legs.second.p],
    [legs.first.x, legs.second.x],
  );

  for (const w of payload.hysteresis.windows) {
    const { px } = mapper(v, width, height);
    ctx.fillStyle = "rgba(240, 180, 40, 0.18)";
    ctx.fillRect(px(w.param_lo), MARGIN.top, px(w.param_hi) - px(w.param_lo),
      height - MARGIN.top - MARGIN.bottom);
  }
  drawAxes(ctx, v, width, height, param, "x");
  const { px, py } = mapper(v, width, height);
  const colors: Record<string, string> = { first: "#1a6fb4", second: "#c44e52" };
  for (const leg of ["first", "second"] as const) {
    ctx.fillStyle = colors[leg];
    const { p, x } = legs[leg];
    for (let i = 0; i < p.length; i++) ctx.fillRect(px(p[i]) - 1, py(x[i]) - 1, 2, 2);
  }
}
