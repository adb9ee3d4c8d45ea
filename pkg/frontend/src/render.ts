/**
 * Figure rendering: CSV in, PNG bytes out.
 *
 * The renderer never recomputes physics.  The y-arrays it draws are the
 * parsed CSV columns, exposed verbatim on the result so callers (and the
 * test suite) can checksum plotted-values == file-values.
 */

import { readFileSync } from "node:fs";

import { parseSeriesCsv, type ColumnName, type SeriesData } from "./csv.js";
import {
  figureDef,
  legendFor,
  ROLE_COLOR,
  type FigureSpec,
  type SeriesRole,
} from "./figures.js";
import { encodePng } from "./png.js";
import { Canvas, type Rgb } from "./raster.js";

export interface PlottedSeries {
  role: SeriesRole;
  legend: string;
  x: number[];
  branches: { column: ColumnName; values: number[] }[];
}

export interface RenderResult {
  png: Buffer;
  width: number;
  height: number;
  plotted: PlottedSeries[];
}

const WIDTH = 800;
const HEIGHT = 520;
const MARGIN = { left: 70, right: 24, top: 24, bottom: 52 };
const BLACK: Rgb = [0, 0, 0];
const GREY: Rgb = [208, 208, 208];

/** 1-2-5 tick ladder covering [lo, hi] with about `target` steps. */
export function niceTicks(lo: number, hi: number, target = 6): number[] {
  if (!(hi > lo)) {
    return [lo];
  }
  const raw = (hi - lo) / target;
  const power = Math.pow(10, Math.floor(Math.log10(raw)));
  let step = power;
  for (const mult of [1, 2, 5, 10]) {
    step = mult * power;
    if (step >= raw) break;
  }
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

function formatTick(value: number): string {
  return Number(value.toPrecision(10)).toString().toUpperCase();
}

export function render(spec: FigureSpec): RenderResult {
  const def = figureDef(spec.figId);
  if (spec.inputs.length !== def.roles.length) {
    throw new Error(
      `figure ${spec.figId} takes ${def.roles.length} input CSV(s) ` +
        `(${def.roles.join(", ")}), got ${spec.inputs.length}`,
    );
  }
  const series: SeriesData[] = spec.inputs.map((path) => {
    let text: string;
    try {
      text = readFileSync(path, "utf8");
    } catch (err) {
      throw new Error(`cannot read ${path}: ${(err as Error).message}`);
    }
    try {
      return parseSeriesCsv(text);
    } catch (err) {
      throw new Error(`${path}: ${(err as Error).message}`);
    }
  });

  const plotted: PlottedSeries[] = series.map((data, i) => ({
    role: def.roles[i],
    legend: legendFor(spec.figId, def.roles[i]),
    x: data.n,
    branches: def.columns.map((column) => ({
      column,
      values: data.columns.get(column)!,
    })),
  }));

  const canvas = new Canvas(WIDTH, HEIGHT);
  drawFigure(canvas, def.xLabel, def.yLabel, plotted, def.style);
  return {
    png: encodePng(WIDTH, HEIGHT, canvas.pixels),
    width: WIDTH,
    height: HEIGHT,
    plotted,
  };
}

function drawFigure(
  canvas: Canvas,
  xLabel: string,
  yLabel: string,
  plotted: PlottedSeries[],
  style: "staircase" | "line",
): void {
  const x0 = MARGIN.left;
  const x1 = WIDTH - MARGIN.right;
  const y0 = MARGIN.top;
  const y1 = HEIGHT - MARGIN.bottom;

  let xMin = Infinity;
  let xMax = -Infinity;
  let yMin = Infinity;
  let yMax = -Infinity;
  for (const s of plotted) {
    xMin = Math.min(xMin, s.x[0]);
    xMax = Math.max(xMax, s.x[s.x.length - 1]);
    for (const b of s.branches) {
      for (const v of b.values) {
        yMin = Math.min(yMin, v);
        yMax = Math.max(yMax, v);
      }
    }
  }
  if (xMax === xMin) {
    xMax = xMin + 1;
  }
  if (yMax === yMin) {
    // constant series (fig 6 without correlation) still needs a box
    yMax += 1;
    yMin -= 1;
  }
  const pad = 0.05 * (yMax - yMin);
  yMin -= pad;
  yMax += pad;

  const sx = (v: number) => x0 + ((v - xMin) / (xMax - xMin)) * (x1 - x0);
  const sy = (v: number) => y1 - ((v - yMin) / (yMax - yMin)) * (y1 - y0);

  // gridlines + ticks + numbers
  for (const tick of niceTicks(xMin, xMax)) {
    const px = Math.round(sx(tick));
    canvas.line(px, y0, px, y1, GREY);
    canvas.line(px, y1, px, y1 + 4, BLACK);
    const label = formatTick(tick);
    canvas.text(px - Math.floor(Canvas.textWidth(label) / 2), y1 + 8, label, BLACK);
  }
  for (const tick of niceTicks(yMin, yMax)) {
    const py = Math.round(sy(tick));
    canvas.line(x0, py, x1, py, GREY);
    canvas.line(x0 - 4, py, x0, py, BLACK);
    const label = formatTick(tick);
    canvas.text(x0 - 8 - Canvas.textWidth(label), py - 3, label, BLACK);
  }
  // axes box on top of the grid
  canvas.line(x0, y0, x1, y0, BLACK);
  canvas.line(x0, y1, x1, y1, BLACK);
  canvas.line(x0, y0, x0, y1, BLACK);
  canvas.line(x1, y0, x1, y1, BLACK);

  // series
  for (const s of plotted) {
    const color = ROLE_COLOR[s.role];
    for (const b of s.branches) {
      drawSeries(canvas, s.x.map(sx), b.values.map(sy), color, style);
    }
  }

  // labels and legend
  canvas.text(
    Math.round((x0 + x1) / 2 - Canvas.textWidth(xLabel) / 2),
    HEIGHT - 16,
    xLabel,
    BLACK,
  );
  canvas.text(x0 + 6, y0 + 6, yLabel, BLACK);
  let legendY = y0 + 22;
  for (const s of plotted) {
    const color = ROLE_COLOR[s.role];
    canvas.line(x0 + 8, legendY + 3, x0 + 34, legendY + 3, color, 2);
    canvas.text(x0 + 40, legendY, s.legend, BLACK);
    legendY += 14;
  }
}

function drawSeries(
  canvas: Canvas,
  xs: number[],
  ys: number[],
  color: Rgb,
  style: "staircase" | "line",
): void {
  for (let i = 0; i + 1 < xs.length; i++) {
    if (style === "staircase") {
      // post-step interpolation: hold the value, then jump
      canvas.line(xs[i], ys[i], xs[i + 1], ys[i], color, 2);
      canvas.line(xs[i + 1], ys[i], xs[i + 1], ys[i + 1], color, 2);
    } else {
      canvas.line(xs[i], ys[i], xs[i + 1], ys[i + 1], color, 2);
    }
  }
  if (xs.length === 1) {
    canvas.fillRect(Math.round(xs[0]) - 1, Math.round(ys[0]) - 1, 3, 3, color);
  }
}
