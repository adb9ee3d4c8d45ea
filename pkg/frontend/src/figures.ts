/**
 * What each of the six figures shows: which CSVs it takes (in order), which
 * columns it plots, staircase or plain line style, labels and legends.
 */

import type { ColumnName } from "./csv.js";
import type { Rgb } from "./raster.js";

export type SeriesRole = "poscorr" | "negcorr" | "nocorr";

export interface FigureDef {
  figId: number;
  /** expected input CSVs, in the order the fig subcommand emits them */
  roles: SeriesRole[];
  columns: ColumnName[];
  style: "staircase" | "line";
  xLabel: string;
  yLabel: string;
}

export interface FigureSpec {
  figId: number;
  inputs: string[];
  output: string;
}

export const ROLE_LEGEND: Record<SeriesRole, string> = {
  poscorr: "POSITIVE CORRELATION",
  negcorr: "NEGATIVE CORRELATION",
  nocorr: "NO CORRELATION",
};

/** Overlay figures keep the uncorrelated reference in black. */
export const ROLE_COLOR: Record<SeriesRole, Rgb> = {
  poscorr: [211, 47, 47],
  negcorr: [25, 118, 210],
  nocorr: [0, 0, 0],
};

const EIGENVALUE_AXIS = "EIGENVALUE (UNITS OF G)";
const ATOMS_AXIS = "NUMBER OF ATOMS N";

export const FIGURES: Record<number, FigureDef> = {
  1: {
    figId: 1,
    roles: ["nocorr"],
    columns: ["e_plus", "e_minus"],
    style: "staircase",
    xLabel: ATOMS_AXIS,
    yLabel: EIGENVALUE_AXIS,
  },
  2: {
    figId: 2,
    roles: ["poscorr"],
    columns: ["e_plus", "e_minus"],
    style: "staircase",
    xLabel: ATOMS_AXIS,
    yLabel: EIGENVALUE_AXIS,
  },
  3: {
    figId: 3,
    roles: ["poscorr", "nocorr"],
    columns: ["e_plus", "e_minus"],
    style: "staircase",
    xLabel: ATOMS_AXIS,
    yLabel: EIGENVALUE_AXIS,
  },
  4: {
    figId: 4,
    roles: ["negcorr", "nocorr"],
    columns: ["e_plus", "e_minus"],
    style: "staircase",
    xLabel: ATOMS_AXIS,
    yLabel: EIGENVALUE_AXIS,
  },
  5: {
    figId: 5,
    roles: ["poscorr", "negcorr"],
    columns: ["e_plus", "e_minus"],
    style: "staircase",
    xLabel: ATOMS_AXIS,
    yLabel: EIGENVALUE_AXIS,
  },
  6: {
    figId: 6,
    roles: ["poscorr", "negcorr", "nocorr"],
    columns: ["per_atom"],
    style: "line",
    xLabel: ATOMS_AXIS,
    yLabel: "TRANSITION FREQUENCY PER ATOM (UNITS OF G)",
  },
};

export function figureDef(figId: number): FigureDef {
  const def = FIGURES[figId];
  if (!def) {
    throw new Error(`figure id must be 1..6, got ${figId}`);
  }
  return def;
}

/** Legend text for figures 1 and 2 follows the single-series captions. */
export function legendFor(figId: number, role: SeriesRole): string {
  if (figId === 1) return "WITHOUT CORRELATION TERM";
  if (figId === 2) return "WITH CORRELATION TERM";
  return ROLE_LEGEND[role];
}
