#!/usr/bin/env node
/**
 * plotfig <fig_id> --in a.csv [--in b.csv ...] --out fig.png
 *
 * Renders one of the six figure analogues from cavitydress CSV output.
 * Input order matters for multi-series figures and follows the order the
 * `fig` subcommand writes them:
 *   fig 3: poscorr, nocorr    fig 4: negcorr, nocorr
 *   fig 5: poscorr, negcorr   fig 6: poscorr, negcorr, nocorr
 */

import { writeFileSync } from "node:fs";
import { pathToFileURL } from "node:url";

import type { FigureSpec } from "./figures.js";
import { render } from "./render.js";

export function parseArgs(argv: string[]): FigureSpec {
  if (argv.length === 0 || argv[0] === "-h" || argv[0] === "--help") {
    throw new UsageError(USAGE);
  }
  const figId = Number(argv[0]);
  if (!Number.isInteger(figId)) {
    throw new UsageError(`fig_id must be an integer 1..6, got ${argv[0]}`);
  }
  const inputs: string[] = [];
  let output: string | undefined;
  for (let i = 1; i < argv.length; i++) {
    const flag = argv[i];
    if (flag === "--in") {
      if (++i >= argv.length) throw new UsageError("--in needs a path");
      inputs.push(argv[i]);
    } else if (flag === "--out") {
      if (++i >= argv.length) throw new UsageError("--out needs a path");
      output = argv[i];
    } else {
      throw new UsageError(`unknown flag ${flag}`);
    }
  }
  if (inputs.length === 0) throw new UsageError("at least one --in CSV is required");
  if (!output) throw new UsageError("--out is required");
  return { figId, inputs, output };
}

export class UsageError extends Error {}

const USAGE = "usage: plotfig <fig_id 1..6> --in a.csv [--in b.csv ...] --out fig.png";

export function main(argv: string[]): number {
  let spec: FigureSpec;
  try {
    spec = parseArgs(argv);
  } catch (err) {
    console.error((err as Error).message);
    return 1;
  }
  try {
    const result = render(spec);
    writeFileSync(spec.output, result.png);
    console.error(`wrote ${spec.output} (${result.width}x${result.height})`);
    return 0;
  } catch (err) {
    console.error(`plotfig: ${(err as Error).message}`);
    return 1;
  }
}

if (
  process.argv[1] !== undefined &&
  import.meta.url === pathToFileURL(process.argv[1]).href
) {
  process.exit(main(process.argv.slice(2)));
}
