/**
 * Parser for the staircase-series CSV contract produced by the cavitydress
 * CLI.  The header must match exactly; anything else is refused so a stale
 * or foreign file can never be plotted silently.
 */

export const SERIES_HEADER = "N,e_plus,e_minus,per_atom,step_upper,step_lower";

export const COLUMNS = SERIES_HEADER.split(",") as readonly string[];

export type ColumnName =
  | "N"
  | "e_plus"
  | "e_minus"
  | "per_atom"
  | "step_upper"
  | "step_lower";

export interface SeriesData {
  /** atom numbers, ascending */
  n: number[];
  columns: Map<ColumnName, number[]>;
}

export class CsvContractError extends Error {}

export function parseSeriesCsv(text: string): SeriesData {
  const lines = text.split("\n");
  if (lines.length === 0 || lines[0] !== SERIES_HEADER) {
    throw new CsvContractError(
      `header does not match the series contract: got ${JSON.stringify(
        lines[0] ?? "",
      )}, expected ${JSON.stringify(SERIES_HEADER)}`,
    );
  }
  const columns = new Map<ColumnName, number[]>();
  for (const name of COLUMNS) columns.set(name as ColumnName, []);
  for (let i = 1; i < lines.length; i++) {
    const line = lines[i];
    if (line === "") continue; // trailing newline
    const cells = line.split(",");
    if (cells.length !== COLUMNS.length) {
      throw new CsvContractError(
        `row ${i} has ${cells.length} cells, expected ${COLUMNS.length}`,
      );
    }
    for (let c = 0; c < COLUMNS.length; c++) {
      const value = Number(cells[c]);
      if (!Number.isFinite(value)) {
        throw new CsvContractError(
          `row ${i}, column ${COLUMNS[c]}: not a finite number: ${cells[c]}`,
        );
      }
      columns.get(COLUMNS[c] as ColumnName)!.push(value);
    }
  }
  const n = columns.get("N")!;
  if (n.length === 0) {
    throw new CsvContractError("series has a header but no data rows");
  }
  for (let i = 1; i < n.length; i++) {
    if (!(n[i] > n[i - 1])) {
      throw new CsvContractError(`N column not strictly ascending at row ${i + 1}`);
    }
  }
  return { n, columns };
}
