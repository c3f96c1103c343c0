import { readFileSync, writeFileSync } from "fs";

import { CsvError, parseTrajectoryCsv } from "./csv";
import { renderLineChart, Series } from "./svg";

export interface PlotSpec {
  /** trajectory CSV path */
  input: string;
  /** output SVG path */
  output: string;
  /** columns to draw (default population columns) */
  columns?: string[];
  /** divide the time axis by this unit and label it t/T */
  timeUnit?: number;
  title?: string;
}

export const DEFAULT_COLUMNS = ["P1", "P2", "P3"];

/** Read a trajectory CSV and write a population-vs-time SVG figure.
 *
 * Throws CsvError on malformed/truncated/empty input and Error when a
 * requested column is missing (the message lists the available ones).
 */
export function plotPopulations(spec: PlotSpec): void {
  const text = readFileSync(spec.input, "utf8");
  const table = parseTrajectoryCsv(text);

  const wanted = spec.columns && spec.columns.length > 0 ? spec.columns : DEFAULT_COLUMNS;
  const missing = wanted.filter((c) => !table.data.has(c));
  if (missing.length > 0) {
    throw new CsvError(
      `column(s) not in CSV: ${missing.join(", ")}; ` +
        `available: ${table.columns.join(", ")}`,
    );
  }
  if (!table.data.has("t")) {
    throw new CsvError(
      `CSV has no "t" column; available: ${table.columns.join(", ")}`,
    );
  }

  const unit = spec.timeUnit ?? 1.0;
  if (!(unit > 0)) {
    throw new Error(`time unit must be positive, got ${unit}`);
  }
  const t = table.data.get("t")!.map((v) => v / unit);
  const series: Series[] = wanted.map((name) => ({
    name,
    x: t,
    y: table.data.get(name)!,
  }));

  const svg = renderLineChart({
    series,
    xLabel: "t / T",
    yLabel: "population",
    title: spec.title,
  });
  writeFileSync(spec.output, svg, "utf8");
}
