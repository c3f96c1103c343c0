/** Strict reader for triloop trajectory CSV files.
 *
 * The contract: a comma-separated header naming every column, then one row
 * of numeric fields per output time.  `nan`/`inf` tokens are legal values
 * (the dark-state population is NaN where undefined); anything else that
 * fails to parse as a number, a ragged row (the signature of a truncated
 * file), or a file without data rows is rejected.
 */

export class CsvError extends Error {}

export interface TrajectoryTable {
  /** column names in file order */
  columns: string[];
  /** number of data rows */
  rows: number;
  /** column name -> values */
  data: Map<string, number[]>;
}

const SPECIAL = /^[+-]?(nan|inf(inity)?)$/i;

function parseField(token: string, line: number, column: string): number {
  const trimmed = token.trim();
  if (SPECIAL.test(trimmed)) {
    const lower = trimmed.toLowerCase();
    if (lower.endsWith("nan")) return NaN;
    return lower.startsWith("-") ? -Infinity : Infinity;
  }
  if (trimmed === "") {
    throw new CsvError(`line ${line}: empty field in column "${column}"`);
  }
  const value = Number(trimmed);
  if (Number.isNaN(value)) {
    throw new CsvError(
      `line ${line}: cannot parse "${trimmed}" in column "${column}" as a number`,
    );
  }
  return value;
}

export function parseTrajectoryCsv(text: string): TrajectoryTable {
  const lines = text.split(/\r?\n/);
  while (lines.length > 0 && lines[lines.length - 1]!.trim() === "") {
    lines.pop();
  }
  if (lines.length === 0) {
    throw new CsvError("empty CSV: no header line");
  }
  const columns = lines[0]!.split(",").map((c) => c.trim());
  if (columns.some((c) => c === "")) {
    throw new CsvError("malformed header: empty column name");
  }
  if (lines.length === 1) {
    throw new CsvError("CSV has a header but no data rows");
  }
  const series: number[][] = columns.map(() => []);
  for (let i = 1; i < lines.length; i++) {
    const fields = lines[i]!.split(",");
    if (fields.length !== columns.length) {
      throw new CsvError(
        `line ${i + 1}: expected ${columns.length} fields, found ` +
          `${fields.length} (truncated or malformed file?)`,
      );
    }
    for (let j = 0; j < columns.length; j++) {
      series[j]!.push(parseField(fields[j]!, i + 1, columns[j]!));
    }
  }
  const data = new Map<string, number[]>();
  columns.forEach((name, j) => data.set(name, series[j]!));
  return { columns, rows: lines.length - 1, data };
}
