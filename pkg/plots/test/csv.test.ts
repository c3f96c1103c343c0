import { readFileSync } from "fs";
import { join } from "path";
import { describe, expect, it } from "vitest";

import { CsvError, parseTrajectoryCsv } from "../src/csv";

const fixture = (name: string): string =>
  readFileSync(join(__dirname, "fixtures", name), "utf8");

describe("parseTrajectoryCsv", () => {
  it("parses the bundled trajectory fixture", () => {
    const table = parseTrajectoryCsv(fixture("fig5.csv"));
    expect(table.columns[0]).toBe("t");
    expect(table.columns).toContain("P1");
    expect(table.columns).toContain("P_dark");
    expect(table.rows).toBe(101);
    const t = table.data.get("t")!;
    expect(t[0]).toBeCloseTo(-5);
    expect(t[t.length - 1]).toBeCloseTo(5);
    const p2 = table.data.get("P2")!;
    const p3 = table.data.get("P3")!;
    expect(p2[p2.length - 1]!).toBeCloseTo(0.5, 1);
    expect(p3[p3.length - 1]!).toBeCloseTo(0.5, 1);
  });

  it("accepts nan and inf tokens as values", () => {
    const table = parseTrajectoryCsv("t,P_dark\n0,nan\n1,-inf\n");
    expect(table.data.get("P_dark")![0]).toBeNaN();
    expect(table.data.get("P_dark")![1]).toBe(-Infinity);
  });

  it("rejects an empty file", () => {
    expect(() => parseTrajectoryCsv("")).toThrow(CsvError);
  });

  it("rejects a header without data rows", () => {
    expect(() => parseTrajectoryCsv("t,P1\n")).toThrow(/no data rows/);
  });

  it("rejects the truncated fixture as ragged", () => {
    expect(() => parseTrajectoryCsv(fixture("fig5_truncated.csv"))).toThrow(
      /expected \d+ fields/,
    );
  });

  it("rejects non-numeric fields with a located message", () => {
    expect(() => parseTrajectoryCsv("t,P1\n0,fast\n")).toThrow(/line 2/);
  });
});
