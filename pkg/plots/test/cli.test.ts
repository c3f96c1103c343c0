import { existsSync, mkdtempSync, readFileSync } from "fs";
import { tmpdir } from "os";
import { join } from "path";
import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { main, parseArgs } from "../src/cli";

const FIG5 = join(__dirname, "fixtures", "fig5.csv");
const TRUNCATED = join(__dirname, "fixtures", "fig5_truncated.csv");
const EMPTY = join(__dirname, "fixtures", "empty.csv");

let dir: string;

beforeEach(() => {
  dir = mkdtempSync(join(tmpdir(), "triloop-plot-"));
  vi.spyOn(console, "log").mockImplementation(() => {});
  vi.spyOn(console, "error").mockImplementation(() => {});
});

afterEach(() => {
  vi.restoreAllMocks();
});

describe("triloop-plot CLI", () => {
  it("renders the trajectory fixture and exits 0", () => {
    const out = join(dir, "fig5.svg");
    expect(main([FIG5, "-o", out])).toBe(0);
    const svg = readFileSync(out, "utf8");
    expect(svg).toContain("<svg");
    expect(svg).toContain(">P1<");
    expect(svg).toContain(">P3<");
  });

  it("exits nonzero on a truncated CSV and writes nothing", () => {
    const out = join(dir, "bad.svg");
    expect(main([TRUNCATED, "-o", out])).toBe(1);
    expect(existsSync(out)).toBe(false);
  });

  it("exits nonzero on an empty CSV", () => {
    expect(main([EMPTY, "-o", join(dir, "e.svg")])).toBe(1);
  });

  it("exits nonzero on a missing input file", () => {
    expect(main([join(dir, "nope.csv")])).toBe(1);
  });

  it("lists available columns when a requested one is missing", () => {
    const err = vi.mocked(console.error);
    expect(main([FIG5, "-o", join(dir, "x.svg"), "--columns", "P9"])).toBe(1);
    const message = String(err.mock.calls.at(-1)?.[0]);
    expect(message).toContain("P9");
    expect(message).toContain("available:");
    expect(message).toContain("P_spectator");
  });

  it("plots custom columns with a time unit", () => {
    const out = join(dir, "dark.svg");
    const code = main([
      FIG5, "-o", out,
      "--columns", "P_dark,P_spectator",
      "--time-unit", "1.0",
      "--title", "trapped population",
    ]);
    expect(code).toBe(0);
    const svg = readFileSync(out, "utf8");
    expect(svg).toContain("P_dark");
    expect(svg).toContain("trapped population");
  });

  it("derives the default output name from the input", () => {
    const args = parseArgs(["runs/traj.csv"]);
    expect(args.output).toBe("runs/traj.svg");
    expect(args.columns).toBeUndefined();
  });

  it("rejects a bad time unit", () => {
    expect(main([FIG5, "--time-unit", "-2"])).toBe(1);
    expect(main([FIG5, "--time-unit", "soon"])).toBe(1);
  });

  it("rejects unknown flags", () => {
    expect(main([FIG5, "--frobnicate"])).toBe(1);
  });
});
