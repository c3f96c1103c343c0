import { describe, expect, it } from "vitest";

import { renderLineChart } from "../src/svg";

const ramp = (n: number): number[] => Array.from({ length: n }, (_, i) => i / (n - 1));

describe("renderLineChart", () => {
  it("draws one polyline per series plus labels and legend", () => {
    const x = ramp(50);
    const svg = renderLineChart({
      series: [
        { name: "P1", x, y: x.map((v) => 1 - v) },
        { name: "P2", x, y: x.map((v) => v) },
      ],
      xLabel: "t / T",
      yLabel: "population",
      title: "demo",
    });
    expect(svg.startsWith("<svg")).toBe(true);
    expect(svg.match(/<polyline/g)!.length).toBe(2);
    expect(svg).toContain("t / T");
    expect(svg).toContain("population");
    expect(svg).toContain(">P1<");
    expect(svg).toContain(">P2<");
    expect(svg).toContain("demo");
  });

  it("breaks polylines at NaN gaps", () => {
    const x = ramp(9);
    const y = x.map((v, i) => (i === 4 ? NaN : v));
    const svg = renderLineChart({
      series: [{ name: "gappy", x, y }],
      xLabel: "x",
      yLabel: "y",
    });
    expect(svg.match(/<polyline/g)!.length).toBe(2);
  });

  it("escapes markup in labels", () => {
    const svg = renderLineChart({
      series: [{ name: "<evil>", x: [0, 1], y: [0, 1] }],
      xLabel: "a & b",
      yLabel: "y",
    });
    expect(svg).toContain("&lt;evil&gt;");
    expect(svg).toContain("a &amp; b");
    expect(svg).not.toContain("<evil>");
  });

  it("refuses all-NaN data", () => {
    expect(() =>
      renderLineChart({
        series: [{ name: "void", x: [0, 1], y: [NaN, NaN] }],
        xLabel: "x",
        yLabel: "y",
      }),
    ).toThrow(/finite/);
  });
});
