/** Minimal dependency-free SVG line charts. */

export interface Series {
  name: string;
  x: number[];
  y: number[];
}

export interface ChartOptions {
  series: Series[];
  xLabel: string;
  yLabel: string;
  title?: string;
  width?: number;
  height?: number;
}

const PALETTE = [
  "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
  "#8c564b", "#17becf", "#7f7f7f",
];

const MARGIN = { top: 42, right: 150, bottom: 52, left: 64 };

/** Tick step of the form 1/2/5 x 10^k giving roughly `count` intervals. */
function niceStep(span: number, count: number): number {
  const raw = span / count;
  const power = Math.pow(10, Math.floor(Math.log10(raw)));
  for (const m of [1, 2, 5, 10]) {
    if (m * power >= raw) return m * power;
  }
  return 10 * power;
}

function ticks(lo: number, hi: number, count = 6): number[] {
  if (!(hi > lo)) return [lo];
  const step = niceStep(hi - lo, count);
  const first = Math.ceil(lo / step) * step;
  const out: number[] = [];
  for (let v = first; v <= hi + 1e-12 * step; v += step) {
    out.push(Math.abs(v) < 1e-12 * step ? 0 : v);
  }
  return out;
}

function formatTick(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) return v.toExponential(1);
  return String(parseFloat(v.toPrecision(6)));
}

function finiteExtent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (Number.isFinite(v)) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }
  if (lo === Infinity) throw new Error("series has no finite values");
  if (lo === hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  return [lo, hi];
}

const esc = (s: string): string =>
  s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");

/** Render the chart as a standalone SVG document. */
export function renderLineChart(options: ChartOptions): string {
  const width = options.width ?? 860;
  const height = options.height ?? 520;
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;

  const allX = options.series.flatMap((s) => s.x);
  const allY = options.series.flatMap((s) => s.y);
  const [x0, x1] = finiteExtent(allX);
  let [y0, y1] = finiteExtent(allY);
  const pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;

  const sx = (x: number): number => MARGIN.left + ((x - x0) / (x1 - x0)) * plotW;
  const sy = (y: number): number => MARGIN.top + (1 - (y - y0) / (y1 - y0)) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="sans-serif" font-size="13">`,
    `<rect width="${width}" height="${height}" fill="white"/>`,
  );
  if (options.title) {
    parts.push(
      `<text x="${MARGIN.left + plotW / 2}" y="24" text-anchor="middle" ` +
        `font-size="16">${esc(options.title)}</text>`,
    );
  }

  for (const tx of ticks(x0, x1)) {
    const px = sx(tx);
    parts.push(
      `<line x1="${px}" y1="${MARGIN.top}" x2="${px}" y2="${MARGIN.top + plotH}" ` +
        `stroke="#dddddd"/>`,
      `<text x="${px}" y="${MARGIN.top + plotH + 18}" text-anchor="middle">` +
        `${formatTick(tx)}</text>`,
    );
  }
  for (const ty of ticks(y0, y1)) {
    const py = sy(ty);
    parts.push(
      `<line x1="${MARGIN.left}" y1="${py}" x2="${MARGIN.left + plotW}" y2="${py}" ` +
        `stroke="#dddddd"/>`,
      `<text x="${MARGIN.left - 8}" y="${py + 4}" text-anchor="end">` +
        `${formatTick(ty)}</text>`,
    );
  }
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" ` +
      `fill="none" stroke="#333333"/>`,
  );

  options.series.forEach((s, idx) => {
    const color = PALETTE[idx % PALETTE.length]!;
    // split at non-finite samples so NaN gaps stay gaps
    let run: string[] = [];
    const flush = (): void => {
      if (run.length > 1) {
        parts.push(
          `<polyline fill="none" stroke="${color}" stroke-width="1.8" ` +
            `points="${run.join(" ")}"/>`,
        );
      }
      run = [];
    };
    for (let i = 0; i < s.x.length; i++) {
      const x = s.x[i]!;
      const y = s.y[i]!;
      if (Number.isFinite(x) && Number.isFinite(y)) {
        run.push(`${sx(x).toFixed(2)},${sy(y).toFixed(2)}`);
      } else {
        flush();
      }
    }
    flush();
    const ly = MARGIN.top + 16 + 20 * idx;
    const lx = MARGIN.left + plotW + 12;
    parts.push(
      `<line x1="${lx}" y1="${ly - 4}" x2="${lx + 22}" y2="${ly - 4}" ` +
        `stroke="${color}" stroke-width="2.5"/>`,
      `<text x="${lx + 28}" y="${ly}">${esc(s.name)}</text>`,
    );
  });

  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${height - 12}" ` +
      `text-anchor="middle">${esc(options.xLabel)}</text>`,
    `<text x="18" y="${MARGIN.top + plotH / 2}" text-anchor="middle" ` +
      `transform="rotate(-90 18 ${MARGIN.top + plotH / 2})">` +
      `${esc(options.yLabel)}</text>`,
    "</svg>",
  );
  return parts.join("\n");
}
