#!/usr/bin/env node
/** triloop-plot: render population-vs-time SVG figures from trajectory CSVs.
 *
 *   triloop-plot input.csv [-o out.svg] [--columns P1,P2,P3]
 *                [--time-unit 1.0] [--title "..."]
 *
 * Exits 0 on success and 1 on any error (missing file, truncated or empty
 * CSV, unknown columns), leaving no partial image behind.
 */

import { plotPopulations } from "./plot";

const USAGE =
  "usage: triloop-plot <input.csv> [-o <output.svg>] [--columns A,B,C] " +
  "[--time-unit <T>] [--title <text>]";

interface CliArgs {
  input: string;
  output: string;
  columns?: string[];
  timeUnit?: number;
  title?: string;
}

export function parseArgs(argv: string[]): CliArgs {
  let input: string | undefined;
  let output: string | undefined;
  let columns: string[] | undefined;
  let timeUnit: number | undefined;
  let title: string | undefined;

  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i]!;
    const next = (): string => {
      const v = argv[++i];
      if (v === undefined) throw new Error(`${arg} needs a value\n${USAGE}`);
      return v;
    };
    switch (arg) {
      case "-o":
      case "--output":
        output = next();
        break;
      case "--columns":
        columns = next().split(",").map((c) => c.trim()).filter((c) => c !== "");
        break;
      case "--time-unit": {
        timeUnit = Number(next());
        if (!Number.isFinite(timeUnit) || timeUnit <= 0) {
          throw new Error(`--time-unit needs a positive number\n${USAGE}`);
        }
        break;
      }
      case "--title":
        title = next();
        break;
      case "-h":
      case "--help":
        throw new Error(USAGE);
      default:
        if (arg.startsWith("-")) throw new Error(`unknown flag ${arg}\n${USAGE}`);
        if (input !== undefined) throw new Error(`unexpected argument ${arg}\n${USAGE}`);
        input = arg;
    }
  }
  if (input === undefined) throw new Error(USAGE);
  if (output === undefined) output = input.replace(/\.csv$/i, "") + ".svg";
  return { input, output, columns, timeUnit, title };
}

export function main(argv: string[]): number {
  try {
    const args = parseArgs(argv);
    plotPopulations(args);
    console.log(`wrote ${args.output}`);
    return 0;
  } catch (err) {
    console.error(`triloop-plot: ${err instanceof Error ? err.message : err}`);
    return 1;
  }
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
