#!/usr/bin/env node
/**
 * plotgen — benchmark CSVs in, two log-log SVG figures out.
 *
 *   plotgen --runtime-csv runtime.csv --speedup-csv speedup.csv --out-dir figures
 *
 * Options:
 *   --runtime-csv PATH   runtime table (engine,n,repeats,...)   [required]
 *   --speedup-csv PATH   speedup table (n,baseline,ratio)       [required]
 *   --out-dir DIR        where runtime.svg / speedup.svg go     [required]
 *   --dump-json PATH     also write the plotted points as JSON
 *
 * Exit codes: 0 success, 1 bad input data, 2 usage error. Both CSVs are
 * parsed and both charts rendered before anything is written, so a failure
 * never leaves a partial or empty image behind.
 */

import { mkdirSync, writeFileSync } from "fs";
import { join } from "path";
import { parseArgs } from "util";

import { CsvError, parseRuntimeCsv, parseSpeedupCsv } from "./csv";
import { buildRuntimeChart, buildSpeedupChart, DataError } from "./plots";

const USAGE =
  "usage: plotgen --runtime-csv PATH --speedup-csv PATH --out-dir DIR [--dump-json PATH]";

interface CliOptions {
  runtimeCsv: string;
  speedupCsv: string;
  outDir: string;
  dumpJson?: string;
}

export function parseCliArgs(argv: string[]): CliOptions {
  const { values } = parseArgs({
    args: argv,
    options: {
      "runtime-csv": { type: "string" },
      "speedup-csv": { type: "string" },
      "out-dir": { type: "string" },
      "dump-json": { type: "string" },
    },
    strict: true,
    allowPositionals: false,
  });
  const runtimeCsv = values["runtime-csv"];
  const speedupCsv = values["speedup-csv"];
  const outDir = values["out-dir"];
  if (!runtimeCsv || !speedupCsv || !outDir) {
    throw new TypeError("missing required option");
  }
  return { runtimeCsv, speedupCsv, outDir, dumpJson: values["dump-json"] };
}

export function main(argv: string[]): number {
  let options: CliOptions;
  try {
    options = parseCliArgs(argv);
  } catch (error) {
    process.stderr.write(`${(error as Error).message}\n${USAGE}\n`);
    return 2;
  }

  try {
    // parse and render everything before the first write
    const runtimeRows = parseRuntimeCsv(options.runtimeCsv);
    const speedupRows = parseSpeedupCsv(options.speedupCsv);
    const runtimeChart = buildRuntimeChart(runtimeRows);
    const speedupChart = buildSpeedupChart(speedupRows);

    mkdirSync(options.outDir, { recursive: true });
    const runtimePath = join(options.outDir, "runtime.svg");
    const speedupPath = join(options.outDir, "speedup.svg");
    writeFileSync(runtimePath, runtimeChart.svg);
    writeFileSync(speedupPath, speedupChart.svg);
    if (options.dumpJson) {
      const dump = { runtime: runtimeChart.dump, speedup: speedupChart.dump };
      writeFileSync(options.dumpJson, JSON.stringify(dump, null, 2) + "\n");
    }
    process.stdout.write(`wrote ${runtimePath}\nwrote ${speedupPath}\n`);
    return 0;
  } catch (error) {
    if (error instanceof CsvError || error instanceof DataError) {
      process.stderr.write(`${error.message}\n`);
      return 1;
    }
    if ((error as NodeJS.ErrnoException).code !== undefined) {
      process.stderr.write(`${(error as Error).message}\n`);
      return 1;
    }
    throw error;
  }
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
