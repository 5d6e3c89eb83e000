/**
 * Strict readers for the two benchmark CSV schemas.
 *
 * Headers must match exactly; every field is validated. Errors carry the
 * file path and 1-based row number so the CLI can report `file:row: reason`.
 * Checksums are kept as strings: they are 64-bit values that do not fit in
 * a JS double.
 */

import { readFileSync } from "fs";

export const RUNTIME_HEADER =
  "engine,n,repeats,seconds_median,seconds_min,prime_count,checksum";
export const SPEEDUP_HEADER = "n,baseline,ratio";

export const ENGINES = ["classical", "segmented", "hybrid"] as const;
export type Engine = (typeof ENGINES)[number];

export interface RuntimeRow {
  engine: Engine;
  n: number;
  repeats: number;
  secondsMedian: number;
  secondsMin: number;
  primeCount: number;
  checksum: string;
}

export interface SpeedupRow {
  n: number;
  baseline: Engine;
  ratio: number;
}

export class CsvError extends Error {
  constructor(
    readonly file: string,
    readonly row: number,
    reason: string,
  ) {
    super(`${file}: row ${row}: ${reason}`);
    this.name = "CsvError";
  }
}

function isEngine(name: string): name is Engine {
  return (ENGINES as readonly string[]).includes(name);
}

function splitRows(file: string, text: string, header: string, width: number): string[][] {
  const lines = text.split(/\r?\n/);
  if (lines[0] !== header) {
    throw new CsvError(file, 1, `expected header ${JSON.stringify(header)}`);
  }
  const rows: string[][] = [];
  for (let i = 1; i < lines.length; i++) {
    const line = lines[i];
    if (!line) continue; // trailing newline / blank lines
    const fields = line.split(",");
    if (fields.length !== width) {
      throw new CsvError(file, i + 1, `expected ${width} fields, got ${fields.length}`);
    }
    rows.push(fields);
  }
  return rows;
}

function parsePositiveInt(file: string, row: number, name: string, text: string): number {
  if (!/^\d+$/.test(text)) {
    throw new CsvError(file, row, `${name} must be a non-negative integer, got ${JSON.stringify(text)}`);
  }
  const value = Number(text);
  if (!Number.isSafeInteger(value)) {
    throw new CsvError(file, row, `${name} too large for exact arithmetic: ${text}`);
  }
  return value;
}

function parsePositiveFloat(file: string, row: number, name: string, text: string): number {
  const value = Number(text);
  if (!Number.isFinite(value) || value <= 0 || text.trim() === "") {
    throw new CsvError(file, row, `${name} must be a positive number, got ${JSON.stringify(text)}`);
  }
  return value;
}

function parseEngine(file: string, row: number, name: string, text: string): Engine {
  if (!isEngine(text)) {
    throw new CsvError(
      file,
      row,
      `${name} must be one of ${ENGINES.join(", ")}, got ${JSON.stringify(text)}`,
    );
  }
  return text;
}

export function parseRuntimeCsv(file: string, text?: string): RuntimeRow[] {
  const content = text ?? readFileSync(file, "utf8");
  const rows = splitRows(file, content, RUNTIME_HEADER, 7);
  return rows.map((fields, index) => {
    const row = index + 2;
    const [engine, n, repeats, median, min, count, checksum] = fields as [
      string, string, string, string, string, string, string,
    ];
    if (!/^\d+$/.test(checksum)) {
      throw new CsvError(file, row, `checksum must be a non-negative integer, got ${JSON.stringify(checksum)}`);
    }
    const parsed: RuntimeRow = {
      engine: parseEngine(file, row, "engine", engine),
      n: parsePositiveInt(file, row, "n", n),
      repeats: parsePositiveInt(file, row, "repeats", repeats),
      secondsMedian: parsePositiveFloat(file, row, "seconds_median", median),
      secondsMin: parsePositiveFloat(file, row, "seconds_min", min),
      primeCount: parsePositiveInt(file, row, "prime_count", count),
      checksum,
    };
    if (parsed.n < 2) throw new CsvError(file, row, `n must be >= 2, got ${parsed.n}`);
    return parsed;
  });
}

export function parseSpeedupCsv(file: string, text?: string): SpeedupRow[] {
  const content = text ?? readFileSync(file, "utf8");
  const rows = splitRows(file, content, SPEEDUP_HEADER, 3);
  return rows.map((fields, index) => {
    const row = index + 2;
    const [n, baseline, ratio] = fields as [string, string, string];
    const parsed: SpeedupRow = {
      n: parsePositiveInt(file, row, "n", n),
      baseline: parseEngine(file, row, "baseline", baseline),
      ratio: parsePositiveFloat(file, row, "ratio", ratio),
    };
    if (parsed.n < 2) throw new CsvError(file, row, `n must be >= 2, got ${parsed.n}`);
    return parsed;
  });
}
