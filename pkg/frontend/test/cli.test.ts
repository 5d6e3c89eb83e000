import { spawnSync } from "child_process";
import { existsSync, mkdtempSync, readFileSync, writeFileSync } from "fs";
import { tmpdir } from "os";
import { dirname, join, resolve } from "path";
import { fileURLToPath } from "url";
import { beforeAll, describe, expect, it } from "vitest";

import { EXPECTED_RATIOS, RUNTIME_CSV, SPEEDUP_CSV } from "./fixtures";

const here = dirname(fileURLToPath(import.meta.url));
const CLI = resolve(here, "..", "dist", "cli.js");

function runCli(...args: string[]) {
  return spawnSync(process.execPath, [CLI, ...args], { encoding: "utf8", timeout: 20000 });
}

function fixtureDir(): { dir: string; runtime: string; speedup: string } {
  const dir = mkdtempSync(join(tmpdir(), "plotgen-"));
  const runtime = join(dir, "runtime.csv");
  const speedup = join(dir, "speedup.csv");
  writeFileSync(runtime, RUNTIME_CSV);
  writeFileSync(speedup, SPEEDUP_CSV);
  return { dir, runtime, speedup };
}

beforeAll(() => {
  if (!existsSync(CLI)) {
    throw new Error(`${CLI} not built; run \`npm run build\` first (the test script does)`);
  }
});

describe("plotgen CLI", () => {
  it("writes both figures and a faithful data dump", () => {
    const { dir, runtime, speedup } = fixtureDir();
    const outDir = join(dir, "figures");
    const dump = join(dir, "dump.json");
    const proc = runCli(
      "--runtime-csv", runtime,
      "--speedup-csv", speedup,
      "--out-dir", outDir,
      "--dump-json", dump,
    );
    expect(proc.stderr).toBe("");
    expect(proc.status).toBe(0);

    const runtimeSvg = readFileSync(join(outDir, "runtime.svg"), "utf8");
    const speedupSvg = readFileSync(join(outDir, "speedup.svg"), "utf8");
    for (const svg of [runtimeSvg, speedupSvg]) {
      expect(svg.startsWith("<?xml")).toBe(true);
      expect(svg).toContain("<svg");
      expect(svg).toContain('class="legend"');
    }
    expect(runtimeSvg.split('class="series"').length - 1).toBe(3);
    expect(speedupSvg.split('class="series"').length - 1).toBe(2);

    const data = JSON.parse(readFileSync(dump, "utf8"));
    expect(data.runtime.map((s: { name: string }) => s.name)).toEqual([
      "classical", "segmented", "hybrid",
    ]);
    for (const series of data.speedup) {
      const expected = EXPECTED_RATIOS[series.name as string]!;
      series.points.forEach((p: { x: number; y: number }, i: number) => {
        expect(p.x).toBe(expected[i]![0]);
        expect(Math.abs(p.y - expected[i]![1])).toBeLessThanOrEqual(1e-3);
      });
    }
  });

  it("produces byte-identical output across runs", () => {
    const { dir, runtime, speedup } = fixtureDir();
    const out1 = join(dir, "a");
    const out2 = join(dir, "b");
    expect(runCli("--runtime-csv", runtime, "--speedup-csv", speedup, "--out-dir", out1).status).toBe(0);
    expect(runCli("--runtime-csv", runtime, "--speedup-csv", speedup, "--out-dir", out2).status).toBe(0);
    expect(readFileSync(join(out1, "runtime.svg"), "utf8")).toBe(
      readFileSync(join(out2, "runtime.svg"), "utf8"),
    );
    expect(readFileSync(join(out1, "speedup.svg"), "utf8")).toBe(
      readFileSync(join(out2, "speedup.svg"), "utf8"),
    );
  });

  it("fails on a malformed runtime CSV with the row number, writing nothing", () => {
    const { dir, speedup } = fixtureDir();
    const bad = join(dir, "bad.csv");
    writeFileSync(bad, RUNTIME_CSV + "hybrid,oops\n"); // row 11 is short
    const outDir = join(dir, "figures");
    const proc = runCli("--runtime-csv", bad, "--speedup-csv", speedup, "--out-dir", outDir);
    expect(proc.status).toBe(1);
    expect(proc.stderr).toContain("row 11");
    expect(existsSync(outDir)).toBe(false);
  });

  it("fails on an empty speedup CSV without leaving an empty image", () => {
    const { dir, runtime } = fixtureDir();
    const empty = join(dir, "empty.csv");
    writeFileSync(empty, "n,baseline,ratio\n");
    const outDir = join(dir, "figures");
    const proc = runCli("--runtime-csv", runtime, "--speedup-csv", empty, "--out-dir", outDir);
    expect(proc.status).toBe(1);
    expect(proc.stderr).toContain("no data rows");
    expect(existsSync(outDir)).toBe(false);
    expect(existsSync(join(outDir, "runtime.svg"))).toBe(false);
  });

  it("handles single-row CSVs", () => {
    const { dir } = fixtureDir();
    const runtime = join(dir, "one-runtime.csv");
    const speedup = join(dir, "one-speedup.csv");
    writeFileSync(
      runtime,
      "engine,n,repeats,seconds_median,seconds_min,prime_count,checksum\nhybrid,1000000,1,0.05,0.05,78498,0\n",
    );
    writeFileSync(speedup, "n,baseline,ratio\n1000000,classical,2.0\n");
    const outDir = join(dir, "figures");
    const proc = runCli("--runtime-csv", runtime, "--speedup-csv", speedup, "--out-dir", outDir);
    expect(proc.status).toBe(0);
    expect(existsSync(join(outDir, "runtime.svg"))).toBe(true);
    expect(existsSync(join(outDir, "speedup.svg"))).toBe(true);
  });

  it("exits 2 with usage on missing required options", () => {
    const proc = runCli("--runtime-csv", "x.csv");
    expect(proc.status).toBe(2);
    expect(proc.stderr).toContain("usage:");
  });

  it("exits 2 on unknown flags", () => {
    const { runtime, speedup } = fixtureDir();
    const proc = runCli("--runtime-csv", runtime, "--speedup-csv", speedup, "--out-dir", "o", "--nope");
    expect(proc.status).toBe(2);
  });

  it("exits 1 when an input file does not exist", () => {
    const { dir, speedup } = fixtureDir();
    const proc = runCli(
      "--runtime-csv", join(dir, "missing.csv"),
      "--speedup-csv", speedup,
      "--out-dir", join(dir, "figures"),
    );
    expect(proc.status).toBe(1);
    expect(proc.stderr).toContain("missing.csv");
  });
});
