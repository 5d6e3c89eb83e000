/**
 * The two figures: runtime vs N and speedup vs N, both log-log.
 *
 * Engine styling is fixed — classical red circles, segmented blue squares,
 * hybrid green triangles — and legend entries follow first-appearance order
 * in the CSV, one entry per engine.
 */

import { ChartResult, MarkerShape, Point, renderLogLogChart, SeriesSpec } from "./chart";
import { Engine, RuntimeRow, SpeedupRow } from "./csv";

export const ENGINE_STYLE: Record<Engine, { color: string; marker: MarkerShape }> = {
  classical: { color: "#d62728", marker: "circle" },
  segmented: { color: "#1f77b4", marker: "square" },
  hybrid: { color: "#2ca02c", marker: "triangle" },
};

/** Raised when a CSV parses cleanly but contains nothing to plot. */
export class DataError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "DataError";
  }
}

function groupInFirstAppearanceOrder<Row>(
  rows: Row[],
  engineOf: (row: Row) => Engine,
  pointOf: (row: Row) => Point,
): SeriesSpec[] {
  const order: Engine[] = [];
  const points = new Map<Engine, Point[]>();
  for (const row of rows) {
    const engine = engineOf(row);
    if (!points.has(engine)) {
      order.push(engine);
      points.set(engine, []);
    }
    points.get(engine)!.push(pointOf(row));
  }
  return order.map((engine) => ({
    name: engine,
    color: ENGINE_STYLE[engine].color,
    marker: ENGINE_STYLE[engine].marker,
    points: points.get(engine)!.slice().sort((a, b) => a.x - b.x),
  }));
}

function distinctSortedNs(ns: number[]): number[] {
  return [...new Set(ns)].sort((a, b) => a - b);
}

export function buildRuntimeChart(rows: RuntimeRow[]): ChartResult {
  if (rows.length === 0) {
    throw new DataError("runtime CSV has no data rows");
  }
  return renderLogLogChart({
    xLabel: "N (sieve upper bound)",
    yLabel: "median runtime (seconds)",
    series: groupInFirstAppearanceOrder(
      rows,
      (row) => row.engine,
      (row) => ({ x: row.n, y: row.secondsMedian }),
    ),
    xTicks: distinctSortedNs(rows.map((r) => r.n)),
  });
}

export function buildSpeedupChart(rows: SpeedupRow[]): ChartResult {
  const plottable = rows.filter((row) => row.baseline !== "hybrid");
  if (plottable.length === 0) {
    throw new DataError(
      rows.length === 0
        ? "speedup CSV has no data rows"
        : "speedup CSV has no baseline rows (hybrid over itself is excluded)",
    );
  }
  return renderLogLogChart({
    xLabel: "N (sieve upper bound)",
    yLabel: "speedup vs hybrid",
    series: groupInFirstAppearanceOrder(
      plottable,
      (row) => row.baseline,
      (row) => ({ x: row.n, y: row.ratio }),
    ),
    xTicks: distinctSortedNs(plottable.map((r) => r.n)),
    yIncludes: [1],
    yRefLine: 1,
  });
}
