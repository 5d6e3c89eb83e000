/**
 * Log-log chart rendering with the legend placed outside the plot area.
 *
 * Fixed 720x480 canvas; the right margin is reserved for the legend so the
 * legend box can never overlap the axes region. Rendering is deterministic:
 * same input, same bytes.
 */

import { decadeTicks, formatPow10, logScale } from "./scale";
import { document as svgDocument, el, fmt, marker } from "./svg";

export type MarkerShape = "circle" | "square" | "triangle";

export interface Point {
  x: number;
  y: number;
}

export interface SeriesSpec {
  name: string;
  color: string;
  marker: MarkerShape;
  points: Point[]; // ascending x
}

export interface ChartOptions {
  xLabel: string;
  yLabel: string;
  series: SeriesSpec[];
  /** Data values to put x ticks at (typically the distinct N values). */
  xTicks: number[];
  /** Values the y domain must cover even if no point reaches them. */
  yIncludes?: number[];
  /** Optional dashed horizontal reference line (e.g. speedup = 1). */
  yRefLine?: number;
}

export interface Box {
  x: number;
  y: number;
  width: number;
  height: number;
}

export interface ChartResult {
  svg: string;
  plotArea: Box;
  legend: Box;
  /** Exactly the data that was plotted, series by series. */
  dump: { name: string; points: Point[] }[];
}

export const WIDTH = 720;
export const HEIGHT = 480;
export const MARGIN = { top: 24, right: 176, bottom: 56, left: 76 } as const;

const POINT_INSET = 24; // px between plot border and extreme data points
const MARKER_SIZE = 4.5;
const TICK_FONT = 12;
const LABEL_FONT = 13;
const LEGEND_ENTRY_H = 22;
const LEGEND_PAD = 8;
const LEGEND_CHAR_W = 7.2; // generous width estimate for 12px text

export function renderLogLogChart(options: ChartOptions): ChartResult {
  if (options.series.length === 0) {
    throw new RangeError("chart needs at least one series");
  }
  for (const series of options.series) {
    if (series.points.length === 0) {
      throw new RangeError(`series ${JSON.stringify(series.name)} has no points`);
    }
  }

  const plotArea: Box = {
    x: MARGIN.left,
    y: MARGIN.top,
    width: WIDTH - MARGIN.left - MARGIN.right,
    height: HEIGHT - MARGIN.top - MARGIN.bottom,
  };

  const xs = options.series.flatMap((s) => s.points.map((p) => p.x)).concat(options.xTicks);
  const ysData = options.series.flatMap((s) => s.points.map((p) => p.y));
  const ys = ysData.concat(options.yIncludes ?? []);
  const yTicks = decadeTicks(Math.min(...ys), Math.max(...ys));
  const yDomainMin = yTicks[0]!;
  const yDomainMax = yTicks[yTicks.length - 1]!;

  const xScale = logScale(
    Math.min(...xs),
    Math.max(...xs),
    plotArea.x + POINT_INSET,
    plotArea.x + plotArea.width - POINT_INSET,
  );
  // pixel y grows downward, data y grows upward
  const yScale = logScale(
    yDomainMin,
    yDomainMax,
    plotArea.y + plotArea.height,
    plotArea.y,
  );

  const children: string[] = [];

  // grid
  const grid: string[] = [];
  for (const tick of options.xTicks) {
    const x = xScale.place(tick);
    grid.push(el("line", { x1: x, y1: plotArea.y, x2: x, y2: plotArea.y + plotArea.height, stroke: "#dddddd" }));
  }
  for (const tick of yTicks) {
    const y = yScale.place(tick);
    grid.push(el("line", { x1: plotArea.x, y1: y, x2: plotArea.x + plotArea.width, y2: y, stroke: "#dddddd" }));
  }
  children.push(el("g", { class: "grid" }, grid));

  // frame + ticks + labels
  const axes: string[] = [
    el("rect", {
      x: plotArea.x,
      y: plotArea.y,
      width: plotArea.width,
      height: plotArea.height,
      fill: "none",
      stroke: "#333333",
    }),
  ];
  for (const tick of options.xTicks) {
    const x = xScale.place(tick);
    axes.push(el("line", {
      x1: x, y1: plotArea.y + plotArea.height, x2: x, y2: plotArea.y + plotArea.height + 5, stroke: "#333333",
    }));
    axes.push(el("text", {
      x, y: plotArea.y + plotArea.height + 20, "font-size": String(TICK_FONT), "text-anchor": "middle", fill: "#111111",
    }, [], formatPow10(tick)));
  }
  for (const tick of yTicks) {
    const y = yScale.place(tick);
    axes.push(el("line", { x1: plotArea.x - 5, y1: y, x2: plotArea.x, y2: y, stroke: "#333333" }));
    axes.push(el("text", {
      x: plotArea.x - 9, y: y + 4, "font-size": String(TICK_FONT), "text-anchor": "end", fill: "#111111",
    }, [], formatPow10(tick)));
  }
  axes.push(el("text", {
    x: plotArea.x + plotArea.width / 2, y: HEIGHT - 14,
    "font-size": String(LABEL_FONT), "text-anchor": "middle", fill: "#111111",
  }, [], options.xLabel));
  axes.push(el("text", {
    x: 20, y: plotArea.y + plotArea.height / 2,
    "font-size": String(LABEL_FONT), "text-anchor": "middle", fill: "#111111",
    transform: `rotate(-90 20 ${fmt(plotArea.y + plotArea.height / 2)})`,
  }, [], options.yLabel));
  children.push(el("g", { class: "axes" }, axes));

  // optional dashed reference line, only when inside the domain
  if (
    options.yRefLine !== undefined &&
    options.yRefLine >= yDomainMin &&
    options.yRefLine <= yDomainMax
  ) {
    const y = yScale.place(options.yRefLine);
    children.push(el("line", {
      class: "ref-line",
      x1: plotArea.x, y1: y, x2: plotArea.x + plotArea.width, y2: y,
      stroke: "#888888", "stroke-dasharray": "6 4",
    }));
  }

  // series
  for (const series of options.series) {
    const pixels = series.points.map((p) => ({ x: xScale.place(p.x), y: yScale.place(p.y) }));
    const parts: string[] = [];
    if (pixels.length > 1) {
      const pts = pixels.map((p) => `${fmt(p.x)},${fmt(p.y)}`).join(" ");
      parts.push(el("polyline", { points: pts, fill: "none", stroke: series.color, "stroke-width": "1.8" }));
    }
    for (const p of pixels) {
      parts.push(marker(series.marker, p.x, p.y, MARKER_SIZE, series.color));
    }
    children.push(el("g", { class: "series", "data-name": series.name }, parts));
  }

  // legend, in the reserved right margin — outside the plot area by construction
  const labelChars = Math.max(...options.series.map((s) => s.name.length));
  const legend: Box = {
    x: plotArea.x + plotArea.width + 16,
    y: plotArea.y,
    width: Math.ceil(34 + labelChars * LEGEND_CHAR_W + 2 * LEGEND_PAD),
    height: options.series.length * LEGEND_ENTRY_H + 2 * LEGEND_PAD,
  };
  const legendParts: string[] = [
    el("rect", {
      class: "legend-frame",
      x: legend.x, y: legend.y, width: legend.width, height: legend.height,
      fill: "#ffffff", stroke: "#999999",
    }),
  ];
  options.series.forEach((series, index) => {
    const cy = legend.y + LEGEND_PAD + index * LEGEND_ENTRY_H + LEGEND_ENTRY_H / 2;
    const x0 = legend.x + LEGEND_PAD;
    legendParts.push(el("line", { x1: x0, y1: cy, x2: x0 + 24, y2: cy, stroke: series.color, "stroke-width": "1.8" }));
    legendParts.push(marker(series.marker, x0 + 12, cy, MARKER_SIZE, series.color));
    legendParts.push(el("text", {
      x: x0 + 32, y: cy + 4, "font-size": String(TICK_FONT), fill: "#111111",
    }, [], series.name));
  });
  children.push(el("g", { class: "legend" }, legendParts));

  return {
    svg: svgDocument(WIDTH, HEIGHT, children),
    plotArea,
    legend,
    dump: options.series.map((s) => ({ name: s.name, points: s.points.map((p) => ({ ...p })) })),
  };
}
