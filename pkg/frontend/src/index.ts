export {
  CsvError,
  ENGINES,
  parseRuntimeCsv,
  parseSpeedupCsv,
  RUNTIME_HEADER,
  SPEEDUP_HEADER,
} from "./csv";
export type { Engine, RuntimeRow, SpeedupRow } from "./csv";
export { renderLogLogChart, HEIGHT, MARGIN, WIDTH } from "./chart";
export type { Box, ChartOptions, ChartResult, MarkerShape, Point, SeriesSpec } from "./chart";
export { buildRuntimeChart, buildSpeedupChart, DataError, ENGINE_STYLE } from "./plots";
export { decadeTicks, formatPow10, logScale } from "./scale";
export { main as cliMain } from "./cli";
