/** Logarithmic axis scales: domain in data units, range in pixels. */

export interface LogScale {
  /** data value -> pixel coordinate */
  place(value: number): number;
  domainMin: number;
  domainMax: number;
}

/**
 * Base-10 log scale. A degenerate domain (single value) maps everything to
 * the middle of the range so one-point series still render.
 */
export function logScale(
  domainMin: number,
  domainMax: number,
  rangeMin: number,
  rangeMax: number,
): LogScale {
  if (domainMin <= 0 || domainMax <= 0) {
    throw new RangeError(`log scale needs positive domain, got [${domainMin}, ${domainMax}]`);
  }
  if (domainMax < domainMin) {
    throw new RangeError(`domain inverted: [${domainMin}, ${domainMax}]`);
  }
  const logMin = Math.log10(domainMin);
  const logMax = Math.log10(domainMax);
  const span = logMax - logMin;
  return {
    place(value: number): number {
      if (value <= 0) throw new RangeError(`cannot place ${value} on a log scale`);
      if (span === 0) return (rangeMin + rangeMax) / 2;
      const t = (Math.log10(value) - logMin) / span;
      return rangeMin + t * (rangeMax - rangeMin);
    },
    domainMin,
    domainMax,
  };
}

/** Powers of ten covering [min, max], e.g. (0.22, 51.7) -> [0.1, 1, 10, 100]. */
export function decadeTicks(min: number, max: number): number[] {
  const lo = Math.floor(Math.log10(min));
  const hi = Math.ceil(Math.log10(max));
  const ticks: number[] = [];
  for (let e = lo; e <= hi; e++) ticks.push(Math.pow(10, e));
  return ticks;
}

/** Compact power-of-ten label: 10000000 -> "1e7", 0.1 -> "1e-1", 3000 -> "3e3". */
export function formatPow10(value: number): string {
  const exponent = Math.floor(Math.log10(value) + 1e-12);
  const mantissa = value / Math.pow(10, exponent);
  const rounded = Math.round(mantissa * 100) / 100;
  return `${rounded === 1 ? "1" : String(rounded)}e${exponent}`;
}
