/** Shared reference data: a 3-engine/3-bound runtime table and its speedups. */

export const RUNTIME_CSV = `engine,n,repeats,seconds_median,seconds_min,prime_count,checksum
classical,10000000,5,0.48,0.47,664579,0
classical,100000000,5,4.92,4.9,5761455,0
classical,1000000000,5,51.7,51.0,50847534,0
segmented,10000000,5,0.31,0.3,664579,0
segmented,100000000,5,3.11,3.08,5761455,0
segmented,1000000000,5,33.8,33.1,50847534,0
hybrid,10000000,5,0.22,0.21,664579,0
hybrid,100000000,5,2.01,2.0,5761455,0
hybrid,1000000000,5,21.5,21.2,50847534,0
`;

export const SPEEDUP_CSV = `n,baseline,ratio
10000000,classical,2.1818181818181817
100000000,classical,2.4477611940298507
1000000000,classical,2.4046511627906977
10000000,segmented,1.4090909090909092
100000000,segmented,1.5472636815920398
1000000000,segmented,1.5720930232558139
`;

/** Expected plotted ratios, four decimals, tolerance 1e-3. */
export const EXPECTED_RATIOS: Record<string, [number, number][]> = {
  classical: [
    [1e7, 2.1818],
    [1e8, 2.4477],
    [1e9, 2.4046],
  ],
  segmented: [
    [1e7, 1.409],
    [1e8, 1.5472],
    [1e9, 1.5721],
  ],
};
