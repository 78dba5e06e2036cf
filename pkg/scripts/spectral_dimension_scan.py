#!/usr/bin/env python3
"""Fit the spectral dimension from heat-trace slopes for several sequences.

For each sequence the trace Z(t) is sampled on a log grid, the log-periodic
oscillation is averaged out over one full period, and the fitted -2 * slope
is compared with the closed-form value log(2r)/log(r).

Usage:
    python scripts/spectral_dimension_scan.py
    python scripts/spectral_dimension_scan.py -j 2 -j 2,3 --t-lo 1e-10 --points 101
"""

import argparse

import numpy as np

from laakso import (
    dimensions,
    estimate_spectral_dimension,
    heat_trace_grid,
    oscillation_log_period,
    parse_sequence,
)

DEFAULT_SEQUENCES = ["2", "3", "4", "2,3", "3,2", "2,5", "2,3,4"]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-j", action="append", dest="sequences", default=None)
    parser.add_argument("--t-lo", type=float, default=1e-9)
    parser.add_argument("--t-hi", type=float, default=1e-5)
    parser.add_argument("--points", type=int, default=81)
    args = parser.parse_args()

    specs = args.sequences or DEFAULT_SEQUENCES
    ts = np.geomspace(args.t_lo, args.t_hi, args.points)
    print(f"{'sequence':>10} {'fitted d_s':>12} {'exact d_s':>12} {'rel err':>10}")
    for spec in specs:
        seq = parse_sequence(spec)
        samples = heat_trace_grid(seq, ts, 1e-9)
        fitted = estimate_spectral_dimension(samples, oscillation_log_period(seq))
        exact = dimensions(seq).spectral
        rel = abs(fitted - exact) / exact
        print(f"{spec:>10} {fitted:>12.5f} {exact:>12.5f} {rel:>10.2e}")


if __name__ == "__main__":
    main()
