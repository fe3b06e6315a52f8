"""Time the compiled kernels against the NumPy fallback.

Usage: ``python benchmarks/bench_kernels.py [--repeat N]``. Prints one line
per kernel with the best-of-N time for each backend and the speedup.
"""

import argparse
import timeit

import numpy as np

from spectral_ot._core import get_kernels
from spectral_ot.measure1d import DiscreteMeasure

SR = 16000.0
HOP = 256


def _cases(rng):
    bins = 1025
    pos = np.arange(bins) / 2048.0
    a = DiscreteMeasure(pos, rng.uniform(0, 1, bins) ** 4)
    b = DiscreteMeasure(pos, rng.uniform(0, 1, bins) ** 4)
    b = DiscreteMeasure(pos, b.weights * a.total_mass / b.total_mass)
    f0 = rng.uniform(100, 400, 16)
    amps = rng.uniform(0.1, 1.0, (16, 20))
    g = rng.standard_normal(4096)
    return {
        "quantile_segments (1025 bins)": lambda k: k.quantile_segments(
            a.positions, a.cumulative, b.positions, b.cumulative, a.total_mass, False, 2.0
        ),
        "harmonic_synth (4096 x 20)": lambda k: k.harmonic_synth(f0, amps, HOP, SR, True),
        "harmonic_synth_adjoint (4096 x 20)": lambda k: k.harmonic_synth_adjoint(f0, amps, HOP, SR, True, g),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=7)
    parser.add_argument("--number", type=int, default=50)
    args = parser.parse_args(argv)
    py = get_kernels("python")
    try:
        cy = get_kernels("cython")
    except ImportError:
        cy = None
        print("compiled extension not built; timing the NumPy fallback only")
    print(f"{'kernel':38s} {'numpy us':>10s} {'cython us':>10s} {'speedup':>8s}")
    for name, fn in _cases(np.random.default_rng(0)).items():
        t_py = min(timeit.repeat(lambda: fn(py), number=args.number, repeat=args.repeat)) / args.number * 1e6
        if cy is None:
            print(f"{name:38s} {t_py:10.1f}")
            continue
        t_cy = min(timeit.repeat(lambda: fn(cy), number=args.number, repeat=args.repeat)) / args.number * 1e6
        print(f"{name:38s} {t_py:10.1f} {t_cy:10.1f} {t_py / t_cy:7.1f}x")


if __name__ == "__main__":
    main()
