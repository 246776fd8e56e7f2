"""Compare the minimum-distance kernels on the bundled example codes.

Usage: python benchmarks/bench_mindist.py [--repeat N]
"""

import argparse
import time
from pathlib import Path

from mthull.mtcode import parse_spec
from mthull.oracle import available_backends, min_distance

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

CASES = [
    ("binary QC n=36 (2^18 codewords)", "qc_binary_n36.spec"),
    ("F_4 MDS n=8 (4^7 codewords)", "mds_f4.spec"),
    ("F_9 MT n=13 (9^8 codewords)", "mt_f9.spec"),
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    print(f"available backends: {', '.join(backends)}")
    for label, name in CASES:
        spec = parse_spec((FIXTURES / name).read_text())
        print(f"\n{label}")
        results = {}
        for backend in backends:
            best = float("inf")
            for _ in range(args.repeat):
                started = time.perf_counter()
                d = min_distance(spec, backend=backend)
                best = min(best, time.perf_counter() - started)
            results[backend] = d
            print(f"  {backend:9s} d_min = {d}   best of {args.repeat}: {best:8.3f} s")
        assert len(set(results.values())) == 1, "backends disagree"


if __name__ == "__main__":
    main()
