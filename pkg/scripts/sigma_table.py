"""Minimum partition sizes of K^m against the lower bound q^ceil(m/2) + 1."""
import argparse
import time

from addext.field_tower import field_of_order
from addext.partitions import beutelspacher_bound, min_partition

CASES = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (5, 2)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", type=int, default=10**7)
    args = ap.parse_args()
    print(f"{'q':>3} {'m':>3} {'sigma':>6} {'bound':>6} {'dims':<20} seconds")
    for q, m in CASES:
        start = time.perf_counter()
        P = min_partition(field_of_order(q), m, args.budget)
        dims = sorted((S.dim for S in P), reverse=True)
        print(f"{q:>3} {m:>3} {len(P):>6} {beutelspacher_bound(q, m):>6} {str(dims):<20} "
              f"{time.perf_counter() - start:.3f}")


if __name__ == "__main__":
    main()
