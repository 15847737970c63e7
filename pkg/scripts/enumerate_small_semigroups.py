"""Tabulate the associative tables of order 1..3 by preservation behaviour.

Counts are over labelled tables, not isomorphism classes.
"""
import argparse
from collections import Counter

from semisep.deciders import classify
from semisep.harness import _table_semigroup, associative_tables


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=3, choices=(1, 2, 3))
    args = ap.parse_args()

    for n in range(1, args.max_order + 1):
        tally = Counter()
        tables = associative_tables(n)
        for flat in tables:
            r = classify(_table_semigroup(flat, n))
            tally[(r.sss_preserving, r.mss_preserving, r.wss_status.verdict)] += 1
        print(f"order {n}: {len(tables)} associative tables")
        for (sss, mss, wss), k in sorted(tally.items(), key=str):
            print(f"  sss={sss!s:5} mss={mss!s:5} wss={wss:7}  {k}")


if __name__ == "__main__":
    main()
