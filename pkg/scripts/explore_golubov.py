"""Print the number of distinct sets [a:s] for every element of the catalog."""
import argparse

from semisep.catalog import catalog
from semisep.core import distinct_golubov_count


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=6)
    args = ap.parse_args()

    for name, S in catalog(max_size=args.max_size):
        counts = [distinct_golubov_count(S, a) for a in S.elements]
        print(f"{name:18s} |S|={S.size:<3d} " + " ".join(map(str, counts)))


if __name__ == "__main__":
    main()
