"""Run every verification scenario and write one JSON report per line.

    python scripts/run_scenarios.py --out reports.jsonl
"""
import argparse
import sys

from semisep.harness import run_all


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", help="write JSON lines here instead of stdout")
    args = ap.parse_args()

    reports = run_all()
    lines = [r.to_json() for r in reports]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    else:
        print("\n".join(lines))
    for r in reports:
        print(f"{r.scenario:18s} {r.status:4s} {r.checked:>8d} checked  {r.ms / 1000:.2f} s", file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
