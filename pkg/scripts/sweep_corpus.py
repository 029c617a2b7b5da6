"""Run every corpus scenario and print one summary row per scenario."""
import argparse
import time

from tamegal.cli import execute
from tamegal.scenario import list_scenarios


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--corpus", default=None, help="scenario directory (default: bundled corpus)")
    args = ap.parse_args()
    print(f"{'scenario':24s} {'status':>6s} {'pass':>5s} {'fail':>5s} {'secs':>6s}")
    for path in list_scenarios(args.corpus):
        t0 = time.perf_counter()
        status, text = execute(str(path), seed=args.seed)
        dt = time.perf_counter() - t0
        npass = text.count("\n  PASS ")
        nfail = text.count("\n  FAIL ")
        print(f"{path.stem:24s} {status:6d} {npass:5d} {nfail:5d} {dt:6.2f}")


if __name__ == "__main__":
    main()
