"""Tabulate H^2(Sigma, G) for small groups and every action, SNF against enumeration."""
import argparse
from collections import Counter

from tamegal.abelian import FinAbGroup, FiniteGroup, all_actions
from tamegal.cohomology import CohomologyError, h2_group, h2_order_by_enumeration

SIGMAS = ["C2", "C3", "C4", "C2xC2"]
MODULES = [(2,), (3,), (4,), (2, 2)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=int, default=300000, help="largest cochain space to enumerate")
    args = ap.parse_args()
    for s in SIGMAS:
        sigma = FiniteGroup.named(s)
        for factors in MODULES:
            G = FinAbGroup(factors)
            shapes = Counter()
            agree = checked = 0
            for act in all_actions(sigma, G):
                H = h2_group(act)
                shapes[tuple(H.group.factors)] += 1
                try:
                    agree += H.order() == h2_order_by_enumeration(act, args.limit)
                    checked += 1
                except CohomologyError:
                    pass
            table = ", ".join(f"{list(k) or '0'} x{v}" for k, v in sorted(shapes.items()))
            print(f"Sigma={s:6s} G={str(factors):8s} actions={sum(shapes.values()):3d}  "
                  f"H^2: {table}  enumeration {agree}/{checked}")


if __name__ == "__main__":
    main()
