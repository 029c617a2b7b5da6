"""Sweep realized tame models inside (Z/N)^x and compare i* tr(h) with d_X.

For each conductor N, each subgroup T of (Z/N)^x of order <= 8 and each
proper nontrivial subgroup Omega of T, run the basic diagram check for every
Sigma-fixed hom Omega -> G under the trivial action.
"""
import argparse
from math import gcd

from tamegal.abelian import FinAbGroup, FiniteGroup, SigmaAction
from tamegal.cohomology import RealizedTameModel, basic_diagram_check
from tamegal.resolvend import SearchExhausted


def unit_subgroups(N, max_order):
    U = FiniteGroup.units(N)
    out = []
    for H in U.subgroups():
        if 1 < len(H) <= max_order:
            out.append(sorted(U.labels[i] for i in H))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--conductors", type=int, nargs="+", default=[5, 7, 8, 9, 12, 16])
    ap.add_argument("--max-order", type=int, default=8)
    ap.add_argument("--bound", type=int, default=6)
    args = ap.parse_args()
    totals = [0, 0, 0]
    for N in args.conductors:
        root_order = N if N % 2 == 0 else 2 * N
        for total in unit_subgroups(N, args.max_order):
            T = FiniteGroup.units(N, total)
            for om in T.subgroups():
                if len(om) in (1, len(total)) or not T.is_normal(om):
                    continue
                omega = [T.labels[i] for i in om]
                rm = RealizedTameModel(N, total, omega)
                for factors in [(2,), (3,), (4,), (2, 2)]:
                    G = FinAbGroup(factors)
                    if root_order % G.exponent():
                        continue
                    act = SigmaAction.trivial(rm.model.sigma, G)
                    for h in rm.model.fixed_homs(G, act):
                        try:
                            rep = basic_diagram_check(rm, h, act, args.bound)
                        except SearchExhausted:
                            totals[2] += 1
                            continue
                        totals[0] += rep.holds
                        totals[1] += not rep.holds
                        if not rep.holds:
                            print(f"MISMATCH N={N} total={total} omega={omega} G={factors} h={h.values}")
        print(f"N={N}: running totals equal={totals[0]} differ={totals[1]} search-exhausted={totals[2]}",
              flush=True)


if __name__ == "__main__":
    main()
