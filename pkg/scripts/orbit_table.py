"""Tabulate orbit and fibre invariants over every Theta for small n.

For each characteristic element H0 this prints the orbit dimension, the
number k of critical points of f_H for a fixed regular H, the flag Betti
numbers, the regular-fibre middle Betti number and whether the critical
values are distinct. With ``--hilbert`` it also reports dimension and degree
of the generator-wise homogenized minimal-polynomial ideal.

    python3 scripts/orbit_table.py --max-n 4 --hilbert
"""

import argparse
import time
from itertools import combinations

from orbitlef.errors import BudgetExceeded
from orbitlef.fibration import lefschetz_report
from orbitlef.lie_core import CartanElement, RootSystemA, characteristic_element, flag_poincare, orbit_dim_c
from orbitlef.orbit_ideals import minimal_poly_ideal
from orbitlef.polyalg.hilbert import proj_dim_degree
from orbitlef.topology_hodge import regular_fiber_middle_betti


def standard_regular(n):
    # diag(n, n-3, n-5, ..., 3-n, -n): distinct entries, endpoints pushed outward
    return CartanElement.of(*[n - 1 - 2 * i + (i == 0) - (i == n - 1) for i in range(n)])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--hilbert", action="store_true", help="also compute dim/degree of the homogenized orbit ideal")
    ap.add_argument("--hilbert-max-n", type=int, default=3)
    ap.add_argument("--budget", type=float, default=120.0, help="seconds per Groebner basis")
    args = ap.parse_args()

    header = f"{'n':>2} {'Theta':<10} {'H0':<22} {'dim':>4} {'k':>4} {'b_mid':>6} {'distinct':>9}  flag Betti"
    if args.hilbert:
        header += "  | proj dim, degree"
    print(header)
    for n in range(2, args.max_n + 1):
        rs = RootSystemA(n)
        H = standard_regular(n)
        for r in range(n - 1):
            for theta in combinations(range(1, n), r):
                H0 = characteristic_element(theta, rs)
                rep = lefschetz_report(H, H0)
                line = (
                    f"{n:>2} {str(sorted(theta)):<10} {str(H0):<22} {orbit_dim_c(H0, rs):>4} {rep.k:>4} "
                    f"{regular_fiber_middle_betti(H0):>6} {str(rep.distinct_condition):>9}  {list(flag_poincare(theta, rs))}"
                )
                if args.hilbert and n <= args.hilbert_max_n:
                    start = time.monotonic()
                    try:
                        inv = proj_dim_degree(minimal_poly_ideal(H0).homogenize("t"), budget=args.budget)
                        line += f"  | {inv.dimension}, {inv.degree} ({time.monotonic() - start:.2f}s)"
                    except BudgetExceeded:
                        line += "  | budget exceeded"
                print(line)


if __name__ == "__main__":
    main()
