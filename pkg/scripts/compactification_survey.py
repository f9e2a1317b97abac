"""Compare projective closures of one affine fibre under different generator lists.

The regular fibre {f_H = c} of the orbit of a regular H0 in sl(3) is cut out by
det(A - s_i id) = prod(lambda - s_i) for two shifts s_i, together with f_H - c.
Every presentation below defines the same affine ideal; their generator-wise
homogenizations need not agree. For each pair we report containments, and for
each closure its projective dimension and degree.

    python3 scripts/compactification_survey.py --H0 1,-1,0 --c 0
"""

import argparse
from fractions import Fraction

from orbitlef.fibration import potential_poly
from orbitlef.orbit_ideals import compare_compactifications, determinant_generators, minimal_poly_ideal
from orbitlef.polyalg import Ideal
from orbitlef.polyalg.hilbert import proj_dim_degree
from orbitlef.polyalg.polynomial import as_rational


def presentations(H0, H, c):
    p, q = determinant_generators(H0, (0, 1)).gens
    p2, = determinant_generators(H0, (2,)).gens
    f = potential_poly(H) - c
    return {
        "p, q": [p, q, f],
        "p, p - q": [p, p - q, f],
        "p - q, q": [p - q, q, f],
        "p, p + q": [p, p + q, f],
        "minpoly": list(minimal_poly_ideal(H0).gens) + [f],
        "p, q, p2": [p, q, p2, f],
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--H0", default="1,-1,0")
    ap.add_argument("--H", default=None, help="defaults to H0")
    ap.add_argument("--c", default="0", help="fibre value")
    ap.add_argument("--budget", type=float, default=600.0)
    args = ap.parse_args()
    H = args.H or args.H0
    c = as_rational(args.c)
    pres = presentations(args.H0, H, c)

    print("closures:")
    for name, gens in pres.items():
        inv = proj_dim_degree(Ideal(gens).homogenize("t"), budget=args.budget)
        print(f"  {name:<10} dim {inv.dimension}  degree {inv.degree}  h-numerator {list(inv.numerator)}")

    print("\npairwise (A_hom <= B_hom, B_hom <= A_hom):")
    names = list(pres)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            rep = compare_compactifications(pres[a], pres[b], budget=args.budget)
            tag = "equal" if rep.hom_equal else "differ"
            aff = "" if rep.affine_equal else "  [affine ideals differ]"
            print(f"  {a:<10} vs {b:<10} {str(rep.hom_subset_AB):>5} {str(rep.hom_subset_BA):>5}  {tag}{aff}")


if __name__ == "__main__":
    main()
