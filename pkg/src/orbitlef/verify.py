"""Reproduce the published worked examples against the shipped fixtures.

Used by ``orbitlef verify-paper``. Each check returns ``(passed, detail)``;
a corrupted fixture file makes the corresponding check fail.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import BudgetExceeded
from .fibration import critical_values, hessian_form, hessian_rank, lefschetz_report
from .fixtures import FixtureSet
from .lie_core import (
    CartanElement,
    RootSystemA,
    characteristic_element,
    dual_theta,
    flag_poincare,
    orbit_dim_c,
    weyl_orbit,
)
from .morse_caveat import critical_family_witness, gradient_at, hessian_at_zero
from .orbit_ideals import compare_compactifications, minimal_poly_ideal, point_of_cartan, vanishes_at
from .polyalg.hilbert import hilbert_function, hilbert_numerator, proj_dim_degree
from .polyalg.groebner import buchberger
from .polyalg.polynomial import format_rational
from .topology_hodge import (
    complement_betti,
    diamond_compare,
    euler_obstruction,
    kunneth,
    pn_diamond,
    regular_fiber_middle_betti,
    singular_fiber_middle_betti,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _fmt(values):
    return [format_rational(v) for v in values]


def _critical_check(case: dict):
    H, H0 = CartanElement.parse(case["H"]), CartanElement.parse(case["H0"])
    rep = lefschetz_report(H, H0)
    vals = _fmt(critical_values(H, H0))
    ok = (
        vals == case["critical_values"]
        and rep.k == case["k"]
        and rep.distinct_values == case["distinct_values"]
        and rep.distinct_condition == (case["k"] == case["distinct_values"])
    )
    return ok, f"k={rep.k} values={vals} distinct={rep.distinct_values} condition={'holds' if rep.distinct_condition else 'fails'}"


def check_minuscule_critical(fx: FixtureSet, budget):
    return _critical_check(fx.expected()["minuscule"])


def check_regular_critical(fx: FixtureSet, budget):
    return _critical_check(fx.expected()["regular"])


def check_hessians(fx: FixtureSet, budget):
    exp = fx.expected()
    lines, ok = [], True
    for key in ("minuscule", "regular", "sl2"):
        H, H0 = CartanElement.parse(exp[key]["H"]), CartanElement.parse(exp[key]["H0"])
        rs = RootSystemA(H.n)
        ranks = [hessian_rank(H, x, rs, H0) for x in weyl_orbit(H0)]
        dim = orbit_dim_c(H0, rs)
        ok &= dim == exp[key]["orbit_dim_c"] and all(r == dim for r in ranks)
        lines.append(f"{key}: ranks={ranks} dim={dim}")
    sl2 = exp["sl2"]
    B = hessian_form(sl2["H"], sl2["H0"])
    ok &= [_fmt(row) for row in B] == sl2["hessian"]
    lines.append(f"sl2 matrix={[_fmt(r) for r in B]}")
    return ok, "; ".join(lines)


def check_betti(fx: FixtureSet, budget):
    exp = fx.expected()
    ok, parts = True, []
    for key in ("minuscule", "regular", "sl2"):
        case = exp[key]
        reg = regular_fiber_middle_betti(case["H0"])
        sing = singular_fiber_middle_betti(case["H0"], case["H"])
        sing_out = sing if isinstance(sing, int) else None
        ok &= reg == case["regular_middle_betti"] and sing_out == case["singular_middle_betti"]
        parts.append(f"{key}: regular={reg} singular={sing}")
    full_flag = flag_poincare(set(), RootSystemA(3))
    cb = list(complement_betti(full_flag, exp["regular"]["k"]))
    ok &= cb == exp["regular"]["complement_betti"]
    parts.append(f"complement={cb}")
    return ok, "; ".join(parts)


def check_compactifications(fx: FixtureSet, budget):
    I, J = fx.ideal("regular_fiber_I"), fx.ideal("regular_fiber_J")
    rep = compare_compactifications(I.gens, J.gens, budget=budget)
    ok = rep.affine_equal and not rep.hom_equal and rep.witness is not None
    return ok, (
        f"affine_equal={rep.affine_equal} I_hom<=J_hom={rep.hom_subset_AB} J_hom<=I_hom={rep.hom_subset_BA} "
        f"witness={rep.witness} (NF {rep.witness_normal_form})"
    )


def check_dimension(fx: FixtureSet, budget):
    Ihom = fx.ideal("minuscule_orbit_hom")
    inv = proj_dim_degree(Ihom, budget=budget)
    H0 = CartanElement.parse(fx.expected()["minuscule"]["H0"])
    lie_dim = orbit_dim_c(H0, RootSystemA(3))
    ok = inv.dimension == lie_dim == fx.expected()["minuscule"]["projective_dimension"]
    return ok, f"Hilbert dimension={inv.dimension} degree={inv.degree}; root count={lie_dim}"


def check_diamonds(fx: FixtureSet, budget):
    exp = fx.expected()
    c1 = diamond_compare(kunneth(pn_diamond(2), pn_diamond(2)), fx.diamond("minuscule_orbit_closure"))
    c2 = diamond_compare(kunneth(pn_diamond(1), pn_diamond(2)), fx.diamond("minuscule_fiber_closure"))
    c3 = diamond_compare(fx.diamond("regular_fiber_closure_I"), fx.diamond("regular_fiber_closure_J"))
    diffs = [[list(pq), a, b] for pq, a, b in c3.differing]
    unk = [list(pq) for pq in c3.uncheckable]
    ok = c1.identical and c2.identical and diffs == exp["diamond_discrepancies"] and unk == exp["diamond_uncheckable"]
    return ok, f"P2xP2 identical={c1.identical} P1xP2 identical={c2.identical} I/J differ={diffs} uncheckable={unk}"


def check_caveat(fx: FixtureSet, budget):
    rng = random.Random(20140101)
    ok = all(all(v == 0 for row in hessian_at_zero(n) for v in row) for n in range(1, 9))
    tested = 0
    for n in range(2, 6):
        for _ in range(100):
            r = Fraction(rng.choice([-1, 1]) * rng.randint(1, 10**6), rng.randint(1, 10**6))
            ok &= all(v == 0 for v in gradient_at(n, critical_family_witness(n, r)))
            tested += 1
    return ok, f"zero Hessian n=1..8; {tested} cone witnesses with zero gradient"


def check_euler(fx: FixtureSet, budget):
    even = [euler_obstruction(2 * n + 1).obstructed for n in range(1, 6)]  # chi(P^{2n}) = 2n+1
    odd = [euler_obstruction(2 * n + 2).obstructed for n in range(0, 6)]  # chi(P^{2n+1}) = 2n+2
    ok = all(even) and not any(odd)
    return ok, f"P^2..P^10 obstructed={even}; P^1..P^11 obstructed={odd}"


def check_properties(fx: FixtureSet, budget):
    rng = random.Random(7)
    ok, parts = True, []
    shuffles_ok = True
    for name in fx.ideal_names():
        I = fx.ideal(name)
        base = buchberger(I.gens, budget=budget).polys
        for _ in range(3):
            gens = list(I.gens)
            rng.shuffle(gens)
            shuffles_ok &= buchberger(gens, budget=budget).polys == base
    ok &= shuffles_ok
    parts.append(f"GB shuffle-invariant={shuffles_ok}")

    hilbert_ok = True
    for name in fx.ideal_names():
        I = fx.ideal(name)
        lms = buchberger(I.gens, budget=budget).leading_monomials()
        num = hilbert_numerator(lms)
        hilbert_ok &= all(
            hilbert_function(num, I.ring.nvars, d) == _count_standard(lms, I.ring.nvars, d) for d in range(9)
        )
    ok &= hilbert_ok
    parts.append(f"Hilbert vs brute force={hilbert_ok}")

    member_ok = True
    for n in (2, 3, 4):
        for H0 in _sample_elements(n):
            I = minimal_poly_ideal(H0)
            member_ok &= all(vanishes_at(I, point_of_cartan(x)) for x in weyl_orbit(H0))
    ok &= member_ok
    parts.append(f"critical points on orbit ideal={member_ok}")

    dual_ok = all(
        dual_theta(dual_theta(th, RootSystemA(n)), RootSystemA(n)) == th
        for n in range(2, 7)
        for th in _all_thetas(n)
    )
    ok &= dual_ok
    parts.append(f"dual involution={dual_ok}")
    return ok, "; ".join(parts)


def _count_standard(lms, nvars, degree):
    from itertools import combinations_with_replacement

    count = 0
    for combo in combinations_with_replacement(range(nvars), degree):
        m = [0] * nvars
        for i in combo:
            m[i] += 1
        if not any(all(a <= b for a, b in zip(g, m)) for g in lms):
            count += 1
    return count


def _all_thetas(n):
    from itertools import combinations

    simple = range(1, n)
    return [frozenset(c) for r in range(n) for c in combinations(simple, r)]


def _sample_elements(n):
    """One nonzero dominant element per Theta."""
    rs = RootSystemA(n)
    out = []
    for theta in _all_thetas(n):
        H0 = characteristic_element(theta, rs)
        if not H0.is_zero():
            out.append(H0)
    return out


CHECKS: list[tuple[str, Callable]] = [
    ("1 critical data, H0=diag(2,-1,-1)", check_minuscule_critical),
    ("2 critical data, H=H0=diag(1,-1,0)", check_regular_critical),
    ("3 Hessian nondegeneracy", check_hessians),
    ("4 fibre Betti numbers", check_betti),
    ("5 distinct compactifications", check_compactifications),
    ("6 dimension cross-check", check_dimension),
    ("7 Kunneth vs published diamonds", check_diamonds),
    ("8 |g|^2 degenerate at 0", check_caveat),
    ("9 Euler parity obstruction", check_euler),
    ("10 property suites", check_properties),
]


def run_all(data_dir=None, budget: float | None = None) -> list[CheckResult]:
    fx = FixtureSet(data_dir)
    results = []
    for name, fn in CHECKS:
        start = time.monotonic()
        try:
            passed, detail = fn(fx, budget)
        except BudgetExceeded:
            raise
        except Exception as exc:  # a broken fixture is a failed check, not a crash
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(passed), detail, time.monotonic() - start))
    return results


__all__ = ["CHECKS", "CheckResult", "run_all"]
