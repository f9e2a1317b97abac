"""``orbitlef`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget exceeded.

Configuration: an optional ``key = value`` file (``--config``) may set
``budget_secs`` and ``term_order``; command-line flags override it and the
``ORBITLEF_BUDGET_SECS`` environment variable overrides both.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import BudgetExceeded, OrbitLefError
from .fibration import critical_values, lefschetz_report, potential_poly
from .lie_core import CartanElement, RootSystemA, flag_poincare, theta_of, weyl_orbit_size
from .morse_caveat import certify, norm_sq_gradient
from .orbit_ideals import determinant_generators, fiber_ideal, minimal_poly_ideal
from .polyalg.ideal import Ideal
from .polyalg.polynomial import TermOrder, as_rational, format_rational
from .topology_hodge import (
    HodgeDiamond,
    complement_betti,
    diamond_compare,
    euler_from_diamond,
    pn_diamond,
    product_diamond,
    regular_fiber_middle_betti,
    singular_fiber_middle_betti,
)
from .fixtures import FixtureSet

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_BUDGET = 600.0

log = logging.getLogger("orbitlef")


@dataclass
class Settings:
    budget: float = DEFAULT_BUDGET
    term_order: str = "degrevlex"


def read_config(path: str | os.PathLike) -> dict[str, str]:
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key] = value
    return out


def resolve_settings(args) -> Settings:
    s = Settings()
    if args.config:
        cfg = read_config(args.config)
        if "budget_secs" in cfg:
            s.budget = float(cfg["budget_secs"])
        if "term_order" in cfg:
            s.term_order = cfg["term_order"]
    if args.budget is not None:
        s.budget = args.budget
    if getattr(args, "order", None):
        s.term_order = args.order
    env = os.environ.get("ORBITLEF_BUDGET_SECS")
    if env:
        s.budget = float(env)
    TermOrder(s.term_order)  # validate
    return s


def _cartan(text: str) -> CartanElement:
    try:
        return CartanElement.parse(text)
    except (ValueError, OrbitLefError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, OrbitLefError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(args, payload: dict, text: str):
    out = json.dumps(payload, indent=2, sort_keys=True) + "\n" if args.json else text.rstrip("\n") + "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


# ---------------------------------------------------------------------------
# subcommands


def cmd_fibration(args, settings):
    rep = lefschetz_report(args.H, args.H0)
    lines = [
        f"H = {rep.H}, H0 = {rep.H0}, orbit dim_C = {rep.orbit_dim}",
        f"critical points k = {rep.k}, distinct values = {rep.distinct_values}",
        f"distinct-value condition: {'holds' if rep.distinct_condition else 'FAILS'}"
        + (f" (shared: {', '.join(format_rational(v) for v in rep.shared_values)})" if rep.shared_values else ""),
        f"all critical points nondegenerate: {rep.all_nondegenerate}",
        "",
        f"{'point':<24} {'value':>8} {'hessian rank':>13} {'fiber mates':>12}",
    ]
    for d in rep.data:
        lines.append(f"{str(d.point):<24} {format_rational(d.value):>8} {d.hessian_rank:>13} {d.fiber_mates:>12}")
    _emit(args, rep.to_json(), "\n".join(lines))
    return EXIT_OK


def cmd_ideal(args, settings):
    H0 = args.H0
    if args.presentation == "minpoly":
        I = minimal_poly_ideal(H0)
        desc = f"minimal-polynomial ideal of the orbit of {H0}"
    else:
        shifts = args.shifts or [Fraction(0), Fraction(1)]
        I = determinant_generators(H0, shifts)
        desc = f"determinant generators of the orbit of {H0}, shifts {','.join(map(format_rational, shifts))}"
    header = [desc]
    singular = None
    if args.fiber is not None:
        H = args.H or H0
        fH = potential_poly(H)
        fib = fiber_ideal(I, fH, args.fiber, critical_values(H, H0))
        I, singular = fib.ideal, fib.singular
        header.append(f"fibre f_H = {format_rational(args.fiber)} with f_H = {fH}" + (" (SINGULAR fibre)" if singular else ""))
    if args.compactify:
        I = I.homogenize(args.t)
        header.append(f"generator-wise homogenization with {args.t}")
    text = I.to_text(header)
    if args.json:
        payload = {
            "ring": list(I.ring.names),
            "generators": [str(g) for g in I.gens],
            "description": header,
            "singular_fiber": singular,
        }
        _emit(args, payload, text)
    elif args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_groebner(args, settings):
    I = Ideal.read(args.file)
    order = TermOrder(settings.term_order)

    def progress(done, queued, size):
        if done % 100 == 0:
            log.info("S-pairs processed %d, queued %d, basis %d", done, queued, size)

    gb = I.groebner(order, budget=settings.budget, progress=progress)
    text = Ideal(gb.polys, I.ring).to_text([f"reduced Groebner basis ({order}) of {args.file}"])
    payload = {"ring": list(I.ring.names), "order": str(order), "basis": [str(g) for g in gb.polys]}
    _emit(args, payload, text)
    return EXIT_OK


def cmd_fiber_betti(args, settings):
    H0 = args.H0
    rs = RootSystemA(H0.n)
    dom = H0.dominant()
    theta = theta_of(dom, rs)
    flag = flag_poincare(theta, rs)
    k = weyl_orbit_size(H0)
    payload = {
        "H0": H0.to_json(),
        "theta": sorted(theta),
        "flag_betti": list(flag),
        "k": k,
        "regular_fiber_betti": list(complement_betti(flag, k)) if len(flag) > 1 else None,
        "regular_middle_betti": regular_fiber_middle_betti(H0),
    }
    lines = [
        f"H0 = {H0}, Theta = {sorted(theta)}",
        f"flag Betti numbers: {list(flag)}",
        f"k = {k} critical points",
        f"regular fibre ~ flag minus k points: {payload['regular_fiber_betti']}",
        f"regular fibre middle Betti number: {payload['regular_middle_betti']}",
    ]
    if args.H is not None:
        sing = singular_fiber_middle_betti(H0, args.H)
        payload["singular_middle_betti"] = sing if isinstance(sing, int) else {"inapplicable": [format_rational(v) for v in sing.shared_values]}
        lines.append(f"singular fibre middle Betti number: {sing}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _diamond_of(name: str, fx: FixtureSet) -> HodgeDiamond:
    """``P2``, ``P1xP2`` or a fixture name."""
    parts = name.split("x") if name.startswith("P") else [name]
    if all(p.startswith("P") and p[1:].isdigit() for p in parts):
        return product_diamond(pn_diamond(int(p[1:])) for p in parts)
    return fx.diamond(name)


def cmd_diamond(args, settings):
    fx = FixtureSet(args.data_dir)
    if args.compare:
        a, b = (_diamond_of(s, fx) for s in args.compare)
        cmp = diamond_compare(a, b)
        lines = [a.render(), "", b.render(), ""]
        lines += [f"differ at h^{{{p},{q}}}: {x} vs {y}" for (p, q), x, y in cmp.differing]
        lines += [f"uncheckable h^{{{p},{q}}}" for p, q in cmp.uncheckable]
        if not cmp.differing and not cmp.uncheckable:
            lines.append("identical")
        _emit(args, cmp.to_json(), "\n".join(lines))
        return EXIT_OK
    if args.product:
        D = product_diamond(_diamond_of(s.strip(), fx) for s in args.product.split(","))
    elif args.fixture:
        D = fx.diamond(args.fixture)
    else:
        raise argparse.ArgumentTypeError("diamond needs --product, --fixture or --compare")
    chi = euler_from_diamond(D)
    if args.json:
        out = D.dumps()
        if args.out:
            Path(args.out).write_text(out)
        else:
            sys.stdout.write(out)
    else:
        _emit(args, {}, D.render() + f"\n\nEuler characteristic: {chi}")
    return EXIT_OK


def cmd_caveat(args, settings):
    n = args.n
    grads = norm_sq_gradient(n)
    names = [f"d/dx{k}" for k in range(1, n + 1)] + [f"d/dy{k}" for k in range(1, n + 1)]
    cert = certify(n, args.witness if args.witness is not None else Fraction(1, 1000))
    lines = [f"{name} |g|^2 = {g}" for name, g in zip(names, grads)]
    lines.append(f"Hessian at 0 is zero: {cert.hessian_zero} (rank {cert.hessian_rank})")
    payload = {
        "n": n,
        "gradient": {name: str(g) for name, g in zip(names, grads)},
        "hessian_zero": cert.hessian_zero,
        "hessian_rank": cert.hessian_rank,
        "degenerate": cert.degenerate,
    }
    if cert.witness is not None:
        w = {k: format_rational(v) for k, v in cert.witness.items() if v}
        lines.append(f"nonzero critical point {w}: gradient zero = {cert.witness_gradient_zero}, |z|^2 = {cert.witness_norm_sq}")
        payload["witness"] = w
        payload["witness_gradient_zero"] = cert.witness_gradient_zero
        payload["witness_norm_sq"] = format_rational(cert.witness_norm_sq)
    else:
        lines.append(f"NoConeWitness: {cert.note}")
        payload["witness"] = None
        payload["note"] = cert.note
    lines.append(f"0 is a degenerate critical point: {cert.degenerate}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args, settings):
    from .verify import run_all

    results = run_all(args.data_dir, budget=settings.budget)
    if args.json:
        payload = {"results": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]}
        _emit(args, payload, "")
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  {r.seconds:6.2f}s  {r.detail}")
        print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--config", help="key=value settings file")
    common.add_argument("--budget", type=float, help="wall-clock budget in seconds")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="orbitlef", description="Lefschetz fibrations on adjoint orbits of sl(n).")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fibration", parents=[common], help="critical points, values and Hessians of f_H")
    p.add_argument("--H", type=_cartan, required=True, help="regular element, e.g. 1,-1,0")
    p.add_argument("--H0", type=_cartan, required=True, help="orbit representative, e.g. 2,-1,-1")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fibration)

    p = sub.add_parser("ideal", parents=[common], help="write the orbit / fibre ideal")
    p.add_argument("--H0", type=_cartan, required=True)
    p.add_argument("--H", type=_cartan, help="potential element for --fiber (default H0)")
    p.add_argument("--presentation", choices=["minpoly", "det"], default="minpoly")
    p.add_argument("--shifts", type=lambda s: [_rational(t) for t in s.split(",")], help="det shifts, e.g. 0,1")
    p.add_argument("--fiber", type=_rational, help="fibre value c: append f_H - c")
    p.add_argument("--compactify", action="store_true", help="homogenize generator-wise")
    p.add_argument("--t", default="t", help="homogenizing variable name")
    p.add_argument("--out")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("groebner", parents=[common], help="reduced Groebner basis of an ideal file")
    p.add_argument("file")
    p.add_argument("--order", choices=["degrevlex", "deglex", "lex"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("fiber-betti", parents=[common], help="Betti numbers of regular and singular fibres")
    p.add_argument("--H0", type=_cartan, required=True)
    p.add_argument("--H", type=_cartan, help="regular element, enables the singular-fibre count")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fiber_betti)

    p = sub.add_parser("diamond", parents=[common], help="Hodge diamonds: products, fixtures, comparison")
    p.add_argument("--product", help="comma-separated factors, e.g. P2,P2")
    p.add_argument("--fixture", help="shipped diamond fixture name")
    p.add_argument("--compare", nargs=2, metavar=("A", "B"))
    p.add_argument("--data-dir")
    p.add_argument("--out")
    p.set_defaults(func=cmd_diamond)

    p = sub.add_parser("caveat", parents=[common], help="degeneracy of |sum z_i^2|^2 at the origin")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--witness", type=_rational, help="radius r of the cone witness")
    p.add_argument("--out")
    p.set_defaults(func=cmd_caveat)

    p = sub.add_parser("verify-paper", parents=[common], help="run every worked-example check")
    p.add_argument("--data-dir", help="fixture directory (default: shipped data)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        settings = resolve_settings(args)
        return args.func(args, settings)
    except BudgetExceeded as exc:
        partial = exc.partial
        print(f"budget exceeded: {exc}", file=sys.stderr)
        if partial is not None:
            payload = {
                "partial": True,
                "basis_size": len(partial.basis),
                "pairs_processed": partial.pairs_processed,
                "pairs_remaining": partial.pairs_remaining,
                "elapsed": round(partial.elapsed, 3),
            }
            print(json.dumps(payload, sort_keys=True))
        return EXIT_BUDGET
    except (argparse.ArgumentTypeError, OrbitLefError, ValueError, KeyError, FileNotFoundError) as exc:
        print(f"orbitlef: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


def run(argv=None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
