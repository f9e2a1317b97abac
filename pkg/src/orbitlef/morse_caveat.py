"""Exact check that ``|g|^2`` has a degenerate critical point at 0 for ``g = sum z_i^2``.

With ``z_k = x_k + i y_k``, put ``S = sum (x_i^2 - y_i^2)`` and ``P = sum x_i y_i``,
so ``|g|^2 = S^2 + 4 P^2``. Its gradient is

    d/dx_k = 4 x_k S + 8 y_k P,    d/dy_k = -4 y_k S + 8 x_k P.

Degeneracy at the origin is certified twice: the Hessian there is zero, and
for ``n >= 2`` there are nonzero critical points ``x = (r, 0, ..), y = (0, r, ..)``
arbitrarily close to 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .errors import OrbitLefError
from .polyalg.polynomial import Polynomial, PolyRing, as_rational, format_rational


class NoConeWitness(OrbitLefError):
    """For n = 1 no nonzero point of ``g^{-1}(0)`` is critical; ``point``/``gradient`` show why."""

    def __init__(self, point, gradient):
        super().__init__(
            "n=1: g^-1(0) = {x = +-y} contains no nonzero critical point of |g|^2; "
            "degeneracy is certified by the zero Hessian only"
        )
        self.point = point
        self.gradient = gradient


@lru_cache(maxsize=None)
def caveat_ring(n: int) -> PolyRing:
    if n < 1:
        raise ValueError("n must be >= 1")
    return PolyRing(tuple(f"x{k}" for k in range(1, n + 1)) + tuple(f"y{k}" for k in range(1, n + 1)))


def _sums(n: int) -> tuple[Polynomial, Polynomial]:
    R = caveat_ring(n)
    xs = [R.var(f"x{k}") for k in range(1, n + 1)]
    ys = [R.var(f"y{k}") for k in range(1, n + 1)]
    S = sum((x * x - y * y for x, y in zip(xs, ys)), R.zero())
    P = sum((x * y for x, y in zip(xs, ys)), R.zero())
    return S, P


def norm_sq(n: int) -> Polynomial:
    """``|g|^2 = S^2 + 4 P^2`` as a real polynomial in ``x_1..x_n, y_1..y_n``."""
    S, P = _sums(n)
    return S * S + 4 * P * P


def norm_sq_gradient(n: int) -> list[Polynomial]:
    """The ``2n`` partials ``d/dx_1 .. d/dx_n, d/dy_1 .. d/dy_n`` from the closed formulas."""
    R = caveat_ring(n)
    S, P = _sums(n)
    dx = [4 * R.var(f"x{k}") * S + 8 * R.var(f"y{k}") * P for k in range(1, n + 1)]
    dy = [-4 * R.var(f"y{k}") * S + 8 * R.var(f"x{k}") * P for k in range(1, n + 1)]
    return dx + dy


def hessian_at_zero(n: int) -> list[list[Fraction]]:
    """Second partials of ``|g|^2`` evaluated at the origin."""
    R = caveat_ring(n)
    f = norm_sq(n)
    origin = [0] * R.nvars
    return [[f.diff(a).diff(b).evaluate(origin) for b in R.names] for a in R.names]


def critical_family_witness(n: int, r) -> dict[str, Fraction]:
    """A nonzero critical point at distance ``r*sqrt(2)`` from 0: ``z = (r, i r, 0, ...)``.

    Raises :class:`NoConeWitness` for ``n = 1``.
    """
    r = as_rational(r)
    if r == 0:
        raise ValueError("r must be nonzero")
    R = caveat_ring(n)
    if n == 1:
        point = {"x1": r, "y1": r}
        raise NoConeWitness(point, [g.evaluate(point) for g in norm_sq_gradient(1)])
    point = {name: Fraction(0) for name in R.names}
    point["x1"] = r
    point["y2"] = r
    return point


def gradient_at(n: int, point) -> list[Fraction]:
    return [g.evaluate(point) for g in norm_sq_gradient(n)]


@dataclass(frozen=True)
class CaveatCertificate:
    n: int
    hessian_zero: bool
    hessian_rank: int
    witness: dict | None
    witness_gradient_zero: bool | None
    witness_norm_sq: Fraction | None
    note: str = ""

    @property
    def degenerate(self) -> bool:
        return self.hessian_zero or bool(self.witness_gradient_zero)


def certify(n: int, r=Fraction(1, 1000)) -> CaveatCertificate:
    H = hessian_at_zero(n)
    zero = all(v == 0 for row in H for v in row)
    try:
        w = critical_family_witness(n, r)
    except NoConeWitness as exc:
        return CaveatCertificate(
            n=n,
            hessian_zero=zero,
            hessian_rank=linalg.rank(H),
            witness=None,
            witness_gradient_zero=None,
            witness_norm_sq=None,
            note=(
                "no cone witness; gradient at x1=y1={} is ({})".format(
                    format_rational(exc.point["x1"]), ", ".join(format_rational(v) for v in exc.gradient)
                )
            ),
        )
    grad = gradient_at(n, w)
    return CaveatCertificate(
        n=n,
        hessian_zero=zero,
        hessian_rank=linalg.rank(H),
        witness=w,
        witness_gradient_zero=all(v == 0 for v in grad),
        witness_norm_sq=sum((v * v for v in w.values()), Fraction(0)),
    )
