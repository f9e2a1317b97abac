"""The height function ``f_H(x) = tr(H x)`` on an adjoint orbit of sl(n).

Critical points of ``f_H`` on the orbit of ``H0`` are the diagonal matrices in
that orbit, i.e. the Weyl conjugates of ``H0``. The Hessian at such a point is
the second variation ``t -> f_H(Ad(exp tA) x)``, which polarizes to

    B(A, B) = tr(H [A, [B, x]])

on the tangent directions ``[E_alpha, x]``. The trace form is used throughout;
pass ``scale=2*n`` to get Killing-form normalization.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DimensionMismatch, NotCritical, NotRegular, NotTraceless
from .lie_core import (
    CartanElement,
    Root,
    RootSystemA,
    as_cartan,
    is_regular,
    orbit_dim_c,
    weyl_orbit,
)
from .orbit_ideals import generic_matrix
from .polyalg.polynomial import Polynomial, as_rational, format_rational


@dataclass(frozen=True)
class TracelessMatrix:
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(as_rational(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(len(r) != len(rows) for r in rows):
            raise DimensionMismatch("matrix must be square")
        if sum(rows[i][i] for i in range(len(rows))) != 0:
            raise NotTraceless("matrix is not traceless")

    @classmethod
    def from_cartan(cls, H: CartanElement) -> "TracelessMatrix":
        return cls(tuple(tuple(H.diag[i] if i == j else 0 for j in range(H.n)) for i in range(H.n)))

    @property
    def n(self) -> int:
        return len(self.rows)


def _as_rows(X):
    if isinstance(X, CartanElement):
        return linalg.diag(X.diag)
    if isinstance(X, TracelessMatrix):
        return [list(r) for r in X.rows]
    return [[as_rational(v) for v in row] for row in X]


def trace_form(X, Y, scale=1) -> Fraction:
    """``scale * tr(XY)``; accepts Cartan elements or square matrices."""
    A, B = _as_rows(X), _as_rows(Y)
    if len(A) != len(B):
        raise DimensionMismatch(f"sizes {len(A)} and {len(B)} differ")
    if isinstance(X, CartanElement) and isinstance(Y, CartanElement):
        value = sum((a * b for a, b in zip(X.diag, Y.diag)), Fraction(0))
    else:
        value = linalg.trace(linalg.matmul(A, B))
    return as_rational(scale) * value


def killing_form(X, Y) -> Fraction:
    return trace_form(X, Y, scale=2 * len(_as_rows(X)))


def potential_poly(H, n: int | None = None, scale=1) -> Polynomial:
    """``f_H = scale * tr(H A)`` in the generic-matrix coordinates of sl(n)."""
    H = as_cartan(H)
    n = H.n if n is None else n
    if n != H.n:
        raise DimensionMismatch(f"H has size {H.n}, asked for sl({n})")
    A = generic_matrix(n)
    f = A.ring.zero()
    for i in range(n):
        if H.diag[i]:
            f = f + A[i, i] * H.diag[i]
    return f * as_rational(scale)


def _require_regular(H: CartanElement):
    if not is_regular(H, RootSystemA(H.n)):
        raise NotRegular(f"{H} is not regular")


def critical_points(H, H0) -> tuple[CartanElement, ...]:
    """The Weyl orbit of ``H0``, which is the critical set of ``f_H`` for regular ``H``."""
    H, H0 = as_cartan(H), as_cartan(H0)
    if H.n != H0.n:
        raise DimensionMismatch("H and H0 have different sizes")
    _require_regular(H)
    return weyl_orbit(H0)


def critical_values(H, H0, scale=1) -> tuple[Fraction, ...]:
    """Critical values with multiplicity, in decreasing order."""
    H, H0 = as_cartan(H), as_cartan(H0)
    pts = critical_points(H, H0)
    return tuple(sorted((trace_form(H, x, scale) for x in pts), reverse=True))


def tangent_roots(x: CartanElement, rs: RootSystemA) -> list[Root]:
    """Roots ``alpha`` with ``alpha(x) != 0``; ``[E_alpha, x]`` then spans the tangent space."""
    return [r for r in rs.roots if r(x) != 0]


def hessian_form(H, x, rs: RootSystemA | None = None, H0=None, scale=1) -> list[list[Fraction]]:
    """Hessian of ``f_H`` at the diagonal point ``x`` in the basis :func:`tangent_roots`.

    ``H0``, when given, fixes the orbit and ``x`` must lie in its Weyl orbit.
    """
    H, x = as_cartan(H), as_cartan(x)
    rs = rs or RootSystemA(x.n)
    if not (H.n == x.n == rs.n):
        raise DimensionMismatch("H, x and the root system disagree in size")
    if H0 is not None and as_cartan(H0).dominant() != x.dominant():
        raise NotCritical(f"{x} is not a critical point on the orbit of {H0}")
    basis = tangent_roots(x, rs)
    c = as_rational(scale)
    # For diagonal x: [E_b, x] = -b(x) E_b, and tr(H [E_a, E_b]) is a(H) if b = -a, else 0.
    return [[c * a(x) * a(H) if b == -a else Fraction(0) for b in basis] for a in basis]


def hessian_rank(H, x, rs: RootSystemA | None = None, H0=None) -> int:
    return linalg.rank(hessian_form(H, x, rs, H0))


def hessian_nondegenerate(H, x, rs: RootSystemA | None = None, H0=None) -> bool:
    x = as_cartan(x)
    rs = rs or RootSystemA(x.n)
    return hessian_rank(H, x, rs, H0) == orbit_dim_c(x, rs)


@dataclass(frozen=True)
class CriticalDatum:
    point: CartanElement
    value: Fraction
    hessian_rank: int
    fiber_mates: int

    def to_json(self) -> dict:
        return {
            "point": self.point.to_json(),
            "value": format_rational(self.value),
            "hessian_rank": self.hessian_rank,
            "fiber_mates": self.fiber_mates,
        }


def critical_data(H, H0, scale=1) -> list[CriticalDatum]:
    H, H0 = as_cartan(H), as_cartan(H0)
    rs = RootSystemA(H.n)
    pts = critical_points(H, H0)
    values = [trace_form(H, x, scale) for x in pts]
    counts = Counter(values)
    return [
        CriticalDatum(point=x, value=v, hessian_rank=hessian_rank(H, x, rs), fiber_mates=counts[v] - 1)
        for x, v in zip(pts, values)
    ]


@dataclass(frozen=True)
class LefschetzReport:
    """Critical structure of ``f_H`` checked against the distinct-value condition."""

    H: CartanElement
    H0: CartanElement
    k: int
    distinct_values: int
    distinct_condition: bool
    orbit_dim: int
    all_nondegenerate: bool
    shared_values: tuple[Fraction, ...]
    data: tuple[CriticalDatum, ...] = field(repr=False)

    def to_json(self) -> dict:
        return {
            "H": self.H.to_json(),
            "H0": self.H0.to_json(),
            "k": self.k,
            "distinct_values": self.distinct_values,
            "distinct_condition": self.distinct_condition,
            "orbit_dim_c": self.orbit_dim,
            "all_nondegenerate": self.all_nondegenerate,
            "shared_values": [format_rational(v) for v in self.shared_values],
            "critical_points": [d.to_json() for d in self.data],
        }


def lefschetz_report(H, H0, scale=1) -> LefschetzReport:
    H, H0 = as_cartan(H), as_cartan(H0)
    data = tuple(critical_data(H, H0, scale))
    values = Counter(d.value for d in data)
    dim = orbit_dim_c(H0, RootSystemA(H0.n))
    return LefschetzReport(
        H=H,
        H0=H0,
        k=len(data),
        distinct_values=len(values),
        distinct_condition=len(values) == len(data),
        orbit_dim=dim,
        all_nondegenerate=all(d.hessian_rank == dim for d in data),
        shared_values=tuple(sorted((v for v, m in values.items() if m > 1), reverse=True)),
        data=data,
    )


def second_variation(H, x, A: Sequence[Sequence]) -> Fraction:
    """``d^2/dt^2 f_H(Ad(exp tA) x)`` at ``t = 0``, i.e. ``tr(H [A, [A, x]])``."""
    Hm, xm = linalg.diag(as_cartan(H).diag), linalg.diag(as_cartan(x).diag)
    A = [[as_rational(v) for v in row] for row in A]
    return linalg.trace(linalg.matmul(Hm, linalg.bracket(A, linalg.bracket(A, xm))))
