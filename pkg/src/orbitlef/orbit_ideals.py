"""Defining ideals of adjoint orbits in sl(n), their fibres, and homogenizations.

Coordinates on sl(n) follow the layout::

    x1  y1  y2
    z1  x2  y3
    z2  z3  -x1-x2

for n = 3: ``x`` on the diagonal (the last diagonal entry is minus the sum of
the others), ``y`` above and ``z`` below, both row-major. For n = 2 the
variables are plain ``x, y, z``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import NotRegular
from .lie_core import CartanElement, RootSystemA, as_cartan, is_regular
from .polyalg.ideal import Ideal, homogenize_generators, ideal_subset, subset_witness
from .polyalg.polynomial import DEGREVLEX, Polynomial, PolyRing, TermOrder, as_rational


@lru_cache(maxsize=None)
def ambient_ring(n: int) -> PolyRing:
    """Polynomial ring on the ``n^2 - 1`` coordinates of sl(n)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if n == 2:
        return PolyRing(("x", "y", "z"))
    m = n * (n - 1) // 2
    names = [f"x{k}" for k in range(1, n)]
    names += [f"y{k}" for k in range(1, m + 1)]
    names += [f"z{k}" for k in range(1, m + 1)]
    return PolyRing(tuple(names))


@dataclass(frozen=True)
class SymbolicMatrix:
    ring: PolyRing
    rows: tuple[tuple[Polynomial, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self) -> list[Polynomial]:
        return [e for row in self.rows for e in row]

    def trace(self) -> Polynomial:
        return sum((self.rows[i][i] for i in range(self.n)), self.ring.zero())

    def __matmul__(self, other: "SymbolicMatrix") -> "SymbolicMatrix":
        n = self.n
        rows = tuple(
            tuple(sum((self.rows[i][k] * other.rows[k][j] for k in range(n)), self.ring.zero()) for j in range(n))
            for i in range(n)
        )
        return SymbolicMatrix(self.ring, rows)

    def shift(self, c) -> "SymbolicMatrix":
        """``A - c * id``."""
        c = as_rational(c)
        rows = tuple(
            tuple(e - c if i == j else e for j, e in enumerate(row)) for i, row in enumerate(self.rows)
        )
        return SymbolicMatrix(self.ring, rows)

    def det(self) -> Polynomial:
        """Leibniz expansion; fine for the n <= 5 used here."""
        n = self.n
        total = self.ring.zero()
        for perm in itertools.permutations(range(n)):
            inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
            term = self.ring.const(-1 if inversions % 2 else 1)
            for i in range(n):
                term = term * self.rows[i][perm[i]]
                if term.is_zero():
                    break
            total = total + term
        return total

    def evaluate(self, point) -> list[list[Fraction]]:
        return [[e.evaluate(point) for e in row] for row in self.rows]


@lru_cache(maxsize=None)
def generic_matrix(n: int) -> SymbolicMatrix:
    ring = ambient_ring(n)
    if n == 2:
        x, y, z = ring.gens()
        return SymbolicMatrix(ring, ((x, y), (z, -x)))
    xs = [ring.var(f"x{k}") for k in range(1, n)]
    ys = iter(ring.var(f"y{k}") for k in range(1, n * (n - 1) // 2 + 1))
    zs = iter(ring.var(f"z{k}") for k in range(1, n * (n - 1) // 2 + 1))
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = next(ys)
    for i in range(n):
        for j in range(i):
            rows[i][j] = next(zs)
    for i in range(n - 1):
        rows[i][i] = xs[i]
    rows[n - 1][n - 1] = -sum(xs, ring.zero())
    return SymbolicMatrix(ring, tuple(tuple(r) for r in rows))


def point_of_matrix(M: Sequence[Sequence]) -> dict[str, Fraction]:
    """Coordinates of a concrete traceless matrix in the generic-matrix variables."""
    n = len(M)
    A = generic_matrix(n)
    point = {}
    for i in range(n):
        for j in range(n):
            if i == n - 1 and j == n - 1:
                continue
            e = A[i, j]
            (name,) = e.variables()
            point[name] = as_rational(M[i][j])
    return point


def point_of_cartan(H: CartanElement) -> dict[str, Fraction]:
    n = H.n
    M = [[H.diag[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    return point_of_matrix(M)


def minimal_poly_ideal(H0) -> Ideal:
    """Entries of ``prod_lambda (A - lambda id)`` over distinct eigenvalues of ``H0``."""
    H0 = as_cartan(H0)
    if H0.is_zero():
        raise ValueError("H0 = 0: the orbit is a point, no minimal-polynomial ideal")
    A = generic_matrix(H0.n)
    P = None
    for lam in H0.eigenvalues():
        factor = A.shift(lam)
        P = factor if P is None else P @ factor
    return Ideal(P.entries(), A.ring)


def determinant_generators(H0, shifts: Sequence = (0, 1)) -> Ideal:
    """``det(A - c id) - prod_i (lambda_i - c)`` for each shift ``c``.

    Only for regular ``H0``, where minimal and characteristic polynomials agree.
    """
    H0 = as_cartan(H0)
    if not is_regular(H0, RootSystemA(H0.n)):
        raise NotRegular(f"{H0} is not regular; determinant conditions would not cut out its orbit")
    A = generic_matrix(H0.n)
    gens = []
    for c in shifts:
        c = as_rational(c)
        target = Fraction(1)
        for lam in H0.diag:
            target *= lam - c
        gens.append(A.shift(c).det() - target)
    return Ideal(gens, A.ring)


@dataclass(frozen=True)
class FiberIdeal:
    ideal: Ideal
    value: Fraction
    singular: bool | None  # None when no critical values were supplied


def fiber_ideal(I: Ideal, fH: Polynomial, c, critical_values: Sequence | None = None) -> FiberIdeal:
    """Append ``fH - c`` to the generators of ``I``; flag ``c`` if it is a critical value."""
    c = as_rational(c)
    singular = None if critical_values is None else c in {as_rational(v) for v in critical_values}
    return FiberIdeal(ideal=I.extend([fH - c]), value=c, singular=singular)


@dataclass(frozen=True)
class CompactificationReport:
    affine_equal: bool
    hom_subset_AB: bool
    hom_subset_BA: bool
    witness: Polynomial | None = None
    witness_normal_form: Polynomial | None = None
    witness_from: str | None = None  # "A" or "B": which side the witness generator belongs to

    @property
    def hom_equal(self) -> bool:
        return self.hom_subset_AB and self.hom_subset_BA

    def to_json(self) -> dict:
        return {
            "affine_equal": self.affine_equal,
            "hom_subset_AB": self.hom_subset_AB,
            "hom_subset_BA": self.hom_subset_BA,
            "hom_equal": self.hom_equal,
            "witness": None if self.witness is None else str(self.witness),
            "witness_normal_form": None if self.witness_normal_form is None else str(self.witness_normal_form),
            "witness_from": self.witness_from,
        }


def compare_compactifications(
    gensA: Sequence[Polynomial],
    gensB: Sequence[Polynomial],
    t: str = "t",
    order: TermOrder = DEGREVLEX,
    budget: float | None = None,
) -> CompactificationReport:
    """Compare the generator-wise homogenizations of two presentations.

    ``hom_subset_AB`` means ``A_hom`` is contained in ``B_hom``. The witness is
    a homogenized generator with nonzero normal form modulo the other side.
    """
    IA, IB = Ideal(gensA), Ideal(gensB)
    affine_equal = ideal_subset(IA, IB, order, budget) and ideal_subset(IB, IA, order, budget)
    HA = Ideal(homogenize_generators(IA.gens, t, IA.ring))
    HB = Ideal(homogenize_generators(IB.gens, t, IB.ring))
    wab = subset_witness(HA, HB, order, budget)
    wba = subset_witness(HB, HA, order, budget)
    witness, nf, side = None, None, None
    if wba is not None:
        (witness, nf), side = wba, "B"
    elif wab is not None:
        (witness, nf), side = wab, "A"
    return CompactificationReport(
        affine_equal=affine_equal,
        hom_subset_AB=wab is None,
        hom_subset_BA=wba is None,
        witness=witness,
        witness_normal_form=nf,
        witness_from=side,
    )


def vanishes_at(I: Ideal, point) -> bool:
    """All generators evaluate to zero at ``point`` (a coordinate mapping)."""
    return all(g.evaluate(point) == 0 for g in I.gens)


__all__ = [
    "CompactificationReport",
    "FiberIdeal",
    "SymbolicMatrix",
    "ambient_ring",
    "compare_compactifications",
    "determinant_generators",
    "fiber_ideal",
    "generic_matrix",
    "minimal_poly_ideal",
    "point_of_cartan",
    "point_of_matrix",
    "vanishes_at",
]
