"""Type A root systems, the Weyl group as S_n, and flag-manifold combinatorics.

Cartan elements of sl(n) are traceless diagonal matrices with exact rational
entries. The Weyl group acts by permuting diagonal entries. Roots
``e_i - e_j`` are stored as index pairs ``(i, j)`` (0-based); simple roots are
numbered ``1..n-1`` as in the usual ``alpha_k = e_k - e_{k+1}``.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, NamedTuple, Sequence

from .betti import BettiVector
from .errors import DimensionMismatch, InvalidRank, NotDominant, NotTraceless, ParseError
from .polyalg.polynomial import as_rational, format_rational

ThetaSet = frozenset  # subset of simple-root indices 1..n-1


class Root(NamedTuple):
    """The root ``e_i - e_j`` (0-based indices)."""

    i: int
    j: int

    def __call__(self, H: "CartanElement") -> Fraction:
        return H.diag[self.i] - H.diag[self.j]

    def vector(self, n: int) -> tuple[int, ...]:
        v = [0] * n
        v[self.i] = 1
        v[self.j] = -1
        return tuple(v)

    @property
    def is_positive(self) -> bool:
        return self.i < self.j

    def __neg__(self):
        return Root(self.j, self.i)

    def __str__(self):
        return f"e{self.i + 1}-e{self.j + 1}"


@dataclass(frozen=True)
class RootSystemA:
    """Root system of type A_{n-1}, i.e. of sl(n)."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise InvalidRank(f"sl(n) needs n >= 2, got {self.n!r}")

    @property
    def rank(self) -> int:
        return self.n - 1

    @property
    def roots(self) -> tuple[Root, ...]:
        return tuple(Root(i, j) for i in range(self.n) for j in range(self.n) if i != j)

    @property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if r.is_positive)

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(Root(k, k + 1) for k in range(self.n - 1))

    def simple_root(self, k: int) -> Root:
        """``alpha_k`` for ``k`` in ``1..n-1``."""
        if not 1 <= k <= self.n - 1:
            raise ValueError(f"simple root index {k} out of range 1..{self.n - 1}")
        return Root(k - 1, k)

    def check_theta(self, theta: Iterable[int]) -> frozenset:
        theta = frozenset(theta)
        bad = [k for k in theta if not 1 <= k <= self.n - 1]
        if bad:
            raise ValueError(f"Theta indices {sorted(bad)} outside 1..{self.n - 1}")
        return theta


def root_system(n: int) -> RootSystemA:
    return RootSystemA(n)


@dataclass(frozen=True)
class CartanElement:
    """Traceless diagonal matrix with exact rational entries."""

    diag: tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(as_rational(v) for v in self.diag)
        object.__setattr__(self, "diag", entries)
        if len(entries) < 1:
            raise InvalidRank("empty diagonal")
        if sum(entries) != 0:
            raise NotTraceless(f"diagonal {self} is not traceless")

    @classmethod
    def of(cls, *entries) -> "CartanElement":
        return cls(tuple(entries))

    @classmethod
    def parse(cls, text: str) -> "CartanElement":
        """Parse comma-separated rationals, e.g. ``"2,-1,-1"`` or ``"1/2,-1/2"``."""
        try:
            return cls(tuple(tok.strip() for tok in text.split(",")))
        except NotTraceless:
            raise
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"cannot parse Cartan element {text!r}") from exc

    @property
    def n(self) -> int:
        return len(self.diag)

    def __len__(self):
        return len(self.diag)

    def __getitem__(self, k):
        return self.diag[k]

    def __str__(self):
        return "diag(" + ",".join(format_rational(v) for v in self.diag) + ")"

    def scale(self, c) -> "CartanElement":
        c = as_rational(c)
        return CartanElement(tuple(c * v for v in self.diag))

    def is_zero(self) -> bool:
        return not any(self.diag)

    def is_dominant(self) -> bool:
        return all(a >= b for a, b in zip(self.diag, self.diag[1:]))

    def dominant(self) -> "CartanElement":
        """The Weyl conjugate with weakly decreasing entries."""
        return CartanElement(tuple(sorted(self.diag, reverse=True)))

    def eigenvalues(self) -> list[Fraction]:
        """Distinct eigenvalues, decreasing."""
        return sorted(set(self.diag), reverse=True)

    # JSON: {"n": 3, "diag": ["2", "-1", "-1"]}
    def to_json(self) -> dict:
        return {"n": self.n, "diag": [format_rational(v) for v in self.diag]}

    @classmethod
    def from_json(cls, data) -> "CartanElement":
        if isinstance(data, str):
            data = json.loads(data)
        diag = data["diag"]
        if len(diag) != data["n"]:
            raise ParseError("diag length does not match n")
        return cls(tuple(diag))


def _check_size(H: CartanElement, rs: RootSystemA):
    if H.n != rs.n:
        raise DimensionMismatch(f"element of size {H.n} vs root system of sl({rs.n})")


@dataclass(frozen=True)
class WeylElement:
    """Permutation ``i -> perm[i-1]`` of ``{1..n}`` (one-line notation)."""

    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ValueError(f"{self.perm} is not a permutation of 1..{len(self.perm)}")

    @classmethod
    def identity(cls, n: int) -> "WeylElement":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.perm)

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "WeylElement":
        inv = [0] * self.n
        for i, wi in enumerate(self.perm, start=1):
            inv[wi - 1] = i
        return WeylElement(tuple(inv))

    def length(self) -> int:
        """Number of inversions, i.e. the Coxeter length."""
        p = self.perm
        return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])

    def act(self, H: CartanElement) -> CartanElement:
        """Conjugation by the permutation matrix: entry ``i`` moves to slot ``w(i)``."""
        if H.n != self.n:
            raise DimensionMismatch("permutation and element sizes differ")
        out = [None] * self.n
        for i, v in enumerate(H.diag, start=1):
            out[self(i) - 1] = v
        return CartanElement(tuple(out))

    def act_on_root(self, root: Root) -> Root:
        return Root(self(root.i + 1) - 1, self(root.j + 1) - 1)

    def __str__(self):
        return "[" + " ".join(map(str, self.perm)) + "]"


def weyl_group(n: int) -> list[WeylElement]:
    """All of S_n, lexicographic in one-line notation."""
    return [WeylElement(p) for p in itertools.permutations(range(1, n + 1))]


def is_regular(H: CartanElement, rs: RootSystemA) -> bool:
    _check_size(H, rs)
    return all(r(H) != 0 for r in rs.positive_roots)


def theta_of(H0: CartanElement, rs: RootSystemA) -> frozenset:
    """Simple roots vanishing on a dominant element (as indices ``1..n-1``)."""
    _check_size(H0, rs)
    if not H0.is_dominant():
        raise NotDominant(f"{H0} is not weakly decreasing; call .dominant() first")
    return frozenset(k for k in range(1, rs.n) if rs.simple_root(k)(H0) == 0)


def characteristic_element(theta: Iterable[int], rs: RootSystemA) -> CartanElement:
    """A dominant integral-ish element whose vanishing simple roots are exactly ``theta``."""
    theta = rs.check_theta(theta)
    values = [0]
    for k in range(1, rs.n):
        values.append(values[-1] - (0 if k in theta else 1))
    shift = Fraction(sum(values), rs.n)
    return CartanElement(tuple(v - shift for v in values))


def weyl_orbit(H0: CartanElement) -> tuple[CartanElement, ...]:
    """Distinct Weyl conjugates, in order of first appearance over lexicographic S_n."""
    seen = {}
    for w in weyl_group(H0.n):
        x = w.act(H0)
        if x not in seen:
            seen[x] = None
    return tuple(seen)


def weyl_orbit_size(H0: CartanElement) -> int:
    """``n! / prod(multiplicity!)`` without enumerating the group."""
    return factorial(H0.n) // prod(factorial(m) for m in Counter(H0.diag).values())


def orbit_dim_c(H0: CartanElement, rs: RootSystemA) -> int:
    """Complex dimension of the adjoint orbit: roots not vanishing on ``H0``."""
    _check_size(H0, rs)
    return sum(1 for r in rs.roots if r(H0) != 0)


def theta_span_roots(theta: Iterable[int], rs: RootSystemA) -> list[Root]:
    """Positive roots in the span of the simple roots in ``theta``."""
    theta = rs.check_theta(theta)
    # e_i - e_j (i<j) is alpha_{i+1} + ... + alpha_j in 1-based numbering
    return [r for r in rs.positive_roots if all(k in theta for k in range(r.i + 1, r.j + 1))]


def flag_dim_c(theta: Iterable[int], rs: RootSystemA) -> int:
    return len(rs.positive_roots) - len(theta_span_roots(theta, rs))


def minimal_coset_reps(theta: Iterable[int], rs: RootSystemA) -> list[WeylElement]:
    """Minimal length representatives of ``W / W_Theta``: no descent at any ``k`` in theta."""
    theta = rs.check_theta(theta)
    return [w for w in weyl_group(rs.n) if all(w(k) < w(k + 1) for k in theta)]


def flag_poincare(theta: Iterable[int], rs: RootSystemA) -> BettiVector:
    """Betti numbers of ``F_Theta`` from its Schubert cells (one per coset rep)."""
    reps = minimal_coset_reps(theta, rs)
    dim = flag_dim_c(theta, rs)
    betti = [0] * (2 * dim + 1)
    for w in reps:
        betti[2 * w.length()] += 1
    return BettiVector(betti)


def longest_element(rs: RootSystemA) -> WeylElement:
    return WeylElement(tuple(range(rs.n, 0, -1)))


def dual_theta(theta: Iterable[int], rs: RootSystemA) -> frozenset:
    """``-w0 Theta``: for type A this is ``k -> n - k``."""
    theta = rs.check_theta(theta)
    return frozenset(rs.n - k for k in theta)


def weyl_act_on_simple(theta: Iterable[int], w: WeylElement, rs: RootSystemA, negate: bool = False) -> frozenset:
    """Image of simple roots under ``w`` (optionally ``-w``); must land in simple roots."""
    out = set()
    for k in rs.check_theta(theta):
        r = w.act_on_root(rs.simple_root(k))
        if negate:
            r = -r
        if r not in rs.simple_roots:
            raise ValueError(f"{r} is not a simple root")
        out.add(r.i + 1)
    return frozenset(out)


def as_cartan(value: CartanElement | str | Sequence) -> CartanElement:
    if isinstance(value, CartanElement):
        return value
    if isinstance(value, str):
        return CartanElement.parse(value)
    return CartanElement(tuple(value))
