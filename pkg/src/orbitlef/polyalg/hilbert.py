"""Hilbert series of monomial ideals, and projective dimension/degree.

The Hilbert series of ``k[x_1..x_n]/M`` is written as ``N(s) / (1 - s)^n``;
``N`` is returned as an integer coefficient list, lowest degree first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from ..errors import NotHomogeneous
from .ideal import Ideal
from .polynomial import DEGREVLEX, Monomial


def _minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    out: list[Monomial] = []
    for m in gens:
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return tuple(out)


def _polymul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _polysub(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def _trim(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a = a[:-1]
    return a


@lru_cache(maxsize=None)
def _numerator(gens: tuple[Monomial, ...]) -> tuple[int, ...]:
    if not gens:
        return (1,)
    if not any(gens[0]):
        return (0,)  # unit ideal
    # pairwise coprime generators form a regular sequence
    support = [frozenset(i for i, e in enumerate(m) if e) for m in gens]
    if all(not (support[i] & support[j]) for i in range(len(gens)) for j in range(i)):
        out = [1]
        for m in gens:
            d = sum(m)
            out = _polymul(out, [1] + [0] * (d - 1) + [-1])
        return tuple(_trim(out))
    *rest, m = gens
    rest = tuple(rest)
    colon = _minimalize(tuple(max(a, b) - b for a, b in zip(g, m)) for g in rest)
    shifted = [0] * sum(m) + list(_numerator(colon))
    return tuple(_polysub(list(_numerator(_minimalize(rest))), shifted))


def hilbert_numerator(monomials: Iterable[Monomial]) -> list[int]:
    """Numerator of the Hilbert series of the quotient by a monomial ideal.

    The empty list of monomials means the zero ideal (numerator ``1``).
    """
    return list(_numerator(_minimalize(monomials)))


def hilbert_function(numerator: Sequence[int], nvars: int, degree: int) -> int:
    """Coefficient of ``s^degree`` in ``N(s) / (1 - s)^nvars``."""
    total = 0
    for i, c in enumerate(numerator):
        k = degree - i
        if k >= 0 and c:
            total += c * (comb(k + nvars - 1, nvars - 1) if nvars else (1 if k == 0 else 0))
    return total


def reduce_numerator(numerator: Sequence[int], nvars: int) -> tuple[list[int], int]:
    """Cancel factors of ``(1 - s)``; returns the reduced numerator and pole order."""
    num = list(numerator)
    pole = nvars
    while pole > 0 and sum(num) == 0 and any(num):
        # synthetic division by (1 - s)
        q = []
        acc = 0
        for c in num[:-1]:
            acc += c
            q.append(acc)
        num = _trim(q) if q else [0]
        pole -= 1
    return num, pole


@dataclass(frozen=True)
class ProjectiveInvariants:
    dimension: int
    degree: int
    numerator: tuple[int, ...]


def proj_dim_degree(ideal: Ideal, budget: float | None = None) -> ProjectiveInvariants:
    """Dimension and degree of the projective scheme of a homogeneous ideal.

    Uses the degrevlex leading-term ideal, which has the same Hilbert series.
    An empty projective scheme reports dimension ``-1``.
    """
    if not ideal.is_homogeneous():
        raise NotHomogeneous("proj_dim_degree needs homogeneous generators")
    gb = ideal.groebner(DEGREVLEX, budget)
    num = hilbert_numerator(gb.leading_monomials())
    if not any(num):
        return ProjectiveInvariants(dimension=-1, degree=0, numerator=tuple(num))
    reduced, pole = reduce_numerator(num, ideal.ring.nvars)
    return ProjectiveInvariants(dimension=pole - 1, degree=sum(reduced), numerator=tuple(num))
