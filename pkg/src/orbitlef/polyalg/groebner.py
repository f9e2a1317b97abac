"""Buchberger's algorithm with the normal selection strategy.

Pairs are pruned with the Gebauer-Moeller update, which subsumes both of
Buchberger's criteria (coprime leading monomials, chain criterion). The
result is always the reduced basis, so it is unique for the term order and
independent of generator order.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from ..errors import BudgetExceeded
from .polynomial import DEGREVLEX, Monomial, Polynomial, PolyRing, TermOrder, common_ring

log = logging.getLogger(__name__)

ProgressFn = Callable[[int, int, int], None]


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _quot(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


class _Basis:
    """Working representation: monic dicts with cached leading monomials."""

    def __init__(self, key):
        self.key = key
        self.polys: list[dict] = []
        self.lms: list[Monomial] = []
        self.active: list[bool] = []

    def lm(self, f: dict) -> Monomial:
        return max(f, key=self.key)

    def reduce(self, f: dict, full: bool = True, skip: int | None = None) -> dict:
        """Multivariate division of ``f`` by the working basis."""
        key = self.key
        f = dict(f)
        rem: dict = {}
        while f:
            m = max(f, key=key)
            c = f[m]
            for j, (g, gm) in enumerate(zip(self.polys, self.lms)):
                if j != skip and _divides(gm, m):
                    q = _quot(m, gm)
                    for mg, cg in g.items():
                        mm = tuple(a + b for a, b in zip(mg, q))
                        v = f.get(mm, 0) - c * cg
                        if v:
                            f[mm] = v
                        else:
                            f.pop(mm, None)
                    break
            else:
                if not full:
                    rem.update(f)
                    return rem
                rem[m] = c
                del f[m]
        return rem

    def monic(self, f: dict) -> dict:
        c = f[self.lm(f)]
        if c == 1:
            return f
        inv = 1 / c
        return {m: v * inv for m, v in f.items()}


def _spoly(f: dict, fm: Monomial, g: dict, gm: Monomial) -> dict:
    lcm = _lcm(fm, gm)
    qf, qg = _quot(lcm, fm), _quot(lcm, gm)
    out: dict = {}
    for m, c in f.items():
        mm = tuple(a + b for a, b in zip(m, qf))
        out[mm] = out.get(mm, 0) + c
    for m, c in g.items():
        mm = tuple(a + b for a, b in zip(m, qg))
        v = out.get(mm, 0) - c
        if v:
            out[mm] = v
        else:
            out.pop(mm, None)
    return {m: c for m, c in out.items() if c}


@dataclass(frozen=True)
class PartialResult:
    """State of an interrupted Buchberger run."""

    basis: tuple[Polynomial, ...]
    pairs_remaining: int
    pairs_processed: int
    elapsed: float


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis, sorted by decreasing leading monomial."""

    polys: tuple[Polynomial, ...]
    order: TermOrder
    ring: PolyRing
    stats: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.polys]

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.polys, self.order)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def is_unit(self) -> bool:
        return any(sum(m) == 0 for m in self.leading_monomials())


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: TermOrder = DEGREVLEX) -> Polynomial:
    """Remainder of ``f`` on division by ``G``; no remainder term is divisible by any LM(g)."""
    G = [g for g in G if not g.is_zero()]
    if not G:
        raise ValueError("divisor list must be nonempty")
    basis = _Basis(order.key(f.ring))
    for g in G:
        if g.ring != f.ring:
            raise ValueError("divisor in a different ring")
        basis.polys.append(g.terms)
        basis.lms.append(basis.lm(g.terms))
    # divisors need not be monic here; scale the quotient by the LC
    basis.polys = [basis.monic(g) for g in basis.polys]
    return Polynomial(f.ring, basis.reduce(f.terms))


def _update(basis: _Basis, pairs: set, new: int) -> set:
    """Gebauer-Moeller installation of ``basis.polys[new]``."""
    lms = basis.lms
    h = lms[new]
    active = [i for i in range(new) if basis.active[i]]

    cands = [(i, _lcm(lms[i], h)) for i in active]
    chosen: list = []
    for pos, (i, li) in enumerate(cands):
        if _coprime(lms[i], h):
            chosen.append((i, li))
            continue
        rest = cands[pos + 1 :] + chosen
        if not any(_divides(lj, li) for j, lj in rest):
            chosen.append((i, li))
    fresh = {(i, new) for i, li in chosen if not _coprime(lms[i], h)}

    survivors = set()
    for (i, j) in pairs:
        lij = _lcm(lms[i], lms[j])
        if _divides(h, lij) and _lcm(lms[i], h) != lij and _lcm(lms[j], h) != lij:
            continue
        survivors.add((i, j))

    for i in active:
        if _divides(h, lms[i]):
            basis.active[i] = False
    basis.active.append(True)
    return survivors | fresh


def buchberger(
    gens: Iterable[Polynomial],
    order: TermOrder = DEGREVLEX,
    budget: float | None = None,
    progress: ProgressFn | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    ``budget`` is a wall-clock limit in seconds; exceeding it raises
    :class:`BudgetExceeded` whose ``partial`` is a :class:`PartialResult`.
    ``progress(processed, queued, basis_size)`` is called after each pair.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    ring = common_ring(gens)
    key = order.key(ring)
    start = time.monotonic()
    deadline = None if budget is None else start + budget

    basis = _Basis(key)
    pairs: set = set()
    for g in sorted(gens, key=lambda p: key(p.leading_monomial(order))):
        r = basis.reduce(g.terms) if basis.polys else dict(g.terms)
        if not r:
            continue
        r = basis.monic(r)
        basis.polys.append(r)
        basis.lms.append(basis.lm(r))
        pairs = _update(basis, pairs, len(basis.polys) - 1)

    processed = 0
    while pairs:
        if deadline is not None and time.monotonic() > deadline:
            partial = PartialResult(
                basis=tuple(Polynomial(ring, p) for p in basis.polys),
                pairs_remaining=len(pairs),
                pairs_processed=processed,
                elapsed=time.monotonic() - start,
            )
            raise BudgetExceeded(f"Groebner budget of {budget}s exceeded", partial)
        i, j = min(pairs, key=lambda p: (key(_lcm(basis.lms[p[0]], basis.lms[p[1]])), p))
        pairs.discard((i, j))
        s = _spoly(basis.polys[i], basis.lms[i], basis.polys[j], basis.lms[j])
        processed += 1
        if s:
            r = basis.reduce(s)
            if r:
                r = basis.monic(r)
                basis.polys.append(r)
                basis.lms.append(basis.lm(r))
                pairs = _update(basis, pairs, len(basis.polys) - 1)
        if progress is not None:
            progress(processed, len(pairs), len(basis.polys))
        if processed % 200 == 0:
            log.debug("buchberger: %d pairs done, %d queued, basis %d", processed, len(pairs), len(basis.polys))

    reduced = _interreduce(basis.polys, basis.lms, key)
    polys = tuple(
        Polynomial(ring, p)
        for p in sorted(reduced, key=lambda p: key(max(p, key=key)), reverse=True)
    )
    stats = {"pairs": processed, "elapsed": time.monotonic() - start}
    return GroebnerBasis(polys=polys, order=order, ring=ring, stats=stats)


def _interreduce(polys: list[dict], lms: list[Monomial], key) -> list[dict]:
    # keep one element per minimal leading monomial
    items = sorted(zip(lms, polys), key=lambda t: key(t[0]))
    minimal: list = []
    for m, p in items:
        if not any(_divides(mm, m) for mm, _ in minimal):
            minimal.append((m, p))
    work = _Basis(key)
    work.lms = [m for m, _ in minimal]
    work.polys = [p for _, p in minimal]
    out = []
    for idx in range(len(work.polys)):
        r = work.reduce(work.polys[idx], skip=idx)
        work.polys[idx] = work.monic(r)
        out.append(work.polys[idx])
    return out


def is_groebner(G: Sequence[Polynomial], order: TermOrder = DEGREVLEX) -> bool:
    """Buchberger's S-pair test, used as an independent check in tests."""
    G = [g.monic(order) for g in G]
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            fa, fb = G[a], G[b]
            s = _spoly(fa.terms, fa.leading_monomial(order), fb.terms, fb.leading_monomial(order))
            if s and not normal_form(Polynomial(fa.ring, s), G, order).is_zero():
                return False
    return True

