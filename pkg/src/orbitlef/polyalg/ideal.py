"""Ideals as generator lists with cached reduced Groebner bases."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

from ..errors import ParseError, VariableClash
from .groebner import GroebnerBasis, buchberger, normal_form
from .polynomial import DEGREVLEX, Polynomial, PolyRing, TermOrder, common_ring


class Ideal:
    """An ideal given by an explicit generator list.

    The generator list is kept as given (zero generators dropped) because
    generator-wise homogenization depends on it.
    """

    def __init__(self, gens: Iterable[Polynomial], ring: PolyRing | None = None):
        gens = tuple(g for g in gens if not g.is_zero())
        if ring is None:
            if not gens:
                raise ValueError("ring required for the zero ideal")
            ring = common_ring(gens)
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator in a different ring")
        self.ring = ring
        self.gens = gens
        self._gb: dict[TermOrder, GroebnerBasis] = {}

    def __repr__(self):
        return f"Ideal<{', '.join(map(str, self.gens))}>"

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def groebner(self, order: TermOrder = DEGREVLEX, budget: float | None = None, progress=None) -> GroebnerBasis:
        gb = self._gb.get(order)
        if gb is None:
            if not self.gens:
                gb = GroebnerBasis(polys=(), order=order, ring=self.ring)
            else:
                gb = buchberger(self.gens, order, budget=budget, progress=progress)
            self._gb[order] = gb
        return gb

    def reduce(self, f: Polynomial, order: TermOrder = DEGREVLEX, budget: float | None = None) -> Polynomial:
        gb = self.groebner(order, budget)
        if not gb.polys:
            return f
        return normal_form(f, gb.polys, order)

    def contains(self, f: Polynomial, order: TermOrder = DEGREVLEX, budget: float | None = None) -> bool:
        return self.reduce(f, order, budget).is_zero()

    def extend(self, more: Iterable[Polynomial]) -> "Ideal":
        return Ideal(self.gens + tuple(more), self.ring)

    def homogenize(self, t: str = "t") -> "Ideal":
        return Ideal(homogenize_generators(self.gens, t, self.ring), self.ring.extend(t))

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    # text format -------------------------------------------------------------
    def to_text(self, header: Sequence[str] = ()) -> str:
        lines = [f"# {h}" for h in header]
        lines.append("# ring: " + ",".join(self.ring.names))
        lines.extend(str(g) for g in self.gens)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, ring: PolyRing | None = None) -> "Ideal":
        """Parse one generator per line; ``#`` starts a comment.

        Without an explicit ``ring`` a ``# ring: a,b,c`` header is required.
        """
        gens_src = []
        for raw in text.splitlines():
            line = raw.strip()
            if line.startswith("#"):
                body = line[1:].strip()
                if ring is None and body.startswith("ring:"):
                    ring = PolyRing(tuple(v.strip() for v in body[5:].split(",") if v.strip()))
                continue
            line = line.split("#", 1)[0].strip()
            if line:
                gens_src.append(line)
        if ring is None:
            raise ParseError("ideal file has no '# ring:' header")
        return cls([ring.parse(s) for s in gens_src], ring)

    @classmethod
    def read(cls, path, ring: PolyRing | None = None) -> "Ideal":
        return cls.from_text(Path(path).read_text(), ring)

    def write(self, path, header: Sequence[str] = ()) -> None:
        Path(path).write_text(self.to_text(header))


def _as_ideal(I) -> Ideal:
    return I if isinstance(I, Ideal) else Ideal(I)


def ideal_subset(I, J, order: TermOrder = DEGREVLEX, budget: float | None = None) -> bool:
    """True iff every generator of ``I`` reduces to zero modulo GB(J)."""
    I, J = _as_ideal(I), _as_ideal(J)
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    return all(J.contains(g, order, budget) for g in I.gens)


def subset_witness(I, J, order: TermOrder = DEGREVLEX, budget: float | None = None):
    """First generator of ``I`` with nonzero normal form mod J, with that form; else None."""
    I, J = _as_ideal(I), _as_ideal(J)
    for g in I.gens:
        r = J.reduce(g, order, budget)
        if not r.is_zero():
            return g, r
    return None


def ideals_equal(I, J, order: TermOrder = DEGREVLEX, budget: float | None = None) -> bool:
    I, J = _as_ideal(I), _as_ideal(J)
    return I.groebner(order, budget).polys == J.groebner(order, budget).polys


def homogenize_generators(gens: Sequence[Polynomial], t: str = "t", ring: PolyRing | None = None) -> list[Polynomial]:
    """Homogenize each generator to its own total degree with the new variable ``t``.

    This depends on the generator list, not just on the ideal.
    """
    gens = list(gens)
    ring = ring or common_ring(gens)
    if t in ring.names:
        raise VariableClash(f"variable {t!r} already present")
    target = ring.extend(t)
    return [g.homogenize(t, target) for g in gens if not g.is_zero()]


def homogenize_ideal(I, t: str = "t", budget: float | None = None) -> Ideal:
    """Projective closure: homogenize a degrevlex Groebner basis instead of the generators.

    Contrast with :func:`homogenize_generators`; this result depends only on
    the affine ideal.
    """
    I = _as_ideal(I)
    gb = I.groebner(DEGREVLEX, budget)
    return Ideal(homogenize_generators(gb.polys, t, I.ring), I.ring.extend(t))
