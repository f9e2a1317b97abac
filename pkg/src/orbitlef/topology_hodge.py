"""Fibre Betti numbers, Hodge diamonds, and Euler-characteristic obstructions.

Regular fibres of ``f_H`` have the homology of the flag manifold with the ``k``
critical points removed, ``k = |W . H0|``. For a closed simply connected
``2m``-manifold, removing ``k`` points kills ``b_{2m}`` and adds ``k - 1`` to
``b_{2m-1}``; nothing else changes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .betti import BettiVector
from .errors import DimensionMismatch, UnknownEntries
from .fibration import lefschetz_report
from .lie_core import as_cartan, weyl_orbit_size
from .polyalg.polynomial import format_rational


class _Unknown:
    """A diamond cell whose value is not known (printed ``?``)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNKNOWN"

    def __str__(self):
        return "?"

    def __reduce__(self):
        return (_Unknown, ())


UNKNOWN = _Unknown()


# ---------------------------------------------------------------------------
# Betti numbers of fibres


def complement_betti(flag: Sequence[int], k: int) -> BettiVector:
    """Betti numbers of a closed simply connected ``2m``-manifold minus ``k`` points."""
    flag = BettiVector(flag)
    if k < 1:
        raise ValueError(f"need at least one puncture, got k={k}")
    top = flag.top_degree
    if top < 1 or top % 2 or flag[0] != 1 or flag[top] != 1 or any(flag[i] for i in range(1, top, 2)):
        raise ValueError(f"{tuple(flag)} is not the Betti vector of a closed simply connected even-dim manifold")
    out = list(flag)
    out[top] = 0
    out[top - 1] += k - 1
    return BettiVector(out)


def regular_fiber_middle_betti(H0) -> int:
    return weyl_orbit_size(as_cartan(H0)) - 1


@dataclass(frozen=True)
class Inapplicable:
    """The one-critical-point-per-singular-fibre hypothesis fails."""

    reason: str
    shared_values: tuple = ()

    def __str__(self):
        vals = ", ".join(format_rational(v) for v in self.shared_values)
        return f"Inapplicable ({self.reason}: {vals})" if vals else f"Inapplicable ({self.reason})"


def singular_fiber_middle_betti(H0, H) -> int | Inapplicable:
    report = lefschetz_report(H, H0)
    if report.shared_values:
        return Inapplicable("singular fibre contains more than one critical point", report.shared_values)
    return report.k - 2


# ---------------------------------------------------------------------------
# Hodge diamonds


@dataclass(frozen=True)
class HodgeDiamond:
    """``h[p][q]`` for ``0 <= p, q <= dim``; cells are ints or :data:`UNKNOWN`."""

    dim: int
    h: tuple[tuple, ...]

    def __post_init__(self):
        h = tuple(tuple(row) for row in self.h)
        object.__setattr__(self, "h", h)
        d = self.dim
        if d < 0 or len(h) != d + 1 or any(len(row) != d + 1 for row in h):
            raise DimensionMismatch(f"diamond of dimension {d} needs a {(d + 1)}x{(d + 1)} array")
        for row in h:
            for v in row:
                if v is UNKNOWN:
                    continue
                if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                    raise ValueError(f"bad Hodge number {v!r}")

    @classmethod
    def from_cells(cls, dim: int, cells: dict, default=0) -> "HodgeDiamond":
        return cls(dim, tuple(tuple(cells.get((p, q), default) for q in range(dim + 1)) for p in range(dim + 1)))

    def __getitem__(self, pq):
        p, q = pq
        return self.h[p][q]

    def cells(self):
        for p in range(self.dim + 1):
            for q in range(self.dim + 1):
                yield (p, q), self.h[p][q]

    def unknown_cells(self) -> list[tuple[int, int]]:
        return [pq for pq, v in self.cells() if v is UNKNOWN]

    def has_unknown(self) -> bool:
        return bool(self.unknown_cells())

    def is_hodge_symmetric(self) -> bool:
        return all(v == self.h[q][p] for (p, q), v in self.cells())

    def is_serre_symmetric(self) -> bool:
        d = self.dim
        return all(v == self.h[d - p][d - q] for (p, q), v in self.cells())

    def rows(self) -> list[list[tuple[int, int]]]:
        """Cells by row of the rotated layout: top row is ``(d, d)``, bottom ``(0, 0)``."""
        d = self.dim
        out = []
        for s in range(2 * d, -1, -1):
            out.append([(p, s - p) for p in range(min(d, s), max(0, s - d) - 1, -1)])
        return out

    def render(self) -> str:
        """Centered triangular layout, ``?`` for unknown cells."""
        d = self.dim
        width = max(len(str(v)) for _, v in self.cells())
        lines = []
        for row in self.rows():
            slots = [" " * width] * (2 * d + 1)
            for p, q in row:
                slots[d + q - p] = str(self.h[p][q]).center(width)
            lines.append(" ".join(slots).rstrip())
        return "\n".join(lines)

    def __str__(self):
        return self.render()

    # JSON: {"dim": d, "h": [[...]], "unknown": [[p, q], ...]}; unknown cells are null in "h"
    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "h": [[None if v is UNKNOWN else v for v in row] for row in self.h],
            "unknown": [list(pq) for pq in self.unknown_cells()],
        }

    def dumps(self) -> str:
        return dumps_diamond_json(self.to_json())

    @classmethod
    def from_json(cls, data) -> "HodgeDiamond":
        if isinstance(data, str):
            data = json.loads(data)
        unknown = {tuple(pq) for pq in data.get("unknown", [])}
        h = []
        for p, row in enumerate(data["h"]):
            out_row = []
            for q, v in enumerate(row):
                if (p, q) in unknown:
                    if v is not None:
                        raise ValueError(f"cell {(p, q)} listed unknown but has value {v!r}")
                    out_row.append(UNKNOWN)
                elif v is None:
                    raise ValueError(f"cell {(p, q)} is null but not listed as unknown")
                else:
                    out_row.append(v)
            h.append(out_row)
        return cls(data["dim"], h)


def dumps_diamond_json(data: dict) -> str:
    """Canonical serialization: one array row per line, fixed key order."""
    rows = ",\n    ".join(json.dumps(row) for row in data["h"])
    unknown = json.dumps(data["unknown"])
    return f'{{\n  "dim": {data["dim"]},\n  "h": [\n    {rows}\n  ],\n  "unknown": {unknown}\n}}\n'


def pn_diamond(n: int) -> HodgeDiamond:
    if n < 0:
        raise ValueError("projective space dimension must be >= 0")
    return HodgeDiamond.from_cells(n, {(p, p): 1 for p in range(n + 1)})


def kunneth(D1: HodgeDiamond, D2: HodgeDiamond) -> HodgeDiamond:
    """Hodge numbers of a product."""
    if D1.has_unknown() or D2.has_unknown():
        raise UnknownEntries("Kunneth needs fully known diamonds")
    d = D1.dim + D2.dim
    cells = {}
    for (a, b), u in D1.cells():
        if not u:
            continue
        for (c, e), v in D2.cells():
            if v:
                cells[(a + c, b + e)] = cells.get((a + c, b + e), 0) + u * v
    return HodgeDiamond.from_cells(d, cells)


def product_diamond(factors: Iterable[HodgeDiamond]) -> HodgeDiamond:
    out = pn_diamond(0)
    for D in factors:
        out = kunneth(out, D)
    return out


@dataclass(frozen=True)
class DiamondComparison:
    equal: tuple[tuple[int, int], ...]
    differing: tuple[tuple[tuple[int, int], int, int], ...]
    uncheckable: tuple[tuple[int, int], ...]

    @property
    def identical(self) -> bool:
        """No differing cells and nothing left unchecked."""
        return not self.differing and not self.uncheckable

    @property
    def consistent(self) -> bool:
        return not self.differing

    def to_json(self) -> dict:
        return {
            "differing": [{"cell": list(pq), "left": a, "right": b} for pq, a, b in self.differing],
            "uncheckable": [list(pq) for pq in self.uncheckable],
            "equal_cells": len(self.equal),
        }


def diamond_compare(D1: HodgeDiamond, D2: HodgeDiamond) -> DiamondComparison:
    """Cell-by-cell comparison; a cell unknown on either side is uncheckable, never unequal."""
    if D1.dim != D2.dim:
        raise DimensionMismatch(f"diamonds of dimension {D1.dim} and {D2.dim}")
    equal, differing, unchecked = [], [], []
    for (pq, a) in D1.cells():
        b = D2[pq]
        if a is UNKNOWN or b is UNKNOWN:
            unchecked.append(pq)
        elif a == b:
            equal.append(pq)
        else:
            differing.append((pq, a, b))
    return DiamondComparison(tuple(equal), tuple(differing), tuple(unchecked))


def euler_from_diamond(D: HodgeDiamond):
    """``sum (-1)^(p+q) h^{p,q}``, or :data:`UNKNOWN` if any cell is unknown."""
    if D.has_unknown():
        return UNKNOWN
    return sum((-1) ** (p + q) * v for (p, q), v in D.cells())


@dataclass(frozen=True)
class EulerVerdict:
    chi: int
    obstructed: bool

    def __str__(self):
        if self.obstructed:
            return f"chi={self.chi} is odd: no fibration over P^1"
        return f"chi={self.chi} is even: not obstructed by parity"


def euler_obstruction(chi: int) -> EulerVerdict:
    """A compact manifold fibring over P^1 has ``chi = 2 chi(F)``, so odd ``chi`` obstructs."""
    return EulerVerdict(chi=chi, obstructed=chi % 2 == 1)


def euler_of_betti(b: Sequence[int]) -> int:
    return BettiVector(b).euler()
