"""Sparse multivariate polynomials over the rationals.

A polynomial lives in a :class:`PolyRing`, which only fixes the ordered tuple
of variable names. Monomials are dense exponent tuples aligned with that
tuple; a coefficient map never stores zeros.

Text format (bit-exact round trip)::

    3*x1^2*y3 - 1/2*t

``*`` between factors and ``^`` for powers are mandatory, rationals are
written ``p/q``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

from ..errors import ParseError, VariableClash

Monomial = tuple  # exponent tuple aligned with PolyRing.names


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to :class:`Fraction`."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {value!r}") from exc
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------------
# term orders


@dataclass(frozen=True)
class TermOrder:
    """A monomial order on exponent tuples.

    Variables earlier in the ring (or in ``priority``, if given) are larger.
    """

    name: str = "degrevlex"
    priority: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.name not in _ORDER_KEYS:
            raise ValueError(f"unknown term order {self.name!r}")

    def key(self, ring: "PolyRing") -> Callable[[Monomial], tuple]:
        base = _ORDER_KEYS[self.name]
        if self.priority is None or tuple(self.priority) == ring.names:
            return base
        perm = tuple(ring.index(v) for v in self.priority)
        if sorted(perm) != list(range(ring.nvars)):
            raise ValueError("priority must list every ring variable once")
        return lambda m: base(tuple(m[i] for i in perm))

    def __str__(self):
        return self.name


def _degrevlex(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def _deglex(m):
    return (sum(m), m)


def _lex(m):
    return m


_ORDER_KEYS = {"degrevlex": _degrevlex, "deglex": _deglex, "lex": _lex}

DEGREVLEX = TermOrder("degrevlex")
LEX = TermOrder("lex")
DEGLEX = TermOrder("deglex")


# ---------------------------------------------------------------------------
# rings


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


@dataclass(frozen=True)
class PolyRing:
    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        for name in self.names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"variable {name!r} not in ring {self.names}") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: as_rational(c)})

    def var(self, name: str) -> "Polynomial":
        exp = [0] * self.nvars
        exp[self.index(name)] = 1
        return Polynomial(self, {tuple(exp): Fraction(1)})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(v) for v in self.names)

    def monomial(self, exp: Sequence[int], coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exp): as_rational(coeff)})

    def extend(self, name: str) -> "PolyRing":
        """Return the ring with ``name`` appended as the last variable."""
        if name in self.names:
            raise VariableClash(f"variable {name!r} already present")
        return PolyRing(self.names + (name,))

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to Fractions."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, Fraction]):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c != 0}
        self._hash = None

    # construction helpers ------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other
        return self.ring.const(other)

    # arithmetic ------------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_rational(other)
            return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # inspection ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def variables(self) -> set[str]:
        used = set()
        for m in self.terms:
            used.update(self.ring.names[i] for i, e in enumerate(m) if e)
        return used

    def leading_monomial(self, order: TermOrder = DEGREVLEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=order.key(self.ring))

    def leading_coefficient(self, order: TermOrder = DEGREVLEX) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: TermOrder = DEGREVLEX) -> "Polynomial":
        return self * (1 / self.leading_coefficient(order))

    # calculus and evaluation ----------------------------------------------
    def diff(self, name: str) -> "Polynomial":
        i = self.ring.index(name)
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                mm = list(m)
                mm[i] -= 1
                out[tuple(mm)] = c * m[i]
        return Polynomial(self.ring, out)

    def evaluate(self, point: Mapping[str, object] | Sequence) -> Fraction:
        """Evaluate at a point given as a name->value mapping or full sequence."""
        if isinstance(point, Mapping):
            values = [as_rational(point.get(v, 0)) for v in self.ring.names]
        else:
            values = [as_rational(v) for v in point]
            if len(values) != self.ring.nvars:
                raise ValueError("point has wrong number of coordinates")
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for v, e in zip(values, m):
                if e:
                    term *= v**e
            total += term
        return total

    def substitute(self, values: Mapping[str, object]) -> "Polynomial":
        """Substitute rational values for some variables; result stays in this ring."""
        idx = {self.ring.index(k): as_rational(v) for k, v in values.items()}
        out: dict = {}
        for m, c in self.terms.items():
            coeff = c
            mm = list(m)
            for i, v in idx.items():
                if mm[i]:
                    coeff *= v ** mm[i]
                    mm[i] = 0
            key = tuple(mm)
            out[key] = out.get(key, 0) + coeff
        return Polynomial(self.ring, out)

    def to_ring(self, ring: PolyRing) -> "Polynomial":
        """Re-embed into a ring containing all variables this polynomial uses."""
        if ring == self.ring:
            return self
        pos = [ring._index.get(v) for v in self.ring.names]
        out = {}
        for m, c in self.terms.items():
            mm = [0] * ring.nvars
            for i, e in enumerate(m):
                if e:
                    if pos[i] is None:
                        raise KeyError(f"variable {self.ring.names[i]!r} missing from target ring")
                    mm[pos[i]] = e
            out[tuple(mm)] = c
        return Polynomial(ring, out)

    # homogenization --------------------------------------------------------
    def homogenize(self, t: str, ring: PolyRing | None = None) -> "Polynomial":
        """Return ``t^d * f(x/t)`` with ``d`` the total degree of ``f``.

        ``ring`` defaults to this ring extended by ``t``.
        """
        ring = ring or self.ring.extend(t)
        ti = ring.index(t)
        if t in self.ring.names:
            raise VariableClash(f"variable {t!r} already present")
        base = self.to_ring(ring)
        d = self.total_degree()
        out = {}
        for m, c in base.terms.items():
            mm = list(m)
            mm[ti] = d - sum(m)
            out[tuple(mm)] = c
        return Polynomial(ring, out)

    def dehomogenize(self, t: str) -> "Polynomial":
        """Set ``t = 1`` and drop it from the ring."""
        ti = self.ring.index(t)
        ring = PolyRing(self.ring.names[:ti] + self.ring.names[ti + 1 :])
        out: dict = {}
        for m, c in self.terms.items():
            key = m[:ti] + m[ti + 1 :]
            out[key] = out.get(key, 0) + c
        return Polynomial(ring, out)

    # display ---------------------------------------------------------------
    def sorted_terms(self, order: TermOrder = DEGREVLEX):
        key = order.key(self.ring)
        return sorted(self.terms.items(), key=lambda mc: key(mc[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.names, m)
                if e
            )
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            sign = "-" if c < 0 else "+"
            if not pieces:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f"{sign} {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


# ---------------------------------------------------------------------------
# parsing

_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_NUMBER = re.compile(r"\d+(?:/\d+)?\Z")
_FACTOR = re.compile(r"([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?\Z")


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse the ``3*x1^2*y3 - 1/2*t`` text format into ``ring``."""
    src = text.strip()
    if not src:
        raise ParseError("empty polynomial")
    if src[0] not in "+-":
        src = "+" + src
    parts = _TERM_SPLIT.split(src)
    # split yields ['', sign, term, sign, term, ...]
    if parts[0].strip():
        raise ParseError(f"cannot parse {text!r}")
    out: dict = {}
    for sign, term in zip(parts[1::2], parts[2::2]):
        if not term:
            raise ParseError(f"dangling sign in {text!r}")
        coeff = Fraction(1)
        exp = [0] * ring.nvars
        for k, factor in enumerate(term.split("*")):
            factor = factor.strip()
            if _NUMBER.match(factor):
                if k != 0:
                    raise ParseError(f"coefficient must lead the term: {term!r}")
                coeff = as_rational(factor)
                continue
            fm = _FACTOR.match(factor)
            if not fm:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            name, power = fm.group(1), int(fm.group(2) or 1)
            try:
                exp[ring.index(name)] += power
            except KeyError as exc:
                raise ParseError(str(exc)) from None
        if sign == "-":
            coeff = -coeff
        key = tuple(exp)
        out[key] = out.get(key, 0) + coeff
    return Polynomial(ring, out)


def common_ring(polys: Iterable[Polynomial]) -> PolyRing:
    rings = {p.ring for p in polys}
    if len(rings) != 1:
        raise ValueError("polynomials must share a single ring")
    return rings.pop()
