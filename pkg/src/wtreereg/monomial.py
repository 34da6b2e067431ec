"""Exact monomial-ideal arithmetic.

Monomials are exponent maps over named variables; ideals are kept in minimal
generator form (no generator divides another).  Ideal equality compares the
minimal generator sets and ignores ambient differences, since extending the
ambient never changes generators.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Mapping, Optional

from .errors import PowerTooLarge
from .wgraph import WeightedGraph

POWER_GUARD = 200_000


class Monomial:
    """Immutable monomial; zero exponents are dropped."""

    __slots__ = ("_exp", "_key", "_hash")

    def __init__(self, exponents: Mapping[str, int] = ()):
        exp = {}
        for v, a in dict(exponents).items():
            if not isinstance(a, int) or a < 0:
                raise ValueError(f"exponent of {v} must be a nonnegative integer, got {a!r}")
            if a:
                exp[v] = a
        self._exp = exp
        self._key = tuple(sorted(exp.items()))
        self._hash = hash(self._key)

    @classmethod
    def one(cls) -> "Monomial":
        return cls({})

    @property
    def exponents(self) -> dict[str, int]:
        return dict(self._exp)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(self._exp)

    def exponent(self, v: str) -> int:
        return self._exp.get(v, 0)

    @property
    def degree(self) -> int:
        return sum(self._exp.values())

    def __mul__(self, other: "Monomial") -> "Monomial":
        exp = dict(self._exp)
        for v, a in other._exp.items():
            exp[v] = exp.get(v, 0) + a
        return Monomial(exp)

    def divides(self, other: "Monomial") -> bool:
        for v, a in self._exp.items():
            if other._exp.get(v, 0) < a:
                return False
        return True

    def lcm(self, other: "Monomial") -> "Monomial":
        exp = dict(self._exp)
        for v, a in other._exp.items():
            if exp.get(v, 0) < a:
                exp[v] = a
        return Monomial(exp)

    def colon(self, other: "Monomial") -> "Monomial":
        """self : other, i.e. exponents max(a - b, 0)."""
        exp = {}
        for v, a in self._exp.items():
            r = a - other._exp.get(v, 0)
            if r > 0:
                exp[v] = r
        return Monomial(exp)

    def sort_key(self):
        return (self.degree, self._key)

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return self._hash

    def __str__(self):
        if not self._exp:
            return "1"
        parts = []
        for v, a in self._key:
            parts.append(v if a == 1 else f"{v}^{a}")
        return "*".join(parts)

    def __repr__(self):
        return f"Monomial({str(self)})"


def minimalize(monomials: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Drop every monomial divisible by another; result sorted by degree then
    exponent key."""
    ms = sorted(set(monomials), key=Monomial.sort_key)
    kept: list[Monomial] = []
    for m in ms:
        if not any(g.divides(m) for g in kept):
            kept.append(m)
    return tuple(kept)


class MonomialIdeal:
    """Monomial ideal in minimal-generator normal form."""

    def __init__(self, ambient: Iterable[str], generators: Iterable[Monomial]):
        amb = list(dict.fromkeys(ambient))
        gens = minimalize(generators)
        used = set()
        for g in gens:
            used |= g.support
        missing = used - set(amb)
        if missing:
            raise ValueError(f"generators use variables outside the ambient: {sorted(missing)}")
        self.ambient: tuple[str, ...] = tuple(amb)
        self.generators: tuple[Monomial, ...] = gens

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def power(self, t: int, guard: int = POWER_GUARD) -> "MonomialIdeal":
        if t < 1:
            raise ValueError("power needs t >= 1")
        if t == 1:
            return self
        if self.is_zero:
            return self
        count = comb(len(self.generators) + t - 1, t)
        if count > guard:
            raise PowerTooLarge(f"{count} products of {len(self.generators)} generators at t={t}")
        prods = []
        for combo in combinations_with_replacement(self.generators, t):
            m = combo[0]
            for g in combo[1:]:
                m = m * g
            prods.append(m)
        return MonomialIdeal(self.ambient, prods)

    def colon(self, m: Monomial) -> "MonomialIdeal":
        return MonomialIdeal(self.ambient, (g.colon(m) for g in self.generators))

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        amb = _merge_ambient(self.ambient, other.ambient)
        gens = [g.lcm(h) for g in self.generators for h in other.generators]
        return MonomialIdeal(amb, gens)

    def add(self, other: "MonomialIdeal") -> "MonomialIdeal":
        amb = _merge_ambient(self.ambient, other.ambient)
        return MonomialIdeal(amb, self.generators + other.generators)

    def with_ambient(self, ambient: Iterable[str]) -> "MonomialIdeal":
        return MonomialIdeal(ambient, self.generators)

    def polarize(self) -> tuple["MonomialIdeal", dict[str, tuple[str, int]]]:
        """Squarefree ideal over split variables `name#k`, plus the provenance
        map new-variable -> (original, k)."""
        peak = {v: 0 for v in self.ambient}
        for g in self.generators:
            for v, a in g.exponents.items():
                if a > peak[v]:
                    peak[v] = a
        new_vars: list[str] = []
        var_map: dict[str, tuple[str, int]] = {}
        for v in self.ambient:
            for k in range(1, max(peak[v], 1) + 1):
                name = f"{v}#{k}"
                new_vars.append(name)
                var_map[name] = (v, k)
        gens = []
        for g in self.generators:
            exp = {}
            for v, a in g.exponents.items():
                for k in range(1, a + 1):
                    exp[f"{v}#{k}"] = 1
            gens.append(Monomial(exp))
        return MonomialIdeal(new_vars, gens), var_map

    def to_json(self) -> dict:
        return {
            "vars": list(self.ambient),
            "gens": [dict(g._key) for g in self.generators],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        gens = [Monomial({v: int(a) for v, a in g.items()}) for g in data.get("gens", [])]
        return cls(data.get("vars", []), gens)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.generators) or "0"
        return f"MonomialIdeal({inner})"


def _merge_ambient(a: tuple[str, ...], b: tuple[str, ...]) -> list[str]:
    out = list(a)
    have = set(a)
    for v in b:
        if v not in have:
            out.append(v)
            have.add(v)
    return out


def edge_ideal(G: WeightedGraph) -> MonomialIdeal:
    """One generator (xy)^w per edge xy of weight w."""
    gens = []
    for u, v in G.edges:
        w = G.weight(u, v)
        gens.append(Monomial({u: w, v: w}))
    return MonomialIdeal(G.vertices, gens)
