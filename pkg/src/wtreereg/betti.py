"""Graded Betti numbers of monomial ideals, computed from scratch.

For each multidegree b in the lcm lattice of the minimal generators, the
upper-Koszul complex K^b(I) = { squarefree sigma <= b : x^(b-sigma) in I }
is the union of the full simplices on F_g = supp(b) \\ {v : g_v = b_v} over
the generators g dividing x^b.  beta_{i,b}(I) is the rank of the reduced
(i-1)-st simplicial homology of K^b, computed exactly over the rationals;
beta_{i,j} sums these over |b| = j.

Most lattice points are cones (some vertex of supp(b) lies in every F_g) and
are skipped by a vectorized filter before any homology is attempted.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import gcd
from typing import Optional

import numpy as np

from .errors import LatticeTooLarge, PartitionInvalid, TooManyGenerators, UndefinedRegularity
from .monomial import MonomialIdeal

MAX_GENERATORS = 48
MAX_LATTICE = 50_000
GUARD_ENV = "WTREEREG_GUARD_LCM"
_CHUNK = 2048
_FACE_CAP = 1 << 21


@dataclass(frozen=True)
class BettiTable:
    """Positive entries (i, j) -> beta_{i,j} of the ideal (not the quotient):
    beta_{0,j} counts degree-j minimal generators."""

    entries: dict[tuple[int, int], int]

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self.entries)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def to_json(self) -> dict:
        return {
            "entries": [
                {"i": i, "j": j, "beta": self.entries[(i, j)]}
                for i, j in sorted(self.entries)
            ],
            "reg": self.reg,
        }


@dataclass(frozen=True)
class RegularityValue:
    reg: int


def _lattice_guard(explicit: Optional[int]) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(GUARD_ENV)
    if env:
        return int(env)
    return MAX_LATTICE


def _exponent_matrix(I: MonomialIdeal) -> tuple[np.ndarray, list[str]]:
    used = set()
    for g in I.generators:
        used |= g.support
    variables = [v for v in I.ambient if v in used]
    E = np.zeros((len(I.generators), len(variables)), dtype=np.int64)
    col = {v: j for j, v in enumerate(variables)}
    for r, g in enumerate(I.generators):
        for v, a in g.exponents.items():
            E[r, col[v]] = a
    return E, variables


def lcm_lattice(I: MonomialIdeal, max_lattice: Optional[int] = None) -> tuple[np.ndarray, list[str]]:
    """All componentwise maxima of nonempty generator subsets, as rows of an
    integer matrix (sorted), plus the variable order of its columns."""
    guard = _lattice_guard(max_lattice)
    E, variables = _exponent_matrix(I)
    if E.shape[0] == 0:
        return np.zeros((0, 0), dtype=np.int64), variables
    rows: list[np.ndarray] = []
    seen: set[bytes] = set()
    for r in E:
        key = r.tobytes()
        if key not in seen:
            seen.add(key)
            rows.append(r.copy())
    frontier = np.array(rows)
    while frontier.size:
        fresh: list[np.ndarray] = []
        for lo in range(0, len(frontier), _CHUNK):
            block = frontier[lo : lo + _CHUNK]
            cand = np.maximum(block[:, None, :], E[None, :, :]).reshape(-1, E.shape[1])
            cand = np.unique(cand, axis=0)
            for r in cand:
                key = r.tobytes()
                if key not in seen:
                    seen.add(key)
                    rows.append(r.copy())
                    fresh.append(r)
                    if len(seen) > guard:
                        raise LatticeTooLarge(
                            f"lcm lattice exceeds guard {guard} (set {GUARD_ENV} to raise it)"
                        )
        frontier = np.array(fresh) if fresh else np.zeros((0, E.shape[1]), dtype=np.int64)
    lattice = np.array(sorted(rows, key=tuple))
    return lattice, variables


def _maximal_masks(masks: list[int]) -> list[int]:
    out: list[int] = []
    for f in sorted(set(masks), key=lambda x: -bin(x).count("1")):
        if not any(f | kept == kept for kept in out):
            out.append(f)
    return out


def _faces_direct(facets: list[int]) -> set[int]:
    faces = {0}
    for f in facets:
        sub = f
        while sub:
            faces.add(sub)
            sub = (sub - 1) & f
        if len(faces) > _FACE_CAP:
            raise LatticeTooLarge("upper-Koszul complex has too many faces")
    return faces


def _faces_nerve(facets: list[int]) -> set[int]:
    """Faces of the nerve of the facet cover; homotopy equivalent to the
    complex because all facet intersections are simplices."""
    faces = {0}
    n = len(facets)

    def rec(mask: int, inter: int, start: int):
        for a in range(start, n):
            ni = inter & facets[a]
            if not ni:
                continue
            nm = mask | (1 << a)
            faces.add(nm)
            if len(faces) > _FACE_CAP:
                raise LatticeTooLarge("nerve complex has too many faces")
            rec(nm, ni, a + 1)

    rec(0, -1, 0)
    return faces


def _int_rank(rows: list[dict[int, int]]) -> int:
    """Rank over Q of a sparse integer matrix, by fraction-free elimination.
    Pivot rows are keyed by their minimum column, so eliminated columns only
    ever move rightward and the reduction terminates."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for original in rows:
        r = {c: v for c, v in original.items() if v}
        while r:
            hit = [c for c in r if c in pivots]
            if not hit:
                break
            c = min(hit)
            p = pivots[c]
            a, b = r[c], p[c]
            g = gcd(a, b)
            mr, mp = b // g, a // g
            new = {k: mr * v for k, v in r.items()}
            for k, v in p.items():
                new[k] = new.get(k, 0) - mp * v
            r = {k: v for k, v in new.items() if v}
        if r:
            g = 0
            for v in r.values():
                g = gcd(g, v)
            if g > 1:
                r = {k: v // g for k, v in r.items()}
            pivots[min(r)] = r
            rank += 1
    return rank


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _homology_contribs(faces: set[int]) -> dict[int, int]:
    """Reduced homology ranks of a simplicial complex given as face bitmasks
    (0 = the empty face).  Returns {s: rank of homology in the degree whose
    chains are the s-vertex faces}, positive entries only."""
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(_popcount(f), []).append(f)
    max_s = max(by_size)
    index: dict[int, dict[int, int]] = {}
    for s, fs in by_size.items():
        fs.sort()
        index[s] = {f: i for i, f in enumerate(fs)}
    ranks: dict[int, int] = {0: 0}
    for s in range(1, max_s + 1):
        rows = []
        lower = index.get(s - 1, {})
        for f in by_size.get(s, []):
            row: dict[int, int] = {}
            sign = 1
            rem = f
            while rem:
                bit = rem & (-rem)
                row[lower[f ^ bit]] = sign
                sign = -sign
                rem ^= bit
            rows.append(row)
        ranks[s] = _int_rank(rows)
    out: dict[int, int] = {}
    for s in range(0, max_s + 1):
        h = len(by_size.get(s, ())) - ranks.get(s, 0) - ranks.get(s + 1, 0)
        if h > 0:
            out[s] = h
    return out


def betti_table(
    I: MonomialIdeal,
    *,
    max_generators: Optional[int] = None,
    max_lattice: Optional[int] = None,
) -> BettiTable:
    if I.is_zero:
        raise UndefinedRegularity("zero ideal has no Betti table")
    maxgen = MAX_GENERATORS if max_generators is None else max_generators
    if len(I.generators) > maxgen:
        raise TooManyGenerators(f"{len(I.generators)} generators exceed guard {maxgen}")
    lattice, _variables = lcm_lattice(I, max_lattice)
    E, _ = _exponent_matrix(I)
    n = E.shape[1]
    entries: dict[tuple[int, int], int] = {}
    for lo in range(0, len(lattice), _CHUNK):
        block = lattice[lo : lo + _CHUNK]
        le = E[None, :, :] <= block[:, None, :]
        div = le.all(axis=2)
        lt = E[None, :, :] < block[:, None, :]
        # a column is a cone apex if it is strict in every divisor
        strict_all = np.all(lt | ~div[:, :, None], axis=1)
        is_cone = (strict_all & (block > 0)).any(axis=1)
        for r in np.nonzero(~is_cone)[0]:
            b = block[r]
            degree = int(b.sum())
            divisors = np.nonzero(div[r])[0]
            masks = []
            for g in divisors:
                strict = lt[r, g]
                mask = 0
                for j in np.nonzero(strict)[0]:
                    mask |= 1 << int(j)
                masks.append(mask)
            facets = _maximal_masks(masks)
            if len(facets) == 1:
                if facets[0] == 0:
                    entries[(0, degree)] = entries.get((0, degree), 0) + 1
                continue
            inter = facets[0]
            for f in facets[1:]:
                inter &= f
            if inter:
                continue
            if len(facets) == 2:
                entries[(1, degree)] = entries.get((1, degree), 0) + 1
                continue
            union = 0
            for f in facets:
                union |= f
            if len(facets) < _popcount(union):
                faces = _faces_nerve(facets)
            else:
                faces = _faces_direct(facets)
            for s, h in _homology_contribs(faces).items():
                entries[(s, degree)] = entries.get((s, degree), 0) + h
    return BettiTable(entries=entries)


def regularity(
    I: MonomialIdeal,
    *,
    max_generators: Optional[int] = None,
    max_lattice: Optional[int] = None,
) -> RegularityValue:
    table = betti_table(I, max_generators=max_generators, max_lattice=max_lattice)
    return RegularityValue(reg=table.reg)


def betti_splitting_check(
    I: MonomialIdeal,
    J: MonomialIdeal,
    K: MonomialIdeal,
    *,
    max_generators: Optional[int] = None,
    max_lattice: Optional[int] = None,
) -> bool:
    gi, gj, gk = set(I.generators), set(J.generators), set(K.generators)
    if not gj or not gk:
        raise PartitionInvalid("both parts of a splitting must be nonempty")
    if gj & gk or gj | gk != gi:
        raise PartitionInvalid("generator sets do not partition the ideal")
    kw = {"max_generators": max_generators, "max_lattice": max_lattice}
    ti = betti_table(I, **kw)
    tj = betti_table(J, **kw)
    tk = betti_table(K, **kw)
    tmix = betti_table(J.intersect(K), **kw)
    keys = set(ti.entries) | set(tj.entries) | set(tk.entries)
    keys |= {(i + 1, j) for i, j in tmix.entries}
    for i, j in keys:
        expected = tj.beta(i, j) + tk.beta(i, j)
        if i >= 1:
            expected += tmix.beta(i - 1, j)
        if ti.beta(i, j) != expected:
            return False
    return True
