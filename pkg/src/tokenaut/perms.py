"""Permutations and deterministic Schreier-Sims stabilizer chains.

Composition is fixed as (p * q)(i) = p(q(i)): the right factor acts
first, matching ordinary function composition. All group orders are exact
Python integers. The chain construction is deterministic (no randomized
filtering): base points are the first moved points of the residues that
create each level, and two runs on the same generator list produce the
same base, the same order, and the same membership verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


@lru_cache(maxsize=None)
def _id_images(n: int) -> tuple[int, ...]:
    return tuple(range(n))


@dataclass(frozen=True)
class Permutation:
    """Permutation of 0..n-1 stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def _raw(cls, images: tuple[int, ...]) -> "Permutation":
        """Skip validation; products and inverses of valid permutations
        are again valid, and chain construction does millions of them."""
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation._raw(_id_images(n))

    @staticmethod
    def from_cycles(n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        images = list(range(n))
        seen = set()
        for cyc in cycles:
            for i, v in enumerate(cyc):
                if not 0 <= v < n:
                    raise ValueError(f"cycle point {v} out of range 0..{n - 1}")
                if v in seen:
                    raise ValueError(f"point {v} appears twice across cycles")
                seen.add(v)
                images[v] = cyc[(i + 1) % len(cyc)]
        return Permutation(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """(p * q)(i) = p(q(i)); q acts first."""
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch in composition")
        s = self.images
        return Permutation._raw(tuple([s[i] for i in other.images]))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation._raw(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == _id_images(len(self.images))

    def min_moved(self) -> int | None:
        for i, v in enumerate(self.images):
            if i != v:
                return i
        return None

    def image_of_set(self, members: Iterable[int]) -> frozenset[int]:
        return frozenset(self.images[v] for v in members)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * len(self.images)
        out = []
        for i in range(len(self.images)):
            if seen[i] or self.images[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return f"<id on {self.degree}>"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Composition with q acting first: compose(p, q)(i) = p(q(i))."""
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def permutation_to_str(p: Permutation) -> str:
    """One-line image array, e.g. '[1,2,0]'."""
    return "[" + ",".join(map(str, p.images)) + "]"


def permutation_from_str(s: str) -> Permutation:
    body = s.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"expected '[i0,i1,...]', got {s!r}")
    inner = body[1:-1].strip()
    images = tuple(int(t) for t in inner.split(",")) if inner else ()
    return Permutation(images)


class _Level:
    """One stabilizer-chain level: a base point, the strong generators that
    entered at this level, and the transversal u[x] with u[x](point) = x."""

    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[Permutation] = []
        self.transversal: dict[int, Permutation] = {}


class PermGroup:
    """Permutation group with a deterministic Schreier-Sims chain."""

    def __init__(self, degree: int, generators: Iterable[Permutation] = ()):
        self.degree = degree
        gens = []
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != group degree {degree}")
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self._levels: list[_Level] = []
        self._identity = Permutation.identity(degree)
        for g in self.generators:
            self._add(g)

    # -- chain construction -----------------------------------------

    def _strong_gens(self, i: int) -> list[Permutation]:
        """Generators of the i-th stabilizer group (those entered at >= i)."""
        out = []
        for lv in self._levels[i:]:
            out.extend(lv.gens)
        return out

    def _sift(self, p: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Strip p through the chain; returns (residue, failing level)."""
        for i in range(start, len(self._levels)):
            lv = self._levels[i]
            x = p(lv.point)
            u = lv.transversal.get(x)
            if u is None:
                return p, i
            p = u.inverse() * p
        return p, len(self._levels)

    def _add(self, p: Permutation) -> None:
        residue, i = self._sift(p)
        if residue.is_identity():
            return
        if i == len(self._levels):
            self._levels.append(_Level(residue.min_moved()))
        self._levels[i].gens.append(residue)
        self._sweep(i)

    def _rebuild_orbit(self, i: int) -> list[int]:
        """BFS transversal at level i; returns points in discovery order."""
        lv = self._levels[i]
        gens = self._strong_gens(i)
        lv.transversal = {lv.point: self._identity}
        found = [lv.point]
        frontier = [lv.point]
        while frontier:
            nxt = []
            for x in frontier:
                ux = lv.transversal[x]
                for g in gens:
                    y = g(x)
                    if y not in lv.transversal:
                        lv.transversal[y] = g * ux
                        nxt.append(y)
                        found.append(y)
            frontier = nxt
        return found

    def _sweep(self, top: int) -> None:
        """Re-verify levels 0..top until the chain invariant holds again.

        A residue placed at level j enlarges the generator set of every
        level <= j and leaves deeper levels untouched, so only those levels
        are dirtied. Dirty levels are processed deepest first and a pass is
        restarted whenever it inserts a residue, so each sift runs against
        a chain that is already verified below the current level. The chain
        is correct once no Schreier generator of any level fails to sift.
        """
        dirty = set(range(top + 1))
        while dirty:
            i = max(dirty)
            lv = self._levels[i]
            gens = self._strong_gens(i)
            inserted = -1
            for x in self._rebuild_orbit(i):
                ux = lv.transversal[x]
                for g in gens:
                    t = g * ux
                    u = lv.transversal[t.images[lv.point]]  # t(point) = g(x)
                    if t == u:
                        continue
                    residue, j = self._sift(u.inverse() * t, i + 1)
                    if residue.is_identity():
                        continue
                    if j == len(self._levels):
                        self._levels.append(_Level(residue.min_moved()))
                    self._levels[j].gens.append(residue)
                    inserted = j
                    break
                if inserted >= 0:
                    break
            if inserted >= 0:
                dirty.update(range(inserted + 1))
            else:
                dirty.discard(i)

    # -- queries ------------------------------------------------------

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lv.point for lv in self._levels)

    def order(self) -> int:
        total = 1
        for lv in self._levels:
            total *= len(lv.transversal)
        return total

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ValueError(f"degree mismatch: {p.degree} vs {self.degree}")
        residue, _ = self._sift(p)
        return residue.is_identity()

    def elements(self) -> Iterator[Permutation]:
        """All group elements (intended for small groups only)."""

        def rec(i: int) -> Iterator[Permutation]:
            if i == len(self._levels):
                yield self._identity
                return
            for u in self._levels[i].transversal.values():
                for tail in rec(i + 1):
                    yield u * tail

        return rec(0)

    def orbit(self, point: int) -> frozenset[int]:
        seen = {point}
        frontier = [point]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.generators:
                    y = g(x)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def to_report(self) -> dict:
        """Structured description: degree, generators, base, decimal order."""
        return {
            "degree": self.degree,
            "generators": [permutation_to_str(g) for g in self.generators],
            "base": list(self.base),
            "order": str(self.order()),
        }

    def __repr__(self):
        return f"<PermGroup degree={self.degree} order={self.order()}>"


def schreier_sims(generators: Iterable[Permutation], degree: int | None = None) -> PermGroup:
    """Group generated by ``generators`` with a verified stabilizer chain."""
    gens = list(generators)
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generator list")
        degree = gens[0].degree
    return PermGroup(degree, gens)


def is_subgroup(h: PermGroup, g: PermGroup) -> bool:
    """True iff every generator of h sifts to identity in g's chain."""
    if h.degree != g.degree:
        raise ValueError(f"degree mismatch: {h.degree} vs {g.degree}")
    return all(g.contains(p) for p in h.generators)
