"""The Hurwitz braid action, r=4 reduced classes, braid and cusp orbits.

Generators q_i twist adjacent entries; the reduced quotient additionally
mods out Q'' = <(q1 q2 q3)^2, q1 q3^-1>, which acts on inner classes as a
Klein 4-group.  Components are orbits of <gamma_inf, gamma_1> on reduced
classes, with gamma_inf = q2 and gamma_1 = sh; gamma_0 is derived from the
product-one relation gamma_0 gamma_1 gamma_inf = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import perm as P
from .errors import RankNotFour
from .groups import FiniteGroup
from .nielsen import (
    CanonicalContext,
    InnerClass,
    NielsenTuple,
    canonical_context,
)
from .perm import Perm

# A braid word is a sequence of (i, sign) pairs, i the 1-based twist index.
BraidWord = Sequence[tuple[int, int]]


def _twist(group: FiniteGroup, ids: tuple[int, ...], i: int, sign: int) -> tuple[int, ...]:
    """q_i (sign=+1) or its inverse on 0-based position i."""
    a, b = ids[i], ids[i + 1]
    if sign >= 0:
        pair = (group.conj(b, a), a)
    else:
        pair = (b, group.conj(a, group.inv[b]))
    return ids[:i] + pair + ids[i + 2 :]


def apply_braid_ids(
    group: FiniteGroup, ids: tuple[int, ...], word: BraidWord
) -> tuple[int, ...]:
    out = ids
    for i, sign in word:
        if not 1 <= i <= len(ids) - 1:
            raise ValueError(f"braid index q{i} out of range for r={len(ids)}")
        out = _twist(group, out, i - 1, sign)
    return out


def apply_braid(bg: NielsenTuple, word: BraidWord) -> NielsenTuple:
    """Twist the tuple by the word; product and class multiset are preserved."""
    group = bg.group
    out = apply_braid_ids(group, bg.ids, word)
    assert group.word(out) == group.word(bg.ids), "braid broke the product"
    ctx = canonical_context(group)
    assert sorted(ctx.class_min(x) for x in out) == sorted(
        ctx.class_min(x) for x in bg.ids
    ), "braid broke the class multiset"
    return NielsenTuple(group, out)


def _shift_ids(ids: tuple[int, ...]) -> tuple[int, ...]:
    """sh on inner classes: the cyclic shift (g2,...,gr,g1)."""
    return ids[1:] + ids[:1]


def _q13inv_ids(group: FiniteGroup, ids: tuple[int, ...]) -> tuple[int, ...]:
    return _twist(group, _twist(group, ids, 0, +1), 2, -1)


def q2_variants(
    group: FiniteGroup, ctx: CanonicalContext, canon: tuple[int, ...]
) -> frozenset[tuple[int, ...]]:
    """Inner canonicals of the Q''-orbit through the given inner class."""
    out = {canon}
    frontier = [canon]
    while frontier:
        new = []
        for t in frontier:
            for u in (
                _shift_ids(_shift_ids(t)),
                _q13inv_ids(group, t),
            ):
                cu = ctx.canon(u)
                if cu not in out:
                    out.add(cu)
                    new.append(cu)
        frontier = new
    return frozenset(out)


@dataclass(frozen=True)
class ReducedClass:
    """Class under conjugation together with Q'' (r=4 only)."""

    group: FiniteGroup
    canonical: tuple[int, ...]
    inner_canonicals: tuple[tuple[int, ...], ...]
    size: int
    q2_orbit_length: int

    @property
    def tuple(self) -> NielsenTuple:
        return NielsenTuple(self.group, self.canonical)


def reduced_classes(inner: Sequence[InnerClass]) -> list[ReducedClass]:
    """Merge inner classes under Q''; records each Q''-orbit length."""
    if not inner:
        return []
    group = inner[0].group
    if len(inner[0].canonical) != 4:
        raise RankNotFour("reduced classes are defined for r = 4 only")
    ctx = canonical_context(group)
    by_canon = {cls.canonical: cls for cls in inner}
    unseen = set(by_canon)
    out = []
    while unseen:
        start = min(unseen)
        orbit = q2_variants(group, ctx, start)
        missing = orbit - set(by_canon)
        if missing:
            raise AssertionError("Q'' left the supplied inner class list")
        unseen -= orbit
        members = tuple(sorted(orbit))
        out.append(
            ReducedClass(
                group,
                members[0],
                members,
                sum(by_canon[t].orbit_size for t in members),
                len(members),
            )
        )
    out.sort(key=lambda c: c.canonical)
    return out


def reduced_canonical(
    group: FiniteGroup, ctx: CanonicalContext, ids: tuple[int, ...]
) -> tuple[int, ...]:
    return min(q2_variants(group, ctx, ctx.canon(ids)))


class BraidOrbit:
    """Orbit of <gamma_inf, gamma_1> on reduced classes (one component)."""

    def __init__(self, group: FiniteGroup, classes: Sequence[ReducedClass]):
        self.group = group
        self.classes = tuple(sorted(classes, key=lambda c: c.canonical))
        self.members = tuple(c.canonical for c in self.classes)
        self._index = {t: i for i, t in enumerate(self.members)}
        ctx = canonical_context(group)
        n = len(self.members)
        self.gamma_inf: Perm = tuple(
            self._index[reduced_canonical(group, ctx, _twist(group, t, 1, +1))]
            for t in self.members
        )
        self.gamma_1: Perm = tuple(
            self._index[reduced_canonical(group, ctx, _shift_ids(t))]
            for t in self.members
        )
        self.gamma_0: Perm = P.inverse(P.compose(self.gamma_1, self.gamma_inf))

    @property
    def size(self) -> int:
        return len(self.members)

    def gamma_perms(self) -> dict[str, Perm]:
        return {
            "gamma_0": self.gamma_0,
            "gamma_1": self.gamma_1,
            "gamma_inf": self.gamma_inf,
        }

    def index_of(self, canonical: tuple[int, ...]) -> int:
        return self._index[canonical]

    def q2_lengths(self) -> list[int]:
        return [c.q2_orbit_length for c in self.classes]


def braid_orbits(reduced: Sequence[ReducedClass]) -> list[BraidOrbit]:
    """Partition reduced classes into components; deterministic order."""
    if not reduced:
        return []
    group = reduced[0].group
    if len(reduced[0].canonical) != 4:
        raise RankNotFour("braid orbits on reduced classes need r = 4")
    ctx = canonical_context(group)
    by_canon = {c.canonical: c for c in reduced}
    unseen = set(by_canon)
    orbits = []
    while unseen:
        start = min(unseen)
        seen = {start}
        frontier = [start]
        while frontier:
            new = []
            for t in frontier:
                for u in (
                    reduced_canonical(group, ctx, _twist(group, t, 1, +1)),
                    reduced_canonical(group, ctx, _shift_ids(t)),
                ):
                    if u not in seen:
                        if u not in by_canon:
                            raise AssertionError(
                                "braid action left the reduced class list"
                            )
                        seen.add(u)
                        new.append(u)
            frontier = new
        unseen -= seen
        orbits.append(BraidOrbit(group, [by_canon[t] for t in seen]))
    orbits.sort(key=lambda o: (-o.size, o.members[0]))
    return orbits


class H3Orbit:
    """Orbit of H_3 = <q1, q2> on inner classes (r = 3; no reduction)."""

    def __init__(self, group: FiniteGroup, classes: Sequence[InnerClass]):
        self.group = group
        self.classes = tuple(sorted(classes, key=lambda c: c.canonical))
        self.members = tuple(c.canonical for c in self.classes)

    @property
    def size(self) -> int:
        return len(self.members)


def braid_orbits_r3(inner: Sequence[InnerClass]) -> list[H3Orbit]:
    if not inner:
        return []
    group = inner[0].group
    if len(inner[0].canonical) != 3:
        raise ValueError("H3 orbit mode needs r = 3")
    ctx = canonical_context(group)
    by_canon = {c.canonical: c for c in inner}
    unseen = set(by_canon)
    orbits = []
    while unseen:
        start = min(unseen)
        seen = {start}
        frontier = [start]
        while frontier:
            new = []
            for t in frontier:
                for word_pos in (0, 1):
                    u = ctx.canon(_twist(group, t, word_pos, +1))
                    if u not in seen:
                        if u not in by_canon:
                            raise AssertionError(
                                "braid action left the inner class list"
                            )
                        seen.add(u)
                        new.append(u)
            frontier = new
        unseen -= seen
        orbits.append(H3Orbit(group, [by_canon[t] for t in seen]))
    orbits.sort(key=lambda o: (-o.size, o.members[0]))
    return orbits


def absolute_reduced_classes(
    reduced: Sequence[ReducedClass], autos
) -> list[list[ReducedClass]]:
    """Merge reduced classes under entrywise automorphisms (absolute-reduced)."""
    if not reduced:
        return []
    group = reduced[0].group
    ctx = canonical_context(group)
    by_canon = {c.canonical: c for c in reduced}
    unseen = set(by_canon)
    buckets = []
    while unseen:
        start = min(unseen)
        orbit = {start}
        frontier = [start]
        while frontier:
            new = []
            for t in frontier:
                for a in autos:
                    u = reduced_canonical(
                        group, ctx, tuple(a.apply_id(x) for x in t)
                    )
                    if u not in orbit:
                        if u not in by_canon:
                            raise AssertionError(
                                "automorphism left the reduced class list"
                            )
                        orbit.add(u)
                        new.append(u)
            frontier = new
        unseen -= orbit
        buckets.append([by_canon[t] for t in sorted(orbit)])
    buckets.sort(key=lambda b: b[0].canonical)
    return buckets


@dataclass(frozen=True)
class CuspOrbit:
    """A gamma_inf orbit inside one braid orbit; its size is the width."""

    orbit: BraidOrbit
    member_canonicals: tuple[tuple[int, ...], ...]

    @property
    def width(self) -> int:
        return len(self.member_canonicals)

    @property
    def group(self) -> FiniteGroup:
        return self.orbit.group


def cusp_orbits(orbit: BraidOrbit) -> list[CuspOrbit]:
    """gamma_inf cycles, each one cusp; ordered by least member canonical."""
    out = []
    for cyc in P.cycles(orbit.gamma_inf):
        members = tuple(sorted(orbit.members[i] for i in cyc))
        out.append(CuspOrbit(orbit, members))
    out.sort(key=lambda c: c.member_canonicals[0])
    return out
