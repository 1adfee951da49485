"""Shift orbits of integer intervals and exhaustive maximal rigid sets.

Fix a period ``m``.  An *orbit* is the class of an integer interval under
translation by ``m``; representatives are bounded intervals ``[a, a+len-1]``,
left rays ``(-inf, d]``, and right rays ``[c, +inf)``.  Two orbits are
*obstructed* when some translate of one admits an extension with the other in
either direction (decided by the closed-form ``interval_ext`` over a finite,
sufficient range of shifts); an orbit is *self-rigid* when none of its nonzero
translates obstructs it.

A set of orbits is maximal rigid when its members are self-rigid and pairwise
unobstructed and no further candidate can be added.  Candidates are bounded
orbits of length at most ``m - 1`` (longer ones collide with their own
translates; the enumerator re-verifies this bound and refuses to run if the
table ever disagrees) together with the ``2m`` ray classes.  The
doubly-unbounded line is not a candidate: it is compatible with everything,
belongs to no basic maximal set, and has no finite fold.

The number of maximal rigid sets for period ``m`` is ``2 C(2m-1, m-1)``; the
enumeration here is exhaustive and the count identity is enforced in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import comb

import numpy as np

from shiftrigid.homext import Cyclic, DiscreteInterval, RepSpec, interval_ext, rep_direct_sum


@dataclass(frozen=True, slots=True)
class FiniteOrbit:
    """Orbit of the bounded interval ``[a, a + length - 1]``."""

    a: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError(f"orbit length must be positive, got {self.length}")


@dataclass(frozen=True, slots=True)
class LeftRayOrbit:
    """Orbit of the left ray ``(-inf, d]``."""

    d: int


@dataclass(frozen=True, slots=True)
class RightRayOrbit:
    """Orbit of the right ray ``[c, +inf)``."""

    c: int


Orbit = FiniteOrbit | LeftRayOrbit | RightRayOrbit


def rep_interval(o: Orbit) -> DiscreteInterval:
    if isinstance(o, FiniteOrbit):
        return DiscreteInterval(o.a, o.a + o.length - 1)
    if isinstance(o, LeftRayOrbit):
        return DiscreteInterval(None, o.d)
    return DiscreteInterval(o.c, None)


def shift_orbit(o: Orbit, steps: int) -> Orbit:
    """Translate the representative; does not reduce mod any period."""
    if isinstance(o, FiniteOrbit):
        return FiniteOrbit(o.a + steps, o.length)
    if isinstance(o, LeftRayOrbit):
        return LeftRayOrbit(o.d + steps)
    return RightRayOrbit(o.c + steps)


def normalize_orbit(o: Orbit, m: int) -> Orbit:
    """Reduce the anchor into ``[0, m)``."""
    if isinstance(o, FiniteOrbit):
        return FiniteOrbit(o.a % m, o.length)
    if isinstance(o, LeftRayOrbit):
        return LeftRayOrbit(o.d % m)
    return RightRayOrbit(o.c % m)


def orbit_sort_key(o: Orbit) -> tuple[int, int, int]:
    # Rays sort before bounded orbits; within a class, by anchor then length.
    if isinstance(o, LeftRayOrbit):
        return (0, o.d, 0)
    if isinstance(o, RightRayOrbit):
        return (1, o.c, 0)
    return (2, o.a, o.length)


def orbit_to_json(o: Orbit) -> dict:
    if isinstance(o, FiniteOrbit):
        return {"kind": "fin", "a": o.a, "len": o.length}
    if isinstance(o, LeftRayOrbit):
        return {"kind": "lray", "d": o.d}
    return {"kind": "rray", "c": o.c}


def orbit_from_json(obj: dict) -> Orbit:
    if not isinstance(obj, dict):
        raise ValueError(f"not an orbit object: {obj!r}")
    kind = obj.get("kind")
    if kind == "fin":
        return FiniteOrbit(int(obj["a"]), int(obj["len"]))
    if kind == "lray":
        return LeftRayOrbit(int(obj["d"]))
    if kind == "rray":
        return RightRayOrbit(int(obj["c"]))
    raise ValueError(f"unknown orbit kind {kind!r}")


@dataclass(frozen=True, slots=True)
class OrbitSet:
    """A period together with a canonically sorted, deduplicated orbit tuple."""

    m: int
    orbits: tuple[Orbit, ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"period must be positive, got {self.m}")

    @staticmethod
    def canonical(m: int, orbits) -> "OrbitSet":
        reduced = {normalize_orbit(o, m) for o in orbits}
        return OrbitSet(m, tuple(sorted(reduced, key=orbit_sort_key)))

    def sort_key(self) -> tuple:
        return tuple(orbit_sort_key(o) for o in self.orbits)

    def to_json(self) -> dict:
        return {"m": self.m, "orbits": [orbit_to_json(o) for o in self.orbits]}

    @staticmethod
    def from_json(obj: dict) -> "OrbitSet":
        if not isinstance(obj, dict) or "m" not in obj or "orbits" not in obj:
            raise ValueError("an orbit set needs 'm' and 'orbits'")
        m = int(obj["m"])
        return OrbitSet.canonical(m, [orbit_from_json(o) for o in obj["orbits"]])


def _span(o: Orbit) -> int:
    return o.length if isinstance(o, FiniteOrbit) else 0


def _anchor(o: Orbit) -> int:
    if isinstance(o, FiniteOrbit):
        return o.a
    if isinstance(o, LeftRayOrbit):
        return o.d
    return o.c


def orbit_obstructed(o1: Orbit, o2: Orbit, m: int) -> bool:
    """True iff some period-translate of one extends the other, either way.

    Any contributing translate keeps the two representatives within each
    other's spans, so sweeping ``|k m| <= |anchor gap| + len1 + len2 + 2m``
    is exhaustive; the closed form is translation-covariant, which the tests
    re-check against matrix computations.
    """
    i = rep_interval(o1)
    j = rep_interval(o2)
    kmax = (abs(_anchor(o1) - _anchor(o2)) + _span(o1) + _span(o2) + 2 * m) // m
    for k in range(-kmax, kmax + 1):
        js = j.shifted(k * m)
        if interval_ext(i, js) or interval_ext(js, i):
            return True
    return False


def self_rigid(o: Orbit, m: int) -> bool:
    """True iff no nonzero period-translate of ``o`` obstructs ``o``."""
    i = rep_interval(o)
    kmax = (2 * _span(o) + 2 * m) // m
    for k in range(-kmax, kmax + 1):
        if k == 0:
            continue
        js = i.shifted(k * m)
        if interval_ext(i, js) or interval_ext(js, i):
            return False
    return True


def candidate_pool(m: int) -> list[Orbit]:
    """Every orbit that can belong to a rigid set, canonically ordered."""
    pool: list[Orbit] = [LeftRayOrbit(d) for d in range(m)]
    pool += [RightRayOrbit(c) for c in range(m)]
    pool += [FiniteOrbit(a, length) for a in range(m) for length in range(1, m)]
    return sorted(pool, key=orbit_sort_key)


def _verify_pool_bound(m: int) -> None:
    # The pool keeps only bounded orbits of length <= m-1.  Confirm against
    # the ext table that longer ones are never self-rigid (a window of
    # lengths suffices: the k = 1 translate overlaps for every length >= m)
    # and that every pool member is.  Any disagreement means the closed form
    # and the enumeration have diverged, so refuse to continue.
    for a in range(m):
        for length in range(m, 3 * m + 1):
            if self_rigid(FiniteOrbit(a, length), m):
                raise RuntimeError(
                    f"candidate pool bound violated: length-{length} orbit at {a} "
                    f"is self-rigid for period {m}"
                )


def enumerate_maximal_rigid(m: int) -> list[OrbitSet]:
    """All maximal rigid orbit sets for period ``m``, canonically sorted.

    Depth-first branch and bound over the ordered pool with bitmask
    compatibility rows; a completed branch is kept only when no pool member
    outside it is compatible with all of it.
    """
    _verify_pool_bound(m)
    pool = candidate_pool(m)
    for o in pool:
        if not self_rigid(o, m):
            raise RuntimeError(f"pool member {o} is not self-rigid for period {m}")

    n = len(pool)
    adj = []
    for i in range(n):
        row = 0
        for j in range(n):
            if i != j and not orbit_obstructed(pool[i], pool[j], m):
                row |= 1 << j
        adj.append(row)

    found: list[int] = []

    def extend(clique: int, allowed: int, seen: int) -> None:
        if allowed == 0 and seen == 0:
            found.append(clique)
            return
        while allowed:
            low = allowed & -allowed
            v = low.bit_length() - 1
            extend(clique | low, allowed & adj[v], seen & adj[v])
            allowed ^= low
            seen |= low
        # branches where every remaining candidate is skipped end non-maximal

    extend(0, (1 << n) - 1, 0)

    sets = []
    for mask in found:
        members = [pool[i] for i in range(n) if mask >> i & 1]
        # maximality scan over the full pool, independent of the search state
        for i, cand in enumerate(pool):
            if mask >> i & 1:
                continue
            if all(adj[i] >> j & 1 for j in range(n) if mask >> j & 1):
                raise RuntimeError(f"non-maximal set escaped the search: {members} + {cand}")
        sets.append(OrbitSet(m, tuple(members)))  # pool order is canonical
    sets.sort(key=OrbitSet.sort_key)
    return sets


def count_formula(m: int) -> int:
    """Closed-form number of maximal rigid orbit sets for period ``m``."""
    if m < 1:
        raise ValueError(f"period must be positive, got {m}")
    return 2 * comb(2 * m - 1, m - 1)


def star(o: Orbit, m: int) -> Orbit:
    """Reflect through the origin: exchanges the two ray chiralities."""
    if isinstance(o, FiniteOrbit):
        return FiniteOrbit((-o.a - o.length + 1) % m, o.length)
    if isinstance(o, LeftRayOrbit):
        return RightRayOrbit((-o.d) % m)
    return LeftRayOrbit((-o.c) % m)


def star_set(s: OrbitSet) -> OrbitSet:
    return OrbitSet.canonical(s.m, [star(o, s.m) for o in s.orbits])


def fold_orbit(o: FiniteOrbit, m: int) -> RepSpec:
    """Wrap one bounded orbit onto the cyclic quiver with ``m`` vertices.

    Vertex ``v`` collects the lattice points of ``[a, a+len-1]`` with residue
    ``v``; the arrow into ``v`` sends point ``x`` to ``x + 1`` when both lie
    in the interval and to zero when ``x`` is its right end.
    """
    points = list(range(o.a, o.a + o.length))
    quiver = Cyclic(m)
    basis = {v: [x for x in points if x % m == v] for v in range(m)}
    dims = tuple(len(basis[v]) for v in range(m))
    mats: dict[str, np.ndarray] = {}
    for t, h, name in quiver.arrows():
        mat = np.zeros((dims[h], dims[t]), dtype=np.int64)
        for col, x in enumerate(basis[t]):
            if x + 1 in basis[h]:
                mat[basis[h].index(x + 1), col] = 1
        mats[name] = mat
    return RepSpec(quiver, dims, mats)


def fold_to_cyclic(s: OrbitSet) -> RepSpec:
    """Direct sum of the folds of the bounded orbits of ``s``.

    Rays wrap onto infinitely many lattice points, so a set containing one
    has no finite-dimensional fold.
    """
    for o in s.orbits:
        if not isinstance(o, FiniteOrbit):
            raise ValueError(f"infinite-dimensional fold: {o} is unbounded")
    folds = [fold_orbit(o, s.m) for o in s.orbits]
    if not folds:
        return RepSpec(Cyclic(s.m), (0,) * s.m)
    return reduce(rep_direct_sum, folds)
