"""Periodic interval representations with one twin family per gap.

The continuous line carries ``n`` grid points per unit period (grid point
``a_i`` at index ``i``, shifted by ``a_{i+n} = a_i + 1``).  The
representations handled here decompose into

* *grid orbits*: translation classes of intervals whose finite endpoints are
  grid points (rays and the doubly-unbounded line included), and
* *families*: for each of the ``n`` gaps between consecutive grid points, a
  twin pair of interval classes through every interior point ``x`` of the
  gap.  The twins share one fixed *far* end (a grid point, or unbounded) with
  a fixed open/closed boundary and differ only at ``x``, where one member is
  closed and the other open.  A family points ``left`` (far end at or below
  the gap) or ``right`` (far end above it).

Such a representation is *rigid* when all summands are pairwise compatible
under every power of the unit translation; because compatibility only
depends on the relative order of endpoints, checking two sample points per
gap decides the whole continuum.  Validation re-derives, at each sample
point, the four left and four right attachment sets (far ends of summands
reaching the point, keyed by the two boundary flags) and checks that they
pair into twins, contain only grid or unbounded far ends, and select exactly
one family per gap, uniformly across the gap.

The whole structure transcribes onto a doubled index lattice (period
``2n``): a closed endpoint at grid index ``i`` becomes lattice point ``2i``,
an open one moves a half step into its gap, and families vanish.  The
transcription sends rigid maximal representations onto maximal rigid orbit
sets of the lattice, and every lattice set lifts back in exactly ``2^n``
ways (one choice of direction per gap, each with a forced far end).  That
yields the exhaustive census: ``2^(n+1) * C(4n-1, 2n-1)`` classes, checked
against the closed form in the acceptance suite.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from shiftrigid.intervals import NEG_INF, POS_INF, Endpoint, Interval, is_compatible
from shiftrigid.orbits import (
    FiniteOrbit,
    LeftRayOrbit,
    Orbit,
    OrbitSet,
    RightRayOrbit,
    enumerate_maximal_rigid,
)

SAMPLE_OFFSETS = (Fraction(1, 3), Fraction(2, 3))


class FiberAnomaly(RuntimeError):
    """The family completion over a lattice set is not unique as promised."""


@dataclass(frozen=True, slots=True)
class GridOrbit:
    """Translation class of an interval with grid-point (or unbounded) ends.

    ``None`` marks an unbounded side; unbounded sides are open.  Anchors are
    arbitrary integers; reduction into the fundamental window is explicit
    (`normalized`), so raw translates can be compared in tests.
    """

    lo: int | None
    lo_closed: bool
    hi: int | None
    hi_closed: bool

    def __post_init__(self) -> None:
        if self.lo is None and self.lo_closed:
            object.__setattr__(self, "lo_closed", False)
        if self.hi is None and self.hi_closed:
            object.__setattr__(self, "hi_closed", False)
        if self.lo is not None and self.hi is not None:
            if self.lo > self.hi:
                raise ValueError(f"empty grid interval: {self.lo} above {self.hi}")
            if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
                raise ValueError("a single-point grid interval must be closed on both sides")

    def interval(self) -> Interval:
        lo = NEG_INF if self.lo is None else Endpoint.grid(self.lo)
        hi = POS_INF if self.hi is None else Endpoint.grid(self.hi)
        return Interval(lo, self.lo_closed, hi, self.hi_closed)

    def translated(self, steps: int) -> "GridOrbit":
        lo = None if self.lo is None else self.lo + steps
        hi = None if self.hi is None else self.hi + steps
        return GridOrbit(lo, self.lo_closed, hi, self.hi_closed)

    def normalized(self, n: int) -> "GridOrbit":
        anchor = self.lo if self.lo is not None else self.hi
        if anchor is None:
            return self
        return self.translated(anchor % n - anchor)

    def sort_key(self) -> tuple:
        if self.lo is None and self.hi is None:
            return (3, 0, 0, 0, 0)
        if self.lo is None:
            return (0, self.hi, int(self.hi_closed), 0, 0)
        if self.hi is None:
            return (1, self.lo, int(self.lo_closed), 0, 0)
        return (2, self.lo, int(self.lo_closed), self.hi, int(self.hi_closed))

    def to_json(self) -> dict:
        out: dict = {}
        out["lo"] = "ninf" if self.lo is None else self.lo
        if self.lo is not None:
            out["lo_closed"] = self.lo_closed
        out["hi"] = "pinf" if self.hi is None else self.hi
        if self.hi is not None:
            out["hi_closed"] = self.hi_closed
        return out

    @staticmethod
    def from_json(obj: dict) -> "GridOrbit":
        if not isinstance(obj, dict):
            raise ValueError(f"not a grid orbit object: {obj!r}")

        def end(key: str, token: str) -> int | None:
            v = obj.get(key)
            if v == token:
                return None
            if isinstance(v, bool) or not isinstance(v, int):
                raise ValueError(f"grid orbit {key} must be an integer or {token!r}, got {v!r}")
            return v

        lo = end("lo", "ninf")
        hi = end("hi", "pinf")
        return GridOrbit(lo, bool(obj.get("lo_closed", False)), hi, bool(obj.get("hi_closed", False)))


@dataclass(frozen=True, slots=True)
class FamilySpec:
    """One twin family: anchor gap, direction, and the shared far end.

    ``far`` is a grid index, ``None`` for the unbounded end on the family's
    side, or (only to let the validator reject it) a non-integer rational
    position in grid units.  ``far_closed`` is the twins' shared boundary at
    the far end; unbounded far ends are open.
    """

    gap: int
    direction: str
    far: int | Fraction | None
    far_closed: bool

    def __post_init__(self) -> None:
        if self.direction not in ("left", "right"):
            raise ValueError(f"family direction must be 'left' or 'right', got {self.direction!r}")
        if isinstance(self.far, Fraction) and self.far.denominator == 1:
            object.__setattr__(self, "far", int(self.far))
        if self.far is None and self.far_closed:
            object.__setattr__(self, "far_closed", False)

    def far_endpoint(self) -> Endpoint:
        if self.far is None:
            return POS_INF if self.direction == "right" else NEG_INF
        if isinstance(self.far, int):
            return Endpoint.grid(self.far)
        i = self.far.numerator // self.far.denominator
        return Endpoint.gap(i, self.far - i)

    def members(self, t: Fraction) -> tuple[Interval, Interval]:
        """The twins through the gap point at offset ``t``: closed, then open."""
        x = Endpoint.gap(self.gap, t)
        far = self.far_endpoint()
        if self.direction == "right":
            return (
                Interval(x, True, far, self.far_closed),
                Interval(x, False, far, self.far_closed),
            )
        return (
            Interval(far, self.far_closed, x, True),
            Interval(far, self.far_closed, x, False),
        )

    def sort_key(self) -> tuple:
        far_key = (0, Fraction(0)) if self.far is None else (1, Fraction(self.far))
        return (self.gap, 0 if self.direction == "left" else 1, *far_key, int(self.far_closed))

    def to_json(self) -> dict:
        out: dict = {"gap": self.gap, "dir": self.direction}
        if self.far is None:
            out["far"] = "pinf" if self.direction == "right" else "ninf"
        elif isinstance(self.far, int):
            out["far"] = self.far
            out["far_closed"] = self.far_closed
        else:
            out["far"] = str(self.far)
            out["far_closed"] = self.far_closed
        return out

    @staticmethod
    def from_json(obj: dict) -> "FamilySpec":
        if not isinstance(obj, dict):
            raise ValueError(f"not a family object: {obj!r}")
        try:
            gap = int(obj["gap"])
            direction = str(obj["dir"])
            raw = obj["far"]
        except KeyError as exc:
            raise ValueError(f"family object missing key {exc}") from exc
        far: int | Fraction | None
        if raw in ("ninf", "pinf"):
            far = None
        elif isinstance(raw, bool):
            raise ValueError(f"family far must be an index, rational, or infinity token, got {raw!r}")
        elif isinstance(raw, int):
            far = raw
        elif isinstance(raw, str):
            far = Fraction(raw)
        else:
            raise ValueError(f"family far must be an index, rational, or infinity token, got {raw!r}")
        return FamilySpec(gap, direction, far, bool(obj.get("far_closed", False)))


@dataclass(frozen=True, slots=True)
class AlphaRep:
    """A representation given by grid orbits plus one family list.

    Orbits are reduced into the fundamental window and sorted on
    construction; families are sorted by gap.  Families are *not* forced to
    be one per gap here; that is what validation decides.
    """

    n: int
    orbits: tuple[GridOrbit, ...]
    families: tuple[FamilySpec, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one grid point per period, got n={self.n}")
        object.__setattr__(
            self, "orbits", tuple(sorted((o.normalized(self.n) for o in self.orbits), key=GridOrbit.sort_key))
        )
        object.__setattr__(self, "families", tuple(sorted(self.families, key=FamilySpec.sort_key)))

    def sort_key(self) -> tuple:
        return (
            tuple(o.sort_key() for o in self.orbits),
            tuple(f.sort_key() for f in self.families),
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "orbits": [o.to_json() for o in self.orbits],
            "families": [f.to_json() for f in self.families],
        }

    @staticmethod
    def from_json(obj: dict) -> "AlphaRep":
        if not isinstance(obj, dict) or not {"n", "orbits", "families"} <= set(obj):
            raise ValueError("a representation needs 'n', 'orbits' and 'families'")
        return AlphaRep(
            int(obj["n"]),
            tuple(GridOrbit.from_json(o) for o in obj["orbits"]),
            tuple(FamilySpec.from_json(f) for f in obj["families"]),
        )


# -- rigidity under all translates -------------------------------------------


@lru_cache(maxsize=None)
def _compatible_all_shifts(a: Interval, b: Interval, n: int) -> bool:
    """Compatibility of the translation classes of ``a`` and ``b``.

    Only translates whose endpoint data interleave can fail, so sweeping
    relative shifts ``k*n`` with ``|k| <= span // n + 2`` is exhaustive,
    where ``span`` bounds the spread of the finite endpoint indices.
    """
    finite = [e.index for e in (a.lo, a.hi, b.lo, b.hi) if e.is_finite]
    span = (max(finite) - min(finite)) if finite else 0
    kmax = span // n + 2
    for k in range(-kmax, kmax + 1):
        if not is_compatible(a, b.shifted(k * n)):
            return False
    return True


def _rigidity_items(rep: AlphaRep, offsets: tuple[Fraction, ...]) -> list[Interval]:
    items = [o.interval() for o in rep.orbits]
    for fam in rep.families:
        for t in offsets:
            items.extend(fam.members(t))
    return items


def alpha_first_obstruction(
    rep: AlphaRep, offsets: tuple[Fraction, ...] = SAMPLE_OFFSETS
) -> tuple[Interval, Interval] | None:
    """A pair of summand classes with colliding translates, if any.

    Meaningful for representations that pass validation; the sample offsets
    pin the finitely many interval shapes that stand for the continuum of
    family members.
    """
    items = _rigidity_items(rep, offsets)
    for i, a in enumerate(items):
        for b in items[i:]:
            x, y = (a, b) if a.sort_key() <= b.sort_key() else (b, a)
            if not _compatible_all_shifts(x, y, rep.n):
                return (a, b)
    return None


def alpha_is_rigid(rep: AlphaRep, offsets: tuple[Fraction, ...] = SAMPLE_OFFSETS) -> bool:
    """True iff all summand classes are pairwise compatible under translation."""
    return alpha_first_obstruction(rep, offsets) is None


# -- validation ---------------------------------------------------------------


def _structural_violations(rep: AlphaRep) -> list[str]:
    out = []
    if len(set(rep.orbits)) != len(rep.orbits):
        out.append("repeated grid orbit")
    if len(set(rep.families)) != len(rep.families):
        out.append("repeated family")
    for fam in rep.families:
        if not 0 <= fam.gap < rep.n:
            out.append(f"family gap {fam.gap} outside 0..{rep.n - 1}")
            continue
        if fam.far is None:
            continue
        pos = Fraction(fam.far)
        if fam.gap < pos < fam.gap + 1:
            out.append(f"family at gap {fam.gap}: far end {fam.far} lies inside its own gap")
        elif fam.direction == "right" and pos <= fam.gap:
            out.append(f"right family at gap {fam.gap} must reach past the gap, far end is {fam.far}")
        elif fam.direction == "left" and pos > fam.gap:
            out.append(f"left family at gap {fam.gap} must reach at most the gap's floor, far end is {fam.far}")
    return out


def _attachment_sets(items: list[Interval], c: Endpoint) -> dict[str, frozenset]:
    """Far ends of the items clamped to ``c``, keyed by side and boundaries.

    ``r``/``l``: the item starts/ends at ``c``.  The two flags are the near
    boundary (at ``c``) and the far boundary.  Far ends are endpoint keys, so
    unbounded and non-grid ends are first-class members.
    """
    sets: dict[str, set] = {f"{side}{near}{far}": set() for side in "rl" for near in "co" for far in "co"}
    for it in items:
        if it.lo.key() == c.key():
            near = "c" if it.lo_closed else "o"
            far = "c" if it.hi_closed else "o"
            sets[f"r{near}{far}"].add(it.hi.key())
        if it.hi.key() == c.key():
            near = "c" if it.hi_closed else "o"
            far = "c" if it.lo_closed else "o"
            sets[f"l{near}{far}"].add(it.lo.key())
    return {k: frozenset(v) for k, v in sets.items()}


def validate_type_alpha(rep: AlphaRep) -> tuple[bool, list[str]]:
    """Check the shape: grid-anchored twin families, exactly one per gap.

    At two sample points of every gap, the summands reaching the point must
    pair into twins (same far end and far boundary, near end once closed and
    once open), every finite far end must be a grid point, the total number
    of families through the point must be one, and both sample points must
    agree (uniformity across the gap).  Violations are reported as text.
    """
    violations = _structural_violations(rep)
    if violations:
        return (False, violations)

    items = [o.interval() for o in rep.orbits]
    for fam in rep.families:
        for t in SAMPLE_OFFSETS:
            items.extend(fam.members(t))
    # Only endpoints exactly at a sample point matter below, and translates
    # of grid orbits or of another gap's members never land on one, so the
    # untranslated item list is the whole story.

    grid_keys = None  # far ends must satisfy: finite => offset 0
    for gap in range(rep.n):
        per_sample = []
        for t in SAMPLE_OFFSETS:
            c = Endpoint.gap(gap, t)
            sets = _attachment_sets(items, c)
            # Twins toggle the boundary at c and share the far one, so the
            # closed-at-c and open-at-c sets must agree for each far flag.
            for a, b in (("rcc", "roc"), ("rco", "roo"), ("lcc", "loc"), ("lco", "loo")):
                if sets[a] != sets[b]:
                    lone = sets[a] ^ sets[b]
                    violations.append(
                        f"gap {gap}: summands through {c} are not twinned; unpaired far ends {sorted(lone)}"
                    )
            for vals in sets.values():
                for key in vals:
                    band, _, offset = key
                    if band == 1 and offset != 0:
                        violations.append(f"gap {gap}: far end at {key[1]}+{offset} is not a grid point")
            count = len(sets["rcc"]) + len(sets["rco"]) + len(sets["lcc"]) + len(sets["lco"])
            if count != 1:
                violations.append(f"gap {gap}: {count} families through {c}, need exactly 1")
            per_sample.append(sets)
        if per_sample[0] != per_sample[1]:
            violations.append(f"gap {gap}: family structure differs across the gap")
    violations = list(dict.fromkeys(violations))
    return (not violations, violations)


# -- lattice transcription ----------------------------------------------------


def _lattice_lo(index: int, closed: bool) -> int:
    return 2 * index if closed else 2 * index + 1


def _lattice_hi(index: int, closed: bool) -> int:
    return 2 * index if closed else 2 * index - 1


def tau(rep: AlphaRep) -> OrbitSet:
    """Transcribe the grid orbits onto the doubled lattice; drop families.

    Closed endpoints keep their doubled index; open ones move one lattice
    step into the gap.  Duplicate images collapse (the result is a set).
    """
    images: list[Orbit] = []
    for o in rep.orbits:
        if o.lo is None and o.hi is None:
            raise ValueError("the doubly-unbounded orbit has no lattice transcription")
        if o.lo is None:
            images.append(LeftRayOrbit(_lattice_hi(o.hi, o.hi_closed)))
        elif o.hi is None:
            images.append(RightRayOrbit(_lattice_lo(o.lo, o.lo_closed)))
        else:
            a = _lattice_lo(o.lo, o.lo_closed)
            b = _lattice_hi(o.hi, o.hi_closed)
            images.append(FiniteOrbit(a, b - a + 1))
    return OrbitSet.canonical(2 * rep.n, images)


def _grid_orbit_from_lattice(o: Orbit, n: int) -> GridOrbit:
    def lo_end(a: int) -> tuple[int, bool]:
        return (a // 2, True) if a % 2 == 0 else ((a - 1) // 2, False)

    def hi_end(b: int) -> tuple[int, bool]:
        return (b // 2, True) if b % 2 == 0 else ((b + 1) // 2, False)

    if isinstance(o, LeftRayOrbit):
        hi, hc = hi_end(o.d)
        g = GridOrbit(None, False, hi, hc)
    elif isinstance(o, RightRayOrbit):
        lo, lc = lo_end(o.c)
        g = GridOrbit(lo, lc, None, False)
    else:
        lo, lc = lo_end(o.a)
        hi, hc = hi_end(o.a + o.length - 1)
        g = GridOrbit(lo, lc, hi, hc)
    return g.normalized(n)


def _family_fits(fam: FamilySpec, orbit_intervals: list[Interval], n: int) -> bool:
    members = [iv for t in SAMPLE_OFFSETS for iv in fam.members(t)]
    for i, a in enumerate(members):
        for b in members[i:]:
            x, y = (a, b) if a.sort_key() <= b.sort_key() else (b, a)
            if not _compatible_all_shifts(x, y, n):
                return False
    for a in members:
        for b in orbit_intervals:
            x, y = (a, b) if a.sort_key() <= b.sort_key() else (b, a)
            if not _compatible_all_shifts(x, y, n):
                return False
    return True


def expand_fibers(s: OrbitSet, n: int) -> list[AlphaRep]:
    """All representations transcribing onto the maximal rigid set ``s``.

    The grid part is forced (inverse transcription).  For each gap and each
    direction there must be exactly one far end and boundary whose family
    stays rigid against the grid part; anything else is reported as a
    ``FiberAnomaly``.  One family choice per gap gives ``2^n`` results, each
    re-checked for rigidity and for projecting back onto ``s``.
    """
    if s.m != 2 * n:
        raise ValueError(f"lattice period {s.m} does not double the grid count {n}")
    grid = tuple(_grid_orbit_from_lattice(o, n) for o in s.orbits)
    orbit_intervals = [g.interval() for g in grid]

    chosen: dict[tuple[int, str], FamilySpec] = {}
    for gap in range(n):
        for direction in ("left", "right"):
            if direction == "right":
                fars: list[tuple[int | None, bool]] = [
                    (f, c) for f in range(gap + 1, gap + 2 * n + 1) for c in (True, False)
                ]
            else:
                fars = [(f, c) for f in range(gap - 2 * n, gap + 1) for c in (True, False)]
            fars.append((None, False))
            fits = [
                FamilySpec(gap, direction, far, fc)
                for far, fc in fars
                if _family_fits(FamilySpec(gap, direction, far, fc), orbit_intervals, n)
            ]
            if len(fits) != 1:
                raise FiberAnomaly(
                    f"gap {gap}, direction {direction}: {len(fits)} rigid family completions "
                    f"over {s.to_json()}, expected exactly 1"
                )
            chosen[(gap, direction)] = fits[0]

    out = []
    for combo in itertools.product(("left", "right"), repeat=n):
        rep = AlphaRep(n, grid, tuple(chosen[(gap, combo[gap])] for gap in range(n)))
        if not alpha_is_rigid(rep):
            raise FiberAnomaly(f"assembled representation over {s.to_json()} is not rigid")
        if tau(rep) != s:
            raise FiberAnomaly(f"assembled representation does not transcribe back onto {s.to_json()}")
        out.append(rep)
    out.sort(key=AlphaRep.sort_key)
    return out


def _expand_worker(args: tuple[OrbitSet, int]) -> list[AlphaRep]:
    return expand_fibers(*args)


def enumerate_alpha(n: int, jobs: int = 1) -> list[AlphaRep]:
    """Every maximal rigid representation class, canonically sorted.

    ``jobs > 1`` fans the per-lattice-set expansions out to worker
    processes; the merged result is identical to the sequential one.
    """
    sets = enumerate_maximal_rigid(2 * n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_expand_worker, ((s, n) for s in sets), chunksize=16))
    else:
        batches = [expand_fibers(s, n) for s in sets]
    out = [rep for batch in batches for rep in batch]
    out.sort(key=AlphaRep.sort_key)
    return out


def count_alpha_formula(n: int) -> int:
    """Closed-form census: ``2^(n+1) * C(4n-1, 2n-1)``."""
    if n < 1:
        raise ValueError(f"need at least one grid point per period, got n={n}")
    return 2 ** (n + 1) * comb(4 * n - 1, 2 * n - 1)
