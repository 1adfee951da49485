"""Symbolic intervals on a periodically marked line, and their compatibility.

The line carries grid points ``a_i`` (one per integer index ``i``) with open
gaps between consecutive grid points.  An endpoint is one of::

    -inf  <  a_i  <  (gap point g_i(t), 0 < t < 1)  <  a_{i+1}  <  +inf

Gap offsets ``t`` are exact rationals; no floating point enters any
comparison.  An interval is a nonempty convex set written ``|lo, hi|`` with an
independent open/closed flag on each finite end (infinite ends are always
open).

Two intervals are *compatible* when one of the following holds:

1. one contains the other (as point sets),
2. they are separated by a nonempty gap (``hi`` of one strictly below ``lo``
   of the other),
3. they touch at a single endpoint and both are open there.

A finite list of intervals is *rigid* when all unordered pairs (self-pairs
included) are compatible.  Crossing pairs, and pairs touching at an endpoint
that either side closes, admit a non-split extension and are the only
obstructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

_NEG = 0
_FIN = 1
_POS = 2

_ZERO = Fraction(0)


@dataclass(frozen=True, slots=True, order=False)
class Endpoint:
    """A point of the extended symbolic line.

    ``band`` separates -inf / finite / +inf; finite points carry a grid
    ``index`` and a rational ``offset`` with ``0 <= offset < 1`` (offset 0 is
    the grid point itself, anything else lies in the open gap above it).
    """

    band: int
    index: int = 0
    offset: Fraction = _ZERO

    def __post_init__(self) -> None:
        if self.band not in (_NEG, _FIN, _POS):
            raise ValueError(f"unknown endpoint band {self.band!r}")
        if self.band != _FIN:
            if self.index != 0 or self.offset != 0:
                raise ValueError("infinite endpoints carry no position")
            return
        if not isinstance(self.offset, Fraction):
            object.__setattr__(self, "offset", Fraction(self.offset))
        if not 0 <= self.offset < 1:
            raise ValueError(f"gap offset {self.offset} outside [0, 1)")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def grid(i: int) -> "Endpoint":
        return Endpoint(_FIN, i)

    @staticmethod
    def gap(i: int, t: Fraction | str | int) -> "Endpoint":
        t = Fraction(t)
        if not 0 < t < 1:
            raise ValueError(f"gap offset must lie strictly in (0, 1), got {t}")
        return Endpoint(_FIN, i, t)

    # -- structure ---------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.band == _FIN

    @property
    def is_grid(self) -> bool:
        return self.band == _FIN and self.offset == 0

    @property
    def is_gap(self) -> bool:
        return self.band == _FIN and self.offset != 0

    def shifted(self, steps: int) -> "Endpoint":
        """Translate by ``steps`` grid units; infinities are fixed."""
        if self.band != _FIN:
            return self
        return Endpoint(_FIN, self.index + steps, self.offset)

    def key(self) -> tuple:
        return (self.band, self.index, self.offset)

    # -- order -------------------------------------------------------------

    def __lt__(self, other: "Endpoint") -> bool:
        return self.key() < other.key()

    def __le__(self, other: "Endpoint") -> bool:
        return self.key() <= other.key()

    def __gt__(self, other: "Endpoint") -> bool:
        return self.key() > other.key()

    def __ge__(self, other: "Endpoint") -> bool:
        return self.key() >= other.key()

    # -- wire format -------------------------------------------------------

    def to_json(self) -> dict | str:
        if self.band == _NEG:
            return {"kind": "ninf"}
        if self.band == _POS:
            return {"kind": "pinf"}
        if self.offset == 0:
            return {"kind": "grid", "i": self.index}
        return {"kind": "gap", "g": self.index, "t": str(self.offset)}

    @staticmethod
    def from_json(obj: object) -> "Endpoint":
        if not isinstance(obj, dict) or "kind" not in obj:
            raise ValueError(f"not an endpoint object: {obj!r}")
        kind = obj["kind"]
        if kind == "ninf":
            return NEG_INF
        if kind == "pinf":
            return POS_INF
        if kind == "grid":
            return Endpoint.grid(int(obj["i"]))
        if kind == "gap":
            return Endpoint.gap(int(obj["g"]), Fraction(str(obj["t"])))
        raise ValueError(f"unknown endpoint kind {kind!r}")

    def __str__(self) -> str:
        if self.band == _NEG:
            return "-inf"
        if self.band == _POS:
            return "+inf"
        if self.offset == 0:
            return f"a{self.index}"
        return f"g{self.index}+{self.offset}"


NEG_INF = Endpoint(_NEG)
POS_INF = Endpoint(_POS)


@dataclass(frozen=True, slots=True)
class Interval:
    """A nonempty interval ``|lo, hi|`` with per-end open/closed flags.

    Infinite ends are normalized to open.  A degenerate interval (``lo ==
    hi``) must be closed on both sides.
    """

    lo: Endpoint
    lo_closed: bool
    hi: Endpoint
    hi_closed: bool

    def __post_init__(self) -> None:
        if self.lo.band == _POS or self.hi.band == _NEG:
            raise ValueError("interval bounds out of order")
        if self.lo.band == _NEG and self.lo_closed:
            object.__setattr__(self, "lo_closed", False)
        if self.hi.band == _POS and self.hi_closed:
            object.__setattr__(self, "hi_closed", False)
        if self.lo.is_finite and self.hi.is_finite:
            if self.lo.key() > self.hi.key():
                raise ValueError(f"empty interval: lo {self.lo} above hi {self.hi}")
            if self.lo.key() == self.hi.key() and not (self.lo_closed and self.hi_closed):
                raise ValueError("a single-point interval must be closed on both sides")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def point(e: Endpoint) -> "Interval":
        return Interval(e, True, e, True)

    @staticmethod
    def left_ray(hi: Endpoint, hi_closed: bool) -> "Interval":
        return Interval(NEG_INF, False, hi, hi_closed)

    @staticmethod
    def right_ray(lo: Endpoint, lo_closed: bool) -> "Interval":
        return Interval(lo, lo_closed, POS_INF, False)

    @staticmethod
    def line() -> "Interval":
        return Interval(NEG_INF, False, POS_INF, False)

    # -- point-set order data ----------------------------------------------

    def start_key(self) -> tuple:
        # An open lower end starts "just above" its endpoint.
        return (*self.lo.key(), 0 if self.lo_closed else 1)

    def end_key(self) -> tuple:
        # An open upper end stops "just below" its endpoint.
        return (*self.hi.key(), 0 if self.hi_closed else -1)

    def sort_key(self) -> tuple:
        return (*self.start_key(), *self.end_key())

    def contains(self, other: "Interval") -> bool:
        """Point-set containment ``other`` within ``self``."""
        return self.start_key() <= other.start_key() and other.end_key() <= self.end_key()

    def shifted(self, steps: int) -> "Interval":
        return Interval(self.lo.shifted(steps), self.lo_closed, self.hi.shifted(steps), self.hi_closed)

    # -- wire format -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "lo": self.lo.to_json(),
            "lo_closed": self.lo_closed,
            "hi": self.hi.to_json(),
            "hi_closed": self.hi_closed,
        }

    @staticmethod
    def from_json(obj: dict) -> "Interval":
        if not isinstance(obj, dict):
            raise ValueError(f"not an interval object: {obj!r}")
        try:
            lo = Endpoint.from_json(obj["lo"])
            hi = Endpoint.from_json(obj["hi"])
        except KeyError as exc:
            raise ValueError(f"interval object missing key {exc}") from exc
        return Interval(lo, bool(obj.get("lo_closed", False)), hi, bool(obj.get("hi_closed", False)))

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo}, {self.hi}{right}"


def is_compatible(a: Interval, b: Interval) -> bool:
    """True iff ``a`` and ``b`` admit no extension in either direction.

    Nesting, strict separation, and open-open touching are the exhaustive
    compatible configurations; everything else (crossings, touchings with a
    closed side) is obstructed.
    """
    if a.contains(b) or b.contains(a):
        return True
    if a.hi < b.lo or b.hi < a.lo:
        return True
    if a.hi.key() == b.lo.key() and not a.hi_closed and not b.lo_closed:
        return True
    if b.hi.key() == a.lo.key() and not b.hi_closed and not a.lo_closed:
        return True
    return False


def iter_incompatible_pairs(items: Sequence[Interval]) -> Iterator[tuple[int, int]]:
    for i in range(len(items)):
        for j in range(i, len(items)):
            if not is_compatible(items[i], items[j]):
                yield (i, j)


def first_incompatible_pair(items: Sequence[Interval]) -> tuple[int, int] | None:
    """Index pair of the first incompatible pair, or None if rigid."""
    return next(iter_incompatible_pairs(items), None)


def is_rigid(items: Sequence[Interval]) -> bool:
    """True iff every unordered pair from ``items`` is compatible.

    Self-pairs are included; they are always compatible (an interval nests in
    itself), so duplicates never obstruct on their own.
    """
    return first_incompatible_pair(items) is None
