"""Hom/Ext dimensions for quiver representations over a prime field.

Supported shapes: a finite linear window of the integer line (vertices
``lo..hi``, one arrow ``i-1 -> i`` per internal step) and the cyclic quiver on
``m`` vertices with arrows ``i-1 -> i`` taken mod ``m`` (a single loop when
``m == 1``).  Path algebras of such quivers are hereditary, so for
representations ``M``, ``N`` the two-term complex

    D : (+)_v Hom(M_v, N_v)  ->  (+)_a Hom(M_tail(a), N_head(a))
    D(f)_a = N_a . f_tail(a) - f_head(a) . M_a

computes both invariants at once: ``hom = dim ker D`` and ``ext = dim coker
D``.  All arithmetic is exact, over F_p (p = 2 by default) with first-nonzero
row-major pivoting, so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True, slots=True)
class LinearWindow:
    """Vertices ``lo..hi`` on the line; arrows ``i-1 -> i`` for lo < i <= hi."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty window [{self.lo}, {self.hi}]")

    def vertices(self) -> list[int]:
        return list(range(self.lo, self.hi + 1))

    def arrows(self) -> list[tuple[int, int, str]]:
        return [(i - 1, i, f"a{i}") for i in range(self.lo + 1, self.hi + 1)]

    def vertex_index(self, v: int) -> int:
        if not self.lo <= v <= self.hi:
            raise ValueError(f"vertex {v} outside window [{self.lo}, {self.hi}]")
        return v - self.lo

    def to_json(self) -> dict:
        return {"shape": "linear", "lo": self.lo, "hi": self.hi}


@dataclass(frozen=True, slots=True)
class Cyclic:
    """Cyclic quiver on vertices ``0..m-1`` with arrows ``i-1 -> i`` mod m."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"cyclic quiver needs at least one vertex, got {self.m}")

    def vertices(self) -> list[int]:
        return list(range(self.m))

    def arrows(self) -> list[tuple[int, int, str]]:
        return [((i - 1) % self.m, i, f"a{i}") for i in range(self.m)]

    def vertex_index(self, v: int) -> int:
        if not 0 <= v < self.m:
            raise ValueError(f"vertex {v} outside cyclic quiver on {self.m} vertices")
        return v

    def to_json(self) -> dict:
        return {"shape": "cyclic", "m": self.m}


Quiver = LinearWindow | Cyclic


def quiver_from_json(obj: dict) -> Quiver:
    shape = obj.get("shape")
    if shape == "linear":
        return LinearWindow(int(obj["lo"]), int(obj["hi"]))
    if shape == "cyclic":
        return Cyclic(int(obj["m"]))
    raise ValueError(f"unknown quiver shape {shape!r}")


@dataclass(eq=False)
class RepSpec:
    """Dimension vector plus one integer matrix per arrow.

    ``dims`` aligns with ``quiver.vertices()``.  The matrix for an arrow
    ``t -> h`` has shape ``dims[h] x dims[t]``; omitted arrows mean zero maps.
    Entries are integers and are reduced mod p when used.
    """

    quiver: Quiver
    dims: tuple[int, ...]
    mats: dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self) -> None:
        verts = self.quiver.vertices()
        if len(self.dims) != len(verts):
            raise ValueError(f"expected {len(verts)} dimensions, got {len(self.dims)}")
        if any(d < 0 for d in self.dims):
            raise ValueError("negative dimension")
        self.dims = tuple(int(d) for d in self.dims)
        names = {name for _, _, name in self.quiver.arrows()}
        unknown = set(self.mats) - names
        if unknown:
            raise ValueError(f"matrices for unknown arrows: {sorted(unknown)}")
        full: dict[str, np.ndarray] = {}
        for t, h, name in self.quiver.arrows():
            shape = (self.dim_at(h), self.dim_at(t))
            m = self.mats.get(name)
            m = np.zeros(shape, dtype=np.int64) if m is None else np.asarray(m, dtype=np.int64)
            if m.shape != shape:
                raise ValueError(f"arrow {name}: expected shape {shape}, got {m.shape}")
            full[name] = m
        self.mats = full

    def dim_at(self, v: int) -> int:
        return self.dims[self.quiver.vertex_index(v)]

    def to_json(self) -> dict:
        return {
            "quiver": self.quiver.to_json(),
            "dims": list(self.dims),
            "mats": {name: m.tolist() for name, m in self.mats.items() if m.any()},
        }

    @staticmethod
    def from_json(obj: dict) -> "RepSpec":
        quiver = quiver_from_json(obj["quiver"])
        mats = {str(k): np.asarray(v, dtype=np.int64) for k, v in obj.get("mats", {}).items()}
        return RepSpec(quiver, tuple(int(d) for d in obj["dims"]), mats)


def rank_mod_p(mat: np.ndarray, p: int) -> int:
    """Rank over F_p by Gaussian elimination, first-nonzero row-major pivots."""
    a = np.asarray(mat, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = -1
        for i in range(r, rows):
            if a[i, c]:
                pivot = i
                break
        if pivot < 0:
            continue
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        below = a[r + 1 :, c]
        if below.any():
            a[r + 1 :] = (a[r + 1 :] - np.outer(below, a[r])) % p
        r += 1
    return r


def hom_ext_dims(m_rep: RepSpec, n_rep: RepSpec, p: int = 2) -> tuple[int, int]:
    """(dim Hom, dim Ext^1) over F_p for two representations of one quiver."""
    if m_rep.quiver != n_rep.quiver:
        raise ValueError("representations live on different quivers")
    quiver = m_rep.quiver
    verts = quiver.vertices()
    dm = {v: m_rep.dim_at(v) for v in verts}
    dn = {v: n_rep.dim_at(v) for v in verts}

    col_off: dict[int, int] = {}
    cols = 0
    for v in verts:
        col_off[v] = cols
        cols += dm[v] * dn[v]
    rows = sum(dm[t] * dn[h] for t, h, _ in quiver.arrows())

    d = np.zeros((rows, cols), dtype=np.int64)
    r0 = 0
    for t, h, name in quiver.arrows():
        block = dm[t] * dn[h]
        if block:
            # row-major vec: vec(N_a f_t) = (N_a (x) I) vec(f_t);
            #                vec(f_h M_a) = (I (x) M_a^T) vec(f_h)
            if dm[t] and dn[t]:
                d[r0 : r0 + block, col_off[t] : col_off[t] + dm[t] * dn[t]] += np.kron(
                    n_rep.mats[name], np.eye(dm[t], dtype=np.int64)
                )
            if dm[h] and dn[h]:
                d[r0 : r0 + block, col_off[h] : col_off[h] + dm[h] * dn[h]] -= np.kron(
                    np.eye(dn[h], dtype=np.int64), m_rep.mats[name].T
                )
        r0 += block

    rank = rank_mod_p(d, p)
    return cols - rank, rows - rank


def euler_form(quiver: Quiver, dims_m: tuple[int, ...], dims_n: tuple[int, ...]) -> int:
    """Sum_v dM_v dN_v - Sum_arrows dM_tail dN_head; equals hom - ext."""
    verts = quiver.vertices()
    if len(dims_m) != len(verts) or len(dims_n) != len(verts):
        raise ValueError("dimension vector length mismatch")
    idx = quiver.vertex_index
    total = sum(a * b for a, b in zip(dims_m, dims_n))
    for t, h, _ in quiver.arrows():
        total -= dims_m[idx(t)] * dims_n[idx(h)]
    return total


def rep_direct_sum(a: RepSpec, b: RepSpec) -> RepSpec:
    """Block-diagonal direct sum of two representations of one quiver."""
    if a.quiver != b.quiver:
        raise ValueError("representations live on different quivers")
    dims = tuple(x + y for x, y in zip(a.dims, b.dims))
    mats: dict[str, np.ndarray] = {}
    for t, h, name in a.quiver.arrows():
        ma, mb = a.mats[name], b.mats[name]
        m = np.zeros((ma.shape[0] + mb.shape[0], ma.shape[1] + mb.shape[1]), dtype=np.int64)
        m[: ma.shape[0], : ma.shape[1]] = ma
        m[ma.shape[0] :, ma.shape[1] :] = mb
        mats[name] = m
    return RepSpec(a.quiver, dims, mats)


@dataclass(frozen=True, slots=True)
class DiscreteInterval:
    """An integer interval ``[lo, hi]``; ``None`` marks an unbounded side."""

    lo: int | None
    hi: int | None

    def __post_init__(self) -> None:
        if self.lo is not None and self.hi is not None and self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def shifted(self, steps: int) -> "DiscreteInterval":
        lo = None if self.lo is None else self.lo + steps
        hi = None if self.hi is None else self.hi + steps
        return DiscreteInterval(lo, hi)

    def __str__(self) -> str:
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "+inf" if self.hi is None else str(self.hi)
        return f"[{lo}, {hi}]"


def interval_ext(i: DiscreteInterval, j: DiscreteInterval) -> int:
    """dim Ext^1 from the interval module of ``i`` to that of ``j``: 0 or 1.

    Closed form derived by exhaustive comparison against ``hom_ext_dims`` on
    linear windows (finite boxes plus ray-clipping stabilization sweeps; the
    derivation is re-run in the test suite).  With conventions
    ``-inf < z < +inf`` for every integer ``z``:

        ext = 1  iff  lo(i) < lo(j) <= hi(i) + 1  and  hi(i) < hi(j),
                      with hi(i) and lo(j) finite.

    Right-unbounded first arguments admit no outgoing extensions (they play
    the role of projectives for this orientation); left-unbounded second
    arguments admit no incoming ones (injectives).  The single nonzero case
    covers both the touching concatenation ``lo(j) = hi(i) + 1`` and proper
    crossings.
    """
    if i.hi is None or j.lo is None:
        return 0
    if j.lo > i.hi + 1:
        return 0
    if i.lo is not None and i.lo >= j.lo:
        return 0
    if j.hi is not None and i.hi >= j.hi:
        return 0
    return 1


def interval_to_rep(window: LinearWindow, interval: DiscreteInterval) -> RepSpec:
    """One-dimensional on the window's part of the interval, identity steps.

    Unbounded sides are clipped at the window edge: the window sees a ray as
    the longest interval it can.
    """
    lo = window.lo if interval.lo is None else max(interval.lo, window.lo)
    hi = window.hi if interval.hi is None else min(interval.hi, window.hi)
    dims = tuple(1 if lo <= v <= hi else 0 for v in window.vertices())
    mats = {name: np.array([[1]], dtype=np.int64) for t, h, name in window.arrows() if lo <= t and h <= hi}
    return RepSpec(window, dims, mats)
