"""Application layer shared by the command line client and the HTTP service.

Every operation takes plain data and returns a JSON-ready dict; formatting,
exit codes, and transport stay with the callers, so both frontends compute
identical answers by construction.
"""

from __future__ import annotations

from shiftrigid.alpha import (
    AlphaRep,
    FiberAnomaly,
    alpha_first_obstruction,
    alpha_is_rigid,
    count_alpha_formula,
    enumerate_alpha,
    validate_type_alpha,
)
from shiftrigid.homext import DiscreteInterval, LinearWindow, hom_ext_dims, interval_ext, interval_to_rep
from shiftrigid.orbits import (
    OrbitSet,
    count_formula,
    enumerate_maximal_rigid,
    orbit_obstructed,
    self_rigid,
)


def op_count(period: int) -> dict:
    """Exhaustive count of maximal rigid orbit sets at the given period."""
    if period < 1:
        raise ValueError(f"period must be positive, got {period}")
    sets = enumerate_maximal_rigid(period)
    return {"m": period, "count": len(sets), "formula": count_formula(period)}


def op_enumerate(period: int) -> dict:
    if period < 1:
        raise ValueError(f"period must be positive, got {period}")
    sets = enumerate_maximal_rigid(period)
    return {"m": period, "count": len(sets), "sets": [s.to_json() for s in sets]}


def op_enumerate_alpha(n: int, jobs: int = 1) -> dict:
    count_alpha_formula(n)  # rejects n < 1 before any enumeration starts
    reps = enumerate_alpha(n, jobs=jobs)
    return {
        "n": n,
        "count": len(reps),
        "formula": count_alpha_formula(n),
        "classes": [r.to_json() for r in reps],
    }


def op_ext(i: DiscreteInterval, j: DiscreteInterval, window: tuple[int, int] | None = None) -> dict:
    """Extension count between two interval classes, with an optional
    matrix-level cross check over an explicit finite window."""
    out: dict = {"ext": interval_ext(i, j)}
    if window is not None:
        lo, hi = window
        if lo >= hi:
            raise ValueError(f"window must be a nonempty range, got {lo},{hi}")
        w = LinearWindow(lo, hi)
        hom, ext = hom_ext_dims(interval_to_rep(w, i), interval_to_rep(w, j))
        out["window"] = {"lo": lo, "hi": hi, "hom": hom, "ext": ext}
        out["agrees"] = ext == out["ext"]
    return out


def _lattice_witness(s: OrbitSet) -> str | None:
    for i, a in enumerate(s.orbits):
        if not self_rigid(a, s.m):
            return f"{a} collides with its own translates"
        for b in s.orbits[i + 1 :]:
            if orbit_obstructed(a, b, s.m):
                return f"{a} and {b} obstruct each other"
    return None


def op_check(payload: dict) -> dict:
    """Validate a representation given as JSON and decide its rigidity.

    Accepts either the continuous form (``n``/``orbits``/``families``) or a
    lattice orbit set (``m``/``orbits``).  ``valid`` is False when the payload
    does not describe a well-shaped representation at all; ``rigid`` is only
    present for valid input.
    """
    if not isinstance(payload, dict):
        return {"kind": "unknown", "valid": False, "violations": ["payload must be a JSON object"]}
    if "families" in payload or "n" in payload:
        try:
            rep = AlphaRep.from_json(payload)
        except (ValueError, TypeError) as exc:
            return {"kind": "alpha", "valid": False, "violations": [str(exc)]}
        ok, violations = validate_type_alpha(rep)
        if not ok:
            return {"kind": "alpha", "valid": False, "violations": violations}
        witness = alpha_first_obstruction(rep)
        out = {"kind": "alpha", "valid": True, "violations": [], "rigid": witness is None}
        if witness is not None:
            out["witness"] = f"{witness[0]} and {witness[1]} collide under translation"
        return out
    if "m" in payload:
        try:
            s = OrbitSet.from_json(payload)
        except (ValueError, TypeError) as exc:
            return {"kind": "lattice", "valid": False, "violations": [str(exc)]}
        witness = _lattice_witness(s)
        out = {"kind": "lattice", "valid": True, "violations": [], "rigid": witness is None}
        if witness is not None:
            out["witness"] = witness
        return out
    return {
        "kind": "unknown",
        "valid": False,
        "violations": ["payload is neither a continuous representation nor a lattice orbit set"],
    }


def op_verify(n_min: int, n_max: int, jobs: int = 1) -> dict:
    """Census check: enumerate and compare against the closed form per n."""
    if n_min < 1 or n_max < n_min:
        raise ValueError(f"need 1 <= n-min <= n-max, got {n_min}..{n_max}")
    rows = []
    for n in range(n_min, n_max + 1):
        formula = count_alpha_formula(n)
        try:
            enumerated = len(enumerate_alpha(n, jobs=jobs))
        except FiberAnomaly as exc:
            rows.append({"n": n, "formula": formula, "enumerated": -1, "pass": False, "error": str(exc)})
            continue
        rows.append({"n": n, "formula": formula, "enumerated": enumerated, "pass": enumerated == formula})
    return {"rows": rows, "ok": all(r["pass"] for r in rows)}
