"""Catalog of named reduction formulas.

Each entry ties together a formula identifier, its parameter signature, the
left-hand side hypergeometric spec, the closed-form right-hand side, domain
constraints, and a sampling domain for randomized verification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from . import reductions as rd
from .errors import (
    DegenerateParametersError,
    DomainError,
    UnsatisfiableDomainError,
)
from .series import EvalResult, PFQSpec, Status, unity_margin
from .special import off_poles

_EPS = math.ulp(1.0)

# Minimum convergence margin enforced when sampling z = 1 cases; keeps the
# series oracle's tail short enough for desk-scale runtimes.
SAMPLING_UNITY_MARGIN = 1.55

POLE_DIST = 0.05
_MAX_DRAWS = 500


@dataclass(frozen=True)
class ReductionRequest:
    """A fully-specified invocation of one catalog formula."""

    id: str
    scalars: Mapping[str, float | tuple[float, ...]]
    shifts: Mapping[str, int]
    z: float | None = None


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    ordinal: int
    scalar_names: tuple[str, ...]
    list_names: tuple[str, ...]
    shift_names: tuple[str, ...]
    fixed_z: float | None
    z_range: tuple[float, float] | None
    unity: bool
    description: str
    constraints: str
    lhs: Callable[[dict], PFQSpec] = field(repr=False, compare=False, default=None)
    rhs: Callable[[dict], tuple[float, float]] = field(
        repr=False, compare=False, default=None
    )
    validate: Callable[[dict], None] = field(repr=False, compare=False, default=None)
    draw: Callable[[np.random.Generator], dict] = field(
        repr=False, compare=False, default=None
    )


_ENTRIES: dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry) -> None:
    _ENTRIES[entry.id] = entry


def catalog_ids() -> list[str]:
    return list(_ENTRIES)


def get_entry(entry_id: str) -> CatalogEntry:
    try:
        return _ENTRIES[entry_id]
    except KeyError:
        raise KeyError(f"unknown reduction id {entry_id!r}") from None


def _unpack(entry: CatalogEntry, req: ReductionRequest) -> dict:
    """Validate the request signature against the entry and flatten params."""
    got_scalars = set(req.scalars)
    want_scalars = set(entry.scalar_names)
    if got_scalars != want_scalars:
        missing = want_scalars - got_scalars
        extra = got_scalars - want_scalars
        parts = []
        if missing:
            parts.append(f"missing scalars {sorted(missing)}")
        if extra:
            parts.append(f"unexpected scalars {sorted(extra)}")
        raise ValueError(f"{entry.id}: " + "; ".join(parts))
    got_shifts = set(req.shifts)
    want_shifts = set(entry.shift_names)
    if got_shifts != want_shifts:
        missing = want_shifts - got_shifts
        extra = got_shifts - want_shifts
        parts = []
        if missing:
            parts.append(f"missing shifts {sorted(missing)}")
        if extra:
            parts.append(f"unexpected shifts {sorted(extra)}")
        raise ValueError(f"{entry.id}: " + "; ".join(parts))
    params: dict = {}
    for name in entry.scalar_names:
        value = req.scalars[name]
        if name in entry.list_names:
            vs = tuple(float(v) for v in value)
            if not vs:
                raise ValueError(f"{entry.id}: parameter list {name!r} is empty")
            params[name] = vs
        else:
            params[name] = float(value)
    for name in entry.shift_names:
        shift = req.shifts[name]
        if int(shift) != shift or int(shift) < 0:
            raise ValueError(f"{entry.id}: shift {name!r} must be a non-negative integer")
        params[name] = int(shift)
    if entry.fixed_z is not None:
        if req.z is not None and req.z != entry.fixed_z:
            raise ValueError(
                f"{entry.id}: z is fixed at {entry.fixed_z}, got {req.z}"
            )
        params["z"] = entry.fixed_z
    else:
        if req.z is None:
            raise ValueError(f"{entry.id}: z is required")
        params["z"] = float(req.z)
    return params


def reduce(req: ReductionRequest) -> EvalResult:
    """Evaluate the closed-form right-hand side of a catalog formula."""
    entry = get_entry(req.id)
    params = _unpack(entry, req)
    entry.validate(params)
    value, magnitude = entry.rhs(params)
    return EvalResult(value, _EPS * magnitude, 0, Status.CONVERGED)


def lhs_spec(req: ReductionRequest) -> PFQSpec:
    """The hypergeometric spec the formula's right-hand side claims to equal."""
    entry = get_entry(req.id)
    params = _unpack(entry, req)
    entry.validate(params)
    return entry.lhs(params)


def sample_request(entry_id: str, rng: np.random.Generator) -> ReductionRequest:
    """Draw one in-domain request for the entry, rejection-sampling on the
    entry's constraints; raises UnsatisfiableDomainError after bounded retries."""
    entry = get_entry(entry_id)
    for _ in range(_MAX_DRAWS):
        params = entry.draw(rng)
        try:
            entry.validate(params)
        except DomainError:
            continue
        scalars = {
            name: params[name] for name in entry.scalar_names
        }
        shifts = {name: params[name] for name in entry.shift_names}
        z = None if entry.fixed_z is not None else params["z"]
        return ReductionRequest(entry_id, scalars, shifts, z)
    raise UnsatisfiableDomainError(
        f"could not sample an in-domain case for {entry_id} in {_MAX_DRAWS} draws"
    )


# ---------------------------------------------------------------------------
# sampling helpers
# ---------------------------------------------------------------------------


def _u(rng: np.random.Generator, lo: float, hi: float) -> float:
    return float(rng.uniform(lo, hi))


def _n(rng: np.random.Generator, lo: int, hi: int) -> int:
    return int(rng.integers(lo, hi + 1))


def _distinct_list(
    rng: np.random.Generator, count: int, lo: float, hi: float, min_gap: float = 0.1
) -> tuple[float, ...]:
    for _ in range(200):
        vs = sorted(_u(rng, lo, hi) for _ in range(count))
        if all(vs[i + 1] - vs[i] >= min_gap for i in range(count - 1)):
            return tuple(vs)
    raise UnsatisfiableDomainError("could not draw a pairwise-distinct list")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


def _require_off_poles(values: Sequence[float], what: str) -> None:
    if not off_poles(values, POLE_DIST):
        raise DomainError(f"{what} too close to a non-positive integer")


def _check_unity_margin(spec: PFQSpec) -> None:
    _require(unity_margin(spec) > 0.0, "series does not converge at z = 1")


# ---------------------------------------------------------------------------
# entry definitions
# ---------------------------------------------------------------------------


def _simple(
    id: str,
    ordinal: int,
    scalars: tuple[str, ...],
    shifts: tuple[str, ...],
    lhs,
    rhs,
    validate,
    draw,
    description: str,
    constraints: str,
    fixed_z: float | None = None,
    z_range: tuple[float, float] | None = None,
    unity: bool = False,
    lists: tuple[str, ...] = (),
) -> None:
    _register(
        CatalogEntry(
            id=id,
            ordinal=ordinal,
            scalar_names=scalars,
            list_names=lists,
            shift_names=shifts,
            fixed_z=fixed_z,
            z_range=z_range,
            unity=unity,
            description=description,
            constraints=constraints,
            lhs=lhs,
            rhs=rhs,
            validate=validate,
            draw=draw,
        )
    )


# -- z = 1/2 and z = -1 family ----------------------------------------------

_simple(
    "F32HalfBateman",
    0,
    ("a", "c"),
    ("n",),
    lhs=lambda p: PFQSpec([p["a"], p["a"], p["c"] + p["n"]], [p["a"] + 1.0, p["c"]], 0.5),
    rhs=lambda p: rd.f32_half_bateman_rhs(p["a"], p["c"], p["n"]),
    validate=lambda p: (
        _require(p["a"] > 0.0, "requires a > 0"),
        _require(p["c"] > 0.0, "requires c > 0"),
    ),
    draw=lambda rng: {"a": _u(rng, 0.3, 3.0), "c": _u(rng, 0.5, 4.0), "n": _n(rng, 0, 6)},
    description=(
        "3F2(a,a,c+n; a+1,c; 1/2) as a*2^a times a binomial sum of Bateman "
        "G-function values"
    ),
    constraints="a > 0, c > 0",
    fixed_z=0.5,
)

_simple(
    "F21HalfBateman",
    1,
    ("a",),
    ("n",),
    lhs=lambda p: PFQSpec([p["a"], p["a"] + p["n"]], [p["a"] + 1.0], 0.5),
    rhs=lambda p: rd.f21_half_bateman_rhs(p["a"], p["n"]),
    validate=lambda p: _require(p["a"] > 0.0, "requires a > 0"),
    draw=lambda rng: {"a": _u(rng, 0.3, 3.0), "n": _n(rng, 0, 6)},
    description=(
        "2F1(a,a+n; a+1; 1/2) as a*2^a times a binomial sum of Bateman "
        "G-function values (the c = a collapse of F32HalfBateman)"
    ),
    constraints="a > 0",
    fixed_z=0.5,
)

_simple(
    "F21NegUnit",
    2,
    ("a",),
    ("n",),
    lhs=lambda p: PFQSpec([-float(p["n"]), p["a"]], [p["a"] + 1.0], -1.0),
    rhs=lambda p: rd.f21_neg_unit_bateman_rhs(p["a"], p["n"]),
    validate=lambda p: _require(p["a"] > 0.0, "requires a > 0"),
    draw=lambda rng: {"a": _u(rng, 0.3, 4.0), "n": _n(rng, 0, 6)},
    description=(
        "terminating 2F1(-n,a; a+1; -1) as a binomial sum of Bateman "
        "G-function values; the same value also equals a*sum C(n,k)/(a+k), "
        "which is the cross-check that pins down the G-function recursion"
    ),
    constraints="a > 0",
    fixed_z=-1.0,
)

_simple(
    "F32HalfPlusM",
    3,
    ("a", "b", "c"),
    ("n", "m"),
    lhs=lambda p: PFQSpec(
        [p["a"], p["b"] + p["m"], p["c"] + p["n"]],
        [(p["a"] + p["b"] + 1.0) / 2.0, p["c"]],
        0.5,
    ),
    rhs=lambda p: rd.f32_half_plus_rhs(p["a"], p["b"], p["c"], p["n"], p["m"]),
    validate=lambda p: (
        _require(p["a"] > 0.0, "requires a > 0"),
        _require(p["b"] > 0.0, "requires b > 0"),
        _require(p["c"] > 0.0, "requires c > 0"),
    ),
    draw=lambda rng: {
        "a": _u(rng, 0.3, 2.5),
        "b": _u(rng, 0.3, 2.5),
        "c": _u(rng, 0.5, 4.0),
        "n": _n(rng, 0, 4),
        "m": _n(rng, 0, 4),
    },
    description=(
        "3F2(a,b+m,c+n; (a+b+1)/2,c; 1/2) as a double binomial sum of "
        "half-argument gamma ratios"
    ),
    constraints="a, b, c > 0",
    fixed_z=0.5,
)


def _f32_half_minus_validate(p: dict) -> None:
    _require(p["a"] > 0.0, "requires a > 0")
    _require(p["c"] > 0.0, "requires c > 0")
    m = p["m"]
    _require_off_poles(
        [(p["b"] - p["a"] + 1.0) / 2.0 - m, (p["b"] - p["a"] + 1.0) / 2.0],
        "gamma prefactor argument",
    )
    # Inner gamma arguments (1+b+k+s)/2 - m for k+s >= 0 must stay off poles.
    _require_off_poles([(1.0 + p["b"]) / 2.0 - m], "inner gamma argument")
    _require((1.0 + p["b"]) / 2.0 - m > 0.0, "requires (1+b)/2 > m")


def _f32_half_minus_draw(rng: np.random.Generator) -> dict:
    m = _n(rng, 0, 3)
    a = _u(rng, 0.3, 1.5)
    b = a + 2.0 * m - 0.9 + _u(rng, 0.3, 2.5)
    return {"a": a, "b": b, "c": _u(rng, 0.5, 4.0), "n": _n(rng, 0, 3), "m": m}


_simple(
    "F32HalfMinusM",
    4,
    ("a", "b", "c"),
    ("n", "m"),
    lhs=lambda p: PFQSpec(
        [p["a"], p["b"] - p["m"], p["c"] + p["n"]],
        [(p["a"] + p["b"] + 1.0) / 2.0, p["c"]],
        0.5,
    ),
    rhs=lambda p: rd.f32_half_minus_signed_rhs(p["a"], p["b"], p["c"], p["n"], p["m"]),
    validate=_f32_half_minus_validate,
    draw=_f32_half_minus_draw,
    description=(
        "3F2(a,b-m,c+n; (a+b+1)/2,c; 1/2) as a double binomial sum of "
        "half-argument gamma ratios with an alternating inner sign; of the "
        "two candidate printed forms this is the one that survives oracle "
        "testing (the other is kept in tests as a negative control)"
    ),
    constraints="a, c > 0; (1+b)/2 > m; (b-a+1)/2 and (b-a+1)/2 - m off poles",
    fixed_z=0.5,
)

# -- z = 1 psi/beta family ---------------------------------------------------

_simple(
    "F32UnityJL",
    5,
    ("a", "b"),
    (),
    lhs=lambda p: PFQSpec([p["a"], p["b"], p["b"]], [p["b"] + 1.0, p["b"] + 1.0], 1.0),
    rhs=lambda p: rd.f32_unity_jl_rhs(p["a"], p["b"]),
    validate=lambda p: (
        _require(p["b"] > 0.0, "requires b > 0"),
        _require(1.0 - p["a"] > 0.0, "requires a < 1"),
        _require_off_poles([1.0 + p["b"] - p["a"]], "psi argument"),
        _check_unity_margin(
            PFQSpec([p["a"], p["b"], p["b"]], [p["b"] + 1.0, p["b"] + 1.0], 1.0)
        ),
    ),
    draw=lambda rng: {"a": _u(rng, -3.0, 0.4), "b": _u(rng, 0.3, 3.0)},
    description=(
        "3F2(a,b,b; b+1,b+1; 1) as b^2 B(1-a,b) [psi(1+b-a) - psi(b)]"
    ),
    constraints="b > 0, a < 1, convergent at z = 1 (a < 2)",
    fixed_z=1.0,
    unity=True,
)


def _f43_unity_validate(p: dict) -> None:
    _require(p["b"] > 0.0, "requires b > 0")
    _require(p["c"] > 0.0, "requires c > 0")
    _require(1.0 - p["a"] > 0.0, "requires a < 1")
    if abs(p["b"] - p["c"]) < rd.DISTINCT_TOL:
        raise DegenerateParametersError("requires b != c")
    n = p["n"]
    _require_off_poles(
        [1.0 + p["b"] - p["a"], 1.0 + p["b"] - p["c"], 1.0 + p["b"] - p["c"] - n],
        "psi argument",
    )
    _require_off_poles([p["c"] - p["b"] + j for j in range(n)], "(c-b)_n factor")
    _check_unity_margin(_f43_unity_lhs(p))
    _require(abs(p["b"] - p["c"]) >= POLE_DIST, "b too close to c")


def _f43_unity_lhs(p: dict) -> PFQSpec:
    return PFQSpec(
        [p["a"], p["b"], p["b"], p["c"] + p["n"]],
        [p["b"] + 1.0, p["b"] + 1.0, p["c"]],
        1.0,
    )


_simple(
    "F43Unity",
    6,
    ("a", "b", "c"),
    ("n",),
    lhs=_f43_unity_lhs,
    rhs=lambda p: rd.f43_unity_rhs(p["a"], p["b"], p["c"], p["n"]),
    validate=_f43_unity_validate,
    draw=lambda rng: (
        lambda n: {
            "a": _u(rng, -3.0, 0.4) - n,
            "b": _u(rng, 0.3, 3.0),
            "c": _u(rng, 0.5, 4.0),
            "n": n,
        }
    )(_n(rng, 0, 3)),
    description=(
        "4F3(a,b,b,c+n; b+1,b+1,c; 1) as b^2 B(1-a,b) (c-b)_n/(c)_n times a "
        "four-term psi combination, b != c"
    ),
    constraints="b, c > 0; a < 1; b != c; psi arguments off poles; convergent at z = 1",
    fixed_z=1.0,
    unity=True,
)

_simple(
    "F32UnityBB",
    7,
    ("a", "b"),
    ("n",),
    lhs=lambda p: PFQSpec(
        [p["a"], p["b"], p["b"] + p["n"]], [p["b"] + 1.0, p["b"] + 1.0], 1.0
    ),
    rhs=lambda p: rd.f32_unity_bb_rhs(p["a"], p["b"], p["n"]),
    validate=lambda p: (
        _require(p["n"] >= 1, "requires n >= 1"),
        _require(p["b"] > 0.0, "requires b > 0"),
        _require(1.0 - p["a"] > 0.0, "requires a < 1"),
        _check_unity_margin(
            PFQSpec([p["a"], p["b"], p["b"] + p["n"]], [p["b"] + 1.0, p["b"] + 1.0], 1.0)
        ),
    ),
    draw=lambda rng: (
        lambda n: {"a": _u(rng, -3.0, 0.45) - n, "b": _u(rng, 0.3, 3.0), "n": n}
    )(_n(rng, 1, 4)),
    description=(
        "3F2(a,b,b+n; b+1,b+1; 1) as (n-1)! b^2 B(1-a,b) / (b)_n, n >= 1"
    ),
    constraints="n >= 1; b > 0; a < 1; convergent at z = 1 (a < 2 - n)",
    fixed_z=1.0,
    unity=True,
)


def _f43_unity_nm_lhs(p: dict) -> PFQSpec:
    return PFQSpec(
        [p["a"], p["b"], p["b"] + p["n"], p["c"] + p["m"]],
        [p["b"] + 1.0, p["b"] + 1.0, p["c"]],
        1.0,
    )


def _f43_unity_nm_validate(p: dict) -> None:
    _require(p["n"] >= 1, "requires n >= 1")
    _require(p["b"] > 0.0, "requires b > 0")
    _require(p["c"] > 0.0, "requires c > 0")
    _require(1.0 - p["a"] > 0.0, "requires a < 1")
    _require_off_poles([p["c"] - p["b"] + j for j in range(p["m"])], "(c-b)_m factor")
    _check_unity_margin(_f43_unity_nm_lhs(p))


_simple(
    "F43UnityNM",
    8,
    ("a", "b", "c"),
    ("n", "m"),
    lhs=_f43_unity_nm_lhs,
    rhs=lambda p: rd.f43_unity_nm_rhs(p["a"], p["b"], p["c"], p["n"], p["m"]),
    validate=_f43_unity_nm_validate,
    draw=lambda rng: (
        lambda n, m: {
            "a": _u(rng, -3.0, 0.4) - n - m,
            "b": _u(rng, 0.3, 3.0),
            "c": _u(rng, 0.5, 4.0),
            "n": n,
            "m": m,
        }
    )(_n(rng, 1, 3), _n(rng, 0, 3)),
    description=(
        "4F3(a,b,b+n,c+m; b+1,b+1,c; 1) as the F32UnityBB value times "
        "(c-b)_m/(c)_m, n >= 1"
    ),
    constraints="n >= 1; b, c > 0; a < 1; (c-b)_m off zero; convergent at z = 1",
    fixed_z=1.0,
    unity=True,
)

# -- Bessel family -----------------------------------------------------------

_simple(
    "F01Bessel",
    9,
    ("b",),
    (),
    lhs=lambda p: PFQSpec([], [p["b"]], p["z"]),
    rhs=lambda p: rd.f01_bessel_rhs(p["b"], p["z"]),
    validate=lambda p: (
        _require(p["b"] > 0.0, "requires b > 0"),
        _require(p["z"] > 0.0, "requires z > 0"),
    ),
    draw=lambda rng: {"b": _u(rng, 0.3, 5.0), "z": _u(rng, 0.05, 20.0)},
    description=(
        "0F1(;b;z) in terms of the modified Bessel function of the first kind, "
        "z^((1-b)/2) Gamma(b) I_{b-1}(2 sqrt(z))"
    ),
    constraints="b > 0, z > 0",
    z_range=(0.05, 20.0),
)

_simple(
    "F12BesselI",
    10,
    ("b", "c"),
    ("n",),
    lhs=lambda p: PFQSpec([p["c"] + p["n"]], [p["b"], p["c"]], p["z"]),
    rhs=lambda p: rd.f12_bessel_i_rhs(p["b"], p["c"], p["n"], p["z"]),
    validate=lambda p: (
        _require(p["b"] > 0.0, "requires b > 0"),
        _require(p["c"] > 0.0, "requires c > 0"),
        _require(p["z"] > 0.0, "requires z > 0"),
    ),
    draw=lambda rng: {
        "b": _u(rng, 0.3, 5.0),
        "c": _u(rng, 0.5, 4.0),
        "n": _n(rng, 0, 6),
        "z": _u(rng, 0.05, 20.0),
    },
    description=(
        "1F2(c+n; b,c; z) as a finite binomial sum over the modified Bessel "
        "function of the first kind"
    ),
    constraints="b, c > 0, z > 0",
    z_range=(0.05, 20.0),
)

_simple(
    "F23BesselI",
    11,
    ("b", "c", "d"),
    ("n", "m"),
    lhs=lambda p: PFQSpec(
        [p["c"] + p["n"], p["d"] + p["m"]], [p["b"], p["c"], p["d"]], p["z"]
    ),
    rhs=lambda p: rd.f23_bessel_i_rhs(p["b"], p["c"], p["d"], p["n"], p["m"], p["z"]),
    validate=lambda p: (
        _require(p["b"] > 0.0, "requires b > 0"),
        _require(p["c"] > 0.0, "requires c > 0"),
        _require(p["d"] > 0.0, "requires d > 0"),
        _require(p["z"] > 0.0, "requires z > 0"),
    ),
    draw=lambda rng: {
        "b": _u(rng, 0.3, 5.0),
        "c": _u(rng, 0.5, 4.0),
        "d": _u(rng, 0.5, 4.0),
        "n": _n(rng, 0, 4),
        "m": _n(rng, 0, 4),
        "z": _u(rng, 0.05, 20.0),
    },
    description=(
        "2F3(c+n,d+m; b,c,d; z) as a double finite sum over the modified "
        "Bessel function of the first kind"
    ),
    constraints="b, c, d > 0, z > 0",
    z_range=(0.05, 20.0),
)

_simple(
    "F12BesselJ",
    12,
    ("b", "c"),
    ("n",),
    lhs=lambda p: PFQSpec([p["c"] + p["n"]], [p["b"], p["c"]], -p["z"]),
    rhs=lambda p: rd.f12_bessel_j_rhs(p["b"], p["c"], p["n"], p["z"]),
    validate=lambda p: (
        _require(p["b"] > 0.0, "requires b > 0"),
        _require(p["c"] > 0.0, "requires c > 0"),
        _require(p["z"] > 0.0, "requires z > 0"),
    ),
    draw=lambda rng: {
        "b": _u(rng, 0.3, 5.0),
        "c": _u(rng, 0.5, 4.0),
        "n": _n(rng, 0, 6),
        "z": _u(rng, 0.05, 20.0),
    },
    description=(
        "1F2(c+n; b,c; -z), z > 0, as an alternating finite sum over the "
        "Bessel function of the first kind"
    ),
    constraints="b, c > 0, z > 0 (series argument is -z)",
    z_range=(0.05, 20.0),
)

_simple(
    "F23BesselJ",
    13,
    ("b", "c", "d"),
    ("n", "m"),
    lhs=lambda p: PFQSpec(
        [p["c"] + p["n"], p["d"] + p["m"]], [p["b"], p["c"], p["d"]], -p["z"]
    ),
    rhs=lambda p: rd.f23_bessel_j_rhs(p["b"], p["c"], p["d"], p["n"], p["m"], p["z"]),
    validate=lambda p: (
        _require(p["b"] > 0.0, "requires b > 0"),
        _require(p["c"] > 0.0, "requires c > 0"),
        _require(p["d"] > 0.0, "requires d > 0"),
        _require(p["z"] > 0.0, "requires z > 0"),
    ),
    draw=lambda rng: {
        "b": _u(rng, 0.3, 5.0),
        "c": _u(rng, 0.5, 4.0),
        "d": _u(rng, 0.5, 4.0),
        "n": _n(rng, 0, 4),
        "m": _n(rng, 0, 4),
        "z": _u(rng, 0.05, 20.0),
    },
    description=(
        "2F3(c+n,d+m; b,c,d; -z), z > 0, as an alternating double finite sum "
        "over the Bessel function of the first kind"
    ),
    constraints="b, c, d > 0, z > 0 (series argument is -z)",
    z_range=(0.05, 20.0),
)

# -- incomplete gamma / Laguerre family -------------------------------------

_simple(
    "F11IncGamma",
    14,
    ("a",),
    (),
    lhs=lambda p: PFQSpec([p["a"]], [p["a"] + 1.0], -p["z"]),
    rhs=lambda p: rd.f11_inc_gamma_rhs(p["a"], p["z"]),
    validate=lambda p: (
        _require(p["a"] > 0.0, "requires a > 0"),
        _require(p["z"] > 0.0, "requires z > 0"),
    ),
    draw=lambda rng: {"a": _u(rng, 0.3, 4.0), "z": _u(rng, 0.1, 8.0)},
    description=(
        "1F1(a; a+1; -z), z > 0, as a z^(-a) times the lower incomplete gamma "
        "function at (a, z)"
    ),
    constraints="a > 0, z > 0 (series argument is -z)",
    z_range=(0.1, 8.0),
)

_simple(
    "F22IncGamma",
    15,
    ("a", "c"),
    ("n",),
    lhs=lambda p: PFQSpec([p["a"], p["c"] + p["n"]], [p["a"] + 1.0, p["c"]], -p["z"]),
    rhs=lambda p: rd.f22_inc_gamma_rhs(p["a"], p["c"], p["n"], p["z"]),
    validate=lambda p: (
        _require(p["a"] > 0.0, "requires a > 0"),
        _require(p["c"] > 0.0, "requires c > 0"),
        _require(p["z"] > 0.0, "requires z > 0"),
    ),
    draw=lambda rng: {
        "a": _u(rng, 0.3, 4.0),
        "c": _u(rng, 0.5, 4.0),
        "n": _n(rng, 0, 6),
        "z": _u(rng, 0.1, 8.0),
    },
    description=(
        "2F2(a,c+n; a+1,c; -z), z > 0, as an alternating binomial sum of "
        "lower incomplete gamma values"
    ),
    constraints="a, c > 0, z > 0 (series argument is -z)",
    z_range=(0.1, 8.0),
)

_simple(
    "F11Laguerre",
    16,
    ("a",),
    ("n",),
    lhs=lambda p: PFQSpec([p["a"] + p["n"]], [p["a"]], p["z"]),
    rhs=lambda p: rd.f11_laguerre_rhs(p["a"], p["n"], p["z"]),
    validate=lambda p: _require(p["a"] > 0.0, "requires a > 0"),
    draw=lambda rng: {"a": _u(rng, 0.3, 4.0), "n": _n(rng, 0, 6), "z": _u(rng, -3.0, 3.0)},
    description=(
        "1F1(a+n; a; z) as n!/(a)_n e^z times the generalized Laguerre "
        "polynomial L_n^(a-1)(-z)"
    ),
    constraints="a > 0",
    z_range=(-3.0, 3.0),
)

_simple(
    "F22Laguerre",
    17,
    ("a", "b"),
    ("n", "m"),
    lhs=lambda p: PFQSpec([p["a"] + p["n"], p["b"] + p["m"]], [p["a"], p["b"]], p["z"]),
    rhs=lambda p: rd.f22_laguerre_rhs(p["a"], p["b"], p["n"], p["m"], p["z"]),
    validate=lambda p: (
        _require(p["a"] > 0.0, "requires a > 0"),
        _require(p["b"] > 0.0, "requires b > 0"),
    ),
    draw=lambda rng: {
        "a": _u(rng, 0.3, 4.0),
        "b": _u(rng, 0.3, 4.0),
        "n": _n(rng, 0, 4),
        "m": _n(rng, 0, 4),
        "z": _u(rng, -3.0, 3.0),
    },
    description=(
        "2F2(a+n,b+m; a,b; z) as a binomial sum of generalized Laguerre "
        "polynomial values times e^z"
    ),
    constraints="a, b > 0",
    z_range=(-3.0, 3.0),
)

_simple(
    "F33Laguerre",
    18,
    ("a", "b", "c"),
    ("n", "m", "k"),
    lhs=lambda p: PFQSpec(
        [p["a"] + p["n"], p["b"] + p["m"], p["c"] + p["k"]],
        [p["a"], p["b"], p["c"]],
        p["z"],
    ),
    rhs=lambda p: rd.f33_laguerre_rhs(
        p["a"], p["b"], p["c"], p["n"], p["m"], p["k"], p["z"]
    ),
    validate=lambda p: (
        _require(p["a"] > 0.0, "requires a > 0"),
        _require(p["b"] > 0.0, "requires b > 0"),
        _require(p["c"] > 0.0, "requires c > 0"),
    ),
    draw=lambda rng: {
        "a": _u(rng, 0.3, 4.0),
        "b": _u(rng, 0.3, 4.0),
        "c": _u(rng, 0.3, 4.0),
        "n": _n(rng, 0, 3),
        "m": _n(rng, 0, 3),
        "k": _n(rng, 0, 3),
        "z": _u(rng, -3.0, 3.0),
    },
    description=(
        "3F3(a+n,b+m,c+k; a,b,c; z) as a double binomial sum of generalized "
        "Laguerre polynomial values times e^z"
    ),
    constraints="a, b, c > 0",
    z_range=(-3.0, 3.0),
)

# -- arbitrary-p incomplete-beta family -------------------------------------


def _a_list_validate(p: dict, shift_floor: float = 0.0) -> None:
    a_list = p["a"]
    rd.require_distinct(a_list)
    for al in a_list:
        _require(al > shift_floor, f"requires every a > {shift_floor}")


_simple(
    "Mp1FmIncBeta",
    19,
    ("a", "b"),
    (),
    lhs=lambda p: PFQSpec(
        list(p["a"]) + [p["b"]], [al + 1.0 for al in p["a"]], p["z"]
    ),
    rhs=lambda p: rd.m1m_inc_beta_rhs(p["a"], p["b"], p["z"]),
    validate=lambda p: (
        _a_list_validate(p),
        _require(0.0 < p["z"] < 1.0, "requires 0 < z < 1"),
    ),
    draw=lambda rng: {
        "a": _distinct_list(rng, _n(rng, 1, 4), 0.3, 4.0),
        "b": _u(rng, -2.0, 0.8),
        "z": _u(rng, 0.1, 0.9),
    },
    description=(
        "(m+1)Fm(b,a_1..a_m; a_1+1..a_m+1; z) as a partial-fraction sum of "
        "incomplete beta values, pairwise-distinct a's"
    ),
    constraints="a's > 0 and pairwise distinct; 0 < z < 1",
    z_range=(0.1, 0.9),
    lists=("a",),
)

_simple(
    "Pp2Fp1IncBeta",
    20,
    ("a", "b", "c"),
    ("n",),
    lhs=lambda p: PFQSpec(
        list(p["a"]) + [p["b"], p["c"] + p["n"]],
        [al + 1.0 for al in p["a"]] + [p["c"]],
        p["z"],
    ),
    rhs=lambda p: rd.pp2_inc_beta_rhs(p["a"], p["b"], p["c"], p["n"], p["z"]),
    validate=lambda p: (
        _a_list_validate(p),
        _require(p["c"] > 0.0, "requires c > 0"),
        _require(0.0 < p["z"] < 1.0, "requires 0 < z < 1"),
    ),
    draw=lambda rng: {
        "a": _distinct_list(rng, _n(rng, 1, 3), 0.3, 4.0),
        "b": _u(rng, -2.0, 0.8),
        "c": _u(rng, 0.5, 4.0),
        "n": _n(rng, 0, 4),
        "z": _u(rng, 0.1, 0.9),
    },
    description=(
        "(p+2)F(p+1)(a_1..a_p,b,c+n; a_1+1..a_p+1,c; z) as a binomial sum of "
        "incomplete-beta partial fractions"
    ),
    constraints="a's > 0 pairwise distinct; c > 0; 0 < z < 1",
    z_range=(0.1, 0.9),
    lists=("a",),
)


def _pp2_literature_validate(p: dict) -> None:
    n = p["n"]
    _a_list_validate(p, shift_floor=0.0)
    for al in p["a"]:
        # inner Gauss series carries lower parameters a - k for k < n
        _require(al - (n - 1) > POLE_DIST, "requires every a > n - 1")
    _require(p["c"] > 0.0, "requires c > 0")
    _require(0.0 < p["z"] < 1.0, "requires 0 < z < 1")


_simple(
    "Pp2Fp1Literature",
    21,
    ("a", "b", "c"),
    ("n",),
    lhs=lambda p: PFQSpec(
        list(p["a"]) + [p["b"], p["c"] + p["n"]],
        [al + 1.0 for al in p["a"]] + [p["c"]],
        p["z"],
    ),
    rhs=lambda p: rd.pp2_literature_rhs(p["a"], p["b"], p["c"], p["n"], p["z"]),
    validate=_pp2_literature_validate,
    draw=lambda rng: (
        lambda n: {
            "a": _distinct_list(
                rng, _n(rng, 1, 3), max(0.3, n - 0.5), max(0.3, n - 0.5) + 3.5
            ),
            "b": _u(rng, -2.0, 0.8),
            "c": _u(rng, 0.5, 4.0),
            "n": n,
            "z": _u(rng, 0.15, 0.85),
        }
    )(_n(rng, 0, 3)),
    description=(
        "same left-hand side as Pp2Fp1IncBeta, written through the n-th "
        "derivative of z^g B_z(a,b) as found in earlier literature"
    ),
    constraints="a's > max(0, n-1) pairwise distinct; c > 0; 0 < z < 1",
    z_range=(0.15, 0.85),
    lists=("a",),
)

_simple(
    "F21Contiguous",
    22,
    ("b", "c"),
    ("n",),
    lhs=lambda p: PFQSpec([p["b"], p["c"] + p["n"]], [p["c"]], p["z"]),
    rhs=lambda p: rd.f21_contiguous_rhs(p["b"], p["c"], p["n"], p["z"]),
    validate=lambda p: (
        _require(p["c"] > 0.0, "requires c > 0"),
        _require(p["z"] < 1.0, "requires z < 1"),
        _require(abs(p["z"]) < 1.0, "requires |z| < 1"),
    ),
    draw=lambda rng: {
        "b": _u(rng, 0.3, 3.0),
        "c": _u(rng, 0.5, 4.0),
        "n": _n(rng, 0, 6),
        "z": _u(rng, -0.8, 0.9),
    },
    description=(
        "2F1(b,c+n; c; z) as (1-z)^(-b) times a terminating binomial sum in "
        "z/(1-z)"
    ),
    constraints="c > 0, |z| < 1",
    z_range=(-0.8, 0.9),
)


def _pp2_unity_lhs(p: dict) -> PFQSpec:
    return PFQSpec(
        list(p["a"]) + [p["b"], p["c"] + p["n"]],
        [al + 1.0 for al in p["a"]] + [p["c"]],
        1.0,
    )


def _pp2_unity_validate(p: dict) -> None:
    _a_list_validate(p)
    _require(p["c"] > 0.0, "requires c > 0")
    _require(1.0 - p["b"] > 0.0, "requires b < 1")
    for al in p["a"]:
        _require_off_poles([p["c"] - al + j for j in range(p["n"])], "(c-a)_n factor")
    _check_unity_margin(_pp2_unity_lhs(p))


_simple(
    "Pp2Fp1Unity",
    23,
    ("a", "b", "c"),
    ("n",),
    lhs=_pp2_unity_lhs,
    rhs=lambda p: rd.pp2_unity_rhs(p["a"], p["b"], p["c"], p["n"]),
    validate=_pp2_unity_validate,
    draw=lambda rng: (
        lambda p_count, n: {
            "a": _distinct_list(rng, p_count, 0.3, 4.0),
            "b": min(p_count - n - SAMPLING_UNITY_MARGIN, 0.8) - _u(rng, 0.0, 2.0),
            "c": _u(rng, 0.5, 4.0),
            "n": n,
        }
    )(_n(rng, 1, 3), _n(rng, 0, 2)),
    description=(
        "(p+2)F(p+1)(a_1..a_p,b,c+n; a_1+1..a_p+1,c; 1) as a beta-function "
        "partial-fraction sum"
    ),
    constraints="a's > 0 pairwise distinct; c > 0; b < 1; convergent at z = 1",
    fixed_z=1.0,
    unity=True,
    lists=("a",),
)


def _pp3_lhs(p: dict) -> PFQSpec:
    return PFQSpec(
        list(p["a"]) + [p["b"], p["c"] + p["n"], p["d"] + p["m"]],
        [al + 1.0 for al in p["a"]] + [p["c"], p["d"]],
        p["z"] if "z" in p else 1.0,
    )


def _pp3_h_validate(p: dict) -> None:
    _a_list_validate(p)
    m = p["m"]
    for al in p["a"]:
        _require(al - (m - 1) > POLE_DIST, "requires every a > m - 1")
    _require(p["c"] > 0.0, "requires c > 0")
    _require(p["d"] > 0.0, "requires d > 0")
    _require(0.0 < p["z"] < 1.0, "requires 0 < z < 1")


_simple(
    "Pp3Fp2H",
    24,
    ("a", "b", "c", "d"),
    ("n", "m"),
    lhs=_pp3_lhs,
    rhs=lambda p: rd.pp3_h_rhs(p["a"], p["b"], p["c"], p["d"], p["n"], p["m"], p["z"]),
    validate=_pp3_h_validate,
    draw=lambda rng: (
        lambda m: {
            "a": _distinct_list(
                rng, _n(rng, 1, 3), max(0.3, m - 0.5), max(0.3, m - 0.5) + 3.5
            ),
            "b": _u(rng, -2.0, 0.8),
            "c": _u(rng, 0.5, 4.0),
            "d": _u(rng, 0.5, 4.0),
            "n": _n(rng, 0, 2),
            "m": m,
            "z": _u(rng, 0.15, 0.85),
        }
    )(_n(rng, 0, 2)),
    description=(
        "(p+3)F(p+2)(a_1..a_p,b,c+n,d+m; a_1+1..a_p+1,c,d; z) through the "
        "m-th derivative of z^g B_z(a,b)"
    ),
    constraints="a's > max(0, m-1) pairwise distinct; c, d > 0; 0 < z < 1",
    z_range=(0.15, 0.85),
    lists=("a",),
)

_simple(
    "Pp3Fp2IncBeta",
    25,
    ("a", "b", "c", "d"),
    ("n", "m"),
    lhs=_pp3_lhs,
    rhs=lambda p: rd.pp3_inc_beta_rhs(
        p["a"], p["b"], p["c"], p["d"], p["n"], p["m"], p["z"]
    ),
    validate=lambda p: (
        _a_list_validate(p),
        _require(p["c"] > 0.0, "requires c > 0"),
        _require(p["d"] > 0.0, "requires d > 0"),
        _require(0.0 < p["z"] < 1.0, "requires 0 < z < 1"),
    ),
    draw=lambda rng: {
        "a": _distinct_list(rng, _n(rng, 1, 3), 0.3, 4.0),
        "b": _u(rng, -2.0, 0.8),
        "c": _u(rng, 0.5, 4.0),
        "d": _u(rng, 0.5, 4.0),
        "n": _n(rng, 0, 3),
        "m": _n(rng, 0, 3),
        "z": _u(rng, 0.1, 0.9),
    },
    description=(
        "same left-hand side as Pp3Fp2H, written directly as a double "
        "binomial sum of incomplete-beta partial fractions"
    ),
    constraints="a's > 0 pairwise distinct; c, d > 0; 0 < z < 1",
    z_range=(0.1, 0.9),
    lists=("a",),
)


def _pp3_unity_validate(p: dict) -> None:
    _a_list_validate(p)
    _require(p["c"] > 0.0, "requires c > 0")
    _require(p["d"] > 0.0, "requires d > 0")
    _require(
        p["b"] < 1.0 - max(p["n"], p["m"]), "requires b < 1 - max(n, m)"
    )
    for al in p["a"]:
        _require_off_poles([p["c"] - al + j for j in range(p["n"])], "(c-a)_n factor")
        _require_off_poles([p["d"] - al + j for j in range(p["m"])], "(d-a)_m factor")
    _check_unity_margin(_pp3_lhs(p))


_simple(
    "Pp3Fp2Unity",
    26,
    ("a", "b", "c", "d"),
    ("n", "m"),
    lhs=_pp3_lhs,
    rhs=lambda p: rd.pp3_unity_rhs(p["a"], p["b"], p["c"], p["d"], p["n"], p["m"]),
    validate=_pp3_unity_validate,
    draw=lambda rng: (
        lambda p_count, n, m: {
            "a": _distinct_list(rng, p_count, 0.3, 4.0),
            "b": min(p_count - n - m - SAMPLING_UNITY_MARGIN, -max(n, m) + 0.8)
            - _u(rng, 0.0, 2.0),
            "c": _u(rng, 0.5, 4.0),
            "d": _u(rng, 0.5, 4.0),
            "n": n,
            "m": m,
        }
    )(_n(rng, 1, 3), _n(rng, 0, 2), _n(rng, 0, 2)),
    description=(
        "(p+3)F(p+2)(a_1..a_p,b,c+n,d+m; a_1+1..a_p+1,c,d; 1) as a pure "
        "beta-function partial-fraction sum, b < 1 - max(n, m)"
    ),
    constraints=(
        "a's > 0 pairwise distinct; c, d > 0; b < 1 - max(n, m); convergent at z = 1"
    ),
    fixed_z=1.0,
    unity=True,
    lists=("a",),
)

_simple(
    "F32P0",
    27,
    ("b", "c", "d"),
    ("n", "m"),
    lhs=lambda p: PFQSpec(
        [p["b"], p["c"] + p["n"], p["d"] + p["m"]], [p["c"], p["d"]], p["z"]
    ),
    rhs=lambda p: rd.f32_p0_rhs(p["b"], p["c"], p["d"], p["n"], p["m"], p["z"]),
    validate=lambda p: (
        _require(p["c"] > 0.0, "requires c > 0"),
        _require(p["d"] > 0.0, "requires d > 0"),
        _require(p["z"] != 1.0, "requires z != 1"),
        _require(abs(p["z"]) < 1.0, "requires |z| < 1"),
    ),
    draw=lambda rng: {
        "b": _u(rng, 0.3, 3.0),
        "c": _u(rng, 0.5, 4.0),
        "d": _u(rng, 0.5, 4.0),
        "n": _n(rng, 0, 4),
        "m": _n(rng, 0, 4),
        "z": _u(rng, -0.8, 0.9),
    },
    description=(
        "3F2(b,c+n,d+m; c,d; z), z != 1, as (1-z)^(-b-m) times a binomial sum "
        "with terminating Gauss-series factors"
    ),
    constraints="c, d > 0, |z| < 1",
    z_range=(-0.8, 0.9),
)
