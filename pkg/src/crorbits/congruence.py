"""Congruence decisions, scalar invariants, and the moduli enumeration.

Two CR orbits are congruent iff their kinds and block dimensions match and
the kind's scalar invariants agree: kind I compares the reduced totally
real displacement iota, kind II has no scalars (all orbits congruent),
kind III compares (|W|, |y|) of the slice, kind IV compares |T|.

The kind I reduction: an orbit displaced by Exp(bB + JT + W + yZ) is
congruent to one displaced by Exp(iota J T-hat).  Candidate closed forms
for iota are checked against a decisive numerical oracle - the mean
curvature norm is a congruence invariant and its profile in the squared
displacement is strictly increasing, so inverting it recovers iota.  The
form enabled as the fast path is the one the oracle selects; `crorbits
verify --suite congruence` re-certifies the selection and records it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import GroupElement, group_inverse, rho
from .subspaces import adjoint_subspace
from .classify import (
    KIND_TAG,
    NormalFormFrame,
    OrbitQuery,
    SpecError,
    SubalgebraSpec,
    build_subalgebra,
    canonical_frame,
    slice_coords,
)
from .geometry import orbit_invariants

# Absolute tolerance on key scalars; keys are O(1) closed-form values.
KEY_TOL = 1e-9


def mean_sq_profile(t: float, r: int) -> float:
    """Squared mean curvature of a totally real orbit at t = |T|^2.

    h(t) = (4t + (r + (r+1) t)^2) / (4 (1+t)^2), strictly increasing
    from r^2/4 toward (r+1)^2/4.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    if r < 1:
        raise ValueError("r must be >= 1")
    return (4.0 * t + (r + (r + 1.0) * t) ** 2) / (4.0 * (1.0 + t) ** 2)


def invert_mean_sq_profile(value: float, r: int) -> float:
    """Inverse of the displacement profile by bisection."""
    lo_val = mean_sq_profile(0.0, r)
    sup = (r + 1.0) ** 2 / 4.0
    if value <= lo_val:
        return 0.0
    if value >= sup:
        raise ValueError(f"value {value} is at or above the profile supremum {sup}")
    lo, hi = 0.0, 1.0
    while mean_sq_profile(hi, r) < value:
        hi *= 2.0
        if hi > 1e12:
            raise ValueError("profile inversion failed to bracket the target")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mean_sq_profile(mid, r) < value:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-16 * (1.0 + hi):
            break
    return 0.5 * (lo + hi)


def reduced_displacement(b: float, t_norm: float) -> float:
    """Reduced totally real displacement iota for a kind I slice.

    The enabled closed form is iota = rho(-b/2) |T| = e^(-b/2) rho(b/2) |T|,
    the one selected by the mean-curvature inversion oracle (see
    CANDIDATE_FORMS and the congruence verify suite).
    """
    return rho(-b / 2.0) * t_norm


# Candidate closed forms for the kind I reduction.  The first two are the
# printed alternatives; the third is the oracle-selected fast path used by
# reduced_displacement.
CANDIDATE_FORMS = {
    "inverse_rho": lambda b, t: t / rho(b / 2.0),
    "rho_product": lambda b, t: rho(b / 2.0) * t,
    "reflected_rho": lambda b, t: rho(-b / 2.0) * t,
}
SELECTED_FORM = "reflected_rho"


def reduced_displacement_oracle(spec: SubalgebraSpec, g: GroupElement) -> float:
    """Decisive oracle for the kind I reduction.

    Computes the numeric squared mean curvature of the orbit at the
    un-reduced g and inverts the strictly increasing displacement
    profile.
    """
    if spec.kind != "R":
        raise SpecError("the reduced displacement is a kind R invariant")
    spec.validate()
    h = build_subalgebra(spec)
    tangent = adjoint_subspace(group_inverse(g), h)
    inv = orbit_invariants(tangent)
    t = invert_mean_sq_profile(inv.mean_sq, spec.dim_r)
    return math.sqrt(t)


@dataclass(frozen=True)
class CongruenceKey:
    """Complete congruence invariant: type tag, dimensions, scalars."""

    kind: str  # I, II, III, IV
    dims: tuple[int, int, int]  # (dim_c, dim_r, n)
    scalars: tuple[float, ...]

    def matches(self, other: "CongruenceKey", tol: float = KEY_TOL) -> bool:
        if self.kind != other.kind or self.dims != other.dims:
            return False
        if len(self.scalars) != len(other.scalars):
            return False
        return all(abs(a - b) <= tol for a, b in zip(self.scalars, other.scalars))

    def to_json(self) -> dict:
        return {"kind": self.kind, "dims": list(self.dims), "scalars": list(self.scalars)}


def congruence_key(spec: SubalgebraSpec, g: GroupElement, frame: NormalFormFrame | None = None) -> CongruenceKey:
    """Scalar congruence invariants of the CR orbit H.g(o).

    Extracted from the slice representative: kind I takes the reduced
    displacement iota, kind II is empty, kind III takes the norms
    (|W|, |y|) of the slice exponent components, kind IV takes |T|.
    Raises SpecError when the orbit is not CR.
    """
    spec.validate()
    if frame is None:
        frame = canonical_frame(spec)
    coords = slice_coords(frame, g)
    scale = 1.0 + abs(coords.b) + coords.t_norm + coords.w_norm + abs(coords.y)
    if spec.kind == "R":
        scalars = (reduced_displacement(coords.b, coords.t_norm),)
    elif spec.kind == "CRZ":
        scalars = ()
    elif spec.kind == "AR":
        if coords.t_norm > 1e-9 * scale:
            raise SpecError("orbit is not CR (nonzero JT displacement for kind AR)")
        scalars = (coords.w_norm, abs(coords.y))
    else:
        if coords.w_norm > 1e-9 * scale:
            raise SpecError("orbit is not CR (nonzero c' displacement for kind ACRZ)")
        scalars = (coords.t_norm,)
    return CongruenceKey(KIND_TAG[spec.kind], (spec.dim_c, spec.dim_r, spec.n), scalars)


def congruent_orbits(q1: OrbitQuery, q2: OrbitQuery) -> bool:
    """Decide congruence of two CR orbits.

    True iff the kinds match, the block dimensions match, and the scalar
    invariants agree within KEY_TOL.  Cross-kind pairs are never
    congruent (the kind comparison enforces the exclusion arguments).
    Raises SpecError when either orbit fails to be CR.
    """
    from .classify import classify_orbit

    r1 = classify_orbit(q1)
    r2 = classify_orbit(q2)
    if not r1.is_cr or not r2.is_cr:
        raise SpecError("congruence is decided for CR orbits only")
    return r1.congruence_key.matches(r2.congruence_key)


def invariant_map(z: float, w: float, a: float) -> tuple[float, float]:
    """The injective planar map separating kind III orbits.

    F(z, w) = ((z+w)/(1+z+w), z (a (1+z) + (a+3) w) / (1+z+w)^2) with
    a >= 5 an odd integer in applications; injective on the closed
    positive quadrant.
    """
    s = 1.0 + z + w
    return (z + w) / s, z * (a * (1.0 + z) + (a + 3.0) * w) / s ** 2


def invariant_map_inverse(c1: float, c2: float, a: float) -> tuple[float, float]:
    """Explicit inverse of invariant_map on its admissible branch."""
    if not (0.0 <= c1 < 1.0):
        raise ValueError("first component must lie in [0, 1)")
    disc = (a + 3.0 * c1) ** 2 - 12.0 * c2
    if disc < 0.0:
        if disc > -1e-12 * (a + 3.0 * c1) ** 2:
            disc = 0.0
        else:
            raise ValueError("point is not in the image of the invariant map")
    root = math.sqrt(disc)
    z = (a + 3.0 * c1 - root) / (6.0 * (1.0 - c1))
    w = (3.0 * c1 - a + root) / (6.0 * (1.0 - c1))
    return z, w


@dataclass(frozen=True)
class IndexSet:
    """Discrete factor of a moduli component: I_k or I_{k,l}."""

    type: str  # "I_k" or "I_kl"
    k: int
    l: int | None = None

    def elements(self) -> list:
        if self.type == "I_k":
            return list(range(1, self.k + 1))
        return [(i, j) for i in range(self.k, self.l + 1) for j in range(i, self.l + 1)]

    def to_json(self) -> dict:
        if self.type == "I_k":
            return {"type": "I_k", "k": self.k}
        return {"type": "I_kl", "k": self.k, "l": self.l}


@dataclass(frozen=True)
class ModuliComponent:
    """One piece of the moduli space: discrete index set x half-lines."""

    kind: str  # I, II, III, IV
    index_set: IndexSet | None
    half_lines: int

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "index_set": self.index_set.to_json() if self.index_set else None,
            "half_lines": self.half_lines,
        }


def moduli_space(n: int) -> list[ModuliComponent]:
    """Moduli of congruence classes for ambient dimension n.

    Component I is I_{n-1} x [0,inf); component II is I_{0,n-1};
    component III is [0,inf) disjoint-union I_{n-1} x [0,inf)^2;
    component IV is I_{n-1} disjoint-union I_{1,n-1} x [0,inf).
    Index pairs (i, j) read i = dim r and j the complex dimension of
    g_a minus c.
    """
    if n < 2:
        raise SpecError(f"moduli are enumerated for n >= 2, got {n}")
    return [
        ModuliComponent("I", IndexSet("I_k", n - 1), 1),
        ModuliComponent("II", IndexSet("I_kl", 0, n - 1), 0),
        ModuliComponent("III", None, 1),
        ModuliComponent("III", IndexSet("I_k", n - 1), 2),
        ModuliComponent("IV", IndexSet("I_k", n - 1), 0),
        ModuliComponent("IV", IndexSet("I_kl", 1, n - 1), 1),
    ]
