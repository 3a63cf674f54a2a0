"""Deterministic verification suites over the library's closed forms.

Each suite rechecks a family of identities against independent numerics
(series oracles, brute-force frames, grid sweeps) and reports the worst
residual per property.  Randomized sweeps draw trial k from
np.random.default_rng(seed ^ k) with k a suite-global running counter,
so a fixed seed reproduces the byte stream exactly and any single trial
can be replayed in isolation.
"""

from __future__ import annotations

import math

import numpy as np

from .model import (
    AlgVec,
    GroupElement,
    J,
    adjoint,
    adjoint_series,
    bracket,
    group_inverse,
    group_multiply,
    inner,
    norm,
    rho,
)
from .subspaces import Subspace, adjoint_subspace, subspace_distance
from .classify import (
    OrbitQuery,
    SpecError,
    SubalgebraSpec,
    build_subalgebra,
    canonical_frame,
    classify_orbit,
    displaced_tangent_span,
    normalize_subalgebra,
    slice_reduce,
    structured_xi,
)
from .geometry import (
    closed_form_invariants,
    curvature,
    invariant_gaps,
    koszul_oracle,
    displaced_frame,
    levi_civita,
    orbit_invariants,
)
from .congruence import (
    CANDIDATE_FORMS,
    SELECTED_FORM,
    congruence_key,
    congruent_orbits,
    invariant_map,
    invariant_map_inverse,
    invert_mean_sq_profile,
    mean_sq_profile,
    reduced_displacement_oracle,
)

SUITE_NAMES = ("algebra", "connection", "curvature", "theoremA", "lemmas4x", "congruence")
SUITE_CHOICES = SUITE_NAMES + ("all",)

AMBIENT_DIMS = (2, 3, 4, 6, 8)
SMALL_DIMS = (2, 3, 4)

_MASK64 = (1 << 64) - 1


class TrialStream:
    """Per-trial generators: trial k draws from default_rng(seed ^ k)."""

    def __init__(self, seed: int):
        self.seed = int(seed) & _MASK64
        self.index = 0

    def next_rng(self) -> np.random.Generator:
        rng = np.random.default_rng((self.seed ^ self.index) & _MASK64)
        self.index += 1
        return rng


def _check(name: str, trials: int, tolerance: float, max_residual: float) -> dict:
    return {
        "name": name,
        "trials": int(trials),
        "max_residual": float(max_residual),
        "tolerance": float(tolerance),
        "passed": bool(float(max_residual) <= float(tolerance)),
    }


def _suite_report(name: str, seed: int, checks: list, extras: dict | None = None) -> dict:
    passed = sum(1 for c in checks if c["passed"])
    report = {
        "suite": name,
        "seed": int(seed),
        "checks": checks,
        "passed": passed,
        "failed": len(checks) - passed,
        "ok": passed == len(checks),
    }
    if extras:
        report.update(extras)
    return report


def _rand_vec(rng, n: int, scale: float = 1.0) -> AlgVec:
    return AlgVec(scale * rng.standard_normal(2 * n))


def _rand_unit(rng, n: int) -> AlgVec:
    v = rng.standard_normal(2 * n)
    return AlgVec(v / np.linalg.norm(v))


def _rand_group(rng, n: int, max_norm: float = 2.0) -> GroupElement:
    v = rng.standard_normal(2 * n)
    v *= rng.uniform(0.0, max_norm) / np.linalg.norm(v)
    return GroupElement(AlgVec(v))


def all_specs(n: int) -> list[SubalgebraSpec]:
    """Every valid normal-form descriptor at ambient dimension n."""
    out = []
    for r in range(1, n):
        out.append(SubalgebraSpec("R", 0, r, n))
    for r in range(0, n):
        out.append(SubalgebraSpec("AR", 0, r, n))
    for c in range(0, n):
        for r in range(0, n - c):
            out.append(SubalgebraSpec("CRZ", c, r, n))
            out.append(SubalgebraSpec("ACRZ", c, r, n))
    return out


def _rand_spec(rng, dims=SMALL_DIMS) -> SubalgebraSpec:
    n = int(dims[rng.integers(len(dims))])
    specs = all_specs(n)
    return specs[int(rng.integers(len(specs)))]


def _rand_displacement(rng, spec: SubalgebraSpec, scale: float = 1.0, cr_only: bool = False):
    """Random structured coordinates (b, T, W, y) for the descriptor."""
    b = scale * float(rng.standard_normal())
    y = scale * float(rng.standard_normal())
    T = scale * rng.standard_normal(spec.dim_r)
    W = scale * rng.standard_normal(2 * spec.dim_cprime)
    if cr_only:
        if spec.kind == "AR":
            T = np.zeros(spec.dim_r)
        elif spec.kind == "ACRZ":
            W = np.zeros(2 * spec.dim_cprime)
    return b, T, W, y


def _rand_h_element(rng, spec: SubalgebraSpec, scale: float = 0.8) -> GroupElement:
    h = build_subalgebra(spec)
    coeff = scale * rng.standard_normal(h.dim)
    return GroupElement(AlgVec(coeff @ h.basis))


# -- algebra ---------------------------------------------------------------


def run_algebra(seed: int = 0, trials: int | None = None) -> dict:
    count = 200 if trials is None else int(trials)
    stream = TrialStream(seed)
    checks = []

    worst = 0.0
    for _ in range(count):
        rng = stream.next_rng()
        n = int(AMBIENT_DIMS[rng.integers(len(AMBIENT_DIMS))])
        x, y, z = (_rand_vec(rng, n) for _ in range(3))
        res = norm(
            bracket(x, bracket(y, z))
            + bracket(y, bracket(z, x))
            + bracket(z, bracket(x, y))
        )
        worst = max(worst, res)
    checks.append(_check("jacobi_identity", count, 1e-12, worst))

    worst = 0.0
    for _ in range(count):
        rng = stream.next_rng()
        n = int(AMBIENT_DIMS[rng.integers(len(AMBIENT_DIMS))])
        g = _rand_group(rng, n, max_norm=2.0)
        w = _rand_vec(rng, n)
        direct = adjoint(g, w)
        series = adjoint_series(g, w, 40)
        worst = max(worst, norm(direct - series) / max(1.0, norm(direct)))
    checks.append(_check("adjoint_matches_series", count, 1e-9, worst))

    worst = 0.0
    for _ in range(count):
        rng = stream.next_rng()
        n = int(AMBIENT_DIMS[rng.integers(len(AMBIENT_DIMS))])
        g1 = _rand_group(rng, n, max_norm=2.0)
        g2 = _rand_group(rng, n, max_norm=2.0)
        w = _rand_vec(rng, n)
        lhs = adjoint(group_multiply(g1, g2), w)
        rhs = adjoint(g1, adjoint(g2, w))
        worst = max(worst, norm(lhs - rhs) / max(1.0, norm(lhs)))
    checks.append(_check("adjoint_homomorphism", count, 1e-10, worst))

    worst = 0.0
    for _ in range(count):
        rng = stream.next_rng()
        n = int(AMBIENT_DIMS[rng.integers(len(AMBIENT_DIMS))])
        g = _rand_group(rng, n, max_norm=2.0)
        ginv = group_inverse(g)
        res = max(
            norm(group_multiply(g, ginv).xi),
            norm(group_multiply(ginv, g).xi),
        )
        worst = max(worst, res)
    checks.append(_check("group_inverse", count, 1e-12, worst))

    worst = 0.0
    for _ in range(count):
        rng = stream.next_rng()
        n = int(AMBIENT_DIMS[rng.integers(len(AMBIENT_DIMS))])
        g1, g2, g3 = (_rand_group(rng, n, max_norm=1.5) for _ in range(3))
        lhs = group_multiply(group_multiply(g1, g2), g3)
        rhs = group_multiply(g1, group_multiply(g2, g3))
        worst = max(worst, norm(lhs.xi - rhs.xi))
    checks.append(_check("group_associative", count, 1e-12, worst))

    grid = np.concatenate([np.linspace(-10.0, 10.0, 2001), [-1e-6, -1e-9, 1e-9, 1e-6]])
    worst = max(abs(rho(-t) - math.exp(-t) * rho(t)) for t in grid)
    checks.append(_check("rho_reflection", grid.size, 1e-12, worst))

    return _suite_report("algebra", seed, checks)


# -- connection ------------------------------------------------------------


def run_connection(seed: int = 0, trials: int | None = None) -> dict:
    count = 200 if trials is None else int(trials)
    stream = TrialStream(seed)
    checks = []

    worst_koszul = 0.0
    worst_torsion = 0.0
    worst_metric = 0.0
    for _ in range(count):
        rng = stream.next_rng()
        n = int(AMBIENT_DIMS[rng.integers(len(AMBIENT_DIMS))])
        x, y, z = (_rand_vec(rng, n) for _ in range(3))
        dxy = levi_civita(x, y)
        worst_koszul = max(worst_koszul, norm(dxy - koszul_oracle(x, y)))
        worst_torsion = max(worst_torsion, norm(dxy - levi_civita(y, x) - bracket(x, y)))
        # left-invariant fields have constant inner products, so the
        # compatibility derivative term vanishes
        worst_metric = max(worst_metric, abs(inner(dxy, z) + inner(y, levi_civita(x, z))))
    checks.append(_check("levi_civita_matches_koszul", count, 1e-12, worst_koszul))
    checks.append(_check("torsion_free", count, 1e-12, worst_torsion))
    checks.append(_check("metric_compatible", count, 1e-12, worst_metric))

    return _suite_report("connection", seed, checks)


# -- curvature -------------------------------------------------------------


def run_curvature(seed: int = 0, trials: int | None = None) -> dict:
    count = 100 if trials is None else int(trials)
    stream = TrialStream(seed)
    checks = []

    worst = 0.0
    for _ in range(count):
        rng = stream.next_rng()
        n = int(AMBIENT_DIMS[rng.integers(len(AMBIENT_DIMS))])
        x = _rand_unit(rng, n)
        jx = J(x)
        worst = max(worst, abs(inner(curvature(x, jx, jx), x) + 1.0))
    checks.append(_check("holomorphic_sectional_minus_one", count, 1e-9, worst))

    worst = 0.0
    for _ in range(count):
        rng = stream.next_rng()
        n = int(AMBIENT_DIMS[rng.integers(len(AMBIENT_DIMS))])
        x, y, z, w = (_rand_vec(rng, n) for _ in range(4))
        r_xyzw = inner(curvature(x, y, z), w)
        res = max(
            abs(r_xyzw + inner(curvature(y, x, z), w)),
            abs(r_xyzw + inner(curvature(x, y, w), z)),
            abs(r_xyzw - inner(curvature(z, w, x), y)),
        )
        worst = max(worst, res)
    checks.append(_check("curvature_tensor_symmetries", count, 1e-12, worst))

    worst = 0.0
    for _ in range(count):
        rng = stream.next_rng()
        n = int(AMBIENT_DIMS[rng.integers(len(AMBIENT_DIMS))])
        x, y, z = (_rand_vec(rng, n) for _ in range(3))
        worst = max(
            worst,
            norm(curvature(x, y, z) + curvature(y, z, x) + curvature(z, x, y)),
        )
    checks.append(_check("first_bianchi", count, 1e-12, worst))

    worst = 0.0
    for n in AMBIENT_DIMS:
        b = AlgVec(np.eye(2 * n)[0])
        z = AlgVec(np.eye(2 * n)[-1])
        worst = max(worst, abs(inner(curvature(b, z, z), b) + 1.0))
    checks.append(_check("scale_center_plane_sectional", len(AMBIENT_DIMS), 1e-12, worst))

    return _suite_report("curvature", seed, checks)


# -- theoremA --------------------------------------------------------------


def run_theoremA(seed: int = 0, trials: int | None = None) -> dict:
    count = 200 if trials is None else int(trials)
    stream = TrialStream(seed)
    checks = []

    mismatches = 0
    for k in range(count):
        rng = stream.next_rng()
        spec = _rand_spec(rng)
        mode = k % 3  # generic, zeroed real displacement, zeroed complex displacement
        b, T, W, y = _rand_displacement(rng, spec, scale=1.0)
        if mode == 1:
            T = np.zeros(spec.dim_r)
        elif mode == 2:
            W = np.zeros(2 * spec.dim_cprime)
        g = GroupElement(structured_xi(spec, b=b, T=T, W=W, y=y))
        expect_cr = True
        if spec.kind == "AR":
            expect_cr = float(np.linalg.norm(T)) == 0.0
        elif spec.kind == "ACRZ":
            expect_cr = float(np.linalg.norm(W)) == 0.0
        report = classify_orbit(OrbitQuery(spec, g))
        if report.is_cr is not expect_cr:
            mismatches += 1
    checks.append(_check("dual_route_cr_verdicts", count, 0.0, float(mismatches)))

    worst = 0.0
    for _ in range(count):
        rng = stream.next_rng()
        spec = _rand_spec(rng)
        if spec.kind == "CRZ":
            spec = SubalgebraSpec("ACRZ", spec.dim_c, spec.dim_r, spec.n)
        b, T, W, y = _rand_displacement(rng, spec, scale=1.0)
        closed = displaced_tangent_span(spec, b=b, T=T, W=W, y=y)
        if spec.kind == "R":
            xi = structured_xi(spec, b=b, T=T, W=W, y=y)
        elif spec.kind == "AR":
            xi = structured_xi(spec, b=0.0, T=2.0 * T, W=2.0 * W, y=y)
        else:
            xi = structured_xi(spec, b=0.0, T=2.0 * T, W=2.0 * W, y=0.0)
        numeric = adjoint_subspace(GroupElement(xi), build_subalgebra(spec))
        worst = max(worst, subspace_distance(closed, numeric))
    checks.append(_check("displaced_tangent_closed_forms", count, 1e-9, worst))

    worst = 0.0
    dim_mismatches = 0
    for _ in range(count):
        rng = stream.next_rng()
        spec = _rand_spec(rng)
        # normalization is stated for subalgebras whose base-point orbit is
        # CR, so conjugators combine an H-element with a CR displacement
        b, T, W, y = _rand_displacement(rng, spec, scale=1.0, cr_only=True)
        g_cr = GroupElement(structured_xi(spec, b=b, T=T, W=W, y=y))
        k = group_inverse(group_multiply(_rand_h_element(rng, spec), g_cr))
        h_conj = adjoint_subspace(k, build_subalgebra(spec))
        g0, spec2 = normalize_subalgebra(h_conj)
        if (spec2.kind, spec2.dim_c, spec2.dim_r) != (spec.kind, spec.dim_c, spec.dim_r):
            dim_mismatches += 1
            continue
        worst = max(
            worst,
            subspace_distance(adjoint_subspace(g0, h_conj), build_subalgebra(spec2)),
        )
    worst = max(worst, float(dim_mismatches))
    checks.append(_check("normalization_round_trip", count, 1e-8, worst))

    worst = 0.0
    for _ in range(count):
        rng = stream.next_rng()
        spec = _rand_spec(rng)
        g = _rand_group(rng, spec.n, max_norm=1.5)
        gy = slice_reduce(spec, g)
        gh = group_multiply(g, group_inverse(gy))
        h = build_subalgebra(spec)
        xh = gh.xi.data
        res = float(np.linalg.norm(xh - h.basis.T @ (h.basis @ xh)))
        rebuilt = group_multiply(gh, gy)
        res = max(res, norm(rebuilt.xi - g.xi) / max(1.0, norm(g.xi)))
        worst = max(worst, res)
    checks.append(_check("slice_factorization", count, 1e-10, worst))

    return _suite_report("theoremA", seed, checks)


# -- lemmas4x --------------------------------------------------------------


def _reduced_draw(rng, spec: SubalgebraSpec):
    """Random reduced-form displacement for closed_form_invariants."""
    if spec.kind == "R":
        T = rng.standard_normal(spec.dim_r)
        T *= rng.uniform(0.0, 2.0) / max(np.linalg.norm(T), 1e-300)
        return GroupElement(structured_xi(spec, T=T))
    if spec.kind == "CRZ":
        return _rand_group(rng, spec.n, max_norm=1.5)
    if spec.kind == "AR":
        W = rng.standard_normal(2 * spec.dim_cprime)
        if W.size:
            W *= rng.uniform(0.0, 2.0) / np.linalg.norm(W)
        y = float(rng.uniform(-1.5, 1.5))
        return GroupElement(structured_xi(spec, W=W, y=y))
    T = rng.standard_normal(spec.dim_r)
    if T.size:
        T *= rng.uniform(0.0, 2.0) / np.linalg.norm(T)
    return GroupElement(structured_xi(spec, T=T))


def run_lemmas4x(seed: int = 0, trials: int | None = None) -> dict:
    count = 100 if trials is None else int(trials)
    stream = TrialStream(seed)
    checks = []

    worst = {"R": 0.0, "CRZ": 0.0, "AR": 0.0, "ACRZ": 0.0}
    per_kind = count
    for kind in ("R", "CRZ", "AR", "ACRZ"):
        for _ in range(per_kind):
            rng = stream.next_rng()
            n = int(SMALL_DIMS[rng.integers(len(SMALL_DIMS))])
            cands = [s for s in all_specs(n) if s.kind == kind]
            spec = cands[int(rng.integers(len(cands)))]
            g = _reduced_draw(rng, spec)
            closed = closed_form_invariants(spec, g)
            tangent = adjoint_subspace(group_inverse(g), build_subalgebra(spec))
            numeric = orbit_invariants(tangent)
            res = abs(closed.mean_sq - numeric.mean_sq)
            if closed.second_fundamental_sq is not None:
                res = max(res, abs(closed.second_fundamental_sq - numeric.second_fundamental_sq))
            if closed.mean_curvature_vector is not None:
                res = max(res, abs(closed.mean_sq - inner(closed.mean_curvature_vector, closed.mean_curvature_vector)))
            worst[kind] = max(worst[kind], res)
    for kind in ("R", "CRZ", "AR", "ACRZ"):
        checks.append(_check(f"closed_invariants_match_numeric_{kind}", per_kind, 1e-9, worst[kind]))

    worst_anchor = 0.0
    anchor_count = 0
    for n in range(2, 7):
        for spec in all_specs(n):
            g = GroupElement(AlgVec(np.zeros(2 * n)))
            inv = closed_form_invariants(spec, g)
            if spec.kind == "R":
                expect = spec.dim_r ** 2 / 4.0
            elif spec.kind == "CRZ":
                expect = (2.0 + 2 * spec.dim_c + spec.dim_r) ** 2 / 4.0
            else:
                expect = 0.0  # scale-line kinds are minimal at the origin
            worst_anchor = max(worst_anchor, abs(inv.mean_sq - expect))
            anchor_count += 1
    checks.append(_check("origin_anchor_values", anchor_count, 1e-12, worst_anchor))

    worst = 0.0
    for _ in range(count):
        rng = stream.next_rng()
        n = int(SMALL_DIMS[rng.integers(len(SMALL_DIMS))])
        r = int(rng.integers(0, n))
        spec = SubalgebraSpec("AR", 0, r, n)
        g = _reduced_draw(rng, spec)
        frame = canonical_frame(spec)
        d = frame.decompose(g.xi)
        w_norm = float(np.linalg.norm(d["V"])) / 2.0  # g = Exp(2W + yZ)
        y = float(d["zeta"])
        gap1, gap2 = invariant_gaps(spec, w_norm, y)
        tangent = adjoint_subspace(group_inverse(g), build_subalgebra(spec))
        numeric = orbit_invariants(tangent)
        res = max(
            abs(gap1 - (numeric.mean_sq - numeric.second_fundamental_sq)),
            abs(gap2 - ((1 + r) * numeric.second_fundamental_sq - numeric.mean_sq)),
        )
        worst = max(worst, res)
    checks.append(_check("invariant_gap_identities", count, 1e-9, worst))

    worst = 0.0
    for _ in range(count):
        rng = stream.next_rng()
        n = int(SMALL_DIMS[rng.integers(len(SMALL_DIMS))])
        r = int(rng.integers(0, n - 1))  # needs a nonzero complementary block
        spec = SubalgebraSpec("AR", 0, r, n)
        W = rng.standard_normal(2 * spec.dim_cprime)
        W *= rng.uniform(0.2, 2.0) / np.linalg.norm(W)
        y = float(rng.uniform(-1.5, 1.5))
        X, xi1, xi2 = displaced_frame(spec, W=W, y=y)
        gram = np.array(
            [
                [inner(a, b) for b in (X, xi1, xi2)]
                for a in (X, xi1, xi2)
            ]
        )
        res = float(np.max(np.abs(gram - np.eye(3))))
        # tangent of the orbit through Exp(2W + yZ), pulled back to the base
        # point, is the forward image under the inverse displacement
        tangent = displaced_tangent_span(spec, T=np.zeros(r), W=-W, y=-y)
        res = max(res, norm(tangent.project(xi1)))
        res = max(res, norm(tangent.project(xi2)))
        res = max(res, norm(X - tangent.project(X)))
        worst = max(worst, res)
    checks.append(_check("displaced_frame_orthonormal", count, 1e-9, worst))

    return _suite_report("lemmas4x", seed, checks)


# -- congruence ------------------------------------------------------------


def _numeric_mean_sq(spec: SubalgebraSpec, g: GroupElement) -> float:
    tangent = adjoint_subspace(group_inverse(g), build_subalgebra(spec))
    return orbit_invariants(tangent).mean_sq


def _spec_with_kind(rng, kind: str, dims=SMALL_DIMS, min_r: int = 0) -> SubalgebraSpec:
    n = int(dims[rng.integers(len(dims))])
    cands = [s for s in all_specs(n) if s.kind == kind and s.dim_r >= min_r]
    return cands[int(rng.integers(len(cands)))]


def _unit_coeffs(rng, size: int) -> np.ndarray:
    v = rng.standard_normal(size)
    nrm = np.linalg.norm(v)
    if nrm == 0.0:
        v = np.zeros(size)
        if size:
            v[0] = 1.0
        return v
    return v / nrm


def _congruent_pair(rng, kind: str):
    """Two displacements of one spec engineered to share the congruence key."""
    if kind == "R":
        spec = _spec_with_kind(rng, "R")
        iota = float(rng.uniform(0.1, 1.2))
        pair = []
        for _ in range(2):
            b = float(rng.uniform(-1.5, 1.5))
            t_norm = iota / rho(-b / 2.0)
            T = t_norm * _unit_coeffs(rng, spec.dim_r)
            _, _, W, y = _rand_displacement(rng, spec, scale=0.8)
            pair.append(GroupElement(structured_xi(spec, b=b, T=T, W=W, y=y)))
        return spec, pair[0], pair[1]
    if kind == "CRZ":
        spec = _spec_with_kind(rng, "CRZ")
        return spec, _rand_group(rng, spec.n, 1.5), _rand_group(rng, spec.n, 1.5)
    if kind == "AR":
        spec = _spec_with_kind(rng, "AR")
        v_norm = float(rng.uniform(0.2, 1.5))
        y = float(rng.uniform(-1.2, 1.2))
        g1 = GroupElement(
            structured_xi(spec, W=v_norm * _unit_coeffs(rng, 2 * spec.dim_cprime), y=y)
        )
        g2 = GroupElement(
            structured_xi(spec, W=v_norm * _unit_coeffs(rng, 2 * spec.dim_cprime), y=-y)
        )
        return spec, g1, g2
    spec = _spec_with_kind(rng, "ACRZ", min_r=1)
    t_norm = float(rng.uniform(0.2, 1.5))
    g1 = GroupElement(structured_xi(spec, T=t_norm * _unit_coeffs(rng, spec.dim_r)))
    g2 = GroupElement(structured_xi(spec, T=t_norm * _unit_coeffs(rng, spec.dim_r)))
    return spec, g1, g2


def _separated_pair(rng, kind: str):
    """Two displacements of one spec with scalar invariants forced apart."""
    if kind == "R":
        spec = _spec_with_kind(rng, "R")
        iota1 = float(rng.uniform(0.1, 0.8))
        iota2 = iota1 + float(rng.uniform(0.2, 0.8))
        pair = []
        for iota in (iota1, iota2):
            b = float(rng.uniform(-1.5, 1.5))
            T = (iota / rho(-b / 2.0)) * _unit_coeffs(rng, spec.dim_r)
            _, _, W, y = _rand_displacement(rng, spec, scale=0.8)
            pair.append(GroupElement(structured_xi(spec, b=b, T=T, W=W, y=y)))
        return spec, pair[0], pair[1]
    if kind == "AR":
        spec = _spec_with_kind(rng, "AR")
        v1 = float(rng.uniform(0.2, 1.0))
        v2 = v1 + float(rng.uniform(0.2, 0.8))
        y1 = float(rng.uniform(0.2, 1.0))
        y2 = y1 + float(rng.uniform(0.2, 0.8))
        g1 = GroupElement(
            structured_xi(spec, W=v1 * _unit_coeffs(rng, 2 * spec.dim_cprime), y=y1)
        )
        g2 = GroupElement(
            structured_xi(spec, W=v2 * _unit_coeffs(rng, 2 * spec.dim_cprime), y=-y2)
        )
        return spec, g1, g2
    spec = _spec_with_kind(rng, "ACRZ", min_r=1)
    t1 = float(rng.uniform(0.2, 1.0))
    t2 = t1 + float(rng.uniform(0.2, 0.8))
    g1 = GroupElement(structured_xi(spec, T=t1 * _unit_coeffs(rng, spec.dim_r)))
    g2 = GroupElement(structured_xi(spec, T=t2 * _unit_coeffs(rng, spec.dim_r)))
    return spec, g1, g2


def _cr_query(rng, kind: str) -> OrbitQuery:
    spec = _spec_with_kind(rng, kind)
    b, T, W, y = _rand_displacement(rng, spec, scale=0.8, cr_only=True)
    return OrbitQuery(spec, GroupElement(structured_xi(spec, b=b, T=T, W=W, y=y)))


def candidate_form_residuals(n: int = 2) -> dict:
    """Deterministic (b, |T|) sweep scoring each closed form against the oracle.

    The oracle inverts the numeric squared mean curvature through the
    strictly increasing displacement profile, so it pins down the reduced
    displacement independently of any closed form.
    """
    spec = SubalgebraSpec("R", 0, 1, n)
    residuals = {name: 0.0 for name in CANDIDATE_FORMS}
    points = 0
    for b in np.linspace(-2.0, 2.0, 9):
        for t in np.linspace(0.1, 1.5, 8):
            T = np.zeros(spec.dim_r)
            T[0] = t
            g = GroupElement(structured_xi(spec, b=float(b), T=T))
            oracle = reduced_displacement_oracle(spec, g)
            for name, form in CANDIDATE_FORMS.items():
                residuals[name] = max(residuals[name], abs(form(float(b), t) - oracle))
            points += 1
    return {"points": points, "residuals": residuals}


def run_congruence(seed: int = 0, trials: int | None = None) -> dict:
    count = 100 if trials is None else int(trials)
    pair_count = max(8, count // 2)
    stream = TrialStream(seed)
    checks = []

    worst = 0.0
    for k in range(count):
        rng = stream.next_rng()
        kind = ("R", "CRZ", "AR", "ACRZ")[k % 4]
        spec = _spec_with_kind(rng, kind)
        b, T, W, y = _rand_displacement(rng, spec, scale=0.8, cr_only=True)
        g = GroupElement(structured_xi(spec, b=b, T=T, W=W, y=y))
        key1 = congruence_key(spec, g)
        key2 = congruence_key(spec, group_multiply(_rand_h_element(rng, spec), g))
        if key1.kind != key2.kind or key1.dims != key2.dims:
            worst = max(worst, 1.0)
        elif key1.scalars:
            worst = max(
                worst,
                max(abs(a - b2) for a, b2 in zip(key1.scalars, key2.scalars)),
            )
    checks.append(_check("key_left_coset_invariance", count, 1e-9, worst))

    worst = 0.0
    for k in range(pair_count):
        rng = stream.next_rng()
        kind = ("R", "CRZ", "AR", "ACRZ")[k % 4]
        spec, g1, g2 = _congruent_pair(rng, kind)
        if not congruent_orbits(OrbitQuery(spec, g1), OrbitQuery(spec, g2)):
            worst = max(worst, 1.0)
            continue
        worst = max(worst, abs(_numeric_mean_sq(spec, g1) - _numeric_mean_sq(spec, g2)))
    checks.append(_check("congruent_pairs_equal_mean_sq", pair_count, 1e-9, worst))

    failures = 0
    for k in range(pair_count):
        rng = stream.next_rng()
        kind = ("R", "AR", "ACRZ")[k % 3]
        spec, g1, g2 = _separated_pair(rng, kind)
        if congruent_orbits(OrbitQuery(spec, g1), OrbitQuery(spec, g2)):
            failures += 1
            continue
        t1 = adjoint_subspace(group_inverse(g1), build_subalgebra(spec))
        t2 = adjoint_subspace(group_inverse(g2), build_subalgebra(spec))
        i1, i2 = orbit_invariants(t1), orbit_invariants(t2)
        sep = abs(i1.mean_sq - i2.mean_sq)
        if i1.second_fundamental_sq is not None:
            sep = max(sep, abs(i1.second_fundamental_sq - i2.second_fundamental_sq))
        if sep <= 1e-8:
            failures += 1
    checks.append(_check("noncongruent_pairs_separated", pair_count, 0.0, float(failures)))

    failures = 0
    for _ in range(count):
        rng = stream.next_rng()
        spec = _spec_with_kind(rng, "CRZ")
        q1 = OrbitQuery(spec, _rand_group(rng, spec.n, 1.5))
        q2 = OrbitQuery(spec, _rand_group(rng, spec.n, 1.5))
        if not congruent_orbits(q1, q2):
            failures += 1
    checks.append(_check("kind_II_single_class", count, 0.0, float(failures)))

    failures = 0
    pairs = 0
    for k1 in ("R", "CRZ", "AR", "ACRZ"):
        for k2 in ("R", "CRZ", "AR", "ACRZ"):
            if k1 == k2:
                continue
            for _ in range(3):
                rng = stream.next_rng()
                if congruent_orbits(_cr_query(rng, k1), _cr_query(rng, k2)):
                    failures += 1
                pairs += 1
    checks.append(_check("cross_kind_never_congruent", pairs, 0.0, float(failures)))

    violations = 0
    grid = np.linspace(0.0, 50.0, 10_000)
    for r in range(1, 9):
        vals = np.array([mean_sq_profile(float(t), r) for t in grid])
        violations += int(np.sum(np.diff(vals) <= 0.0))
    checks.append(_check("profile_strictly_increasing", 8 * (grid.size - 1), 0.0, float(violations)))

    worst = 0.0
    round_trips = 1000 if trials is None else int(trials)
    for _ in range(round_trips):
        rng = stream.next_rng()
        r = int(rng.integers(1, 9))
        t = float(rng.uniform(0.0, 20.0))
        worst = max(worst, abs(invert_mean_sq_profile(mean_sq_profile(t, r), r) - t))
    checks.append(_check("profile_inversion_round_trip", round_trips, 1e-9, worst))

    worst = 0.0
    for _ in range(round_trips):
        rng = stream.next_rng()
        z = float(rng.uniform(0.0, 10.0))
        w = float(rng.uniform(0.0, 10.0))
        a = float((5, 7, 11)[rng.integers(3)])
        z2, w2 = invariant_map_inverse(*invariant_map(z, w, a), a)
        worst = max(worst, abs(z2 - z), abs(w2 - w))
    checks.append(_check("planar_invariant_map_round_trip", round_trips, 1e-9, worst))

    sweep = candidate_form_residuals()
    checks.append(
        _check(
            "kind_I_selected_form_matches_oracle",
            sweep["points"],
            1e-9,
            sweep["residuals"][SELECTED_FORM],
        )
    )
    extras = {
        "kind_i_reduced_displacement": {
            "selected": SELECTED_FORM,
            "residuals": sweep["residuals"],
            "tolerance": 1e-9,
        }
    }

    return _suite_report("congruence", seed, checks, extras=extras)


SUITES = {
    "algebra": run_algebra,
    "connection": run_connection,
    "curvature": run_curvature,
    "theoremA": run_theoremA,
    "lemmas4x": run_lemmas4x,
    "congruence": run_congruence,
}


def verify(suite: str, seed: int = 0, trials: int | None = None) -> dict:
    """Run one named suite (or all of them) and return the report dict."""
    if suite == "all":
        subs = [SUITES[name](seed, trials) for name in SUITE_NAMES]
        passed = sum(s["passed"] for s in subs)
        failed = sum(s["failed"] for s in subs)
        return {
            "suite": "all",
            "seed": int(seed),
            "suites": subs,
            "passed": passed,
            "failed": failed,
            "ok": failed == 0,
        }
    if suite not in SUITES:
        raise SpecError(f"unknown suite {suite!r}; expected one of {SUITE_CHOICES}")
    return SUITES[suite](seed, trials)
