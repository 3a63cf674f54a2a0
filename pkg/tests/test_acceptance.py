"""Acceptance gate: one test per numbered criterion, budgets included.

Each test prints a single PASS/FAIL line (visible under pytest -s or on
failure) and then asserts.  Tolerances and runtime budgets are pinned;
do not relax them here.
"""

import time

import numpy as np

from crorbits import (
    AlgVec,
    GroupElement,
    J,
    OrbitQuery,
    SubalgebraSpec,
    adjoint,
    adjoint_series,
    adjoint_subspace,
    bracket,
    build_subalgebra,
    classify_orbit,
    closed_form_invariants,
    congruent_orbits,
    cr_decompose,
    curvature,
    displaced_tangent_span,
    group_inverse,
    group_multiply,
    inner,
    invariant_map,
    invariant_map_inverse,
    invert_mean_sq_profile,
    koszul_oracle,
    levi_civita,
    mean_sq_profile,
    norm,
    orbit_invariants,
    rho,
    slice_reduce,
    structured_xi,
    subspace_distance,
    verify,
)
from crorbits.congruence import CANDIDATE_FORMS
from crorbits.verify import candidate_form_residuals

AMBIENT_DIMS = (2, 3, 4, 6, 8)
SMALL_DIMS = (2, 3, 4)
KINDS = ("R", "CRZ", "AR", "ACRZ")


def _verdict(num, label, ok, detail=""):
    tag = "PASS" if ok else "FAIL"
    line = f"{tag} criterion {num}: {label}"
    if detail:
        line += f" ({detail})"
    print(line)
    return ok


def _rand_vec(rng, n, scale=1.0):
    return AlgVec(scale * rng.standard_normal(2 * n))


def _rand_group(rng, n, max_norm=2.0):
    v = rng.standard_normal(2 * n)
    v *= rng.uniform(0.0, max_norm) / np.linalg.norm(v)
    return GroupElement(AlgVec(v))


def all_specs(n):
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


def _rand_spec_of_kind(rng, kind, dims=SMALL_DIMS, min_r=0):
    n = int(dims[rng.integers(len(dims))])
    cands = [s for s in all_specs(n) if s.kind == kind and s.dim_r >= min_r]
    return cands[int(rng.integers(len(cands)))]


def _rand_displacement(rng, spec, scale=1.0, cr_only=False):
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


def _unit_coeffs(rng, size):
    v = rng.standard_normal(size)
    nrm = np.linalg.norm(v)
    if nrm == 0.0:
        v = np.zeros(size)
        if size:
            v[0] = 1.0
        return v
    return v / nrm


def _numeric_mean_sq(spec, g):
    tangent = adjoint_subspace(group_inverse(g), build_subalgebra(spec))
    return orbit_invariants(tangent).mean_sq


def test_criterion_1_jacobi():
    start = time.perf_counter()
    rng = np.random.default_rng(101)
    worst = 0.0
    for k in range(1000):
        n = AMBIENT_DIMS[k % len(AMBIENT_DIMS)]
        x, y, z = (_rand_vec(rng, n) for _ in range(3))
        worst = max(
            worst,
            norm(
                bracket(x, bracket(y, z))
                + bracket(y, bracket(z, x))
                + bracket(z, bracket(x, y))
            ),
        )
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-12 and elapsed < 1.0
    assert _verdict(1, "bracket Jacobi residual", ok,
                    f"max {worst:.3e}, {elapsed:.2f}s")


def test_criterion_2_adjoint_oracle():
    start = time.perf_counter()
    rng = np.random.default_rng(102)
    worst_series = 0.0
    for k in range(1000):
        n = AMBIENT_DIMS[k % len(AMBIENT_DIMS)]
        g = _rand_group(rng, n, max_norm=2.0)
        w = _rand_vec(rng, n)
        direct = adjoint(g, w)
        series = adjoint_series(g, w, 40)
        worst_series = max(worst_series, norm(direct - series) / max(1.0, norm(direct)))
    worst_hom = 0.0
    for k in range(1000):
        n = AMBIENT_DIMS[k % len(AMBIENT_DIMS)]
        g1 = _rand_group(rng, n, max_norm=2.0)
        g2 = _rand_group(rng, n, max_norm=2.0)
        w = _rand_vec(rng, n)
        lhs = adjoint(group_multiply(g1, g2), w)
        rhs = adjoint(g1, adjoint(g2, w))
        worst_hom = max(worst_hom, norm(lhs - rhs) / max(1.0, norm(lhs)))
    elapsed = time.perf_counter() - start
    ok = worst_series <= 1e-9 and worst_hom <= 1e-10 and elapsed < 2.0
    assert _verdict(2, "closed-form adjoint vs series oracle", ok,
                    f"series {worst_series:.3e}, hom {worst_hom:.3e}, {elapsed:.2f}s")


def test_criterion_3_connection():
    start = time.perf_counter()
    rng = np.random.default_rng(103)
    worst_koszul = 0.0
    worst_torsion = 0.0
    worst_metric = 0.0
    for k in range(1000):
        n = AMBIENT_DIMS[k % len(AMBIENT_DIMS)]
        x, y, z = (_rand_vec(rng, n) for _ in range(3))
        dxy = levi_civita(x, y)
        worst_koszul = max(worst_koszul, norm(dxy - koszul_oracle(x, y)))
        worst_torsion = max(worst_torsion, norm(dxy - levi_civita(y, x) - bracket(x, y)))
        worst_metric = max(worst_metric, abs(inner(dxy, z) + inner(y, levi_civita(x, z))))
    elapsed = time.perf_counter() - start
    worst = max(worst_koszul, worst_torsion, worst_metric)
    ok = worst <= 1e-12 and elapsed < 1.0
    assert _verdict(3, "connection closed form vs Koszul oracle", ok,
                    f"max {worst:.3e}, {elapsed:.2f}s")


def test_criterion_4_curvature_normalization():
    start = time.perf_counter()
    rng = np.random.default_rng(104)
    worst = 0.0
    for n in AMBIENT_DIMS:
        for _ in range(100):
            v = rng.standard_normal(2 * n)
            x = AlgVec(v / np.linalg.norm(v))
            jx = J(x)
            worst = max(worst, abs(inner(curvature(x, jx, jx), x) + 1.0))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-9 and elapsed < 1.0
    assert _verdict(4, "holomorphic sectional curvature is -1", ok,
                    f"max {worst:.3e}, {elapsed:.2f}s")


def test_criterion_5_cr_verdicts_and_spans():
    start = time.perf_counter()
    rng = np.random.default_rng(105)
    mismatches = 0
    for kind in KINDS:
        for k in range(200):
            spec = _rand_spec_of_kind(rng, kind)
            b, T, W, y = _rand_displacement(rng, spec)
            if k % 3 == 1:
                T = np.zeros(spec.dim_r)
            elif k % 3 == 2:
                W = np.zeros(2 * spec.dim_cprime)
            g = GroupElement(structured_xi(spec, b=b, T=T, W=W, y=y))
            # route 1: decompose the pulled-back tangent directly
            tangent = adjoint_subspace(group_inverse(g), build_subalgebra(spec))
            direct = cr_decompose(tangent).is_cr
            # route 2: the membership predicate on the displacement coordinates
            if kind == "AR":
                predicate = float(np.linalg.norm(T)) == 0.0
            elif kind == "ACRZ":
                predicate = float(np.linalg.norm(W)) == 0.0
            else:
                predicate = True
            if direct is not predicate:
                mismatches += 1
            if classify_orbit(OrbitQuery(spec, g)).is_cr is not predicate:
                mismatches += 1
    worst_span = 0.0
    for kind in ("R", "AR", "ACRZ"):
        for _ in range(200):
            spec = _rand_spec_of_kind(rng, kind)
            b, T, W, y = _rand_displacement(rng, spec)
            closed = displaced_tangent_span(spec, b=b, T=T, W=W, y=y)
            if kind == "R":
                xi = structured_xi(spec, b=b, T=T, W=W, y=y)
            elif kind == "AR":
                xi = structured_xi(spec, T=2.0 * T, W=2.0 * W, y=y)
            else:
                xi = structured_xi(spec, T=2.0 * T, W=2.0 * W)
            numeric = adjoint_subspace(GroupElement(xi), build_subalgebra(spec))
            worst_span = max(worst_span, subspace_distance(closed, numeric))
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and worst_span <= 1e-9 and elapsed < 5.0
    assert _verdict(5, "CR verdicts agree, displaced spans reproduced", ok,
                    f"mismatches {mismatches}, span {worst_span:.3e}, {elapsed:.2f}s")


def test_criterion_6_slice_factorization():
    start = time.perf_counter()
    rng = np.random.default_rng(106)
    worst = 0.0
    for kind in KINDS:
        for _ in range(200):
            spec = _rand_spec_of_kind(rng, kind)
            g = _rand_group(rng, spec.n, max_norm=1.5)
            gy = slice_reduce(spec, g)
            gh = group_multiply(g, group_inverse(gy))
            h = build_subalgebra(spec)
            xh = gh.xi.data
            res = float(np.linalg.norm(xh - h.basis.T @ (h.basis @ xh)))
            rebuilt = group_multiply(GroupElement.exp(gh.xi), gy)
            res = max(res, norm(rebuilt.xi - g.xi) / max(1.0, norm(g.xi)))
            worst = max(worst, res)
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-10 and elapsed < 2.0
    assert _verdict(6, "slice factorization reproduces the element", ok,
                    f"max {worst:.3e}, {elapsed:.2f}s")


def test_criterion_7_invariant_closed_forms():
    start = time.perf_counter()
    rng = np.random.default_rng(107)
    worst = 0.0
    for kind in KINDS:
        for _ in range(100):
            spec = _rand_spec_of_kind(rng, kind)
            if kind == "R":
                T = rng.standard_normal(spec.dim_r)
                T *= rng.uniform(0.0, 2.0) / max(np.linalg.norm(T), 1e-300)
                g = GroupElement(structured_xi(spec, T=T))
            elif kind == "CRZ":
                g = _rand_group(rng, spec.n, max_norm=1.5)
            elif kind == "AR":
                W = rng.standard_normal(2 * spec.dim_cprime)
                if W.size:
                    W *= rng.uniform(0.0, 2.0) / np.linalg.norm(W)
                g = GroupElement(structured_xi(spec, W=W, y=float(rng.uniform(-1.5, 1.5))))
            else:
                T = rng.standard_normal(spec.dim_r)
                if T.size:
                    T *= rng.uniform(0.0, 2.0) / np.linalg.norm(T)
                g = GroupElement(structured_xi(spec, T=T))
            closed = closed_form_invariants(spec, g)
            numeric = orbit_invariants(
                adjoint_subspace(group_inverse(g), build_subalgebra(spec))
            )
            worst = max(worst, abs(closed.mean_sq - numeric.mean_sq))
            if closed.second_fundamental_sq is not None:
                worst = max(
                    worst,
                    abs(closed.second_fundamental_sq - numeric.second_fundamental_sq),
                )
    worst_anchor = 0.0
    for n in range(2, 7):
        for spec in all_specs(n):
            g = GroupElement.identity(n)
            if spec.kind == "R":
                expect = spec.dim_r ** 2 / 4.0
            elif spec.kind == "CRZ":
                expect = (2.0 + 2 * spec.dim_c + spec.dim_r) ** 2 / 4.0
            else:
                expect = 0.0
            worst_anchor = max(worst_anchor, abs(closed_form_invariants(spec, g).mean_sq - expect))
            worst_anchor = max(worst_anchor, abs(_numeric_mean_sq(spec, g) - expect))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-9 and worst_anchor <= 1e-12 and elapsed < 5.0
    assert _verdict(7, "closed-form invariants and anchor values", ok,
                    f"random {worst:.3e}, anchors {worst_anchor:.3e}, {elapsed:.2f}s")


def test_criterion_8_injectivity_certificates():
    start = time.perf_counter()
    grid = np.linspace(0.0, 50.0, 10_000)
    violations = 0
    for r in range(1, 9):
        vals = np.array([mean_sq_profile(float(t), r) for t in grid])
        violations += int(np.sum(np.diff(vals) <= 0.0))
    rng = np.random.default_rng(108)
    worst = 0.0
    for _ in range(1000):
        z = float(rng.uniform(0.0, 10.0))
        w = float(rng.uniform(0.0, 10.0))
        a = float((5, 7, 11)[rng.integers(3)])
        z2, w2 = invariant_map_inverse(*invariant_map(z, w, a), a)
        worst = max(worst, abs(z2 - z), abs(w2 - w))
    elapsed = time.perf_counter() - start
    ok = violations == 0 and worst <= 1e-9 and elapsed < 1.0
    assert _verdict(8, "profile monotone, planar map round-trips", ok,
                    f"violations {violations}, round-trip {worst:.3e}, {elapsed:.2f}s")


def test_criterion_9_congruence_soundness():
    start = time.perf_counter()
    rng = np.random.default_rng(109)
    problems = []

    worst = 0.0
    for k in range(40):
        kind = KINDS[k % 4]
        if kind == "R":
            spec = _rand_spec_of_kind(rng, "R")
            iota = float(rng.uniform(0.1, 1.2))
            pair = []
            for _ in range(2):
                b = float(rng.uniform(-1.5, 1.5))
                T = (iota / rho(-b / 2.0)) * _unit_coeffs(rng, spec.dim_r)
                _, _, W, y = _rand_displacement(rng, spec, scale=0.8)
                pair.append(GroupElement(structured_xi(spec, b=b, T=T, W=W, y=y)))
            g1, g2 = pair
        elif kind == "CRZ":
            spec = _rand_spec_of_kind(rng, "CRZ")
            g1 = _rand_group(rng, spec.n, 1.5)
            g2 = _rand_group(rng, spec.n, 1.5)
        elif kind == "AR":
            spec = _rand_spec_of_kind(rng, "AR")
            v_norm = float(rng.uniform(0.2, 1.5))
            y = float(rng.uniform(-1.2, 1.2))
            g1 = GroupElement(structured_xi(spec, W=v_norm * _unit_coeffs(rng, 2 * spec.dim_cprime), y=y))
            g2 = GroupElement(structured_xi(spec, W=v_norm * _unit_coeffs(rng, 2 * spec.dim_cprime), y=-y))
        else:
            spec = _rand_spec_of_kind(rng, "ACRZ", min_r=1)
            t_norm = float(rng.uniform(0.2, 1.5))
            g1 = GroupElement(structured_xi(spec, T=t_norm * _unit_coeffs(rng, spec.dim_r)))
            g2 = GroupElement(structured_xi(spec, T=t_norm * _unit_coeffs(rng, spec.dim_r)))
        if not congruent_orbits(OrbitQuery(spec, g1), OrbitQuery(spec, g2)):
            problems.append(f"engineered congruent {kind} pair rejected")
            continue
        worst = max(worst, abs(_numeric_mean_sq(spec, g1) - _numeric_mean_sq(spec, g2)))
    if worst > 1e-9:
        problems.append(f"congruent pair mean_sq drift {worst:.3e}")

    for k in range(24):
        kind = ("R", "AR", "ACRZ")[k % 3]
        if kind == "R":
            spec = _rand_spec_of_kind(rng, "R")
            iota1 = float(rng.uniform(0.1, 0.8))
            iota2 = iota1 + float(rng.uniform(0.2, 0.8))
            pair = []
            for iota in (iota1, iota2):
                b = float(rng.uniform(-1.5, 1.5))
                T = (iota / rho(-b / 2.0)) * _unit_coeffs(rng, spec.dim_r)
                _, _, W, y = _rand_displacement(rng, spec, scale=0.8)
                pair.append(GroupElement(structured_xi(spec, b=b, T=T, W=W, y=y)))
            g1, g2 = pair
        elif kind == "AR":
            spec = _rand_spec_of_kind(rng, "AR")
            v1 = float(rng.uniform(0.2, 1.0))
            v2 = v1 + float(rng.uniform(0.2, 0.8))
            y1 = float(rng.uniform(0.2, 1.0))
            g1 = GroupElement(structured_xi(spec, W=v1 * _unit_coeffs(rng, 2 * spec.dim_cprime), y=y1))
            g2 = GroupElement(structured_xi(spec, W=v2 * _unit_coeffs(rng, 2 * spec.dim_cprime), y=-(y1 + 0.4)))
        else:
            spec = _rand_spec_of_kind(rng, "ACRZ", min_r=1)
            t1 = float(rng.uniform(0.2, 1.0))
            g1 = GroupElement(structured_xi(spec, T=t1 * _unit_coeffs(rng, spec.dim_r)))
            g2 = GroupElement(structured_xi(spec, T=(t1 + 0.5) * _unit_coeffs(rng, spec.dim_r)))
        if congruent_orbits(OrbitQuery(spec, g1), OrbitQuery(spec, g2)):
            problems.append(f"separated {kind} pair accepted")
            continue
        t1s = adjoint_subspace(group_inverse(g1), build_subalgebra(spec))
        t2s = adjoint_subspace(group_inverse(g2), build_subalgebra(spec))
        i1, i2 = orbit_invariants(t1s), orbit_invariants(t2s)
        sep = max(
            abs(i1.mean_sq - i2.mean_sq),
            abs(i1.second_fundamental_sq - i2.second_fundamental_sq),
        )
        if sep <= 1e-8:
            problems.append(f"separated {kind} pair not split by scalar invariant")

    def cr_query(kind):
        spec = _rand_spec_of_kind(rng, kind)
        b, T, W, y = _rand_displacement(rng, spec, scale=0.8, cr_only=True)
        return OrbitQuery(spec, GroupElement(structured_xi(spec, b=b, T=T, W=W, y=y)))

    for k1 in KINDS:
        for k2 in KINDS:
            if k1 == k2:
                continue
            for _ in range(3):
                if congruent_orbits(cr_query(k1), cr_query(k2)):
                    problems.append(f"cross-kind pair {k1}/{k2} reported congruent")

    # The displacement oracle must be consistent with exactly one of the
    # two stated candidate closed forms over a (b, |T|) sweep.  Residuals
    # for every form are printed so a red result is self-explanatory; the
    # verify report records which form the oracle actually selected.
    sweep = candidate_form_residuals()
    residuals = sweep["residuals"]
    matched = [name for name in ("inverse_rho", "rho_product") if residuals[name] <= 1e-9]
    if len(matched) != 1:
        pretty = ", ".join(f"{k}={v:.3e}" for k, v in sorted(residuals.items()))
        problems.append(
            f"{len(matched)} of the two stated candidates match the oracle ({pretty})"
        )

    report = verify("congruence", seed=0, trials=8)
    record = report.get("kind_i_reduced_displacement")
    if record is None:
        problems.append("verify report lacks the selected-form record")
    elif record["selected"] not in CANDIDATE_FORMS:
        problems.append("recorded selected form is not a known candidate")
    elif record["residuals"][record["selected"]] > 1e-9:
        problems.append("recorded selected form does not match the oracle")

    elapsed = time.perf_counter() - start
    if elapsed >= 10.0:
        problems.append(f"budget exceeded at {elapsed:.2f}s")
    ok = not problems
    assert _verdict(9, "congruence decision soundness", ok,
                    "; ".join(problems) if problems else f"{elapsed:.2f}s")


def test_criterion_10_moduli_hand_expansions():
    start = time.perf_counter()
    from crorbits import moduli_space

    problems = []
    for n in (2, 3, 5):
        comps = [c.to_json() for c in moduli_space(n)]
        if len(comps) != 6:
            problems.append(f"n={n}: expected 6 components, got {len(comps)}")
            continue
        kinds = [c["kind"] for c in comps]
        if kinds != ["I", "II", "III", "III", "IV", "IV"]:
            problems.append(f"n={n}: component kinds {kinds}")

    from crorbits import moduli_space as _ms
    from crorbits.congruence import IndexSet

    comps2 = _ms(2)
    if len(IndexSet("I_kl", 0, 1).elements()) != 3:
        problems.append("I_01 does not have exactly 3 elements")
    if comps2[1].index_set.to_json() != {"type": "I_kl", "k": 0, "l": 1}:
        problems.append("n=2 component II index set is not I_01")
    # component IV at n=2: a discrete {1} piece plus {(1,1)} with one half-line
    iv_a, iv_b = comps2[4], comps2[5]
    if not (iv_a.kind == "IV" and iv_a.index_set.elements() == [1] and iv_a.half_lines == 0):
        problems.append("n=2 discrete component IV piece is not {1}")
    if not (iv_b.kind == "IV" and iv_b.index_set.elements() == [(1, 1)] and iv_b.half_lines == 1):
        problems.append("n=2 half-line component IV piece is not {(1,1)} x [0,inf)")

    comps3 = _ms(3)
    if comps3[0].index_set.elements() != [1, 2]:
        problems.append("n=3 component I index set is not {1,2}")
    if len(comps3[1].index_set.elements()) != 6:
        problems.append("n=3 component II does not have 6 elements")
    if not (comps3[2].index_set is None and comps3[2].half_lines == 1):
        problems.append("n=3 bare component III piece malformed")
    if not (comps3[3].index_set.elements() == [1, 2] and comps3[3].half_lines == 2):
        problems.append("n=3 indexed component III piece malformed")

    comps5 = _ms(5)
    if comps5[0].index_set.elements() != [1, 2, 3, 4]:
        problems.append("n=5 component I index set is not {1..4}")
    if len(comps5[1].index_set.elements()) != 15:
        problems.append("n=5 component II does not have 15 elements")
    if len(comps5[5].index_set.elements()) != 10:
        problems.append("n=5 half-line component IV piece does not have 10 pairs")

    elapsed = time.perf_counter() - start
    if elapsed >= 1.0:
        problems.append(f"not instantaneous: {elapsed:.2f}s")
    ok = not problems
    assert _verdict(10, "moduli output matches hand expansions", ok,
                    "; ".join(problems) if problems else f"{elapsed:.3f}s")
