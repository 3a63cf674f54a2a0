"""Orbit classification for connected subgroups of the solvable model.

A subalgebra h whose orbit through the base point is CR is conjugate to a
normal form built from four blocks: optionally the scale line RB, a complex
subspace c of g_a, a totally real subspace r of g_a orthogonal to C c, and
optionally the center RZ.  The four kinds

    R    = r                      (totally real orbits, tag I)
    CRZ  = c + r + RZ             (tag II)
    AR   = RB + r                 (tag III)
    ACRZ = RB + c + r + RZ        (tag IV)

index the classification.  Every orbit of H = Exp(h) is H.Exp(Y)(o) for a
unique slice element Y orthogonal to h; the classifier decides CR-ness of
H.g(o) both directly (CR decomposition of Ad(g^-1) h) and through the
closed-form membership predicate of the kind, and requires agreement.

Canonical embedding: c occupies the first dim_c complex coordinates of g_a,
r the real axes of the next dim_r coordinates, their imaginary axes carry
J r, and the remaining coordinates form the complementary complex space c'.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .model import (
    AlgVec,
    GroupElement,
    J,
    adjoint,
    group_inverse,
    group_multiply,
    norm,
    rho,
    check_dim,
)
from .subspaces import (
    CrDecomposition,
    Subspace,
    adjoint_subspace,
    cr_decompose,
    is_subalgebra,
    orthonormalize,
)

KINDS = ("R", "CRZ", "AR", "ACRZ")
KIND_TAG = {"R": "I", "CRZ": "II", "AR": "III", "ACRZ": "IV"}

# Case dispatch and membership thresholds.
NORMALIZE_TOL = 1e-10
CR_TOL = 1e-9


class SpecError(ValueError):
    """Invalid subalgebra descriptor, query, or scenario."""


class InconsistencyError(RuntimeError):
    """The two classification routes disagree; signals an implementation bug."""


@dataclass(frozen=True)
class SubalgebraSpec:
    """Normal-form descriptor: kind plus block dimensions."""

    kind: str
    dim_c: int
    dim_r: int
    n: int

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise SpecError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        check_dim(self.n)
        if self.dim_c < 0 or self.dim_r < 0:
            raise SpecError("block dimensions must be nonnegative")
        if self.kind in ("R", "AR"):
            if self.dim_c != 0:
                raise SpecError(f"kind {self.kind} forces dim_c = 0")
            # dim_r = 0 is the trivial point orbit for kind R, but for kind AR
            # it is the scale line RB alone (equidistant curves to a geodesic).
            if self.kind == "R" and not (1 <= self.dim_r <= self.n - 1):
                raise SpecError("kind R needs 1 <= dim_r <= n-1")
            if self.kind == "AR" and not (0 <= self.dim_r <= self.n - 1):
                raise SpecError("kind AR needs 0 <= dim_r <= n-1")
        if self.dim_c + self.dim_r > self.n - 1:
            raise SpecError(
                f"capacity exceeded: dim_c + dim_r = {self.dim_c + self.dim_r} > n-1 = {self.n - 1}"
            )

    @property
    def has_b(self) -> bool:
        return self.kind in ("AR", "ACRZ")

    @property
    def has_z(self) -> bool:
        return self.kind in ("CRZ", "ACRZ")

    @property
    def dim_h(self) -> int:
        return self.has_b + 2 * self.dim_c + self.dim_r + self.has_z

    @property
    def dim_cprime(self) -> int:
        """Complex dimension of g_a minus (c + C r)."""
        return self.n - 1 - self.dim_c - self.dim_r

    def to_json(self) -> dict:
        return {"kind": self.kind, "dim_c": self.dim_c, "dim_r": self.dim_r, "n": self.n}

    @classmethod
    def from_json(cls, obj: dict) -> "SubalgebraSpec":
        try:
            spec = cls(str(obj["kind"]), int(obj["dim_c"]), int(obj["dim_r"]), int(obj["n"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecError(f"malformed subalgebra descriptor: {exc}") from exc
        spec.validate()
        return spec


def _unit(n: int, idx: int) -> np.ndarray:
    row = np.zeros(2 * n)
    row[idx] = 1.0
    return row


def _re_idx(j: int) -> int:
    return 1 + 2 * j


def _im_idx(j: int) -> int:
    return 2 + 2 * j


def build_subalgebra(spec: SubalgebraSpec) -> Subspace:
    """Canonical embedded normal form of a descriptor."""
    spec.validate()
    n = spec.n
    rows = []
    if spec.has_b:
        rows.append(_unit(n, 0))
    for j in range(spec.dim_c):
        rows.append(_unit(n, _re_idx(j)))
        rows.append(_unit(n, _im_idx(j)))
    for j in range(spec.dim_c, spec.dim_c + spec.dim_r):
        rows.append(_unit(n, _re_idx(j)))
    if spec.has_z:
        rows.append(_unit(n, 2 * n - 1))
    if not rows:
        return Subspace.zero(n)
    return Subspace(n, np.stack(rows))


class NormalFormFrame:
    """Block data of a normal-form subalgebra, canonical or conjugated.

    Carries the scale/center flags, the complex block c, ordered unit
    directions of the totally real block r, their J-images, and the
    complementary complex block c' of g_a.  Drives slice reduction and
    coordinate extraction without assuming the canonical embedding.
    """

    def __init__(self, n: int, has_b: bool, has_z: bool, c: Subspace, r_dirs: np.ndarray):
        self.n = n
        self.has_b = has_b
        self.has_z = has_z
        self.c = c
        self.r_dirs = np.asarray(r_dirs, dtype=float).reshape(-1, 2 * n)
        self.jr_dirs = np.stack([J(AlgVec(row)).data for row in self.r_dirs]) if self.r_dirs.shape[0] else np.zeros((0, 2 * n))
        galpha = [_unit(n, _re_idx(j)) for j in range(n - 1)] + [_unit(n, _im_idx(j)) for j in range(n - 1)]
        used = np.vstack([self.c.basis, self.r_dirs, self.jr_dirs])
        if used.shape[0]:
            P = used.T @ used
            resid = np.stack(galpha) - np.stack(galpha) @ P
        else:
            resid = np.stack(galpha)
        self.cprime = orthonormalize(resid) if resid.size else Subspace.zero(n)

    @property
    def dim_c(self) -> int:
        return self.c.dim // 2

    @property
    def dim_r(self) -> int:
        return self.r_dirs.shape[0]

    def subalgebra(self) -> Subspace:
        rows = []
        if self.has_b:
            rows.append(_unit(self.n, 0))
        if self.c.dim:
            rows.extend(self.c.basis)
        rows.extend(self.r_dirs)
        if self.has_z:
            rows.append(_unit(self.n, 2 * self.n - 1))
        return orthonormalize(np.stack(rows)) if rows else Subspace.zero(self.n)

    def decompose(self, xi: AlgVec) -> dict:
        """Split xi into scale, c, r, Jr, c', center coefficients."""
        w = xi.data.copy()
        beta, zeta = float(w[0]), float(w[-1])
        w[0] = 0.0
        w[-1] = 0.0
        U = self.c.basis.T @ (self.c.basis @ w) if self.c.dim else np.zeros_like(w)
        S_coef = self.r_dirs @ w
        T_coef = self.jr_dirs @ w
        V = self.cprime.basis.T @ (self.cprime.basis @ w) if self.cprime.dim else np.zeros_like(w)
        return {"beta": beta, "zeta": zeta, "U": U, "S_coef": S_coef, "T_coef": T_coef, "V": V}

    def assemble(self, b: float, T_coef, W_flat, y: float, S_coef=None, U_flat=None) -> AlgVec:
        """Inverse of decompose: b B + (U + S + JT + W) + y Z."""
        data = np.zeros(2 * self.n)
        data[0] = b
        data[-1] = y
        T_coef = np.zeros(self.dim_r) if T_coef is None else np.asarray(T_coef, dtype=float)
        if T_coef.size:
            data += self.jr_dirs.T @ T_coef
        if W_flat is not None:
            data += np.asarray(W_flat, dtype=float)
        if S_coef is not None and np.asarray(S_coef).size:
            data += self.r_dirs.T @ np.asarray(S_coef, dtype=float)
        if U_flat is not None:
            data += np.asarray(U_flat, dtype=float)
        return AlgVec(data)


def canonical_frame(spec: SubalgebraSpec) -> NormalFormFrame:
    spec.validate()
    n = spec.n
    c_rows = []
    for j in range(spec.dim_c):
        c_rows.append(_unit(n, _re_idx(j)))
        c_rows.append(_unit(n, _im_idx(j)))
    c = Subspace(n, np.stack(c_rows)) if c_rows else Subspace.zero(n)
    r_rows = [_unit(n, _re_idx(j)) for j in range(spec.dim_c, spec.dim_c + spec.dim_r)]
    r_dirs = np.stack(r_rows) if r_rows else np.zeros((0, 2 * n))
    return NormalFormFrame(n, spec.has_b, spec.has_z, c, r_dirs)


def frame_from_normal_form(h_nf: Subspace, has_b: bool, has_z: bool) -> NormalFormFrame:
    """Frame of a subalgebra already in normal-form position."""
    n = h_nf.n
    sel = np.zeros((2, h_nf.dim))
    sel[0] = h_nf.basis[:, 0]
    sel[1] = h_nf.basis[:, -1]
    combos = _nullspace(sel)
    w_alpha = orthonormalize(combos.T @ h_nf.basis) if combos.size else Subspace.zero(n)
    dec = cr_decompose(w_alpha)
    if not dec.is_cr:
        raise InconsistencyError("normal form block in g_a is not a CR subspace")
    return NormalFormFrame(n, has_b, has_z, dec.complex_part, dec.real_part.basis)


def _nullspace(M: np.ndarray, tol: float = NORMALIZE_TOL) -> np.ndarray:
    """Columns spanning the null space of M (possibly empty)."""
    if M.size == 0:
        return np.eye(M.shape[1])
    u, s, vt = np.linalg.svd(M)
    rank = int(np.sum(s > tol * max(1.0, s[0] if s.size else 1.0)))
    return vt[rank:].T


def _galpha_part(x: AlgVec) -> np.ndarray:
    w = x.data.copy()
    w[0] = 0.0
    w[-1] = 0.0
    return w


def normalize_subalgebra(h: Subspace):
    """Conjugate a CR subalgebra into normal-form position.

    Returns (g, spec) with Ad(g) h spanning the normal form of the
    descriptor's kind and dimensions.  Requires h to be closed under the bracket and
    its orbit through the base point to be CR; reports which predicate
    failed otherwise.
    """
    n = h.n
    if h.dim == 0:
        raise SpecError("the zero subalgebra has no normal-form descriptor")
    if not is_subalgebra(h):
        raise SpecError("input fails the subalgebra predicate (not closed under the bracket)")
    dec0 = cr_decompose(h)
    if not dec0.is_cr:
        raise SpecError("orbit through the base point is not CR (the real part is not totally real)")

    Zv = AlgVec.Z(n)
    a_col = h.basis[:, 0]
    z_col = h.basis[:, -1]
    a_norm = float(np.linalg.norm(a_col))

    if a_norm > NORMALIZE_TOL:
        # Scale part present.  Least-norm element with unit B-coefficient:
        u = AlgVec(h.basis.T @ (a_col / float(a_col @ a_col)))
        pi = np.stack([a_col, z_col])
        s = np.linalg.svd(pi, compute_uv=False)
        surjective = s.size == 2 and s[1] > NORMALIZE_TOL
        if surjective:
            if not h.contains(Zv, tol=1e-8):
                raise InconsistencyError("projection surjective but the center is missing; CR hypothesis violated")
            combos = _nullspace(np.stack([a_col, z_col]))
            w_alpha = orthonormalize(combos.T @ h.basis) if combos.size else Subspace.zero(n)
            e1 = u - u.z * Zv
            X = _galpha_part(e1)
            X -= w_alpha.basis.T @ (w_alpha.basis @ X) if w_alpha.dim else 0.0
            g = GroupElement(AlgVec(2.0 * X))
            wdec = cr_decompose(w_alpha)
            if not wdec.is_cr:
                raise InconsistencyError("g_a block of the normal form is not CR")
            spec = SubalgebraSpec("ACRZ", wdec.complex_part.dim // 2, wdec.real_part.dim, n)
        else:
            combos = _nullspace(a_col.reshape(1, -1))
            w0 = orthonormalize(combos.T @ h.basis) if combos.size else Subspace.zero(n)
            if w0.dim and float(np.max(np.abs(w0.basis[:, -1]))) > 1e-8:
                raise InconsistencyError("kernel of the scale functional leaks into the center")
            X = _galpha_part(u)
            if w0.dim:
                X -= w0.basis.T @ (w0.basis @ X)
            xi = AlgVec(2.0 * X) + u.z * Zv
            g = GroupElement(xi)
            spec = SubalgebraSpec("AR", 0, w0.dim, n)
    else:
        contains_Z = h.contains(Zv, tol=1e-8)
        if contains_Z:
            combos = _nullspace(z_col.reshape(1, -1))
            w_alpha = orthonormalize(combos.T @ h.basis) if combos.size else Subspace.zero(n)
            g = GroupElement.identity(n)
            wdec = cr_decompose(w_alpha)
            if not wdec.is_cr:
                raise InconsistencyError("g_a block of the normal form is not CR")
            spec = SubalgebraSpec("CRZ", wdec.complex_part.dim // 2, wdec.real_part.dim, n)
        elif float(np.linalg.norm(z_col)) <= NORMALIZE_TOL:
            g = GroupElement.identity(n)
            spec = SubalgebraSpec("R", 0, h.dim, n)
        else:
            # Graph over the g_a projection with a nonzero center functional;
            # kill it by conjugating with Exp(J f), f the Riesz vector of the
            # functional on the projection (JJf = -f cancels the center part).
            M = np.stack([_galpha_part(v) for v in h.vectors()])
            zvec = z_col.copy()
            Wproj = orthonormalize(M)
            coeffs, *_ = np.linalg.lstsq(M.T, Wproj.basis.T, rcond=None)
            zq = coeffs.T @ zvec
            f = Wproj.basis.T @ zq
            Xg = J(AlgVec(f))
            g = GroupElement(Xg)
            spec = SubalgebraSpec("R", 0, h.dim, n)

    spec.validate()
    _check_normal_form(adjoint_subspace(g, h), spec)
    return g, spec


def _check_normal_form(h_nf: Subspace, spec: SubalgebraSpec, tol: float = 1e-8) -> None:
    n = h_nf.n
    frame = frame_from_normal_form(h_nf, spec.has_b, spec.has_z)
    if (frame.dim_c, frame.dim_r) != (spec.dim_c, spec.dim_r):
        raise InconsistencyError(
            f"normal form dims {(frame.dim_c, frame.dim_r)} do not match descriptor {(spec.dim_c, spec.dim_r)}"
        )
    from .subspaces import subspace_distance

    if subspace_distance(frame.subalgebra(), h_nf) > tol:
        raise InconsistencyError("conjugated subalgebra is not in normal-form position")


def _slice_parts(frame: NormalFormFrame, g: GroupElement):
    """Factor g = Exp(X_h) Exp(Y) with X_h in h and Y orthogonal to h."""
    d = frame.decompose(g.xi)
    beta, zeta = d["beta"], d["zeta"]
    if frame.has_b:
        a, b = beta, 0.0
    else:
        a, b = 0.0, beta
    st = float(d["S_coef"] @ d["T_coef"])
    num = rho(beta) * zeta - 0.5 * rho(beta / 2.0) ** 2 * st
    if frame.has_z:
        x, y = num / rho(a), 0.0
    else:
        x, y = 0.0, math.exp(-a) * num / rho(b)
    fac_h = rho(beta / 2.0) / rho(a / 2.0)
    S = frame.r_dirs.T @ d["S_coef"] if frame.dim_r else np.zeros(2 * frame.n)
    JT = frame.jr_dirs.T @ d["T_coef"] if frame.dim_r else np.zeros(2 * frame.n)
    Xh_data = fac_h * (d["U"] + S)
    Xh_data[0] += a
    Xh_data[-1] += x
    fac_y = math.exp(-a / 2.0) * rho(beta / 2.0) / rho(b / 2.0)
    Y_data = fac_y * (d["V"] + JT)
    Y_data[0] += b
    Y_data[-1] += y
    return AlgVec(Xh_data), AlgVec(Y_data)


def slice_reduce(spec: SubalgebraSpec, g: GroupElement) -> GroupElement:
    """Slice representative Exp(Y), Y orthogonal to the canonical subalgebra.

    Exp(X_h) Exp(Y) = g with X_h in h, so the orbits H.g(o) and
    H.Exp(Y)(o) coincide.
    """
    frame = canonical_frame(spec)
    _, Y = _slice_parts(frame, g)
    return GroupElement(Y)


@dataclass(frozen=True)
class OrbitCoords:
    """Structured displacement coordinates relative to a frame.

    Encodes xi = b B + JT + W + y Z with T a coefficient vector on the
    totally real block and W in the complementary complex block c'.
    """

    b: float
    T: np.ndarray
    W: np.ndarray  # flat ambient vector supported on c'
    y: float

    @property
    def t_norm(self) -> float:
        return float(np.linalg.norm(self.T))

    @property
    def w_norm(self) -> float:
        return float(np.linalg.norm(self.W))


def slice_coords(frame: NormalFormFrame, g: GroupElement) -> OrbitCoords:
    """Structured coordinates of the slice representative of g."""
    _, Y = _slice_parts(frame, g)
    d = frame.decompose(Y)
    return OrbitCoords(b=d["beta"], T=d["T_coef"], W=d["V"], y=d["zeta"])


def structured_xi(spec: SubalgebraSpec, b: float = 0.0, T=None, W=None, y: float = 0.0) -> AlgVec:
    """xi = b B + JT + W + y Z against the canonical embedding.

    T lists coefficients on the imaginary axes of the totally real block;
    W lists the complementary complex components as re/im pairs.
    """
    spec.validate()
    n = spec.n
    data = np.zeros(2 * n)
    data[0] = b
    data[-1] = y
    if T is not None:
        T = np.asarray(T, dtype=float)
        if T.size != spec.dim_r:
            raise SpecError(f"T must have length dim_r = {spec.dim_r}, got {T.size}")
        for k, j in enumerate(range(spec.dim_c, spec.dim_c + spec.dim_r)):
            data[_im_idx(j)] = T[k]
    if W is not None:
        W = np.asarray(W, dtype=float)
        if W.size != 2 * spec.dim_cprime:
            raise SpecError(
                f"W must list {spec.dim_cprime} complex components as re/im pairs, got {W.size} numbers"
            )
        for k, j in enumerate(range(spec.dim_c + spec.dim_r, n - 1)):
            data[_re_idx(j)] = W[2 * k]
            data[_im_idx(j)] = W[2 * k + 1]
    return AlgVec(data)


@dataclass(frozen=True)
class OrbitQuery:
    """An orbit H.g(o): descriptor or raw subalgebra, plus the displacement."""

    spec: SubalgebraSpec | None
    g: GroupElement
    raw_subalgebra: Subspace | None = None

    def __post_init__(self):
        if self.spec is None and self.raw_subalgebra is None:
            raise SpecError("query needs a subalgebra descriptor or a raw subalgebra")


@dataclass(frozen=True)
class OrbitReport:
    """Classification verdict for one orbit."""

    is_cr: bool
    type_tag: str  # I, II, III, IV, or NotCR
    tangent_at_o: Subspace
    decomposition: CrDecomposition
    congruence_key: object | None
    spec: SubalgebraSpec
    diagnostics: tuple = ()

    def to_json(self) -> dict:
        return {
            "is_cr": self.is_cr,
            "type_tag": self.type_tag,
            "spec": self.spec.to_json(),
            "tangent_at_o": self.tangent_at_o.to_json(),
            "decomposition": self.decomposition.to_json(),
            "congruence_key": self.congruence_key.to_json() if self.congruence_key else None,
        }


def classify_orbit(query: OrbitQuery) -> OrbitReport:
    """Decide CR-ness and type of H.g(o), with the dual-route consistency check.

    Route one runs the CR decomposition on the pulled-back tangent
    Ad(g^-1) h.  Route two slice-reduces g and evaluates the kind's
    membership predicate (kinds R and CRZ are always CR; kind AR is CR
    iff the slice has no JT component; kind ACRZ iff it has no c'
    component).  Disagreement raises InconsistencyError.
    """
    g = query.g
    diagnostics = []
    if query.raw_subalgebra is not None:
        h = query.raw_subalgebra
        g0, spec = normalize_subalgebra(h)
        if query.spec is not None:
            query.spec.validate()
            if (query.spec.kind, query.spec.dim_c, query.spec.dim_r, query.spec.n) != (
                spec.kind,
                spec.dim_c,
                spec.dim_r,
                spec.n,
            ):
                raise SpecError(
                    f"descriptor {query.spec.to_json()} does not match the normalized subalgebra {spec.to_json()}"
                )
        frame = frame_from_normal_form(adjoint_subspace(g0, h), spec.has_b, spec.has_z)
        g_eff = group_multiply(g0, g)
        diagnostics.append("raw subalgebra normalized")
    else:
        spec = query.spec
        spec.validate()
        h = build_subalgebra(spec)
        frame = canonical_frame(spec)
        g_eff = g

    tangent = adjoint_subspace(group_inverse(g), h)
    dec = cr_decompose(tangent)

    coords = slice_coords(frame, g_eff)
    scale = 1.0 + norm(g_eff.xi)
    if spec.kind in ("R", "CRZ"):
        cr_predicate = True
    elif spec.kind == "AR":
        cr_predicate = coords.t_norm <= CR_TOL * scale
    else:
        cr_predicate = coords.w_norm <= CR_TOL * scale

    if dec.is_cr != cr_predicate:
        raise InconsistencyError(
            f"direct CR test ({dec.is_cr}) disagrees with the membership predicate ({cr_predicate}) "
            f"for kind {spec.kind}"
        )
    diagnostics.append("classification routes agree")

    if dec.is_cr:
        from .congruence import congruence_key as _key

        tag = KIND_TAG[spec.kind]
        key = _key(spec, g_eff, frame=frame)
    else:
        tag = "NotCR"
        key = None
    return OrbitReport(
        is_cr=dec.is_cr,
        type_tag=tag,
        tangent_at_o=tangent,
        decomposition=dec,
        congruence_key=key,
        spec=spec,
        diagnostics=tuple(diagnostics),
    )


def displaced_tangent_span(spec: SubalgebraSpec, b: float = 0.0, T=None, W=None, y: float = 0.0) -> Subspace:
    """Closed-form image Ad(g) h for the displaced subalgebra.

    Kind R, g = Exp(bB + JT + W + yZ):
        (r minus RT) + R(T - rho(b/2) |T|^2 Z)
    Kind AR, g = Exp(2JT + 2W + yZ):
        R(B - JT - W - yZ) + R(T - 2 |T|^2 Z) + (r minus RT)
    Kind ACRZ, g = Exp(2JT + 2W):
        R(B - JT - W) + c + r + RZ

    T is a coefficient vector on the totally real block, W a flat re/im
    pair list on c'; the spans are built in the canonical embedding.
    """
    spec.validate()
    n = spec.n
    frame = canonical_frame(spec)
    T = np.zeros(spec.dim_r) if T is None else np.asarray(T, dtype=float)
    xi_w = structured_xi(spec, b=0.0, T=None, W=W, y=0.0)
    W_flat = xi_w.data
    t2 = float(T @ T)
    T_vec = frame.r_dirs.T @ T if spec.dim_r else np.zeros(2 * n)
    JT_vec = frame.jr_dirs.T @ T if spec.dim_r else np.zeros(2 * n)
    combos = _nullspace(T.reshape(1, -1)) if T.size else np.zeros((0, 0))
    r_minus_T = [frame.r_dirs.T @ combos[:, k] for k in range(combos.shape[1])] if combos.size else []

    rows = []
    if spec.kind == "R":
        rows.extend(r_minus_T)
        if t2 > 0.0:
            row = T_vec.copy()
            row[-1] -= rho(b / 2.0) * t2
            rows.append(row)
    elif spec.kind == "AR":
        row = np.zeros(2 * n)
        row[0] = 1.0
        row -= JT_vec + W_flat
        row[-1] -= y
        rows.append(row)
        if t2 > 0.0:
            row2 = T_vec.copy()
            row2[-1] -= 2.0 * t2
            rows.append(row2)
        rows.extend(r_minus_T)
    elif spec.kind == "ACRZ":
        row = np.zeros(2 * n)
        row[0] = 1.0
        row -= JT_vec + W_flat
        rows.append(row)
        if frame.c.dim:
            rows.extend(frame.c.basis)
        rows.extend(frame.r_dirs)
        zrow = np.zeros(2 * n)
        zrow[-1] = 1.0
        rows.append(zrow)
    else:
        raise SpecError(f"no closed-form displaced tangent for kind {spec.kind}")
    return orthonormalize(np.stack(rows))
