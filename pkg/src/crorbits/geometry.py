"""Connection, curvature, and extrinsic invariants of orbits.

The left-invariant metric makes everything algebraic: the Levi-Civita
connection has a closed form on the algebra, the curvature tensor is built
from it, and the second fundamental form of a subgroup orbit is the normal
part of the connection over an orthonormal tangent basis at the base point.
The ambient model has constant holomorphic sectional curvature -1.

Closed forms for the mean curvature of the four orbit families (and the
squared second fundamental form norm for kind AR) are evaluated against the
numeric route by the verification suites.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import AlgVec, GroupElement, J, bracket, inner, norm, rho
from .subspaces import Subspace, is_subalgebra
from .classify import SpecError, SubalgebraSpec, canonical_frame

# Residual allowed when validating that g is in a reduced displacement form.
REDUCED_FORM_TOL = 1e-9


def levi_civita(x: AlgVec, y: AlgVec) -> AlgVec:
    """Levi-Civita connection of the left-invariant metric, closed form.

    For x = aB + U + xZ and y = bB + V + yZ:

        (1/2 <U,V> + x y) B - 1/2 (b U + y JU + x JV)
        + (1/2 <JU,V> - b x) Z
    """
    a1, u, x1 = x.a, x.v, x.z
    b1, v, y1 = y.a, y.v, y.z
    uv = float(np.real(np.vdot(u, v)))
    juv = float(np.imag(np.vdot(u, v)))
    a_out = 0.5 * uv + x1 * y1
    v_out = -0.5 * (b1 * u + y1 * 1j * u + x1 * 1j * v)
    z_out = 0.5 * juv - b1 * x1
    return AlgVec.from_parts(x.n, a=a_out, v=v_out, z=z_out)


def koszul_oracle(x: AlgVec, y: AlgVec) -> AlgVec:
    """Connection reconstructed from the Koszul pairing; independent oracle.

    2 <nabla_x y, e> = <[x,y],e> - <[y,e],x> + <[e,x],y> against an
    orthonormal basis, using only the bracket and the metric.
    """
    n = x.n
    out = np.zeros(2 * n)
    for k in range(2 * n):
        row = np.zeros(2 * n)
        row[k] = 1.0
        e = AlgVec(row)
        out[k] = 0.5 * (inner(bracket(x, y), e) - inner(bracket(y, e), x) + inner(bracket(e, x), y))
    return AlgVec(out)


def curvature(x: AlgVec, y: AlgVec, w: AlgVec) -> AlgVec:
    """R(x,y)w = nabla_x nabla_y w - nabla_y nabla_x w - nabla_[x,y] w."""
    return (
        levi_civita(x, levi_civita(y, w))
        - levi_civita(y, levi_civita(x, w))
        - levi_civita(bracket(x, y), w)
    )


@dataclass(frozen=True)
class ExtrinsicInvariants:
    """Mean curvature data of an orbit, pulled back to the base point.

    Closed-form evaluations leave the pieces the closed forms do not
    state as None: the mean vector for kind AR, and the squared second
    fundamental form norm for every kind except AR.
    """

    mean_curvature_vector: AlgVec | None
    mean_sq: float
    second_fundamental_sq: float | None

    def to_json(self) -> dict:
        return {
            "mean_sq": self.mean_sq,
            "second_fundamental_sq": self.second_fundamental_sq,
            "mean_vector": self.mean_curvature_vector.to_json() if self.mean_curvature_vector else None,
        }


def orbit_invariants(tangent: Subspace) -> ExtrinsicInvariants:
    """Second fundamental form data over an orthonormal tangent basis.

    The tangent must be a subalgebra (pulled-back orbit tangents are);
    II(E_i, E_j) is the normal part of nabla_{E_i} E_j, the mean vector
    is the trace, and the squared norms are summed componentwise.
    """
    if not is_subalgebra(tangent):
        raise SpecError("tangent is not a subalgebra; the left-invariant extension is only valid for orbits")
    n = tangent.n
    P = tangent.projector()
    basis = tangent.vectors()
    H = np.zeros(2 * n)
    ii_sq = 0.0
    for i, Ei in enumerate(basis):
        for j, Ej in enumerate(basis):
            nab = levi_civita(Ei, Ej).data
            ii = nab - P @ nab
            ii_sq += float(ii @ ii)
            if i == j:
                H += ii
    return ExtrinsicInvariants(
        mean_curvature_vector=AlgVec(H),
        mean_sq=float(H @ H),
        second_fundamental_sq=ii_sq,
    )


def _require_small(label: str, value: float, scale: float) -> None:
    if value > REDUCED_FORM_TOL * (1.0 + scale):
        raise SpecError(f"displacement is not in the reduced form: unexpected {label} component {value!r}")


def closed_form_invariants(spec: SubalgebraSpec, g: GroupElement) -> ExtrinsicInvariants:
    """Closed-form invariants of H.g(o) for a reduced displacement g.

    Reduced forms per kind: R expects g = Exp(JT); CRZ accepts any g
    (all orbits are congruent); AR expects g = Exp(2W + yZ); ACRZ
    expects g = Exp(JT).
    """
    spec.validate()
    frame = canonical_frame(spec)
    d = frame.decompose(g.xi)
    scale = norm(g.xi)
    r = spec.dim_r
    k = 2 * spec.dim_c + r

    if spec.kind == "R":
        _require_small("scale", abs(d["beta"]), scale)
        _require_small("center", abs(d["zeta"]), scale)
        _require_small("c'", float(np.linalg.norm(d["V"])), scale)
        _require_small("r", float(np.linalg.norm(d["S_coef"])), scale)
        t = float(d["T_coef"] @ d["T_coef"])
        from .congruence import mean_sq_profile

        mean_sq = mean_sq_profile(t, r)
        JT = frame.jr_dirs.T @ d["T_coef"]
        coef_B = (r - 1) / 2.0 + (1.0 + 2.0 * t) / (2.0 * (1.0 + t))
        Hvec = np.zeros(2 * spec.n)
        Hvec[0] = coef_B
        Hvec -= JT / (1.0 + t)
        return ExtrinsicInvariants(AlgVec(Hvec), mean_sq, None)

    if spec.kind == "CRZ":
        mean_sq = (2.0 + k) ** 2 / 4.0
        Hvec = np.zeros(2 * spec.n)
        Hvec[0] = (2.0 + k) / 2.0
        return ExtrinsicInvariants(AlgVec(Hvec), mean_sq, None)

    if spec.kind == "AR":
        _require_small("scale", abs(d["beta"]), scale)
        _require_small("JT", float(np.linalg.norm(d["T_coef"])), scale)
        _require_small("r", float(np.linalg.norm(d["S_coef"])), scale)
        w2 = float(d["V"] @ d["V"]) / 4.0  # g = Exp(2W + yZ)
        y2 = d["zeta"] ** 2
        D = 1.0 + y2 + w2
        mean_sq = (
            (1.0 + r) ** 2 * w2 ** 2
            + (2.0 + r) ** 2 * y2 * (1.0 + y2)
            + w2 * (1.0 + 8.0 * y2 + r ** 2 * (1.0 + 2.0 * y2) + 2.0 * r * (1.0 + 3.0 * y2))
        ) / (4.0 * D ** 2)
        ii_sq = (
            (1.0 + r) * w2 ** 2
            + (4.0 + 3.0 * r) * y2 * (1.0 + y2)
            + w2 * (1.0 + r + 4.0 * y2 * (2.0 + r))
        ) / (4.0 * D ** 2)
        return ExtrinsicInvariants(None, mean_sq, ii_sq)

    # ACRZ
    _require_small("scale", abs(d["beta"]), scale)
    _require_small("center", abs(d["zeta"]), scale)
    _require_small("c'", float(np.linalg.norm(d["V"])), scale)
    _require_small("r", float(np.linalg.norm(d["S_coef"])), scale)
    _require_small("c", float(np.linalg.norm(d["U"])), scale)
    t = float(d["T_coef"] @ d["T_coef"])
    mean_sq = t * (3.0 + k) ** 2 / (4.0 * (4.0 + t))
    JT = frame.jr_dirs.T @ d["T_coef"]
    Hvec = np.zeros(2 * spec.n)
    Hvec[0] = t
    Hvec -= 2.0 * JT
    Hvec *= (3.0 + k) / (2.0 * (4.0 + t))
    return ExtrinsicInvariants(AlgVec(Hvec), mean_sq, None)


def invariant_gaps(spec: SubalgebraSpec, W_norm: float, y: float) -> tuple[float, float]:
    """Closed-form (|H|^2 - |II|^2, (r+1)|II|^2 - |H|^2) for kind AR.

    Both combinations are nonnegative; the second vanishes iff y = 0.
    """
    if spec.kind != "AR":
        raise SpecError(f"invariant gaps are stated for kind AR only, got {spec.kind}")
    spec.validate()
    r = spec.dim_r
    w2 = W_norm ** 2
    y2 = y ** 2
    D = 1.0 + y2 + w2
    gap1 = r * (1.0 + r) * (y2 + w2) / (4.0 * D)
    gap2 = r * y2 * ((3.0 + 2.0 * r) * (1.0 + y2) + 2.0 * (3.0 + r) * w2) / (4.0 * D ** 2)
    return gap1, gap2


def displaced_frame(spec: SubalgebraSpec, W=None, y: float = 0.0):
    """Orthonormal frame (X, xi1, xi2) of the kind AR displaced orbit.

    X spans the displaced scale direction; xi1, xi2 are normal.  Defined
    for W != 0; returns the three vectors for verification of mutual
    orthonormality.
    """
    if spec.kind != "AR":
        raise SpecError("the displaced frame is defined for kind AR only")
    spec.validate()
    from .classify import structured_xi

    xi_w = structured_xi(spec, W=W)
    Wv = xi_w.data
    w2 = float(Wv @ Wv)
    if w2 <= 0.0:
        raise SpecError("frame requires W != 0")
    n = spec.n
    y2 = y ** 2
    X = np.zeros(2 * n)
    X[0] = 1.0
    X += Wv
    X[-1] += y
    X /= math.sqrt(1.0 + y2 + w2)
    xi1 = np.zeros(2 * n)
    xi1[0] = -y
    xi1[-1] = 1.0
    xi1 /= math.sqrt(1.0 + y2)
    xi2 = np.zeros(2 * n)
    xi2[0] = w2
    xi2 -= (1.0 + y2) * Wv
    xi2[-1] = y * w2
    xi2 /= math.sqrt(w2) * math.sqrt((1.0 + y2) * (1.0 + y2 + w2))
    return AlgVec(X), AlgVec(xi1), AlgVec(xi2)
