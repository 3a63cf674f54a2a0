"""Numerical linear algebra of subspaces of the solvable algebra.

Subspaces are stored as orthonormal row bases (shape (d, 2n)).  Ranks are
decided by singular values relative to the largest one; the CR predicates
(totally real, complex, CR decomposition) and subalgebra closure are
rank-decided numerical tests with the tolerances below.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import AlgVec, J, bracket

# Singular values below RANK_RTOL times the largest are treated as zero.
RANK_RTOL = 1e-8
# Gram/orthogonality residual allowed on constructed bases.
ORTHO_TOL = 1e-12
# Predicate thresholds (totally real, complex, subalgebra closure).
PRED_TOL = 1e-10


@dataclass(frozen=True)
class Subspace:
    """Orthonormally-spanned subspace, possibly zero-dimensional."""

    n: int
    basis: np.ndarray  # (d, 2n), orthonormal rows

    def __post_init__(self):
        arr = np.asarray(self.basis, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 2 * self.n:
            raise ValueError(f"basis must have shape (d, {2 * self.n}), got {arr.shape}")
        if arr.shape[0] > 0:
            gram = arr @ arr.T
            if np.max(np.abs(gram - np.eye(arr.shape[0]))) > 1e-10:
                raise ValueError("basis rows are not orthonormal")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "basis", arr)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, np.zeros((0, 2 * n)))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, np.eye(2 * n))

    def vectors(self) -> list[AlgVec]:
        return [AlgVec(row) for row in self.basis]

    def projector(self) -> np.ndarray:
        return self.basis.T @ self.basis

    def project(self, x: AlgVec) -> AlgVec:
        if self.dim == 0:
            return AlgVec(np.zeros(2 * self.n))
        return AlgVec(self.basis.T @ (self.basis @ x.data))

    def contains(self, x: AlgVec, tol: float = 1e-9) -> bool:
        resid = x.data - self.project(x).data
        return float(np.linalg.norm(resid)) <= tol * (1.0 + float(np.linalg.norm(x.data)))

    def to_json(self) -> dict:
        return {"basis": [[float(c) for c in row] for row in self.basis]}


def _orthonormal_rows(rows: np.ndarray, n: int, floor: float = 0.0) -> Subspace:
    if rows.size == 0:
        return Subspace.zero(n)
    _, s, vt = np.linalg.svd(rows, full_matrices=False)
    if s.size == 0 or s[0] <= floor:
        return Subspace.zero(n)
    rank = int(np.sum(s > max(RANK_RTOL * s[0], floor)))
    return Subspace(n, vt[:rank])


def orthonormalize(vectors) -> Subspace:
    """Orthonormal basis of the span; rank decided by SVD.

    Accepts a list of AlgVec or an array of flat rows; an empty input
    yields the zero subspace (its ambient dimension cannot be inferred,
    so empty lists require AlgVec entries elsewhere - pass a Subspace.zero
    instead when needed).
    """
    if isinstance(vectors, np.ndarray):
        rows = np.asarray(vectors, dtype=float)
        if rows.ndim != 2:
            raise ValueError("expected a 2d array of flat rows")
        return _orthonormal_rows(rows, rows.shape[1] // 2)
    vecs = list(vectors)
    if not vecs:
        raise ValueError("cannot infer ambient dimension from an empty list; use Subspace.zero(n)")
    n = vecs[0].n
    rows = np.stack([v.data for v in vecs])
    return _orthonormal_rows(rows, n)


def orth_complement(V: Subspace) -> Subspace:
    if V.dim == 0:
        return Subspace.full(V.n)
    _, _, vt = np.linalg.svd(V.basis, full_matrices=True)
    return Subspace(V.n, vt[V.dim:])


def _apply_J_rows(basis: np.ndarray) -> np.ndarray:
    out = np.empty_like(basis)
    if basis.shape[0] == 0:
        return out
    out[:, 0] = -basis[:, -1]
    out[:, -1] = basis[:, 0]
    out[:, 1:-1:2] = -basis[:, 2:-1:2]
    out[:, 2:-1:2] = basis[:, 1:-1:2]
    return out


def maximal_complex_subspace(V: Subspace) -> Subspace:
    """The maximal complex subspace V intersected with JV.

    Eigen-analysis of P_V P_JV P_V: eigenvectors with eigenvalue within
    RANK_RTOL of 1 span the intersection.  The result is J-invariant and
    contained in V.
    """
    if V.dim == 0:
        return V
    P = V.projector()
    JB = _apply_J_rows(V.basis)
    Q = JB.T @ JB
    M = P @ Q @ P
    w, vecs = np.linalg.eigh(M)
    keep = w > 1.0 - RANK_RTOL
    if not np.any(keep):
        return Subspace.zero(V.n)
    return orthonormalize(vecs[:, keep].T.copy())


def is_totally_real(V: Subspace) -> bool:
    """True iff JV is perpendicular to V."""
    if V.dim == 0:
        return True
    JB = _apply_J_rows(V.basis)
    return float(np.max(np.abs(JB @ V.basis.T))) <= PRED_TOL


def is_complex(V: Subspace) -> bool:
    """True iff JV = V as subspaces."""
    JB = _apply_J_rows(V.basis)
    PJ = JB.T @ JB
    return float(np.max(np.abs(PJ - V.projector()))) <= PRED_TOL


@dataclass(frozen=True)
class CrDecomposition:
    """Split of a subspace into maximal complex part and its complement."""

    complex_part: Subspace
    real_part: Subspace
    is_cr: bool

    def to_json(self) -> dict:
        return {
            "complex_part": self.complex_part.to_json(),
            "real_part": self.real_part.to_json(),
            "is_cr": self.is_cr,
        }


def cr_decompose(V: Subspace) -> CrDecomposition:
    """Maximal complex part, orthogonal real part, and the CR verdict.

    The subspace is CR exactly when the complement of its maximal complex
    subspace is totally real.
    """
    cpart = maximal_complex_subspace(V)
    if cpart.dim == 0:
        rpart = V
    else:
        Pc = cpart.projector()
        resid = V.basis - V.basis @ Pc
        # Rows of V.basis are orthonormal, so residual singular values are
        # exactly 1 or 0; an absolute floor keeps noise out of the real part.
        rpart = _orthonormal_rows(resid, V.n, floor=RANK_RTOL)
    return CrDecomposition(cpart, rpart, is_totally_real(rpart))


def is_subalgebra(V: Subspace) -> bool:
    """True iff the span is closed under the bracket."""
    if V.dim <= 1:
        return True
    P = V.projector()
    vecs = V.vectors()
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            br = bracket(vecs[i], vecs[j]).data
            if float(np.linalg.norm(br - P @ br)) > PRED_TOL:
                return False
    return True


def adjoint_subspace(g, V: Subspace) -> Subspace:
    """Image of a subspace under Ad(g)."""
    from .model import adjoint

    if V.dim == 0:
        return V
    return orthonormalize([adjoint(g, v) for v in V.vectors()])


def subspace_distance(V: Subspace, W: Subspace) -> float:
    """Max-abs distance between the orthogonal projectors."""
    return float(np.max(np.abs(V.projector() - W.projector())))
