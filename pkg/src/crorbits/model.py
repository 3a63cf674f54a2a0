"""Solvable group model of complex hyperbolic space.

The ambient algebra is a Lie algebra a + g_a + g_2a of real dimension 2n:
a one-dimensional scale part spanned by B, a complex part g_a of complex
dimension n-1, and a one-dimensional center g_2a spanned by Z = JB.  The
connected solvable group AN = Exp(a + g_a + g_2a) acts simply transitively
on the complex hyperbolic space of holomorphic sectional curvature -1, so
group elements double as points.

Conventions:
    * flat encoding of a vector, length 2n:
          [a, Re v_1, Im v_1, ..., Re v_{n-1}, Im v_{n-1}, z]
      where a is the B-coefficient, v the g_a component, z the
      Z-coefficient; the metric is Euclidean in this encoding;
    * J(a, v, z) = (-z, i v, a);
    * bracket relations: [B, Z] = Z, [B, U] = U/2, [U, V] = <JU, V> Z,
      [U, Z] = 0 for U, V in g_a;
    * group elements are stored in exponential coordinates xi, with
      Exp a global diffeomorphism, identity xi = 0 and inverse -xi.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

MIN_DIM = 2
MAX_DIM = 32

# Taylor branch for rho below this magnitude; avoids cancellation in
# (e^t - 1)/t where relative accuracy matters.
RHO_TAYLOR_CUTOFF = 1e-5


def check_dim(n: int) -> None:
    if not (MIN_DIM <= n <= MAX_DIM):
        raise ValueError(f"ambient complex dimension must satisfy {MIN_DIM} <= n <= {MAX_DIM}, got {n}")


def rho(t: float) -> float:
    """The analytic function (e^t - 1)/t, continued by 1 at t = 0.

    Strictly positive, and satisfies rho(-t) = e^(-t) rho(t).
    """
    if abs(t) < RHO_TAYLOR_CUTOFF:
        return 1.0 + t / 2.0 + t * t / 6.0 + t ** 3 / 24.0
    return math.expm1(t) / t


@dataclass(frozen=True)
class AlgVec:
    """Element of the solvable algebra in the flat encoding."""

    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data, dtype=float)
        if arr.ndim != 1 or arr.size < 2 * MIN_DIM or arr.size % 2 != 0:
            raise ValueError(f"flat encoding must have even length >= {2 * MIN_DIM}, got shape {arr.shape}")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "data", arr)

    @property
    def n(self) -> int:
        return self.data.size // 2

    @property
    def a(self) -> float:
        """Coefficient of B."""
        return float(self.data[0])

    @property
    def z(self) -> float:
        """Coefficient of Z."""
        return float(self.data[-1])

    @property
    def v(self) -> np.ndarray:
        """The g_a component as a complex vector of length n - 1."""
        return self.data[1:-1:2] + 1j * self.data[2:-1:2]

    @classmethod
    def from_parts(cls, n: int, a: float = 0.0, v=None, z: float = 0.0) -> "AlgVec":
        data = np.zeros(2 * n)
        data[0] = a
        data[-1] = z
        if v is not None:
            v = np.asarray(v, dtype=complex)
            if v.size != n - 1:
                raise ValueError(f"g_a component must have length {n - 1}, got {v.size}")
            data[1:-1:2] = v.real
            data[2:-1:2] = v.imag
        return cls(data)

    @classmethod
    def zero(cls, n: int) -> "AlgVec":
        return cls(np.zeros(2 * n))

    @classmethod
    def B(cls, n: int) -> "AlgVec":
        return cls.from_parts(n, a=1.0)

    @classmethod
    def Z(cls, n: int) -> "AlgVec":
        return cls.from_parts(n, z=1.0)

    def __add__(self, other: "AlgVec") -> "AlgVec":
        return AlgVec(self.data + other.data)

    def __sub__(self, other: "AlgVec") -> "AlgVec":
        return AlgVec(self.data - other.data)

    def __mul__(self, s: float) -> "AlgVec":
        return AlgVec(self.data * s)

    __rmul__ = __mul__

    def __neg__(self) -> "AlgVec":
        return AlgVec(-self.data)

    def to_json(self) -> list:
        return [float(c) for c in self.data]


def inner(x: AlgVec, y: AlgVec) -> float:
    """Euclidean metric in the flat encoding."""
    return float(x.data @ y.data)


def norm(x: AlgVec) -> float:
    return float(np.linalg.norm(x.data))


def J(x: AlgVec) -> AlgVec:
    """Complex structure: J(a, v, z) = (-z, i v, a)."""
    d = x.data
    out = np.empty_like(d)
    out[0] = -d[-1]
    out[-1] = d[0]
    out[1:-1:2] = -d[2:-1:2]
    out[2:-1:2] = d[1:-1:2]
    return AlgVec(out)


def _check_same_dim(x: AlgVec, y: AlgVec) -> None:
    if x.data.size != y.data.size:
        raise ValueError(f"dimension mismatch: {x.data.size} vs {y.data.size}")


def bracket(x: AlgVec, y: AlgVec) -> AlgVec:
    """Lie bracket in closed form.

    [(a1, v1, z1), (a2, v2, z2)]
        = (0, (a1 v2 - a2 v1)/2, a1 z2 - a2 z1 + <J v1, v2>)

    which packages the relations [B,Z] = Z, [B,U] = U/2,
    [U,V] = <JU,V> Z, [U,Z] = 0.
    """
    _check_same_dim(x, y)
    a1, v1, z1 = x.a, x.v, x.z
    a2, v2, z2 = y.a, y.v, y.z
    v = 0.5 * (a1 * v2 - a2 * v1)
    z = a1 * z2 - a2 * z1 + float(np.imag(np.vdot(v1, v2)))
    return AlgVec.from_parts(x.n, a=0.0, v=v, z=z)


@dataclass(frozen=True)
class GroupElement:
    """Point of AN in exponential coordinates g = Exp(xi)."""

    xi: AlgVec

    @property
    def n(self) -> int:
        return self.xi.n

    @classmethod
    def identity(cls, n: int) -> "GroupElement":
        return cls(AlgVec.zero(n))

    @classmethod
    def exp(cls, xi: AlgVec) -> "GroupElement":
        return cls(xi)

    def to_json(self) -> dict:
        return {"xi": self.xi.to_json()}


def adjoint(g: GroupElement, w: AlgVec) -> AlgVec:
    """Adjoint action Ad(g) in closed form.

    For g = Exp(bB + X + yZ) and w = aB + Y + xZ:

        Ad(g) w = aB + e^(b/2) Y - (a/2) rho(b/2) X
                  + (x e^b - a y rho(b) + e^(b/2) rho(b/2) <JX, Y>) Z
    """
    _check_same_dim(g.xi, w)
    b, X, y = g.xi.a, g.xi.v, g.xi.z
    a, Y, x = w.a, w.v, w.z
    eb2 = math.exp(b / 2.0)
    rb2 = rho(b / 2.0)
    v = eb2 * Y - 0.5 * a * rb2 * X
    z = x * math.exp(b) - a * y * rho(b) + eb2 * rb2 * float(np.imag(np.vdot(X, Y)))
    return AlgVec.from_parts(w.n, a=a, v=v, z=z)


def adjoint_series(g: GroupElement, w: AlgVec, terms: int) -> AlgVec:
    """Truncated series oracle sum_{k<=terms} ad(xi)^k w / k!.

    Uses only the bracket; independent of the closed form in `adjoint`.
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    acc = w
    term = w
    for k in range(1, terms + 1):
        term = bracket(g.xi, term) * (1.0 / k)
        acc = acc + term
    return acc


# Semidirect coordinates (a, P, p) with Exp(bB + X + yZ) <-> (b, rho(b/2) X, rho(b) y);
# the product law there is (a,P,p)(b,Q,q) = (a+b, P + e^(a/2) Q, p + e^a q + <JP, e^(a/2) Q>/2).

def _to_semi(xi: AlgVec):
    b = xi.a
    return b, rho(b / 2.0) * xi.v, rho(b) * xi.z


def _from_semi(n: int, b: float, P: np.ndarray, p: float) -> AlgVec:
    return AlgVec.from_parts(n, a=b, v=P / rho(b / 2.0), z=p / rho(b))


def group_multiply(g1: GroupElement, g2: GroupElement) -> GroupElement:
    _check_same_dim(g1.xi, g2.xi)
    a, P, p = _to_semi(g1.xi)
    b, Q, q = _to_semi(g2.xi)
    ea2 = math.exp(a / 2.0)
    c = a + b
    R = P + ea2 * Q
    r = p + math.exp(a) * q + 0.5 * float(np.imag(np.vdot(P, ea2 * Q)))
    return GroupElement(_from_semi(g1.n, c, R, r))


def group_inverse(g: GroupElement) -> GroupElement:
    return GroupElement(-g.xi)
