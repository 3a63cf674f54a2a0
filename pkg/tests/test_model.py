import math

import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from crorbits import (
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

ATOL = 1e-12
SERIES_REL = 1e-9
SERIES_TERMS = 40


def test_rho_reference_values():
    assert rho(0.0) == 1.0
    assert abs(rho(1.0) - (math.e - 1.0)) < ATOL
    assert abs(rho(-1.0) - (1.0 - 1.0 / math.e)) < ATOL
    # Taylor branch continuity across the cutoff
    assert abs(rho(1e-6) - (1.0 + 0.5e-6 + 1e-12 / 6.0)) < 1e-15


def test_rho_reflection_identity():
    for t in np.linspace(-8.0, 8.0, 101):
        assert abs(rho(-t) - math.exp(-t) * rho(t)) < 1e-12


def test_j_squares_to_minus_identity():
    rng = np.random.default_rng(0)
    for n in (2, 3, 5):
        x = AlgVec(rng.standard_normal(2 * n))
        assert norm(J(J(x)) + x) < ATOL
        y = AlgVec(rng.standard_normal(2 * n))
        # J is orthogonal
        assert abs(inner(J(x), J(y)) - inner(x, y)) < ATOL


def test_bracket_structure():
    n = 3
    B = AlgVec.B(n)
    Z = AlgVec.Z(n)
    X = AlgVec.from_parts(n, v=[1.0, 0.0])
    iX = AlgVec.from_parts(n, v=[1.0j, 0.0])
    # scale acts with weight 1/2 on g_a and weight 1 on the center
    assert norm(bracket(B, X) - X * 0.5) < ATOL
    assert norm(bracket(B, Z) - Z) < ATOL
    # the center really is central
    assert norm(bracket(Z, X)) < ATOL
    assert norm(bracket(Z, B) + Z) < ATOL
    # complex pair closes onto the center
    assert norm(bracket(X, iX) - Z) < ATOL


@seed(11)
@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(-2.0, 2.0), min_size=18, max_size=18))
def test_jacobi_identity(flat):
    x, y, z = (AlgVec(np.array(flat[6 * k : 6 * k + 6])) for k in range(3))
    res = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert norm(res) < 1e-12


def test_bracket_antisymmetry():
    rng = np.random.default_rng(3)
    for _ in range(20):
        x = AlgVec(rng.standard_normal(8))
        y = AlgVec(rng.standard_normal(8))
        assert norm(bracket(x, y) + bracket(y, x)) < ATOL
        out = bracket(x, y)
        assert out.data[0] == 0.0  # brackets land in the nilpotent part


def test_adjoint_frozen_sample():
    # reference output of the 60-term series on a fixed element, n = 2
    g = GroupElement(AlgVec(np.array([0.5, 0.25, -0.75, 1.0])))
    w = AlgVec(np.array([1.0, -2.0, 0.5, 0.25]))
    expected = np.array(
        [1.0, -2.7100635417193537, 1.0680508333754828, -2.89108942079335]
    )
    assert norm(adjoint(g, w) - AlgVec(expected)) < 1e-12


def test_adjoint_matches_series():
    rng = np.random.default_rng(5)
    for _ in range(60):
        n = int(rng.integers(2, 6))
        xi = rng.standard_normal(2 * n)
        xi *= rng.uniform(0.0, 2.0) / np.linalg.norm(xi)
        g = GroupElement(AlgVec(xi))
        w = AlgVec(rng.standard_normal(2 * n))
        direct = adjoint(g, w)
        series = adjoint_series(g, w, SERIES_TERMS)
        assert norm(direct - series) <= SERIES_REL * max(1.0, norm(direct))


def test_adjoint_is_homomorphism():
    rng = np.random.default_rng(6)
    for _ in range(40):
        n = int(rng.integers(2, 5))
        g1 = GroupElement(AlgVec(rng.standard_normal(2 * n)))
        g2 = GroupElement(AlgVec(rng.standard_normal(2 * n)))
        w = AlgVec(rng.standard_normal(2 * n))
        lhs = adjoint(group_multiply(g1, g2), w)
        rhs = adjoint(g1, adjoint(g2, w))
        assert norm(lhs - rhs) <= 1e-10 * max(1.0, norm(lhs))


def test_galpha_product_picks_up_center_term():
    # Exp(U) Exp(V) = Exp(U + V + <JU,V>/2 Z) for U, V in g_a
    n = 2
    U = AlgVec(np.array([0.0, 1.0, 0.0, 0.0]))
    V = AlgVec(np.array([0.0, 0.0, 1.0, 0.0]))
    prod = group_multiply(GroupElement(U), GroupElement(V))
    expected = U + V
    assert abs(prod.xi.data[-1] - 0.5) < ATOL
    assert np.linalg.norm(prod.xi.data[:-1] - expected.data[:-1]) < ATOL

    rng = np.random.default_rng(9)
    for _ in range(20):
        u = np.zeros(2 * n)
        v = np.zeros(2 * n)
        u[1:-1] = rng.standard_normal(2 * n - 2)
        v[1:-1] = rng.standard_normal(2 * n - 2)
        U, V = AlgVec(u), AlgVec(v)
        prod = group_multiply(GroupElement(U), GroupElement(V))
        expected = (U + V).data.copy()
        expected[-1] += 0.5 * inner(J(U), V)
        assert norm(prod.xi - AlgVec(expected)) < ATOL


def test_group_inverse_roundtrip():
    rng = np.random.default_rng(8)
    for _ in range(30):
        n = int(rng.integers(2, 6))
        g = GroupElement(AlgVec(rng.standard_normal(2 * n)))
        gi = group_inverse(g)
        assert norm(group_multiply(g, gi).xi) < 1e-12
        assert norm(group_multiply(gi, g).xi) < 1e-12


def test_group_associativity():
    rng = np.random.default_rng(12)
    for _ in range(30):
        n = int(rng.integers(2, 5))
        g1, g2, g3 = (GroupElement(AlgVec(rng.standard_normal(2 * n))) for _ in range(3))
        lhs = group_multiply(group_multiply(g1, g2), g3)
        rhs = group_multiply(g1, group_multiply(g2, g3))
        assert norm(lhs.xi - rhs.xi) < 1e-12


def test_dimension_guards():
    with pytest.raises(ValueError):
        AlgVec(np.zeros(2))  # n = 1 is below the supported range
    with pytest.raises(ValueError):
        AlgVec(np.zeros(5))  # odd length has no (a, v, z) split
