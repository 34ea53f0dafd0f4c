from fractions import Fraction as F

import pytest

from cubicontact.bch import ChartElem
from cubicontact.contact import (
    AssumptionError,
    ChartPoint,
    dtheta_matrix,
    nondegeneracy_certificate,
    one_form_value,
    sample_chart_point,
    symplectic_pairing_D,
    tau,
    tau_closure_sample,
    tau_line_constants,
    tau_matches_line_expansion,
    theta,
)
from cubicontact.cubic import SymCubic, cubic_eval, polarize
from cubicontact.linalg import mat_det
from cubicontact.sampling import SeededSampler

X3 = SymCubic(1, {(0, 0, 0): 1})
FERMAT3 = SymCubic(3, {(i, i, i): 1 for i in range(3)})
ZERO1 = SymCubic(1, {})


def test_theta_at_base_point_is_x3m_coefficient():
    z = ChartElem((F(2),), (F(3),), F(7), F(4))
    assert theta(ChartElem.zero(1), z, X3) == 7


def test_theta_kills_chart_directions_with_zero_x3m():
    z = ChartElem((F(2),), (F(3),), F(0), F(4))
    assert theta(ChartElem.zero(1), z, X3) == 0


def test_theta_half_term():
    x = ChartElem((F(0),), (F(1),), F(0), F(0))
    z = ChartElem((F(1),), (F(0),), F(0), F(0))
    assert theta(x, z, X3) == F(1, 2)


def test_theta_refuses_assumption_violation():
    with pytest.raises(AssumptionError):
        theta(ChartElem.zero(1), ChartElem.zero(1), ZERO1)


def test_dtheta_base_point_entries_p1():
    m = dtheta_matrix(ChartPoint.base(1), X3)
    # Coordinates (y, z, X3m, X3l, X1, X2): exactly the three blocks.
    expected = [[F(0)] * 6 for _ in range(6)]
    expected[0][2], expected[2][0] = F(1), F(-1)
    expected[1][3], expected[3][1] = F(-1), F(1)
    expected[5][4], expected[4][5] = F(1), F(-1)
    assert m == expected
    assert mat_det(m) == 1


def test_dtheta_scaling_in_y():
    m1 = dtheta_matrix(ChartPoint.base(1, F(1)), X3)
    m2 = dtheta_matrix(ChartPoint.base(1, F(2)), X3)
    assert m2[1][3] == 2 * m1[1][3]
    assert m2[5][4] == 2 * m1[5][4]
    assert m2[0][2] == m1[0][2]  # the dy block does not scale


def test_dtheta_antisymmetric_at_samples():
    sampler = SeededSampler(21)
    for _ in range(10):
        pt = sample_chart_point(sampler, 2)
        T = SymCubic(2, {(0, 0, 0): 1, (0, 1, 1): 1})
        m = dtheta_matrix(pt, T)
        n = len(m)
        for a in range(n):
            for b in range(n):
                assert m[a][b] == -m[b][a]


def test_dtheta_determinant_is_fiber_power():
    # Derived strengthening: in this chart det = y^(2p+2) identically.
    sampler = SeededSampler(22)
    T = FERMAT3
    for _ in range(10):
        pt = sample_chart_point(sampler, 3)
        m = dtheta_matrix(pt, T)
        assert mat_det(m) == pt.y ** (2 * 3 + 2)


def test_dtheta_requires_nonzero_y():
    pt = ChartPoint(ChartElem.zero(1), F(0), F(0))
    with pytest.raises(ValueError):
        dtheta_matrix(pt, X3)


def test_certificate_x3():
    rep = nondegeneracy_certificate(X3, samples=100, seed=0)
    assert rep.ok
    assert rep.samples == 100
    assert rep.assumption_ok
    js = rep.to_json()
    assert js["failures"] == []
    assert js["min_abs_det_num_digits"] >= 1


def test_certificate_zero_cubic_informational():
    rep = nondegeneracy_certificate(ZERO1, samples=20, seed=0)
    assert rep.ok  # Heisenberg-like structure stays nondegenerate
    assert not rep.assumption_ok


def test_certificate_determinism():
    a = nondegeneracy_certificate(X3, samples=25, seed=5).to_json()
    b = nondegeneracy_certificate(X3, samples=25, seed=5).to_json()
    assert a == b


def _unit(n, i):
    return tuple(F(1) if t == i else F(0) for t in range(n))


def test_pairing_d_blocks():
    p = 1
    n = 2 * p + 4
    # V direction (X1) against dual direction (X2): unit pairing.
    x1_dir = _unit(n, 4)
    x2_dir = _unit(n, 5)
    val = symplectic_pairing_D(x1_dir, x2_dir, X3)
    assert abs(val) == 1
    # z against X3l: the line pair.
    z_dir = _unit(n, 1)
    x3l_dir = _unit(n, 3)
    assert abs(symplectic_pairing_D(z_dir, x3l_dir, X3)) == 1
    # skew
    assert symplectic_pairing_D(x1_dir, x1_dir, X3) == 0
    assert symplectic_pairing_D(x1_dir, x2_dir, X3) == -symplectic_pairing_D(
        x2_dir, x1_dir, X3
    )


def test_pairing_d_rejects_non_d_vector():
    p = 1
    n = 2 * p + 4
    with pytest.raises(ValueError):
        symplectic_pairing_D(_unit(n, 2), _unit(n, 4), X3)


def test_pairing_d_rank():
    # Restricted to the chart directions of D the form has rank 2p + 2.
    for T, p in ((X3, 1), (FERMAT3, 3)):
        n = 2 * p + 4
        base = ChartPoint.base(p)
        m = dtheta_matrix(base, T)
        d_indices = [1, 3] + list(range(4, n))  # z, X3l, X1.., X2..
        sub = [[m[a][b] for b in d_indices] for a in d_indices]
        from cubicontact.linalg import mat_rank

        assert mat_rank(sub) == 2 * p + 2


def test_tau_values():
    assert tau((F(0),), X3) == (F(0), F(0), F(0), F(1))
    assert tau((F(2),), X3) == (F(2), F(4), F(8), F(1))
    got = tau((F(1), F(1), F(0)), FERMAT3)
    assert got == (F(1), F(1), F(0), F(1), F(1), F(0), F(2), F(1))


def test_tau_closure_samples():
    v = (F(2),)
    assert tau_closure_sample(v, F(1), X3) == tau(v, X3)
    at_zero = tau_closure_sample(v, F(0), X3)
    assert at_zero == (F(0), F(0), F(8), F(0))
    # c(v) = 0 but B(v, v) != 0: second point class of the closure.
    T = SymCubic(2, {(0, 0, 1): F(1, 3)})  # c = x^2 y up to scale
    v2 = (F(1), F(0))
    assert cubic_eval(T, v2) == 0
    got = tau_closure_sample(v2, F(0), T)
    assert got[: 2] == (F(0), F(0))
    assert any(got[2: 4]) and got[4] == 0 and got[5] == 0


def test_tau_closure_rejects_double_zero():
    with pytest.raises(ValueError):
        tau_closure_sample((F(0),), F(0), X3)


def test_tau_line_constants_and_match():
    s1, s2, s3 = tau_line_constants(X3)
    assert (abs(s1), abs(s2), abs(s3)) == (F(1), F(1, 2), F(1, 6))
    # Same constants from different vectors of different cubics.
    for T, p in ((X3, 1), (FERMAT3, 3)):
        assert tau_line_constants(T) == (s1, s2, s3)
        sampler = SeededSampler(23)
        for _ in range(20):
            assert tau_matches_line_expansion(sampler.vector(p), T)
    assert tau_matches_line_expansion((F(0),), X3)


def test_one_form_value_matches_matrix_convention():
    # theta~ at the base point picks the X3m velocity scaled by y.
    pt = ChartPoint.base(2, F(3))
    vel = tuple(F(1) if i == 2 else F(0) for i in range(8))
    assert one_form_value(pt, vel) == 3
