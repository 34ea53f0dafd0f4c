from fractions import Fraction as F

import pytest

from cubicontact.catalog import catalog_get
from cubicontact.contact import ChartPoint, sample_chart_point
from cubicontact.cubic import ReductionError, SymCubic, polarize
from cubicontact.moment import (
    MomentPoint,
    boundary_report,
    moment_membership,
    moment_of,
    moment_point_at,
    smoothness_probe,
)
from cubicontact.nilpotent import NElem, SlWElem, n_basis
from cubicontact.sampling import SeededSampler

X3 = SymCubic(1, {(0, 0, 0): 1})
FERMAT3 = SymCubic(3, {(i, i, i): 1 for i in range(3)})


def test_membership_zero_triple():
    m = MomentPoint(((F(0), F(0)),), (F(0),), (F(0), F(0)))
    assert moment_membership(m, X3)


def test_membership_hand_true_case():
    # phi1 with f1 column -1, phi2 = 1, phi3 = f2 contracts to B(1,1).
    m = MomentPoint(((F(-1), F(0)),), (F(1),), (F(0), F(1)))
    assert moment_membership(m, X3)


def test_membership_hand_false_case():
    m = MomentPoint(((F(0), F(0)),), (F(1),), (F(0), F(0)))
    assert not moment_membership(m, X3)


def test_moment_of_central_generators_at_base():
    for y in (F(1), F(3), F(-2)):
        pt = ChartPoint.base(1, y)
        f1 = NElem.from_parts(1, n3=(F(1), F(0)))
        f2 = NElem.from_parts(1, n3=(F(0), F(1)))
        assert moment_of(pt, f1, X3) == 0
        assert moment_of(pt, f2, X3) == y


def test_moment_of_linear_in_generator():
    sampler = SeededSampler(31)
    T = FERMAT3
    pt = sample_chart_point(sampler, 3)
    basis = n_basis(3)
    for _ in range(5):
        coeffs = [sampler.fraction() for _ in basis]
        combo = NElem.zero(3)
        expected = F(0)
        for c, b in zip(coeffs, basis):
            combo = combo + c * b
            expected += c * moment_of(pt, b, T)
        assert moment_of(pt, combo, T) == expected
    # and over sl(W)
    g1, g2 = SlWElem.of(1, 0, 0), SlWElem.of(0, 1, 2)
    for c in (F(2), F(-1, 3)):
        combo = SlWElem.of(
            g1.mat[0][0] * c + g2.mat[0][0],
            g1.mat[0][1] * c + g2.mat[0][1],
            g1.mat[1][0] * c + g2.mat[1][0],
        )
        assert moment_of(pt, combo, T) == c * moment_of(pt, g1, T) + moment_of(
            pt, g2, T
        )


def test_moment_of_pair_generator():
    sampler = SeededSampler(32)
    pt = sample_chart_point(sampler, 1)
    a_n = NElem.from_parts(1, col1=(F(1),), n2=(F(2),))
    a_w = SlWElem.of(1, 2, 3)
    assert moment_of(pt, (a_n, a_w), X3) == moment_of(pt, a_n, X3) + moment_of(
        pt, a_w, X3
    )


@pytest.mark.parametrize("name", ["x3", "xyz", "fermat3", "det-sym-3"])
def test_assembled_moment_membership(name):
    T = catalog_get(name).tensor()
    sampler = SeededSampler(33)
    for _ in range(15):
        pt = sample_chart_point(sampler, T.dim)
        m = moment_point_at(pt, T)
        assert moment_membership(m, T)
        assert m.phi3[0] or m.phi3[1]


def test_assembled_moment_known_components():
    # At the base point with fiber y: phi2 = y x1 = 0, phi3 = y f1.
    pt = ChartPoint.base(1, F(5))
    m = moment_point_at(pt, X3)
    assert m.phi2 == (F(0),)
    assert m.phi3 == (F(5), F(0))


def test_probe_fermat_exhaustive_none():
    verdict = smoothness_probe(FERMAT3, primes=(5, 7, 11), budget=10 ** 6)
    assert not verdict.found
    assert all(mode == "exhaustive" for _q, mode in verdict.modes)
    assert dict(verdict.trials) == {5: 124, 7: 342, 11: 1330}


def test_probe_x3_none():
    verdict = smoothness_probe(X3, primes=(5, 7, 11, 13), budget=10 ** 6)
    assert not verdict.found


def test_probe_det_sym3_witness():
    T = catalog_get("det-sym-3").tensor()
    verdict = smoothness_probe(T, primes=(5, 7, 11, 13), budget=10 ** 6)
    assert verdict.found
    q, v = verdict.witness
    assert q == 5
    # Verify the witness honestly: B(v, v) = 0 mod q.
    vv = [F(x) for x in v]
    cov = polarize(T, vv, vv)
    assert all(c.denominator == 1 and c.numerator % q == 0 for c in cov)
    assert any(v)


def test_probe_rejects_bad_modulus():
    T = SymCubic(1, {(0, 0, 0): F(1, 5)})
    with pytest.raises(ReductionError):
        smoothness_probe(T, primes=(5,), budget=100)


def test_probe_reproducible():
    T = catalog_get("det3").tensor()
    a = smoothness_probe(T, primes=(5,), budget=5000, seed=9).to_json()
    b = smoothness_probe(T, primes=(5,), budget=5000, seed=9).to_json()
    assert a == b
    assert a["modes"]["5"] == "random"


def test_boundary_report_fermat_supported():
    rep = boundary_report(FERMAT3, primes=(5, 7, 11), budget=10 ** 6)
    assert rep["codim_ge2_supported"]
    assert not rep["inapplicable"]
    assert rep["dim_moment_image"] == 2 * 3 + 2
    assert rep["boundary_param_count"] == 2 * 3


def test_boundary_report_det_sym3_inapplicable():
    T = catalog_get("det-sym-3").tensor()
    rep = boundary_report(T, primes=(5,), budget=10 ** 6)
    assert rep["inapplicable"]
    assert not rep["codim_ge2_supported"]
