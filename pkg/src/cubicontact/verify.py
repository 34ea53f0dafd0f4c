"""Verification suites tying the modules into reproducible checks.

Each suite consumes a cubic and a RunConfig and returns (status,
details); statuses are 'pass', 'fail', 'inapplicable' or 'refused'.
All randomness flows from the config seed, so reports are reproducible
byte for byte.
"""

from __future__ import annotations

from .bch import (
    GroupElem,
    bch,
    exp_diff,
    exp_diff_inv,
    group_inv,
    group_mul,
    solve_line_coordinates,
)
from .contact import (
    ChartPoint,
    dtheta_matrix,
    nondegeneracy_certificate,
    tau_line_constants,
    tau_matches_line_expansion,
)
from .cubic import SymCubic, assumption_holds, b_rank, cubic_hash
from .linalg import mat_det
from .moment import boundary_report, moment_membership, moment_point_at
from .nilpotent import NElem, dim_report, n_basis, verify_jacobi
from .reports import RunConfig, VerificationReport, jsonable
from .sampling import SeededSampler
from .scalars import Q0, Q1


def _sample_nelem(sampler: SeededSampler, p: int) -> NElem:
    return NElem.from_parts(
        p,
        col1=sampler.vector(p),
        col2=sampler.vector(p),
        n2=sampler.vector(p),
        n3=(sampler.fraction(), sampler.fraction()),
    )


def run_jacobi_suite(T: SymCubic, cfg: RunConfig):
    rep = verify_jacobi(T)
    dims = dim_report(T)
    status = "pass" if rep.ok and dims["consistent"] else "fail"
    details = {"jacobi": rep.to_json(), "dimensions": dims}
    return status, details


def run_group_suite(T: SymCubic, cfg: RunConfig):
    p = T.dim
    sampler = SeededSampler(cfg.seed)
    failures = []
    for s in range(cfg.samples):
        a = GroupElem(_sample_nelem(sampler, p))
        b = GroupElem(_sample_nelem(sampler, p))
        c = GroupElem(_sample_nelem(sampler, p))
        left = group_mul(group_mul(a, b, T), c, T)
        right = group_mul(a, group_mul(b, c, T), T)
        if left.log != right.log:
            failures.append({"check": "associativity", "sample": s})
        if not group_mul(a, group_inv(a), T).log.is_zero():
            failures.append({"check": "inverse", "sample": s})
        if group_mul(a, GroupElem.identity(p), T).log != a.log:
            failures.append({"check": "identity", "sample": s})
        if not bch(a.log, -a.log, T).is_zero():
            failures.append({"check": "bch_negation", "sample": s})
        if failures:
            break
    status = "pass" if not failures else "fail"
    return status, {"samples": cfg.samples, "failures": failures}


def run_expdiff_suite(T: SymCubic, cfg: RunConfig):
    p = T.dim
    sampler = SeededSampler(cfg.seed ^ 0x5A5A)
    failures = []
    x_fixed = _sample_nelem(sampler, p)
    for z in n_basis(p):
        y = exp_diff_inv(x_fixed, z, T)
        if exp_diff(x_fixed, y, T) != z:
            failures.append({"check": "basis_roundtrip"})
            break
    for s in range(cfg.samples):
        x = _sample_nelem(sampler, p)
        z = _sample_nelem(sampler, p)
        if exp_diff(x, exp_diff_inv(x, z, T), T) != z:
            failures.append({"check": "roundtrip", "sample": s})
            break
    status = "pass" if not failures else "fail"
    return status, {"samples": cfg.samples, "failures": failures}


def run_contact_suite(T: SymCubic, cfg: RunConfig):
    cert = nondegeneracy_certificate(T, samples=cfg.samples, seed=cfg.seed)
    base = ChartPoint.base(T.dim)
    base_det = mat_det(dtheta_matrix(base, T))
    expected = Q1  # y = 1 at the base point: det = y^(2p+2)
    details = {
        "certificate": cert.to_json(),
        "base_point_det": str(base_det),
    }
    status = "pass" if cert.ok and base_det == expected else "fail"
    return status, details


def run_tau_suite(T: SymCubic, cfg: RunConfig):
    p = T.dim
    sampler = SeededSampler(cfg.seed ^ 0x7A7A)
    s1, s2, s3 = tau_line_constants(T)
    failures = []
    for s in range(cfg.samples):
        v = sampler.vector(p)
        if not tau_matches_line_expansion(v, T):
            failures.append({"sample": s})
            break
    magnitudes_ok = (abs(s1), abs(s2), abs(s3)) == (
        Q1,
        Q1 / 2,
        Q1 / 6,
    )
    status = "pass" if not failures and magnitudes_ok else "fail"
    return status, {
        "constants": [str(s1), str(s2), str(s3)],
        "magnitudes_ok": magnitudes_ok,
        "failures": failures,
    }


def run_moment_suite(T: SymCubic, cfg: RunConfig):
    from .contact import sample_chart_point

    p = T.dim
    sampler = SeededSampler(cfg.seed ^ 0x3C3C)
    failures = []
    for s in range(cfg.samples):
        pt = sample_chart_point(sampler, p)
        m = moment_point_at(pt, T)
        if not moment_membership(m, T):
            failures.append({"check": "membership", "sample": s})
            break
        if not (m.phi3[0] or m.phi3[1]):
            failures.append({"check": "phi3_nonzero", "sample": s})
            break
    boundary = boundary_report(
        T, primes=cfg.primes, budget=cfg.probe_budget, seed=cfg.seed
    )
    status = "pass" if not failures else "fail"
    return status, {
        "samples": cfg.samples,
        "failures": failures,
        "boundary": boundary,
        "prop5_inapplicable": boundary["inapplicable"],
    }


SUITES = {
    "jacobi": run_jacobi_suite,
    "group": run_group_suite,
    "expdiff": run_expdiff_suite,
    "contact": run_contact_suite,
    "tau": run_tau_suite,
    "moment": run_moment_suite,
}

# Suites that require the surjectivity assumption.
_GEOMETRIC = ("contact", "tau", "moment")


def run_verification(T: SymCubic, which, cfg: RunConfig) -> VerificationReport:
    report = VerificationReport(cubic_hash=cubic_hash(T), p=T.dim, config=cfg)
    ok_assumption = assumption_holds(T)
    for name in which:
        suite = SUITES[name]
        if name in _GEOMETRIC and not ok_assumption:
            report.add(
                name,
                "refused",
                {"reason": "surjectivity assumption violated", "b_rank": b_rank(T)},
            )
            continue
        status, details = suite(T, cfg)
        report.add(name, status, jsonable(details))
    return report
