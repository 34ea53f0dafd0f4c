"""Contact form in chart coordinates and the tangent map of lines.

Chart coordinates on the punctured line bundle are ordered

    (y, z, X3m, X3l, X1_1..X1_p, X2_1..X2_p),        2p + 4 in total,

with y != 0 the fiber coordinate and z the coordinate on the projective
W line.  The pulled back one-form used here is the published chart
display

    theta~ = y (dX3m - z dX3l) + y/2 (X2.dX1 - X1.dX2),

whose exterior derivative at the base point is

    dy ^ dX3m - y dz ^ dX3l + y dX2 ^ dX1.

The sign of the half term depends on an orientation convention for the
chart identification; the opposite orientation (obtained by X2 -> -X2)
is the one compatible with the bracket conventions of this package and
is what the moment-map module consumes.  Both have the same determinant
at every point, so the nondegeneracy certificate is orientation-blind.

The skew matrix of d(theta~) is produced by symbolic exterior
differentiation of the one-form (polynomial coefficients), then exact
evaluation; nondegeneracy is certified by exact determinants at seeded
sample points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bch import ChartElem, solve_line_coordinates
from .cubic import (
    SymCubic,
    assumption_holds,
    basis_vector,
    cubic_eval,
    cubic_hash,
    polarize,
)
from .linalg import mat_det
from .sampling import SeededSampler
from .scalars import HALF, MPoly, Q0, Q1, SIXTH


class AssumptionError(ValueError):
    """The cubic violates the surjectivity condition on B."""


def require_assumption(T: SymCubic):
    if not assumption_holds(T):
        raise AssumptionError(
            "polarization map is not surjective; contact operations refuse"
        )


@dataclass(frozen=True)
class ChartPoint:
    """Point of the chart on the punctured line bundle (y != 0)."""

    chart: ChartElem
    z: Fraction
    y: Fraction

    @property
    def dim(self) -> int:
        return self.chart.dim

    @staticmethod
    def base(p: int, y=Q1) -> "ChartPoint":
        return ChartPoint(ChartElem.zero(p), Q0, y)

    def coords(self):
        c = self.chart
        return (self.y, self.z, c.x3_m, c.x3_l) + tuple(c.x1) + tuple(c.x2)


def coordinate_names(p: int):
    names = ["y", "z", "X3m", "X3l"]
    names += [f"X1_{i}" for i in range(p)]
    names += [f"X2_{i}" for i in range(p)]
    return names


def theta(X: ChartElem, Z: ChartElem, T: SymCubic) -> Fraction:
    """Contact form at chart point X on a chart velocity Z, mod the f1 line.

    Returns the f2 coefficient Z3m + 1/2 (X2(z1) - Z2(x1)), the published
    chart display.
    """
    require_assumption(T)
    if X.dim != Z.dim or X.dim != T.dim:
        raise ValueError("dimension mismatch")
    x2_z1 = sum((a * b for a, b in zip(X.x2, Z.x1)), Q0)
    z2_x1 = sum((a * b for a, b in zip(Z.x2, X.x1)), Q0)
    return Z.x3_m + HALF * (x2_z1 - z2_x1)


def one_form(p: int, orientation: str = "display"):
    """Coefficients of theta~ as polynomials in the 2p+4 coordinates.

    orientation 'display' is the published chart formula; 'flow' flips
    the half term (X2 -> -X2), the variant consistent with the bracket
    conventions used for group flows.
    """
    n = 2 * p + 4
    y = MPoly.var(0, n)
    z = MPoly.var(1, n)
    sign = Q1 if orientation == "display" else -Q1
    coeffs = [MPoly.zero(n) for _ in range(n)]
    coeffs[2] = y  # dX3m
    coeffs[3] = -(y * z)  # dX3l
    for i in range(p):
        x1_i = MPoly.var(4 + i, n)
        x2_i = MPoly.var(4 + p + i, n)
        coeffs[4 + i] = (HALF * sign) * (y * x2_i)  # dX1_i
        coeffs[4 + p + i] = (-HALF * sign) * (y * x1_i)  # dX2_i
    return coeffs


def one_form_value(pt: ChartPoint, velocity, orientation: str = "display") -> Fraction:
    """theta~ evaluated on a coordinate velocity vector at pt."""
    p = pt.dim
    y, z = pt.y, pt.z
    x1, x2 = pt.chart.x1, pt.chart.x2
    sign = Q1 if orientation == "display" else -Q1
    val = y * (velocity[2] - z * velocity[3])
    acc = Q0
    for i in range(p):
        acc += x2[i] * velocity[4 + i] - x1[i] * velocity[4 + p + i]
    return val + sign * HALF * y * acc


def dtheta_matrix(pt: ChartPoint, T: SymCubic, orientation: str = "display"):
    """Exact skew matrix of d(theta~) at pt, coordinates as in coords()."""
    if pt.y == 0:
        raise ValueError("fiber coordinate y must be nonzero")
    p = T.dim
    if pt.dim != p:
        raise ValueError("dimension mismatch")
    n = 2 * p + 4
    coeffs = one_form(p, orientation)
    point = pt.coords()
    mat = [[Q0] * n for _ in range(n)]
    for a in range(n):
        fa = coeffs[a]
        for b in range(a + 1, n):
            entry = (coeffs[b].diff(a) - fa.diff(b)).eval(point)
            if entry:
                mat[a][b] = entry
                mat[b][a] = -entry
    return mat


def sample_chart_point(sampler: SeededSampler, p: int) -> ChartPoint:
    chart = ChartElem(
        sampler.vector(p), sampler.vector(p), sampler.fraction(), sampler.fraction()
    )
    return ChartPoint(chart, sampler.fraction(), sampler.nonzero_fraction())


@dataclass(frozen=True)
class NondegeneracyReport:
    cubic_hash: str
    p: int
    samples: int
    seed: int
    assumption_ok: bool
    determinants: tuple
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        nonzero = [abs(d) for d in self.determinants if d]
        min_digits = (
            len(str(min(nonzero).numerator)) if nonzero and self.ok else 0
        )
        return {
            "cubic_hash": self.cubic_hash,
            "p": self.p,
            "samples": self.samples,
            "seed": self.seed,
            "assumption_ok": self.assumption_ok,
            "min_abs_det_num_digits": min_digits,
            "failures": [list(f) for f in self.failures],
        }


def nondegeneracy_certificate(
    T: SymCubic, samples: int = 100, seed: int = 0
) -> NondegeneracyReport:
    """Exact determinants of d(theta~) at seeded points with y != 0.

    Runs even when the surjectivity assumption fails (the certificate is
    then informational; the report carries the flag).
    """
    p = T.dim
    sampler = SeededSampler(seed)
    dets = []
    failures = []
    for s in range(samples):
        pt = sample_chart_point(sampler, p)
        det = mat_det(dtheta_matrix(pt, T))
        dets.append(det)
        if det == 0:
            failures.append((s,) + pt.coords())
    return NondegeneracyReport(
        cubic_hash=cubic_hash(T),
        p=p,
        samples=samples,
        seed=seed,
        assumption_ok=assumption_holds(T),
        determinants=tuple(dets),
        failures=tuple(failures),
    )


def symplectic_pairing_D(d1, d2, T: SymCubic) -> Fraction:
    """Restriction of d(theta~) (y = 1) to the contact hyperplane at base.

    Arguments are coordinate velocity vectors at the base point; both
    must lie in the hyperplane, i.e. have zero value under theta~ there
    (the X3m component vanishes).
    """
    require_assumption(T)
    p = T.dim
    n = 2 * p + 4
    if len(d1) != n or len(d2) != n:
        raise ValueError(f"expected coordinate vectors of length {n}")
    base = ChartPoint.base(p)
    for d in (d1, d2):
        if one_form_value(base, d) != 0:
            raise ValueError("argument is not in the contact hyperplane")
    mat = dtheta_matrix(base, T)
    total = Q0
    for a in range(n):
        if not d1[a]:
            continue
        row = mat[a]
        for b in range(n):
            if row[b] and d2[b]:
                total += d1[a] * row[b] * d2[b]
    return total


# --- tangent map of lines ----------------------------------------------

def tau(v, T: SymCubic):
    """[v : B(v,v) : c(v) : 1] as a flat coordinate tuple of length 2p+2."""
    if len(v) != T.dim:
        raise ValueError("dimension mismatch")
    return tuple(v) + polarize(T, v, v) + (cubic_eval(T, v), Q1)


def tau_closure_sample(v, t, T: SymCubic):
    """Homogenized sample [t^2 v : t B(v,v) : c(v) : t^3] of the closure.

    At t = 0 the raw tuple can vanish identically (when c(v) = 0); the
    returned value is then the limit representative along the ray, with
    the common power of t divided out: [0 : B(v,v) : 0 : 0] when the
    polarization survives, [v : 0 : 0 : 0] otherwise.
    """
    if len(v) != T.dim:
        raise ValueError("dimension mismatch")
    if not any(v) and not t:
        raise ValueError("(v, t) must be nonzero")
    p = T.dim
    bvv = polarize(T, v, v)
    cv = cubic_eval(T, v)
    if t:
        t2 = t * t
        return (
            tuple(t2 * x for x in v) + tuple(t * x for x in bvv) + (cv, t2 * t)
        )
    zero = (Q0,) * p
    if cv:
        return zero + zero + (cv, Q0)
    if any(bvv):
        return zero + bvv + (Q0, Q0)
    return tuple(v) + zero + (Q0, Q0)


_LINE_CONSTANTS_CACHE: dict = {}


def tau_line_constants(T: SymCubic):
    """The startup constants (s1, s2, s3) relating line coordinates to tau.

    Determined once per cubic from reference vectors with B(v,v) != 0 and
    c(v) != 0 (they exist whenever the surjectivity assumption holds).
    """
    require_assumption(T)
    key = cubic_hash(T)
    if key in _LINE_CONSTANTS_CACHE:
        return _LINE_CONSTANTS_CACHE[key]
    p = T.dim

    def reference_vectors():
        for i in range(p):
            yield basis_vector(p, i)
        for i in range(p):
            for j in range(i + 1, p):
                yield tuple(
                    Q1 if t in (i, j) else Q0 for t in range(p)
                )
        sampler = SeededSampler(91)
        for _ in range(256):
            yield sampler.vector(p)

    s1 = s2 = s3 = None
    for v in reference_vectors():
        sol = solve_line_coordinates(v, T)
        bvv = polarize(T, v, v)
        cv = cubic_eval(T, v)
        if s1 is None:
            for x, coeff in zip(v, sol.z1):
                if x:
                    s1 = coeff.coefficient(1) / x
                    break
        if s2 is None:
            for x, coeff in zip(bvv, sol.z2):
                if x:
                    s2 = coeff.coefficient(1) / x
                    break
        if s3 is None and cv:
            s3 = sol.z3_l.coefficient(1) / cv
        if s1 is not None and s2 is not None and s3 is not None:
            break
    if s1 is None or s2 is None or s3 is None:
        raise AssumptionError("could not calibrate line constants")
    _LINE_CONSTANTS_CACHE[key] = (s1, s2, s3)
    return s1, s2, s3


def tau_matches_line_expansion(v, T: SymCubic) -> bool:
    """Degree-1 line coefficients equal (s1 v, s2 B(v,v), s3 c(v)).

    The constants come from tau_line_constants and are independent of v;
    with the fixed orientation convention their magnitudes are 1, 1/2
    and 1/6.
    """
    require_assumption(T)
    s1, s2, s3 = tau_line_constants(T)
    sol = solve_line_coordinates(v, T)
    bvv = polarize(T, v, v)
    cv = cubic_eval(T, v)
    for x, coeff in zip(v, sol.z1):
        if coeff.coefficient(1) != s1 * x:
            return False
        if coeff.degree() > 1:
            return False
    for x, coeff in zip(bvv, sol.z2):
        if coeff.coefficient(1) != s2 * x:
            return False
    if sol.z3_l.coefficient(1) != s3 * cv:
        return False
    return True
