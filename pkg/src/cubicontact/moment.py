"""Moment functionals on the chart and the moment variety equation.

For a group generator A, the moment value at a chart point is theta~
evaluated on the fundamental vector field of A, computed as the exact
t-derivative at 0 of the A-flow written in chart coordinates.  For
generators in n the flow fixes z and y and its derivative is polynomial,
so everything reduces to plain rational arithmetic; for sl(W) generators
the flow moves z and y and the derivative is taken with first order
jets.

The n-components are assembled into a point of the dual space through a
fixed identification of (V (x) W)* and W* with V* (x) W and W via the
symplectic form.  The identification on the (V (x) W)* block carries the
constant -2: with that normalization the assembled triples satisfy

    omega(phi1, phi3) = c(phi2, phi2, .)

exactly at every chart point, which is the moment variety equation (the
naive unscaled identification satisfies it only up to a factor 2, an
artifact of c(v,v,.) being the full polarization).

Orientation note: the flow computation pairs with the 'flow' orientation
of the chart one-form (see contact.one_form); with the published
'display' orientation the grade-2 component of the assembled functional
cancels identically and no identification can repair the equation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bch import ChartElem, chart_decompose
from .contact import ChartPoint, require_assumption
from .cubic import (
    ReductionError,
    SymCubic,
    cubic_hash,
    polarize,
    reduce_mod,
    trilinear,
)
from .nilpotent import NElem, SlWElem, bracket, _dot
from .sampling import SeededSampler
from .scalars import HALF, Jet, Q0, TWELFTH


@dataclass(frozen=True)
class MomentPoint:
    """Triple (phi1, phi2, phi3) in the dual of n.

    phi1: p rows of (f1 column, f2 column), an element of V* (x) W
    phi2: vector in V (the dual of n2)
    phi3: (f1, f2) coordinates of an element of W
    """

    phi1: tuple
    phi2: tuple
    phi3: tuple

    @property
    def dim(self) -> int:
        return len(self.phi2)


def moment_membership(m: MomentPoint, T: SymCubic) -> bool:
    """Exact test of omega(phi1, phi3) = c(phi2, phi2, .)."""
    p = T.dim
    if m.dim != p or len(m.phi1) != p:
        raise ValueError("dimension mismatch")
    # omega(phi3, f1) = -phi3_f2, omega(phi3, f2) = +phi3_f1.
    w1 = -m.phi3[1]
    w2 = m.phi3[0]
    rhs = polarize(T, m.phi2, m.phi2)
    for k in range(p):
        lhs = m.phi1[k][0] * w1 + m.phi1[k][1] * w2
        if lhs != rhs[k]:
            return False
    return True


def _velocity_from_n_generator(pt: ChartPoint, A: NElem, T: SymCubic):
    """Coordinate velocity of the left flow of exp(tA) at t = 0.

    The flow multiplies exp(tA) exp(X) and re-expresses the product in
    the chart at the same base line; to first order the moved element is
    X + t V with V = A + 1/2 [A, X] + 1/12 [X, [X, A]], and the chart
    re-decomposition is linearized by hand below (it is affine in the
    first-order part).  z and y do not move.
    """
    p = T.dim
    X = pt.chart.to_nelem()
    z = pt.z
    ax = bracket(A, X, T)
    V = A + HALF * ax + TWELFTH * bracket(X, bracket(X, A, T), T)
    v_l = V.col(0)
    v_m = V.col(1)
    x1 = pt.chart.x1
    x2 = pt.chart.x2
    xdot1 = tuple(m - z * l for m, l in zip(v_m, v_l))
    b_x1_vl = polarize(T, x1, v_l)
    xdot2 = tuple(a + HALF * b for a, b in zip(V.n2, b_x1_vl))
    x2_vl = _dot(x2, v_l)
    xdot3_l = V.n3[0] - HALF * x2_vl
    xdot3_m = V.n3[1] - HALF * z * x2_vl - TWELFTH * trilinear(T, x1, x1, v_l)
    return (Q0, Q0, xdot3_m, xdot3_l) + xdot1 + xdot2


def _velocity_from_slw_generator(pt: ChartPoint, A: SlWElem, T: SymCubic):
    """Coordinate velocity of the sl(W) flow, via first order jets."""
    (a, b), (c, _d) = A.mat
    p = T.dim
    eps = Jet(0, 1)
    z = Jet(pt.z)
    y = Jet(pt.y)
    lam = 1 + eps * (a + pt.z * b)
    znew = (z + eps * (c - pt.z * a)) / lam
    ynew = y * lam
    x1 = pt.chart.x1
    x2 = pt.chart.x2
    x3l, x3m = pt.chart.x3_l, pt.chart.x3_m
    U = NElem.from_parts(
        p,
        col1=tuple(eps * (b * t) for t in x1),
        col2=tuple(Jet(t) - eps * (a * t) for t in x1),
        n2=tuple(Jet(t) for t in x2),
        n3=(
            Jet(x3l) + eps * (a * x3l + b * x3m),
            Jet(x3m) + eps * (c * x3l - a * x3m),
        ),
    )
    chart, _w = chart_decompose(U, znew, T)
    for got, want in (
        (znew.val, pt.z),
        (ynew.val, pt.y),
        (chart.x3_m.val, pt.chart.x3_m),
    ):
        assert got == want, "flow does not fix the base point coordinates"
    xdot1 = tuple(t.eps for t in chart.x1)
    xdot2 = tuple(t.eps for t in chart.x2)
    return (
        (ynew.eps, znew.eps, chart.x3_m.eps, chart.x3_l.eps) + xdot1 + xdot2
    )


def moment_of(pt: ChartPoint, A, T: SymCubic) -> Fraction:
    """theta~ on the fundamental vector field of the generator A at pt.

    A may be an NElem, an SlWElem, or an (NElem, SlWElem) pair acting as
    the sum of the two generators.
    """
    require_assumption(T)
    if pt.y == 0:
        raise ValueError("fiber coordinate y must be nonzero")
    if isinstance(A, tuple):
        an, aw = A
        return moment_of(pt, an, T) + moment_of(pt, aw, T)
    if isinstance(A, NElem):
        vel = _velocity_from_n_generator(pt, A, T)
    elif isinstance(A, SlWElem):
        vel = _velocity_from_slw_generator(pt, A, T)
    else:
        raise TypeError(f"unsupported generator {A!r}")
    # Flow-oriented one-form: y (dX3m - z dX3l) + y/2 (X1.dX2 - X2.dX1).
    p = T.dim
    y, z = pt.y, pt.z
    x1, x2 = pt.chart.x1, pt.chart.x2
    acc = Q0
    for i in range(p):
        acc += x1[i] * vel[4 + p + i] - x2[i] * vel[4 + i]
    return y * (vel[2] - z * vel[3]) + HALF * y * acc


def moment_point_at(pt: ChartPoint, T: SymCubic) -> MomentPoint:
    """Assemble the n* component of the moment map at pt.

    Pairs the moment functional with the basis of n and presents the
    result in V* (x) W and W coordinates through the symplectic
    identifications (the n1 block scaled by -2, see the module note).
    """
    p = T.dim
    mu1 = []
    for k in range(p):
        row = []
        for col in (0, 1):
            basis = NElem.from_parts(
                p,
                col1=[
                    (Fraction(1) if (col == 0 and i == k) else Q0)
                    for i in range(p)
                ],
                col2=[
                    (Fraction(1) if (col == 1 and i == k) else Q0)
                    for i in range(p)
                ],
            )
            row.append(moment_of(pt, basis, T))
        mu1.append(row)
    mu2 = []
    for k in range(p):
        basis = NElem.from_parts(
            p, n2=[Fraction(1) if i == k else Q0 for i in range(p)]
        )
        mu2.append(moment_of(pt, basis, T))
    mu3 = [
        moment_of(pt, NElem.from_parts(p, n3=(1, 0)), T),
        moment_of(pt, NElem.from_parts(p, n3=(0, 1)), T),
    ]
    phi1 = tuple((-2 * mu1[k][1], 2 * mu1[k][0]) for k in range(p))
    phi2 = tuple(mu2)
    phi3 = (mu3[1], -mu3[0])
    return MomentPoint(phi1=phi1, phi2=phi2, phi3=phi3)


# --- finite field smoothness probe --------------------------------------

@dataclass(frozen=True)
class ProbeVerdict:
    cubic_hash: str
    primes: tuple
    modes: tuple  # (q, 'exhaustive'|'random') in probe order
    trials: tuple  # (q, count actually tested)
    witness: tuple | None  # (q, coordinates) or None

    @property
    def found(self) -> bool:
        return self.witness is not None

    @property
    def verdict_class(self) -> str:
        return "witness-found" if self.found else "none-found"

    def to_json(self) -> dict:
        return {
            "cubic_hash": self.cubic_hash,
            "primes": list(self.primes),
            "modes": {str(q): m for q, m in self.modes},
            "trials": {str(q): n for q, n in self.trials},
            "witness": (
                None
                if self.witness is None
                else {"q": self.witness[0], "v": list(self.witness[1])}
            ),
        }


def _quadric_data(ff):
    """Per-coordinate quadratic forms of B(v, v) mod q, for fast scans."""
    q = ff.modulus
    per_k = [[] for _ in range(ff.dim)]
    for (i, j, k), val in ff.entries:
        # Contribution of the symmetric entry to each output slot.
        for (a, b, c) in {(i, j, k), (i, k, j), (j, k, i)}:
            coeff = val if a == b else (2 * val) % q
            per_k[c].append((a, b, coeff))
    return per_k


def _is_quadric_zero(per_k, v, q) -> bool:
    for terms in per_k:
        acc = 0
        for a, b, coeff in terms:
            acc += coeff * v[a] * v[b]
        if acc % q:
            return False
    return True


def smoothness_probe(
    T: SymCubic, primes=(5, 7, 11, 13), budget: int = 10 ** 6, seed: int = 0
) -> ProbeVerdict:
    """Search for v != 0 over F_q with B(v, v) = 0.

    Such a v is (the reduction of) a singular point of the projective
    cubic hypersurface, since the gradient of c at v equals 3 B(v, v)
    under the full-sum normalization.  Exhaustive when q^p <= budget,
    otherwise `budget` seeded random trials per prime; the verdict is
    probabilistic evidence, not a proof of smoothness.
    """
    p = T.dim
    modes = []
    trials = []
    witness = None
    for q in primes:
        ff = reduce_mod(T, q)
        per_k = _quadric_data(ff)
        exhaustive = q ** p <= budget
        modes.append((q, "exhaustive" if exhaustive else "random"))
        count = 0
        if exhaustive:
            v = [0] * p
            while True:
                # Lexicographic increment, skipping the zero vector.
                i = p - 1
                while i >= 0 and v[i] == q - 1:
                    v[i] = 0
                    i -= 1
                if i < 0:
                    break
                v[i] += 1
                count += 1
                if _is_quadric_zero(per_k, v, q):
                    witness = (q, tuple(v))
                    break
        else:
            sampler = SeededSampler(seed ^ (q << 20))
            for _ in range(budget):
                v = sampler.residue_vector(p, q)
                if not any(v):
                    continue
                count += 1
                if _is_quadric_zero(per_k, v, q):
                    witness = (q, tuple(v))
                    break
        trials.append((q, count))
        if witness is not None:
            break
    return ProbeVerdict(
        cubic_hash=cubic_hash(T),
        primes=tuple(primes),
        modes=tuple(modes),
        trials=tuple(trials),
        witness=witness,
    )


def boundary_report(
    T: SymCubic, primes=(5, 7, 11, 13), budget: int = 10 ** 6, seed: int = 0
) -> dict:
    """Codimension bookkeeping for the boundary of the moment image.

    The image has dimension 2p + 2; its boundary forces phi3 = 0 and
    then c(phi2, phi2, .) = 0.  When the probe finds no singular-point
    witness the boundary parameters reduce to the 2p of phi1 and the
    codimension >= 2 argument applies; a witness flags the smoothness
    hypothesis as violated and the argument as inapplicable.
    """
    p = T.dim
    verdict = smoothness_probe(T, primes=primes, budget=budget, seed=seed)
    supported = not verdict.found
    return {
        "cubic_hash": cubic_hash(T),
        "p": p,
        "dim_moment_image": 2 * p + 2,
        "boundary_param_count": 2 * p,
        "probe": verdict.to_json(),
        "codim_ge2_supported": supported,
        "smoothness_hypothesis_holds": supported,
        "inapplicable": verdict.found,
    }
