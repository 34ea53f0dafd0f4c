"""Group law and chart solving for the nilpotent group N.

Because n is 3-step nilpotent the Campbell-Hausdorff series terminates:

    H(X, Y) = X + Y + 1/2 [X,Y] + 1/12 [X,[X,Y]] + 1/12 [Y,[Y,X]].

Group elements are carried in logarithmic coordinates, so multiplication
is H, the identity is 0 and inversion is negation.

The differential of the exponential chart at X is

    e_X(Y) = Y + 1/2 [X,Y] + 1/12 [X,[X,Y]],

and ``exp_diff_inv`` inverts it by back substitution through the grades.
Solved this way the grade-3 line reads

    Y3 = Z3 - 1/2 [X1,Z2] - 1/2 [X2,Z1] + 1/6 [X1,[X1,Z1]],

valid for every input.  On the chart subspace, where X1 and Z1 share the
same W line and [X1, Z1] = 0, this agrees with the inversion display
that carries a 5/12 coefficient instead; the difference is exactly
1/4 [X1,[X1,Z1]] and a dedicated test records both behaviours.

``chart_decompose`` factors exp(U) = exp(X) exp(w (x) p) with X in the
chart complement n_m = (V (x) f2) + V* + W and p = f1 + z f2; it works
over any of the scalar rings (rationals, polynomials in z, jets), which
is what the line solver and the moment computations build on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cubic import SymCubic, polarize, trilinear
from .nilpotent import NElem, bracket, _dot, _vadd, _vsub
from .scalars import HALF, Q0, QPoly, SIXTH, TWELFTH


def bch(X: NElem, Y: NElem, T: SymCubic) -> NElem:
    """Truncated Campbell-Hausdorff product H(X, Y), exact."""
    xy = bracket(X, Y, T)
    term2 = HALF * xy
    term3 = TWELFTH * bracket(X, xy, T)
    term4 = TWELFTH * bracket(Y, bracket(Y, X, T), T)
    return X + Y + term2 + term3 + term4


@dataclass(frozen=True)
class GroupElem:
    """Element of N in log coordinates: the group element exp(log)."""

    log: NElem

    @staticmethod
    def identity(p: int) -> "GroupElem":
        return GroupElem(NElem.zero(p))


def group_mul(a: GroupElem, b: GroupElem, T: SymCubic) -> GroupElem:
    return GroupElem(bch(a.log, b.log, T))


def group_inv(a: GroupElem) -> GroupElem:
    return GroupElem(-a.log)


def exp_diff(X: NElem, Y: NElem, T: SymCubic) -> NElem:
    """e_X(Y) = Y + 1/2 [X,Y] + 1/12 [X,[X,Y]]; linear in Y."""
    xy = bracket(X, Y, T)
    return Y + HALF * xy + TWELFTH * bracket(X, xy, T)


def exp_diff_inv(X: NElem, Z: NElem, T: SymCubic) -> NElem:
    """The exact Y with exp_diff(X, Y) = Z, by grade-wise back substitution."""
    p = T.dim
    # Grade 1: Y1 = Z1.
    y1 = NElem(Z.n1, (Q0,) * p, (Q0, Q0))
    x1 = NElem(X.n1, (Q0,) * p, (Q0, Q0))
    # Grade 2: Y2 = Z2 - 1/2 [X1, Y1].
    b11 = bracket(x1, y1, T)
    y2_cov = _vsub(Z.n2, tuple(HALF * t for t in b11.n2))
    y12 = NElem(Z.n1, y2_cov, (Q0, Q0))
    # Grade 3: Y3 = Z3 - 1/2 [X, Y1 + Y2]_3 - 1/12 [X1, [X1, Y1]].
    x12 = NElem(X.n1, X.n2, (Q0, Q0))
    corr = HALF * bracket(x12, y12, T) + TWELFTH * bracket(x1, b11, T)
    y3 = _vsub(Z.n3, corr.n3)
    return NElem(Z.n1, y2_cov, y3)


# --- the chart over the projective W line ------------------------------

@dataclass(frozen=True)
class ChartElem:
    """Element of the chart complement n_m = (V (x) f2) + V* + W.

    x1:   V coordinates of the (x) f2 part
    x2:   covector coordinates (grade 2)
    x3_m: W coordinate on f2 (the chart coordinate usually written X3^1)
    x3_l: W coordinate on f1 (X3^2)
    """

    x1: tuple
    x2: tuple
    x3_m: object
    x3_l: object

    @property
    def dim(self) -> int:
        return len(self.x1)

    @staticmethod
    def zero(p: int) -> "ChartElem":
        return ChartElem((Q0,) * p, (Q0,) * p, Q0, Q0)

    def to_nelem(self) -> NElem:
        return NElem.from_parts(
            self.dim, col2=self.x1, n2=self.x2, n3=(self.x3_l, self.x3_m)
        )

    @staticmethod
    def from_nelem(x: NElem) -> "ChartElem":
        if any(r[0] for r in x.n1):
            raise ValueError("element has a V (x) f1 component, not in the chart")
        return ChartElem(x.col(1), x.n2, x.n3[1], x.n3[0])


def chart_decompose(U: NElem, z, T: SymCubic):
    """Solve exp(U) = exp(X) exp(w (x) p) with X in n_m and p = f1 + z f2.

    Returns (ChartElem, w).  Exact over any scalar ring containing the
    entries of U and z; only ring operations and division by the fixed
    integers 2, 12 occur.
    """
    u_l = U.col(0)
    u_m = U.col(1)
    w = u_l
    x1 = tuple(m - z * l for m, l in zip(u_m, u_l))
    # Grade 2: X2 = U2 + 1/2 B(x1, w)   (from [x1 (x) f2, w (x) p]).
    bx1w = polarize(T, x1, w)
    x2 = tuple(u + HALF * b for u, b in zip(U.n2, bx1w))
    # Grade 3 corrections.
    x2w = _dot(x2, w)
    t_x1x1w = trilinear(T, x1, x1, w)
    t_x1ww = trilinear(T, x1, w, w)
    x3_l = U.n3[0] - HALF * x2w + TWELFTH * t_x1ww
    x3_m = (
        U.n3[1]
        - HALF * (z * x2w)
        - TWELFTH * t_x1x1w
        + TWELFTH * (z * t_x1ww)
    )
    return ChartElem(x1, x2, x3_m, x3_l), w


def chart_recompose(chart: ChartElem, w, z, T: SymCubic) -> NElem:
    """H(X, w (x) p): inverse of chart_decompose, for verification."""
    p_dim = chart.dim
    x = chart.to_nelem()
    wp = NElem.from_parts(
        p_dim, col1=w, col2=tuple(z * wi for wi in w)
    )
    return bch(x, wp, T)


@dataclass(frozen=True)
class LineSolution:
    """Exact chart coordinates of the line through exp(v (x) f1).

    All fields are QPoly in the line parameter z: z1 (V coordinates of
    the (x) f2 block), z2 (covector), z3_l / z3_m (W coordinates on f1
    and f2), and w with exp(v (x) f1) = exp(Z) exp(w (x) (f1 + z f2)).
    """

    v: tuple
    z1: tuple
    z2: tuple
    z3_l: QPoly
    z3_m: QPoly
    w: tuple


def solve_line_coordinates(v, T: SymCubic) -> LineSolution:
    """Solve exp(v (x) f1) = exp(Z(z)) exp(w(z) (x) p) exactly over Q[z]."""
    p = T.dim
    if len(v) != p:
        raise ValueError(f"vector length {len(v)} != dim {p}")
    zvar = QPoly.x()
    lift = QPoly.const
    U = NElem.from_parts(p, col1=tuple(lift(c) for c in v)).map_scalars(
        lambda s: s if isinstance(s, QPoly) else lift(s)
    )
    chart, w = chart_decompose(U, zvar, T)
    return LineSolution(
        v=tuple(v),
        z1=chart.x1,
        z2=chart.x2,
        z3_l=chart.x3_l,
        z3_m=chart.x3_m,
        w=w,
    )


def line_solution_consistent(sol: LineSolution, T: SymCubic) -> bool:
    """Substitute the solution back through the group law, as polynomials."""
    p = T.dim
    zvar = QPoly.x()
    chart = ChartElem(sol.z1, sol.z2, sol.z3_m, sol.z3_l)
    recomposed = chart_recompose(chart, sol.w, zvar, T)
    expected = NElem.from_parts(
        p, col1=tuple(QPoly.const(c) for c in sol.v)
    )
    diff = recomposed - expected.map_scalars(
        lambda s: s if isinstance(s, QPoly) else QPoly.const(s)
    )
    return diff.is_zero()
