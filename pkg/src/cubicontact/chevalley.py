"""Chevalley bases with exact integer structure constants.

Basis: coroot generators h_1..h_r and root vectors e_beta for every
root.  Brackets:

    [h_i, h_j] = 0
    [h_i, e_beta] = <beta, alpha_i^vee> e_beta
    [e_beta, e_-beta] = H_beta   (beta^vee in the simple coroot basis)
    [e_beta, e_gamma] = N(beta, gamma) e_{beta+gamma}   if beta+gamma is a root

The integers N are fixed by the classical extraspecial-pair scheme: for
every non-simple positive root gamma, among its decompositions
gamma = alpha + beta into positive roots with alpha before beta in the
(height, lex) order, the pair with minimal alpha is extraspecial and
gets N = p + 1 > 0, where p is the length of the descending alpha-string
through beta.  Every other constant follows from the standard relations:

  * antisymmetry N(x, y) = -N(y, x) and negation N(-x, -y) = -N(x, y);
  * for x + y + z = 0:  N(x, y)/(z, z) = N(y, z)/(x, x) = N(z, x)/(y, y);
  * for a special pair (alpha, beta) with extraspecial (eps, delta):
        N(alpha, beta) N(eps, -gamma)
            = N(-beta, eps) N(-alpha, eps - beta)
            + N(eps, -alpha) N(-beta, eps - alpha),
    a Jacobi consequence on (e_eps, e_-alpha, e_-beta).

All constants are asserted integral; the Jacobi identity over basis
triples is re-verified by enumeration (sampled for the big algebras,
exhaustively under the long-run flag).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rootsystems import RootSystem, _neg, _vadd
from .sampling import SeededSampler


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class ChevalleyAlgebra:
    """Simple Lie algebra over Q in a Chevalley basis.

    Elements are dicts from basis labels to rational coefficients; the
    labels are ("h", i) for the coroot generators and ("e", root) for
    root vectors.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.labels = tuple(
            [("h", i) for i in range(rs.rank)]
            + [("e", b) for b in rs.pos_roots]
            + [("e", _neg(b)) for b in rs.pos_roots]
        )
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self._n_memo = {}
        self._extraspecial = self._build_extraspecial()

    # -- bookkeeping ----------------------------------------------------

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def _build_extraspecial(self):
        rs = self.rs
        out = {}
        for gamma in rs.pos_roots:
            if sum(gamma) == 1:
                continue
            best = None
            for alpha in rs.pos_roots:
                beta = _vsub(gamma, alpha)
                if not rs.is_positive(beta):
                    continue
                if rs.order_index(alpha) >= rs.order_index(beta):
                    continue
                if best is None or rs.order_index(alpha) < rs.order_index(best[0]):
                    best = (alpha, beta)
            if best is None:
                # gamma = alpha + alpha never happens; a decomposition
                # with alpha == beta is impossible for roots.
                raise RuntimeError(f"no decomposition for {gamma}")
            out[gamma] = best
        return out

    def string_p(self, alpha, beta) -> int:
        """Largest k with beta - k alpha a root."""
        rs = self.rs
        k = 0
        gamma = beta
        while True:
            gamma = _vsub(gamma, alpha)
            if rs.is_root(gamma) and any(gamma):
                k += 1
            else:
                return k

    # -- structure constants --------------------------------------------

    def n_constant(self, x, y) -> int:
        """N(x, y) with [e_x, e_y] = N(x, y) e_{x+y}; 0 if x+y not a root."""
        rs = self.rs
        s = _vadd(x, y)
        if not any(s) or not rs.is_root(s):
            return 0
        key = (x, y)
        hit = self._n_memo.get(key)
        if hit is not None:
            return hit
        val = self._n_compute(x, y, s)
        assert isinstance(val, int) or val.denominator == 1, (x, y, val)
        val = int(val)
        assert val != 0, ("vanishing structure constant", x, y)
        self._n_memo[key] = val
        return val

    def _n_compute(self, x, y, s):
        rs = self.rs
        xpos = rs.is_positive(x)
        ypos = rs.is_positive(y)
        if xpos and ypos:
            if rs.order_index(x) > rs.order_index(y):
                return -self.n_constant(y, x)
            eps, delta = self._extraspecial[s]
            if (x, y) == (eps, delta):
                return self.string_p(x, y) + 1
            # Special pair: Jacobi on (e_eps, e_-x, e_-y).
            t1 = 0
            if rs.is_root(_vsub(eps, y)):
                t1 = self.n_constant(_neg(y), eps) * self.n_constant(
                    _neg(x), _vsub(eps, y)
                )
            t2 = 0
            if rs.is_root(_vsub(eps, x)):
                t2 = self.n_constant(eps, _neg(x)) * self.n_constant(
                    _neg(y), _vsub(eps, x)
                )
            denom = self.n_constant(eps, _neg(s))
            val = Fraction(t1 + t2, denom)
            assert val.denominator == 1, (x, y, val)
            return int(val)
        if not xpos and not ypos:
            return -self.n_constant(_neg(x), _neg(y))
        # Mixed signs.
        if not xpos:
            return -self.n_constant(y, x)
        # x positive, y negative now.
        if rs.is_positive(s):
            mu = _neg(y)
            nu = s
            val = (
                -Fraction(rs.norm2(nu), rs.norm2(x))
                * self.n_constant(mu, nu)
            )
            assert val.denominator == 1, (x, y, val)
            return int(val)
        return self.n_constant(_neg(y), _neg(x))

    # -- brackets ---------------------------------------------------------

    def bracket_labels(self, la, lb) -> dict:
        """Bracket of two basis elements as a sparse label dict."""
        rs = self.rs
        ka, va = la
        kb, vb = lb
        if ka == "h" and kb == "h":
            return {}
        if ka == "h":
            c = rs.pairing(vb, rs.simple_root(va))
            return {lb: c} if c else {}
        if kb == "h":
            c = rs.pairing(va, rs.simple_root(vb))
            return {la: -c} if c else {}
        s = _vadd(va, vb)
        if not any(s):
            coords = rs.coroot_coordinates(va)
            return {("h", i): c for i, c in enumerate(coords) if c}
        if rs.is_root(s):
            return {("e", s): self.n_constant(va, vb)}
        return {}

    def bracket(self, u: dict, v: dict) -> dict:
        out = {}
        for la, ca in u.items():
            if not ca:
                continue
            for lb, cb in v.items():
                if not cb:
                    continue
                for lc, cc in self.bracket_labels(la, lb).items():
                    val = out.get(lc, 0) + ca * cb * cc
                    if val:
                        out[lc] = val
                    else:
                        out.pop(lc, None)
        return out


def chevalley(rs: RootSystem) -> ChevalleyAlgebra:
    return ChevalleyAlgebra(rs)


def coroot_element(alg: ChevalleyAlgebra, root) -> dict:
    """H_root as a combination of the h_i, with <root, H_root> = 2."""
    coords = alg.rs.coroot_coordinates(root)
    return {("h", i): c for i, c in enumerate(coords) if c}


def eigenvalue_on(alg: ChevalleyAlgebra, h: dict, beta) -> int:
    """<beta, h> for h a combination of simple coroots."""
    rs = alg.rs
    total = 0
    for (kind, i), c in h.items():
        assert kind == "h"
        total += c * rs.pairing(beta, rs.simple_root(i))
    return total


@dataclass(frozen=True)
class ChevalleyJacobiReport:
    lie_type: str
    rank: int
    dimension: int
    mode: str
    triples_checked: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_chevalley_jacobi(
    alg: ChevalleyAlgebra, sample: int | None = None, seed: int = 0
) -> ChevalleyJacobiReport:
    """Jacobi over basis triples; exhaustive when sample is None.

    Exhaustive mode runs over unordered triples: the jacobiator is an
    alternating function of its arguments for any antisymmetric bracket,
    so triples with a repeated label and permuted copies vanish or flip
    sign automatically.
    """
    labels = alg.labels
    d = len(labels)
    violations = []

    def jacobiator_is_zero(la, lb, lc):
        acc = {}
        for pair in ((la, lb, lc), (lb, lc, la), (lc, la, lb)):
            x, y, z = pair
            inner = alg.bracket_labels(y, z)
            for lw, cw in inner.items():
                for lv, cv in alg.bracket_labels(x, lw).items():
                    val = acc.get(lv, 0) + cw * cv
                    if val:
                        acc[lv] = val
                    else:
                        acc.pop(lv, None)
        return not acc

    checked = 0
    if sample is None:
        for i in range(d):
            for j in range(i + 1, d):
                for k in range(j + 1, d):
                    checked += 1
                    if not jacobiator_is_zero(labels[i], labels[j], labels[k]):
                        violations.append((labels[i], labels[j], labels[k]))
        mode = "exhaustive"
    else:
        sampler = SeededSampler(seed)
        for _ in range(sample):
            i = sampler.int_range(0, d - 1)
            j = sampler.int_range(0, d - 1)
            k = sampler.int_range(0, d - 1)
            checked += 1
            if not jacobiator_is_zero(labels[i], labels[j], labels[k]):
                violations.append((labels[i], labels[j], labels[k]))
        mode = "sampled"
    return ChevalleyJacobiReport(
        lie_type=alg.rs.lie_type,
        rank=alg.rs.rank,
        dimension=d,
        mode=mode,
        triples_checked=checked,
        violations=tuple(violations),
    )
