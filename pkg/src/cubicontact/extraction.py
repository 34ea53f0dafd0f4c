"""Gradings of a simple Lie algebra and extraction of its hidden cubic.

The coroot of the highest root psi induces the five-step grading with
ad-eigenvalues 0, +-1, +-2 and one-dimensional extremes.  Together with
the coroot of psi - alpha (alpha the unique simple root adjacent to psi)
it induces a double grading by integer pairs.  The distinguished pieces

    g(0,1), g(1,0), g(1,1), g(2,1) = g_psi, g(1,2) = g_{psi-alpha}

carry two bracket pairings

    g(0,1) (x) g(1,1) -> g(1,2),      g(1,0) (x) g(1,1) -> g(2,1),

which are perfect for the supported types.  They determine a linear map
phi : g(0,1) -> g(1,0) by matching the two induced identifications with
the dual of g(1,1), and the cubic form on V = g(0,1) is read off from

    [phi(X), [phi(X), X]] = c(X) e_psi.

``verify_embedding`` then checks, structure constant by structure
constant, that the span of the five pieces with its Chevalley bracket is
isomorphic as a graded Lie algebra to the abstract three-step algebra
built from the extracted cubic.  Types A and C are rejected with
diagnostics (A: no unique adjacent simple root; C: the distinguished
pieces have mismatched dimensions).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chevalley import (
    ChevalleyAlgebra,
    chevalley,
    coroot_element,
    eigenvalue_on,
)
from .cubic import SymCubic, b_rank, normalize_cubic, polarize
from .linalg import mat_inv, mat_mul, mat_rank, mat_solve
from .nilpotent import bracket_table, n_dim
from .rootsystems import (
    RootSystemError,
    build_root_system,
    find_alpha,
    _neg,
)
from .scalars import Q0, Q1


class ExtractionError(ValueError):
    pass


@lru_cache(maxsize=None)
def algebra_for(lie_type: str, rank: int) -> ChevalleyAlgebra:
    return chevalley(build_root_system(lie_type.upper(), rank))


def five_step_grading(alg: ChevalleyAlgebra):
    """Partition of the basis by the ad-eigenvalue of the psi coroot."""
    rs = alg.rs
    h_psi = coroot_element(alg, rs.highest_root)
    pieces = {e: [] for e in (-2, -1, 0, 1, 2)}
    for lab in alg.labels:
        kind, v = lab
        eig = 0 if kind == "h" else eigenvalue_on(alg, h_psi, v)
        if eig not in pieces:
            raise ExtractionError(f"eigenvalue {eig} outside -2..2 for {lab}")
        pieces[eig].append(lab)
    dims = tuple(len(pieces[e]) for e in (-2, -1, 0, 1, 2))
    if dims[0] != 1 or dims[4] != 1:
        raise ExtractionError(f"extreme grading pieces not lines: dims {dims}")
    return pieces, dims


@dataclass(frozen=True)
class DoubleGrading:
    """Simultaneous eigenspaces of the psi and (psi - alpha) coroots."""

    alpha_index: int
    alpha: tuple
    psi: tuple
    assignment: tuple  # (label, (a, b)) pairs, basis order
    pieces: dict  # (a, b) -> tuple of labels

    def piece(self, a, b):
        return self.pieces.get((a, b), ())

    def dim_p(self) -> int:
        return len(self.piece(1, 1))


def double_grading(alg: ChevalleyAlgebra) -> DoubleGrading:
    rs = alg.rs
    alpha_index, alpha = find_alpha(rs)
    psi = rs.highest_root
    psi_alpha = tuple(p - a for p, a in zip(psi, alpha))
    h1 = coroot_element(alg, psi)
    h2 = coroot_element(alg, psi_alpha)
    assignment = []
    pieces = {}
    for lab in alg.labels:
        kind, v = lab
        if kind == "h":
            ab = (0, 0)
        else:
            ab = (eigenvalue_on(alg, h1, v), eigenvalue_on(alg, h2, v))
        assignment.append((lab, ab))
        pieces.setdefault(ab, []).append(lab)
    return DoubleGrading(
        alpha_index=alpha_index,
        alpha=alpha,
        psi=psi,
        assignment=tuple(assignment),
        pieces={k: tuple(v) for k, v in pieces.items()},
    )


def _coefficient_of(vec: dict, label) -> Fraction:
    return Fraction(vec.get(label, 0))


def _pairing_matrix(alg, left_labels, mid_labels, target_label):
    """M[i][j] = coefficient of target in [left_i, mid_j]."""
    rows = []
    for la in left_labels:
        row = []
        for lb in mid_labels:
            br = alg.bracket_labels(la, lb)
            extra = [l for l in br if l != target_label and br[l]]
            if extra:
                raise ExtractionError(
                    f"bracket [{la}, {lb}] leaves the target line: {extra}"
                )
            row.append(_coefficient_of(br, target_label))
        rows.append(row)
    return rows


@dataclass(frozen=True)
class PairingReport:
    p: int
    rank_lower: int  # g(0,1) x g(1,1) -> g(1,2)
    rank_upper: int  # g(1,0) x g(1,1) -> g(2,1)

    @property
    def perfect(self) -> bool:
        return self.rank_lower == self.p == self.rank_upper


@dataclass(frozen=True)
class ExtractionData:
    lie_type: str
    rank: int
    p: int
    dg: DoubleGrading
    x_basis: tuple  # labels of g(0,1), the V side
    z_basis: tuple  # labels of g(1,0)
    y_basis: tuple  # labels of g(1,1)
    psi_label: tuple
    psi_alpha_label: tuple
    m_lower: tuple  # pairing matrix into g(1,2)
    m_upper: tuple  # pairing matrix into g(2,1)
    phi_mat: tuple  # phi(x_a) = sum_b phi_mat[a][b] z_b
    raw_tensor: SymCubic
    tensor: SymCubic  # normalized
    norm_scalar: Fraction


def _distinguished(alg: ChevalleyAlgebra, dg: DoubleGrading):
    x_basis = dg.piece(0, 1)
    z_basis = dg.piece(1, 0)
    y_basis = dg.piece(1, 1)
    top = dg.piece(2, 1)
    side = dg.piece(1, 2)
    p = len(y_basis)
    if p == 0 or not (len(x_basis) == len(z_basis) == p):
        raise ExtractionError(
            f"type {alg.rs.lie_type}{alg.rs.rank}: distinguished pieces have "
            f"dims {(len(x_basis), len(z_basis), p)}; the construction needs "
            "three equal positive dimensions"
        )
    if len(top) != 1 or len(side) != 1:
        raise ExtractionError("corner pieces are not lines")
    return x_basis, z_basis, y_basis, top[0], side[0]


_EXTRACTION_CACHE: dict = {}


def extraction(alg: ChevalleyAlgebra) -> ExtractionData:
    """Pairings, phi and the cubic, computed once per algebra."""
    key = (alg.rs.lie_type, alg.rs.rank)
    hit = _EXTRACTION_CACHE.get(key)
    if hit is not None:
        return hit
    dg = double_grading(alg)
    x_basis, z_basis, y_basis, psi_label, psi_alpha_label = _distinguished(
        alg, dg
    )
    p = len(y_basis)
    m_lower = _pairing_matrix(alg, x_basis, y_basis, psi_alpha_label)
    m_upper = _pairing_matrix(alg, z_basis, y_basis, psi_label)
    if mat_rank(m_lower) != p or mat_rank(m_upper) != p:
        raise ExtractionError(
            f"pairings are not perfect: ranks "
            f"{mat_rank(m_lower)}, {mat_rank(m_upper)} != {p}"
        )
    # phi(x_a) = sum_b phi[a][b] z_b with phi . m_upper = m_lower.
    m_upper_inv = mat_inv(m_upper)
    phi_mat = mat_mul(m_lower, m_upper_inv)

    # Trilinear map F(a,b,c) = e_psi coefficient of [phi(x_a), [phi(x_b), x_c]].
    phi_vecs = [
        {z_basis[b]: phi_mat[a][b] for b in range(p) if phi_mat[a][b]}
        for a in range(p)
    ]
    y_index = {lab: i for i, lab in enumerate(y_basis)}
    inner = [[None] * p for _ in range(p)]
    for b in range(p):
        for c in range(p):
            br = alg.bracket(phi_vecs[b], {x_basis[c]: Q1})
            vec = [Q0] * p
            for lab, coeff in br.items():
                if lab not in y_index:
                    raise ExtractionError(
                        f"[phi(x_{b}), x_{c}] leaves g(1,1): {lab}"
                    )
                vec[y_index[lab]] = Fraction(coeff)
            inner[b][c] = vec
    # Contract against the upper pairing: F(a,b,c) = phi_a . m_upper . inner_bc
    contracted = [[None] * p for _ in range(p)]
    for b in range(p):
        for c in range(p):
            vec = inner[b][c]
            contracted[b][c] = [
                sum((m_upper[d][e] * vec[e] for e in range(p)), Q0)
                for d in range(p)
            ]

    def f_val(a, b, c):
        row = contracted[b][c]
        return sum((phi_mat[a][d] * row[d] for d in range(p)), Q0)

    entries = {}
    sixth = Fraction(1, 6)
    for a in range(p):
        for b in range(a, p):
            for c in range(b, p):
                total = (
                    f_val(a, b, c)
                    + f_val(a, c, b)
                    + f_val(b, a, c)
                    + f_val(b, c, a)
                    + f_val(c, a, b)
                    + f_val(c, b, a)
                )
                if total:
                    entries[(a, b, c)] = total * sixth
    raw = SymCubic(p, entries)
    normalized, scalar = normalize_cubic(raw)
    data = ExtractionData(
        lie_type=alg.rs.lie_type,
        rank=alg.rs.rank,
        p=p,
        dg=dg,
        x_basis=tuple(x_basis),
        z_basis=tuple(z_basis),
        y_basis=tuple(y_basis),
        psi_label=psi_label,
        psi_alpha_label=psi_alpha_label,
        m_lower=tuple(tuple(r) for r in m_lower),
        m_upper=tuple(tuple(r) for r in m_upper),
        phi_mat=tuple(tuple(r) for r in phi_mat),
        raw_tensor=raw,
        tensor=normalized,
        norm_scalar=scalar,
    )
    _EXTRACTION_CACHE[key] = data
    return data


def verify_pairings(alg: ChevalleyAlgebra, dg: DoubleGrading | None = None) -> PairingReport:
    if dg is None:
        dg = double_grading(alg)
    x_basis, z_basis, y_basis, psi_label, psi_alpha_label = _distinguished(
        alg, dg
    )
    p = len(y_basis)
    m_lower = _pairing_matrix(alg, x_basis, y_basis, psi_alpha_label)
    m_upper = _pairing_matrix(alg, z_basis, y_basis, psi_label)
    return PairingReport(
        p=p, rank_lower=mat_rank(m_lower), rank_upper=mat_rank(m_upper)
    )


def extract_cubic(alg: ChevalleyAlgebra, normalized: bool = True) -> SymCubic:
    data = extraction(alg)
    return data.tensor if normalized else data.raw_tensor


def gradings_report(alg: ChevalleyAlgebra) -> dict:
    """CLI-facing summary of the gradings and the extraction."""
    _pieces, dims = five_step_grading(alg)
    data = extraction(alg)
    piece_dims = {
        f"{a},{b}": len(labs) for (a, b), labs in sorted(data.dg.pieces.items())
    }
    return {
        "type": f"{alg.rs.lie_type}{alg.rs.rank}",
        "dim_g": alg.dimension,
        "five_step_dims": list(dims),
        "double_grading_dims": piece_dims,
        "p": data.p,
        "b_rank": b_rank(data.tensor),
        "normalization_scalar": str(data.norm_scalar),
    }


@dataclass(frozen=True)
class EmbeddingReport:
    lie_type: str
    rank: int
    p: int
    dim_n: int
    pairs_checked: int
    ok: bool
    first_mismatch: tuple | None
    norm_scalar: Fraction

    def to_json(self) -> dict:
        return {
            "type": f"{self.lie_type}{self.rank}",
            "p": self.p,
            "dim_n": self.dim_n,
            "pairs_checked": self.pairs_checked,
            "ok": self.ok,
            "first_mismatch": (
                None if self.first_mismatch is None else str(self.first_mismatch)
            ),
            "normalization_scalar": str(self.norm_scalar),
        }


def verify_embedding(alg: ChevalleyAlgebra) -> EmbeddingReport:
    """Structure-constant comparison of the graded span with abstract n.

    Builds the explicit basis identification (V from g(0,1), the (x) f2
    block through phi, the dual block from the bracket data, the W line
    pair from consistency constants) and checks every bracket of basis
    elements of n(raw cubic) against the Chevalley bracket of the images.
    """
    data = extraction(alg)
    p = data.p
    T = data.raw_tensor
    x_basis, z_basis, y_basis = data.x_basis, data.z_basis, data.y_basis
    phi_mat = data.phi_mat

    # Images of e_i (x) f1 and e_i (x) f2.
    theta_cols = []
    for i in range(p):
        theta_cols.append({x_basis[i]: Q1})
    for i in range(p):
        theta_cols.append(
            {z_basis[b]: phi_mat[i][b] for b in range(p) if phi_mat[i][b]}
        )

    # Dual block: J with J(B(e_i, e_j)) = [x_i, phi(x_j)] for all pairs.
    y_index = {lab: k for k, lab in enumerate(y_basis)}
    b_cols = []
    k_cols = []
    for i in range(p):
        for j in range(p):
            b_cols.append(list(polarize(T, _unit(p, i), _unit(p, j))))
            br = alg.bracket(theta_cols[i], theta_cols[p + j])
            vec = [Q0] * p
            for lab, coeff in br.items():
                if lab not in y_index:
                    return _embedding_fail(data, 0, ("bracket leaves g(1,1)", lab))
                vec[y_index[lab]] = Fraction(coeff)
            k_cols.append(vec)
    # Select p independent columns of the B matrix.
    sel = _independent_columns(b_cols, p)
    if sel is None:
        raise ExtractionError("extracted cubic violates the surjectivity assumption")
    b_sel = [[b_cols[c][r] for c in sel] for r in range(p)]
    k_sel = [[k_cols[c][r] for c in sel] for r in range(p)]
    j_mat = mat_mul(k_sel, mat_inv(b_sel))  # maps dual coordinates to y coords
    for idx in range(len(b_cols)):
        got = _mat_vec_cols(j_mat, b_cols[idx])
        if got != k_cols[idx]:
            return _embedding_fail(
                data, 0, ("dual identification inconsistent", idx)
            )
    for k in range(p):
        theta_cols.append(
            {y_basis[m]: j_mat[m][k] for m in range(p) if j_mat[m][k]}
        )

    # W line images: kappa1 e_{psi-alpha} and kappa2 e_psi by consistency.
    kappa1 = kappa2 = None
    for k in range(p):
        for j in range(p):
            br1 = alg.bracket(theta_cols[2 * p + k], theta_cols[j])
            br2 = alg.bracket(theta_cols[2 * p + k], theta_cols[p + j])
            c1 = Fraction(br1.pop(data.psi_alpha_label, 0))
            c2 = Fraction(br2.pop(data.psi_label, 0))
            if any(br1.values()) or any(br2.values()):
                return _embedding_fail(data, 0, ("dual brackets leave W", k, j))
            if k == j:
                if kappa1 is None:
                    kappa1, kappa2 = c1, c2
                elif (c1, c2) != (kappa1, kappa2):
                    return _embedding_fail(
                        data, 0, ("inconsistent W normalization", k)
                    )
            elif c1 or c2:
                return _embedding_fail(
                    data, 0, ("dual pairing not diagonal", k, j)
                )
    if not kappa1 or not kappa2:
        return _embedding_fail(data, 0, ("degenerate W normalization",))
    theta_cols.append({data.psi_alpha_label: kappa1})
    theta_cols.append({data.psi_label: kappa2})

    # Full structure-constant comparison.
    table = bracket_table(T)
    d = n_dim(p)
    pairs = 0
    for a in range(d):
        for b in range(d):
            pairs += 1
            expected = {}
            for idx, coeff in table[a][b]:
                for lab, c2 in theta_cols[idx].items():
                    val = expected.get(lab, Q0) + coeff * c2
                    if val:
                        expected[lab] = val
                    else:
                        expected.pop(lab, None)
            got = alg.bracket(theta_cols[a], theta_cols[b])
            got = {lab: Fraction(c) for lab, c in got.items() if c}
            if got != expected:
                return _embedding_fail(data, pairs, (a, b, got, expected))
    return EmbeddingReport(
        lie_type=data.lie_type,
        rank=data.rank,
        p=p,
        dim_n=d,
        pairs_checked=pairs,
        ok=True,
        first_mismatch=None,
        norm_scalar=data.norm_scalar,
    )


def _embedding_fail(data: ExtractionData, pairs, info) -> EmbeddingReport:
    return EmbeddingReport(
        lie_type=data.lie_type,
        rank=data.rank,
        p=data.p,
        dim_n=n_dim(data.p),
        pairs_checked=pairs,
        ok=False,
        first_mismatch=info,
        norm_scalar=data.norm_scalar,
    )


def _unit(p, i):
    return tuple(Q1 if t == i else Q0 for t in range(p))


def _independent_columns(cols, p):
    chosen = []
    rows = []
    for idx, col in enumerate(cols):
        trial = rows + [list(col)]
        if mat_rank(trial) == len(trial):
            rows = trial
            chosen.append(idx)
            if len(chosen) == p:
                return chosen
    return None


def _mat_vec_cols(m, v):
    p = len(v)
    return [sum((m[r][c] * v[c] for c in range(p)), Q0) for r in range(p)]


def ternary_dimension_check(alg: ChevalleyAlgebra) -> dict:
    """Dimension bookkeeping of the hexagonal double-grading layout."""
    data = extraction(alg)
    dim_g = alg.dimension
    p = data.p
    dim_h = dim_g - 8 - 6 * p
    piece_dims = {
        f"{a},{b}": len(labs) for (a, b), labs in sorted(data.dg.pieces.items())
    }
    return {
        "type": f"{alg.rs.lie_type}{alg.rs.rank}",
        "dim_g": dim_g,
        "p": p,
        "dim_h": dim_h,
        "pieces": piece_dims,
    }
