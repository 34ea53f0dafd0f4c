"""Cubic forms as symmetric trilinear tensors, with exact arithmetic.

A cubic form on Q^p is stored as the fully symmetric trilinear tensor T
with entries indexed by 0-based triples i <= j <= k.  The value of the
cubic at v is the full sum over all index orderings,

    c(v) = sum_{i,j,k} T(e_i, e_j, e_k) v_i v_j v_k,

so no 1/6 normalization ever appears and the polarization identity
B(v, v)(v) = c(v) holds on the nose.  The polarization

    B(v1, v2) = c(v1, v2, .)

is the covector with k-th coordinate sum_{i,j} T_sym(i,j,k) v1_i v2_j.

The surjectivity condition on B (rank of the span of all B(e_i, e_j)
equal to p) is what makes the downstream geometry work; it is exposed
here as ``b_rank``.

The JSON interchange format (1-based indices, values as 'num/den'
strings) is the file format used by every command of the package.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction

from .linalg import mat_rank
from .scalars import Q0, frac


class DimensionMismatchError(ValueError):
    pass


class TensorFormatError(ValueError):
    pass


class ReductionError(ValueError):
    """A tensor entry has a denominator divisible by the modulus."""

    def __init__(self, triple, value, modulus):
        self.triple = triple
        self.value = value
        self.modulus = modulus
        super().__init__(
            f"entry {triple} = {value} has denominator divisible by {modulus}"
        )


def _canonical_triple(i, j, k):
    return tuple(sorted((i, j, k)))


def _distinct_perms(tri):
    i, j, k = tri
    if i == j == k:
        return ((i, j, k),)
    if i == j:
        return ((i, i, k), (i, k, i), (k, i, i))
    if j == k:
        return ((i, j, j), (j, i, j), (j, j, i))
    return (
        (i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i),
    )


def perm_multiplicity(tri) -> int:
    """Number of distinct orderings of a sorted index triple."""
    return len(_distinct_perms(tri))


class SymCubic:
    """Symmetric trilinear tensor on Q^p (sparse, canonical i<=j<=k keys)."""

    __slots__ = ("dim", "entries", "_expanded", "_b_rank")

    def __init__(self, dim: int, entries):
        if dim < 1:
            raise TensorFormatError("dimension must be a positive integer")
        self.dim = dim
        canon = {}
        for tri, val in entries.items():
            i, j, k = tri
            if not (0 <= i <= j <= k < dim):
                raise TensorFormatError(
                    f"triple {tri} not in canonical 0-based range for dim {dim}"
                )
            v = frac(val)
            if v:
                canon[(i, j, k)] = v
        self.entries = canon
        self._expanded = None
        self._b_rank = None

    def value(self, i, j, k) -> Fraction:
        return self.entries.get(_canonical_triple(i, j, k), Q0)

    def expanded(self):
        """All distinct ordered permutations as (i, j, k, value) tuples."""
        if self._expanded is None:
            out = []
            for tri, val in sorted(self.entries.items()):
                for perm in _distinct_perms(tri):
                    out.append((perm[0], perm[1], perm[2], val))
            self._expanded = tuple(out)
        return self._expanded

    def items_canonical(self):
        return sorted(self.entries.items())

    def scale(self, s) -> "SymCubic":
        s = frac(s)
        return SymCubic(self.dim, {t: v * s for t, v in self.entries.items()})

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, SymCubic):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __hash__(self):
        return hash((self.dim, tuple(self.items_canonical())))

    def __repr__(self):
        return f"SymCubic(dim={self.dim}, nnz={len(self.entries)})"


def _check_vec(T: SymCubic, v, name="vector"):
    if len(v) != T.dim:
        raise DimensionMismatchError(
            f"{name} has length {len(v)}, tensor dimension is {T.dim}"
        )


def cubic_eval(T: SymCubic, v) -> Fraction:
    """c(v), the full symmetric sum over all index orderings."""
    _check_vec(T, v)
    total = Q0
    for tri, val in T.entries.items():
        i, j, k = tri
        prod = v[i] * v[j] * v[k]
        if prod:
            total = total + perm_multiplicity(tri) * val * prod
    return total


def polarize(T: SymCubic, v1, v2):
    """B(v1, v2) = c(v1, v2, .), as a covector coordinate tuple."""
    _check_vec(T, v1, "v1")
    _check_vec(T, v2, "v2")
    out = [Q0] * T.dim
    for i, j, k, val in T.expanded():
        a = v1[i]
        if not a:
            continue
        b = v2[j]
        if not b:
            continue
        out[k] = out[k] + val * a * b
    return tuple(out)


def trilinear(T: SymCubic, v1, v2, v3) -> Fraction:
    """Full symmetric trilinear value c(v1, v2, v3)."""
    cov = polarize(T, v1, v2)
    total = Q0
    for c, x in zip(cov, v3):
        if c and x:
            total = total + c * x
    return total


def basis_vector(p: int, i: int):
    return tuple(Fraction(1) if t == i else Q0 for t in range(p))


def b_rank(T: SymCubic) -> int:
    """Rank over Q of span{ B(e_i, e_j) : i <= j } inside the dual space."""
    p = T.dim
    rows = []
    for i in range(p):
        for j in range(i, p):
            rows.append([T.value(i, j, k) for k in range(p)])
    return mat_rank(rows)


def assumption_holds(T: SymCubic) -> bool:
    """True when the polarization map is surjective (b_rank == p)."""
    if T._b_rank is None:
        T._b_rank = b_rank(T)
    return T._b_rank == T.dim


@dataclass(frozen=True)
class FFTensor:
    """SymCubic reduced mod a prime; entries are ints in [0, q)."""

    modulus: int
    dim: int
    entries: tuple  # sorted ((i, j, k), int) pairs


def reduce_mod(T: SymCubic, q: int) -> FFTensor:
    if q < 2:
        raise ValueError("modulus must be a prime >= 2")
    out = []
    for tri, val in T.items_canonical():
        den = val.denominator
        if den % q == 0:
            raise ReductionError(tri, val, q)
        r = (val.numerator % q) * pow(den % q, q - 2, q) % q
        if r:
            out.append((tri, r))
    return FFTensor(modulus=q, dim=T.dim, entries=tuple(out))


def from_cubic_monomials(dim: int, monomials, scale=1) -> SymCubic:
    """Tensor for a cubic polynomial given by monomial coefficients.

    ``monomials`` maps sorted 0-based index triples (i <= j <= k) to the
    coefficient of x_i x_j x_k in the polynomial P.  The resulting tensor
    satisfies cubic_eval(T, v) = scale * P(v).
    """
    entries = {}
    for tri, coeff in monomials.items():
        tri = tuple(sorted(tri))
        c = frac(coeff) * frac(scale) / perm_multiplicity(tri)
        if c:
            entries[tri] = entries.get(tri, Q0) + c
    return SymCubic(dim, entries)


def normalize_cubic(T: SymCubic):
    """Scale so the lexicographically first nonzero entry is 1.

    Returns (normalized tensor, scalar) with normalized = T / scalar.
    The zero tensor is returned unchanged with scalar 1.
    """
    items = T.items_canonical()
    if not items:
        return T, Fraction(1)
    lead = items[0][1]
    return T.scale(Fraction(1) / lead), lead


# --- JSON interchange -------------------------------------------------

def dumps_tensor(T: SymCubic) -> str:
    """Canonical JSON text (1-based indices, 'num/den' value strings)."""
    recs = []
    for (i, j, k), val in T.items_canonical():
        recs.append(
            {"i": i + 1, "j": j + 1, "k": k + 1, "value": str(val)}
        )
    return json.dumps(
        {"dim": T.dim, "entries": recs}, sort_keys=True, separators=(",", ":")
    )


def loads_tensor(text: str) -> SymCubic:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TensorFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "dim" not in obj or "entries" not in obj:
        raise TensorFormatError("tensor JSON needs 'dim' and 'entries'")
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise TensorFormatError("'dim' must be a positive integer")
    entries = {}
    if not isinstance(obj["entries"], list):
        raise TensorFormatError("'entries' must be a list")
    for rec in obj["entries"]:
        try:
            i, j, k = rec["i"] - 1, rec["j"] - 1, rec["k"] - 1
            val = frac(rec["value"]) if isinstance(rec["value"], str) else frac(rec["value"])
        except (KeyError, TypeError, ValueError) as exc:
            raise TensorFormatError(f"bad entry record {rec!r}") from exc
        if not (0 <= i <= j <= k < dim):
            raise TensorFormatError(
                f"entry indices {rec!r} not 1-based canonical for dim {dim}"
            )
        if (i, j, k) in entries:
            raise TensorFormatError(f"duplicate entry for triple {rec!r}")
        entries[(i, j, k)] = val
    return SymCubic(dim, entries)


def load_tensor(path) -> SymCubic:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_tensor(fh.read())


def save_tensor(T: SymCubic, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_tensor(T) + "\n")


def cubic_hash(T: SymCubic) -> str:
    """Content hash of the canonical JSON form."""
    return hashlib.sha256(dumps_tensor(T).encode("ascii")).hexdigest()
