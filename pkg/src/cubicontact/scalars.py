"""Exact scalar rings.

Everything in this package runs on ``fractions.Fraction``; no floating
point value is ever produced.  Two small commutative ring extensions are
needed by the chart computations:

* ``QPoly``  - dense univariate polynomials over Q, used to solve for
  group elements whose coordinates are exact polynomials in a line
  parameter.
* ``Jet``    - first order jets a + b*eps with eps^2 = 0, used to take
  exact derivatives of group flows at t = 0.

Both interoperate with ``Fraction`` and ``int`` through the reflected
arithmetic hooks, so the algebra layer can stay scalar-agnostic.

``MPoly`` is a minimal multivariate polynomial (dict of exponent tuples)
used for the symbolic exterior derivative of the chart one-form.
"""

from __future__ import annotations

from fractions import Fraction

Q0 = Fraction(0)
Q1 = Fraction(1)
HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)
QUARTER = Fraction(1, 4)
SIXTH = Fraction(1, 6)
TWELFTH = Fraction(1, 12)


def frac(x) -> Fraction:
    """Coerce ints, 'num/den' strings and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def _as_fraction(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return None


class QPoly:
    """Univariate polynomial over Q with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c) -> "QPoly":
        return QPoly((frac(c),))

    @staticmethod
    def x() -> "QPoly":
        return QPoly((Q0, Q1))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Q0

    def __call__(self, value):
        acc = Q0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other):
        if isinstance(other, QPoly):
            n = max(len(self.coeffs), len(other.coeffs))
            return QPoly(
                (self.coefficient(i) + other.coefficient(i) for i in range(n))
            )
        f = _as_fraction(other)
        if f is None:
            return NotImplemented
        return self + QPoly((f,))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = other if isinstance(other, QPoly) else None
        if o is None:
            f = _as_fraction(other)
            if f is None:
                return NotImplemented
            o = QPoly((f,))
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QPoly):
            if not self.coeffs or not other.coeffs:
                return QPoly()
            out = [Q0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
            return QPoly(out)
        f = _as_fraction(other)
        if f is None:
            return NotImplemented
        return QPoly(tuple(c * f for c in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        f = _as_fraction(other)
        if f is None:
            return NotImplemented
        return self * (Q1 / f)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        f = _as_fraction(other)
        if f is None:
            return NotImplemented
        return self.coeffs == (() if f == 0 else (f,))

    def __hash__(self):
        return hash(("QPoly", self.coeffs))

    def __repr__(self):
        return f"QPoly({list(self.coeffs)!r})"


class Jet:
    """First order jet a + b*eps, eps^2 = 0."""

    __slots__ = ("val", "eps")

    def __init__(self, val=0, eps=0):
        self.val = frac(val)
        self.eps = frac(eps)

    @staticmethod
    def variable() -> "Jet":
        return Jet(0, 1)

    def __bool__(self):
        return bool(self.val) or bool(self.eps)

    def _coerce(self, other):
        if isinstance(other, Jet):
            return other
        f = _as_fraction(other)
        if f is None:
            return None
        return Jet(f, 0)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Jet(self.val + o.val, self.eps + o.eps)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.val, -self.eps)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Jet(self.val - o.val, self.eps - o.eps)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Jet(self.val * o.val, self.val * o.eps + self.eps * o.val)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.val == 0:
            raise ZeroDivisionError("jet with zero value part")
        v = self.val / o.val
        return Jet(v, (self.eps - v * o.eps) / o.val)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.val == o.val and self.eps == o.eps

    def __hash__(self):
        return hash(("Jet", self.val, self.eps))

    def __repr__(self):
        return f"Jet({self.val!r}, {self.eps!r})"


class MPoly:
    """Sparse multivariate polynomial over Q.

    Terms map exponent tuples to coefficients.  Only the operations the
    exterior-derivative computation needs are provided.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = frac(c)
                if c:
                    self.terms[tuple(mono)] = c

    @staticmethod
    def const(c, nvars: int) -> "MPoly":
        return MPoly(nvars, {(0,) * nvars: frac(c)})

    @staticmethod
    def var(i: int, nvars: int) -> "MPoly":
        mono = [0] * nvars
        mono[i] = 1
        return MPoly(nvars, {tuple(mono): Q1})

    @staticmethod
    def zero(nvars: int) -> "MPoly":
        return MPoly(nvars)

    def __add__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, Q0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return MPoly(self.nvars, out)

    def __neg__(self):
        return MPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MPoly):
            out = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = tuple(a + b for a, b in zip(m1, m2))
                    s = out.get(m, Q0) + c1 * c2
                    if s:
                        out[m] = s
                    else:
                        out.pop(m, None)
            return MPoly(self.nvars, out)
        f = _as_fraction(other)
        if f is None:
            return NotImplemented
        return MPoly(self.nvars, {m: c * f for m, c in self.terms.items()})

    __rmul__ = __mul__

    def diff(self, i: int) -> "MPoly":
        out = {}
        for mono, c in self.terms.items():
            e = mono[i]
            if e == 0:
                continue
            m = list(mono)
            m[i] = e - 1
            out[tuple(m)] = c * e
        return MPoly(self.nvars, out)

    def eval(self, point) -> Fraction:
        total = Q0
        for mono, c in self.terms.items():
            term = c
            for i, e in enumerate(mono):
                for _ in range(e):
                    term = term * point[i]
            total += term
        return total

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self):
        return f"MPoly({self.nvars}, {self.terms!r})"
