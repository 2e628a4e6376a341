"""Exact scalar arithmetic: rationals and dense univariate polynomials.

Every coefficient in this package lives in one of two rings: plain
``fractions.Fraction`` or :class:`Poly`, dense univariate polynomials with
rational coefficients.  ``Poly`` is used whenever a parameter has to stay
formal (degree-in-z bookkeeping, specialization checks); it interoperates
with ints and Fractions through the normal operator protocol, so generic
operator code never needs to know which ring it runs over.

No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

Scalar = Union[int, Fraction, "Poly"]


def is_zero(a: Scalar) -> bool:
    return a == 0


class Poly:
    """Dense univariate polynomial over the rationals.

    Coefficients are stored lowest degree first with trailing zeros
    stripped; the zero polynomial has an empty coefficient tuple.
    Immutable and hashable, so values can key caches.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Union[int, Fraction]] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("Poly is immutable")

    @classmethod
    def gen(cls) -> "Poly":
        """The indeterminate itself."""
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        """Division by a nonzero constant, or exact polynomial division."""
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of Poly by zero")
            inv = Fraction(1, 1) / Fraction(other)
            return Poly(tuple(c * inv for c in self.coeffs))
        if isinstance(other, Poly):
            q, r = _divmod_poly(self, other)
            if r:
                raise ValueError("inexact polynomial division")
            return q
        return NotImplemented

    def __call__(self, value):
        out = Fraction(0) if isinstance(value, (int, Fraction)) else 0
        for c in reversed(self.coeffs):
            out = out * value + c
        return out

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*z" if c != 1 else "z")
            else:
                parts.append(f"{c}*z^{i}" if c != 1 else f"z^{i}")
        return " + ".join(parts)


def _coerce(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly((value,))
    return None


def _divmod_poly(num: Poly, den: Poly):
    if not den:
        raise ZeroDivisionError("division of Poly by zero polynomial")
    r = list(num.coeffs)
    d = den.coeffs
    dd = len(d) - 1
    lead = d[-1]
    if len(r) <= dd:
        return Poly(), Poly(r)
    q = [Fraction(0)] * (len(r) - dd)
    for i in range(len(r) - 1, dd - 1, -1):
        c = r[i] / lead
        if c:
            q[i - dd] = c
            for j in range(dd + 1):
                r[i - dd + j] -= c * d[j]
    return Poly(q), Poly(r)


def divexact(a: Scalar, b: Scalar) -> Scalar:
    """Exact division in the scalar ring; raises if the quotient leaves it."""
    if isinstance(a, Poly) or isinstance(b, Poly):
        pa = a if isinstance(a, Poly) else Poly((a,))
        return pa / (b if isinstance(b, Poly) else Fraction(b))
    return Fraction(a) / Fraction(b)


# -- truncated power series over an arbitrary scalar ring -------------------
#
# A series is a plain list of scalars [c0, c1, ..., cN] meaning
# sum(ci * u**i).  These run over whatever ring the entries live in.

def series_trim(a: list, order: int) -> list:
    out = list(a[: order + 1])
    out += [Fraction(0)] * (order + 1 - len(out))
    return out


def series_mul(a: Sequence[Scalar], b: Sequence[Scalar], order: int) -> list:
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if is_zero(ai):
            continue
        for j, bj in enumerate(b[: order - i + 1]):
            if not is_zero(bj):
                out[i + j] = out[i + j] + ai * bj
    return out


def series_exp(a: Sequence[Scalar], order: int) -> list:
    """exp of a series with zero constant term, to the given order."""
    a = series_trim(list(a), order)
    if not is_zero(a[0]):
        raise ValueError("series_exp needs zero constant term")
    out = [Fraction(0)] * (order + 1)
    out[0] = Fraction(1)
    for n in range(1, order + 1):
        acc = Fraction(0)
        for j in range(1, n + 1):
            if not is_zero(a[j]):
                acc = acc + j * a[j] * out[n - j]
        out[n] = acc * Fraction(1, n)
    return out


# -- parsing / formatting ----------------------------------------------------

def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "n"; whitespace tolerated."""
    return Fraction(text.strip())


def rational_str(q: Union[int, Fraction]) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


def scalar_to_json(a: Scalar):
    """Rationals as "p/q" strings, polynomials as {"poly": [...]}."""
    if isinstance(a, Poly):
        return {"poly": [rational_str(c) for c in a.coeffs]}
    return rational_str(a)


def random_rational(rng, nonzero: bool = False, span: int = 9) -> Fraction:
    """Small random rational from a seeded rng; deterministic given the seed."""
    while True:
        q = Fraction(rng.randint(-span, span), rng.randint(1, span))
        if q != 0 or not nonzero:
            return q
