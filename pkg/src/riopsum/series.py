"""Dense polynomials and truncated formal power series over a scalar domain.

One algorithm body serves two scalar domains: exact Cyclo values and float
complex values.  Scalars only need ring operators plus equality with 0,
so the functions here stay duck-typed.
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import Cyclo, to_complex


class ExpansionError(ValueError):
    """Raised when a rational function has no power-series expansion at 0."""


class TruncationExceededError(IndexError):
    """Raised when a coefficient beyond the computed truncation is requested."""


def is_zero_scalar(x) -> bool:
    if isinstance(x, Cyclo):
        return x.is_zero()
    return x == 0


def scalar_eq(x, y, tolerance: float | None = None) -> bool:
    """Exact equality, or |x-y| <= tolerance when a tolerance is given."""
    if tolerance is None:
        return x == y
    return abs(to_complex(x) - to_complex(y)) <= tolerance


class Poly:
    """Dense polynomial, lowest degree first, no trailing zeros.

    >>> Poly([1, 0, 2]).degree
    2
    >>> Poly([0, 0]).is_zero()
    True
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and is_zero_scalar(coeffs[-1]):
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, n: int):
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return 0

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return poly_mul(self, other)
        return Poly([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def shift(self, k: int) -> "Poly":
        """Multiply by t**k."""
        if self.is_zero():
            return self
        zero = self.coeffs[0] * 0
        return Poly([zero] * k + list(self.coeffs))


def poly_mul(p: Poly, q: Poly) -> Poly:
    """Schoolbook convolution; exact in the exact domain."""
    if p.is_zero() or q.is_zero():
        return Poly()
    zero = p.coeffs[0] * 0
    out = [zero] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if is_zero_scalar(a):
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] = out[i + j] + a * b
    return Poly(out)


def poly_pow(p: Poly, k: int) -> Poly:
    """p**k by repeated squaring; p**0 = 1."""
    if k < 0:
        raise ValueError("polynomial powers must be nonnegative")
    if k == 0:
        one = p.coeffs[0] ** 0 if not p.is_zero() else 1
        return Poly([one])
    result = None
    base = p
    while k:
        if k & 1:
            result = base if result is None else poly_mul(result, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return result


def poly_eval(p: Poly, x):
    """Horner evaluation at a scalar."""
    if p.is_zero():
        return x * 0
    acc = p.coeffs[-1]
    for c in reversed(p.coeffs[:-1]):
        acc = acc * x + c
    return acc


class Fps:
    """A formal power series truncated to exactly ``truncation`` coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)

    @property
    def truncation(self) -> int:
        return len(self.coeffs)

    def __repr__(self):
        return f"Fps({list(self.coeffs)!r})"

    def __eq__(self, other):
        if not isinstance(other, Fps):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None


def coeff_of(f: Fps, n: int):
    """The n-th coefficient; re-expand with more terms before asking past the end."""
    if n < 0:
        raise IndexError("coefficient index must be nonnegative")
    if n >= f.truncation:
        raise TruncationExceededError(
            f"coefficient {n} requested but series holds only {f.truncation} terms"
        )
    return f.coeffs[n]


def fps_expand_rational(numer: Poly, denom: Poly, n_terms: int) -> Fps:
    """First n_terms coefficients of numer/denom by long division.

    >>> fps_expand_rational(Poly([1]), Poly([1, -1]), 5).coeffs
    (1, 1, 1, 1, 1)
    """
    if n_terms < 1:
        raise ValueError("n_terms must be positive")
    if denom.is_zero() or is_zero_scalar(denom[0]):
        raise ExpansionError("denominator must have a nonzero constant term")
    d0 = denom.coeffs[0]
    inv_d0 = 1 / d0 if not isinstance(d0, Cyclo) else d0.inverse()
    zero = d0 * 0
    out = []
    deg = denom.degree
    for n in range(n_terms):
        acc = numer[n] + zero
        reach = min(deg, n)
        for j in range(1, reach + 1):
            acc = acc - denom.coeffs[j] * out[n - j]
        out.append(acc * inv_d0)
    return Fps(out)
