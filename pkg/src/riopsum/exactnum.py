"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A field element is stored in canonical form: the coefficient vector of the
power basis 1, zeta, ..., zeta^(phi(N)-1), obtained by reducing modulo the
N-th cyclotomic polynomial.  Coefficients are arbitrary-precision rationals,
kept internally as an integer numerator vector over one common positive
denominator.  Rationals embed with order 1; mixed-order operands are embedded
into Q(zeta_lcm) automatically.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from functools import lru_cache

Rat = Fraction

DEFAULT_MAX_ORDER = 1024
_max_order = DEFAULT_MAX_ORDER


class InvalidOrderError(ValueError):
    """Raised for a non-positive or over-cap root order."""


class EmbeddingError(ValueError):
    """Raised when embedding into a field whose order is not a multiple."""


class LiteralError(ValueError):
    """Raised on malformed coefficient literals; carries the offending position."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def set_max_order(n: int) -> None:
    """Override the guard against accidentally huge cyclotomic orders."""
    global _max_order
    if n < 1:
        raise InvalidOrderError(f"max order must be positive, got {n}")
    _max_order = n


def get_max_order() -> int:
    return _max_order


def _check_order(order: int) -> None:
    if not isinstance(order, int) or order < 1:
        raise InvalidOrderError(f"root order must be a positive integer, got {order!r}")
    if order > _max_order:
        raise InvalidOrderError(f"root order {order} exceeds cap {_max_order}")


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, constant term first.

    >>> cyclotomic_poly(1)
    (-1, 1)
    >>> cyclotomic_poly(6)
    (1, -1, 1)
    """
    if n < 1:
        raise InvalidOrderError(f"cyclotomic index must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in divisors(n)[:-1]:
        poly = _int_poly_div_exact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


def _int_poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials; den is monic up to sign here.
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(num) - 1, len(den) - 2, -1):
        c = num[i]
        if c % lead:
            raise ArithmeticError("non-exact integer polynomial division")
        q = c // lead
        out[i - len(den) + 1] = q
        if q:
            for j, dc in enumerate(den):
                num[i - len(den) + 1 + j] -= q * dc
    if any(num[: len(den) - 1]):
        raise ArithmeticError("non-exact integer polynomial division")
    return out


def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


def _reduce_int_vector(order: int, nums: list[int]) -> list[int]:
    # Fold exponents mod order (zeta^order = 1), then reduce mod Phi_order.
    folded = [0] * order
    for j, c in enumerate(nums):
        if c:
            folded[j % order] += c
    phi = cyclotomic_poly(order)
    deg = len(phi) - 1
    for i in range(order - 1, deg - 1, -1):
        c = folded[i]
        if c:
            folded[i] = 0
            for j in range(deg):
                folded[i - deg + j] -= c * phi[j]
    return folded[:deg]


class Cyclo:
    """A canonical element of Q(zeta_order).

    >>> Cyclo(3, [1, 1, 1])
    Cyclo(3, '0')
    >>> zeta(4) * zeta(4)
    Cyclo(4, '-1')
    """

    __slots__ = ("order", "num", "den")
    # Equal values may carry different orders, so identity-style hashing would lie.
    __hash__ = None

    def __init__(self, order: int, coeffs=()):
        _check_order(order)
        nums: list[int] = []
        common = 1
        for c in coeffs:
            if not isinstance(c, (int, Fraction)):
                raise TypeError(f"raw coefficients must be int or Fraction, got {type(c).__name__}")
            f = Fraction(c)
            nums, common = _scale_in(nums, common, f)
        reduced = _reduce_int_vector(order, nums)
        g = math.gcd(common, math.gcd(*reduced)) if any(reduced) else common
        self.order = order
        self.num = tuple(c // g for c in reduced) if g != 1 else tuple(reduced)
        self.den = common // g if g != 1 else common

    @classmethod
    def _make(cls, order: int, num: tuple[int, ...], den: int) -> "Cyclo":
        # Trusted constructor: num already reduced mod Phi, gcd-normalized, den > 0.
        self = object.__new__(cls)
        self.order = order
        self.num = num
        self.den = den
        return self

    @classmethod
    def zero(cls, order: int = 1) -> "Cyclo":
        _check_order(order)
        return cls._make(order, (0,) * euler_phi(order), 1)

    @classmethod
    def one(cls, order: int = 1) -> "Cyclo":
        return cls.from_rational(1, order)

    @classmethod
    def from_rational(cls, value, order: int = 1) -> "Cyclo":
        _check_order(order)
        f = Fraction(value)
        num = [f.numerator] + [0] * (euler_phi(order) - 1)
        return cls._make(order, tuple(num), f.denominator)

    # -- representation -------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Power-basis coefficients padded to length ``order``."""
        phi = len(self.num)
        pad = (Fraction(0),) * (self.order - phi)
        return tuple(Fraction(n, self.den) for n in self.num) + pad

    def __repr__(self) -> str:
        return f"Cyclo({self.order}, '{format_scalar(self)}')"

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def is_real(self) -> bool:
        return self == self.conjugate()

    # -- field structure ---------------------------------------------------

    def embed(self, target_order: int) -> "Cyclo":
        """Re-represent the same value inside Q(zeta_target_order)."""
        _check_order(target_order)
        if target_order == self.order:
            return self
        if target_order % self.order:
            raise EmbeddingError(
                f"cannot embed order {self.order} into non-multiple order {target_order}"
            )
        step = target_order // self.order
        nums = [0] * ((len(self.num) - 1) * step + 1) if self.num else [0]
        for j, c in enumerate(self.num):
            if c:
                nums[j * step] = c
        reduced = _reduce_int_vector(target_order, nums)
        return Cyclo._make(target_order, tuple(reduced), self.den)._normalized()

    def _normalized(self) -> "Cyclo":
        g = math.gcd(self.den, math.gcd(*self.num)) if any(self.num) else self.den
        if g == 1:
            return self
        return Cyclo._make(self.order, tuple(c // g for c in self.num), self.den // g)

    def conjugate(self) -> "Cyclo":
        """The automorphism zeta -> zeta^-1 (complex conjugation)."""
        nums = [0] * self.order
        for j, c in enumerate(self.num):
            nums[(-j) % self.order] += c
        reduced = _reduce_int_vector(self.order, nums)
        return Cyclo._make(self.order, tuple(reduced), self.den)._normalized()

    def _align(self, other: "Cyclo") -> tuple["Cyclo", "Cyclo"]:
        if self.order == other.order:
            return self, other
        m = math.lcm(self.order, other.order)
        return self.embed(m), other.embed(m)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo.from_rational(other, self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._align(o)
        den = math.lcm(a.den, b.den)
        fa, fb = den // a.den, den // b.den
        num = tuple(x * fa + y * fb for x, y in zip(a.num, b.num))
        return Cyclo._make(a.order, num, den)._normalized()

    __radd__ = __add__

    def __neg__(self):
        return Cyclo._make(self.order, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if f == 0:
                return Cyclo.zero(self.order)
            num = tuple(c * f.numerator for c in self.num)
            return Cyclo._make(self.order, num, self.den * f.denominator)._normalized()
        if not isinstance(other, Cyclo):
            return NotImplemented
        a, b = self._align(other)
        conv = [0] * (2 * len(a.num) - 1 if a.num else 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        conv[i + j] += x * y
        reduced = _reduce_int_vector(a.order, conv)
        return Cyclo._make(a.order, tuple(reduced), a.den * b.den)._normalized()

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero in a cyclotomic field")
        if self.is_rational():
            return Cyclo.from_rational(1 / self.as_rational(), self.order)
        phi = [Fraction(c) for c in cyclotomic_poly(self.order)]
        f = [Fraction(n, self.den) for n in self.num]
        u = _modular_inverse_poly(f, phi)
        return Cyclo(self.order, u)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if f == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / f)
        if not isinstance(other, Cyclo):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclo.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_rational() == other
        if not isinstance(other, Cyclo):
            return NotImplemented
        if self.order == other.order:
            return self.num == other.num and self.den == other.den
        a, b = self._align(other)
        return a.num == b.num and a.den == b.den

    # -- analytic views ----------------------------------------------------

    def to_complex(self) -> complex:
        """Float image under zeta_N -> exp(2*pi*i/N)."""
        total = 0j
        for j, c in enumerate(self.num):
            if c:
                total += (c / self.den) * cmath.exp(2j * cmath.pi * j / self.order)
        return total

    def root_of_unity_order(self) -> int | None:
        """Least m with self**m = 1, or None.

        Any root of unity inside Q(zeta_N) has order dividing lcm(2, N), so the
        search runs over exactly those divisors.
        """
        if self.is_zero():
            return None
        if self * self.conjugate() != 1:
            return None
        one = Cyclo.one(self.order)
        for m in divisors(math.lcm(2, self.order)):
            if self ** m == one:
                return m
        return None


def _scale_in(nums: list[int], den: int, f: Fraction) -> tuple[list[int], int]:
    # Append fraction f to an integer vector over common denominator den.
    g = math.lcm(den, f.denominator)
    if g != den:
        nums = [c * (g // den) for c in nums]
    nums.append(f.numerator * (g // f.denominator))
    return nums, g


def _frac_poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    while b and b[-1] == 0:
        b = b[:-1]
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 1)
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        c = a[-1] / b[-1]
        s = len(a) - 1 - db
        q[s] = c
        for j, bc in enumerate(b):
            a[s + j] -= c * bc
        a.pop()
    return q, a


def _modular_inverse_poly(f: list[Fraction], mod: list[Fraction]) -> list[Fraction]:
    # Extended Euclid over Q[x]: u*f + v*mod = gcd (a nonzero constant).
    r0, r1 = list(mod), list(f)
    u0, u1 = [Fraction(0)], [Fraction(1)]
    while any(r1):
        q, r = _frac_poly_divmod(r0, r1)
        u = _poly_sub(u0, _poly_mul(q, u1))
        r0, r1, u0, u1 = r1, r, u1, u
        while r1 and r1[-1] == 0:
            r1.pop()
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible modulo the cyclotomic polynomial")
    c = r0[0]
    return [x / c for x in u0]


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def zeta(order: int, power: int = 1) -> Cyclo:
    """The root of unity zeta_order**power."""
    _check_order(order)
    nums = [0] * (power % order) + [1]
    return Cyclo(order, nums)


def to_complex(x) -> complex:
    """Float image of any supported scalar (Cyclo, rational, or complex)."""
    if isinstance(x, Cyclo):
        return x.to_complex()
    if isinstance(x, (int, float, Fraction)):
        return complex(x)
    if isinstance(x, complex):
        return x
    raise TypeError(f"unsupported scalar {type(x).__name__}")


# -- coefficient literal grammar -------------------------------------------
#
# coefficient := term (('+'|'-') term)*
# term        := RAT | RAT '*' Z | Z
# Z           := 'z' | 'z^' UINT
# RAT         := ['-'] UINT ['/' UINT]      (decimals allowed in float mode)

_TERM_RE = re.compile(
    r"""
    (?P<rat>-?\d+(?:\.\d*)?(?:/\d+)?)?      # optional rational/decimal part
    (?P<star>\*)?
    (?P<z>z(?:\^(?P<exp>\d+))?)?            # optional root-of-unity power
    $""",
    re.VERBOSE,
)


def _split_terms(text: str):
    terms = []
    start = 0
    current = []
    sign = 1
    begun = False
    for i, ch in enumerate(text):
        if ch in "+-" and begun:
            terms.append((sign, "".join(current).strip(), start))
            sign = 1 if ch == "+" else -1
            current = []
            start = i + 1
            begun = False
        elif ch in "+-" and not begun and not current:
            sign = sign * (1 if ch == "+" else -1)
            start = i + 1
        else:
            if not ch.isspace():
                begun = True
            current.append(ch)
    terms.append((sign, "".join(current).strip(), start))
    return terms


def _parse_terms(text: str, allow_decimal: bool):
    if not text.strip():
        raise LiteralError("empty coefficient", 0)
    out = []
    for sign, body, pos in _split_terms(text):
        if not body:
            raise LiteralError("empty term", pos)
        m = _TERM_RE.match(body)
        if not m or (m.group("rat") is None and m.group("z") is None):
            raise LiteralError(f"malformed term {body!r}", pos)
        if (m.group("star") is not None) != (m.group("rat") is not None and m.group("z") is not None):
            raise LiteralError(f"malformed term {body!r}", pos)
        rat_text = m.group("rat")
        if rat_text is not None and "." in rat_text:
            if not allow_decimal:
                raise LiteralError("decimal literals require float mode", pos)
            if "/" in rat_text:
                raise LiteralError(f"mixed decimal and fraction in {body!r}", pos)
        exp = 0
        if m.group("z"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        out.append((sign, rat_text, exp, pos))
    return out


def parse_scalar(text: str, root_order: int = 1) -> Cyclo:
    """Parse an exact coefficient literal such as ``1/3*z^2 - 1``."""
    _check_order(root_order)
    nums: dict[int, Fraction] = {}
    for sign, rat_text, exp, pos in _parse_terms(text, allow_decimal=False):
        value = Fraction(rat_text) if rat_text is not None else Fraction(1)
        if exp >= root_order:
            # zeta^exp folds mod the root order; allow it for convenience.
            exp %= root_order
        nums[exp] = nums.get(exp, Fraction(0)) + sign * value
    raw = [nums.get(j, Fraction(0)) for j in range(max(nums) + 1 if nums else 1)]
    return Cyclo(root_order, raw)


def parse_scalar_float(text: str, root_order: int = 1) -> complex:
    """Parse a coefficient literal in float mode; decimals are allowed."""
    _check_order(root_order)
    total = 0j
    for sign, rat_text, exp, pos in _parse_terms(text, allow_decimal=True):
        if rat_text is None:
            value = 1.0
        elif "." in rat_text:
            value = float(rat_text)
        else:
            value = float(Fraction(rat_text))
        total += sign * value * cmath.exp(2j * cmath.pi * exp / root_order)
    return total


def format_scalar(x: Cyclo) -> str:
    """Render a Cyclo as a parseable literal ('0', '-1/3', '1/2 + 1/2*z^3', ...)."""
    parts = []
    for j, n in enumerate(x.num):
        if n == 0:
            continue
        c = Fraction(n, x.den)
        mag = -c if c < 0 else c
        if j == 0:
            body = str(mag)
        else:
            zpart = "z" if j == 1 else f"z^{j}"
            body = zpart if mag == 1 else f"{mag}*{zpart}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"
