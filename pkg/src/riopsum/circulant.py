"""Circulant matrices of polynomial coefficient vectors: powers, orbits, periods.

The matrix of p(t) = a_0 + ... + a_d t^d has first row (a_d, ..., a_0) and
each following row is the cyclic right-shift of the one above.  Period
detection watches the power sequence I, V, V^2, ... for its first repeat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Cyclo, zeta
from .series import Poly, is_zero_scalar


class InvalidPolynomialError(ValueError):
    """Raised when a polynomial violates the a_0 != 0 / a_d != 0 contract."""


class PeriodNotFoundError(RuntimeError):
    """Raised when no repetition shows up within the step budget."""


@dataclass(frozen=True)
class PeriodInfo:
    """Minimal (preperiod, period) of an iterated object."""

    preperiod: int
    period: int


@dataclass(frozen=True)
class CircMat:
    """A square matrix stored as a tuple of row tuples."""

    rows: tuple

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __post_init__(self):
        n = len(self.rows)
        if n == 0 or any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square and nonempty")

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def is_float_mode(self) -> bool:
        return not isinstance(self.rows[0][0], Cyclo)


def _poly_coeffs(p) -> tuple:
    coeffs = tuple(p.coeffs) if hasattr(p, "coeffs") else tuple(p)
    if not coeffs:
        raise InvalidPolynomialError("empty coefficient vector")
    return coeffs


def circulant_of(p) -> CircMat:
    """The circulant matrix of a polynomial (PolySpec or coefficient sequence)."""
    coeffs = _poly_coeffs(p)
    if is_zero_scalar(coeffs[0]):
        raise InvalidPolynomialError("constant term must be nonzero")
    if all(isinstance(c, Cyclo) for c in coeffs):
        order = math.lcm(*(c.order for c in coeffs))
        coeffs = tuple(c.embed(order) for c in coeffs)
    first = tuple(reversed(coeffs))
    rows = [first]
    for _ in range(len(coeffs) - 1):
        prev = rows[-1]
        rows.append((prev[-1],) + prev[:-1])
    return CircMat(tuple(rows))


def identity_like(V: CircMat) -> CircMat:
    zero = V.rows[0][0] * 0
    one = V.rows[0][0] ** 0
    n = V.dim
    return CircMat(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))


def mat_mul(A: CircMat, B: CircMat) -> CircMat:
    n = A.dim
    if B.dim != n:
        raise ValueError("dimension mismatch")
    cols = list(zip(*B.rows))
    out = []
    for row in A.rows:
        out.append(
            tuple(sum_entries(row, col) for col in cols)
        )
    return CircMat(tuple(out))


def sum_entries(row, col):
    acc = row[0] * col[0]
    for a, b in zip(row[1:], col[1:]):
        acc = acc + a * b
    return acc


def mat_power(V: CircMat, k: int) -> CircMat:
    """V**k by repeated squaring; V**0 is the identity."""
    if k < 0:
        raise ValueError("matrix powers must be nonnegative")
    result = identity_like(V)
    base = V
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def mat_vec(V: CircMat, x) -> tuple:
    return tuple(sum_entries(row, tuple(x)) for row in V.rows)


def _mat_key(V: CircMat):
    # Entries of one power sequence share a single field representation,
    # so the raw integer vectors serialize consistently.
    return tuple((e.num, e.den) for row in V.rows for e in row)


def _mat_close(A: CircMat, B: CircMat, tol: float) -> bool:
    return all(
        abs(a - b) <= tol for ra, rb in zip(A.rows, B.rows) for a, b in zip(ra, rb)
    )


def default_max_steps(dim: int) -> int:
    return 256 * math.lcm(*range(2, dim + 2)) if dim >= 1 else 256


def matrix_period(V: CircMat, max_steps: int | None = None, tolerance: float | None = None) -> PeriodInfo:
    """Minimal (preperiod, period) of the sequence I, V, V^2, ...

    Raises PeriodNotFoundError when no repeat occurs within max_steps powers,
    which is the expected outcome for matrices of spectral radius above 1.
    """
    if max_steps is None:
        max_steps = default_max_steps(V.dim)
    if V.is_float_mode():
        tol = 1e-9 if tolerance is None else tolerance
        powers = [identity_like(V)]
        current = powers[0]
        for step in range(1, max_steps + 1):
            current = mat_mul(current, V)
            for j, seen in enumerate(powers):
                if _mat_close(seen, current, tol):
                    return PeriodInfo(preperiod=j, period=step - j)
            powers.append(current)
        raise PeriodNotFoundError(f"no matrix period within {max_steps} steps")
    seen: dict = {}
    current = identity_like(V)
    for step in range(max_steps + 1):
        key = _mat_key(current)
        if key in seen:
            j = seen[key]
            return PeriodInfo(preperiod=j, period=step - j)
        seen[key] = step
        current = mat_mul(current, V)
    raise PeriodNotFoundError(f"no matrix period within {max_steps} steps")


def orbit(V: CircMat, x0, max_steps: int | None = None, tolerance: float | None = None):
    """Forward orbit of x0 under V up to the first revisit.

    Returns (list of distinct states in visit order, PeriodInfo of the orbit).
    """
    x0 = tuple(x0)
    if len(x0) != V.dim:
        raise ValueError("vector dimension mismatch")
    if max_steps is None:
        max_steps = default_max_steps(V.dim)
    float_mode = V.is_float_mode()
    tol = 1e-9 if tolerance is None else tolerance
    states = [x0]
    current = x0
    for step in range(1, max_steps + 1):
        current = mat_vec(V, current)
        for j, seen in enumerate(states):
            if (
                all(abs(a - b) <= tol for a, b in zip(seen, current))
                if float_mode
                else seen == current
            ):
                return states, PeriodInfo(preperiod=j, period=step - j)
        states.append(current)
    raise PeriodNotFoundError(f"orbit has no revisit within {max_steps} steps")


def eigenvalues(V: CircMat) -> list:
    """Eigenvalues lambda_l = sum_j nu_j zeta^(l*j), l = 1..dim, nu = first row.

    Exact mode only; each lambda_l pairs with the eigenvector (1, zeta^l, ...,
    zeta^(l*d)) for zeta of order dim.
    """
    if V.is_float_mode():
        raise TypeError("eigenvalues are computed in exact mode only")
    n = V.dim
    nu = V.rows[0]
    out = []
    for l in range(1, n + 1):
        acc = Cyclo.zero(n)
        for j, c in enumerate(nu):
            acc = acc + c * zeta(n, (l * j) % n)
        out.append(acc)
    return out


def eigenvector(dim: int, l: int) -> tuple:
    return tuple(zeta(dim, (l * j) % dim) for j in range(dim))


def evolve_poly(p, k: int) -> Poly:
    """The polynomial whose coefficients are V^k applied to p's coefficients.

    Row vector (1, t, ..., t^d) times V^k times the coefficient column; k = 0
    returns p itself.
    """
    coeffs = _poly_coeffs(p)
    V = circulant_of(coeffs)
    Vk = mat_power(V, k)
    return Poly(mat_vec(Vk, coeffs))
