"""The Riordan array (1/(1-t^(d+1)), t*p(t)) and its column partial sums.

Column k is the coefficient sequence of (t*p)^k/(1-t^(d+1)); its repeating
part starts at index 1+(k-1)(d+1) and the terms before that add up to the
column partial sum S_[k].  Entries are computed by rational-function
expansion; the circulant-power identity for the repeating block is kept as an
independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .circulant import circulant_of, mat_power, mat_vec
from .exactnum import Cyclo
from .series import Poly, Fps, fps_expand_rational, is_zero_scalar, poly_pow, scalar_eq


class InternalInconsistencyError(AssertionError):
    """Two independent computations of the same quantity disagreed: a bug."""


@dataclass(frozen=True)
class PolySpec:
    """Input polynomial with nonzero constant and leading coefficients.

    ``coeffs`` holds Cyclo values (exact mode) or complex values (float mode);
    exact coefficients are embedded into one common cyclotomic order up front
    so that every derived quantity lives in a single field representation.
    """

    coeffs: tuple
    mode: str = field(init=False)

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        if all(isinstance(c, Cyclo) for c in coeffs):
            order = math.lcm(*(c.order for c in coeffs))
            coeffs = tuple(c.embed(order) for c in coeffs)
            mode = "exact"
        else:
            coeffs = tuple(complex(c) for c in coeffs)
            mode = "float"
        if is_zero_scalar(coeffs[0]):
            raise ValueError("constant term a_0 must be nonzero")
        if is_zero_scalar(coeffs[-1]) and len(coeffs) > 1:
            raise ValueError("leading coefficient a_d must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "mode", mode)

    @classmethod
    def from_rationals(cls, values) -> "PolySpec":
        return cls(tuple(Cyclo(1, [Fraction(v)]) for v in values))

    @property
    def d(self) -> int:
        return len(self.coeffs) - 1

    def poly(self) -> Poly:
        return Poly(self.coeffs)

    def shifted_poly(self) -> Poly:
        """t * p(t), the multiplier series of the array."""
        return self.poly().shift(1)

    def cycle_denominator(self) -> Poly:
        """1 - t^(d+1)."""
        one = self.coeffs[0] ** 0
        zero = self.coeffs[0] * 0
        return Poly([one] + [zero] * self.d + [-one])


@dataclass(frozen=True)
class ColumnStructure:
    """Prefix plus repeating block of one array column."""

    k: int
    prefix: tuple
    block: tuple


def _psum_weight(j: int, d: int) -> int:
    # coefficient j of 1/((1-t)(1-t^(d+1)))
    return j // (d + 1) + 1


def ra_entry(p: PolySpec, n: int, k: int):
    """Array entry C_{n,k} = [t^n] (t*p)^k/(1-t^(d+1)); zero below the diagonal."""
    zero = p.coeffs[0] * 0
    if n < k:
        return zero
    pk = poly_pow(p.poly(), k)
    m = n - k
    acc = zero
    for i in range(m, -1, -(p.d + 1)):
        c = pk[i]
        if not is_zero_scalar(c):
            acc = acc + c
    return acc


def ra_matrix(p: PolySpec, n_rows: int) -> list[list]:
    """The triangular table, rows 0..n_rows-1; row n holds columns 0..n."""
    if n_rows < 1:
        raise ValueError("n_rows must be positive")
    columns = []
    tp = p.shifted_poly()
    denom = p.cycle_denominator()
    power = poly_pow(tp, 0)
    for k in range(n_rows):
        if k:
            power = power * tp
        columns.append(fps_expand_rational(power, denom, n_rows).coeffs)
    return [[columns[k][n] for k in range(n + 1)] for n in range(n_rows)]


def column_structure(p: PolySpec, k: int, verify_periods: int = 3) -> ColumnStructure:
    """Prefix (up to index (k-1)(d+1)) and repeating block of column k.

    The block is verified to repeat for ``verify_periods`` further periods and
    against the circulant identity block = V^k (0,..,0,1)^T; a failure there is
    a bug, not a data condition.
    """
    if k < 1:
        raise ValueError("column index must be >= 1")
    d = p.d
    cut = 1 + (k - 1) * (d + 1)
    need = cut + (d + 1) * (1 + verify_periods)
    tp = p.shifted_poly()
    terms = fps_expand_rational(poly_pow(tp, k), p.cycle_denominator(), need).coeffs
    prefix = terms[:cut]
    block = terms[cut : cut + d + 1]
    tol = 1e-9 if p.mode == "float" else None
    for i in range(cut, need - d - 1):
        if not scalar_eq(terms[i], terms[i + d + 1], tol):
            raise InternalInconsistencyError(
                f"column {k} fails to repeat with period {d + 1} at index {i}"
            )
    V = circulant_of(p)
    basis_last = [p.coeffs[0] * 0] * d + [p.coeffs[0] ** 0]
    expected = mat_vec(mat_power(V, k), basis_last)
    if not all(scalar_eq(a, b, tol) for a, b in zip(block, expected)):
        raise InternalInconsistencyError(
            f"column {k} block disagrees with the circulant power identity"
        )
    return ColumnStructure(k=k, prefix=tuple(prefix), block=tuple(block))


def psum_array_entry(p: PolySpec, n: int, k: int):
    """Entry h_{n,k} = [t^n] (t*p)^k / ((1-t)(1-t^(d+1))) of the partial-sum array."""
    zero = p.coeffs[0] * 0
    if n < k:
        return zero
    pk = poly_pow(p.poly(), k)
    m = n - k
    acc = zero
    for j in range(min(m, pk.degree) + 1):
        c = pk[j]
        if not is_zero_scalar(c):
            acc = acc + c * _psum_weight(m - j, p.d)
    return acc


def partial_sum_column(p: PolySpec, k: int):
    """S_[k]: the (k-1)(d+1)-st partial sum of column k."""
    if k < 1:
        raise ValueError("column index must be >= 1")
    return psum_array_entry(p, (k - 1) * (p.d + 1), k)


def partial_sums(p: PolySpec, count: int) -> list:
    """S_[1], ..., S_[count], sharing one incremental power of t*p."""
    if count < 1:
        raise ValueError("count must be positive")
    out = []
    d = p.d
    poly = p.poly()
    pk = poly_pow(poly, 0)
    for k in range(1, count + 1):
        pk = pk * poly
        m = (k - 1) * (d + 1) - k  # [t^m] of p^k / ((1-t)(1-t^(d+1)))
        acc = p.coeffs[0] * 0
        if m >= 0:
            for j in range(min(m, pk.degree) + 1):
                c = pk[j]
                if not is_zero_scalar(c):
                    acc = acc + c * _psum_weight(m - j, d)
        out.append(acc)
    return out
