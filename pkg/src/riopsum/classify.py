"""Deciders for eventual periodicity of column partial sums.

Covers linear polynomials, the four quadratic eigenvalue cases, the rational
root-family polynomials behind the rank-two case, and the higher-degree family
a((d-1) - 2t - ... - 2t^d).  Each decider discovers the matrix period from
root-of-unity orders of the circulant eigenvalues and attaches a closed-form
partial-sum predictor where one exists.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from .exactnum import Cyclo, zeta
from .riordan import PolySpec
from .series import scalar_eq


class InvalidInputError(ValueError):
    """Raised when a decider's nonzero-coefficient precondition fails."""


class UnclassifiableError(ValueError):
    """Raised for polynomials outside every decided family."""


DEFAULT_MU_BOUND = 512
FLOAT_TOL = 1e-9


class Case(str, Enum):
    LINEAR_EQUAL = "LinearEqual"            # b = a
    LINEAR_OPPOSITE = "LinearOpposite"      # b = -a, the periodic linear family
    LINEAR_GENERIC = "LinearGeneric"        # both eigenvalues nonzero
    QUAD_FULL_RANK = "QuadFullRank"         # p(1) != 0, p = a(1 - 2t - 2t^2)
    QUAD_RANK_ONE_A = "QuadRankOneA"        # kernel eigenvalues 1 and 2
    QUAD_RANK_ONE_B = "QuadRankOneB"        # kernel eigenvalues 1 and 3
    QUAD_RANK_TWO = "QuadRankTwo"           # only p(1) = 0, real ratio family
    HIGHER_DEGREE = "HigherDegreeFamily"    # a((d-1) - 2t - ... - 2t^d)
    MATRIX_NOT_PERIODIC = "MatrixNotPeriodic"
    PSUMS_NOT_PERIODIC = "PartialSumsNotPeriodic"


@dataclass(frozen=True)
class Predictor:
    """Closed form for S_[k]; S_[1] = 0 is hard-coded, formulas start at k = 2."""

    kind: str
    params: dict

    def value_at(self, k: int):
        if k < 1:
            raise ValueError("column index must be >= 1")
        exact = all(isinstance(v, Cyclo) for v in self.params.values())
        if k == 1:
            return Cyclo.zero() if exact else 0j
        if self.kind == "linear_opposite":
            a = self.params["a"]
            return a * a * (-2 * a) ** (k - 2)
        if self.kind == "rank_one_a":
            a = self.params["a"]
            xi = zeta(3) if exact else cmath.exp(2j * cmath.pi / 3)
            return (3 * a * xi) ** k * (xi - 1) / (9 * xi)
        if self.kind == "rank_one_b":
            a = self.params["a"]
            xi = zeta(3) if exact else cmath.exp(2j * cmath.pi / 3)
            return (3 * a * xi) ** k * (1 - xi) / 9
        if self.kind == "rank_two_b0":
            a = self.params["a"]
            if exact:
                # sqrt(3) and sin(m*pi/6) both live in Q(zeta_12)
                s3 = zeta(12) + zeta(12, 11)
                w = zeta(12, (k - 4) % 12)
                sin_term = (w - w.conjugate()) * (-zeta(12, 3)) / 2
                return a ** k * 2 * (-s3) ** (k - 3) * sin_term
            return a ** k * 2 * (-math.sqrt(3.0)) ** (k - 3) * math.sin((k - 4) * math.pi / 6)
        raise ValueError(f"unknown predictor kind {self.kind!r}")


@dataclass(frozen=True)
class Classification:
    """Outcome of a decider: structural case, period data, optional predictor."""

    case: Case
    mu: int | None = None
    predicted_period: int | None = None
    psums_periodic: bool | None = None
    predictor: Predictor | None = None
    parameters: dict = field(default_factory=dict)
    note: str = ""


def predict_psums(cls: Classification, k: int):
    """Evaluate the classification's closed form at column k, if it has one."""
    if cls.predictor is None:
        return None
    return cls.predictor.value_at(k)


# -- family constructors ------------------------------------------------------


def linear_poly(a, b) -> PolySpec:
    return PolySpec((a, b))


def full_rank_poly(a) -> PolySpec:
    """p = a(1 - 2t - 2t^2)."""
    return PolySpec((a, -2 * a, -2 * a))


def rank_one_a_poly(a) -> PolySpec:
    """p = a(1 + xi^2 t + xi t^2)."""
    xi = zeta(3) if isinstance(a, Cyclo) else cmath.exp(2j * cmath.pi / 3)
    return PolySpec((a, a * xi ** 2, a * xi))


def rank_one_b_poly(a) -> PolySpec:
    """p = a(xi^2 + t + xi t^2)."""
    xi = zeta(3) if isinstance(a, Cyclo) else cmath.exp(2j * cmath.pi / 3)
    return PolySpec((a * xi ** 2, a, a * xi))


def rank_two_poly(a, r) -> PolySpec:
    """p = a(1 - t)(1 + (r+1)t) = a(1 + rt - (1+r)t^2)."""
    return PolySpec((a, a * r, -a * (1 + r)))


def higher_degree_poly(d: int, a) -> PolySpec:
    """p = a((d-1) - 2t - ... - 2t^d), defined for d >= 2."""
    if d < 2:
        raise InvalidInputError("the higher-degree family needs d >= 2")
    return PolySpec((a * (d - 1),) + tuple(-2 * a for _ in range(d)))


# -- order helpers -------------------------------------------------------------


def _root_order(x, mu_bound: int = DEFAULT_MU_BOUND, tolerance: float = FLOAT_TOL) -> int | None:
    if isinstance(x, Cyclo):
        return x.root_of_unity_order()
    z = complex(x)
    if abs(abs(z) - 1.0) > tolerance:
        return None
    power = z
    for m in range(1, mu_bound + 1):
        if abs(power - 1.0) <= tolerance * m:
            return m
        power *= z
    return None


def _is_zero(x, tolerance: float = FLOAT_TOL) -> bool:
    if isinstance(x, Cyclo):
        return x.is_zero()
    return abs(x) <= tolerance


# -- deciders ------------------------------------------------------------------


def classify_linear(a, b, mu_bound: int = DEFAULT_MU_BOUND) -> Classification:
    """Periodicity verdict for p = a + bt.

    The partial sums are eventually periodic exactly when b = -a and -2a is a
    root of unity, with S_[k] = a^2 (-2a)^(k-2) from k = 2 on.
    """
    if _is_zero(a) or _is_zero(b):
        raise InvalidInputError("classify_linear needs a*b != 0")
    params = {"a": a, "b": b}
    if _is_zero(b + a):
        m = _root_order(-2 * a, mu_bound)
        if m is None:
            return Classification(Case.MATRIX_NOT_PERIODIC, psums_periodic=False, parameters=params)
        return Classification(
            Case.LINEAR_OPPOSITE,
            mu=m,
            predicted_period=m,
            psums_periodic=True,
            predictor=Predictor("linear_opposite", {"a": a}),
            parameters=params,
        )
    if _is_zero(b - a):
        m = _root_order(2 * a, mu_bound)
        if m is None:
            return Classification(Case.MATRIX_NOT_PERIODIC, psums_periodic=False, parameters=params)
        return Classification(Case.LINEAR_EQUAL, mu=m, psums_periodic=False, parameters=params)
    m1 = _root_order(a + b, mu_bound)
    m2 = _root_order(b - a, mu_bound)
    if m1 is None or m2 is None:
        return Classification(Case.MATRIX_NOT_PERIODIC, psums_periodic=False, parameters=params)
    return Classification(
        Case.LINEAR_GENERIC, mu=math.lcm(m1, m2), psums_periodic=False, parameters=params
    )


def classify_quadratic(a, b, c, mu_bound: int = DEFAULT_MU_BOUND) -> Classification:
    """Periodicity verdict for p = a + bt + ct^2 via the eigenvalue cases."""
    if _is_zero(a) or _is_zero(c):
        raise InvalidInputError("classify_quadratic needs a*c != 0")
    exact = isinstance(a, Cyclo)
    xi = zeta(3) if exact else cmath.exp(2j * cmath.pi / 3)
    lam1 = a + b + c
    lam2 = a * xi ** 2 + b * xi + c
    lam3 = a * xi + b * xi ** 2 + c
    params = {"a": a, "b": b, "c": c}
    note = "" if exact else "float-verified"

    if not _is_zero(lam1):
        orders = [_root_order(lam, mu_bound) for lam in (lam1, lam2, lam3) if not _is_zero(lam)]
        if any(m is None for m in orders):
            return Classification(Case.MATRIX_NOT_PERIODIC, parameters=params, note=note)
        mu = math.lcm(*orders)
        if _is_zero(b + 2 * a) and _is_zero(c + 2 * a):
            # p = a(1 - 2t - 2t^2); here (3a)^mu = 1 and 6 | mu automatically
            return Classification(
                Case.QUAD_FULL_RANK,
                mu=mu,
                predicted_period=mu,
                psums_periodic=True,
                parameters=params,
            )
        return Classification(
            Case.PSUMS_NOT_PERIODIC, mu=mu, psums_periodic=False, parameters=params, note=note
        )

    if _is_zero(lam2) and _is_zero(lam3):
        raise InvalidInputError("all three eigenvalues vanish only when a = 0")

    if _is_zero(lam2):
        m = _root_order(lam3, mu_bound)  # lam3 = 3 a xi
        if m is None:
            return Classification(Case.MATRIX_NOT_PERIODIC, parameters=params, note=note)
        return Classification(
            Case.QUAD_RANK_ONE_A,
            mu=m,
            predicted_period=m,
            psums_periodic=True,
            predictor=Predictor("rank_one_a", {"a": a}),
            parameters=params,
        )

    if _is_zero(lam3):
        scale = b  # p = b(xi^2 + t + xi t^2)
        m = _root_order(lam2, mu_bound)  # lam2 = 3 b xi
        if m is None:
            return Classification(Case.MATRIX_NOT_PERIODIC, parameters=params, note=note)
        return Classification(
            Case.QUAD_RANK_ONE_B,
            mu=m,
            predicted_period=m,
            psums_periodic=True,
            predictor=Predictor("rank_one_b", {"a": scale}),
            parameters={**params, "scale": scale},
        )

    # lam1 = 0 with lam2 * lam3 != 0: real-ratio family or nothing
    r = b / a
    r_is_real = r.is_real() if exact else abs(r.imag) <= FLOAT_TOL
    m2 = _root_order(lam2, mu_bound)
    m3 = _root_order(lam3, mu_bound)
    if not r_is_real:
        if m2 is None or m3 is None:
            return Classification(Case.MATRIX_NOT_PERIODIC, parameters=params, note=note)
        return Classification(
            Case.PSUMS_NOT_PERIODIC,
            mu=math.lcm(m2, m3),
            psums_periodic=False,
            parameters=params,
            note=note,
        )
    if m2 is None or m3 is None:
        return Classification(Case.MATRIX_NOT_PERIODIC, parameters=params, note=note)
    mu = math.lcm(m2, m3)
    predictor = None
    if _is_zero(b):
        predictor = Predictor("rank_two_b0", {"a": a})
    return Classification(
        Case.QUAD_RANK_TWO,
        mu=mu,
        predicted_period=mu,
        psums_periodic=True,
        predictor=predictor,
        parameters={**params, "r": r},
        note=note,
    )


def classify_higher_degree(d: int, a, mu_bound: int = DEFAULT_MU_BOUND) -> Classification:
    """Verdict for p = a((d-1) - 2t - ... - 2t^d), d >= 2.

    When (d+1)a is a root of unity of order k, the partial sums are eventually
    periodic with period lcm(k, d+1) for odd d and lcm(k, 2(d+1)) for even d.
    """
    if d < 2:
        raise InvalidInputError("the higher-degree family needs d >= 2")
    if _is_zero(a):
        raise InvalidInputError("a must be nonzero")
    k = _root_order((d + 1) * a, mu_bound)
    params = {"d": d, "a": a}
    if k is None:
        return Classification(Case.MATRIX_NOT_PERIODIC, parameters=params)
    period = math.lcm(k, d + 1) if d % 2 else math.lcm(k, 2 * (d + 1))
    return Classification(
        Case.HIGHER_DEGREE,
        mu=period,
        predicted_period=period,
        psums_periodic=True,
        parameters={**params, "k": k},
    )


def classify_poly(p: PolySpec, mu_bound: int = DEFAULT_MU_BOUND) -> Classification:
    """Dispatch a PolySpec to the decider covering its degree, if any."""
    d = p.d
    if d == 0:
        raise UnclassifiableError("constant polynomials have identically zero partial sums")
    if d == 1:
        return classify_linear(p.coeffs[0], p.coeffs[1], mu_bound)
    if d == 2:
        return classify_quadratic(p.coeffs[0], p.coeffs[1], p.coeffs[2], mu_bound)
    # degree >= 3: only the higher-degree family is decided
    a = p.coeffs[1] / (-2)
    tol = None if p.mode == "exact" else FLOAT_TOL
    shape_ok = scalar_eq(p.coeffs[0], a * (d - 1), tol) and all(
        scalar_eq(p.coeffs[i], -2 * a, tol) for i in range(1, d + 1)
    )
    if not shape_ok:
        raise UnclassifiableError(
            f"degree {d} polynomials outside a((d-1) - 2t - ... - 2t^d) are not classified"
        )
    return classify_higher_degree(d, a, mu_bound)


# -- the rational root-family polynomials -------------------------------------


@dataclass(frozen=True)
class FmuPoly:
    """Rational polynomial whose real roots parameterize the rank-two family."""

    mu: int
    coeffs: tuple  # length mu + 1, Fractions, lowest degree first

    @property
    def degree(self) -> int:
        d = len(self.coeffs) - 1
        while d > 0 and self.coeffs[d] == 0:
            d -= 1
        return d

    def eval(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _cos_pair(j: int) -> int:
    # xi^j + conj(xi)^j for xi of order 3
    return 2 if j % 3 == 0 else -1


def _sin_unit(j: int) -> int:
    # (xi^j - conj(xi)^j) / sqrt(-3)
    return (0, 1, -1)[j % 3]


def fmu_poly(mu: int) -> FmuPoly:
    """The degree-mu rational polynomial of the rank-two root family.

    Built from binomial sums of cosine pairs of third roots of unity; r is a
    root exactly when (xi*r - 1)^mu = (xi - r)^mu.
    """
    if mu < 1:
        raise ValueError("mu must be positive")
    sign = -1 if mu % 2 else 1
    coeffs = []
    if mu % 6 == 0:
        for i in range(mu + 1):
            q = _sin_unit(i)
            coeffs.append(Fraction((-1) ** i * math.comb(mu, i) * q))
    else:
        den = 2 - sign * _cos_pair(mu)
        for i in range(mu + 1):
            q = Fraction(_cos_pair(i) - sign * _cos_pair(mu - i), den)
            coeffs.append((-1) ** i * math.comb(mu, i) * q)
    return FmuPoly(mu, tuple(coeffs))


def fmu_integer_row(mu: int) -> tuple[int, ...]:
    """Integer row: coefficients scaled by the lcm of denominators.

    For 6 | mu the row is negated to match the sign convention of the printed
    integer triangle (the other square root of -3).
    """
    f = fmu_poly(mu)
    scale = math.lcm(*(c.denominator for c in f.coeffs))
    row = [int(c * scale) for c in f.coeffs]
    if mu % 6 == 0:
        row = [-x for x in row]
    return tuple(row)


@dataclass(frozen=True)
class RealRoot:
    """One real root: exact rational when known, else a refined interval."""

    value: float
    exact: Fraction | None = None
    interval: tuple | None = None


def _frac_eval(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _frac_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    while any(b):
        a, b = b, _frac_rem(a, b)
    if any(a):
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _frac_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while b and b[-1] == 0:
        b.pop()
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        for j, bc in enumerate(b):
            a[shift + j] -= q * bc
        a.pop()
    return a if a else [Fraction(0)]


def _deflate(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    # synthetic division by (x - root); the final carry is p(root) = 0
    n = len(coeffs) - 1
    out = [Fraction(0)] * n
    carry = coeffs[n]
    for i in range(n - 1, -1, -1):
        out[i] = carry
        carry = coeffs[i] + carry * root
    return out


def real_roots(f, precision: float = 1e-9) -> list[RealRoot]:
    """All real roots: exact rationals first, then bisection-refined intervals.

    The input is squarefree-reduced via gcd with its derivative; remaining
    irrational roots are seeded from the float companion-matrix roots and then
    bracketed and bisected in exact arithmetic down to the requested width.
    """
    coeffs = [Fraction(c) for c in (f.coeffs if isinstance(f, FmuPoly) else f)]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        raise ValueError("need a nonzero, nonconstant polynomial")
    roots: list[RealRoot] = []
    # factor out powers of x
    if coeffs[0] == 0:
        roots.append(RealRoot(0.0, exact=Fraction(0)))
        while coeffs[0] == 0:
            coeffs.pop(0)
    # squarefree part
    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    if len(coeffs) > 2:
        g = _frac_gcd(coeffs, deriv)
        if len(g) > 1:
            coeffs = _exact_div(coeffs, g)
    # rational roots: candidates p/q over the primitive integer version
    scale = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * scale) for c in coeffs]
    content = math.gcd(*(abs(v) for v in ints if v)) or 1
    ints = [v // content for v in ints]
    found = True
    while found and len(ints) > 1:
        found = False
        a0, an = abs(ints[0]), abs(ints[-1])
        for p in divisors_signed(a0):
            for q in _positive_divisors(an):
                cand = Fraction(p, q)
                if _frac_eval([Fraction(v) for v in ints], cand) == 0:
                    roots.append(RealRoot(float(cand), exact=cand))
                    fr = _deflate([Fraction(v) for v in ints], cand)
                    scale2 = math.lcm(*(c.denominator for c in fr)) if fr else 1
                    ints = [int(c * scale2) for c in fr]
                    found = True
                    break
            if found:
                break
    # leftover irrational real roots
    rem = [Fraction(v) for v in ints]
    if len(rem) > 1:
        approx = np.roots([float(c) for c in reversed(rem)])
        reals = sorted(z.real for z in approx if abs(z.imag) <= 1e-7 * (1 + abs(z.real)))
        min_gap = min(
            (b - a for a, b in zip(reals, reals[1:])), default=1.0
        )
        for x0 in reals:
            bracket = _bracket(rem, x0, max(min_gap / 4, 1e-12))
            if bracket is None:
                continue
            lo, hi = bracket
            while hi - lo > precision:
                mid = (lo + hi) / 2
                if _frac_eval(rem, mid) == 0:
                    lo = hi = mid
                    break
                if (_frac_eval(rem, lo) < 0) == (_frac_eval(rem, mid) < 0):
                    lo = mid
                else:
                    hi = mid
            roots.append(RealRoot(float((lo + hi) / 2), interval=(lo, hi)))
    roots.sort(key=lambda r: r.value)
    return roots


def divisors_signed(n: int) -> list[int]:
    if n == 0:
        return [0]
    ds = _positive_divisors(n)
    return [s * d for d in ds for s in (1, -1)]


def _positive_divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
        d += 1
    return sorted(out)


def _exact_div(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(a) - 1, len(b) - 2, -1):
        q = a[i] / b[-1]
        out[i - len(b) + 1] = q
        for j, bc in enumerate(b):
            a[i - len(b) + 1 + j] -= q * bc
    return out


def _bracket(coeffs: list[Fraction], x0: float, start: float):
    # widen around the float seed until the exact signs differ
    width = Fraction(start).limit_denominator(10 ** 12)
    center = Fraction(x0).limit_denominator(10 ** 12)
    for _ in range(60):
        lo, hi = center - width, center + width
        flo, fhi = _frac_eval(coeffs, lo), _frac_eval(coeffs, hi)
        if flo == 0:
            return lo, lo
        if fhi == 0:
            return hi, hi
        if (flo < 0) != (fhi < 0):
            return lo, hi
        width *= 2
    return None


def rank_two_scales(r, mu: int, tolerance: float = FLOAT_TOL) -> list:
    """All scale factors a making the rank-two family of ratio r periodic at mu.

    Candidates a = zeta_mu^s / ((xi-1)(r - xi^2)) are filtered by the second
    unit condition ((xi-1) a (1 - xi^2 r))^mu = 1.  Exact for rational r,
    float otherwise; non-roots of the mu-th root family yield an empty list.
    """
    if mu < 1:
        raise ValueError("mu must be positive")
    exact = isinstance(r, (int, Fraction)) or (isinstance(r, Cyclo) and r.is_rational())
    out = []
    if exact:
        rr = r.as_rational() if isinstance(r, Cyclo) else Fraction(r)
        xi = zeta(3)
        base = (xi - 1) * (rr - xi ** 2)
        other = (xi - 1) * (1 - rr * xi ** 2)
        for s in range(1, mu + 1):
            a = zeta(mu, s) / base
            if (a * other) ** mu == 1:
                out.append(a)
        return out
    xi = cmath.exp(2j * cmath.pi / 3)
    rf = complex(r)
    base = (xi - 1) * (rf - xi ** 2)
    other = (xi - 1) * (1 - rf * xi ** 2)
    for s in range(1, mu + 1):
        a = cmath.exp(2j * cmath.pi * s / mu) / base
        if abs((a * other) ** mu - 1) <= max(tolerance, 1e-8):
            out.append(a)
    return out
