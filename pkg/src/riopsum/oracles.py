"""Closed-form identities used as independent cross-checks of series extraction.

Each pair function returns (expansion value, closed form) computed by two
routes that share no code path; the verify suites compare them and report.
The exact route keeps everything inside Q(zeta_12), where sqrt(3), the sixth
root of unity, and the needed sine values all live.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import Cyclo, format_scalar, zeta
from .riordan import PolySpec, partial_sum_column, partial_sums
from .series import Fps, Poly, coeff_of, fps_expand_rational, poly_mul, poly_pow

F = Fraction


def _as_cyclo(x) -> Cyclo:
    if isinstance(x, Cyclo):
        return x
    return Cyclo(1, [F(x)])


def _q(x) -> Cyclo:
    return Cyclo(1, [F(x)])


def _imag_part(x: Cyclo) -> Cyclo:
    # Im(x) as an exact field element: (x - conj(x)) / (2i), i = zeta_12^3
    return (x - x.conjugate()) * (-zeta(12, 3)) / 2


def b0_coeff_identity(k: int) -> tuple[Cyclo, Cyclo]:
    """Both sides of the coefficient identity behind the p = a(1-t^2) family.

    lhs = [t^(2k-3)] (1-t^2)^(k-2) (1+t)^2 / (1+t+t^2), by expansion;
    rhs = Im((2 eta / sqrt 3)(xi - 1)^(k-2)) computed exactly in Q(zeta_12).
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    numer = poly_mul(poly_pow(Poly([_q(1), _q(0), _q(-1)]), k - 2), Poly([_q(1), _q(2), _q(1)]))
    f = fps_expand_rational(numer, Poly([_q(1), _q(1), _q(1)]), 2 * k - 2)
    lhs = coeff_of(f, 2 * k - 3)
    eta = zeta(6)
    xi = zeta(3)
    sqrt3 = zeta(12) + zeta(12, 11)
    rhs = _imag_part(2 * eta / sqrt3 * (xi - 1) ** (k - 2))
    return lhs, rhs


def rank_one_coeff_identity(k: int, i: int, variant: str = "a") -> tuple[Cyclo, Cyclo]:
    """Both sides of the coefficient identities behind the rank-one families.

    Variant "a": [t^(2k-i)] (1-t)^(k-2)(1-xi t)^(k-1)/(1-xi^2 t)
                 against 3^(k-2) (xi-1) xi^(k+i-1);
    variant "b": [t^(2k-i)] (1-t)^(k-2)(1-xi^2 t)^(k-1)/(1-xi t)
                 against 3^(k-2) (1-xi) xi^(2k-i).
    Valid for i in 0..3; i = 4 is the documented failure boundary.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if i < 0 or 2 * k - i < 0:
        raise ValueError("need 0 <= i <= 2k")
    xi = zeta(3)
    one = Cyclo.one(3)
    if variant == "a":
        numer = poly_mul(poly_pow(Poly([one, -one]), k - 2), poly_pow(Poly([one, -xi]), k - 1))
        denom = Poly([one, -(xi ** 2)])
        rhs = _q(3) ** (k - 2) * (xi - 1) * xi ** (k + i - 1)
    elif variant == "b":
        numer = poly_mul(poly_pow(Poly([one, -one]), k - 2), poly_pow(Poly([one, -(xi ** 2)]), k - 1))
        denom = Poly([one, -xi])
        rhs = _q(3) ** (k - 2) * (1 - xi) * xi ** (2 * k - i)
    else:
        raise ValueError(f"variant must be 'a' or 'b', got {variant!r}")
    f = fps_expand_rational(numer, denom, 2 * k - i + 1)
    return coeff_of(f, 2 * k - i), rhs


def linear_psum_sum(a, b, k: int):
    """Binomial formula for the k-th column partial sum of a + bt.

    sum_{n=0}^{k-2} C(k,n) floor((k-n)/2) b^n a^(k-n); empty for k = 1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    a, b = _as_cyclo(a), _as_cyclo(b)
    total = Cyclo.zero()
    for n in range(0, k - 1):
        w = math.comb(k, n) * ((k - n) // 2)
        total = total + w * b ** n * a ** (k - n)
    return total


def binomial_transform_pair(k: int) -> tuple[Fraction, Fraction]:
    """Alternating binomial transform of floor((k-n)/2) against (-2)^(k-2)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    lhs = sum(F((-1) ** n * math.comb(k, n) * ((k - n) // 2)) for n in range(k + 1))
    return lhs, F((-2) ** (k - 2))


def linear_psum_gf(a, b, n_terms: int) -> Fps:
    """Expansion of a^2/((1+(a-b)t)(1-(a+b)t)^2); term j equals S_[j+2]."""
    a, b = _as_cyclo(a), _as_cyclo(b)
    one = Cyclo.one()
    denom = poly_mul(Poly([one, a - b]), poly_pow(Poly([one, -(a + b)]), 2))
    return fps_expand_rational(Poly([a * a]), denom, n_terms)


def b0_psum_gf(a, n_terms: int) -> Fps:
    """Expansion of a^2(1+2ax)/(1+3ax+3a^2 x^2); term j equals S_[j+2] for a(1-t^2)."""
    if isinstance(a, complex):
        numer = Poly([a * a, 2 * a ** 3])
        denom = Poly([1 + 0j, 3 * a, 3 * a * a])
        return fps_expand_rational(numer, denom, n_terms)
    a = _as_cyclo(a)
    one = Cyclo.one()
    numer = Poly([a * a, 2 * a ** 3])
    denom = Poly([one, 3 * a, 3 * a * a])
    return fps_expand_rational(numer, denom, n_terms)


def b0_sine_term(a, k: int):
    """The sine closed form for S_[k] of p = a(1-t^2), sign-corrected.

    S_[k] = 2 a^k (-sqrt 3)^(k-3) sin((k-4) pi/6); exact in Q(zeta_12) for
    exact a, float otherwise.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if isinstance(a, complex):
        return 2 * a ** k * (-math.sqrt(3.0)) ** (k - 3) * math.sin((k - 4) * math.pi / 6)
    a = _as_cyclo(a)
    sqrt3 = zeta(12) + zeta(12, 11)
    sin_term = _imag_part(zeta(12, (k - 4) % 12))
    return 2 * a ** k * (-sqrt3) ** (k - 3) * sin_term


# -- suite running ---------------------------------------------------------


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one oracle suite run."""

    identity: str
    parameters: str
    checked: int
    verdict: str  # "pass" | "fail"
    first_mismatch: str | None = None
    samples: tuple = ()

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def _fmt(x) -> str:
    if isinstance(x, Cyclo):
        return format_scalar(x)
    return repr(x)


def _run_pairs(identity: str, parameters: str, pairs) -> IdentityReport:
    checked = 0
    samples = []
    for label, lhs, rhs in pairs:
        checked += 1
        if len(samples) < 6:
            samples.append((label, _fmt(lhs), _fmt(rhs)))
        ok = abs(lhs - rhs) <= 1e-9 if isinstance(lhs, complex) else lhs == rhs
        if not ok:
            return IdentityReport(
                identity,
                parameters,
                checked,
                "fail",
                first_mismatch=f"{label}: {_fmt(lhs)} != {_fmt(rhs)}",
                samples=tuple(samples),
            )
    return IdentityReport(identity, parameters, checked, "pass", samples=tuple(samples))


def suite_b0_identity(kmax: int = 30, seed: int = 0) -> IdentityReport:
    pairs = ((f"k={k}", *b0_coeff_identity(k)) for k in range(2, kmax + 1))
    return _run_pairs("b0-identity", f"2 <= k <= {kmax}", pairs)


def suite_rank_one_identity(kmax: int = 30, seed: int = 0) -> IdentityReport:
    def pairs():
        for k in range(2, kmax + 1):
            for i in range(4):
                for variant in ("a", "b"):
                    lhs, rhs = rank_one_coeff_identity(k, i, variant)
                    yield f"k={k},i={i},{variant}", lhs, rhs
        # boundary: at k=3, i=4 the variant-a expansion leaves the pattern
        lhs, rhs = rank_one_coeff_identity(3, 4, "a")
        xi = zeta(3)
        expected = 3 * xi - 2
        yield "boundary k=3,i=4 equals 3*xi - 2", lhs, expected
        yield "boundary stays off the pattern", _q(0), _q(0) if lhs != rhs else _q(1)
    return _run_pairs("rank-one-identity", f"2 <= k <= {kmax}, 0 <= i <= 3, both variants", pairs())


def _sample_linear_pairs(seed: int):
    rng = random.Random(seed)
    fixed = [
        (_q(F(1, 2)), _q(F(-1, 2))),
        (_q(1), _q(-1)),
        (-zeta(14, 3) / 2, zeta(14, 3) / 2),
        (zeta(6) / 2, zeta(6, 5) / 3),
    ]
    for _ in range(4):
        a = _q(F(rng.randint(1, 4), rng.randint(1, 3)))
        b = _q(F(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3)))
        fixed.append((a, b))
    return fixed


def suite_linear_sum(kmax: int = 25, seed: int = 0) -> IdentityReport:
    def pairs():
        for idx, (a, b) in enumerate(_sample_linear_pairs(seed)):
            p = PolySpec((a, b))
            sums = partial_sums(p, kmax)
            for k in range(1, kmax + 1):
                yield f"pair{idx},k={k}", linear_psum_sum(a, b, k), sums[k - 1]
    return _run_pairs("linear-sum", f"1 <= k <= {kmax}, sampled (a, b), seed={seed}", pairs())


def suite_binomial_transform(kmax: int = 30, seed: int = 0) -> IdentityReport:
    pairs = ((f"k={k}", *binomial_transform_pair(k)) for k in range(2, kmax + 1))
    return _run_pairs("binomial-transform", f"2 <= k <= {kmax}", pairs)


def suite_linear_gf(kmax: int = 20, seed: int = 0) -> IdentityReport:
    def pairs():
        for idx, (a, b) in enumerate(_sample_linear_pairs(seed)):
            p = PolySpec((a, b))
            sums = partial_sums(p, kmax + 2)
            f = linear_psum_gf(a, b, kmax)
            for j in range(kmax):
                yield f"pair{idx},term{j}", coeff_of(f, j), sums[j + 1]
    return _run_pairs("linear-gf", f"{kmax} terms, sampled (a, b), seed={seed}", pairs())


def suite_b0_gf(kmax: int = 24, seed: int = 0) -> IdentityReport:
    def pairs():
        # exact: expansion against series extraction for p = (1 - t^2)/3
        a = _q(F(1, 3))
        p = PolySpec((a, Cyclo.zero(), -a))
        sums = partial_sums(p, kmax + 2)
        f = b0_psum_gf(a, kmax)
        for j in range(kmax):
            yield f"exact a=1/3, term{j}", coeff_of(f, j), sums[j + 1]
        # exact: expansion against the sine closed form for a unit-size a
        xi = zeta(3)
        unit_a = (xi - 1).inverse() * zeta(6)
        fu = b0_psum_gf(unit_a, kmax)
        for j in range(kmax):
            yield f"unit a, term{j}", coeff_of(fu, j), b0_sine_term(unit_a, j + 2)
        # float: |a sqrt 3| = 1 against the sine closed form
        fa = 1 / math.sqrt(3.0) + 0j
        ff = b0_psum_gf(fa, kmax)
        for j in range(kmax):
            yield f"float a=1/sqrt3, term{j}", coeff_of(ff, j), complex(b0_sine_term(fa, j + 2))
    return _run_pairs("b0-gf", f"{kmax} terms, exact and float scales", pairs())


SUITES = {
    "b0-identity": suite_b0_identity,
    "rank-one-identity": suite_rank_one_identity,
    "linear-sum": suite_linear_sum,
    "binomial-transform": suite_binomial_transform,
    "linear-gf": suite_linear_gf,
    "b0-gf": suite_b0_gf,
}


def run_suite(name: str, kmax: int | None = None, seed: int = 0) -> list[IdentityReport]:
    """Run one named suite, or all of them."""
    if name == "all":
        return [fn() if kmax is None else fn(kmax, seed) for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    fn = SUITES[name]
    return [fn() if kmax is None else fn(kmax, seed)]
