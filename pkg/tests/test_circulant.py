import math
import random
from fractions import Fraction

import pytest

from riopsum.circulant import (
    CircMat,
    InvalidPolynomialError,
    PeriodInfo,
    PeriodNotFoundError,
    circulant_of,
    eigenvalues,
    eigenvector,
    evolve_poly,
    identity_like,
    mat_mul,
    mat_power,
    mat_vec,
    matrix_period,
    orbit,
)
from riopsum.exactnum import Cyclo, zeta
from riopsum.series import Poly, poly_eval

F = Fraction


def rat(x):
    return Cyclo(1, [F(x)])


def rpoly(*coeffs):
    return [rat(c) for c in coeffs]


def naive_power(V, k):
    # independent oracle: plain iterated multiplication
    acc = identity_like(V)
    for _ in range(k):
        acc = mat_mul(acc, V)
    return acc


def test_layout_half_polynomial():
    V = circulant_of(rpoly(F(1, 2), F(-1, 2)))
    assert V.rows == (
        (rat(F(-1, 2)), rat(F(1, 2))),
        (rat(F(1, 2)), rat(F(-1, 2))),
    )


def test_layout_constant_and_quadratic():
    assert circulant_of(rpoly(5)).rows == ((rat(5),),)
    a, b, c = rat(2), rat(3), rat(7)
    V = circulant_of([a, b, c])
    assert V.rows == ((c, b, a), (a, c, b), (b, a, c))


def test_invalid_constant_term():
    with pytest.raises(InvalidPolynomialError):
        circulant_of(rpoly(0, 1))


def test_powers_of_half_polynomial():
    V = circulant_of(rpoly(F(1, 2), F(-1, 2)))
    V2 = mat_power(V, 2)
    assert V2.rows == (
        (rat(F(1, 2)), rat(F(-1, 2))),
        (rat(F(-1, 2)), rat(F(1, 2))),
    )
    assert mat_power(V, 3) == V
    assert mat_power(V, 0) == identity_like(V)
    for k in (4, 5, 9):
        assert mat_power(V, k) == naive_power(V, k)


def test_matrix_period_examples():
    V = circulant_of(rpoly(F(1, 2), F(-1, 2)))
    assert matrix_period(V) == PeriodInfo(preperiod=1, period=2)

    V6 = circulant_of(rpoly(F(1, 3), F(-2, 3), F(-2, 3)))
    assert matrix_period(V6) == PeriodInfo(preperiod=0, period=6)

    # p = a(1 + xi^2 t + xi t^2) with a = 1/(3 xi): V^2 = V
    xi = zeta(3)
    a = 1 / (3 * xi)
    V1 = circulant_of([a, a * xi ** 2, a * xi])
    assert matrix_period(V1) == PeriodInfo(preperiod=1, period=1)


def test_matrix_period_minimality_witness():
    # recompute the power list and confirm no smaller (preperiod, period) verifies
    V = circulant_of(rpoly(F(1, 3), F(-2, 3), F(-2, 3)))
    info = matrix_period(V)
    powers = [naive_power(V, k) for k in range(info.preperiod + 2 * info.period + 1)]
    assert powers[info.preperiod + info.period] == powers[info.preperiod]
    for mu in range(1, info.period):
        assert powers[info.preperiod + mu] != powers[info.preperiod]


def test_matrix_period_budget_error():
    V = circulant_of(rpoly(1, -2))  # spectral radius above 1: no period
    with pytest.raises(PeriodNotFoundError):
        matrix_period(V, max_steps=40)


def test_orbit_examples():
    V = circulant_of(rpoly(F(1, 2), F(-1, 2)))
    x0 = (rat(0), rat(1))
    states, info = orbit(V, x0)
    assert states == [
        (rat(0), rat(1)),
        (rat(F(1, 2)), rat(F(-1, 2))),
        (rat(F(-1, 2)), rat(F(1, 2))),
    ]
    assert info == PeriodInfo(preperiod=1, period=2)

    I = identity_like(V)
    states, info = orbit(I, x0)
    assert states == [x0]
    assert info == PeriodInfo(preperiod=0, period=1)

    V6 = circulant_of(rpoly(F(1, 3), F(-2, 3), F(-2, 3)))
    states, info = orbit(V6, (rat(0), rat(0), rat(1)))
    assert len(states) == 6
    assert info == PeriodInfo(preperiod=0, period=6)


def test_eigenvalue_relation():
    rng = random.Random(31)
    for d in range(1, 7):
        coeffs = [rat(rng.randint(1, 3))] + [rat(rng.randint(-3, 3)) for _ in range(d)]
        V = circulant_of(coeffs)
        lams = eigenvalues(V)
        for l in range(1, d + 2):
            v = eigenvector(d + 1, l)
            lhs = mat_vec(V, v)
            lam = lams[l - 1]
            assert all(x == lam * y for x, y in zip(lhs, v))


def test_eigenvalues_quadratic_match_statement():
    a, b, c = rat(2), rat(-3), rat(5)
    xi = zeta(3)
    lams = eigenvalues(circulant_of([a, b, c]))
    expected = [a + b + c, a * xi ** 2 + b * xi + c, a * xi + b * xi ** 2 + c]
    for lam in lams:
        assert any(lam == e for e in expected)
    assert lams[2] == a + b + c  # l = d+1 slot carries p(1)


def test_eigenvalues_degree_family():
    # p = a((d-1) - 2t - ... - 2t^d) with a = 1/(d+1)
    for d in (2, 3, 4, 5):
        a = F(1, d + 1)
        coeffs = rpoly(a * (d - 1), *([-2 * a] * d))
        lams = eigenvalues(circulant_of(coeffs))
        assert lams[d] == -1
        for l in range(1, d + 1):
            assert zeta(d + 1, l) * lams[l - 1] == 1


def test_determinant_equals_eigenvalue_product():
    def det(M):
        n = M.dim
        if n == 1:
            return M.rows[0][0]
        acc = None
        for j in range(n):
            minor = CircMat(tuple(r[:j] + r[j + 1:] for r in M.rows[1:]))
            term = M.rows[0][j] * det(minor)
            if j % 2:
                term = -term
            acc = term if acc is None else acc + term
        return acc

    rng = random.Random(17)
    for d in range(1, 5):
        coeffs = [rat(rng.randint(1, 3))] + [rat(rng.randint(-2, 2)) for _ in range(d)]
        V = circulant_of(coeffs)
        lams = eigenvalues(V)
        prod = lams[0]
        for lam in lams[1:]:
            prod = prod * lam
        assert det(V) == prod


def test_power_preserves_circulant_structure():
    V = circulant_of(rpoly(F(1, 3), F(-2, 3), F(-2, 3)))
    for k in (2, 3, 5):
        W = mat_power(V, k)
        for i in range(1, W.dim):
            prev = W.rows[i - 1]
            assert W.rows[i] == (prev[-1],) + prev[:-1]


def test_evolve_poly():
    p = rpoly(F(1, 2), F(-1, 2))
    assert evolve_poly(p, 0) == Poly(p)
    rng = random.Random(3)
    for _ in range(5):
        d = rng.randint(1, 3)
        coeffs = [rat(rng.randint(1, 2))] + [rat(rng.randint(-2, 2)) for _ in range(d)]
        total = coeffs[0]
        for c in coeffs[1:]:
            total = total + c
        for k in range(0, 21, 5):
            pk = evolve_poly(coeffs, k)
            assert poly_eval(pk, Cyclo.one()) == total ** (k + 1)
    # p = a(1-t)(1+(r+1)t) has coefficient sum zero, so every iterate does too
    a, r = F(2, 5), F(3)
    p0 = rpoly(a, a * r, -a * (1 + r))
    for k in range(6):
        assert poly_eval(evolve_poly(p0, k), Cyclo.one()).is_zero()


def test_float_mode_period():
    V = circulant_of([0.5 + 0j, -0.5 + 0j])
    assert matrix_period(V) == PeriodInfo(preperiod=1, period=2)
    states, info = orbit(V, (0j, 1 + 0j))
    assert info == PeriodInfo(preperiod=1, period=2)
