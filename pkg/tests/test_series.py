import random
from fractions import Fraction

import pytest

from riopsum.exactnum import Cyclo, zeta
from riopsum.series import (
    ExpansionError,
    Fps,
    Poly,
    TruncationExceededError,
    coeff_of,
    fps_expand_rational,
    poly_eval,
    poly_mul,
    poly_pow,
)

F = Fraction


def cpoly(*rat_coeffs):
    return Poly([Cyclo(1, [F(c)]) for c in rat_coeffs])


def test_poly_normalization():
    assert Poly([1, 2, 0, 0]).degree == 1
    assert Poly([0, 0]).is_zero()
    assert Poly([]).degree == -1


def test_poly_mul_pow_eval():
    p = Poly([1, 1])
    assert poly_mul(p, p) == Poly([1, 2, 1])
    assert poly_pow(p, 0) == Poly([1])
    assert poly_pow(p, 3) == Poly([1, 3, 3, 1])
    assert poly_eval(Poly([2, 0, 1]), 3) == 11


def test_poly_eval_root_at_one():
    # a(1 + rt - (1+r)t^2) always vanishes at t = 1
    a, r = F(3, 7), F(5, 2)
    p = cpoly(a, a * r, -a * (1 + r))
    assert poly_eval(p, Cyclo.one()).is_zero()


def test_cube_factorization():
    # (1-t)(1-xi t)(1-xi^2 t) = 1 - t^3 for xi of order 3
    xi = zeta(3)
    one = Cyclo.one(3)
    p = poly_mul(
        poly_mul(Poly([one, -one]), Poly([one, -xi])),
        Poly([one, -(xi ** 2)]),
    )
    assert p == Poly([one, Cyclo.zero(3), Cyclo.zero(3), -one])


def test_geometric_expansion():
    f = fps_expand_rational(Poly([1]), Poly([1, -1]), 5)
    assert f.coeffs == (1, 1, 1, 1, 1)
    assert coeff_of(f, 4) == 1


def test_periodic_block_expansion():
    # (1 + xi t + xi^2 t^2)/(1 - t^3) repeats 1, xi, xi^2 and equals 1/(1 - xi t)
    xi = zeta(3)
    one = Cyclo.one(3)
    zero = Cyclo.zero(3)
    numer = Poly([one, xi, xi ** 2])
    denom = Poly([one, zero, zero, -one])
    f = fps_expand_rational(numer, denom, 6)
    assert list(f.coeffs) == [one, xi, xi ** 2, one, xi, xi ** 2]
    g = fps_expand_rational(Poly([one]), Poly([one, -xi]), 6)
    assert f == g


def test_half_alternating_block():
    # p(t)/(1 - t^2) for p = 1/2 - t/2 repeats the block {1/2, -1/2}
    h = F(1, 2)
    f = fps_expand_rational(cpoly(h, -h), cpoly(1, 0, -1), 6)
    expect = [Cyclo(1, [h]), Cyclo(1, [-h])] * 3
    assert list(f.coeffs) == expect


def test_expansion_requires_unit_constant_term():
    with pytest.raises(ExpansionError):
        fps_expand_rational(Poly([1]), Poly([0, 1]), 4)
    with pytest.raises(ExpansionError):
        fps_expand_rational(Poly([1]), Poly([]), 4)


def test_truncation_errors():
    f = fps_expand_rational(Poly([1]), Poly([1, -1]), 3)
    with pytest.raises(TruncationExceededError):
        coeff_of(f, 3)
    with pytest.raises(IndexError):
        coeff_of(f, -1)


def test_cancellation_property():
    # expand(P*Q, Q) == expand(P, 1) truncated, for random small P, Q with Q(0) != 0
    rng = random.Random(11)
    for _ in range(20):
        p = cpoly(*[rng.randint(-3, 3) for _ in range(rng.randint(1, 4))])
        q = cpoly(rng.choice([1, -1, 2]), *[rng.randint(-3, 3) for _ in range(rng.randint(0, 3))])
        n = 8
        lhs = fps_expand_rational(poly_mul(p, q), q, n)
        rhs = fps_expand_rational(p, Poly([Cyclo.one()]), n)
        assert lhs == rhs


def test_convolution_law():
    rng = random.Random(13)
    for _ in range(10):
        fn = [F(rng.randint(-3, 3)) for _ in range(6)]
        gn = [F(rng.randint(-3, 3)) for _ in range(6)]
        f = fps_expand_rational(Poly(fn), Poly([F(1)]), 6)
        g = fps_expand_rational(Poly(gn), Poly([F(1)]), 6)
        prod = fps_expand_rational(poly_mul(Poly(fn), Poly(gn)), Poly([F(1)]), 6)
        for n in range(6):
            conv = sum(coeff_of(f, i) * coeff_of(g, n - i) for i in range(n + 1))
            assert coeff_of(prod, n) == conv


def test_float_mode_matches_exact():
    # same rational function expanded in both domains
    xi = zeta(3)
    numer = Poly([Cyclo.one(3), xi])
    denom = Poly([Cyclo.one(3), Cyclo.zero(3), -(xi ** 2)])
    exact = fps_expand_rational(numer, denom, 50)
    fnumer = Poly([c.to_complex() for c in numer.coeffs])
    fdenom = Poly([c.to_complex() for c in denom.coeffs])
    approx = fps_expand_rational(fnumer, fdenom, 50)
    for a, b in zip(exact.coeffs, approx.coeffs):
        assert abs(a.to_complex() - b) < 1e-9


def test_lemma_style_zero_coefficient():
    # [t^{2k-3}] of (1-t^2)^{k-2}(1+t)^2/(1+t+t^2) vanishes at k = 4
    k = 4
    num = poly_mul(poly_pow(cpoly(1, 0, -1), k - 2), cpoly(1, 2, 1))
    f = fps_expand_rational(num, cpoly(1, 1, 1), 2 * k - 2)
    assert coeff_of(f, 2 * k - 3).is_zero()
