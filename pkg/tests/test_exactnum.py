import math
import random
from fractions import Fraction

import pytest

from riopsum.exactnum import (
    Cyclo,
    EmbeddingError,
    InvalidOrderError,
    LiteralError,
    cyclotomic_poly,
    divisors,
    euler_phi,
    format_scalar,
    parse_scalar,
    parse_scalar_float,
    zeta,
)

F = Fraction


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert euler_phi(21) == 12
    assert euler_phi(1) == 1


def test_canonicalization():
    # 1 + zeta3 + zeta3^2 = 0
    assert Cyclo(3, [1, 1, 1]).is_zero()
    # zeta4^2 = -1
    assert Cyclo(4, [0, 0, 1]) == -1
    # rational embedding at order 1
    assert Cyclo(1, [F(5, 3)]).as_rational() == F(5, 3)
    # reduction is idempotent: rebuilding from padded coeffs is a fixed point
    x = Cyclo(12, [1, 2, F(1, 3), 0, 0, 7])
    assert Cyclo(12, x.coeffs) == x


def test_canonical_uniqueness_mod_relation():
    # adding (x^N - 1) * q to the raw vector must not change the value
    rng = random.Random(7)
    for _ in range(25):
        order = rng.choice([3, 4, 5, 6, 8, 12])
        raw = [F(rng.randint(-4, 4), rng.randint(1, 5)) for _ in range(order)]
        x = Cyclo(order, raw)
        # append q*(x^order - 1) with a random small q of degree < order
        q = [F(rng.randint(-3, 3)) for _ in range(order)]
        bumped = list(raw) + [F(0)] * order
        for j, qc in enumerate(q):
            bumped[j] -= qc
            bumped[j + order] += qc
        assert Cyclo(order, bumped) == x


def test_invalid_order():
    with pytest.raises(InvalidOrderError):
        Cyclo(0, [1])
    with pytest.raises(InvalidOrderError):
        zeta(-3)
    with pytest.raises(InvalidOrderError):
        zeta(100000)


def test_field_ops_examples():
    assert Cyclo(1, [3]) * Cyclo(1, [F(1, 3)]) == 1
    xi = zeta(3)
    assert xi * xi ** 2 == 1
    assert xi.conjugate() == xi ** 2
    assert xi * xi.conjugate() == 1
    assert (xi - xi) .is_zero()
    assert 1 / xi == xi ** 2
    assert (2 * xi + 1) - (xi + 1) == xi


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        zeta(3).__truediv__(Cyclo.zero(3))
    with pytest.raises(ZeroDivisionError):
        Cyclo.zero(5).inverse()


def test_field_axioms_random():
    rng = random.Random(20240)
    pool_orders = [1, 2, 3, 4, 6, 12]
    for _ in range(40):
        na, nb, nc = (rng.choice(pool_orders) for _ in range(3))
        a = Cyclo(na, [F(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(na)])
        b = Cyclo(nb, [F(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(nb)])
        c = Cyclo(nc, [F(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(nc)])
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inverse() == 1


def test_mixed_order_arithmetic():
    # e^{2pi i/3} * e^{2pi i/4} = e^{2pi i *7/12}
    assert zeta(3) * zeta(4) == zeta(12, 7)
    assert zeta(5) + zeta(10) == zeta(10) + zeta(5)


def test_embed():
    assert zeta(3).embed(6) == zeta(6, 2)
    assert Cyclo.one(1).embed(10) == 1
    assert zeta(5).embed(10) == zeta(10, 2)
    with pytest.raises(EmbeddingError):
        zeta(4).embed(6)
    # embedding preserves equality at the common order
    x = Cyclo(6, [F(1, 2), F(2, 3)])
    assert x.embed(12) == x


def test_root_of_unity_order():
    assert Cyclo(1, [-1]).root_of_unity_order() == 2
    assert zeta(6).root_of_unity_order() == 6
    assert Cyclo(1, [F(1, 2)]).root_of_unity_order() is None
    assert Cyclo.zero(3).root_of_unity_order() is None
    assert (-zeta(3)).root_of_unity_order() == 6


@pytest.mark.parametrize("order", list(range(1, 25)))
def test_root_orders_exhaustive_small(order):
    for j in range(1, order + 1):
        assert zeta(order, j).root_of_unity_order() == order // math.gcd(order, j)


def test_root_orders_sampled_large():
    rng = random.Random(99)
    for _ in range(30):
        order = rng.randint(25, 64)
        j = rng.randint(1, order)
        assert zeta(order, j).root_of_unity_order() == order // math.gcd(order, j)


def test_to_complex():
    xi = zeta(3)
    z = xi.to_complex()
    assert abs(z - complex(-0.5, math.sqrt(3) / 2)) < 1e-14
    assert Cyclo(1, [-1]).to_complex() == -1
    assert Cyclo.zero(4).to_complex() == 0
    rng = random.Random(5)
    for _ in range(30):
        na, nb = rng.choice([2, 3, 4, 6, 8]), rng.choice([3, 5, 12])
        a = Cyclo(na, [F(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(na)])
        b = Cyclo(nb, [F(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(nb)])
        assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9


def test_to_complex_accuracy_at_higher_orders():
    for order in (7, 60, 128, 256):
        for j in (1, order // 2, order - 1):
            got = zeta(order, j).to_complex()
            assert abs(got) == pytest.approx(1.0, abs=1e-12)


def test_real_and_rational_predicates():
    sqrt3 = zeta(12) + zeta(12, 11)
    assert sqrt3.is_real()
    assert not sqrt3.is_rational()
    assert abs(sqrt3.to_complex() - math.sqrt(3)) < 1e-14
    assert not zeta(3).is_real()
    with pytest.raises(ValueError):
        zeta(3).as_rational()


def test_literals_round_trip():
    cases = ["0", "-1/3", "1/2 + 1/2*z^3", "z", "-z^2", "2*z + 5/7", "1 - z"]
    for text in cases:
        x = parse_scalar(text, root_order=6)
        assert parse_scalar(format_scalar(x), root_order=6) == x


def test_literal_examples():
    assert parse_scalar("1, ".strip(" ,"), root_order=3) == 1
    x = parse_scalar("z^2", root_order=3)
    assert x == zeta(3, 2)
    assert parse_scalar("1/3*z^2 + 1/3", root_order=3) == (zeta(3, 2) + 1) / 3


def test_literal_errors():
    with pytest.raises(LiteralError):
        parse_scalar("3z", root_order=3)
    with pytest.raises(LiteralError):
        parse_scalar("", root_order=3)
    with pytest.raises(LiteralError):
        parse_scalar("0.5", root_order=3)
    with pytest.raises(LiteralError):
        parse_scalar("1/", root_order=3)
    assert parse_scalar_float("0.5", 4) == 0.5
    z = parse_scalar_float("2*z", 4)
    assert abs(z - 2j) < 1e-15


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert divisors(13) == [1, 13]


def test_pow_negative():
    xi = zeta(3)
    assert xi ** -1 == xi ** 2
    assert (2 * xi) ** -2 == (zeta(3, 2) / 2) ** 2
