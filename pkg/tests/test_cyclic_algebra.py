import random

import pytest

from normtower.cyclic_algebra import (
    FiniteField,
    FiniteFieldTower,
    algebra_element,
    ca_add,
    ca_mul,
    ca_one,
    ca_pow,
    ca_scalar,
    ca_sub,
    ca_u,
    field_det,
    find_irreducible,
    index_ladder,
    is_invertible,
    regular_representation,
    restriction_consistency,
    solve_norm,
    split_certificate,
)
from normtower.errors import InternalCheckError


def test_lex_least_moduli_frozen():
    # coefficients ascending: x^2+1, x^3+x+1, x^2+2
    assert find_irreducible(3, 2) == (1, 0, 1)
    assert find_irreducible(2, 3) == (1, 1, 0, 1)
    assert find_irreducible(5, 2) == (2, 0, 1)


def test_field_arithmetic_basics():
    f9 = FiniteField(3, 2)
    assert f9.order == 9
    # x * x = -1 = 2 with modulus x^2 + 1; x encodes as 3
    assert f9.mul(3, 3) == 2
    for a in range(1, 9):
        assert f9.mul(a, f9.inv(a)) == 1
    rng = random.Random(14)
    for _ in range(50):
        a, b = rng.randrange(9), rng.randrange(9)
        assert f9.frobenius(f9.add(a, b)) == f9.add(f9.frobenius(a), f9.frobenius(b))
        assert f9.frobenius(f9.mul(a, b)) == f9.mul(f9.frobenius(a), f9.frobenius(b))


def test_tower_tau_and_base():
    tower = FiniteFieldTower(2, 1, 3)  # F_8 over F_2
    for e in range(8):
        assert tower.tau(e, 3) == e  # tau has order r
    assert tower.base_elements() == [0, 1]
    t32 = FiniteFieldTower(3, 1, 2)
    assert t32.base_elements() == [0, 1, 2]
    with pytest.raises(ValueError):
        FiniteFieldTower(3, 1, 1)


def test_norm_values():
    tower = FiniteFieldTower(3, 1, 2)
    # N(1 + x) = (1+x)(1-x) = 1 - x^2 = 2 with x^2 = -1
    assert tower.norm(4) == 2
    # base elements have norm b^r
    f = tower.field
    for b in (1, 2):
        assert tower.norm(b) == f.pow(b, 2)
    # norm lands in the base and is surjective onto units here
    norms = {tower.norm(e) for e in range(1, 9)}
    assert norms == {1, 2}


def test_solve_norm_frozen_and_roundtrip():
    tower = FiniteFieldTower(3, 1, 2)
    assert solve_norm(tower, 2) == 4
    for tower in (
        FiniteFieldTower(3, 1, 2),
        FiniteFieldTower(2, 1, 3),
        FiniteFieldTower(5, 1, 2),
    ):
        for b in tower.base_elements():
            if b == 0:
                continue
            w = solve_norm(tower, b)
            assert tower.norm(w) == b


def test_u_relations():
    tower = FiniteFieldTower(3, 1, 2)
    for b in (1, 2):
        u = ca_u(tower, b)
        # u^r equals the scalar b
        assert ca_pow(u, 2) == ca_scalar(tower, b, b)
        # u c = tau(c) u for every scalar c
        for c in range(1, 9):
            left = ca_mul(u, ca_scalar(tower, b, c))
            right = ca_mul(ca_scalar(tower, b, tower.tau(c)), u)
            assert left == right


def test_associativity_and_distributivity_random():
    rng = random.Random(99)
    for l, d, r in ((3, 1, 2), (2, 1, 3)):
        tower = FiniteFieldTower(l, d, r)
        span = tower.field.order
        for _ in range(100):
            b = rng.choice([e for e in tower.base_elements() if e])
            x, y, z = (
                algebra_element(tower, b, [rng.randrange(span) for _ in range(r)])
                for _ in range(3)
            )
            assert ca_mul(ca_mul(x, y), z) == ca_mul(x, ca_mul(y, z))
            assert ca_mul(x, ca_add(y, z)) == ca_add(ca_mul(x, y), ca_mul(x, z))


def test_element_validation():
    tower = FiniteFieldTower(3, 1, 2)
    with pytest.raises(ValueError):
        algebra_element(tower, 0, (1, 0))  # b must be a unit
    with pytest.raises(ValueError):
        algebra_element(tower, 3, (1, 0))  # b must lie in the base
    with pytest.raises(ValueError):
        algebra_element(tower, 2, (1, 0, 0))  # wrong coefficient count


def test_regular_representation_multiplicative():
    rng = random.Random(41)
    tower = FiniteFieldTower(3, 1, 2)
    f = tower.field
    for _ in range(25):
        b = rng.choice((1, 2))
        x = algebra_element(tower, b, [rng.randrange(9) for _ in range(2)])
        y = algebra_element(tower, b, [rng.randrange(9) for _ in range(2)])
        dx, dy = field_det(f, regular_representation(x)), field_det(
            f, regular_representation(y)
        )
        assert field_det(f, regular_representation(ca_mul(x, y))) == f.mul(dx, dy)
        assert is_invertible(x) == (dx != 0)


def test_split_certificate_properties():
    rng = random.Random(13)
    for l, d, r in ((3, 1, 2), (2, 1, 3), (5, 1, 2)):
        tower = FiniteFieldTower(l, d, r)
        units = [e for e in tower.base_elements() if e]
        for b in units:
            cert = split_certificate(tower, b)
            assert tower.norm(cert.w) == b
            one = ca_one(tower, b)
            assert ca_sub(ca_pow(cert.v, r), one).is_zero()
            assert not cert.z.is_zero()
            assert ca_mul(ca_sub(cert.v, one), cert.z).is_zero()
            assert not is_invertible(cert.z)
        rng.shuffle(units)


def test_index_ladder_identities():
    rows = index_ladder(2, 3)
    assert [row.index for row in rows] == [8, 4, 2]
    assert [row.centralizer_dim for row in rows] == [64, 16, 4]
    assert [row.base_degree for row in rows] == [1, 2, 4]
    assert [row.m for row in rows] == [2, 1, 0]
    with pytest.raises(ValueError):
        index_ladder(6, 2)
    with pytest.raises(ValueError):
        index_ladder(3, 0)


def test_restriction_consistency():
    verdict = restriction_consistency(8, 2, 4)
    assert verdict.q == 4
    assert verdict.consistent
    assert verdict.invariant == 4 % 4
    with pytest.raises(ValueError):
        restriction_consistency(8, 3, 4)
    with pytest.raises(ValueError):
        restriction_consistency(8, 2, 4, q=3)
