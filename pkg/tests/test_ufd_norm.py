import itertools
import random

import pytest

from normtower.errors import (
    InadmissibleSpec,
    InternalCheckError,
    MissingRootOfUnity,
    SearchSpaceTooLarge,
)
from normtower.mvalue import NEG_INF
from normtower.roots import RootOfUnityContent
from normtower.ufd_norm import (
    PolyRing,
    m_from_root_content,
    orbit_norm,
    proposition_check,
    rational_function,
)


def mu(ring, index, power=1):
    """The monomial mu_index^power as an exponent dict."""
    exps = [0] * ring.g
    exps[index] = power
    return {tuple(exps): 1}


def test_ring_validation():
    with pytest.raises(ValueError):
        PolyRing(4, 2, 2)
    with pytest.raises(ValueError):
        PolyRing(3, 3, 2)  # n must divide g
    assert PolyRing(3, 4, 2).step == 2


def test_shift_cycles_variables():
    ring = PolyRing(3, 2, 2)
    f = mu(ring, 0)
    assert ring.shift_poly(f) == mu(ring, 1)
    assert ring.shift_poly(f, 2) == f


def test_orbit_norm_monomial():
    # N(mu_1) = mu_1 mu_2 for two variables swapped by the action
    ring = PolyRing(3, 2, 2)
    w = rational_function(ring, mu(ring, 0), ring.constant(1))
    norm = orbit_norm(w)
    assert norm.num == ring.mul(mu(ring, 0), mu(ring, 1))
    assert norm.den == ring.constant(1)


def test_orbit_norm_of_ratio_is_one():
    ring = PolyRing(3, 2, 2)
    w = rational_function(ring, mu(ring, 0), mu(ring, 1))
    norm = orbit_norm(w)
    assert norm.is_constant() and norm.constant_value() == 1


def test_orbit_norm_of_constant():
    ring = PolyRing(5, 2, 2)
    for c in range(1, 5):
        w = rational_function(ring, ring.constant(c), ring.constant(1))
        assert orbit_norm(w).constant_value() == pow(c, 2, 5)


def test_orbit_norm_is_shift_invariant():
    rng = random.Random(8)
    ring = PolyRing(3, 2, 2)
    monos = ring.monomials_upto(2)
    for _ in range(20):
        num = {m: rng.randrange(3) for m in rng.sample(monos, 3)}
        num = {m: c for m, c in num.items() if c}
        if not num:
            continue
        w = rational_function(ring, num, ring.constant(1))
        norm = orbit_norm(w)
        shifted = ring.shift_poly(norm.num, 1)
        assert ring.freeze(shifted) == ring.freeze(norm.num)


def test_rational_function_normal_form():
    ring = PolyRing(3, 2, 2)
    # mu1^2 mu2 / mu1 cancels monomial content to mu1 mu2
    a = rational_function(ring, ring.mul(mu(ring, 0, 2), mu(ring, 1)), mu(ring, 0))
    b = rational_function(ring, ring.mul(mu(ring, 0), mu(ring, 1)), ring.constant(1))
    assert a == b
    assert hash(a) == hash(b)
    # denominators are normalized monic
    c = rational_function(ring, ring.constant(1), ring.scalar_mul(2, mu(ring, 0)))
    assert c.den == mu(ring, 0)


def test_proposition_frozen_sets():
    r32 = proposition_check(3, 2, 2)
    assert r32.consistent
    assert set(r32.unit_norms) == set(r32.nth_powers) == {1}
    r52 = proposition_check(5, 2, 1)
    assert r52.consistent
    assert set(r52.unit_norms) == {1, 4}
    r33 = proposition_check(3, 3, 1)
    assert r33.consistent
    assert set(r33.unit_norms) == {1, 2}


def test_proposition_agrees_with_naive_enumeration():
    # small enough to enumerate every nonzero numerator/denominator pair
    l, n, deg = 3, 2, 1
    ring = PolyRing(l, n, n)
    monos = ring.monomials_upto(deg)
    polys = []
    for coeffs in itertools.product(range(l), repeat=len(monos)):
        f = {m: c for m, c in zip(monos, coeffs) if c}
        if f:
            polys.append(f)
    seen = set()
    for num in polys:
        for den in polys:
            w = rational_function(ring, num, den)
            value = orbit_norm(w).constant_value()
            if value is not None and value != 0:
                seen.add(value)
    report = proposition_check(l, n, deg)
    assert seen == set(report.unit_norms)


def test_proposition_guards():
    with pytest.raises(SearchSpaceTooLarge):
        proposition_check(11, 2, 1)
    with pytest.raises(SearchSpaceTooLarge):
        proposition_check(3, 2, 3)
    with pytest.raises(SearchSpaceTooLarge):
        proposition_check(3, 2, 2, max_representatives=10)
    with pytest.raises(ValueError):
        proposition_check(3, 2, 1, g=5)  # n must divide g


def test_root_content_normalization():
    assert RootOfUnityContent.cyclotomic(6).value == 3  # Q(xi_6) = Q(xi_3)
    assert RootOfUnityContent.cyclotomic(4).value == 4
    with pytest.raises(ValueError):
        RootOfUnityContent.finite_field(6)
    content = RootOfUnityContent.finite_field(13)
    assert content.max_power(3) == 1  # 3 || 12
    assert content.max_power(2) == 2
    assert RootOfUnityContent.cyclotomic(16).max_power(2) == 4
    assert RootOfUnityContent.cyclotomic(16).max_power(3) == 0


def test_root_content_json_roundtrip():
    for content in (
        RootOfUnityContent.cyclotomic(8),
        RootOfUnityContent.finite_field(13),
    ):
        assert RootOfUnityContent.from_json(content.to_json()) == content


def test_m_from_root_content_chain():
    assert m_from_root_content(RootOfUnityContent.cyclotomic(8), 2, 3) == 0
    assert m_from_root_content(RootOfUnityContent.cyclotomic(16), 2, 3) == NEG_INF
    assert m_from_root_content(RootOfUnityContent.finite_field(13), 3, 2) == 1
    with pytest.raises(MissingRootOfUnity):
        m_from_root_content(RootOfUnityContent.cyclotomic(8), 3, 2)
