import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from flpfactor.divisors import (
    FactorizationIncomplete,
    divisor_lattice,
    enumerate_divisors,
    factor_univariate,
    irreducible_factors,
    multiples_of,
    validate_factors,
)
from flpfactor.polyring import gcd
from support import R, from_sympy, random_poly, to_sympy, z1, z2, z3

SYMS = sympy.symbols("z1 z2 z3")


def _as_set(ps):
    return sorted(str(p.monic()) for p in ps)


def test_factor_examples():
    assert _as_set(irreducible_factors((z1 - 1) * z2)) == _as_set([z1 - 1, z2])
    assert _as_set(irreducible_factors(z1 * z2 * z3)) == _as_set([z1, z2, z3])
    assert irreducible_factors(R.const(7)) == []
    with pytest.raises(ValueError):
        irreducible_factors(z1**2 * z2)


def test_harder_factorizations():
    d = (z1**2 + z2**2) * (z1 * z3 - z2 + 1) * (z3 + 1)
    assert _as_set(irreducible_factors(d)) == _as_set([z1**2 + z2**2, z1 * z3 - z2 + 1, z3 + 1])
    d = (z1**2 * z2**2 - z3**2 * z1**2 + 2) * (z1**2 + z2**2 * z3**2 + z3 + 5)
    assert _as_set(irreducible_factors(d)) == _as_set([
        z1**2 * z2**2 - z3**2 * z1**2 + 2, z1**2 + z2**2 * z3**2 + z3 + 5])


def test_factor_univariate():
    # (x - 2)(x^2 + 1)(2x + 3) with coefficients listed from the constant term up
    poly = sympy.Poly((SYMS[0] - 2) * (SYMS[0] ** 2 + 1) * (2 * SYMS[0] + 3), SYMS[0])
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    got = sorted(map(tuple, factor_univariate(coeffs)))
    assert got == [(-2, 1), (1, 0, 1), (3, 2)]
    assert sorted(map(tuple, factor_univariate([0, sympy.Rational(1, 2), 1]))) == [(0, 1), (1, 2)]


def test_enumerate_examples():
    lat = enumerate_divisors([z1 - 1, z2])
    assert _as_set(lat.divisors) == _as_set([R.one(), z1 - 1, z2, (z1 - 1) * z2])
    assert lat.divisors[0] == R.one()
    lat = enumerate_divisors([z1, z2, z3])
    assert len(lat) == 8 and lat.divisors[-1] == z1 * z2 * z3
    assert enumerate_divisors([], ring=R).divisors == (R.one(),)


def test_multiples_examples():
    lat = enumerate_divisors([z1 - 1, z2])
    assert _as_set(multiples_of(lat, z1 - 1).members) == _as_set([z1 - 1, (z1 - 1) * z2])
    assert multiples_of(lat, R.one()).members == lat.divisors
    assert multiples_of(lat, lat.d).members == (lat.d,)
    with pytest.raises(ValueError):
        multiples_of(lat, z3)


def test_supplied_factors_are_validated():
    d = (z1 - 1) * z2
    assert divisor_lattice(d, [z2, 2 * z1 - 2]).d == d
    with pytest.raises(ValueError):
        validate_factors(d, [z1 - 1])
    with pytest.raises(ValueError):
        validate_factors(d, [z1, z2])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_factors_match_sympy(seed):
    rng = random.Random(seed)
    parts = [random_poly(rng, degree=rng.randint(1, 3), terms=4) for _ in range(rng.randint(1, 4))]
    d = R.one()
    for p in parts:
        d = d * p
    if d.is_constant():
        return
    _, expected = sympy.factor_list(to_sympy(d), *SYMS)
    if any(k > 1 for _, k in expected):
        with pytest.raises(ValueError):
            irreducible_factors(d)
        return
    try:
        ours = irreducible_factors(d)
    except FactorizationIncomplete:
        pytest.fail(f"factorization gave up on {d}")
    assert _as_set(ours) == _as_set(from_sympy(f) for f, _ in expected)


@settings(max_examples=20, deadline=None)
@given(st.lists(st.sampled_from([z1, z2, z3, z1 - 1, z3 + 1, z1 + z2 * z3]), min_size=0, max_size=4, unique=True))
def test_lattice_properties(factors):
    lat = enumerate_divisors(factors, ring=R)
    t = len(factors)
    assert len(lat) == 2**t
    prod = R.one()
    for f in factors:
        prod = prod * f
    assert lat.d == prod.monic()
    for i, f in enumerate(lat.divisors):
        assert f.divides(lat.d)
        assert gcd([f, lat.complement(f)]).is_constant()
        for j, g in enumerate(lat.divisors):
            assert f.divides(g) == (i & j == i)
