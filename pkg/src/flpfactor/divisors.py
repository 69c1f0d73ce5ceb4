"""Factorization of square-free polynomials over Q and their divisor lattices.

Contents in each variable are split off first; a primitive part of degree
one in some variable is irreducible.  What remains goes through Kronecker
substitution: ``z_i -> x^(D^i)`` maps it to one variable, the image is
factored over the integers (:mod:`flpfactor.unifactor`), and products of
image factors are mapped back and tested by exact division.  Exceeding the
search bounds raises :class:`FactorizationIncomplete` rather than returning
a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Sequence

from .polyring import Polynomial, divrem, gcd, is_squarefree
from .unifactor import RecombinationTooLarge, factor_integer_poly, zmul

MAX_RECOMBINE = 24
MAX_KRONECKER_TRIALS = 2_000_000


class FactorizationIncomplete(RuntimeError):
    """The bounded factorization search gave up."""


# -- univariate -----------------------------------------------------------


def factor_univariate(a: Sequence[int]) -> list:
    """Irreducible factors over Z of a rational polynomial (low degree first), with multiplicity.

    Kronecker images of square-free polynomials need not be square-free, so
    repeated factors are returned as often as they occur.
    """
    try:
        return factor_integer_poly(_integral(a))
    except RecombinationTooLarge as exc:
        raise FactorizationIncomplete(str(exc)) from None


# -- multivariate -------------------------------------------------------


def _kronecker_image(p: Polynomial, used: Sequence[int], base: int) -> list:
    """Image under ``z_used[j] -> x^(base^j)``; other variables must be absent."""
    out: dict = {}
    for e, c in p.terms.items():
        k = sum(e[v] * base**j for j, v in enumerate(used))
        out[k] = out.get(k, 0) + c
    return [out.get(i, 0) for i in range(max(out) + 1)]


def _kronecker_preimage(a: Sequence, used: Sequence[int], base: int, ring) -> Polynomial | None:
    terms = {}
    for k, c in enumerate(a):
        if not c:
            continue
        e = [0] * ring.nvars
        for v in used:
            e[v] = k % base
            k //= base
        if k:
            return None
        terms[tuple(e)] = Fraction(c)
    return Polynomial(ring, terms)


_PROBE = (7, -3, 11, 5, -13, 2, 17, -19)


def _probe_value(a: Sequence[int], used: Sequence[int], base: int):
    """Value of the preimage of ``a`` at a fixed integer point, or None if ``a`` has no preimage."""
    total = 0
    for k, c in enumerate(a):
        if not c:
            continue
        term = c
        for j in range(len(used)):
            term *= _PROBE[j % len(_PROBE)] ** (k % base)
            k //= base
        if k:
            return None
        total += term
    return total


def _monomial_content(p: Polynomial) -> list:
    return [min(e[i] for e in p.terms) for i in range(p.ring.nvars)]


def _content_in(p: Polynomial, i: int) -> Polynomial:
    """gcd of the coefficients of ``p`` viewed as a polynomial in variable ``i``."""
    groups: dict = {}
    for e, c in p.terms.items():
        k = e[i]
        e2 = e[:i] + (0,) + e[i + 1:]
        groups.setdefault(k, {})[e2] = c
    return gcd([Polynomial(p.ring, g) for g in groups.values()])


def _split_by_content(c: Polynomial, factors: list, hard: list):
    """Peel off per-variable contents; primitive parts of degree 1 in some variable are irreducible."""
    if c.is_constant():
        return
    if c.total_degree() == 1:
        factors.append(c.monic())
        return
    mono = _monomial_content(c)
    if any(mono):
        for i, k in enumerate(mono):
            factors.extend([c.ring.gen(i)] * k)
        _split_by_content(c.exquo(c.ring.monomial(mono)), factors, hard)
        return
    degs = c.degrees()
    for i in sorted(range(len(degs)), key=lambda i: degs[i]):
        if degs[i] <= 0:
            continue
        cont = _content_in(c, i)
        if not cont.is_constant():
            _split_by_content(cont, factors, hard)
            _split_by_content(c.exquo(cont), factors, hard)
            return
    if 1 in degs:
        factors.append(c.monic())
        return
    hard.append(c.monic())


def _digits_fit(k: int, base: int, bounds: Sequence[int]) -> bool:
    for b in bounds:
        if k % base > b:
            return False
        k //= base
    return k == 0


def _integral(a: Sequence) -> list:
    den = lcm(*(Fraction(c).denominator for c in a))
    return [int(Fraction(c) * den) for c in a]


class _ImageFactor:
    __slots__ = ("coeffs", "deg", "val", "lc", "tc")

    def __init__(self, coeffs):
        self.coeffs = coeffs
        self.deg = len(coeffs) - 1
        self.val = next(i for i, c in enumerate(coeffs) if c)
        self.lc = coeffs[-1]
        self.tc = coeffs[self.val]


def _kronecker_split(c: Polynomial) -> list:
    degs = c.degrees()
    used = [i for i, k in enumerate(degs) if k]
    base = 1 + max(degs)
    image = _kronecker_image(c, used, base)
    uf = [_ImageFactor(f) for f in factor_univariate(image)]
    if len(uf) > MAX_RECOMBINE:
        raise FactorizationIncomplete(f"{len(uf)} univariate factors to recombine")
    out = []
    remaining = list(range(len(uf)))
    cur = c
    trials = 0
    size = 1
    while 2 * size <= len(remaining):
        cur_degs = [cur.degree_in(v) for v in used]
        whole_coeffs = _integral(_kronecker_image(cur, used, base))
        whole = _ImageFactor(whole_coeffs)
        whole_value = _probe_value(whole_coeffs, used, base)
        found = False
        for subset in combinations(remaining, size):
            trials += 1
            if trials > MAX_KRONECKER_TRIALS:
                raise FactorizationIncomplete("Kronecker recombination bound exceeded")
            # cheap necessary conditions before building the product
            if not _digits_fit(sum(uf[i].deg for i in subset), base, cur_degs):
                continue
            if not _digits_fit(sum(uf[i].val for i in subset), base, cur_degs):
                continue
            lc = tc = 1
            for i in subset:
                lc *= uf[i].lc
                tc *= uf[i].tc
            if whole.lc % lc or whole.tc % tc:
                continue
            img = [1]
            for i in subset:
                img = zmul(img, uf[i].coeffs)
            # a primitive integer factor's value divides the value of the integral multiple
            value = _probe_value(img, used, base)
            if value is None or (value and whole_value % value):
                continue
            cand = _kronecker_preimage(img, used, base, cur.ring)
            if cand is None or cand.is_constant():
                continue
            (q,), r = divrem(cur, [cand])
            if r:
                continue
            out.append(cand.monic())
            cur = q.monic()
            remaining = [i for i in remaining if i not in subset]
            found = True
            break
        if not found:
            size += 1
    if not cur.is_constant():
        out.append(cur.monic())
    return out


def irreducible_factors(d: Polynomial) -> list:
    """Monic irreducible factors over Q of a nonzero square-free polynomial."""
    if not d:
        raise ValueError("cannot factor the zero polynomial")
    ring = d.ring
    if d.is_constant():
        return []
    if not is_squarefree(d):
        raise ValueError(f"{d} is not square-free")
    factors: list = []
    hard: list = []
    _split_by_content(d.monic(), factors, hard)
    for c in hard:
        factors.extend(_kronecker_split(c))
    factors.sort(key=lambda f: [ring._key(e) for e in f.terms], reverse=True)
    check = ring.one()
    for f in factors:
        check = check * f
    if check.monic() != d.monic():
        raise FactorizationIncomplete("factor product does not reproduce the input")
    return factors


def validate_factors(d: Polynomial, factors: Sequence[Polynomial]) -> list:
    """Check user-supplied factors: product equals ``d`` up to a constant, each divides exactly."""
    ring = d.ring
    prod = ring.one()
    out = []
    for f in factors:
        if f.is_constant():
            continue
        if not f.divides(d):
            raise ValueError(f"supplied factor {f} does not divide {d}")
        prod = prod * f
        out.append(f.monic())
    if prod.monic() != d.monic():
        raise ValueError("supplied factors do not multiply to d_r")
    for i, f in enumerate(out):
        for g in out[i + 1:]:
            if f == g:
                raise ValueError(f"repeated factor {f}")
    return out


@dataclass(frozen=True)
class DivisorLattice:
    """The ``2^t`` divisors of a square-free ``d``, in subset-bitmask order."""

    d: Polynomial
    factors: tuple
    divisors: tuple

    def __len__(self):
        return len(self.divisors)

    def index(self, f: Polynomial) -> int:
        fm = f.monic()
        for i, g in enumerate(self.divisors):
            if g == fm:
                return i
        raise ValueError(f"{f} is not a divisor in the lattice")

    def complement(self, f: Polynomial) -> Polynomial:
        """``d / f``."""
        return self.divisors[(len(self.divisors) - 1) ^ self.index(f)]


def enumerate_divisors(factors: Sequence[Polynomial], ring=None) -> DivisorLattice:
    factors = tuple(f.monic() for f in factors)
    if ring is None:
        if not factors:
            raise ValueError("ring is required for an empty factor list")
        ring = factors[0].ring
    divs = []
    for mask in range(1 << len(factors)):
        p = ring.one()
        for i, f in enumerate(factors):
            if mask >> i & 1:
                p = p * f
        divs.append(p.monic())
    return DivisorLattice(divs[-1], factors, tuple(divs))


@dataclass(frozen=True)
class MultipleSet:
    base: Polynomial
    members: tuple


def multiples_of(lattice: DivisorLattice, f: Polynomial) -> MultipleSet:
    """All lattice members ``h`` with ``f | h``; bitmask containment."""
    i = lattice.index(f)
    return MultipleSet(lattice.divisors[i], tuple(
        g for j, g in enumerate(lattice.divisors) if j & i == i
    ))


def divisor_lattice(d: Polynomial, factors: Sequence[Polynomial] | None = None) -> DivisorLattice:
    """Factor ``d`` (or validate supplied ``factors``) and enumerate its divisors."""
    if factors is None:
        fs = irreducible_factors(d)
    else:
        fs = validate_factors(d, factors)
    return enumerate_divisors(fs, d.ring)


def coprime(a: Polynomial, b: Polynomial) -> bool:
    return gcd([a, b]).is_constant()
