"""Factorization of univariate integer polynomials (Zassenhaus).

Polynomials are dense coefficient lists, lowest degree first.  The pipeline
is the textbook one: square-free split over Z, factor modulo a small prime
by distinct-degree then equal-degree splitting, Hensel-lift the modular
factors past a coefficient bound, and recombine subsets over Z.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import gcd as igcd, isqrt
from typing import Sequence

MAX_SUBSETS = 200_000
_SEED = 7919


class RecombinationTooLarge(RuntimeError):
    pass


# -- integer polynomials --------------------------------------------------


def trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def primitive(a: Sequence[int]) -> list:
    """Divide out the content; leading coefficient made positive."""
    g = 0
    for c in a:
        g = igcd(g, c)
    if g == 0:
        return []
    out = [c // g for c in a]
    if out[-1] < 0:
        out = [-c for c in out]
    return trim(out)


def derivative(a: Sequence[int]) -> list:
    return trim([i * a[i] for i in range(1, len(a))])


def zmul(a: Sequence[int], b: Sequence[int]) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def exact_div(a: Sequence[int], b: Sequence[int]):
    """``a / b`` over Z, or None when ``b`` does not divide ``a`` exactly."""
    a = list(a)
    lb = b[-1]
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c, rem = divmod(a[-1], lb)
        if rem:
            return None
        shift = len(a) - len(b)
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
        a.pop()
        trim(a)
    return None if a else q


def _prem(a: list, b: list) -> list:
    """Pseudo-remainder of ``a`` by ``b``."""
    a = list(a)
    lb = b[-1]
    while len(a) >= len(b) and a:
        la = a[-1]
        shift = len(a) - len(b)
        a = [c * lb for c in a]
        for i, bc in enumerate(b):
            a[i + shift] -= la * bc
        a.pop()
        trim(a)
    return a


def zgcd(a: Sequence[int], b: Sequence[int]) -> list:
    """Primitive gcd via the primitive remainder sequence."""
    a, b = primitive(a), primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, primitive(_prem(a, b))
    return a


def squarefree_decomposition(a: Sequence[int]) -> list:
    """Yun's algorithm: ``[(part, multiplicity), ...]`` with pairwise coprime square-free parts."""
    a = primitive(a)
    if len(a) <= 1:
        return []
    da = derivative(a)
    g = zgcd(a, da)
    b = _qdiv(a, g)
    d = _qsub(_qdiv(da, g), _qderiv(b))
    out = []
    i = 1
    while len(b) > 1:
        h = zgcd(_qint(b), _qint(d)) if d else primitive(_qint(b))
        if len(h) > 1:
            out.append((h, i))
        b = _qdiv(b, h)
        d = _qsub(_qdiv(d, h), _qderiv(b))
        i += 1
    return out


def _qint(a: Sequence[Fraction]) -> list:
    den = 1
    for c in a:
        den = den * c.denominator // igcd(den, c.denominator)
    return trim([int(c * den) for c in a])


def _qderiv(a):
    return trim([i * a[i] for i in range(1, len(a))])


def _qsub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return trim([x - y for x, y in zip(a, b)])


def _qdiv(a, b):
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
        a.pop()
        trim(a)
    return trim(q)


# -- polynomials over Z/p -------------------------------------------------


def _mod(a, p):
    return trim([c % p for c in a])


def _pmul(a, b, p):
    return _mod(zmul(a, b), p)


def _psub(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _padd(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _pdivmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] = (a[i + shift] - c * bc) % p
        a.pop()
        trim(a)
    return trim(q), a


def _pmonic(a, p):
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def pgcd(a, b, p):
    """Monic gcd over Z/p."""
    a, b = _mod(a, p), _mod(b, p)
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return _pmonic(a, p) if a else a


def _pxgcd(a, b, p):
    """``(g, s, t)`` with ``s*a + t*b == g`` monic, over Z/p."""
    r0, r1 = _mod(a, p), _mod(b, p)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        t0, t1 = t1, _psub(t0, _pmul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return [c * inv % p for c in r0], [c * inv % p for c in s0], [c * inv % p for c in t0]


def _ppowmod(base, e, f, p):
    result = [1]
    base = _pdivmod(base, f, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), f, p)[1]
        base = _pdivmod(_pmul(base, base, p), f, p)[1]
        e >>= 1
    return result


def _distinct_degree(f, p):
    out = []
    h = [0, 1]
    i = 0
    while len(f) - 1 >= 2 * (i + 1):
        i += 1
        h = _ppowmod(h, p, f, p)
        g = pgcd(f, _psub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, i))
            f = _pdivmod(f, g, p)[0]
            h = _pdivmod(h, f, p)[1]
    if len(f) > 1:
        out.append((_pmonic(f, p), len(f) - 1))
    return out


def _equal_degree(f, d, p, rng):
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        g = pgcd(a, f, p)
        if len(g) > 1 and len(g) < len(f):
            break
        b = _psub(_ppowmod(a, (p**d - 1) // 2, f, p), [1], p)
        g = pgcd(b, f, p)
        if 1 < len(g) < len(f):
            break
    return _equal_degree(g, d, p, rng) + _equal_degree(_pdivmod(f, g, p)[0], d, p, rng)


def factor_mod_p(f, p, rng) -> list:
    """Monic irreducible factors of a square-free ``f`` over Z/p (p odd)."""
    f = _pmonic(_mod(f, p), p)
    out = []
    for g, d in _distinct_degree(f, p):
        out.extend(_equal_degree(g, d, p, rng))
    return out


# -- Hensel lifting and recombination ------------------------------------


def _symmetric(a, m):
    half = m // 2
    return trim([c - m if c > half else c for c in (x % m for x in a)])


def _hensel_step(f, g, h, s, t, m):
    m2 = m * m
    e = _psub(f, _pmul(g, h, m2), m2)
    q, r = _pdivmod(_pmul(s, e, m2), h, m2)
    g2 = _padd(_padd(g, _pmul(t, e, m2), m2), _pmul(q, g, m2), m2)
    h2 = _padd(h, r, m2)
    b = _psub(_padd(_pmul(s, g2, m2), _pmul(t, h2, m2), m2), [1], m2)
    c, d = _pdivmod(_pmul(s, b, m2), h2, m2)
    s2 = _psub(s, d, m2)
    t2 = _psub(_psub(t, _pmul(t, b, m2), m2), _pmul(c, g2, m2), m2)
    return g2, h2, s2, t2, m2


def _lift_factor(f, h, p, bound):
    """Lift the monic modular factor ``h`` of ``f`` to a modulus exceeding ``bound``."""
    g = _pdivmod(_mod(f, p), h, p)[0]
    _, s, t = _pxgcd(g, h, p)
    m = p
    while m <= bound:
        g, h, s, t, m = _hensel_step(f, g, h, s, t, m)
    return h, m


def _mignotte(f) -> int:
    n = len(f) - 1
    norm = isqrt(sum(c * c for c in f)) + 1
    return 2 * (2**n) * norm * abs(f[-1])


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def _good_primes(f):
    df = derivative(f)
    p = 3
    while True:
        if _is_prime(p) and f[-1] % p and len(pgcd(f, df, p)) == 1:
            yield p
        p += 2


def _zassenhaus(f: list) -> list:
    """Irreducible factors over Z of a square-free primitive ``f`` of degree >= 2."""
    rng = random.Random(_SEED)
    best = None
    for tries, p in enumerate(_good_primes(f)):
        facs = factor_mod_p(f, p, rng)
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        if len(facs) == 1 or tries >= 4:
            break
    p, modular = best
    if len(modular) == 1:
        return [f]
    bound = _mignotte(f)
    lifted = []
    M = None
    for h in modular:
        hl, M = _lift_factor(f, h, p, bound)
        lifted.append(hl)
    out = []
    cur = f
    remaining = lifted
    size = 1
    trials = 0
    while 2 * size <= len(remaining):
        found = False
        for subset in combinations(range(len(remaining)), size):
            trials += 1
            if trials > MAX_SUBSETS:
                raise RecombinationTooLarge(f"{len(remaining)} modular factors to recombine")
            g = [cur[-1]]
            for i in subset:
                g = _pmul(g, remaining[i], M)
            g = primitive(_symmetric(g, M))
            q = exact_div(cur, g)
            if q is None:
                continue
            out.append(g)
            cur = primitive(q)
            remaining = [h for i, h in enumerate(remaining) if i not in subset]
            found = True
            break
        if not found:
            size += 1
    out.append(primitive(cur))
    return out


def factor_integer_poly(a: Sequence[int]) -> list:
    """Irreducible factors over Z with multiplicity (content dropped), each primitive."""
    a = primitive(a)
    out = []
    while len(a) > 1 and a[0] == 0:
        out.append([0, 1])
        a = a[1:]
    for part, k in squarefree_decomposition(a):
        facs = [part] if len(part) == 2 else _zassenhaus(part)
        for f in facs:
            out.extend([f] * k)
    return out
