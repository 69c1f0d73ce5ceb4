"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`PolyRing` fixes the variable names and the active monomial order.
:class:`Polynomial` values are immutable; their terms are kept sorted in
descending order under the ring's order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd as _igcd
from typing import Iterable, Mapping, Sequence

Exps = tuple  # tuple[int, ...]


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings."""


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on exponent tuples.

    ``kind`` is ``"lex"``, ``"degrevlex"`` or ``"elim"``.  For ``"elim"`` the
    variables before ``split`` form a block that dominates the rest; each
    block is compared by degrevlex.
    """

    kind: str = "degrevlex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "degrevlex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, e: Exps):
        """Sort key; a larger key means a larger monomial."""
        if self.kind == "degrevlex":
            return _grevlex_key(e)
        if self.kind == "lex":
            return e
        k = self.split
        return (_grevlex_key(e[:k]), _grevlex_key(e[k:]))


def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


class PolyRing:
    """The ring Q[names] together with a monomial order."""

    __slots__ = ("names", "order", "_key")

    def __init__(self, names: Sequence[str], order: MonomialOrder = DEGREVLEX):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        self.names = names
        self.order = order
        self._key = order.key

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.names, self.order))

    def __repr__(self):
        return f"PolyRing({list(self.names)!r}, {self.order.kind})"

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.names, order)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: Fraction(c)})

    def gen(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> tuple:
        return tuple(self.gen(i) for i in range(self.nvars))

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars or any(x < 0 for x in exps):
            raise ValueError(f"bad exponent vector {exps!r}")
        return Polynomial(self, {exps: Fraction(coeff)})


class Polynomial:
    """An element of a :class:`PolyRing`.

    ``terms`` maps exponent tuples to nonzero :class:`~fractions.Fraction`
    coefficients, in descending monomial order.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Exps, Fraction] | None = None):
        self.ring = ring
        items = [(e, Fraction(c)) for e, c in (terms or {}).items() if c]
        items.sort(key=lambda t: ring._key(t[0]), reverse=True)
        self.terms = dict(items)
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        # terms already cleaned of zeros; only sort
        p = cls.__new__(cls)
        p.ring = ring
        key = ring._key
        p.terms = dict(sorted(terms.items(), key=lambda t: key(t[0]), reverse=True))
        p._hash = None
        return p

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        if not self.terms:
            return True
        return len(self.terms) == 1 and not any(next(iter(self.terms)))

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    @property
    def leading_monomial(self) -> Exps:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return next(iter(self.terms))

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def degrees(self) -> tuple:
        n = self.ring.nvars
        return tuple(self.degree_in(i) for i in range(n))

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coefficient
        if lc == 1:
            return self
        return Polynomial._raw(self.ring, {e: c / lc for e, c in self.terms.items()})

    def with_ring(self, ring: PolyRing) -> "Polynomial":
        """Reinterpret in a ring with the same variables but another order."""
        if ring.names != self.ring.names:
            raise RingMismatchError("variable lists differ")
        return Polynomial._raw(ring, self.terms)

    # -- arithmetic ----------------------------------------------------

    def _check(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {e: v * c for e, v in self.terms.items()})

    def mul_term(self, exps: Exps, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(
            self.ring,
            {tuple(a + b for a, b in zip(e, exps)): v * c for e, v in self.terms.items()},
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.names == other.ring.names and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    def exquo(self, other: "Polynomial") -> "Polynomial":
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide."""
        (q,), r = divrem(self, [other])
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def divides(self, other: "Polynomial") -> bool:
        if not self.terms:
            return not other.terms
        return not divrem(other, [self])[1]

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= Fraction(x) ** k
            total += v
        return total

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_polynomial(self)


# -- printing -----------------------------------------------------------


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial) -> str:
    """Render in the job-file grammar, e.g. ``z1^2*z2 - 1/2*z3 + 1``."""
    if not p.terms:
        return "0"
    names = p.ring.names
    parts = []
    for e, c in p.terms.items():
        mon = "*".join(
            n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
        )
        a = abs(c)
        if not mon:
            body = _format_coeff(a)
        elif a == 1:
            body = mon
        else:
            body = f"{_format_coeff(a)}*{mon}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# -- module-level operations --------------------------------------------


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def _mono_divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def divrem(p: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder | None = None):
    """Multivariate division of ``p`` by ``divisors``.

    Returns ``(quotients, remainder)`` with
    ``p == sum(q * d) + remainder`` and no term of the remainder divisible
    by a divisor's leading monomial.  ``order`` defaults to the ring's.
    """
    if not divisors:
        raise ValueError("empty divisor list")
    ring = orig = p.ring
    if order is not None and order != ring.order:
        ring = ring.with_order(order)
        p = p.with_ring(ring)
        divisors = [d.with_ring(ring) for d in divisors]
    for d in divisors:
        if d.ring.names != ring.names:
            raise RingMismatchError("divisor in a different ring")
        if not d:
            raise ZeroDivisionError("zero divisor in divrem")
    key = ring._key
    leads = [(d.leading_monomial, d.leading_coefficient, d) for d in divisors]
    quots: list[dict] = [{} for _ in divisors]
    rem: dict = {}
    work = dict(p.terms)
    while work:
        lm = max(work, key=key)
        lc = work[lm]
        for i, (dm, dc, d) in enumerate(leads):
            if _mono_divides(dm, lm):
                qe = tuple(a - b for a, b in zip(lm, dm))
                qc = lc / dc
                quots[i][qe] = quots[i].get(qe, 0) + qc
                for e, c in d.terms.items():
                    t = tuple(a + b for a, b in zip(e, qe))
                    s = work.get(t, 0) - qc * c
                    if s:
                        work[t] = s
                    else:
                        work.pop(t, None)
                break
        else:
            rem[lm] = lc
            del work[lm]
    qs = [Polynomial(orig, q) for q in quots]
    return qs, Polynomial(orig, rem)


def partial_derivative(p: Polynomial, var_index: int) -> Polynomial:
    n = p.ring.nvars
    if not 0 <= var_index < n:
        raise IndexError(f"variable index {var_index} out of range for {n} variables")
    out = {}
    for e, c in p.terms.items():
        k = e[var_index]
        if k:
            e2 = list(e)
            e2[var_index] = k - 1
            out[tuple(e2)] = c * k
    return Polynomial._raw(p.ring, out)


def _monomial_content(p: Polynomial) -> Exps:
    return tuple(min(col) for col in zip(*p.terms))


def _gcd2(a: Polynomial, b: Polynomial) -> Polynomial:
    if not a:
        return b.monic()
    if not b:
        return a.monic()
    ring = a.ring
    # split off the common monomial factor first; keeps the elimination small
    ma, mb = _monomial_content(a), _monomial_content(b)
    mono = tuple(min(x, y) for x, y in zip(ma, mb))
    zero = (0,) * ring.nvars
    a_red = Polynomial._raw(ring, {tuple(x - y for x, y in zip(e, ma)): c for e, c in a.terms.items()})
    b_red = Polynomial._raw(ring, {tuple(x - y for x, y in zip(e, mb)): c for e, c in b.terms.items()})
    mono_poly = ring.monomial(mono)
    if a_red.is_constant() or b_red.is_constant():
        return mono_poly
    if a_red.total_degree() > b_red.total_degree():
        a_red, b_red = b_red, a_red
    if a_red.divides(b_red):
        return (mono_poly * a_red).monic()
    g = _image_gcd(a_red, b_red)
    if g is None:
        from .grobner import ideal_lcm

        lcm = ideal_lcm(a_red, b_red)
        g = (a_red * b_red).exquo(lcm)
    if mono == zero:
        return g.monic()
    return (mono_poly * g).monic()


_IMAGE_PRIME = 2_147_483_647


def _kronecker_ints(p: Polynomial, base: int) -> list:
    """Integer multiple of the image of ``p`` under ``z_i -> x^(base^i)``."""
    den = 1
    out: dict = {}
    for e, c in p.terms.items():
        den = den * c.denominator // _igcd(den, c.denominator)
        out[sum(x * base**i for i, x in enumerate(e))] = c
    return [int(out.get(k, 0) * den) for k in range(max(out) + 1)]


def _images_coprime(ps: Sequence[Polynomial]) -> bool:
    """Sufficient test for a constant gcd: the images share no factor modulo a prime.

    Valid when the prime misses the leading coefficient of some image, since
    the image of the true gcd then keeps its degree modulo the prime.  Powers
    of x are stripped from the images; the true gcd is then at most a
    monomial, which a trivial common monomial content rules out.
    """
    from .unifactor import pgcd

    if any(min(col) for col in zip(*(_monomial_content(p) for p in ps))):
        return False
    base = 1 + max(max(p.degrees()) for p in ps)
    images = []
    for p in ps:
        a = _kronecker_ints(p, base)
        images.append(a[next(i for i, c in enumerate(a) if c):])
    if all(a[-1] % _IMAGE_PRIME == 0 for a in images):
        return False
    g = images[0]
    for a in images[1:]:
        g = pgcd(g, a, _IMAGE_PRIME)
        if len(g) == 1:
            return True
    return len(g) == 1


def _image_gcd(a: Polynomial, b: Polynomial) -> Polynomial | None:
    """gcd through Kronecker images, or None when the image gcd does not lift.

    The image of gcd(a, b) divides the gcd of the images, so a preimage that
    divides both inputs is the gcd itself.
    """
    from .unifactor import zgcd

    if _images_coprime([a, b]):
        return a.ring.one()
    ring = a.ring
    n = ring.nvars
    base = 1 + max(max(a.degrees()), max(b.degrees()))
    h = zgcd(_kronecker_ints(a, base), _kronecker_ints(b, base))
    if len(h) == 1:
        return ring.one()
    terms = {}
    for k, c in enumerate(h):
        if c:
            e = []
            for _ in range(n):
                e.append(k % base)
                k //= base
            if k:
                return None
            terms[tuple(e)] = Fraction(c)
    g = Polynomial(ring, terms)
    if g.divides(a) and g.divides(b):
        return g
    return None


def gcd(ps: Iterable[Polynomial]) -> Polynomial:
    """Monic gcd of a sequence of polynomials (at least one nonzero)."""
    ps = [p for p in ps]
    nonzero = [p for p in ps if p]
    if not nonzero:
        raise ValueError("gcd of all-zero input")
    nonzero.sort(key=lambda p: (p.total_degree(), len(p.terms)))
    if len(nonzero) > 1 and not nonzero[0].is_constant() and _images_coprime(nonzero):
        return nonzero[0].ring.one()
    g = nonzero[0].monic()
    for p in nonzero[1:]:
        if g.is_constant():
            return g
        g = _gcd2(g, p)
    return g


def is_squarefree(p: Polynomial) -> bool:
    """True iff no irreducible factor of ``p`` repeats (characteristic zero)."""
    if not p:
        raise ValueError("is_squarefree of the zero polynomial")
    if p.is_constant():
        return True
    derivs = [partial_derivative(p, i) for i in range(p.ring.nvars)]
    return gcd([p, *derivs]).is_constant()


def normalize_unit(p: Polynomial) -> Polynomial:
    """Monic normalization; gcd-like quantities are only defined up to units."""
    return p.monic()


def associated(p: Polynomial, q: Polynomial) -> bool:
    """Whether ``p`` and ``q`` agree up to a nonzero constant factor."""
    if not p or not q:
        return not p and not q
    return p.monic() == q.monic()


def product(ps: Iterable[Polynomial], ring: PolyRing) -> Polynomial:
    return reduce(lambda a, b: a * b, ps, ring.one())
