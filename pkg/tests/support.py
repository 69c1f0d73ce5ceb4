"""Shared fixtures: the two worked matrices, a sympy oracle, random generators."""

import random
from fractions import Fraction

import sympy


from flpfactor.matpoly import PolyMatrix
from flpfactor.polyring import PolyRing, Polynomial

R = PolyRing(["z1", "z2", "z3"])
z1, z2, z3 = R.gens()


def M(rows, ring=R):
    return PolyMatrix(
        [[x if isinstance(x, Polynomial) else ring.const(x) for x in row] for row in rows], ring
    )


def example1():
    return M([
        [z1 * z2 - z2, 0, z3 + 1],
        [0, z1 * z2 - z2, z1**2 - 2 * z1 + 1],
        [z1**2 * z2 - z1 * z2, z1 * z2**2 - z2**2, z1**2 * z2 - 2 * z1 * z2 + z1 * z3 + z1 + z2],
    ])


def example2():
    return M([
        [z1 * z2**2, z1 * z3**2, z2**2 * z3 + z3**3],
        [z1 * z2, 0, z2 * z3],
        [0, z1**2 * z3, z1 * z3**2],
    ])


# published factors, used as module-equality targets
EX1_F1 = M([[0, z2, z1 - 1], [z1 * z2 - z2, 0, z3 + 1]])
EX1_G = M([[0, 1], [z1 - 1, 0], [z1 * z2 - z2, z1]])
EX2_F1 = M([[0, z1, z3], [-1, 1, 0]])
EX2_G = M([[z2**2 + z3**2, -z1 * z2**2], [z2, -z1 * z2], [z1 * z3, 0]])


# -- sympy oracle ---------------------------------------------------------


SY = sympy.symbols("z1 z2 z3")


def to_sympy(p):
    syms = sympy.symbols(" ".join(p.ring.names))
    syms = syms if isinstance(syms, tuple) else (syms,)
    return sympy.Add(*[
        sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[s**k for s, k in zip(syms, e)])
        for e, c in p.terms.items()
    ])


def from_sympy(expr, ring=R):
    syms = sympy.symbols(" ".join(ring.names))
    poly = sympy.Poly(sympy.expand(expr), *syms)
    out = ring.zero()
    for mon, c in poly.terms():
        c = sympy.Rational(c)
        out = out + ring.monomial(mon, Fraction(int(c.p), int(c.q)))
    return out


def random_poly(rng: random.Random, ring=R, degree=2, terms=3, coeff=3):
    p = ring.zero()
    n = ring.nvars
    for _ in range(rng.randint(1, terms)):
        exps = [0] * n
        for _ in range(rng.randint(0, degree)):
            exps[rng.randrange(n)] += 1
        c = rng.randint(-coeff, coeff)
        if c:
            p = p + ring.monomial(exps, c)
    return p
