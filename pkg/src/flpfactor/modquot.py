"""Module quotients, inclusion tests, freeness certificates and free bases.

Every module here is a submodule of the free row module ``k[z]^(1 x m)``,
handed around as a reduced :class:`~flpfactor.grobner.SubmoduleGB` so that
equality of modules is equality of bases.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .grobner import (
    NotInModuleError,
    SubmoduleGB,
    Lifter,
    contains,
    ideal_reduced_gb,
    module_intersect,
    module_reduced_gb,
)
from .matpoly import PolyMatrix, column_reduced_minors, rank
from .polyring import Polynomial

RECOMBINATION_ATTEMPTS = 100
RECOMBINATION_SEED = 20200


class ExtractionExhausted(RuntimeError):
    """The module is certified free but no basis was found within the search bounds."""


@dataclass(frozen=True)
class QuotientResult:
    source: SubmoduleGB
    divisors: tuple
    generators: tuple
    gb: SubmoduleGB

    @property
    def matrix(self) -> PolyMatrix:
        return PolyMatrix(self.generators, self.source.ring)


@dataclass(frozen=True)
class FreenessCertificate:
    matrix: PolyMatrix
    rank: int
    minors: tuple | None
    minors_gb: tuple | None
    free: bool


@dataclass(frozen=True)
class FreeBasis:
    matrix: PolyMatrix
    strategy: str


def row_module(rows: Sequence[Sequence[Polynomial]], ring=None, m=None) -> SubmoduleGB:
    """Reduced basis of the module generated by ``rows``."""
    if isinstance(rows, PolyMatrix):
        return module_reduced_gb(rows.rows, ring=rows.ring, m=rows.ncols)
    return module_reduced_gb(rows, ring=ring, m=m)


def _nonzero_rows(rows):
    return [tuple(r) for r in rows if any(r)]


def minimal_generators(rows: Sequence[Sequence[Polynomial]], ring, m) -> tuple:
    """Drop generators lying in the module of the others, last ones first."""
    rows = _nonzero_rows(rows)
    i = len(rows) - 1
    while i >= 0 and len(rows) > 1:
        others = rows[:i] + rows[i + 1:]
        if contains(module_reduced_gb(others, ring=ring, m=m), rows[i]):
            rows = others
        i -= 1
    return tuple(rows)


def _scaled_free_module(f: Polynomial, ring, m) -> SubmoduleGB:
    z = ring.zero()
    return module_reduced_gb(
        [tuple(f if j == i else z for j in range(m)) for i in range(m)], ring=ring, m=m
    )


def _quotient_gb(K: SubmoduleGB, f: Polynomial) -> SubmoduleGB:
    ring, m = K.ring, K.rank
    f = f.with_ring(ring)
    if f.is_constant():
        return K
    inter = module_intersect(K, _scaled_free_module(f, ring, m))
    rows = [tuple(p.exquo(f) for p in row) for row in inter.generators]
    return module_reduced_gb(rows, ring=ring, m=m)


def quotient_by_poly(K: SubmoduleGB, f: Polynomial) -> QuotientResult:
    """``K : f = {u : f*u in K}``, as ``(K & f*k[z]^m) / f``."""
    if not f:
        raise ZeroDivisionError("quotient by the zero polynomial")
    gb = _quotient_gb(K, f)
    gens = minimal_generators(gb.generators, K.ring, K.rank)
    return QuotientResult(K, (f,), gens, gb)


def quotient_by_ideal(K: SubmoduleGB, gens: Sequence[Polynomial]) -> QuotientResult:
    """``K : J`` for ``J`` generated by ``gens``: the intersection of ``K : g``."""
    nz = [g for g in gens if g]
    if not nz:
        raise ZeroDivisionError("quotient by the zero ideal")
    gb = None
    for g in nz:
        q = _quotient_gb(K, g)
        gb = q if gb is None else module_intersect(gb, q)
    out = minimal_generators(gb.generators, K.ring, K.rank)
    return QuotientResult(K, tuple(nz), out, gb)


def module_subset(a: SubmoduleGB, b: SubmoduleGB) -> bool:
    if a.rank != b.rank:
        raise ValueError("modules of different rank")
    return all(contains(b, v) for v in a.generators)


def module_equal(a: SubmoduleGB, b: SubmoduleGB) -> bool:
    if a.rank != b.rank:
        raise ValueError("modules of different rank")
    if a.ring == b.ring:
        return a.generators == b.generators
    return module_subset(a, b) and module_subset(b, a)


def module_proper_subset(a: SubmoduleGB, b: SubmoduleGB) -> bool:
    return module_subset(a, b) and not module_equal(a, b)


def freeness_check(Fp: PolyMatrix, r: int) -> FreenessCertificate:
    """Decide whether the row module of ``Fp`` (rank ``r``) is free of rank ``r``.

    Full row rank is free outright; otherwise the module is free exactly when
    the ``r x r`` column reduced minors of ``Fp`` generate the unit ideal.
    """
    rows = _nonzero_rows(Fp.rows)
    Fp = PolyMatrix(rows, Fp.ring) if rows else Fp
    rk = rank(Fp)
    if rk != r:
        raise ValueError(f"generator matrix has rank {rk}, expected {r}")
    if Fp.nrows == r:
        return FreenessCertificate(Fp, r, None, None, True)
    crm = column_reduced_minors(Fp, r)
    gb = ideal_reduced_gb(crm.values, ring=Fp.ring)
    return FreenessCertificate(Fp, r, crm.values, gb.generators, gb.is_unit())


def _generates(rows, target: SubmoduleGB) -> bool:
    return module_reduced_gb(rows, ring=target.ring, m=target.rank).generators == target.generators


def free_basis(Fp: PolyMatrix, r: int, cert: FreenessCertificate | None = None) -> FreeBasis:
    """An ``r x m`` matrix whose rows freely generate the row module of ``Fp``.

    Bounded search: full row rank as is, then redundant-row elimination, then
    ``r``-subsets of the generators, then seeded constant recombinations.
    """
    if cert is None:
        cert = freeness_check(Fp, r)
    if not cert.free:
        raise ValueError("module is not certified free")
    ring, m = Fp.ring, Fp.ncols
    rows = _nonzero_rows(Fp.rows)
    if len(rows) == r:
        return FreeBasis(PolyMatrix(rows, ring), "full-row-rank")
    target = module_reduced_gb(rows, ring=ring, m=m)
    rows = list(minimal_generators(rows, ring, m))
    if len(rows) == r:
        return FreeBasis(PolyMatrix(rows, ring), "redundant-rows")
    for subset in combinations(range(len(rows)), r):
        cand = [rows[i] for i in subset]
        if _generates(cand, target):
            return FreeBasis(PolyMatrix(cand, ring), "subset")
    rng = random.Random(RECOMBINATION_SEED)
    s = len(rows)
    z = ring.zero()
    for _ in range(RECOMBINATION_ATTEMPTS):
        cand = []
        for _ in range(r):
            coeffs = [rng.randint(-2, 2) for _ in range(s)]
            row = [z] * m
            for c, g in zip(coeffs, rows):
                if c:
                    row = [a + b.scale(c) for a, b in zip(row, g)]
            cand.append(tuple(row))
        if rank(PolyMatrix(cand, ring)) == r and _generates(cand, target):
            return FreeBasis(PolyMatrix(cand, ring), "recombination")
    raise ExtractionExhausted(
        f"free module of rank {r} with {s} generators: no basis found within search bounds"
    )


def solve_left_factor(F: PolyMatrix, F1: PolyMatrix | FreeBasis) -> PolyMatrix:
    """``G`` with ``F == G @ F1``, row by row."""
    if isinstance(F1, FreeBasis):
        F1 = F1.matrix
    lifter = Lifter(F1.rows, ring=F1.ring, m=F1.ncols)
    out = []
    for i, row in enumerate(F.rows):
        try:
            out.append(lifter.lift(row))
        except NotInModuleError:
            raise NotInModuleError(f"row {i} of F is not in the row module of F1") from None
    return PolyMatrix(out, F.ring)
