"""All factor-left-prime factorizations of a polynomial matrix without full row rank.

For ``F`` of rank ``r < l`` with square-free ``d = d_r(F)``, every divisor
``f`` of ``d`` gives a candidate module: ``rho(F) : f`` when the column
reduced minors ``c_1..c_xi`` of ``F`` generate the unit ideal, otherwise
``rho(F) : <f*g for g in G>`` with ``G`` the reduced basis of ``<c_i>``.
Candidates certified free of rank ``r`` are filtered down to the maximal ones
(by divisibility of ``f``, resp. by proper inclusion of modules); each
survivor yields ``F = G_i @ F_i`` with ``F_i`` factor left prime.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .divisors import DivisorLattice, divisor_lattice
from .grobner import IdealGB, SubmoduleGB, ideal_reduced_gb
from .matpoly import PolyMatrix, column_reduced_minors, d_i, mat_mul, rank
from .modquot import (
    FreenessCertificate,
    free_basis,
    freeness_check,
    module_equal,
    module_proper_subset,
    module_subset,
    quotient_by_ideal,
    quotient_by_poly,
    row_module,
    solve_left_factor,
)
from .polyring import MonomialOrder, Polynomial, associated, is_squarefree

log = logging.getLogger(__name__)


class PreconditionError(ValueError):
    """The input matrix is outside the class the algorithm handles."""


@dataclass(frozen=True)
class FlpFactorization:
    G: PolyMatrix
    F1: PolyMatrix
    f: Polynomial
    divisor: Polynomial
    verified: bool
    d_r_of_G: Polynomial


@dataclass(frozen=True)
class CandidateEntry:
    divisor: Polynomial
    generators: PolyMatrix
    module: SubmoduleGB
    certificate: FreenessCertificate


@dataclass
class FlpRun:
    """Everything computed along the way, for tracing and serialization."""

    F: PolyMatrix
    r: int
    d: Polynomial
    column_minors: tuple
    ideal_gb: IdealGB
    branch: str
    lattice: DivisorLattice
    candidates: list = field(default_factory=list)
    factorizations: list = field(default_factory=list)


def _check_input(F: PolyMatrix) -> int:
    r = rank(F)
    if r == 0:
        raise PreconditionError("zero matrix (rank 0)")
    if r == F.nrows:
        raise PreconditionError(
            "matrix has full row rank; its column reduced minors reduce to the constant 1 "
            "and this algorithm only handles rank < row count"
        )
    return r


def _candidate(K: SubmoduleGB, f: Polynomial, r: int, branch: str, gb: IdealGB) -> CandidateEntry:
    if branch == "A":
        q = quotient_by_poly(K, f)
    else:
        q = quotient_by_ideal(K, [f * g for g in gb.generators])
    cert = freeness_check(q.matrix, r)
    return CandidateEntry(f, cert.matrix, q.gb, cert)


def _realize(F: PolyMatrix, entry: CandidateEntry, r: int, d: Polynomial) -> FlpFactorization:
    basis = free_basis(entry.generators, r, entry.certificate)
    F1 = basis.matrix
    G = solve_left_factor(F, F1)
    dG = d_i(G, r)
    ok = mat_mul(G, F1) == F and associated(dG * d_i(F1, r), d)
    return FlpFactorization(G, F1, dG, entry.divisor, ok, dG)


def _maximal_by_divisibility(P: list) -> list:
    # loop of the algorithm's steps 11-17: pick, keep if no strict multiple, drop its divisors
    P = list(P)
    keep = []
    while P:
        e = P[0]
        if not any(o is not e and e.divisor.divides(o.divisor) for o in P):
            keep.append(e)
        P = [o for o in P if not o.divisor.divides(e.divisor)]
    return keep


def _maximal_by_inclusion(P: list) -> list:
    P = list(P)
    keep = []
    while P:
        e = P[0]
        if not any(o is not e and module_proper_subset(e.module, o.module) for o in P):
            keep.append(e)
        P = [o for o in P if not module_subset(o.module, e.module)]
    return keep


def _dedupe_modules(P: list) -> list:
    out = []
    for e in P:
        if not any(module_equal(e.module, o.module) for o in out):
            out.append(e)
    return out


def flp_run(F: PolyMatrix, *, factors=None, all_factorizations: bool = False,
            branch: str = "auto", order: MonomialOrder | None = None) -> FlpRun:
    """Run the full pipeline and keep the trace.

    ``branch`` may force ``"A"`` or ``"B"``; forcing ``"A"`` is only valid
    when the column reduced minors generate the unit ideal.  With
    ``all_factorizations`` the maximality filter is skipped.
    """
    if order is not None:
        F = F.with_ring(F.ring.with_order(order))
    r = _check_input(F)
    d = d_i(F, r)
    if not is_squarefree(d):
        raise PreconditionError(f"d_{r}(F) = {d} is not square-free")
    if factors is not None:
        factors = [p.with_ring(F.ring) for p in factors]
    lattice = divisor_lattice(d, factors)
    crm = column_reduced_minors(F, r)
    gb = ideal_reduced_gb(crm.values, ring=F.ring)
    unit = gb.is_unit()
    if branch == "auto":
        branch = "A" if unit else "B"
    elif branch == "A" and not unit:
        raise PreconditionError("branch A requires unit column reduced minor ideal")
    elif branch not in ("A", "B"):
        raise ValueError(f"unknown branch {branch!r}")
    log.info("rank %d, d_r = %s, %d divisors, branch %s", r, d, len(lattice), branch)
    run = FlpRun(F, r, d, crm.values, gb, branch, lattice)

    K = row_module(F)
    for f in lattice.divisors:
        entry = _candidate(K, f, r, branch, gb)
        log.debug("divisor %s: free=%s", f, entry.certificate.free)
        run.candidates.append(entry)
    P = [e for e in run.candidates if e.certificate.free]
    if all_factorizations:
        chosen = _dedupe_modules(P)
    elif branch == "A":
        chosen = _maximal_by_divisibility(P)
    else:
        chosen = _maximal_by_inclusion(P)
    run.factorizations = [_realize(F, e, r, d) for e in chosen]
    return run


def flp_factorize(F: PolyMatrix, **kw) -> list:
    """All FLP factorizations ``F = G @ F1`` (see :func:`flp_run` for options)."""
    return flp_run(F, **kw).factorizations


def factorize_wrt(F: PolyMatrix, f: Polynomial) -> FlpFactorization | None:
    """A factorization ``F = G @ F1`` with ``d_r(G) = f`` up to a constant, if one exists.

    With a unit column-reduced-minor ideal the freeness of ``rho(F) : f``
    decides existence; otherwise the candidate from ``rho(F) : <f*c_i>`` is
    accepted only when its computed ``d_r(G)`` is ``f``.
    """
    r = _check_input(F)
    d = d_i(F, r)
    if not f or not f.divides(d):
        raise ValueError(f"{f} does not divide d_{r}(F) = {d}")
    gb = ideal_reduced_gb(column_reduced_minors(F, r).values, ring=F.ring)
    branch = "A" if gb.is_unit() else "B"
    entry = _candidate(row_module(F), f.monic(), r, branch, gb)
    if not entry.certificate.free:
        return None
    fac = _realize(F, entry, r, d)
    if branch == "B" and not associated(fac.d_r_of_G, f):
        return None
    return fac


def is_flp_in_W(entry: CandidateEntry, candidates: list, branch: str) -> bool:
    """Whether ``entry`` survives the maximality filter among ``candidates``."""
    for o in candidates:
        if o is entry or not o.certificate.free:
            continue
        if branch == "A":
            if entry.divisor.divides(o.divisor) and not o.divisor.divides(entry.divisor):
                return False
        elif module_proper_subset(entry.module, o.module):
            return False
    return True


def transpose_factorization(fac: FlpFactorization) -> FlpFactorization:
    """Transpose ``F = G @ F1`` into ``F^T = F1^T @ G^T`` (fields keep their roles)."""
    return FlpFactorization(fac.G.transpose(), fac.F1.transpose(), fac.f, fac.divisor,
                            fac.verified, fac.d_r_of_G)


def frp_factorize(F: PolyMatrix, **kw) -> list:
    """Factor-right-prime factorizations ``F = F1 @ G`` via the transpose.

    Each returned entry has ``G`` of shape ``r x m`` and ``F1`` of shape
    ``l x r`` with ``F == F1 @ G``.
    """
    if rank(F) == F.ncols:
        raise PreconditionError("matrix has full column rank")
    return [transpose_factorization(f) for f in flp_factorize(F.transpose(), **kw)]
