"""Buchberger's algorithm for ideals and submodules of the free row module.

Module elements are row vectors ``(p_1, ..., p_m)`` of :class:`Polynomial`.
Internally a vector is a dict ``{(position, exponents): coefficient}``; the
term order on module terms is the ring order extended position-over-term,
with earlier positions larger.  Ideals are the ``m == 1`` case.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .polyring import MonomialOrder, Polynomial, PolyRing

Vector = tuple  # tuple[Polynomial, ...]


class NotInModuleError(ValueError):
    """The vector has a nonzero normal form against the module."""


@dataclass(frozen=True)
class SubmoduleGB:
    """Gröbner basis of a submodule of ``ring^(1 x rank)`` under POT."""

    ring: PolyRing
    rank: int
    generators: tuple
    reduced: bool = True

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def __len__(self):
        return len(self.generators)

    def is_zero(self) -> bool:
        return not self.generators


@dataclass(frozen=True)
class IdealGB:
    ring: PolyRing
    generators: tuple
    reduced: bool = True

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()


# -- internal vector arithmetic -----------------------------------------


class _Elem:
    __slots__ = ("vec", "lt", "cof")

    def __init__(self, vec, lt, cof):
        self.vec = vec
        self.lt = lt
        self.cof = cof


def _pot_key(base: MonomialOrder) -> Callable:
    bkey = base.key
    cache: dict = {}

    def key(t):
        k = cache.get(t)
        if k is None:
            k = cache[t] = (-t[0], bkey(t[1]))
        return k

    return key


def _elim_key(base: MonomialOrder, n: int) -> Callable:
    # tag variable sits at exponent index n and dominates position and base order
    bkey = base.key
    cache: dict = {}

    def key(t):
        k = cache.get(t)
        if k is None:
            e = t[1]
            k = cache[t] = (e[n], -t[0], bkey(e[:n]))
        return k

    return key


def _shift(e, m):
    return tuple(a + b for a, b in zip(e, m))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _axpy(dst: dict, src: dict, mono, c):
    """dst -= c * mono * src, in place, for module vectors."""
    for (pos, e), v in src.items():
        t = (pos, _shift(e, mono))
        s = dst.get(t, 0) - c * v
        if s:
            dst[t] = s
        else:
            dst.pop(t, None)


def _poly_axpy(dst: dict, src: dict, mono, c):
    for e, v in src.items():
        t = _shift(e, mono)
        s = dst.get(t, 0) - c * v
        if s:
            dst[t] = s
        else:
            dst.pop(t, None)


def _cof_axpy(dst: list, src: list, mono, c):
    for d, s in zip(dst, src):
        if s:
            _poly_axpy(d, s, mono, c)


def _make_monic(vec: dict, lt, cof):
    lc = vec[lt]
    if lc != 1:
        inv = 1 / lc
        vec = {t: v * inv for t, v in vec.items()}
        if cof is not None:
            cof = [{e: v * inv for e, v in p.items()} for p in cof]
    return vec, cof


def _reduce(vec: dict, cof, basis_by_pos: dict, key, full: bool = True):
    """Reduce ``vec`` modulo the basis; returns ``(remainder, cofactor)``.

    With cofactor tracking, the invariant ``vec_out = vec_in + sum(cof_j * gen_j)``
    holds when the incoming ``cof`` describes ``vec_in`` the same way.
    """
    work = dict(vec)
    rem: dict = {}
    cof = None if cof is None else [dict(p) for p in cof]
    while work:
        lt = max(work, key=key)
        c = work[lt]
        pos, e = lt
        for g in basis_by_pos.get(pos, ()):
            ge = g.lt[1]
            if _divides(ge, e):
                mono = tuple(a - b for a, b in zip(e, ge))
                _axpy(work, g.vec, mono, c)
                if cof is not None:
                    _cof_axpy(cof, g.cof, mono, c)
                break
        else:
            if not full:
                rem.update(work)
                break
            rem[lt] = c
            del work[lt]
    return rem, cof


def _index(basis: Sequence[_Elem]) -> dict:
    by_pos: dict = {}
    for g in basis:
        by_pos.setdefault(g.lt[0], []).append(g)
    return by_pos


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _buchberger(vecs: list, key, ideal: bool, cofs=None) -> list:
    """Gröbner basis (not yet reduced) of the given vectors.

    Normal selection strategy with a deterministic heap; Buchberger's chain
    criterion always, the coprime-leading-monomial criterion only for ideals.
    """
    G: list[_Elem] = []
    by_pos: dict = {}
    heap: list = []
    pending: set = set()

    def add(vec, cof):
        lt = max(vec, key=key)
        vec, cof = _make_monic(vec, lt, cof)
        el = _Elem(vec, lt, cof)
        idx = len(G)
        for i, g in enumerate(G):
            if g.lt[0] != lt[0]:
                continue
            if ideal and all(x == 0 or y == 0 for x, y in zip(g.lt[1], lt[1])):
                continue
            lcm = _lcm(g.lt[1], lt[1])
            heapq.heappush(heap, (key((lt[0], lcm)), i, idx))
            pending.add((i, idx))
        G.append(el)
        by_pos.setdefault(lt[0], []).append(el)

    for n, vec in enumerate(vecs):
        cof = None if cofs is None else cofs[n]
        if not vec:
            continue
        r, rc = _reduce(vec, cof, by_pos, key)
        if r:
            add(r, rc)

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        gi, gj = G[i], G[j]
        pos = gi.lt[0]
        lcm = _lcm(gi.lt[1], gj.lt[1])
        skip = False
        for k, gk in enumerate(G):
            if k == i or k == j or gk.lt[0] != pos:
                continue
            if not _divides(gk.lt[1], lcm):
                continue
            if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
                continue
            skip = True
            break
        if skip:
            continue
        mi = tuple(a - b for a, b in zip(lcm, gi.lt[1]))
        mj = tuple(a - b for a, b in zip(lcm, gj.lt[1]))
        s: dict = {}
        _axpy(s, gi.vec, mi, Fraction(-1))
        _axpy(s, gj.vec, mj, Fraction(1))
        scof = None
        if cofs is not None:
            scof = [{} for _ in gi.cof]
            _cof_axpy(scof, gi.cof, mi, Fraction(-1))
            _cof_axpy(scof, gj.cof, mj, Fraction(1))
        r, rc = _reduce(s, scof, by_pos, key)
        if r:
            add(r, rc)
    return G


def _reduce_basis(G: list, key) -> list:
    """Minimalize then interreduce; output sorted by descending leading term."""
    order = sorted(range(len(G)), key=lambda i: (key(G[i].lt), -i))
    minimal = []
    for i in order:
        g = G[i]
        if any(h.lt[0] == g.lt[0] and _divides(h.lt[1], g.lt[1]) for h in minimal):
            continue
        minimal.append(g)
    out = []
    for n, g in enumerate(minimal):
        others = _index(minimal[:n] + minimal[n + 1:])
        vec, cof = _reduce(g.vec, g.cof, others, key)
        vec, cof = _make_monic(vec, g.lt, cof)
        out.append(_Elem(vec, g.lt, cof))
    out.sort(key=lambda g: key(g.lt), reverse=True)
    return out


# -- conversions --------------------------------------------------------


def _to_vec(row: Sequence[Polynomial]) -> dict:
    vec = {}
    for pos, p in enumerate(row):
        for e, c in p.terms.items():
            vec[(pos, e)] = c
    return vec


def _from_vec(vec: dict, ring: PolyRing, m: int) -> tuple:
    parts: list[dict] = [{} for _ in range(m)]
    for (pos, e), c in vec.items():
        parts[pos][e] = c
    return tuple(Polynomial(ring, p) for p in parts)


def _check_rows(gens, ring, m):
    rows = [tuple(r) for r in gens]
    if rows:
        if ring is None:
            ring = rows[0][0].ring
        if m is None:
            m = len(rows[0])
    if ring is None or m is None:
        raise ValueError("ring and rank are required for an empty generator list")
    for r in rows:
        if len(r) != m:
            raise ValueError(f"module element of length {len(r)}, expected {m}")
        for p in r:
            if p.ring.names != ring.names:
                raise ValueError("module element in a different ring")
    return rows, ring, m


# -- public API ---------------------------------------------------------


def module_reduced_gb(gens: Sequence[Vector], order: MonomialOrder | None = None,
                      ring: PolyRing | None = None, m: int | None = None) -> SubmoduleGB:
    """Reduced Gröbner basis of the module generated by the rows ``gens``."""
    rows, ring, m = _check_rows(gens, ring, m)
    if order is not None:
        ring = ring.with_order(order)
    key = _pot_key(ring.order)
    G = _reduce_basis(_buchberger([_to_vec(r) for r in rows], key, ideal=(m == 1)), key)
    return SubmoduleGB(ring, m, tuple(_from_vec(g.vec, ring, m) for g in G), True)


def ideal_reduced_gb(gens: Sequence[Polynomial], order: MonomialOrder | None = None,
                     ring: PolyRing | None = None) -> IdealGB:
    """Reduced Gröbner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("ring is required for an empty generator list")
        ring = gens[0].ring
    gb = module_reduced_gb([(g,) for g in gens], order, ring, 1)
    return IdealGB(gb.ring, tuple(v[0] for v in gb.generators), True)


def _gb_index(gb: SubmoduleGB):
    key = _pot_key(gb.ring.order)
    elems = []
    for row in gb.generators:
        vec = _to_vec(row)
        if vec:
            elems.append(_Elem(vec, max(vec, key=key), None))
    return _index(elems), key


def normal_form(v: Vector, gb: SubmoduleGB) -> tuple:
    """Remainder of ``v`` modulo ``gb``; zero exactly when ``v`` lies in the module."""
    v = tuple(v)
    if len(v) != gb.rank:
        raise ValueError(f"vector of length {len(v)}, module rank {gb.rank}")
    by_pos, key = _gb_index(gb)
    rem, _ = _reduce(_to_vec(v), None, by_pos, key)
    return _from_vec(rem, gb.ring, gb.rank)


def contains(gb: SubmoduleGB, v: Vector) -> bool:
    return not any(normal_form(v, gb))


def ideal_normal_form(p: Polynomial, gb: IdealGB) -> Polynomial:
    mgb = SubmoduleGB(gb.ring, 1, tuple((g,) for g in gb.generators), gb.reduced)
    return normal_form((p.with_ring(gb.ring),), mgb)[0]


class Lifter:
    """Tracked Gröbner basis of a fixed generator list, reusable across lifts."""

    def __init__(self, gens: Sequence[Vector], ring: PolyRing | None = None, m: int | None = None):
        rows, ring, m = _check_rows(gens, ring, m)
        self.ring, self.m, self.k = ring, m, len(rows)
        self.key = _pot_key(ring.order)
        zero = (0,) * ring.nvars
        # each basis element satisfies vec == sum(cof_j * gen_j)
        cofs = []
        for i in range(self.k):
            cof = [{} for _ in range(self.k)]
            cof[i] = {zero: Fraction(1)}
            cofs.append(cof)
        G = _buchberger([_to_vec(r) for r in rows], self.key, ideal=(m == 1), cofs=cofs)
        self.by_pos = _index(G)

    def lift(self, v: Vector) -> list:
        v = tuple(v)
        if len(v) != self.m:
            raise ValueError(f"vector of length {len(v)}, expected {self.m}")
        cof = [{} for _ in range(self.k)]
        rem, cof = _reduce(_to_vec(v), cof, self.by_pos, self.key)
        if rem:
            raise NotInModuleError("vector is not in the module generated by gens")
        # 0 == v + sum(cof_j * gen_j)
        return [-Polynomial(self.ring, c) for c in cof]


def lift(v: Vector, gens: Sequence[Vector]) -> list:
    """Coefficients ``lam`` with ``v == sum(lam[i] * gens[i])``.

    Raises :class:`NotInModuleError` when ``v`` is not in the module.
    """
    gens = [tuple(g) for g in gens]
    v = tuple(v)
    if not gens:
        if any(v):
            raise NotInModuleError("nonzero vector against an empty generator list")
        return []
    return Lifter(gens).lift(v)


def module_intersect(a: SubmoduleGB, b: SubmoduleGB) -> SubmoduleGB:
    """Intersection of two submodules via a tag variable ``t``.

    Generators ``t * a_i`` and ``(1 - t) * b_j`` are completed under an order
    in which ``t`` dominates everything; the ``t``-free part is the intersection.
    """
    if a.rank != b.rank:
        raise ValueError("modules of different rank")
    if a.ring.names != b.ring.names:
        raise ValueError("modules over different rings")
    ring, m = a.ring, a.rank
    if not a.generators or not b.generators:
        return SubmoduleGB(ring, m, (), True)
    n = ring.nvars
    vecs = []
    for row in a.generators:
        vecs.append({(pos, e + (1,)): c for (pos, e), c in _to_vec(row).items()})
    for row in b.generators:
        vec = {}
        for (pos, e), c in _to_vec(row).items():
            vec[(pos, e + (0,))] = c
            vec[(pos, e + (1,))] = -c
        vecs.append(vec)
    key = _elim_key(ring.order, n)
    G = _reduce_basis(_buchberger(vecs, key, ideal=(m == 1)), key)
    rows = []
    for g in G:
        if g.lt[1][n] == 0:
            rows.append(_from_vec({(pos, e[:n]): c for (pos, e), c in g.vec.items()}, ring, m))
    return module_reduced_gb(rows, ring=ring, m=m)


def buchberger_certify(gb: SubmoduleGB) -> bool:
    """True iff every S-vector of ``gb`` reduces to zero modulo ``gb``."""
    by_pos, key = _gb_index(gb)
    elems = [g for lst in by_pos.values() for g in lst]
    for i, gi in enumerate(elems):
        lci = gi.vec[gi.lt]
        for gj in elems[i + 1:]:
            if gi.lt[0] != gj.lt[0]:
                continue
            lcj = gj.vec[gj.lt]
            lcm = _lcm(gi.lt[1], gj.lt[1])
            s: dict = {}
            _axpy(s, gi.vec, tuple(x - y for x, y in zip(lcm, gi.lt[1])), -1 / lci)
            _axpy(s, gj.vec, tuple(x - y for x, y in zip(lcm, gj.lt[1])), 1 / lcj)
            rem, _ = _reduce(s, None, by_pos, key)
            if rem:
                return False
    return True


def ideal_intersect(a: Sequence[Polynomial], b: Sequence[Polynomial]) -> IdealGB:
    ra = module_reduced_gb([(p,) for p in a])
    rb = module_reduced_gb([(p,) for p in b], ring=ra.ring, m=1)
    gb = module_intersect(ra, rb)
    return IdealGB(gb.ring, tuple(v[0] for v in gb.generators), True)


def ideal_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    """Generator of the principal ideal ``<a> & <b>``, i.e. lcm(a, b) up to a constant."""
    gb = ideal_intersect([a], [b])
    if len(gb.generators) != 1:
        raise ArithmeticError("intersection of principal ideals is not principal")
    return gb.generators[0]


def same_module(a: SubmoduleGB, b: SubmoduleGB) -> bool:
    """Equality test for two reduced bases over the same order."""
    return a.rank == b.rank and a.generators == b.generators
