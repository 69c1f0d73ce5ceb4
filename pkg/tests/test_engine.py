import pytest

from flpfactor.engine import (
    PreconditionError,
    factorize_wrt,
    flp_factorize,
    flp_run,
    frp_factorize,
    is_flp_in_W,
)
from flpfactor.matpoly import PolyMatrix, d_i, mat_mul, rank
from flpfactor.modquot import module_equal, module_proper_subset, row_module
from flpfactor.polyring import associated
from support import EX1_F1, EX2_F1, M, R, example1, example2, z1, z2, z3

O, I1 = R.zero(), R.one()


@pytest.fixture(scope="module")
def run1():
    return flp_run(example1())


@pytest.fixture(scope="module")
def run2():
    return flp_run(example2())


def _check_invariants(F, facs):
    r = rank(F)
    d = d_i(F, r)
    for fac in facs:
        assert mat_mul(fac.G, fac.F1) == F
        assert rank(fac.F1) == r == fac.F1.nrows
        assert associated(fac.d_r_of_G * d_i(fac.F1, r), d)
        assert fac.verified
    mods = [row_module(f.F1) for f in facs]
    for i, a in enumerate(mods):
        for j, b in enumerate(mods):
            if i != j:
                assert not module_proper_subset(a, b)


def test_example1_result(run1):
    assert run1.branch == "A"
    (fac,) = run1.factorizations
    assert associated(fac.f, z1 - 1)
    assert module_equal(row_module(fac.F1), row_module(EX1_F1))
    _check_invariants(example1(), run1.factorizations)


def test_example2_result(run2):
    assert run2.branch == "B"
    (fac,) = run2.factorizations
    assert associated(fac.f, z1 * z2 * z3)
    assert module_equal(row_module(fac.F1), row_module(EX2_F1))
    _check_invariants(example2(), run2.factorizations)


def test_factorize_wrt_examples():
    F = example1()
    assert factorize_wrt(F, z2) is None
    fac = factorize_wrt(F, z1 - 1)
    assert fac is not None and associated(fac.d_r_of_G, z1 - 1)
    trivial = factorize_wrt(F, I1)
    assert trivial is not None and trivial.d_r_of_G.is_constant()
    with pytest.raises(ValueError):
        factorize_wrt(F, z3)


def test_is_flp_in_W(run2):
    by_divisor = {str(e.divisor): e for e in run2.candidates}
    assert not is_flp_in_W(by_divisor["1"], run2.candidates, "B")
    assert is_flp_in_W(by_divisor["z1*z2*z3"], run2.candidates, "B")
    only = by_divisor["z1*z2*z3"]
    assert is_flp_in_W(only, [only], "B")


def test_no_proper_divisor_gives_same_factor(run1, run2):
    for run in (run1, run2):
        for fac in run.factorizations:
            for g in run.lattice.divisors:
                if g.divides(fac.f) and not fac.f.divides(g):
                    assert not associated(fac.d_r_of_G, g)


def test_branch_b_on_unit_ideal_matches(run1):
    forced = flp_run(example1(), branch="B")
    assert len(forced.factorizations) == len(run1.factorizations)
    for a, b in zip(forced.factorizations, run1.factorizations):
        assert associated(a.f, b.f)
        assert module_equal(row_module(a.F1), row_module(b.F1))
    with pytest.raises(PreconditionError):
        flp_run(example2(), branch="A")


def test_all_factorizations_flag():
    facs = flp_factorize(example1(), all_factorizations=True)
    assert len(facs) == 2
    assert {str(f.f.monic()) for f in facs} == {"1", "z1 - 1"}
    for fac in facs:
        assert mat_mul(fac.G, fac.F1) == example1()


def test_preconditions():
    with pytest.raises(PreconditionError):
        flp_factorize(EX1_F1)  # full row rank
    with pytest.raises(PreconditionError):
        flp_factorize(PolyMatrix.zeros(3, 3, R))
    with pytest.raises(PreconditionError, match="square-free"):
        flp_factorize(M([[z1**2, O, O], [O, O, O], [z1**2, O, O]]))
    with pytest.raises(PreconditionError):
        frp_factorize(M([[z1, O], [O, z2]]))


def test_frp_on_transposes():
    for F in (example1(), example2()):
        T = F.transpose()
        facs = frp_factorize(T)
        assert len(facs) == 1
        fac = facs[0]
        # right-prime form: T == F1 @ G with F1 of shape l x r
        assert mat_mul(fac.F1, fac.G) == T
        assert fac.F1.shape == (3, 2)


def test_deterministic_output():
    a = flp_factorize(example2())
    b = flp_factorize(example2())
    assert [(f.G, f.F1, f.f) for f in a] == [(f.G, f.F1, f.f) for f in b]


def test_supplied_factors(run2):
    run = flp_run(example2(), factors=[z3, z1, z2])
    assert len(run.lattice) == 8
    assert module_equal(row_module(run.factorizations[0].F1), row_module(EX2_F1))
