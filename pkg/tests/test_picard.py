import pytest
from hypothesis import given

from mukai_enriques.errors import HypothesisError, NegativeSquareError, TestSetError, ZeroClassError
from mukai_enriques.lattice import content, e10_preset, pair
from mukai_enriques.picard import (
    CurveTestSet,
    DivisorClass,
    Irreducible,
    Pencil,
    ample_criteria,
    canonical_class,
    classify_free_system,
    is_ample_wrt,
    is_nef_wrt,
    rr_line_bundle,
)

from .conftest import E, F, RANK, comb, divisors

F1, F2 = E, F
ZERO = (0,) * RANK


def div(*terms, eps=0):
    return DivisorClass(comb(*terms), eps)


def test_canonical_class_is_two_torsion(L):
    K = canonical_class()
    assert K + K == DivisorClass(ZERO, 0)
    assert pair(L, K.num, K.num) == 0
    assert K != DivisorClass(ZERO, 0)


def test_divisor_arithmetic():
    K = canonical_class()
    D = div((1, F1), eps=1)
    assert (D + K).eps == 0
    assert (-K) == K
    assert 3 * K == K and 2 * K == DivisorClass(ZERO)
    with pytest.raises(ValueError):
        DivisorClass(ZERO, 2)


def test_rr_examples():
    assert rr_line_bundle(DivisorClass(ZERO)) == 1
    assert rr_line_bundle(div((1, F1), (1, F2))) == 2
    for a in range(-4, 5):
        for b in range(-4, 5):
            # (a f1 + b f2)^2 = 2ab
            assert rr_line_bundle(div((a, F1), (b, F2))) == 1 + a * b


@given(divisors)
def test_rr_ignores_torsion(D):
    assert rr_line_bundle(D) == rr_line_bundle(D + canonical_class())


def test_nef_and_ample_examples():
    T = CurveTestSet((F1, F2), comb((1, F1), (1, F2)))
    assert is_nef_wrt(div((1, F1), (1, F2)), T)
    assert not is_nef_wrt(div((-1, F1)), CurveTestSet((F2,), comb((1, F1), (1, F2))))
    D = div((2, F1), (3, F2))
    assert pair(e10_preset(), D.num, F1) == 3 and pair(e10_preset(), D.num, F2) == 2
    assert is_ample_wrt(D, T)
    assert not is_ample_wrt(div((1, F1)), T)  # D.f1 = 0


def test_test_set_validation():
    with pytest.raises(TestSetError):
        CurveTestSet((F1,), F1)  # cone_ref must have positive square
    alpha1 = tuple(1 if i == 2 else 0 for i in range(RANK))
    with pytest.raises(TestSetError):
        CurveTestSet((comb((2, alpha1)),), comb((1, F1), (1, F2)))  # square -8


def test_classify_examples():
    assert classify_free_system(div((1, F1), (1, F2))) == Irreducible()
    assert classify_free_system(div((2, F1))) == Pencil(2, F1)
    assert classify_free_system(div((3, F1), (3, F2))) == Irreducible()
    with pytest.raises(NegativeSquareError):
        classify_free_system(DivisorClass(tuple(1 if i == 2 else 0 for i in range(RANK))))
    with pytest.raises(ZeroClassError):
        classify_free_system(DivisorClass(ZERO))
    with pytest.raises(HypothesisError):
        classify_free_system(div((1, F1)), fixed_component_free=False)


@given(divisors)
def test_classify_isotropic_invariants(D):
    L = e10_preset()
    if not any(D.num) or pair(L, D.num, D.num) != 0:
        return
    res = classify_free_system(D)
    assert isinstance(res, Pencil)
    assert content(res.P) == 1
    assert pair(L, res.P, res.P) == 0
    assert tuple(res.k * a for a in res.P) == D.num


def test_ample_criteria_examples():
    T = CurveTestSet((F1, F2), comb((1, F1), (1, F2)))
    assert ample_criteria(div((2, F1), (2, F2)), T) == {
        "criteria_met": True,
        "ample": True,
        "two_D_globally_generated": True,
        "three_D_very_ample": True,
    }
    assert ample_criteria(div((1, F1)), T) == {"criteria_met": False}
    assert ample_criteria(div((1, F1), (1, F2)), T) == {"criteria_met": False}


@given(divisors)
def test_ample_criteria_only_via_nef_and_square(D):
    T = CurveTestSet((F1, F2), comb((1, F1), (1, F2)))
    met = ample_criteria(D, T)["criteria_met"]
    assert met == (is_nef_wrt(D, T) and pair(e10_preset(), D.num, D.num) >= 6)
