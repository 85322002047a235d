import pytest
from hypothesis import given, settings

from mukai_enriques.errors import NotGloballyPresentableError
from mukai_enriques.mukai import (
    MukaiVector,
    canonical_bundle,
    curve_sheaf_vector,
    euler_chi,
    is_exceptional,
    line_bundle_vector,
    square,
)
from mukai_enriques.picard import DivisorClass
from mukai_enriques.reflection import rank_parity, reflect, reflect_via_sequences, v_bar

from .conftest import E, F, RANK, comb, random_vector, vectors

ZERO = (0,) * RANK
O = MukaiVector(1, DivisorClass(ZERO), 1)
ALPHA1 = tuple(1 if i == 2 else 0 for i in range(RANK))
FG = comb((1, E), (1, F))


def test_reflect_nodal_curve_sheaf():
    w = reflect(curve_sheaf_vector(ALPHA1, 0))
    assert w == MukaiVector(2, DivisorClass(ALPHA1, 1), 0)
    assert square(w) == 2


def test_reflect_rank_three_bundle():
    assert reflect(MukaiVector(3, DivisorClass(FG), 1)) == MukaiVector(1, DivisorClass(FG), 3)


def test_reflect_line_bundle_family():
    for a in range(0, 6):
        for b in range(0, 6):
            w = reflect(line_bundle_vector(DivisorClass(comb((a, E), (b, F)))))
            assert w.r == 2 * a * b + 1
            assert w.D.eps == (a * b + 1) % 2


def test_v_bar_examples():
    assert v_bar(O) == MukaiVector(0, DivisorClass(ZERO), 0)
    bar = v_bar(MukaiVector(3, DivisorClass(FG), 1))
    assert bar == MukaiVector(-1, DivisorClass(FG), 1)
    assert euler_chi(bar) == 0
    with pytest.raises(NotGloballyPresentableError):
        v_bar(MukaiVector(1, DivisorClass(ZERO), -1))


def test_v_bar_euler_chi_zero_sweep(rng):
    n = 0
    while n < 100:
        v = random_vector(rng)
        if euler_chi(v) > 0:
            assert euler_chi(v_bar(v)) == 0
            n += 1


def test_reflect_via_sequences_examples():
    assert reflect_via_sequences(MukaiVector(3, DivisorClass(FG), 1)) == MukaiVector(1, DivisorClass(FG), 3)
    assert reflect_via_sequences(O) == canonical_bundle() == reflect(O)


def test_reflect_via_sequences_agrees(rng):
    n = 0
    while n < 1000:
        v = random_vector(rng)
        if euler_chi(v) > 0:
            assert reflect_via_sequences(v) == reflect(v)
            n += 1


def test_rank_parity_examples(rng):
    assert reflect(MukaiVector(3, DivisorClass(ZERO), 1)).r % 2 == 1
    assert rank_parity(MukaiVector(3, DivisorClass(ZERO), 1))
    assert rank_parity(MukaiVector(0, DivisorClass(ALPHA1), 2))
    assert reflect(MukaiVector(0, DivisorClass(ALPHA1), 2)).r == 2
    assert all(rank_parity(random_vector(rng)) for _ in range(1000))


@settings(max_examples=300)
@given(vectors())
def test_reflection_invariants(v):
    w = reflect(v)
    assert reflect(w) == v
    assert square(w) == square(v)
    if v.r > 0 and w.r > 0:
        assert is_exceptional(v) == is_exceptional(w)
