import math

import pytest
from hypothesis import given

from mukai_enriques.errors import EvenRankError
from mukai_enriques.k3 import K3MukaiVector, coprime_transfer, k3_square, kuleshov_realizable, pullback
from mukai_enriques.lattice import pair
from mukai_enriques.mukai import MukaiVector, is_exceptional, square
from mukai_enriques.picard import DivisorClass, canonical_class

from .conftest import E, F, RANK, comb, random_class, random_exceptional, random_vector, vectors

ZERO = (0,) * RANK
FG = comb((1, E), (1, F))


def test_pullback_examples():
    w = pullback(MukaiVector(1, DivisorClass(ZERO), 1))
    assert w == K3MukaiVector(1, ZERO, 1) and k3_square(w) == 2
    w = pullback(MukaiVector(3, DivisorClass(FG, 1), 1))
    assert w == K3MukaiVector(3, FG, 1)
    assert k3_square(w) == 2 * 3 * 1 - 2 * 2 == 2


def test_pullback_doubles_square(rng):
    for _ in range(500):
        v = random_vector(rng)
        assert k3_square(pullback(v)) == 2 * square(v)


@given(vectors())
def test_pullback_forgets_torsion(v):
    vk = MukaiVector(v.r, v.D + canonical_class(), v.t)
    assert pullback(vk) == pullback(v)


def test_kuleshov_examples(rng):
    assert kuleshov_realizable(K3MukaiVector(1, ZERO, 1))
    assert k3_square(K3MukaiVector(2, ZERO, 1)) == 4
    assert not kuleshov_realizable(K3MukaiVector(2, ZERO, 1))
    for _ in range(100):
        v = random_exceptional(rng)
        assert is_exceptional(v) and kuleshov_realizable(pullback(v))


def test_coprime_transfer_examples():
    # H.D = 1 and H.D = 3 respectively
    assert coprime_transfer(DivisorClass(E), DivisorClass(F), 3)
    assert not coprime_transfer(DivisorClass(comb((3, E))), DivisorClass(F), 3)
    with pytest.raises(EvenRankError):
        coprime_transfer(DivisorClass(E), DivisorClass(F), 2)


def test_coprime_transfer_sweep(L, rng):
    for _ in range(200):
        H, D = random_class(rng), random_class(rng)
        r = 2 * rng.randint(0, 50) + 1
        hd = pair(L, H, D)
        assert math.gcd(2 * hd, r) == math.gcd(hd, r)
        assert coprime_transfer(DivisorClass(H), DivisorClass(D), r) == (math.gcd(hd, r) == 1)
