"""The reflection R on Enriques Mukai vectors.

Closed form, in doubled coordinates::

    R(r, D, t) = (t, D + ((t + r)/2) K, r)

The same vector is also assembled from the two exact sequences that realize
R on sheaves: the dual evaluation sequence gives ``v_bar = h v(O) - v(E)^*``
and the universal extension adds ``h`` copies of ``K``, where h = chi(E).
The sheaf-level hypotheses (global generation, vanishing h^1) are not visible
on the vector; ``h > 0`` is the only thing checked.
"""

from __future__ import annotations

from .errors import NotGloballyPresentableError
from .mukai import MukaiVector, dual, euler_chi
from .picard import DivisorClass


def _trivial_rank_one(v: MukaiVector, eps: int) -> MukaiVector:
    # v(O) for eps = 0, v(K) for eps = 1, in the same ambient rank as v
    return MukaiVector(1, DivisorClass((0,) * len(v.D.num), eps), 1)


def reflect(v: MukaiVector) -> MukaiVector:
    return MukaiVector(v.t, DivisorClass(v.D.num, (v.D.eps + euler_chi(v)) % 2), v.r)


def v_bar(v: MukaiVector) -> MukaiVector:
    """Class of the cokernel in ``0 -> E^* -> H^0(E)^* (x) O -> E_bar -> 0``.

    May have negative rank: it is a K-theory class, not necessarily a sheaf.
    """
    h = euler_chi(v)
    if h <= 0:
        raise NotGloballyPresentableError(f"not globally presentable: chi = {h} <= 0")
    return h * _trivial_rank_one(v, 0) - dual(v)


def reflect_via_sequences(v: MukaiVector) -> MukaiVector:
    """``h v(K) + v_bar(v)``: the universal extension of E_bar by H^1(E_bar) (x) K."""
    bar = v_bar(v)
    return euler_chi(v) * _trivial_rank_one(v, 1) + bar


def rank_parity(v: MukaiVector) -> bool:
    return v.r % 2 == reflect(v).r % 2
