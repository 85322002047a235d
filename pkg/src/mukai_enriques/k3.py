"""Pullback of Enriques Mukai vectors to the K3 double cover.

Only the image ``pi^* Num(S)`` is modelled: classes keep their E10
coordinates and the intersection form is doubled.  Since chi(O_X) = 2 the
last component of the pulled-back vector is an honest integer and equals
the doubled component ``t`` on S.  Pairing sign follows the convention
``<v, v> = 2 r s - D^2``, under which K3 exceptional vectors have square 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EvenRankError
from .lattice import GramLattice, NumClass, e10_preset, pair
from .mukai import MukaiVector
from .picard import DivisorClass


@dataclass(frozen=True)
class K3MukaiVector:
    r: int
    Dnum: NumClass
    s: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "Dnum", tuple(int(a) for a in self.Dnum))


def k3_pair(v: K3MukaiVector, w: K3MukaiVector, lattice: GramLattice | None = None) -> int:
    L = lattice or e10_preset()
    return v.r * w.s + w.r * v.s - 2 * pair(L, v.Dnum, w.Dnum)


def k3_square(w: K3MukaiVector, lattice: GramLattice | None = None) -> int:
    return k3_pair(w, w, lattice)


def pullback(v: MukaiVector) -> K3MukaiVector:
    # pi^* K = 0, so the torsion bit is lost
    return K3MukaiVector(v.r, v.D.num, v.t)


def kuleshov_realizable(w: K3MukaiVector, lattice: GramLattice | None = None) -> bool:
    """Positive rank and square 2: the vectors realized by simple semistable bundles on a K3."""
    return w.r > 0 and k3_square(w, lattice) == 2


def coprime_transfer(
    H: DivisorClass, D: DivisorClass, r: int, lattice: GramLattice | None = None
) -> bool:
    """gcd(pi^*H . pi^*D, r) = gcd(2 H.D, r) = 1, for odd r.

    For odd r the factor 2 cannot share a prime with r, so the condition on
    the cover is the same as gcd(H.D, r) = 1 downstairs.
    """
    if r % 2 == 0:
        raise EvenRankError(f"even rank {r}: the factor 2 may share a divisor with r")
    hd = pair(lattice or e10_preset(), H.num, D.num)
    upstairs = math.gcd(2 * hd, r) == 1
    assert upstairs == (math.gcd(hd, r) == 1)
    return upstairs
