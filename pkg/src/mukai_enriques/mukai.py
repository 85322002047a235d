"""Mukai vectors on an Enriques surface.

A vector ``(r, D, s)`` has a half-integral last component, so it is stored
as ``t = 2s``.  Sheaf vectors satisfy ``t = r (mod 2)``: with chi(O) = 1,
``s = D^2/2 - c2 + r/2`` and D^2 is even.  That parity is enforced at
construction time, which makes every pairing an exact integer expression.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParityError
from .lattice import GramLattice, NumClass, e10_preset, pair
from .picard import DivisorClass, canonical_class, divisor_square


@dataclass(frozen=True)
class MukaiVector:
    r: int
    D: DivisorClass
    t: int

    def __post_init__(self) -> None:
        if (self.t - self.r) % 2:
            raise ParityError(f"parity violation: t={self.t} and r={self.r} must agree mod 2")

    @property
    def s(self) -> Fraction:
        return Fraction(self.t, 2)

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r + other.r, self.D + other.D, self.t + other.t)

    def __sub__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r - other.r, self.D - other.D, self.t - other.t)

    def __rmul__(self, k: int) -> "MukaiVector":
        return MukaiVector(k * self.r, k * self.D, k * self.t)


def mukai_vector(r: int, num: NumClass, t: int, eps: int = 0) -> MukaiVector:
    return MukaiVector(r, DivisorClass(num, eps), t)


def structure_sheaf(lattice: GramLattice | None = None) -> MukaiVector:
    return MukaiVector(1, DivisorClass.zero(lattice), 1)


def canonical_bundle(lattice: GramLattice | None = None) -> MukaiVector:
    """v(O(K)) = (1, K, 1)."""
    return MukaiVector(1, canonical_class(lattice), 1)


def mukai_pair(v: MukaiVector, w: MukaiVector, lattice: GramLattice | None = None) -> int:
    """chi(v, w) = r s' + r' s - D.D'; symmetric, and blind to the torsion bits."""
    L = lattice or e10_preset()
    return (v.r * w.t + w.r * v.t) // 2 - pair(L, v.D.num, w.D.num)


def square(v: MukaiVector, lattice: GramLattice | None = None) -> int:
    """v^2 = r t - D^2 = chi(E, E)."""
    return v.r * v.t - divisor_square(v.D, lattice)


def from_chern(r: int, D: DivisorClass, c2: int, lattice: GramLattice | None = None) -> MukaiVector:
    return MukaiVector(r, D, divisor_square(D, lattice) - 2 * c2 + r)


def chi_self_formula(r: int, c1_sq: int, c2: int) -> int:
    """Riemann-Roch for chi(E, E) on an Enriques surface (chi(O_S) = 1)."""
    if c1_sq % 2:
        raise ParityError(f"c1^2 = {c1_sq} is odd; the Enriques lattice is even")
    return r * r + (r - 1) * c1_sq - 2 * r * c2


def dual(v: MukaiVector) -> MukaiVector:
    return MukaiVector(v.r, -v.D, v.t)


def twist(v: MukaiVector, M: DivisorClass, lattice: GramLattice | None = None) -> MukaiVector:
    """v(E (x) O(M))."""
    L = lattice or e10_preset()
    return MukaiVector(
        v.r,
        v.D + v.r * M,
        v.t + 2 * pair(L, v.D.num, M.num) + v.r * pair(L, M.num, M.num),
    )


def line_bundle_vector(D: DivisorClass, lattice: GramLattice | None = None) -> MukaiVector:
    return MukaiVector(1, D, divisor_square(D, lattice) + 1)


def curve_sheaf_vector(C: NumClass, degA: int, lattice: GramLattice | None = None) -> MukaiVector:
    """v(O_C(A)) for a curve class C and a divisor A of degree ``degA`` on C.

    By adjunction (K.C = 0) the arithmetic genus is 1 + C^2/2, so
    chi(O_C(A)) = degA - C^2/2, and that is the s-component of a rank 0 vector.
    """
    L = lattice or e10_preset()
    c2 = pair(L, C, C)
    if c2 % 2:
        raise ParityError(f"C^2 = {c2} is odd")
    return MukaiVector(0, DivisorClass(C, 0), 2 * degA - c2)


def add(v: MukaiVector, w: MukaiVector) -> MukaiVector:
    return v + w


def is_exceptional(v: MukaiVector, lattice: GramLattice | None = None) -> bool:
    return v.r > 0 and square(v, lattice) == 1


def euler_chi(v: MukaiVector) -> int:
    """chi(E) = <v(O), v> = (t + r)/2."""
    return (v.t + v.r) // 2
