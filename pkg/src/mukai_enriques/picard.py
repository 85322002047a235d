"""Divisor classes on an Enriques surface.

A class is a numerical class in E10 plus the coefficient of the 2-torsion
canonical class K.  Positivity (nef, ample) cannot be decided from lattice
data, so those predicates are evaluated against a finite ``CurveTestSet``:
they are statements about the listed curves and the chosen positive-cone
component, nothing more.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import HypothesisError, NegativeSquareError, TestSetError, ZeroClassError
from .lattice import (
    GramLattice,
    NumClass,
    divisibility,
    e10_preset,
    is_zero,
    pair,
    vec_add,
    vec_neg,
    vec_scale,
)


@dataclass(frozen=True)
class DivisorClass:
    num: NumClass
    eps: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "num", tuple(int(a) for a in self.num))
        if self.eps not in (0, 1):
            raise ValueError(f"eps must be 0 or 1, got {self.eps!r}")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(vec_add(self.num, other.num), (self.eps + other.eps) % 2)

    def __neg__(self) -> "DivisorClass":
        # -K = K since 2K = 0
        return DivisorClass(vec_neg(self.num), self.eps)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(vec_scale(k, self.num), (k * self.eps) % 2)

    @classmethod
    def zero(cls, lattice: GramLattice | None = None) -> "DivisorClass":
        L = lattice or e10_preset()
        return cls(L.zero(), 0)


def canonical_class(lattice: GramLattice | None = None) -> DivisorClass:
    L = lattice or e10_preset()
    return DivisorClass(L.zero(), 1)


def divisor_square(D: DivisorClass, lattice: GramLattice | None = None) -> int:
    return pair(lattice or e10_preset(), D.num, D.num)


def rr_line_bundle(D: DivisorClass, lattice: GramLattice | None = None) -> int:
    """chi(O(D)) = 1 + D^2/2; the torsion bit plays no role."""
    return 1 + divisor_square(D, lattice) // 2


@dataclass(frozen=True)
class CurveTestSet:
    """Finite list of candidate effective classes plus a vector fixing the positive cone."""

    curves: tuple[NumClass, ...]
    cone_ref: NumClass
    lattice: GramLattice | None = None

    __test__ = False

    def __post_init__(self) -> None:
        L = self.lattice or e10_preset()
        curves = tuple(L.check(c, f"curves[{i}]") for i, c in enumerate(self.curves))
        cone_ref = L.check(self.cone_ref, "cone_ref")
        object.__setattr__(self, "curves", curves)
        object.__setattr__(self, "cone_ref", cone_ref)
        for i, c in enumerate(curves):
            c2 = pair(L, c, c)
            if c2 < -2 or c2 % 2:
                raise TestSetError(f"curves[{i}] has square {c2}; need an even square >= -2")
        if pair(L, cone_ref, cone_ref) <= 0:
            raise TestSetError("cone_ref must have positive square")

    @property
    def form(self) -> GramLattice:
        return self.lattice or e10_preset()


def is_nef_wrt(D: DivisorClass, T: CurveTestSet) -> bool:
    L = T.form
    return all(pair(L, D.num, c) >= 0 for c in T.curves) and pair(L, D.num, T.cone_ref) >= 0


def is_ample_wrt(D: DivisorClass, T: CurveTestSet) -> bool:
    L = T.form
    return (
        all(pair(L, D.num, c) > 0 for c in T.curves)
        and pair(L, D.num, T.cone_ref) > 0
        and pair(L, D.num, D.num) > 0
    )


@dataclass(frozen=True)
class Irreducible:
    """|D| contains an irreducible curve (D^2 > 0)."""


@dataclass(frozen=True)
class Pencil:
    """D = k P with |P| a genus one pencil (D^2 = 0)."""

    k: int
    P: NumClass


def classify_free_system(
    D: DivisorClass,
    lattice: GramLattice | None = None,
    *,
    fixed_component_free: bool = True,
) -> Irreducible | Pencil:
    """Split a fixed-component-free linear system by the sign of D^2.

    ``fixed_component_free`` is the caller's assertion; the lattice cannot
    check it.  The multiplicity k is the numerical divisibility of D; the
    torsion bit is ignored.
    """
    if not fixed_component_free:
        raise HypothesisError("classification needs |D| without fixed components")
    L = lattice or e10_preset()
    if is_zero(D.num):
        raise ZeroClassError("zero class")
    d2 = pair(L, D.num, D.num)
    if d2 < 0:
        raise NegativeSquareError(f"negative square {d2}: |D| would have fixed components")
    if d2 > 0:
        return Irreducible()
    k = divisibility(L, D.num)
    return Pencil(k, tuple(a // k for a in D.num))


AMPLE_SQUARE_THRESHOLD = 6


def ample_criteria(D: DivisorClass, T: CurveTestSet) -> dict[str, bool]:
    """Nef with D^2 >= 6 gives: D ample, 2D globally generated, 3D very ample."""
    if is_nef_wrt(D, T) and divisor_square(D, T.form) >= AMPLE_SQUARE_THRESHOLD:
        return {
            "criteria_met": True,
            "ample": True,
            "two_D_globally_generated": True,
            "three_D_very_ample": True,
        }
    return {"criteria_met": False}


def divisor(coords: Sequence[int], eps: int = 0) -> DivisorClass:
    return DivisorClass(tuple(coords), eps)
