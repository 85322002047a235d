"""Worked reflection examples, recomputed end to end.

Fixed choices in the E10 basis (e, f, a1..a8): the half-pencils are F = e
and G = f (F.G = 1), and the (-2)-curve is the simple root a1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import e10_preset
from .mukai import (
    MukaiVector,
    add,
    canonical_bundle,
    curve_sheaf_vector,
    euler_chi,
    from_chern,
    is_exceptional,
    line_bundle_vector,
    square,
)
from .picard import CurveTestSet, DivisorClass, canonical_class, is_ample_wrt, rr_line_bundle
from .reflection import reflect, reflect_via_sequences


@dataclass
class GalleryEntry:
    name: str
    checks: dict[str, tuple[object, object]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(expected == computed for expected, computed in self.checks.values())


def half_pencils() -> tuple[DivisorClass, DivisorClass]:
    L = e10_preset()
    return DivisorClass(L.basis(0)), DivisorClass(L.basis(1))


def nodal_curve() -> tuple[int, ...]:
    return e10_preset().basis(2)


def extremal_from_nodal_curve() -> GalleryEntry:
    """R(O_C) for a (-2)-curve C is an extremal rank 2 bundle."""
    C = nodal_curve()
    v = curve_sheaf_vector(C, 0)
    w = reflect(v)
    entry = GalleryEntry("example 1: R(O_C), C a (-2)-curve")
    entry.checks["v(O_C)"] = ((0, C, 0, 2), (v.r, v.D.num, v.D.eps, v.t))
    entry.checks["rank of R(O_C)"] = (2, w.r)
    entry.checks["s of R(O_C)"] = (0, w.s)
    entry.checks["D of R(O_C) is C + K"] = (DivisorClass(C) + canonical_class(), w.D)
    entry.checks["square (chi(E,E))"] = (2, square(w))
    return entry


def exceptional_from_two_pencils() -> GalleryEntry:
    """The rank 3 bundle E built from the base points of |F + G|, and R(E) = O(F + G)."""
    F, G = half_pencils()
    ideal = from_chern(1, F + G, 2)  # J_{x+y}(F+G)
    # x, y are base points of the pencil, so every section of O(F+G) lies in J;
    # h^2(J) = 0, hence h^1(J) = h^0 - chi
    h0 = rr_line_bundle(F + G)
    h1 = h0 - euler_chi(ideal)
    E = add(ideal, h1 * canonical_bundle())
    target = line_bundle_vector(F + G)
    entry = GalleryEntry("example 2: E from |F+G|, R(E) = O(F+G)")
    entry.checks["v(J_{x+y}(F+G))"] = ((1, -1), (ideal.r, ideal.t))
    entry.checks["h^1 of the ideal sheaf"] = (2, h1)
    entry.checks["v(E)"] = (MukaiVector(3, F + G, 1), E)
    entry.checks["E exceptional"] = (True, is_exceptional(E))
    entry.checks["chi(E)"] = (2, euler_chi(E))
    entry.checks["R(E) = v(O(F+G))"] = (target, reflect(E))
    entry.checks["sequence construction agrees"] = (target, reflect_via_sequences(E))
    entry.checks["R(O(F+G)) = E"] = (E, reflect(target))
    return entry


def exceptional_family(a: int = 3, b: int = 2) -> GalleryEntry:
    """R(O(aF + bG)) is exceptional of rank 2ab + 1."""
    F, G = half_pencils()
    D = a * F + b * G
    T = CurveTestSet((F.num, G.num), (F + G).num)
    w = reflect(line_bundle_vector(D))
    entry = GalleryEntry(f"example 3: R(O({a}F+{b}G))")
    entry.checks["aF+bG ample on {F, G}"] = (True, is_ample_wrt(D, T))
    entry.checks["rank 2ab+1"] = (2 * a * b + 1, w.r)
    entry.checks["exceptional"] = (True, is_exceptional(w))
    return entry


def run_gallery() -> list[GalleryEntry]:
    return [extremal_from_nodal_curve(), exceptional_from_two_pencils(), exceptional_family()]
