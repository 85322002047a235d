"""Isotropic sequences in E10 and chi-level checks for exceptional collections.

Half-pencils F_1, ..., F_10 of the ten elliptic pencils on a general Enriques
surface satisfy F_i^2 = 0 and F_i.F_j = 1.  For the line bundles O(F_i) this
gives chi(O(F_i), O(F_j)) = 1 + (F_j - F_i)^2 / 2 = 0 for i != j, the
numerical shadow of the ten-term exceptional collection.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import DimensionError, NotFoundError
from .lattice import GramLattice, NumClass, content, e10_preset, enumerate_isotropic, pair, vec_add
from .mukai import MukaiVector, line_bundle_vector, mukai_pair
from .picard import CurveTestSet, DivisorClass

MAX_SEQUENCE_LENGTH = 10


@dataclass(frozen=True)
class IsotropicSequence:
    classes: tuple[NumClass, ...]

    def violations(self, lattice: GramLattice | None = None) -> list[str]:
        L = lattice or e10_preset()
        out = []
        for i, f in enumerate(self.classes):
            if pair(L, f, f) != 0:
                out.append(f"f{i}^2 = {pair(L, f, f)}")
            if content(f) != 1:
                out.append(f"f{i} is not primitive")
            for j in range(i + 1, len(self.classes)):
                p = pair(L, f, self.classes[j])
                if p != 1:
                    out.append(f"f{i}.f{j} = {p}")
        return out

    def gram_matrix(self, lattice: GramLattice | None = None) -> list[list[int]]:
        L = lattice or e10_preset()
        return [[pair(L, a, b) for b in self.classes] for a in self.classes]


def find_isotropic_sequence(L: GramLattice, length: int, bound: int) -> IsotropicSequence:
    """Depth-first search for ``length`` isotropic classes pairing to 1 with each other.

    Candidates are the sign-normalized classes of ``enumerate_isotropic`` in
    lexicographic order, each followed by its negative (the negative of an
    isotropic class pairs to -1 with anything its representative pairs to 1
    with, so both signs are needed).  Members are taken in increasing
    candidate order and the first complete sequence is returned.
    """
    if not 1 <= length <= MAX_SEQUENCE_LENGTH:
        raise DimensionError(f"length must be in 1..{MAX_SEQUENCE_LENGTH}, got {length}")
    reps = enumerate_isotropic(L, bound)
    cands = [c for rep in reps for c in (rep, tuple(-a for a in rep))]
    if not cands:
        raise NotFoundError(f"not found within bound {bound}: no isotropic classes")
    C = np.array(cands, dtype=np.int64)
    P = C @ np.array(L.gram, dtype=np.int64)

    def extend(chosen: list[int], pool: np.ndarray) -> list[int] | None:
        if len(chosen) == length:
            return chosen
        need = length - len(chosen)
        for pos in range(len(pool) - need + 1):
            i = int(pool[pos])
            rest = pool[pos + 1 :]
            rest = rest[P[rest] @ C[i] == 1]
            if len(rest) < need - 1:
                continue
            found = extend(chosen + [i], rest)
            if found is not None:
                return found
        return None

    result = extend([], np.arange(len(cands)))
    if result is None:
        raise NotFoundError(f"not found within bound {bound} (not a proof of nonexistence)")
    seq = IsotropicSequence(tuple(cands[i] for i in result))
    bad = seq.violations(L)
    assert not bad, bad
    return seq


def find_smallest_bound_sequence(
    L: GramLattice, length: int, max_bound: int = 4
) -> tuple[int, IsotropicSequence]:
    for bound in range(1, max_bound + 1):
        try:
            return bound, find_isotropic_sequence(L, length, bound)
        except NotFoundError:
            continue
    raise NotFoundError(f"not found within bound {max_bound}")


@lru_cache(maxsize=None)
def ten_pencils(lattice: GramLattice | None = None) -> IsotropicSequence:
    return find_smallest_bound_sequence(lattice or e10_preset(), MAX_SEQUENCE_LENGTH)[1]


def standard_test_set(lattice: GramLattice | None = None) -> CurveTestSet:
    """The ten half-pencils as test curves, oriented by their sum (square 90)."""
    seq = ten_pencils(lattice)
    total = seq.classes[0]
    for f in seq.classes[1:]:
        total = vec_add(total, f)
    return CurveTestSet(seq.classes, total, lattice)


def standard_seed(lattice: GramLattice | None = None) -> DivisorClass:
    """The sum of the ten half-pencils, ample relative to ``standard_test_set``."""
    return DivisorClass(standard_test_set(lattice).cone_ref, 0)


@dataclass(frozen=True)
class CollectionReport:
    chi: list[list[int]]
    verdict: str
    failures: list[str]


def check_exceptional_collection_necessary(
    vs: Sequence[MukaiVector], lattice: GramLattice | None = None
) -> CollectionReport:
    """chi(v_a, v_a) = 1 and chi(v_a, v_b) = 0 for a != b.

    These are necessary conditions only; Ext-level vanishing is not visible
    on Mukai vectors.
    """
    L = lattice or e10_preset()
    chi = [[mukai_pair(v, w, L) for w in vs] for v in vs]
    failures = []
    for a in range(len(vs)):
        for b in range(len(vs)):
            if a == b and chi[a][b] != 1:
                failures.append(f"chi(v{a}, v{a}) = {chi[a][b]} != 1")
            elif a != b and chi[a][b] != 0:
                failures.append(f"chi(v{a}, v{b}) = {chi[a][b]} != 0")
    return CollectionReport(chi, "FAIL" if failures else "PASS", failures)


def line_bundle_collection(seq: IsotropicSequence, lattice: GramLattice | None = None) -> list[MukaiVector]:
    return [line_bundle_vector(DivisorClass(f, 0), lattice) for f in seq.classes]
