"""Integral symmetric bilinear forms on Z^n and the Enriques lattice E10.

Classes are plain tuples of Python ints (``NumClass``), so all arithmetic is
arbitrary precision.  The only place numpy is used is the box enumeration of
isotropic vectors, where the magnitudes are bounded up front and checked
against int64 range before anything is computed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DimensionError, NotDivisibleError, SymmetryError, ZeroClassError

NumClass = tuple[int, ...]

E10_RESOURCE = "e10_gram.txt"
_INT64_SAFE = 2**62


@dataclass(frozen=True)
class GramLattice:
    """Z^rank with the bilinear form ``x^T gram y``."""

    rank: int
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise DimensionError(f"rank must be positive, got {self.rank}")
        if len(self.gram) != self.rank or any(len(row) != self.rank for row in self.gram):
            raise DimensionError(f"gram must be {self.rank}x{self.rank}")
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if self.gram[i][j] != self.gram[j][i]:
                    raise SymmetryError(f"gram[{i}][{j}] != gram[{j}][{i}]")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "GramLattice":
        gram = tuple(tuple(int(a) for a in row) for row in rows)
        return cls(len(gram), gram)

    def basis(self, i: int) -> NumClass:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def zero(self) -> NumClass:
        return (0,) * self.rank

    def check(self, x: Sequence[int], name: str = "class") -> NumClass:
        if len(x) != self.rank:
            raise DimensionError(f"{name} has length {len(x)}, lattice rank is {self.rank}")
        return tuple(int(a) for a in x)

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))


def parse_gram_text(text: str) -> GramLattice:
    """Parse the data-file format: one whitespace-separated row per line, ``#`` comments."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append([int(tok) for tok in line.split()])
    if not rows:
        raise DimensionError("empty Gram matrix file")
    return GramLattice.from_rows(rows)


def load_gram(path: str | Path) -> GramLattice:
    return parse_gram_text(Path(path).read_text(encoding="utf-8"))


@lru_cache(maxsize=None)
def e10_preset() -> GramLattice:
    """U + E8(-1) in the basis (e, f, a1..a8) shipped in ``data/e10_gram.txt``."""
    text = resources.files(__package__).joinpath("data").joinpath(E10_RESOURCE).read_text(encoding="utf-8")
    return parse_gram_text(text)


def determinant(L: GramLattice) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    m = [list(row) for row in L.gram]
    n = L.rank
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_unimodular(L: GramLattice) -> bool:
    return abs(determinant(L)) == 1


# -- vector helpers ----------------------------------------------------------


def vec_add(x: Sequence[int], y: Sequence[int]) -> NumClass:
    if len(x) != len(y):
        raise DimensionError(f"length mismatch {len(x)} != {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Sequence[int], y: Sequence[int]) -> NumClass:
    if len(x) != len(y):
        raise DimensionError(f"length mismatch {len(x)} != {len(y)}")
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(k: int, x: Sequence[int]) -> NumClass:
    return tuple(k * a for a in x)


def vec_neg(x: Sequence[int]) -> NumClass:
    return tuple(-a for a in x)


def is_zero(x: Sequence[int]) -> bool:
    return not any(x)


def content(x: Sequence[int]) -> int:
    """gcd of the coordinates (0 for the zero vector)."""
    return math.gcd(*x) if x else 0


# -- pairing ----------------------------------------------------------------


def pairings_with_basis(L: GramLattice, x: Sequence[int]) -> NumClass:
    """``(pair(x, b_1), ..., pair(x, b_n))``, i.e. the vector ``gram @ x``."""
    x = L.check(x)
    return tuple(sum(g * a for g, a in zip(row, x)) for row in L.gram)


def pair(L: GramLattice, x: Sequence[int], y: Sequence[int]) -> int:
    y = L.check(y, "y")
    return sum(p * b for p, b in zip(pairings_with_basis(L, x), y))


def square(L: GramLattice, x: Sequence[int]) -> int:
    return pair(L, x, x)


def divisibility(L: GramLattice, x: Sequence[int]) -> int:
    """Positive generator of ``{pair(x, y) : y in Z^n}``; 0 for x = 0 on a unimodular lattice."""
    return math.gcd(*pairings_with_basis(L, x))


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, u, w)`` with ``u*a + w*b == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_w, w = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_w, w = w, old_w - q * w
    if old_r < 0:
        return -old_r, -old_u, -old_w
    return old_r, old_u, old_w


def xgcd_vector(values: Sequence[int]) -> tuple[int, NumClass]:
    """Bezout certificate for a vector: ``sum(c_i * values_i) == gcd(values)``."""
    g = 0
    coeffs: list[int] = []
    for v in values:
        g_new, u, w = xgcd(g, v)
        coeffs = [u * c for c in coeffs] + [w]
        g = g_new
    return g, tuple(coeffs)


def solve_pairing(L: GramLattice, D: Sequence[int], target: int) -> NumClass:
    """Find X with ``pair(X, D) == target``.

    The pairings of D with the basis vectors are combined with a Bezout
    certificate, so the answer exists exactly when ``divisibility(D)``
    divides ``target``.
    """
    c = pairings_with_basis(L, D)
    g, coeffs = xgcd_vector(c)
    if g == 0:
        raise ZeroClassError("cannot solve pair(X, D) = target for D pairing to zero with everything")
    if target % g:
        raise NotDivisibleError(f"not divisible: divisibility {g} does not divide {target}")
    return vec_scale(target // g, coeffs)


# -- isotropic enumeration ---------------------------------------------------


def _split_definite_block(L: GramLattice) -> list[list[int]] | None:
    """If L is U + N with N negative definite (U on the first two coordinates), return N."""
    g = L.gram
    if L.rank < 2 or g[0][0] != 0 or g[1][1] != 0 or g[0][1] != 1:
        return None
    if any(g[i][j] for i in (0, 1) for j in range(2, L.rank)):
        return None
    block = [[-g[i][j] for j in range(2, L.rank)] for i in range(2, L.rank)]
    # Sylvester: all leading minors of -N positive
    for k in range(1, len(block) + 1):
        minor = GramLattice.from_rows(row[:k] for row in block[:k])
        if determinant(minor) <= 0:
            return None
    return [[-a for a in row] for row in block]


def _check_int64(gram: Sequence[Sequence[int]], bound: int) -> None:
    n = len(gram)
    biggest = max((abs(a) for row in gram for a in row), default=0)
    if n * n * biggest * bound * bound >= _INT64_SAFE:
        raise OverflowError("box enumeration would exceed int64 range")


def box_chunks(dim: int, bound: int, max_rows: int = 1 << 19) -> Iterator[np.ndarray]:
    """Yield the integer box ``[-bound, bound]^dim`` as int64 row blocks, in lexicographic order."""
    width = 2 * bound + 1
    tail_dim = dim
    while tail_dim > 0 and width**tail_dim > max_rows:
        tail_dim -= 1
    values = np.arange(-bound, bound + 1, dtype=np.int64)
    if tail_dim:
        tail = np.stack(np.meshgrid(*([values] * tail_dim), indexing="ij"), axis=-1).reshape(-1, tail_dim)
    else:
        tail = np.zeros((1, 0), dtype=np.int64)
    for head in itertools.product(range(-bound, bound + 1), repeat=dim - tail_dim):
        block = np.empty((tail.shape[0], dim), dtype=np.int64)
        block[:, : dim - tail_dim] = head
        block[:, dim - tail_dim :] = tail
        yield block


def _first_nonzero_positive(X: np.ndarray) -> np.ndarray:
    nz = X != 0
    idx = nz.argmax(axis=1)
    return nz.any(axis=1) & (X[np.arange(X.shape[0]), idx] > 0)


def _isotropic_box_scan(L: GramLattice, bound: int) -> list[NumClass]:
    G = np.array(L.gram, dtype=np.int64)
    found: list[NumClass] = []
    for X in box_chunks(L.rank, bound):
        q = ((X @ G) * X).sum(axis=1)
        keep = (q == 0) & _first_nonzero_positive(X)
        X = X[keep]
        X = X[np.gcd.reduce(np.abs(X), axis=1) == 1]
        found.extend(tuple(int(a) for a in row) for row in X)
    return found


def _isotropic_split(L: GramLattice, N: list[list[int]], bound: int) -> list[NumClass]:
    # x = a e + b f + y, x^2 = 2ab + y.N.y, so ab = -y.N.y / 2
    Nn = np.array(N, dtype=np.int64)
    limit = bound * bound
    found: list[NumClass] = []
    for Y in box_chunks(len(N), bound):
        half = -((Y @ Nn) * Y).sum(axis=1)
        keep = (half % 2 == 0) & (half <= 2 * limit)
        for y, h in zip(Y[keep], half[keep]):
            m = int(h) // 2
            ytup = tuple(int(a) for a in y)
            if m == 0:
                pairs = [(a, 0) for a in range(-bound, bound + 1)] + [
                    (0, b) for b in range(-bound, bound + 1) if b
                ]
            else:
                pairs = [
                    (a, m // a)
                    for a in range(-bound, bound + 1)
                    if a and m % a == 0 and abs(m // a) <= bound
                ]
            for a, b in pairs:
                x = (a, b) + ytup
                if content(x) != 1:
                    continue
                lead = next(c for c in x if c)
                if lead > 0:
                    found.append(x)
    return found


def enumerate_isotropic(L: GramLattice, bound: int) -> list[NumClass]:
    """All primitive isotropic classes with ``0 < max|coord| <= bound``, up to sign.

    The representative kept for each pair ``{x, -x}`` is the one whose first
    nonzero coordinate is positive; the result is sorted lexicographically.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    _check_int64(L.gram, bound)
    N = _split_definite_block(L)
    if N is not None:
        found = _isotropic_split(L, N, bound)
    else:
        found = _isotropic_box_scan(L, bound)
    return sorted(found)
