"""Constructing an ample class H' with gcd(D.H', r) = 1 for an exceptional vector.

Steps, for v = (r, D, t) with r t - D^2 = 1:

1. d = divisibility(D).  A prime dividing both d and r would divide d^2 | D^2
   and r | r t, hence 1, so gcd(d, r) = 1.
2. X = solve_pairing(D, d), so X.D = d.
3. H_k = X + k r H for the first k at which H_k is ample relative to the test
   set and H_k^2 >= 6.  Since H_k.D = d (mod r), gcd(H_k.D, r) = 1 for all k.

"Ample" is relative to the finite ``CurveTestSet``; the certificate records
everything needed to recheck the result by direct pairing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BudgetExceededError, NotAmpleError, NotExceptionalError
from .lattice import (
    GramLattice,
    NumClass,
    divisibility,
    e10_preset,
    is_zero,
    pair,
    solve_pairing,
    vec_add,
    vec_scale,
)
from .mukai import MukaiVector, is_exceptional
from .picard import AMPLE_SQUARE_THRESHOLD, CurveTestSet, DivisorClass, is_ample_wrt

DEFAULT_KMAX = 64


@dataclass(frozen=True)
class PolarizationCertificate:
    X: NumClass
    k: int
    Hprime: DivisorClass
    d: int
    gcd_value: int
    r: int
    Hseed: DivisorClass


def gcd_condition(
    H: DivisorClass, D: DivisorClass, r: int, lattice: GramLattice | None = None
) -> bool:
    """gcd(|H.D|, r) == 1, with gcd(0, r) = r."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    return math.gcd(abs(pair(lattice or e10_preset(), H.num, D.num)), r) == 1


def _violations(H: DivisorClass, T: CurveTestSet) -> list[str]:
    L = T.form
    out = [
        f"H.curves[{i}] = {pair(L, H.num, c)}"
        for i, c in enumerate(T.curves)
        if pair(L, H.num, c) <= 0
    ]
    if pair(L, H.num, T.cone_ref) <= 0:
        out.append(f"H.cone_ref = {pair(L, H.num, T.cone_ref)}")
    h2 = pair(L, H.num, H.num)
    if h2 < AMPLE_SQUARE_THRESHOLD:
        out.append(f"H^2 = {h2} < {AMPLE_SQUARE_THRESHOLD}")
    return out


def find_coprime_ample(
    v: MukaiVector,
    Hseed: DivisorClass,
    T: CurveTestSet,
    kmax: int = DEFAULT_KMAX,
) -> PolarizationCertificate:
    L = T.form
    if not is_exceptional(v, L):
        raise NotExceptionalError("v must have r > 0 and v^2 = 1")
    if not is_ample_wrt(Hseed, T):
        raise NotAmpleError("Hseed is not ample relative to the test set")
    if kmax < 1:
        raise ValueError("kmax must be >= 1")

    r, D = v.r, v.D
    if is_zero(D.num):
        # r t = 1 forces r = 1; any ample class works, X = 0
        d = 0
        X = L.zero()
    else:
        d = divisibility(L, D.num)
        assert math.gcd(d, r) == 1, "divisibility lemma failed"
        X = solve_pairing(L, D.num, d)

    step = vec_scale(r, Hseed.num)
    H = X
    for k in range(kmax + 1):
        cand = DivisorClass(H, 0)
        if is_ample_wrt(cand, T) and pair(L, H, H) >= AMPLE_SQUARE_THRESHOLD:
            g = math.gcd(pair(L, H, D.num), r)
            return PolarizationCertificate(X, k, cand, d, g, r, Hseed)
        H = vec_add(H, step)
    last = DivisorClass(vec_add(X, vec_scale(kmax, step)), 0)
    raise BudgetExceededError(
        f"k budget exceeded: no k <= {kmax} works; at k = {kmax}: " + "; ".join(_violations(last, T))
    )


def verify_certificate(
    cert: PolarizationCertificate, v: MukaiVector, T: CurveTestSet
) -> list[str]:
    """Recheck a certificate from scratch; returns the list of failures (empty means PASS)."""
    L = T.form
    failures = []
    if cert.r != v.r:
        failures.append("rank recorded in certificate differs from v")
    expected = tuple(x + cert.k * v.r * h for x, h in zip(cert.X, cert.Hseed.num))
    if tuple(cert.Hprime.num) != expected:
        failures.append("Hprime != X + k r Hseed")
    hd = pair(L, cert.Hprime.num, v.D.num)
    if math.gcd(abs(hd), v.r) != 1:
        failures.append(f"gcd(H'.D, r) = gcd({hd}, {v.r}) != 1")
    if cert.gcd_value != math.gcd(abs(hd), v.r):
        failures.append("recorded gcd_value is wrong")
    if (hd - pair(L, cert.X, v.D.num)) % v.r:
        failures.append("H'.D is not congruent to X.D mod r")
    for i, c in enumerate(T.curves):
        if pair(L, cert.Hprime.num, c) <= 0:
            failures.append(f"H'.curves[{i}] <= 0")
    if pair(L, cert.Hprime.num, T.cone_ref) <= 0:
        failures.append("H'.cone_ref <= 0")
    if pair(L, cert.Hprime.num, cert.Hprime.num) < AMPLE_SQUARE_THRESHOLD:
        failures.append(f"H'^2 < {AMPLE_SQUARE_THRESHOLD}")
    if not is_zero(v.D.num):
        if divisibility(L, v.D.num) != cert.d:
            failures.append("recorded divisibility is wrong")
        if pair(L, cert.X, v.D.num) != cert.d:
            failures.append("X.D != divisibility(D)")
        if math.gcd(cert.d, v.r) != 1:
            failures.append("gcd(divisibility(D), r) != 1")
    return failures
