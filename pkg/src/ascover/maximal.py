"""
Genus-3 curves with many points over GF(2^n), n odd.

With ``m = floor(2 sqrt(q))`` the Serre-Weil bound is ``q + 1 + 3m``.  Taking
three copies of one ordinary curve of trace ``-m`` (or ``-m + 1``) and a
plane-quartic cover of that triple gives a curve of defect 0 (or 3) whenever
``m`` is not 3 or 4 mod 8.  This module builds those curves, evaluates
N_q(3) where it is determined, and tabulates the sequence
``m_n = floor(2^n sqrt 2)`` that controls how often the good residues occur.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

from . import ec
from . import genus3 as g3
from .covers import TripleInvariants, exists_nonhyp_cover
from .gf2 import GF2n, make_field

log = logging.getLogger(__name__)

DEFECT0_CLASSES = (1, 5, 7)
DEFECT3_CLASSES = (0, 2, 6)
# bracket for the root of x^3 + x^2 - 2x - 1 equal to 2 cos(6 pi / 7)
_RHO_BRACKET = (Fraction(-1801938, 1000000), Fraction(-1801937, 1000000))


class NoCurveWithTrace(LookupError):
    pass


def m_of(n: int) -> int:
    """``floor(2 sqrt(2^n))``, by integer square root of 4q."""
    if n < 1:
        raise ValueError("n must be positive")
    return isqrt(4 << n)


# ---------- the fractional-part threshold


def _cubic(x: Fraction) -> Fraction:
    return x ** 3 + x ** 2 - 2 * x - 1


def threshold_bracket(width: Fraction = Fraction(1, 10 ** 6)):
    """Rational bracket ``(lo, hi)`` around ``1 - 4 cos^2(3 pi / 7)``.

    That number equals ``-1 - rho`` with ``rho = 2 cos(6 pi / 7)`` the root of
    ``x^3 + x^2 - 2x - 1`` in (-2, -1); ``rho`` is refined by bisection.
    """
    lo, hi = _RHO_BRACKET
    assert _cubic(lo) < 0 < _cubic(hi)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if _cubic(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (-1 - hi, -1 - lo)


def sqrt_bracket(N: int, denom: int):
    """``(lo, hi)`` with ``lo <= sqrt(N) <= hi`` and ``hi - lo <= 1/denom``."""
    s = isqrt(N * denom * denom)
    return (Fraction(s, denom), Fraction(s + 1, denom))


def frac_below_threshold(q: int) -> bool:
    """Decide ``{2 sqrt(q)} < 1 - 4 cos^2(3 pi / 7)`` exactly.

    Both sides are irrational unless q is a square (then the left side is 0),
    so refining the two brackets terminates.
    """
    m = isqrt(4 * q)
    if m * m == 4 * q:
        return True
    prec = 10 ** 6
    while True:
        slo, shi = sqrt_bracket(4 * q, prec)
        tlo, thi = threshold_bracket(Fraction(1, prec))
        if shi - m < tlo:
            return True
        if slo - m > thi:
            return False
        prec *= 1000


# ---------- constructions


def find_curve_with_trace(k: GF2n, target: int) -> ec.WeierstrassOrd:
    """First ordinary curve (smallest j) of the given odd trace.

    The signature is fixed by the trace modulo 4: 0 for traces 1 mod 4 and
    r0 for traces 3 mod 4.
    """
    if target % 2 == 0:
        raise ValueError("ordinary curves have odd trace, got %d" % target)
    if abs(target) > ec.hasse_bound(k):
        raise ValueError("trace %d violates the Hasse bound" % target)
    if k.q <= 2:
        raise ValueError("the signature rule needs q > 2")
    sgn = 0 if target % 4 == 1 else k.r0
    for j in k.nonzero():
        E = ec.from_invariants(k, j, sgn)
        if ec.trace_of(E) == target:
            return E
    log.error("no ordinary curve of trace %d over GF(2^%d)", target, k.n)
    raise NoCurveWithTrace("no ordinary curve of trace %d over GF(2^%d)"
                           % (target, k.n))


def diagonal_cover(E: ec.WeierstrassOrd) -> g3.Genus3Curve:
    """Closed-form quartic covering (E, E, E).

    Signature r0 (traces 3 mod 4):
        (s(x^2+y^2) + z^2 + xy + xz + yz)^2 = xyz(x+y+z)
    Signature 0 with tr(1/j) = 0:
        (s(x^2+y^2+z^2+xz+yz) + xy)^2 = xyz(x+y+z)
    with ``s = j^(-1/4)``.  These are NHypB(s, 1, 1, 0) and NHypA(s, s, s, 0).
    Both need n odd, where ``r0 = 1``.
    """
    k = E.k
    if k.n % 2 == 0:
        raise ValueError("closed-form covers need n odd")
    j = ec.j_invariant(E)
    s = k.root4(k.inv(j))
    if ec.signature(E) == k.r0:
        return g3.NHypB(k, s, 1, 1, 0)
    if k.trace(k.inv(j)) == 0:
        return g3.NHypA(k, s, s, s, 0)
    raise ValueError("no closed-form cover for %s" % E)


@dataclass
class MaximalReport:
    n: int
    q: int
    m: int
    m_mod8: int
    frac_below_threshold: Optional[bool]
    status: str
    nq3: Union[int, tuple, None]
    witness: Optional[g3.Genus3Curve] = None
    count: Optional[int] = None
    elliptic: Optional[ec.WeierstrassOrd] = field(default=None, repr=False)

    @property
    def defect(self) -> Optional[int]:
        if self.count is None:
            return None
        return self.q + 1 + 3 * self.m - self.count

    def to_dict(self) -> dict:
        lo, hi = (self.nq3 if isinstance(self.nq3, tuple)
                  else (self.nq3, self.nq3))
        return {"n": self.n, "q": self.q, "m": self.m, "m_mod8": self.m_mod8,
                "frac_below_threshold": self.frac_below_threshold,
                "status": self.status,
                "nq3": list(self.nq3) if isinstance(self.nq3, tuple) else self.nq3,
                "nq3_lo": lo, "nq3_hi": hi,
                "witness": g3.to_str(self.witness) if self.witness else None,
                "count": self.count}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _construct(n: int, defect: int, count_witness: bool = True) -> MaximalReport:
    if n % 2 == 0 or n < 3:
        raise ValueError("constructions need n odd and q > 2")
    k = make_field(n)
    m = m_of(n)
    target = -m if defect == 0 else -m + 1
    E = find_curve_with_trace(k, target)
    C = diagonal_cover(E)
    # the generic reconstruction must agree with the closed form
    t = TripleInvariants(k, (ec.j_invariant(E),) * 3, (ec.signature(E),) * 3)
    w = exists_nonhyp_cover(t)
    if w is None:
        raise AssertionError("reconstruction criterion fails on (E, E, E)")
    expected = k.q + 1 - 3 * target
    count = None
    if count_witness:
        count = g3.count_points(C)
        if count != expected:
            raise AssertionError("witness %s has %d points, expected %d"
                                 % (g3.to_str(C), count, expected))
    status = "exact-defect-0" if defect == 0 else "exact-defect-3"
    return MaximalReport(n, k.q, m, m % 8, None, status, expected, C, count, E)


def construct_defect0(n: int, count_witness: bool = True) -> MaximalReport:
    m = m_of(n)
    if m % 8 not in DEFECT0_CLASSES:
        return _not_covered(n) if m % 8 in (3, 4) else _wrong_class(n, m, 0)
    return _construct(n, 0, count_witness)


def construct_defect3(n: int, count_witness: bool = True) -> MaximalReport:
    m = m_of(n)
    if m % 8 not in DEFECT3_CLASSES:
        return _not_covered(n) if m % 8 in (3, 4) else _wrong_class(n, m, 3)
    return _construct(n, 3, count_witness)


def _wrong_class(n, m, defect):
    raise ValueError("m = %d (n = %d) is not in the defect-%d residue classes"
                     % (m, n, defect))


def _not_covered(n: int) -> MaximalReport:
    m = m_of(n)
    return MaximalReport(n, 1 << n, m, m % 8, None, "not-covered", None)


def nq3(n: int, count_witness: bool = True) -> MaximalReport:
    """N_q(3) for q = 2^n, n odd, as far as the constructions decide it."""
    if n % 2 == 0:
        raise ValueError("only nonsquare q = 2^n (n odd) is handled")
    q, m = 1 << n, m_of(n)
    if n == 1:
        return MaximalReport(1, 2, m, m % 8, None, "known-small-case", 7)
    cls = m % 8
    if cls in DEFECT0_CLASSES:
        return construct_defect0(n, count_witness)
    if cls in DEFECT3_CLASSES:
        rep = construct_defect3(n, count_witness)
        below = frac_below_threshold(q)
        rep.frac_below_threshold = below
        if not below:
            rep.status = "lower-bound-only"
            rep.nq3 = (q + 1 + 3 * m - 3, q + 1 + 3 * m)
        return rep
    return _not_covered(n)


# ---------- the sequence m_n = floor(2^n sqrt 2)


@dataclass(frozen=True)
class MSeqEntry:
    """``m_n`` for ``q_n = 2^(2n-1)``; ``eps_half`` is ``{2^n sqrt 2} > 1/2``."""

    n: int
    m_n: int
    eps_half: bool
    residue4: int

    @property
    def degree(self) -> int:
        return 2 * self.n - 1


def m_sequence(count: int) -> list:
    """Entries n = 1..count, with the doubling recurrence checked at each step."""
    if not 1 <= count <= 200:
        raise ValueError("count must be in 1..200")
    out = []
    for n in range(1, count + 1):
        N = 1 << (2 * n + 1)
        m = isqrt(N)
        if m * m == N:
            raise AssertionError("2^(2n+1) is never a square")
        # eps > 1/2  <=>  2^n sqrt 2 > m + 1/2  <=>  4 * 2^(2n+1) > (2m+1)^2
        out.append(MSeqEntry(n, m, 4 * N > (2 * m + 1) ** 2, m % 4))
    for a, b in zip(out, out[1:]):
        if b.m_n != 2 * a.m_n + a.eps_half:
            raise AssertionError("recurrence fails at n = %d" % a.n)
    return out


def residue_tallies(entries) -> dict:
    tally = {r: 0 for r in range(4)}
    for e in entries:
        tally[e.residue4] += 1
    return tally
