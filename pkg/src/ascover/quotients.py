"""
Elliptic quotients of the genus-3 families and the point-count audit.

Each family member ``C`` maps to three elliptic curves ``E1, E2, E3`` with
``Jac(C) ~ E1 x E2 x E3``; over a finite field this forces

    #C(k) = q + 1 - (tr E1 + tr E2 + tr E3),

which :func:`verify_isogeny` checks by counting both sides independently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import ec
from . import genus3 as g3


@dataclass(frozen=True)
class EllipticTriple:
    e1: ec.Curve
    e2: ec.Curve
    e3: ec.Curve

    def __iter__(self):
        return iter((self.e1, self.e2, self.e3))


def quotients_of(C: g3.Genus3Curve) -> EllipticTriple:
    k = C.k
    bad = g3.validate(C)
    if bad:
        raise ValueError("invalid %s parameters: %s" % (C.family, "; ".join(bad)))
    p4 = lambda v: k.pow(v, 4)  # noqa: E731
    if isinstance(C, g3.HypA):
        at1 = k.mul(C.a, C.t ^ 1)
        r = C.r ^ at1
        consts = (p4(at1), p4(k.mul(C.a, C.t)), p4(C.a))
        return EllipticTriple(*(ec.WeierstrassOrd(k, r, c) for c in consts))
    if isinstance(C, g3.HypB):
        u = g3.hypb_u(C)
        b4, u4, v4 = p4(C.b), p4(u), p4(u ^ 1)
        return EllipticTriple(
            ec.WeierstrassOrd(k, C.r, k.div(b4, k.mul(u4, v4))),
            ec.WeierstrassOrd(k, C.r ^ k.r0, k.div(k.mul(b4, u4), v4)),
            ec.WeierstrassOrd(k, C.r ^ k.r0, k.div(k.mul(b4, v4), u4)))
    if isinstance(C, g3.SS):
        vs = g3.ss_roots(C)
        return EllipticTriple(*(ec.SupersingularEC(k, k.div(C.g, v), C.d, C.e)
                                for v in vs))
    if isinstance(C, g3.NHypA):
        ar = C.a ^ C.r
        acer = ar ^ C.c ^ C.e
        return EllipticTriple(
            ec.WeierstrassOrd(k, C.e, k.sqr(k.mul(ar, acer))),
            ec.WeierstrassOrd(k, C.e ^ C.r, k.sqr(k.mul(C.c, acer))),
            ec.WeierstrassOrd(k, C.e ^ C.r, k.sqr(k.mul(C.c, ar))))
    if isinstance(C, g3.NHypB):
        A4 = p4(C.a ^ k.mul(C.d, C.r))
        cd2 = k.sqr(k.mul(C.c, C.d))
        return EllipticTriple(
            ec.WeierstrassOrd(k, cd2, k.mul(p4(C.d), A4)),
            ec.WeierstrassOrd(k, cd2 ^ C.r, k.mul(p4(C.c), A4)),
            ec.WeierstrassOrd(k, cd2 ^ C.r, k.mul(p4(C.c ^ C.d ^ 1), A4)))
    raise TypeError("not a genus-3 family curve: %r" % (C,))


@dataclass(frozen=True)
class IsogenyReport:
    curve: g3.Genus3Curve
    triple: EllipticTriple
    count: int
    traces: tuple
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    @property
    def trace_sum(self) -> int:
        return sum(self.traces)

    def to_dict(self) -> dict:
        return {"curve": g3.to_str(self.curve),
                "triple": [E.to_str() for E in self.triple],
                "count": self.count, "trace_sum": self.trace_sum,
                "ok": self.ok}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def verify_isogeny(C: g3.Genus3Curve) -> IsogenyReport:
    """Compare #C(k) with q + 1 - sum of the quotient traces."""
    triple = quotients_of(C)
    traces = tuple(ec.trace_of(E) for E in triple)
    count = g3.count_points(C)
    return IsogenyReport(C, triple, count, traces, count,
                         C.k.q + 1 - sum(traces))
