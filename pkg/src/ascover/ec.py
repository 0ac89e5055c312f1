"""
Elliptic curves over GF(2^n).

Two model shapes are supported:

* ordinary curves ``y^2 + xy = x^3 + r x^2 + a`` with ``a != 0``
  (:class:`WeierstrassOrd`), whose j-invariant is ``1/a``;
* supersingular curves ``y^2 + lam y = x^3 + d x^2 + e`` with ``lam != 0``
  (:class:`SupersingularEC`).

Points are ``None`` (the point at infinity) or a tuple ``(x, y)`` of field
elements.  Counting is the O(q) scan: for each abscissa the fibre is an
Artin-Schreier equation whose solvability is a trace condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional, Union

import numpy as np

from .gf2 import GF2n

Point = Optional[tuple]

CHUNK = 1 << 18


class NotOnCurveError(ValueError):
    pass


@dataclass(frozen=True)
class WeierstrassOrd:
    """``y^2 + xy = x^3 + r x^2 + a`` over ``k``."""

    k: GF2n
    r: int
    a: int

    def __post_init__(self):
        if self.a == 0:
            raise ValueError("ordinary model needs a != 0")

    @property
    def coefficients(self):
        # long Weierstrass (a1, a2, a3, a4, a6)
        return (1, self.r, 0, 0, self.a)

    def to_str(self) -> str:
        return "ord:r=%x,a=%x" % (self.r, self.a)

    def __str__(self):
        return self.to_str()


@dataclass(frozen=True)
class SupersingularEC:
    """``y^2 + lam y = x^3 + d x^2 + e`` over ``k``."""

    k: GF2n
    lam: int
    d: int
    e: int

    def __post_init__(self):
        if self.lam == 0:
            raise ValueError("supersingular model needs lambda != 0")

    @property
    def coefficients(self):
        return (0, self.d, self.lam, 0, self.e)

    def to_str(self) -> str:
        return "ss:l=%x,d=%x,e=%x" % (self.lam, self.d, self.e)

    def __str__(self):
        return self.to_str()


Curve = Union[WeierstrassOrd, SupersingularEC]


@dataclass(frozen=True)
class OrdinaryInvariants:
    j: int
    sgn: int
    trace: int


# ---------- invariants


def j_invariant(E: WeierstrassOrd) -> int:
    return E.k.inv(E.a)


def signature(E: WeierstrassOrd) -> int:
    """The element of ``{0, r0}`` congruent to ``r`` modulo AS(k)."""
    return E.k.as_class(E.r)


def normalized(E: WeierstrassOrd) -> WeierstrassOrd:
    """Isomorphic model ``y^2 + xy = x^3 + sgn x^2 + 1/j``.

    The substitution ``y <- y + w x`` with ``w^2 + w = r + sgn`` moves the
    x^2 coefficient and leaves the constant term alone.
    """
    return WeierstrassOrd(E.k, signature(E), E.a)


def from_invariants(k: GF2n, j: int, sgn: int) -> WeierstrassOrd:
    return WeierstrassOrd(k, sgn, k.inv(j))


def quadratic_twist(E: WeierstrassOrd) -> WeierstrassOrd:
    return WeierstrassOrd(E.k, E.r ^ E.k.r0, E.a)


def invariants(E: WeierstrassOrd) -> OrdinaryInvariants:
    return OrdinaryInvariants(j_invariant(E), signature(E), trace_of(E))


# ---------- counting


def _blocks(start: int, stop: int, size: int = CHUNK):
    for lo in range(start, stop, size):
        yield np.arange(lo, min(stop, lo + size), dtype=np.int64)


def count_points(E: Curve, chunk: int = CHUNK) -> int:
    """Number of k-rational points, including the point at infinity.

    ``chunk`` only controls the block size of the scan; the result does not
    depend on it.
    """
    k = E.k
    if isinstance(E, WeierstrassOrd):
        # x = 0 carries the single point (0, sqrt(a)); for x != 0 put y = x w:
        # w^2 + w = x + r + a/x^2
        good = 0
        for xs in _blocks(1, k.q, chunk):
            ix = k.vinv(xs)
            v = xs ^ E.r ^ k.vmul(E.a, k.vmul(ix, ix))
            good += int(np.count_nonzero(k.vtrace(v) == 0))
        return 2 + 2 * good
    # y = lam w:  w^2 + w = (x^3 + d x^2 + e) / lam^2
    il2 = k.inv(k.sqr(E.lam))
    good = 0
    for xs in _blocks(0, k.q, chunk):
        x2 = k.vmul(xs, xs)
        rhs = k.vmul(x2, xs ^ E.d) ^ E.e
        good += int(np.count_nonzero(k.vtrace(k.vmul(rhs, il2)) == 0))
    return 1 + 2 * good


def trace_of(E: Curve) -> int:
    return E.k.q + 1 - count_points(E)


def hasse_bound(k: GF2n) -> int:
    """``floor(2 sqrt(q))``."""
    return isqrt(4 * k.q)


# ---------- group law


def is_on_curve(E: Curve, P: Point) -> bool:
    if P is None:
        return True
    k = E.k
    x, y = P
    a1, a2, a3, a4, a6 = E.coefficients
    lhs = k.sqr(y) ^ k.mul(k.mul(a1, x) ^ a3, y)
    x2 = k.sqr(x)
    rhs = k.mul(x2, x) ^ k.mul(a2, x2) ^ k.mul(a4, x) ^ a6
    return lhs == rhs


def _check(E, P):
    if not is_on_curve(E, P):
        raise NotOnCurveError("point %r is not on %s" % (P, E))


def neg_point(E: Curve, P: Point) -> Point:
    if P is None:
        return None
    a1, _, a3, _, _ = E.coefficients
    x, y = P
    return (x, y ^ E.k.mul(a1, x) ^ a3)


def add_points(E: Curve, P: Point, Q: Point) -> Point:
    """Chord-tangent addition in characteristic 2."""
    _check(E, P)
    _check(E, Q)
    if P is None:
        return Q
    if Q is None:
        return P
    k = E.k
    a1, a2, a3, a4, _ = E.coefficients
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if y1 ^ y2 ^ k.mul(a1, x2) ^ a3 == 0:
            return None
        # doubling; denominator a1 x + a3 is nonzero since P != -P
        lam = k.div(k.sqr(x1) ^ a4 ^ k.mul(a1, y1), k.mul(a1, x1) ^ a3)
        x3 = k.sqr(lam) ^ k.mul(a1, lam) ^ a2
    else:
        lam = k.div(y1 ^ y2, x1 ^ x2)
        x3 = k.sqr(lam) ^ k.mul(a1, lam) ^ a2 ^ x1 ^ x2
    y3 = k.mul(lam, x1 ^ x3) ^ y1 ^ k.mul(a1, x3) ^ a3
    return (x3, y3)


def mul_point(E: Curve, n: int, P: Point) -> Point:
    if n < 0:
        return mul_point(E, -n, neg_point(E, P))
    R = None
    while n:
        if n & 1:
            R = add_points(E, R, P)
        P = add_points(E, P, P)
        n >>= 1
    return R


def order_of(E: Curve, P: Point) -> int:
    _check(E, P)
    bound = E.k.q + 1 + hasse_bound(E.k)
    R, n = P, 1
    while R is not None:
        R = add_points(E, R, P)
        n += 1
        if n > bound:
            raise AssertionError("order exceeds the Hasse bound")
    return n


def rational_points(E: Curve) -> list:
    """All of E(k), infinity first, then affine points sorted."""
    k = E.k
    pts = [None]
    if isinstance(E, WeierstrassOrd):
        pts.append((0, k.sqrt(E.a)))
        for x in k.nonzero():
            ix = k.inv(x)
            w = k.solve_AS(x ^ E.r ^ k.mul(E.a, k.sqr(ix)))
            if w is not None:
                pts.append((x, k.mul(x, w)))
                pts.append((x, k.mul(x, w ^ 1)))
    else:
        il2 = k.inv(k.sqr(E.lam))
        for x in k.elements():
            rhs = k.mul(k.sqr(x), x ^ E.d) ^ E.e
            w = k.solve_AS(k.mul(rhs, il2))
            if w is not None:
                pts.append((x, k.mul(E.lam, w)))
                pts.append((x, k.mul(E.lam, w ^ 1)))
    return [None] + sorted(pts[1:])


# ---------- torsion and translation by the 2-torsion point


def two_torsion_point(E: WeierstrassOrd) -> tuple:
    """The unique nontrivial rational 2-torsion point ``(0, a^(1/2))``."""
    return (0, E.k.sqrt(E.a))


def torsion_probe(E: WeierstrassOrd, target: int) -> bool:
    """Whether E(k) has a point of exact order ``target`` (4 or 8).

    Decided by enumerating the group; only meaningful for signature 0.
    """
    if target not in (4, 8):
        raise ValueError("target must be 4 or 8")
    if signature(E) != 0:
        raise ValueError("torsion probe expects a curve of signature 0")
    pts = rational_points(E)
    if len(pts) % target:
        return False
    return any(order_of(E, P) == target for P in pts[1:])


def tau_N(E: WeierstrassOrd, P: Point) -> Point:
    """Translation by the 2-torsion point N via the closed formula.

    The affine formula needs ``x != 0``; the two remaining inputs (infinity
    and N itself) are resolved by the group law.
    """
    _check(E, P)
    if P is None:
        return two_torsion_point(E)
    k = E.k
    x, y = P
    if x == 0:
        return None
    h = k.sqrt(E.a)
    ix = k.inv(x)
    ix2 = k.sqr(ix)
    return (k.mul(h, ix),
            k.mul(k.mul(h, y), ix2) ^ h ^ k.mul(h, ix) ^ k.mul(E.a, ix2))


# ---------- serialization


def parse_curve(k: GF2n, s: str) -> Curve:
    """Parse ``ord:r=<hex>,a=<hex>`` or ``ss:l=<hex>,d=<hex>,e=<hex>``."""
    tag, _, body = s.strip().partition(":")
    fields = {}
    for item in filter(None, body.split(",")):
        key, _, val = item.partition("=")
        fields[key.strip()] = k.parse(val.strip())
    try:
        if tag == "ord":
            return WeierstrassOrd(k, fields["r"], fields["a"])
        if tag == "ss":
            return SupersingularEC(k, fields["l"], fields["d"], fields["e"])
    except KeyError as exc:
        raise ValueError("missing field %s in %r" % (exc, s)) from None
    raise ValueError("unknown elliptic curve tag %r" % tag)


def all_ordinary(k: GF2n, r_values=None) -> list:
    """Every model ``(r, a)`` with ``r`` in ``r_values`` (default {0, r0})."""
    if r_values is None:
        r_values = (0, k.r0)
    return [WeierstrassOrd(k, r, a) for r in r_values for a in k.nonzero()]


__all__ = [
    "WeierstrassOrd", "SupersingularEC", "OrdinaryInvariants", "NotOnCurveError",
    "j_invariant", "signature", "normalized", "from_invariants", "quadratic_twist",
    "invariants", "count_points", "trace_of", "hasse_bound", "is_on_curve",
    "neg_point", "add_points", "mul_point", "order_of", "rational_points",
    "two_torsion_point", "torsion_probe", "tau_N", "parse_curve", "all_ordinary",
]
