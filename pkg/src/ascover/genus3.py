"""
Genus-3 curves over GF(2^n) with a C2 x C2 group of involutions.

Five explicit families:

========  ==============================================================
HypA      y^2 + y = a(x + t/x) + a(t+1)(1/(x+1) + t/(x+t)) + r
HypB      y^2 + y = b(1/(x^2+x+s) + 1/(x^2+x+t)) + r
SS        y^4 + f y^2 z^2 + g y z^3 = x^3 z + d x^2 z^2 + e z^4
NHypA     (a(x^2+y^2) + c z^2 + xy + e z(x+y))^2 = (r(x^2+y^2) + xy) z(x+y+z)
NHypB     (a(x^2+y^2) + c z(x+y+z) + d xy)^2 = (r(x^2+y^2) + xy) z(x+y+z)
========  ==============================================================

Hyperelliptic curves are counted on their smooth model: every pole of the
HypA right-hand side is simple (so ramified, one point each) and the HypB
right-hand side has no rational pole, with ``f(inf) = r``.  The three
quartic families are counted by scanning P^2(k).

The SS constant term sits on ``z^4``: in the affine chart this is the
Artin-Schreier form ``y^4 + f y^2 + g y = x^3 + d x^2 + e`` whose quotients by
``y -> y + v`` are ``y^2 + (g/v) y = x^3 + d x^2 + e``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, fields
from typing import Callable, Optional, Union

import numpy as np

from . import projective as pj
from .gf2 import GF2n, make_field


@dataclass(frozen=True)
class HypA:
    k: GF2n
    a: int
    r: int
    t: int
    family = "hypa"


@dataclass(frozen=True)
class HypB:
    k: GF2n
    b: int
    r: int
    s: int
    t: int
    family = "hypb"


@dataclass(frozen=True)
class SS:
    k: GF2n
    d: int
    e: int
    f: int
    g: int
    family = "ss"


@dataclass(frozen=True)
class NHypA:
    k: GF2n
    a: int
    c: int
    e: int
    r: int
    family = "nhypa"


@dataclass(frozen=True)
class NHypB:
    k: GF2n
    a: int
    c: int
    d: int
    r: int
    family = "nhypb"


Genus3Curve = Union[HypA, HypB, SS, NHypA, NHypB]
FAMILIES = {cls.family: cls for cls in (HypA, HypB, SS, NHypA, NHypB)}
QUARTIC_FAMILIES = ("ss", "nhypa", "nhypb")


def params(C: Genus3Curve) -> dict:
    return {f.name: getattr(C, f.name) for f in fields(C) if f.name != "k"}


def to_str(C: Genus3Curve) -> str:
    body = ",".join("%s=%x" % kv for kv in sorted(params(C).items()))
    return "%s:%s" % (C.family, body)


def parse(k: GF2n, s: str) -> Genus3Curve:
    """Inverse of :func:`to_str`, e.g. ``hypa:a=1,r=0,t=2``."""
    tag, _, body = s.strip().partition(":")
    if tag not in FAMILIES:
        raise ValueError("unknown genus-3 family %r (expected one of %s)"
                         % (tag, ", ".join(FAMILIES)))
    cls = FAMILIES[tag]
    vals = {}
    for item in filter(None, body.split(",")):
        key, _, val = item.partition("=")
        vals[key.strip()] = k.parse(val.strip())
    names = [f.name for f in fields(cls) if f.name != "k"]
    missing = [n for n in names if n not in vals]
    extra = [n for n in vals if n not in names]
    if missing or extra:
        raise ValueError("%s needs parameters %s (missing %s, unexpected %s)"
                         % (tag, ",".join(names), missing, extra))
    return cls(k, **vals)


# ---------- parameter validity


def validate(C: Genus3Curve) -> list:
    """Names of the violated parameter constraints (empty list when valid)."""
    k = C.k
    bad = []
    if isinstance(C, (HypA, HypB, NHypA, NHypB)) and C.r not in (0, k.r0):
        bad.append("r in {0, r0}")
    if isinstance(C, HypA):
        if C.a == 0:
            bad.append("a != 0")
        if C.t == 0:
            bad.append("t != 0")
        if C.t == 1:
            bad.append("t != 1")
    elif isinstance(C, HypB):
        if C.b == 0:
            bad.append("b != 0")
        if k.in_AS(C.s):
            bad.append("s not in AS(k)")
        if k.in_AS(C.t):
            bad.append("t not in AS(k)")
        if C.s == C.t:
            bad.append("s != t")
    elif isinstance(C, SS):
        if C.g == 0:
            bad.append("g != 0")
        if len(k.cubic_roots(C.f, C.g)) != 3:
            bad.append("y^3 + f y + g has three roots in k")
    elif isinstance(C, NHypA):
        if C.c == 0:
            bad.append("c != 0")
        if C.a == C.r:
            bad.append("a != r")
        if C.r ^ C.a ^ C.e ^ C.c == 0:
            bad.append("r + a + e + c != 0")
    elif isinstance(C, NHypB):
        if k.mul(C.c, C.d) == 0:
            bad.append("cd != 0")
        if C.c ^ C.d == 1:
            bad.append("c + d != 1")
        if C.a ^ k.mul(C.d, C.r) == 0:
            bad.append("a + dr != 0")
    else:
        raise TypeError("not a genus-3 family curve: %r" % (C,))
    return bad


def is_valid(C: Genus3Curve) -> bool:
    return not validate(C)


def ss_roots(C: SS) -> list:
    return C.k.cubic_roots(C.f, C.g)


def hypb_u(C: HypB) -> int:
    u = C.k.solve_AS(C.s ^ C.t)
    if u is None:
        raise ArithmeticError("s + t has trace 1; curve parameters are invalid")
    return u


# ---------- plane models


def quartic(C: Genus3Curve) -> dict:
    """The defining ternary quartic ``F`` with ``C: F = 0``."""
    k = C.k
    if isinstance(C, SS):
        return pj.form_add(
            pj.monomial(1, 0, 4, 0), pj.monomial(C.f, 0, 2, 2),
            pj.monomial(C.g, 0, 1, 3), pj.monomial(1, 3, 0, 1),
            pj.monomial(C.d, 2, 0, 2), pj.monomial(C.e, 0, 0, 4))
    if isinstance(C, NHypA):
        inner = pj.form_add(
            pj.monomial(C.a, 2, 0, 0), pj.monomial(C.a, 0, 2, 0),
            pj.monomial(C.c, 0, 0, 2), pj.monomial(1, 1, 1, 0),
            pj.monomial(C.e, 1, 0, 1), pj.monomial(C.e, 0, 1, 1))
    elif isinstance(C, NHypB):
        inner = pj.form_add(
            pj.monomial(C.a, 2, 0, 0), pj.monomial(C.a, 0, 2, 0),
            pj.monomial(C.c, 1, 0, 1), pj.monomial(C.c, 0, 1, 1),
            pj.monomial(C.c, 0, 0, 2), pj.monomial(C.d, 1, 1, 0))
    else:
        raise TypeError("%s curves are not plane quartics" % C.family)
    conic = pj.form_add(pj.monomial(C.r, 2, 0, 0), pj.monomial(C.r, 0, 2, 0),
                        pj.monomial(1, 1, 1, 0))
    line_prod = pj.form_mul(k, pj.linear(k, 0, 0, 1), pj.linear(k, 1, 1, 1))
    return pj.form_add(pj.form_mul(k, inner, inner),
                       pj.form_mul(k, conic, line_prod))


def hyperelliptic_rhs(C: Union[HypA, HypB], x: int) -> int:
    """Right-hand side ``f(x)`` at an abscissa that is not a pole."""
    k = C.k
    if isinstance(C, HypA):
        at1 = k.mul(C.a, C.t ^ 1)
        return (k.mul(C.a, x ^ k.div(C.t, x))
                ^ k.mul(at1, k.inv(x ^ 1) ^ k.div(C.t, x ^ C.t)) ^ C.r)
    x2x = k.sqr(x) ^ x
    return k.mul(C.b, k.inv(x2x ^ C.s) ^ k.inv(x2x ^ C.t)) ^ C.r


# ---------- counting


def count_points(C: Genus3Curve) -> int:
    """Number of k-rational points of the smooth model."""
    k = C.k
    if isinstance(C, HypA):
        xs = k.vec_elements()
        xs = xs[(xs != 0) & (xs != 1) & (xs != C.t)]
        at1 = k.mul(C.a, C.t ^ 1)
        f = (k.vmul(C.a, xs ^ k.vmul(C.t, k.vinv(xs)))
             ^ k.vmul(at1, k.vinv(xs ^ 1) ^ k.vmul(C.t, k.vinv(xs ^ C.t))) ^ C.r)
        return 2 * int(np.count_nonzero(k.vtrace(f) == 0)) + 4
    if isinstance(C, HypB):
        xs = k.vec_elements()
        x2x = k.vmul(xs, xs) ^ xs
        f = k.vmul(C.b, k.vinv(x2x ^ C.s) ^ k.vinv(x2x ^ C.t)) ^ C.r
        at_inf = 0 if k.trace(C.r) else 2
        return 2 * int(np.count_nonzero(k.vtrace(f) == 0)) + at_inf
    count, _ = pj.common_zeros(k, [quartic(C)])
    return count


def rational_points(C: Genus3Curve) -> list:
    """Explicit list of C(k); small fields only.

    Hyperelliptic points are ``(x, y)`` for affine points, ``(x, None)`` for
    the ramified points over the poles of HypA and ``(None, y)`` for the
    points at infinity of HypB (``x = None`` stands for infinity).  Quartic
    points are normalized projective triples.
    """
    k = C.k
    pts = []
    if isinstance(C, HypA):
        for x in k.elements():
            if x in (0, 1, C.t):
                pts.append((x, None))
                continue
            w = k.solve_AS(hyperelliptic_rhs(C, x))
            if w is not None:
                pts += [(x, w), (x, w ^ 1)]
        pts.append((None, None))
    elif isinstance(C, HypB):
        for x in k.elements():
            w = k.solve_AS(hyperelliptic_rhs(C, x))
            if w is not None:
                pts += [(x, w), (x, w ^ 1)]
        w = k.solve_AS(C.r)
        if w is not None:
            pts += [(None, w), (None, w ^ 1)]
    else:
        F = quartic(C)
        pts = [P for P in pj.projective_points(k) if pj.evaluate(k, F, P) == 0]
    return pts


def on_curve(C: Genus3Curve, P) -> bool:
    k = C.k
    if isinstance(C, HypA):
        x, y = P
        if x is None or x in (0, 1, C.t):
            return y is None
        return y is not None and k.sqr(y) ^ y == hyperelliptic_rhs(C, x)
    if isinstance(C, HypB):
        x, y = P
        if y is None:
            return False
        rhs = C.r if x is None else hyperelliptic_rhs(C, x)
        return k.sqr(y) ^ y == rhs
    return pj.evaluate(k, quartic(C), P) == 0


# ---------- involutions


def _mobius(k: GF2n, m):
    """x -> (m0 x + m1) / (m2 x + m3) on P^1(k), infinity as None."""
    m0, m1, m2, m3 = m

    def apply(x):
        if x is None:
            num, den = m0, m2
        else:
            num, den = k.mul(m0, x) ^ m1, k.mul(m2, x) ^ m3
        return None if den == 0 else k.div(num, den)

    return apply


@dataclass
class InvolutionReport:
    """The three nontrivial involutions and their rational fixed points."""

    maps: tuple
    fixed: tuple


def involutions(C: Genus3Curve) -> InvolutionReport:
    k = C.k
    maps: list[Callable] = []
    if isinstance(C, HypA):
        t = C.t
        for m in ((0, t, 1, 0), (1, t, 1, 1), (t, t, 1, t)):
            mob = _mobius(k, m)
            maps.append(lambda P, mob=mob: (mob(P[0]), P[1]))
    elif isinstance(C, HypB):
        u = hypb_u(C)
        for shift in (1, u, u ^ 1):
            maps.append(lambda P, s=shift: P if P[0] is None else (P[0] ^ s, P[1]))
    elif isinstance(C, SS):
        for v in sorted(set(ss_roots(C))):
            maps.append(lambda P, v=v: pj.normalize(
                k, (P[0], P[1] ^ k.mul(v, P[2]), P[2])))
    elif isinstance(C, NHypA):
        maps = [lambda P: pj.normalize(k, (P[1], P[0], P[2])),
                lambda P: pj.normalize(k, (P[0] ^ P[2], P[1] ^ P[2], P[2])),
                lambda P: pj.normalize(k, (P[1] ^ P[2], P[0] ^ P[2], P[2]))]
    elif isinstance(C, NHypB):
        maps = [lambda P: pj.normalize(k, (P[1], P[0], P[2])),
                lambda P: pj.normalize(k, (P[0], P[1], P[0] ^ P[1] ^ P[2])),
                lambda P: pj.normalize(k, (P[1], P[0], P[0] ^ P[1] ^ P[2]))]
    pts = rational_points(C)
    fixed = tuple([P for P in pts if i(P) == P] for i in maps)
    return InvolutionReport(tuple(maps), fixed)


# ---------- smoothness


def _embedding(k: GF2n, K: GF2n) -> Callable[[int], int]:
    """A field embedding k -> K (K of degree a multiple of k's degree)."""
    xs = K.vec_elements()
    val = np.zeros_like(xs)
    for i in range(k.n, -1, -1):
        val = K.vmul(val, xs) ^ ((k.modulus >> i) & 1)
    beta = int(np.nonzero(val == 0)[0][0])
    powers = [K.pow(beta, i) for i in range(k.n)]

    def phi(a: int) -> int:
        out = 0
        for i in range(k.n):
            if (a >> i) & 1:
                out ^= powers[i]
        return out

    return phi


def smoothness_spotcheck(C: Genus3Curve, degree: int = 1):
    """Singular point of the quartic over k (degree 1) or k_2 (degree 2).

    Returns None when no point of P^2 over that field annihilates the
    quartic and its three partial derivatives.
    """
    if C.family not in QUARTIC_FAMILIES:
        raise TypeError("smoothness spot-check applies to plane quartics only")
    if degree not in (1, 2):
        raise ValueError("degree must be 1 or 2")
    bad = validate(C)
    if bad:
        raise ValueError("invalid parameters: %s" % "; ".join(bad))
    k = C.k
    if k.q ** (2 * degree) > 1 << 26:
        raise ValueError("field too large for the smoothness scan")
    F = quartic(C)
    if degree == 1:
        K, phi = k, (lambda a: a)
    else:
        K = make_field(2 * k.n)
        phi = _embedding(k, K)
    FK = pj.map_form(F, phi)
    forms = [FK] + [pj.partial(FK, v) for v in range(3)]
    count, first = pj.common_zeros(K, forms, first_only=True)
    return first if count else None


# ---------- enumeration of parameter spaces


def enumerate_family(k: GF2n, family: str):
    """Every valid parameter tuple of a family over k, in lexicographic order."""
    rs = (0, k.r0)
    E = k.elements()
    if family == "hypa":
        for a in k.nonzero():
            for r in rs:
                for t in k.nonzero():
                    if t != 1:
                        yield HypA(k, a, r, t)
    elif family == "hypb":
        non_as = [x for x in E if k.trace(x)]
        for b in k.nonzero():
            for r in rs:
                for s in non_as:
                    for t in non_as:
                        if s != t:
                            yield HypB(k, b, r, s, t)
    elif family == "ss":
        split = [(f, g) for f in E for g in k.nonzero()
                 if len(k.cubic_roots(f, g)) == 3]
        for d in E:
            for e in E:
                for f, g in split:
                    yield SS(k, d, e, f, g)
    elif family == "nhypa":
        for a in E:
            for c in k.nonzero():
                for e in E:
                    for r in rs:
                        C = NHypA(k, a, c, e, r)
                        if is_valid(C):
                            yield C
    elif family == "nhypb":
        for a in E:
            for c in k.nonzero():
                for d in k.nonzero():
                    for r in rs:
                        C = NHypB(k, a, c, d, r)
                        if is_valid(C):
                            yield C
    else:
        raise ValueError("unknown family %r" % family)


def random_curve(k: GF2n, family: str, rng: random.Random) -> Genus3Curve:
    """A uniformly random valid member of a family (rejection sampling)."""
    cls = FAMILIES[family]
    names = [f.name for f in fields(cls) if f.name != "k"]
    while True:
        vals = {n: rng.randrange(k.q) for n in names}
        if "r" in vals:
            vals["r"] = rng.choice((0, k.r0))
        C = cls(k, **vals)
        if is_valid(C):
            return C
