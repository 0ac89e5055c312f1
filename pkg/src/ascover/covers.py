"""
Inverse problem: which triples of elliptic curves are the quotients of a
genus-3 curve with many involutions, and an explicit such curve when one
exists.

Ordinary triples are described by their invariants ``(j_i, sgn_i)``.  A
triple is hyperelliptically covered iff ``1/j1 + 1/j2 + 1/j3 = 0``; it is
covered by a plane quartic iff ``T_a`` or ``T_b`` lies in the coset
``sgn1 + sgn2 + sgn3 + AS(k)``.  Supersingular triples are handled by a
plain search over the SS family.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

from . import ec
from . import genus3 as g3
from .gf2 import GF2n
from .quotients import quotients_of

SS_MAX_Q = 1 << 13


class CoverConstructionError(RuntimeError):
    """A constructed witness failed its round-trip check (a library bug)."""


class SearchExhausted(RuntimeError):
    """The SS search hit its tuple budget before deciding."""


@dataclass(frozen=True)
class TripleInvariants:
    k: GF2n
    j: tuple
    sgn: tuple

    def __post_init__(self):
        if len(self.j) != 3 or len(self.sgn) != 3:
            raise ValueError("a triple needs three j-invariants and signatures")
        if 0 in self.j:
            raise ValueError("ordinary triple needs nonzero j-invariants")
        if any(s not in (0, self.k.r0) for s in self.sgn):
            raise ValueError("signatures must lie in {0, r0}")

    @property
    def sgn_sum(self) -> int:
        return self.sgn[0] ^ self.sgn[1] ^ self.sgn[2]

    @property
    def Ta(self) -> int:
        k = self.k
        j1, j2, j3 = self.j
        return k.div(k.sqr(j1 ^ j2 ^ j3), k.mul(k.mul(j1, j2), j3))

    @property
    def Tb(self) -> Optional[int]:
        """``j1 j2 j3^2 / (j1j2 + j1j3 + j2j3)^2``; None if the denominator vanishes."""
        k = self.k
        j1, j2, j3 = self.j
        den = k.mul(j1, j2) ^ k.mul(j1, j3) ^ k.mul(j2, j3)
        if den == 0:
            return None
        return k.div(k.mul(k.mul(j1, j2), k.sqr(j3)), k.sqr(den))

    def permuted(self, perm: Sequence[int]) -> "TripleInvariants":
        return TripleInvariants(self.k, tuple(self.j[i] for i in perm),
                                tuple(self.sgn[i] for i in perm))

    def multiset(self) -> Counter:
        return Counter(zip(self.j, self.sgn))

    def curves(self) -> tuple:
        return tuple(ec.from_invariants(self.k, j, s)
                     for j, s in zip(self.j, self.sgn))


def triple_invariants(E1, E2, E3) -> TripleInvariants:
    Es = (E1, E2, E3)
    return TripleInvariants(E1.k, tuple(ec.j_invariant(E) for E in Es),
                            tuple(ec.signature(E) for E in Es))


def hyp_condition(t: TripleInvariants) -> bool:
    k = t.k
    return k.inv(t.j[0]) ^ k.inv(t.j[1]) ^ k.inv(t.j[2]) == 0


def ta_condition(t: TripleInvariants) -> bool:
    return t.k.trace(t.Ta) == t.k.trace(t.sgn_sum)


def tb_condition(t: TripleInvariants) -> bool:
    Tb = t.Tb
    return Tb is not None and t.k.trace(Tb) == t.k.trace(t.sgn_sum)


def nonhyp_condition(t: TripleInvariants) -> bool:
    return ta_condition(t) or tb_condition(t)


@dataclass(frozen=True)
class CoverWitness:
    """A genus-3 curve whose quotients realise the requested triple.

    ``permutation[i]`` is the input index placed in position ``i`` before
    the construction ran.
    """

    curve: g3.Genus3Curve
    family: str
    permutation: tuple

    def to_dict(self) -> dict:
        return {"curve": g3.to_str(self.curve), "family": self.family,
                "permutation": list(self.permutation)}


def _odd_one_first(sgn) -> tuple:
    """A permutation putting the signature that differs (if any) first."""
    if sgn[0] == sgn[1] == sgn[2] or sgn[1] == sgn[2]:
        return (0, 1, 2)
    if sgn[0] == sgn[2]:
        return (1, 0, 2)
    return (2, 0, 1)


def _quotient_multiset(C) -> Counter:
    return Counter((ec.j_invariant(E), ec.signature(E)) for E in quotients_of(C))


def _round_trip(t: TripleInvariants, C, perm) -> CoverWitness:
    bad = g3.validate(C)
    if bad:
        raise CoverConstructionError("constructed %s violates %s" % (g3.to_str(C), bad))
    if _quotient_multiset(C) != t.multiset():
        raise CoverConstructionError(
            "quotients of %s do not reproduce the input triple" % g3.to_str(C))
    return CoverWitness(C, C.family, tuple(perm))


def exists_hyp_cover(t: TripleInvariants) -> Optional[CoverWitness]:
    """Hyperelliptic cover of an ordinary triple, or None."""
    if not hyp_condition(t):
        return None
    k = t.k
    if k.q == 2:
        raise ValueError("construction requires q > 2")
    perm = _odd_one_first(t.sgn)
    p = t.permuted(perm)
    j1, j2, j3 = p.j
    s1, s2, s3 = p.sgn
    if s1 == s2:
        a = k.root4(k.inv(j3))
        tt = k.root4(k.div(j3, j2))
        # the HypA quotients share the x^2 coefficient r + a(t+1); bring it
        # into the class of sgn1 and keep r in {0, r0}
        r = k.as_class(k.mul(a, tt ^ 1) ^ s1)
        C = g3.HypA(k, a, r, tt)
    else:
        b = k.root8(k.inv(k.mul(j2, j3)))
        u = k.root8(k.div(j1, j2))
        s = k.smallest_non_AS()
        C = g3.HypB(k, b, s1, s, s ^ u ^ k.sqr(u))
    return _round_trip(t, C, perm)


def exists_nonhyp_cover(t: TripleInvariants) -> Optional[CoverWitness]:
    """Ordinary plane-quartic cover (NHypA preferred, then NHypB), or None."""
    k = t.k
    if k.q == 2:
        raise ValueError("non-hyperelliptic construction requires q > 2")
    use_a, use_b = ta_condition(t), tb_condition(t)
    if not (use_a or use_b):
        return None
    perm = _odd_one_first(t.sgn)
    p = t.permuted(perm)
    s1, s2, s3 = (k.root4(k.inv(j)) for j in p.j)
    r = 0 if p.sgn[0] == p.sgn[1] else k.r0
    if use_a:
        a = k.div(k.mul(s1, s3), s2) ^ r
        c = k.div(k.mul(s3, s2), s1)
        e = k.div(k.mul(s1, s2), s3) ^ c ^ (a ^ r)
        C = g3.NHypA(k, a, c, e, r)
    else:
        S = s1 ^ s2 ^ s3
        if S == 0:
            # same vanishing as the T_b denominator, so tb_condition is False
            return None
        d = k.div(s1, S)
        c = k.div(s2, S)
        C = g3.NHypB(k, S ^ k.mul(d, r), c, d, r)
    return _round_trip(t, C, perm)


# ---------- supersingular search


def ss_traces(k: GF2n) -> tuple:
    """Possible traces of supersingular curves over k."""
    from math import isqrt
    if k.n % 2:
        s = isqrt(2 * k.q)
        return (-s, 0, s)
    s = isqrt(k.q)
    return (-2 * s, -s, 0, s, 2 * s)


def exists_ss_cover(k: GF2n, traces: Sequence[int],
                    max_tuples: Optional[int] = None) -> Optional[CoverWitness]:
    """First SS curve (lexicographic in f, g, d, e) whose quotient traces
    form the multiset ``traces``; None once the whole family is exhausted.

    Raises :class:`SearchExhausted` if ``max_tuples`` parameter tuples were
    tried without a decision.
    """
    if k.q > SS_MAX_Q:
        raise ValueError("SS search is budgeted for q <= %d" % SS_MAX_Q)
    target = Counter(traces)
    if sum(target.values()) != 3:
        raise ValueError("expected three traces")
    tried = 0
    split = [(f, g) for f in k.elements() for g in k.nonzero()
             if len(k.cubic_roots(f, g)) == 3]
    for f, g in split:
        lams = [k.div(g, v) for v in k.cubic_roots(f, g)]
        for d in k.elements():
            for e in k.elements():
                if max_tuples is not None and tried >= max_tuples:
                    raise SearchExhausted(
                        "no decision after %d SS parameter tuples" % tried)
                tried += 1
                got = Counter(ec.trace_of(ec.SupersingularEC(k, lam, d, e))
                              for lam in lams)
                if got == target:
                    C = g3.SS(k, d, e, f, g)
                    return CoverWitness(C, "ss", (0, 1, 2))
    return None
