import random

import pytest

from ascover import ec
from ascover import genus3 as g3
from ascover import projective as pj
from ascover.gf2 import make_field
from ascover.quotients import quotients_of, verify_isogeny


@pytest.mark.parametrize("family", sorted(g3.FAMILIES))
def test_identity_exhaustive_q4(F4, family):
    curves = list(g3.enumerate_family(F4, family))
    assert curves
    for C in curves:
        rep = verify_isogeny(C)
        assert rep.ok, rep.to_json()


@pytest.mark.parametrize("n", [4, 5])
@pytest.mark.parametrize("family", sorted(g3.FAMILIES))
def test_identity_random_tuples(n, family):
    k = make_field(n)
    rng = random.Random(1000 * n + len(family))
    for _ in range(120):
        rep = verify_isogeny(g3.random_curve(k, family, rng))
        assert rep.ok, rep.to_json()


@pytest.mark.parametrize("n", [5, 6])
@pytest.mark.parametrize("family", sorted(g3.FAMILIES))
def test_identity_many_random_tuples(n, family):
    k = make_field(n)
    rng = random.Random(7 * n)
    for _ in range(500):
        assert verify_isogeny(g3.random_curve(k, family, rng)).ok


def test_report_fields(F8):
    C = g3.HypA(F8, 1, 0, 2)
    rep = verify_isogeny(C)
    d = rep.to_dict()
    assert d["curve"] == "hypa:a=1,r=0,t=2"
    assert d["count"] == rep.count == g3.count_points(C)
    assert d["trace_sum"] == sum(ec.trace_of(E) for E in rep.triple)
    assert rep.to_json() == verify_isogeny(C).to_json()


def test_invalid_curve_rejected(F8):
    with pytest.raises(ValueError, match="t != 1"):
        quotients_of(g3.HypA(F8, 1, 0, 1))


def test_hypa_quotients_lie_on_the_hyperelliptic_locus(F16):
    for C in g3.enumerate_family(F16, "hypa"):
        js = [ec.j_invariant(E) for E in quotients_of(C)]
        assert F16.inv(js[0]) ^ F16.inv(js[1]) ^ F16.inv(js[2]) == 0
        assert len({ec.signature(E) for E in quotients_of(C)}) == 1


def test_hypb_signatures_split(F8):
    for C in g3.enumerate_family(F8, "hypb"):
        s = [ec.signature(E) for E in quotients_of(C)]
        assert s[1] == s[2] != s[0]


def test_ss_quotients_are_supersingular_with_distinct_lambda(F8):
    for C in g3.enumerate_family(F8, "ss"):
        T = list(quotients_of(C))
        assert all(isinstance(E, ec.SupersingularEC) for E in T)
        assert len({E.lam for E in T}) == 3


@pytest.mark.parametrize("n", [2, 3])
def test_ss_constant_on_x4_pairs_with_shifted_quotient(n):
    # with e x^4 in place of e z^4 the matching quotients are
    # y^2 + (g/v) y = x^3 + (d + (g/v) sqrt(e)) x^2
    k = make_field(n)
    for C in g3.enumerate_family(k, "ss"):
        F = {m: c for m, c in g3.quartic(C).items() if m != (0, 0, 4)}
        F = pj.form_add(F, pj.monomial(C.e, 4, 0, 0))
        count, _ = pj.common_zeros(k, [F])
        lams = [k.div(C.g, v) for v in g3.ss_roots(C)]
        tr = sum(ec.trace_of(ec.SupersingularEC(k, lam, C.d ^ k.mul(lam, k.sqrt(C.e)), 0))
                 for lam in lams)
        assert count == k.q + 1 - tr
