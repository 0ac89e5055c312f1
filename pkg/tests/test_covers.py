import itertools
import random
from collections import Counter

import pytest

from ascover import covers
from ascover import ec
from ascover import genus3 as g3
from ascover.gf2 import make_field
from ascover.quotients import quotients_of, verify_isogeny


def _pairs(k):
    return [(j, s) for j in k.nonzero() for s in (0, k.r0)]


def _key(t):
    return frozenset(t.multiset().items())


def _triple(k, combo):
    return covers.TripleInvariants(k, tuple(j for j, _ in combo),
                                   tuple(s for _, s in combo))


def _realized(k, families):
    out = set()
    for fam in families:
        for C in g3.enumerate_family(k, fam):
            out.add(_key(covers.triple_invariants(*quotients_of(C))))
    return out


# -- completeness: the criteria describe exactly what the families realize

@pytest.mark.parametrize("n", [3, 4])
def test_hyperelliptic_criterion_is_complete(n):
    k = make_field(n)
    predicted = {_key(_triple(k, c))
                 for c in itertools.combinations_with_replacement(_pairs(k), 3)
                 if covers.hyp_condition(_triple(k, c))}
    assert predicted == _realized(k, ("hypa", "hypb"))


@pytest.mark.parametrize("n", [3, 4])
def test_nonhyperelliptic_criterion_is_complete(n):
    k = make_field(n)
    predicted = {_key(_triple(k, c))
                 for c in itertools.combinations_with_replacement(_pairs(k), 3)
                 if covers.nonhyp_condition(_triple(k, c))}
    assert predicted == _realized(k, ("nhypa", "nhypb"))


@pytest.mark.parametrize("n", [4, 5])
def test_witnesses_on_random_triples(n):
    k = make_field(n)
    rng = random.Random(n)
    pairs = _pairs(k)
    hits = Counter()
    for _ in range(300):
        t = _triple(k, [rng.choice(pairs) for _ in range(3)])
        for fn, cond in ((covers.exists_hyp_cover, covers.hyp_condition),
                         (covers.exists_nonhyp_cover, covers.nonhyp_condition)):
            w = fn(t)
            assert (w is not None) == cond(t)
            if w is not None:
                hits[w.family] += 1
                assert verify_isogeny(w.curve).ok
                assert covers.triple_invariants(*quotients_of(w.curve)).multiset() \
                    == t.multiset()
    assert hits["nhypa"] and hits["nhypb"]


# -- the obstruction elements

@pytest.mark.parametrize("n", [3, 4])
def test_ta_and_tb_are_fourth_powers_of_the_construction(n):
    k = make_field(n)
    for C in g3.enumerate_family(k, "nhypa"):
        t = covers.triple_invariants(*quotients_of(C))
        assert t.Ta == k.pow(C.e, 4)
    for C in g3.enumerate_family(k, "nhypb"):
        t = covers.triple_invariants(*quotients_of(C))
        assert t.Tb == k.pow(k.mul(C.c, C.d), 4)


def test_tb_symmetric_in_first_two(F16):
    rng = random.Random(0)
    for _ in range(200):
        j = tuple(rng.randrange(1, 16) for _ in range(3))
        t = covers.TripleInvariants(F16, j, (0, 0, 0))
        assert t.Tb == t.permuted((1, 0, 2)).Tb


def test_tb_undefined_exactly_on_hyperelliptic_locus(F8):
    for c in itertools.product(F8.nonzero(), repeat=3):
        t = covers.TripleInvariants(F8, c, (0, 0, 0))
        assert (t.Tb is None) == covers.hyp_condition(t)


def test_equal_triple(F16):
    for j in F16.nonzero():
        t = covers.TripleInvariants(F16, (j, j, j), (0, 0, 0))
        assert t.Ta == F16.inv(j) and t.Tb == 1


def test_triple_validation(F8):
    with pytest.raises(ValueError):
        covers.TripleInvariants(F8, (0, 1, 2), (0, 0, 0))
    with pytest.raises(ValueError):
        covers.TripleInvariants(F8, (1, 1, 2), (0, 0, 3))
    with pytest.raises(ValueError):
        covers.TripleInvariants(F8, (1, 2), (0, 0))


def test_q2_is_refused():
    k = make_field(1)
    t = covers.TripleInvariants(k, (1, 1, 1), (0, 0, 1))
    with pytest.raises(ValueError):
        covers.exists_nonhyp_cover(t)


def test_hyp_witness_has_valid_t(F16):
    for c in itertools.combinations_with_replacement(_pairs(F16), 3):
        t = _triple(F16, c)
        w = covers.exists_hyp_cover(t)
        if w is not None and w.family == "hypa":
            assert w.curve.t not in (0, 1)


def test_witness_permutation_puts_odd_signature_first(F8):
    r0 = F8.r0
    t = covers.TripleInvariants(F8, (1, 2, 3), (0, r0, 0))
    p = t.permuted(covers._odd_one_first(t.sgn))
    assert p.sgn == (r0, 0, 0)


# -- supersingular search

def test_ss_traces():
    assert covers.ss_traces(make_field(5)) == (-8, 0, 8)
    assert covers.ss_traces(make_field(4)) == (-8, -4, 0, 4, 8)


def test_ss_search_all_multisets_q32():
    k = make_field(5)
    for m in itertools.combinations_with_replacement(covers.ss_traces(k), 3):
        w = covers.exists_ss_cover(k, m)
        assert w is not None
        rep = verify_isogeny(w.curve)
        assert rep.ok and sorted(rep.traces) == sorted(m)


def test_ss_search_unrealizable_and_budget(F8):
    assert covers.exists_ss_cover(F8, (1, 1, 1)) is None
    with pytest.raises(covers.SearchExhausted):
        covers.exists_ss_cover(F8, (1, 1, 1), max_tuples=10)
    with pytest.raises(ValueError):
        covers.exists_ss_cover(F8, (0, 0))
    with pytest.raises(ValueError):
        covers.exists_ss_cover(make_field(14), (0, 0, 0))
