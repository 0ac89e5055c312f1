import itertools
import random
from math import isqrt

import pytest

from ascover import genus3 as g3
from ascover import projective as pj
from ascover.gf2 import make_field


def _brute_affine(C):
    """Affine points of a hyperelliptic model by scanning every (x, y)."""
    k = C.k
    poles = (0, 1, C.t) if isinstance(C, g3.HypA) else ()
    return sum(1 for x in k.elements() if x not in poles for y in k.elements()
               if k.sqr(y) ^ y == g3.hyperelliptic_rhs(C, x))


def _sample(k, family, n, seed=0):
    rng = random.Random(seed)
    return [g3.random_curve(k, family, rng) for _ in range(n)]


# -- validation

def test_validate_reports_named_constraints(F8):
    assert g3.validate(g3.HypA(F8, 1, 0, 1)) == ["t != 1"]
    assert g3.validate(g3.HypA(F8, 0, 1, 2)) == ["a != 0"]
    assert "r in {0, r0}" in g3.validate(g3.HypA(F8, 1, 2, 2))
    assert g3.validate(g3.HypB(F8, 1, 0, 1, 1)) == ["s != t"]
    assert "s not in AS(k)" in g3.validate(g3.HypB(F8, 1, 0, 2, 1))
    assert g3.validate(g3.NHypB(F8, 1, 0, 2, 0)) == ["cd != 0"]
    assert "c + d != 1" in g3.validate(g3.NHypB(F8, 1, 2, 3, 0))
    assert "a != r" in g3.validate(g3.NHypA(F8, 0, 1, 0, 0))
    assert "g != 0" in g3.validate(g3.SS(F8, 0, 0, 0, 0))


def test_family_sizes_over_f8(F8):
    q = F8.q
    non_as = q // 2
    assert len(list(g3.enumerate_family(F8, "hypa"))) == (q - 1) * 2 * (q - 2)
    assert len(list(g3.enumerate_family(F8, "hypb"))) == (q - 1) * 2 * non_as * (non_as - 1)


@pytest.mark.parametrize("family", ["ss", "nhypa", "nhypb"])
def test_enumeration_matches_filtered_box(F4, family):
    cls = g3.FAMILIES[family]
    names = [n for n in ("a", "c", "d", "e", "f", "g", "r") if n in cls.__dataclass_fields__]
    box = [cls(F4, **dict(zip(names, vals)))
           for vals in itertools.product(range(F4.q), repeat=len(names))]
    assert set(g3.enumerate_family(F4, family)) == {C for C in box if g3.is_valid(C)}


def test_random_curve_is_valid_and_seeded(F16):
    for fam in g3.FAMILIES:
        a = _sample(F16, fam, 5, seed=3)
        assert a == _sample(F16, fam, 5, seed=3)
        assert all(g3.is_valid(C) for C in a)


# -- counting

@pytest.mark.parametrize("family", ["hypa", "hypb"])
def test_hyperelliptic_affine_count_bruteforce(F8, family):
    for C in g3.enumerate_family(F8, family):
        extra = 4 if family == "hypa" else 2 * (F8.trace(C.r) == 0)
        assert g3.count_points(C) == _brute_affine(C) + extra


@pytest.mark.parametrize("family", ["ss", "nhypa", "nhypb"])
def test_quartic_count_matches_pure_python_scan(F8, family):
    for C in _sample(F8, family, 15):
        F = g3.quartic(C)
        slow = sum(1 for P in pj.projective_points(F8) if pj.evaluate(F8, F, P) == 0)
        assert g3.count_points(C) == slow


def test_row_block_does_not_change_count(F16):
    for C in _sample(F16, "nhypb", 3):
        F = g3.quartic(C)
        assert {pj.common_zeros(F16, [F], row_block=b)[0] for b in (1, 3, 16, 64)} \
            == {g3.count_points(C)}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_rational_points_are_on_curve(n):
    k = make_field(n)
    for fam in g3.FAMILIES:
        for C in _sample(k, fam, 6, seed=n):
            pts = g3.rational_points(C)
            assert len(pts) == len(set(pts)) == g3.count_points(C)
            assert all(g3.on_curve(C, P) for P in pts)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_serre_weil_bound(n):
    k = make_field(n)
    m = isqrt(4 * k.q)
    for fam in g3.FAMILIES:
        for C in _sample(k, fam, 10, seed=n):
            assert abs(g3.count_points(C) - (k.q + 1)) <= 3 * m


def test_hypb_denominators_have_no_rational_root(F16):
    for C in _sample(F16, "hypb", 20):
        for x in F16.elements():
            x2x = F16.sqr(x) ^ x
            assert x2x != C.s and x2x != C.t


def test_nhypb_with_d_one_is_nhypa(F8):
    # c z(x+y+z) = c z^2 + c z(x+y), so d = 1 lands in NHypA with e = c
    for C in g3.enumerate_family(F8, "nhypb"):
        if C.d != 1:
            continue
        A = g3.NHypA(F8, C.a, C.c, C.c, C.r)
        assert g3.is_valid(A)
        assert g3.quartic(A) == g3.quartic(C)
        assert g3.count_points(A) == g3.count_points(C)


# -- involutions

@pytest.mark.parametrize("family", sorted(g3.FAMILIES))
def test_involutions_permute_rational_points(F8, family):
    for C in _sample(F8, family, 8):
        pts = g3.rational_points(C)
        rep = g3.involutions(C)
        assert len(rep.maps) == 3
        for i in rep.maps:
            image = [i(P) for P in pts]
            assert sorted(image, key=repr) == sorted(pts, key=repr)
            assert all(i(i(P)) == P for P in pts)
        # the three involutions commute and compose to each other
        i1, i2, i3 = rep.maps
        assert all(i1(i2(P)) == i3(P) for P in pts)


def test_hypa_fixed_points_lie_over_sqrt_t(F16):
    for C in _sample(F16, "hypa", 10):
        fixed = g3.involutions(C).fixed[0]
        assert all(P[0] == F16.sqrt(C.t) for P in fixed)


def test_nhypb_fixed_points_of_swap(F8):
    # on (x, x, 1) the curve reduces to c + d x^2 = x, i.e. (dx)^2 + dx = cd
    k = F8
    for C in g3.enumerate_family(k, "nhypb"):
        fixed = g3.involutions(C).fixed[0]
        assert all(P[0] == P[1] and P[2] == 1 for P in fixed)
        for x, _, _ in fixed:
            dx = k.mul(C.d, x)
            assert k.sqr(dx) ^ dx == k.mul(C.c, C.d)
        assert len(fixed) == (2 if k.trace(k.mul(C.c, C.d)) == 0 else 0)


# -- smoothness

@pytest.mark.parametrize("family", ["ss", "nhypa", "nhypb"])
def test_quartics_smooth_over_f8(F8, family):
    for C in g3.enumerate_family(F8, family):
        assert g3.smoothness_spotcheck(C, 1) is None, g3.to_str(C)


@pytest.mark.parametrize("family", ["ss", "nhypa", "nhypb"])
def test_quartics_smooth_over_quadratic_extension(F4, family):
    for C in g3.enumerate_family(F4, family):
        assert g3.smoothness_spotcheck(C, 2) is None, g3.to_str(C)


def test_singular_scan_detects_a_double_conic(F4):
    conic = pj.form_add(pj.monomial(1, 1, 1, 0), pj.monomial(1, 0, 0, 2))
    F = pj.form_mul(F4, conic, conic)
    count, first = pj.common_zeros(F4, [F] + [pj.partial(F, v) for v in range(3)])
    assert count == F4.q + 1 and pj.evaluate(F4, conic, first) == 0


def test_spotcheck_rejects_invalid_parameters(F4):
    C = g3.NHypA(F4, 2, 1, 0, 2)
    assert g3.validate(C) == ["a != r"]
    with pytest.raises(ValueError, match="a != r"):
        g3.smoothness_spotcheck(C)
    with pytest.raises(TypeError):
        g3.smoothness_spotcheck(g3.HypA(F4, 1, 0, 2))


def test_embedding_is_a_ring_map(F8):
    K = make_field(6)
    phi = g3._embedding(F8, K)
    for a in F8.elements():
        for b in F8.elements():
            assert phi(F8.mul(a, b)) == K.mul(phi(a), phi(b))
            assert phi(a ^ b) == phi(a) ^ phi(b)


# -- serialization

def test_to_str_and_parse(F16):
    for fam in g3.FAMILIES:
        for C in _sample(F16, fam, 5):
            assert g3.parse(F16, g3.to_str(C)) == C
    assert g3.to_str(g3.HypA(F16, 1, 0, 2)) == "hypa:a=1,r=0,t=2"


def test_parse_errors(F8):
    with pytest.raises(ValueError, match="unknown genus-3 family"):
        g3.parse(F8, "foo:a=1")
    with pytest.raises(ValueError, match="missing"):
        g3.parse(F8, "hypa:a=1,r=0")
    with pytest.raises(ValueError):
        g3.parse(F8, "hypa:a=1,r=0,t=zz")
