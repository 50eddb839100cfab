import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lescop.checks import random_conway_data, random_presentation
from lescop.cosmetic import (
    INCONCLUSIVE,
    NO_COSMETIC,
    QuadraticPoly,
    complement_bound,
    positive_integer_roots,
    thm21_admissible_p,
    thm21_difference_poly,
    thm22_admissible_q,
    thm22_coefficients,
    thm22_conditions,
    thm22_difference_quadratics,
    thm3_verdict,
    thm4_verdict,
    thm5_verdict,
)
from lescop.surgery import (
    ConwayData,
    PreconditionError,
    SurgeryPresentation,
    ZeroOrderHomology,
    lescop_lambda,
    nonempty_subsets,
)

P = SurgeryPresentation.make


def inner(rng, n_inner, positive=False):
    return random_presentation(rng, n_inner + 1, split=(0,), alg_split=n_inner >= 3,
                               positive=positive, pmax=12, qmax=12)


# -------------------------------------------------------------- root finding


def test_roots_examples():
    assert positive_integer_roots(QuadraticPoly(1, -3, 2)).admissible == (1, 2)
    v = positive_integer_roots(QuadraticPoly(1, 0, 1))
    assert v.admissible == () and not v.unconstrained and v.obstructed
    assert positive_integer_roots(QuadraticPoly(0, 0, 0)).unconstrained


def test_roots_edge_cases():
    assert positive_integer_roots(QuadraticPoly(0, 2, -6)).admissible == (3,)
    assert positive_integer_roots(QuadraticPoly(0, 0, 5)).admissible == ()
    assert positive_integer_roots(QuadraticPoly(1, -4, 4)).admissible == (2,)
    assert positive_integer_roots(QuadraticPoly(2, -3, 1)).admissible == (1,)  # 1/2 dropped
    assert positive_integer_roots(QuadraticPoly(1, 1, -2)).admissible == (1,)  # -2 dropped
    assert positive_integer_roots(QuadraticPoly(1, 0, -2)).admissible == ()  # irrational


@settings(max_examples=200)
@given(st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30), st.integers(1, 5))
def test_roots_are_exact_and_complete(a, b, c, d):
    poly = QuadraticPoly(Fraction(a, d), Fraction(b, d), Fraction(c, d))
    v = positive_integer_roots(poly)
    if poly.is_zero:
        assert v.unconstrained
        return
    brute = tuple(x for x in range(1, 61) if poly(x) == 0)
    assert v.admissible == brute
    assert len(v.admissible) <= 2


def test_complement_bound():
    assert [complement_bound(k) for k in (0, 2, 4)] == [0, 2, 4]
    with pytest.raises(ValueError):
        complement_bound(-1)


# ------------------------------------------------------------ +p versus -p


def test_thm21_unknot_companion_by_hand():
    # n = 1, slope 1/1: A = [1], so the display expands to
    # -p^2/12 + p/4 + 2 (a(K0) + a(K0 u K1)) - 1/6
    pres = P([(1, 1), (1, 1)])
    cd = ConwayData({"0": 2, "1": 7, "0,1": -1})
    poly = thm21_difference_poly(pres, cd)
    assert (poly.c2, poly.c1, poly.c0) == (Fraction(-1, 12), Fraction(1, 4), 2 * (2 - 1) - Fraction(1, 6))


def test_thm21_trivial_data_signs():
    rng = random.Random(3)
    for _ in range(30):
        pres = random_presentation(rng, rng.randint(2, 4), alg_split=True, positive=True, pmax=12, qmax=12)
        cd = ConwayData({J: 0 for J in nonempty_subsets(pres.n)})
        poly = thm21_difference_poly(pres, cd)
        det = pres.linking_matrix().principal(range(1, pres.n)).det()
        assert det > 0 and poly.c2 < 0 and poly.c1 > 0
        assert poly.c0 == -Fraction(pres.sub(range(1, pres.n)).q_product(), 6) * det


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_thm21_matches_engine(seed):
    rng = random.Random(seed)
    pres = inner(rng, rng.choice((1, 2, 3)))
    if pres.linking_matrix().principal(range(1, pres.n)).det() == 0:
        return
    cd = random_conway_data(rng, pres.n)
    poly = thm21_difference_poly(pres, cd)
    for p in range(1, 11):
        diff = lescop_lambda(pres.with_slope(0, p), cd) - lescop_lambda(pres.with_slope(0, -p), cd)
        assert poly(p) == diff
    v = thm21_admissible_p(pres, cd)
    assert len(v.admissible) <= 2
    for p in v.admissible:
        assert lescop_lambda(pres.with_slope(0, p), cd) == lescop_lambda(pres.with_slope(0, -p), cd)


def test_thm21_preconditions():
    cd = random_conway_data(random.Random(0), 2)
    with pytest.raises(ZeroOrderHomology):
        thm21_difference_poly(P([(1, 1), (0, 1)]), cd)
    with pytest.raises(PreconditionError):
        thm21_difference_poly(P([(1, 1), (1, 1)], [[0, 1], [1, 0]]), cd)


# ------------------------------------------------------------ +-1/q versus M


def _base(pres, cd):
    rest = list(range(1, pres.n))
    return lescop_lambda(pres.sub(rest), cd.restrict(rest)), pres.sub(rest).q_product()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_thm22_difference_matches_engine(seed):
    rng = random.Random(seed)
    pres = inner(rng, rng.choice((1, 2, 3)))
    cd = random_conway_data(rng, pres.n)
    quads = thm22_difference_quadratics(pres, cd)
    base, qprod = _base(pres, cd)
    assert quads.plus.c1 == quads.minus.c1 == 0
    for q in range(1, 11):
        for sign, quad in ((1, quads.plus), (-1, quads.minus)):
            assert lescop_lambda(pres.with_slope(0, sign, q), cd) - base == Fraction(qprod, q) * quad(q)


def test_thm22_verdict_is_sound():
    # det A_N always has sign (-1)^b_-, so the constant term vanishes and the
    # quadratics are +/- y q^2: either every q is excluded or the invariant
    # cannot tell the surgeries apart for any q
    rng = random.Random(8)
    seen = set()
    for _ in range(150):
        pres = inner(rng, rng.choice((1, 2)))
        cd = random_conway_data(rng, pres.n, amax=1)
        v = thm22_admissible_q(pres, cd)
        assert v.admissible == ()
        base, _ = _base(pres, cd)
        same = [lescop_lambda(pres.with_slope(0, s, q), cd) == base for q in range(1, 6) for s in (1, -1)]
        if v.unconstrained:
            assert all(same)
        else:
            assert not any(same) and v.statement == NO_COSMETIC
        seen.add(v.unconstrained)
    assert seen == {True, False}


def test_thm22_printed_coefficients_under_positive_split():
    # algebraically split with positive slopes: c0 vanishes, the printed c1 does not
    rng = random.Random(4)
    for _ in range(20):
        pres = random_presentation(rng, rng.randint(2, 4), alg_split=True, positive=True, pmax=9, qmax=9)
        cd = random_conway_data(rng, pres.n)
        c2, c1, c0 = thm22_coefficients(pres, cd)
        assert c0 == 0 and c1 != 0


def test_thm22_printed_mirror_case():
    rng = random.Random(5)
    pres = inner(rng, 2)
    cd = random_conway_data(rng, pres.n)
    q = thm22_coefficients(pres, cd)
    assert (q.minus.c2, q.minus.c1, q.minus.c0) == (-q.plus.c2, q.plus.c1, -q.plus.c0)


@pytest.mark.parametrize("slope", [(3, 2), (-3, 2), (0, 1), (-7, 5)])
def test_thm22_one_inner_component(slope):
    # with one surgery component the second condition always vanishes
    _, cond2 = thm22_conditions(P([(1, 1), slope]))
    assert cond2 == 0


def test_thm22_zero_first_slope():
    # p1/q1 = 0/1 with the rest split and nonzero: A_N is singular, c0 = 0,
    # and only the first singleton survives in the first condition, with theta = 2
    pres = P([(1, 1), (0, 1), (3, 2), (-5, 3)])
    cond1, cond2 = thm22_conditions(pres)
    assert cond2 == 0
    assert cond1 == 2 * Fraction(3, 2) * Fraction(-5, 3)
    assert thm22_coefficients(pres, random_conway_data(random.Random(1), 4)).c0 == 0


def test_thm22_unconstrained():
    # one inner component with slope 0/1 and vanishing data: nothing to say
    pres = P([(1, 1), (0, 1)])
    cd = ConwayData({J: 0 for J in nonempty_subsets(2)})
    cond1, cond2 = thm22_conditions(pres)
    assert cond1 == 2 and cond2 == 0
    v = thm22_admissible_q(pres, cd)
    assert v.unconstrained and v.statement == INCONCLUSIVE


# -------------------------------------------------------- fixed-family verdicts


def test_thm3_whitehead():
    v = thm3_verdict(-1, 3, 5)
    assert v.statement == NO_COSMETIC and v.obstructed
    assert v.witness == {"pair": Fraction(2), "vs_zero_surgery": Fraction(-3)}
    assert thm3_verdict(-1, 3, 5, same_sign=False).witness["pair"] == -8


@pytest.mark.parametrize("m", [-3, -2, -1, 1, 2, 3])
def test_thm3_twisted_family_scales(m):
    v = thm3_verdict(-m, 2, 1)
    assert v.statement == NO_COSMETIC
    assert v.witness["vs_zero_surgery"] == -2 * m
    assert v.witness["pair"] == -m


def test_thm3_inconclusive():
    v = thm3_verdict(0, 2, 3)
    assert v.unconstrained and v.statement == INCONCLUSIVE
    with pytest.raises(ValueError):
        thm3_verdict(1, 0, 1)


def test_thm3_matches_engine():
    # K0 u K1 split two-component link, K1 with 0-surgery
    for a_L in (-2, -1, 1, 3):
        cd = ConwayData({"0": 1, "1": 2, "0,1": a_L})
        for q0, q0p in ((1, 2), (3, 5)):
            lam = lescop_lambda(P([(1, q0), (0, 1)]), cd)
            lam2 = lescop_lambda(P([(1, q0p), (0, 1)]), cd)
            v = thm3_verdict(a_L, q0, q0p)
            assert lam - lam2 == v.witness["pair"]
            base = lescop_lambda(P([(0, 1)]), ConwayData({0: 2}))
            assert lam - base == v.witness["vs_zero_surgery"]


def test_thm4_and_thm5_borromean():
    assert thm5_verdict(1).statement == NO_COSMETIC
    assert thm5_verdict(1, p0=-1, q0=4).witness["vs_base"] == -4
    v = thm4_verdict(3, 2, 0, 1)
    assert v.statement == NO_COSMETIC and v.witness["form"] == 2
    assert thm4_verdict(1, 1, 0, 0).statement == INCONCLUSIVE
    assert thm5_verdict(0).statement == INCONCLUSIVE
    with pytest.raises(PreconditionError):
        thm4_verdict(0, 1, 1, 1)


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5).filter(bool), st.integers(1, 5))
def test_verdicts_monotone_under_zeroed_data(a, b, p1, q1):
    # with all a1hat inputs set to zero the verdict is always inconclusive,
    # so zeroing can never turn "inconclusive" into "none"
    for zeroed in (thm3_verdict(0, 2, 3), thm4_verdict(p1, q1, 0, 0), thm5_verdict(0)):
        assert zeroed.statement == INCONCLUSIVE
    assert (thm4_verdict(p1, q1, a, b).statement == NO_COSMETIC) == (p1 * a + q1 * b != 0)


def test_verdict_serialization():
    d = thm3_verdict(-1, 3, 5).as_dict()
    assert d["witness"] == {"pair": "2", "vs_zero_surgery": "-3"}
    assert d["statement"] == NO_COSMETIC
    d = thm21_admissible_p(P([(1, 1), (1, 1)]), ConwayData({"0": 0, "1": 0, "0,1": 0})).as_dict()
    assert set(d) == {"statement", "unconstrained", "admissible", "witness", "polys"}
