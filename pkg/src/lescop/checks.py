"""Randomized cross-check battery behind ``lescop verify``.

Every check draws its instances from its own ``random.Random`` seeded by
the run seed and the check name, so results do not depend on which checks
run, in which order, or in how many processes.
"""
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, List, NamedTuple, Optional, Tuple

from . import conway as cw
from .arith import dedekind_reciprocity_rhs, dedekind_sum_direct, dedekind_sum_fast
from .cosmetic import (
    NO_COSMETIC,
    thm21_difference_poly,
    thm22_difference_quadratics,
    thm3_verdict,
    thm5_verdict,
)
from .surgery import (
    ConwayData,
    SurgeryPresentation,
    boyer_lines_lambda,
    ito_lambda,
    ito_lambda_walker,
    lemma21_lambda,
    lescop_lambda,
    lescop_two_component_classical,
    m00_lambda,
    m0_lambda,
    nonempty_subsets,
    three_component_split_lambda,
    two_component_lambda,
    walker_from_lescop,
)

__all__ = [
    "CHECKS",
    "CheckResult",
    "format_report",
    "random_conway_data",
    "random_presentation",
    "random_slope",
    "run_checks",
]


# ----------------------------------------------------------------- generators


def random_slope(rng: random.Random, pmax: int = 30, qmax: int = 30, zero: bool = True, positive: bool = False):
    while True:
        q = rng.randint(1, qmax)
        p = rng.randint(1 if positive else -pmax, pmax)
        if (p != 0 or zero) and gcd(p, q) == 1:
            return (p, q)


def random_presentation(
    rng: random.Random,
    n: int,
    lmax: int = 5,
    pmax: int = 30,
    qmax: int = 30,
    split: Tuple[int, ...] = (),
    alg_split: bool = False,
    positive: bool = False,
) -> SurgeryPresentation:
    """Random presentation; components in ``split`` get zero linking."""
    lk = [[0] * n for _ in range(n)]
    if not alg_split:
        for i in range(n):
            for j in range(i + 1, n):
                if i not in split and j not in split:
                    lk[i][j] = lk[j][i] = rng.randint(-lmax, lmax)
    slopes = [random_slope(rng, pmax, qmax, positive=positive) for _ in range(n)]
    return SurgeryPresentation.make(slopes, lk)


def random_conway_data(rng: random.Random, n: int, amax: int = 5) -> ConwayData:
    return ConwayData({J: rng.randint(-amax, amax) for J in nonempty_subsets(n)})


# --------------------------------------------------------------------- checks


class CheckResult(NamedTuple):
    name: str
    cases: int
    failures: Tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def _dedekind(rng, cases):
    # the reciprocity law in this form needs p, q > 0; the fast/direct
    # comparison also covers signed arguments
    bad = []
    for _ in range(cases):
        while True:
            p = rng.randint(1, 10 ** 4)
            q = rng.randint(1, 10 ** 4)
            if gcd(p, q) == 1:
                break
        if dedekind_sum_fast(p, q) + dedekind_sum_fast(q, p) != dedekind_reciprocity_rhs(p, q):
            bad.append(f"reciprocity p={p} q={q}")
        sp, sq = rng.choice((1, -1)) * p, rng.choice((1, -1)) * q
        if q <= 2000 and dedekind_sum_fast(sp, sq) != dedekind_sum_direct(sp, sq):
            bad.append(f"fast/direct p={sp} q={sq}")
    return cases, bad


def _boyer_lines(rng, cases):
    bad = []
    for _ in range(cases):
        a2 = rng.randint(-10, 10)
        p, q = random_slope(rng, 50, 50, zero=False)
        pres = SurgeryPresentation.make([(p, q)])
        got = lescop_lambda(pres, ConwayData({0: a2}))
        want = boyer_lines_lambda(a2, (p, q))
        if got != want:
            bad.append(f"a2={a2} slope={p}/{q}: {got} != {want}")
    return cases, bad


def _two_component(rng, cases):
    bad = []
    for _ in range(cases):
        pres = random_presentation(rng, 2)
        cd = random_conway_data(rng, 2)
        a, b = lescop_lambda(pres, cd), two_component_lambda(pres, cd)
        if a != b:
            bad.append(f"{pres.slopes} lk={pres.lk(0, 1)}: {a} != {b}")
    return cases, bad


def _ito(rng, cases):
    bad = []
    done = 0
    while done < cases:
        pres = random_presentation(rng, 2)
        if pres.linking_matrix().det() == 0:
            continue
        done += 1
        cd = random_conway_data(rng, 2)
        a2_1, a2_2, a3 = cd.get((0,)), cd.get((1,)), -cd.get((0, 1))
        vals = {
            "ito": ito_lambda(pres, a2_1, a2_2, a3),
            "classical": lescop_two_component_classical(pres, a2_1, a2_2, a3),
            "general": lescop_lambda(pres, cd),
        }
        if len(set(vals.values())) != 1:
            bad.append(f"{pres.slopes} lk={pres.lk(0, 1)}: {vals}")
        w1 = ito_lambda_walker(pres, a2_1, a2_2, a3)
        w2 = walker_from_lescop(pres, vals["general"])
        if w1 != w2:
            bad.append(f"walker {pres.slopes}: {w1} != {w2}")
    return cases, bad


def _three_split(rng, cases):
    bad = []
    for k in range(cases):
        pres = random_presentation(rng, 3, alg_split=True)
        if k % 3 == 1:
            pres = pres.with_slope(2, 0)
        elif k % 3 == 2:
            pres = pres.with_slope(1, 0).with_slope(2, 0)
        cd = random_conway_data(rng, 3)
        ref = lescop_lambda(pres, cd)
        got = {"three": three_component_split_lambda(pres, cd)}
        if k % 3 == 1:
            got["m0"] = m0_lambda(pres, cd)
        if k % 3 == 2:
            got["m0"] = m0_lambda(pres, cd)
            got["m00"] = m00_lambda(pres, cd)
        for name, v in got.items():
            if v != ref:
                bad.append(f"{name} {pres.slopes}: {v} != {ref}")
    return cases, bad


def _inner_presentation(rng, n_inner, positive=False):
    """Component 0 split from ``1..n_inner``; three inner components are kept
    algebraically split so every theta is computable."""
    pres = random_presentation(
        rng, n_inner + 1, split=(0,), alg_split=n_inner >= 3, positive=positive, pmax=12, qmax=12
    )
    return pres


def _split_component(rng, cases):
    bad = []
    for _ in range(cases):
        n_inner = rng.choice((1, 2, 2, 3))
        pres = _inner_presentation(rng, n_inner)
        if pres.slopes[0].p == 0:
            pres = pres.with_slope(0, 1, pres.slopes[0].q)
        cd = random_conway_data(rng, pres.n)
        a, b = lescop_lambda(pres, cd), lemma21_lambda(pres, cd)
        if a != b:
            bad.append(f"{pres.slopes}: {a} != {b}")
    return cases, bad


def _thm21(rng, cases):
    bad = []
    done = 0
    while done < cases:
        pres = _inner_presentation(rng, rng.choice((1, 2, 2, 3)))
        if pres.linking_matrix().principal(range(1, pres.n)).det() == 0:
            continue
        done += 1
        cd = random_conway_data(rng, pres.n)
        poly = thm21_difference_poly(pres, cd)
        for p in range(1, 11):
            diff = lescop_lambda(pres.with_slope(0, p), cd) - lescop_lambda(pres.with_slope(0, -p), cd)
            if poly(p) != diff:
                bad.append(f"{pres.slopes} p={p}: {poly(p)} != {diff}")
                break
    return cases, bad


def _thm22(rng, cases):
    bad = []
    for _ in range(cases):
        pres = _inner_presentation(rng, rng.choice((1, 2, 2, 3)))
        cd = random_conway_data(rng, pres.n)
        quads = thm22_difference_quadratics(pres, cd)
        inner = list(range(1, pres.n))
        base = lescop_lambda(pres.sub(inner), cd.restrict(inner))
        qprod = pres.sub(inner).q_product()
        for q in range(1, 11):
            for sign, quad in ((1, quads.plus), (-1, quads.minus)):
                diff = lescop_lambda(pres.with_slope(0, sign, q), cd) - base
                if diff != Fraction(qprod, q) * quad(q):
                    bad.append(f"{pres.slopes} q={q} sign={sign}: {diff}")
    return cases, bad


def _golden(rng, cases):
    bad = []
    seen = []

    def expect(label, got, want):
        seen.append(label)
        if got != want:
            bad.append(f"{label}: {got!r} != {want!r}")

    unknot = ConwayData({0: 0})
    expect("lambda(unknot, 1/1)", lescop_lambda(SurgeryPresentation.make([(1, 1)]), unknot), 0)
    expect("lambda(unknot, 0/1)", lescop_lambda(SurgeryPresentation.make([(0, 1)]), unknot), Fraction(-1, 12))
    for a in range(-10, 10):
        expect(f"lambda(K, 0/1), a1hat={a}",
               lescop_lambda(SurgeryPresentation.make([(0, 1)]), ConwayData({0: a})), a - Fraction(1, 12))
    expect("nabla(whitehead)", cw.conway(cw.builtin_link("whitehead")), (0, 0, 0, 1))
    expect("nabla(borromean)", cw.conway(cw.builtin_link("borromean")), (0, 0, 0, 0, 1))
    expect("nabla(trefoil)", cw.conway(cw.builtin_link("trefoil")), (1, 0, 1))
    for m in (-3, -2, -1, 1, 2, 3):
        expect(f"nabla(L_{m})", cw.conway(cw.builtin_link("L_m", m)), (0, 0, 0, m))
        expect(f"a1hat(L_{m})", cw.a1hat(cw.builtin_link("L_m", m)), -m)
    expect("a1hat(whitehead)", cw.a1hat(cw.builtin_link("whitehead")), -1)
    expect("a1hat(borromean)", cw.a1hat(cw.builtin_link("borromean")), 1)
    w = cw.a1hat(cw.builtin_link("whitehead"))
    expect("whitehead verdict", thm3_verdict(w, 1, 2).statement, NO_COSMETIC)
    b = cw.a1hat(cw.builtin_link("borromean"))
    expect("borromean verdict", thm5_verdict(b).statement, NO_COSMETIC)
    return len(seen), bad


@dataclass(frozen=True)
class Check:
    name: str
    func: Callable
    scale: float = 1.0  # fraction of ``cases`` this check runs
    fixed: bool = False


CHECKS: List[Check] = [
    Check("dedekind", _dedekind, 5.0),
    Check("boyer-lines", _boyer_lines),
    Check("two-component", _two_component),
    Check("ito", _ito),
    Check("three-split", _three_split),
    Check("split-component", _split_component),
    Check("thm21-difference", _thm21, 0.5),
    Check("thm22-difference", _thm22, 0.25),
    Check("golden", _golden, fixed=True),
]


def _run_one(args) -> CheckResult:
    check, seed, cases = args
    rng = random.Random(f"{seed}:{check.name}")
    n = 0 if check.fixed else max(1, int(cases * check.scale))
    count, bad = check.func(rng, n)
    return CheckResult(check.name, count, tuple(bad))


def run_checks(seed: int = 0, cases: int = 200, workers: int = 1, checks: Optional[List[Check]] = None) -> List[CheckResult]:
    checks = CHECKS if checks is None else checks
    jobs = [(c, seed, cases) for c in checks]
    if workers <= 1:
        return [_run_one(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, jobs))


def format_report(results: List[CheckResult], seed: int, cases: int) -> str:
    lines = [f"{'check':<20}{'cases':>8}{'failures':>10}  status"]
    for r in results:
        lines.append(f"{r.name:<20}{r.cases:>8}{len(r.failures):>10}  {'ok' if r.ok else 'FAIL'}")
        for f in r.failures[:5]:
            lines.append(f"    {f}")
    n_bad = sum(1 for r in results if not r.ok)
    tail = "all checks passed" if not n_bad else f"{n_bad} check(s) failed"
    lines.append(f"{tail} (seed {seed}, {cases} cases)")
    return "\n".join(lines) + "\n"
