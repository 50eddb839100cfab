"""Purely cosmetic surgery obstructions as exact arithmetic checks.

Each check reduces "could these two surgeries give the same oriented
manifold?" to the vanishing of a difference of Casson-Walker-Lescop
invariants.  A nonzero difference rules the pair out; a zero difference
proves nothing, and verdicts say so.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Dict, List, Mapping, Optional, Tuple

from .arith import as_fraction, format_fraction
from .linalg import bordered_submatrix
from .surgery import (
    ConwayData,
    PreconditionError,
    SurgeryPresentation,
    ZeroOrderHomology,
    nonempty_subsets,
)

__all__ = [
    "CosmeticVerdict",
    "QuadraticPoly",
    "Thm22Quadratics",
    "complement_bound",
    "positive_integer_roots",
    "thm21_admissible_p",
    "thm21_difference_poly",
    "thm22_admissible_q",
    "thm22_coefficients",
    "thm22_conditions",
    "thm22_difference_quadratics",
    "thm3_verdict",
    "thm4_verdict",
    "thm5_verdict",
]

NO_COSMETIC = "no purely cosmetic surgeries"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class QuadraticPoly:
    """``c2 x^2 + c1 x + c0`` with exact rational coefficients."""

    c2: Fraction
    c1: Fraction
    c0: Fraction

    def __post_init__(self):
        for name in ("c2", "c1", "c0"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    def __call__(self, x) -> Fraction:
        x = as_fraction(x)
        return (self.c2 * x + self.c1) * x + self.c0

    @property
    def is_zero(self) -> bool:
        return self.c2 == 0 and self.c1 == 0 and self.c0 == 0

    def __neg__(self) -> "QuadraticPoly":
        return QuadraticPoly(-self.c2, -self.c1, -self.c0)

    def as_dict(self) -> Dict[str, str]:
        return {k: format_fraction(getattr(self, k)) for k in ("c2", "c1", "c0")}

    def __str__(self) -> str:
        return f"({format_fraction(self.c2)}) x^2 + ({format_fraction(self.c1)}) x + ({format_fraction(self.c0)})"


@dataclass(frozen=True)
class CosmeticVerdict:
    """Outcome of one obstruction check.

    ``admissible`` lists the parameter values the invariant cannot exclude;
    ``unconstrained`` is set when the governing expression vanishes
    identically, in which case ``admissible`` is meaningless.
    """

    admissible: Tuple[int, ...] = ()
    unconstrained: bool = False
    witness: object = None
    polys: Tuple[QuadraticPoly, ...] = ()
    statement: str = ""

    @property
    def obstructed(self) -> bool:
        """True when the invariant rules out every candidate."""
        return not self.unconstrained and not self.admissible

    def as_dict(self) -> dict:
        w = self.witness
        if isinstance(w, Mapping):
            w = {k: format_fraction(v) for k, v in w.items()}
        elif w is not None:
            w = format_fraction(w)
        return {
            "statement": self.statement,
            "unconstrained": self.unconstrained,
            "admissible": list(self.admissible),
            "witness": w,
            "polys": [p.as_dict() for p in self.polys],
        }


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _rational_roots(poly: QuadraticPoly) -> List[Fraction]:
    c2, c1, c0 = poly.c2, poly.c1, poly.c0
    if c2 == 0:
        return [] if c1 == 0 else [-c0 / c1]
    root = _rational_sqrt(c1 * c1 - 4 * c2 * c0)
    if root is None:
        return []
    return sorted({(-c1 + root) / (2 * c2), (-c1 - root) / (2 * c2)})


def positive_integer_roots(poly: QuadraticPoly) -> CosmeticVerdict:
    """Positive integer roots of a quadratic, found exactly."""
    if poly.is_zero:
        return CosmeticVerdict(unconstrained=True, polys=(poly,), statement=INCONCLUSIVE)
    vals = tuple(int(r) for r in _rational_roots(poly) if r.denominator == 1 and r > 0)
    return CosmeticVerdict(admissible=vals, polys=(poly,))


def complement_bound(k: int) -> int:
    """Bound on knots inequivalent to ``K`` sharing its exterior, given ``k`` slopes.

    Each non-meridional slope whose surgery returns the ambient manifold
    yields at most one such knot (its dual), so the bound is ``k`` itself.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return k


def _check_split_outer(pres: SurgeryPresentation):
    if pres.n < 2:
        raise PreconditionError("need component 0 plus at least one surgery component")
    if not pres.is_split_component(0):
        raise PreconditionError("component 0 must have zero linking with all others")


def _outer_data(pres: SurgeryPresentation, cd: ConwayData):
    """Shared pieces: ``A_N``, ``prod q_i`` over ``1..n`` and the sum of
    ``det B_{N-J'} a1hat(L_{J' + 0})`` over all ``J' <= N``."""
    n = pres.n - 1
    A = pres.linking_matrix().principal(list(range(1, n + 1)))
    qprod = 1
    for s in pres.slopes[1:]:
        qprod *= s.q
    y = Fraction(0)
    for Jl in [()] + list(nonempty_subsets(n)):
        J = (0,) + tuple(i + 1 for i in Jl)
        a1 = cd.get(J, pres)
        if a1:
            y += bordered_submatrix(A, Jl).det() * a1
    return A, qprod, y


def thm21_difference_poly(pres: SurgeryPresentation, cd: ConwayData) -> QuadraticPoly:
    """``lambda(p/1, ...) - lambda(-p/1, ...)`` as a quadratic in ``p``.

    ``pres`` lists the knot as component 0 (its slope is ignored) followed
    by the surgery link ``K_1 .. K_n``, which must give a rational homology
    sphere.
    """
    _check_split_outer(pres)
    A, qprod, y = _outer_data(pres, cd)
    det_A = A.det()
    if det_A == 0:
        raise ZeroOrderHomology("the surgery on K_1..K_n is not a rational homology sphere")
    sgn = -1 if A.b_minus % 2 else 1
    return QuadraticPoly(
        c2=-Fraction(sgn * qprod, 12) * det_A,
        c1=Fraction(qprod, 4) * abs(det_A),
        c0=2 * sgn * qprod * y - Fraction(sgn * qprod, 6) * det_A,
    )


def thm21_admissible_p(pres: SurgeryPresentation, cd: ConwayData) -> CosmeticVerdict:
    """Positive integers ``p`` for which ``+p`` and ``-p`` surgery are not told apart."""
    poly = thm21_difference_poly(pres, cd)
    v = positive_integer_roots(poly)
    return CosmeticVerdict(
        admissible=v.admissible,
        unconstrained=v.unconstrained,
        witness=poly(1),
        polys=(poly,),
        statement=NO_COSMETIC if v.obstructed else INCONCLUSIVE,
    )


@dataclass(frozen=True)
class Thm22Quadratics:
    """Quadratics in ``q`` for the ``+1/q`` and ``-1/q`` cases."""

    plus: QuadraticPoly
    minus: QuadraticPoly

    @property
    def c2(self) -> Fraction:
        return self.plus.c2

    @property
    def c1(self) -> Fraction:
        return self.plus.c1

    @property
    def c0(self) -> Fraction:
        return self.plus.c0

    def __iter__(self):
        return iter((self.plus.c2, self.plus.c1, self.plus.c0))


def thm22_conditions(pres: SurgeryPresentation) -> Tuple[Fraction, Fraction]:
    """The two nondegeneracy expressions, ``sum_i det A_{N-i} theta_i`` and
    ``(-1)^{b_-} det A_N - |det A_N|``."""
    _check_split_outer(pres)
    n = pres.n - 1
    A = pres.linking_matrix().principal(list(range(1, n + 1)))
    first = Fraction(0)
    for i in range(n):
        p, q = pres.slopes[i + 1]
        first += A.principal([k for k in range(n) if k != i]).det() * Fraction(p * p + q * q + 1, q * q)
    sgn = -1 if A.b_minus % 2 else 1
    return first, sgn * A.det() - abs(A.det())


def thm22_coefficients(pres: SurgeryPresentation, cd: ConwayData) -> Thm22Quadratics:
    """Coefficients ``c2, c1, c0`` in the stated form, plus the mirrored case.

    ``c1`` here is ``-(-1)^{b_-}/24 sum_i det A_{N-i} theta_i``.  That term
    cancels when the difference of invariants is expanded from the surgery
    formula, so these quadratics do not reproduce
    ``lambda(M_+/-) - lambda(M)``; :func:`thm22_difference_quadratics`
    does.
    """
    _check_split_outer(pres)
    A, _, y = _outer_data(pres, cd)
    sgn = -1 if A.b_minus % 2 else 1
    cond1, cond2 = thm22_conditions(pres)
    c2 = sgn * y - cond2 / 24
    c1 = -Fraction(sgn, 24) * cond1
    c0 = -cond2 / 12
    return Thm22Quadratics(QuadraticPoly(c2, c1, c0), QuadraticPoly(-c2, c1, -c0))


def thm22_difference_quadratics(pres: SurgeryPresentation, cd: ConwayData) -> Thm22Quadratics:
    """Quadratics ``Q_+/-`` with ``lambda(M_+/-) - lambda(M) = (prod q_i / q) Q_+/-(q)``.

    ``M_+/-`` is ``(+/-1/q, p_1/q_1, ...)``-surgery on the whole link and ``M``
    is surgery on ``K_1 .. K_n`` alone.  Both have zero linear coefficient.
    """
    _check_split_outer(pres)
    A, _, y = _outer_data(pres, cd)
    sgn = -1 if A.b_minus % 2 else 1
    _, cond2 = thm22_conditions(pres)
    c2 = sgn * y - cond2 / 24
    c0 = -cond2 / 12
    return Thm22Quadratics(QuadraticPoly(c2, 0, c0), QuadraticPoly(-c2, 0, -c0))


def thm22_admissible_q(pres: SurgeryPresentation, cd: ConwayData, printed: bool = False) -> CosmeticVerdict:
    """Positive ``q`` for which ``(+/-1/q, ...)``-surgery might return ``M``.

    Returns an unconstrained verdict when both nondegeneracy expressions
    vanish.  By default the roots come from
    :func:`thm22_difference_quadratics`, so every listed ``q`` really has
    equal invariants; ``printed=True`` uses :func:`thm22_coefficients`.
    """
    cond1, cond2 = thm22_conditions(pres)
    quads = thm22_coefficients(pres, cd) if printed else thm22_difference_quadratics(pres, cd)
    polys = (quads.plus, quads.minus)
    if cond1 == 0 and cond2 == 0:
        return CosmeticVerdict(unconstrained=True, polys=polys, statement=INCONCLUSIVE)
    vp, vm = positive_integer_roots(quads.plus), positive_integer_roots(quads.minus)
    if vp.unconstrained or vm.unconstrained:
        return CosmeticVerdict(unconstrained=True, polys=polys, statement=INCONCLUSIVE)
    vals = tuple(sorted(set(vp.admissible) | set(vm.admissible)))
    return CosmeticVerdict(
        admissible=vals,
        polys=polys,
        statement=NO_COSMETIC if not vals else INCONCLUSIVE,
    )


def thm3_verdict(a1hat_L: int, q0: int, q0p: int, same_sign: bool = True, p0_sign: int = 1) -> CosmeticVerdict:
    """Knot ``K_0`` in the 0-surgery on ``K_1`` (two-component split link).

    Witnesses: the invariant difference between ``(p0/q0, 0)`` and
    ``(+/-p0/q0', 0)`` surgeries, and between ``(p0_sign/q0, 0)`` surgery
    and the bare 0-surgery on ``K_1``.
    """
    if q0 < 1 or q0p < 1:
        raise ValueError("q0 and q0' must be positive")
    if p0_sign not in (1, -1):
        raise ValueError("p0_sign must be +1 or -1")
    pair = p0_sign * (q0 - q0p) * a1hat_L if same_sign else (q0 + q0p) * a1hat_L
    witness = {"pair": Fraction(pair), "vs_zero_surgery": Fraction(p0_sign * q0 * a1hat_L)}
    fires = a1hat_L != 0
    return CosmeticVerdict(
        unconstrained=not fires,
        witness=witness,
        statement=NO_COSMETIC if fires else INCONCLUSIVE,
    )


def thm4_verdict(p1: int, q1: int, a1hat_K0K2: int, a1hat_K0K1K2: int, p0: int = 1, q0: int = 1) -> CosmeticVerdict:
    """Knot ``K_0`` in ``(p1/q1, 0)``-surgery on ``K_1 u K_2`` (split three-component link)."""
    if p1 == 0:
        raise PreconditionError("this check needs p1 != 0")
    form = p1 * a1hat_K0K2 + q1 * a1hat_K0K1K2
    fires = form != 0
    return CosmeticVerdict(
        unconstrained=not fires,
        witness={"form": Fraction(form), "vs_base": Fraction(p0 * q0 * form)},
        statement=NO_COSMETIC if fires else INCONCLUSIVE,
    )


def thm5_verdict(a1hat_K0K1K2: int, p0: int = 1, q0: int = 1) -> CosmeticVerdict:
    """Knot ``K_0`` in ``(0, 0)``-surgery on ``K_1 u K_2`` (split three-component link)."""
    fires = a1hat_K0K1K2 != 0
    return CosmeticVerdict(
        unconstrained=not fires,
        witness={"form": Fraction(a1hat_K0K1K2), "vs_base": Fraction(p0 * q0 * a1hat_K0K1K2)},
        statement=NO_COSMETIC if fires else INCONCLUSIVE,
    )
