"""Rational surgery presentations and the Casson-Walker-Lescop invariant.

The general evaluator :func:`lescop_lambda` implements Lescop's surgery
formula over all nonempty sublinks.  The remaining evaluators are closed
forms for special families (split component, two components, algebraically
split three-component links, one-component Boyer-Lines, Ito's two-component
formula); each is checked against the general engine in the test suite.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from .arith import Slope, as_fraction, dedekind_sum
from .linalg import SymRatMatrix, bordered_submatrix

__all__ = [
    "ComponentSubset",
    "ConwayData",
    "LescopBreakdown",
    "LescopError",
    "MissingConwayData",
    "PreconditionError",
    "SurgeryPresentation",
    "ThetaOverrides",
    "UnsupportedTheta",
    "ZeroOrderHomology",
    "boyer_lines_lambda",
    "build_E",
    "ito_lambda",
    "ito_lambda_walker",
    "lemma21_lambda",
    "lescop_breakdown",
    "lescop_lambda",
    "lescop_two_component_classical",
    "m00_lambda",
    "m0_lambda",
    "nonempty_subsets",
    "subset_key",
    "parse_subset_key",
    "theta",
    "three_component_split_lambda",
    "two_component_lambda",
    "walker_from_lescop",
]

ComponentSubset = Tuple[int, ...]


class LescopError(Exception):
    """Base class for evaluation errors."""


class MissingConwayData(LescopError, KeyError):
    def __init__(self, subset: ComponentSubset):
        self.subset = tuple(subset)
        super().__init__(f"no a1hat value for sublink {subset_key(self.subset)!r}")

    def __str__(self) -> str:
        return self.args[0]


class UnsupportedTheta(LescopError):
    def __init__(self, subset: ComponentSubset):
        self.subset = tuple(subset)
        super().__init__(
            f"theta for sublink {subset_key(self.subset)!r} is not computable "
            "(three or more components, none split from the rest); supply an override"
        )


class PreconditionError(LescopError, ValueError):
    pass


class ZeroOrderHomology(LescopError, ValueError):
    pass


def subset_key(subset: Iterable[int]) -> str:
    return ",".join(str(i) for i in sorted(subset))


def parse_subset_key(key: str) -> ComponentSubset:
    parts = [s.strip() for s in str(key).split(",") if s.strip()]
    try:
        idx = tuple(sorted(int(s) for s in parts))
    except ValueError:
        raise ValueError(f"bad subset key {key!r}") from None
    if not idx or len(set(idx)) != len(idx):
        raise ValueError(f"bad subset key {key!r}")
    return idx


def _norm_subset(subset: Iterable[int]) -> ComponentSubset:
    return tuple(sorted(set(int(i) for i in subset)))


def nonempty_subsets(n: int) -> Iterator[ComponentSubset]:
    """Nonempty subsets of ``range(n)`` by increasing size, lexicographic within."""
    for k in range(1, n + 1):
        yield from combinations(range(n), k)


@dataclass(frozen=True)
class SurgeryPresentation:
    """Components ``K_0 .. K_{n-1}`` with linking numbers and slopes ``p_i/q_i``."""

    linking: Tuple[Tuple[int, ...], ...]
    slopes: Tuple[Slope, ...]

    def __post_init__(self):
        lk = tuple(tuple(int(x) for x in row) for row in self.linking)
        slopes = tuple(s if isinstance(s, Slope) else Slope.make(*s) for s in self.slopes)
        n = len(slopes)
        if n < 1:
            raise ValueError("a surgery presentation needs at least one component")
        if len(lk) != n or any(len(row) != n for row in lk):
            raise ValueError(f"linking matrix must be {n}x{n}")
        for i in range(n):
            if lk[i][i] != 0:
                raise ValueError(f"linking matrix diagonal entry ({i}, {i}) must be 0")
            for j in range(i + 1, n):
                if lk[i][j] != lk[j][i]:
                    raise ValueError(f"linking matrix is not symmetric at ({i}, {j})")
        for s in slopes:
            Slope.make(s.p, s.q)
        object.__setattr__(self, "linking", lk)
        object.__setattr__(self, "slopes", slopes)

    @classmethod
    def make(cls, slopes: Sequence, linking: Optional[Sequence[Sequence[int]]] = None):
        """Build from ``(p, q)`` pairs (or ints) and an optional linking matrix."""
        sl = []
        for s in slopes:
            if isinstance(s, int):
                sl.append(Slope.make(s, 1))
            elif isinstance(s, Fraction):
                sl.append(Slope.make(s.numerator, s.denominator))
            else:
                sl.append(Slope.make(*s))
        n = len(sl)
        if linking is None:
            linking = [[0] * n for _ in range(n)]
        return cls(tuple(tuple(r) for r in linking), tuple(sl))

    @property
    def n(self) -> int:
        return len(self.slopes)

    def lk(self, i: int, j: int) -> int:
        return self.linking[i][j]

    def linking_matrix(self) -> SymRatMatrix:
        n = self.n
        return SymRatMatrix(
            [[self.slopes[i].value if i == j else self.linking[i][j] for j in range(n)] for i in range(n)]
        )

    def q_product(self) -> int:
        out = 1
        for s in self.slopes:
            out *= s.q
        return out

    def is_algebraically_split(self) -> bool:
        return all(self.linking[i][j] == 0 for i in range(self.n) for j in range(self.n))

    def is_split_component(self, i: int) -> bool:
        return all(self.linking[i][k] == 0 for k in range(self.n) if k != i)

    def sub(self, indices: Sequence[int]) -> "SurgeryPresentation":
        """Sub-presentation on ``indices`` (renumbered ``0..len-1`` in that order)."""
        return SurgeryPresentation(
            tuple(tuple(self.linking[i][j] for j in indices) for i in indices),
            tuple(self.slopes[i] for i in indices),
        )

    def with_slope(self, i: int, p: int, q: int = 1) -> "SurgeryPresentation":
        slopes = list(self.slopes)
        slopes[i] = Slope.make(p, q)
        return SurgeryPresentation(self.linking, tuple(slopes))

    def h1_order(self) -> Fraction:
        """``|H_1|`` as ``|prod q_i * det E|``; zero means infinite homology."""
        return abs(self.q_product() * self.linking_matrix().det())


def build_E(pres: SurgeryPresentation) -> SymRatMatrix:
    return pres.linking_matrix()


class ConwayData:
    """The ``a1hat`` value of each sublink, keyed by sorted index tuples.

    For algebraically split presentations, sublinks with four or more
    components default to 0 when absent (Hoste's vanishing result); any
    other missing sublink raises :class:`MissingConwayData`.
    """

    def __init__(self, a1hat: Optional[Mapping] = None, polys: Optional[Mapping] = None):
        self.a1hat: Dict[ComponentSubset, int] = {}
        self.polys: Dict[ComponentSubset, object] = {}
        for k, v in (a1hat or {}).items():
            self[k] = v
        for k, v in (polys or {}).items():
            self.polys[self._key(k)] = v

    @staticmethod
    def _key(k) -> ComponentSubset:
        if isinstance(k, str):
            return parse_subset_key(k)
        if isinstance(k, int):
            return (k,)
        return _norm_subset(k)

    def __setitem__(self, k, v):
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise ValueError(f"a1hat values are integers, got {v} for {k!r}")
            v = v.numerator
        if not isinstance(v, int) or isinstance(v, bool):
            raise TypeError(f"a1hat values are integers, got {v!r} for {k!r}")
        self.a1hat[self._key(k)] = v

    def __contains__(self, k) -> bool:
        return self._key(k) in self.a1hat

    def __eq__(self, other) -> bool:
        return isinstance(other, ConwayData) and self.a1hat == other.a1hat

    def __repr__(self) -> str:
        items = ", ".join(f"{subset_key(k)!r}: {v}" for k, v in sorted(self.a1hat.items()))
        return f"ConwayData({{{items}}})"

    def get(self, subset: Iterable[int], pres: Optional[SurgeryPresentation] = None) -> int:
        key = _norm_subset(subset)
        if key in self.a1hat:
            return self.a1hat[key]
        if pres is not None and len(key) >= 4 and pres.sub(key).is_algebraically_split():
            return 0
        raise MissingConwayData(key)

    def restrict(self, indices: Sequence[int]) -> "ConwayData":
        """Data for the sub-presentation ``pres.sub(indices)`` (renumbered)."""
        pos = {old: new for new, old in enumerate(indices)}
        out = ConwayData()
        for k, v in self.a1hat.items():
            if all(i in pos for i in k):
                out[tuple(pos[i] for i in k)] = v
        return out


class ThetaOverrides(dict):
    """Caller-supplied theta values for sublinks of three or more components."""

    def __init__(self, values: Optional[Mapping] = None):
        super().__init__()
        for k, v in (values or {}).items():
            key = parse_subset_key(k) if isinstance(k, str) else _norm_subset(k)
            if len(key) < 2:
                raise ValueError(f"singleton theta is always computed; got override for {k!r}")
            self[key] = as_fraction(v)


def theta(pres: SurgeryPresentation, subset: Iterable[int], overrides: Optional[Mapping] = None) -> Fraction:
    """Lescop's correction term ``theta(L_J)`` for the computable cases."""
    J = _norm_subset(subset)
    if len(J) == 1:
        p, q = pres.slopes[J[0]]
        return Fraction(p * p + q * q + 1, q * q)
    if len(J) == 2:
        i, j = J
        l = pres.lk(i, j)
        val = 2 * l ** 3 + 2 * l * l * (pres.slopes[i].value + pres.slopes[j].value) - 2 * l
        if overrides and J in overrides and overrides[J] != val:
            raise ValueError(f"theta override for {subset_key(J)!r} contradicts the pair formula")
        return Fraction(val)
    if any(pres.is_split_component(i) for i in J):
        return Fraction(0)
    if overrides and J in overrides:
        return as_fraction(overrides[J])
    raise UnsupportedTheta(J)


@dataclass(frozen=True)
class LescopBreakdown:
    """The three blocks of the surgery formula and the data they use."""

    conway_term: Fraction
    theta_term: Fraction
    dedekind_term: Fraction
    b_minus: int
    signature: int
    det_E: Fraction
    q_product: int

    @property
    def value(self) -> Fraction:
        return self.conway_term + self.theta_term + self.dedekind_term


def lescop_breakdown(
    pres: SurgeryPresentation, cd: ConwayData, overrides: Optional[Mapping] = None
) -> LescopBreakdown:
    E = pres.linking_matrix()
    inert = E.inertia()
    n = pres.n
    N = range(n)
    sgn = -1 if inert.n_neg % 2 else 1
    qprod = pres.q_product()

    conway_sum = Fraction(0)
    theta_sum = Fraction(0)
    for J in nonempty_subsets(n):
        a1 = cd.get(J, pres)
        if a1:
            conway_sum += bordered_submatrix(E, J).det() * a1
        th = theta(pres, J, overrides)
        if th:
            rest = [i for i in N if i not in J]
            theta_sum += E.principal(rest).det() * (-1) ** len(J) * th
    dedekind = sum((dedekind_sum(s.p, s.q) for s in pres.slopes), Fraction(0))
    det_E = E.det()
    return LescopBreakdown(
        conway_term=sgn * qprod * conway_sum,
        theta_term=sgn * qprod * theta_sum / 24,
        dedekind_term=qprod * abs(det_E) * (Fraction(inert.signature, 8) + dedekind / 2),
        b_minus=inert.n_neg,
        signature=inert.signature,
        det_E=det_E,
        q_product=qprod,
    )


def lescop_lambda(
    pres: SurgeryPresentation, cd: ConwayData, overrides: Optional[Mapping] = None
) -> Fraction:
    """Casson-Walker-Lescop invariant of the surgered manifold, exactly.

    Raises
    ------
    MissingConwayData
        if ``cd`` lacks the ``a1hat`` value of a sublink that is needed.
    UnsupportedTheta
        if a sublink of three or more components has no split component
        and no override.
    """
    return lescop_breakdown(pres, cd, overrides).value


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def lemma21_lambda(
    pres: SurgeryPresentation,
    cd: ConwayData,
    overrides: Optional[Mapping] = None,
    printed: bool = False,
) -> Fraction:
    """Split-component regrouping of the surgery formula.

    Component 0 must have zero linking with every other component and a
    nonzero numerator.  The sum is written in terms of ``A_N`` (the linking
    matrix of components ``1..n``) and its bordered minors.

    ``printed=True`` additionally subtracts
    ``(p0/q0) sum_i det A_{N-{i}} theta(L_i)`` inside the theta block, the
    form in which this regrouping is usually stated; that term counts the
    singleton sublinks of ``N`` a second time and the result then no longer equals
    :func:`lescop_lambda`.
    """
    if pres.n < 2:
        raise PreconditionError("need a split component plus at least one more")
    if not pres.is_split_component(0):
        raise PreconditionError("component 0 must have zero linking with all others")
    p0, q0 = pres.slopes[0]
    if p0 == 0:
        raise PreconditionError("component 0 must have a nonzero slope numerator")
    r0 = Fraction(p0, q0)
    E = pres.linking_matrix()
    n = pres.n - 1
    idx = list(range(1, n + 1))
    A = E.principal(idx)
    b = E.inertia()
    sgn = -1 if b.n_neg % 2 else 1
    qall = pres.q_product()
    qrest = qall // q0

    first = Fraction(0)
    th_sum = Fraction(0)
    for Jl in nonempty_subsets(n):
        J = tuple(i + 1 for i in Jl)
        first += r0 * bordered_submatrix(A, Jl).det() * cd.get(J, pres)
        th = theta(pres, J, overrides)
        if th:
            th_sum += r0 * A.principal([i for i in range(n) if i not in Jl]).det() * (-1) ** len(J) * th
    for Jl in [()] + list(nonempty_subsets(n)):
        J = (0,) + tuple(i + 1 for i in Jl)
        first += bordered_submatrix(A, Jl).det() * cd.get(J, pres)

    det_A = A.det()
    th_sum -= det_A * theta(pres, (0,))
    if printed:
        for i in range(n):
            th_sum -= r0 * A.principal([k for k in range(n) if k != i]).det() * theta(pres, (i + 1,))

    dedekind = sum((dedekind_sum(s.p, s.q) for s in pres.slopes), Fraction(0))
    return (
        sgn * qall * first
        + sgn * qall * th_sum / 24
        + qrest * abs(det_A) * abs(p0) * (Fraction(b.signature, 8) + dedekind / 2)
    )


def boyer_lines_lambda(a2: int, slope) -> Fraction:
    """``q a_2(K) - (p/2) s(q, p)`` for ``p/q``-surgery on a knot.

    The closed form holds for ``p > 0``; negative ``p`` goes through the
    mirror, ``lambda(K, -p/q) = -lambda(K*, p/q)`` with ``a_2(K*) = a_2(K)``.
    """
    p, q = slope if isinstance(slope, Slope) else Slope.make(*slope)
    if p == 0:
        raise PreconditionError("Boyer-Lines formula needs p != 0")
    ap = abs(p)
    val = q * a2 - Fraction(ap, 2) * dedekind_sum(q, ap)
    return val if p > 0 else -val


def _two_component_signs(det_E: Fraction, tr_E: Fraction) -> Tuple[int, int]:
    """``(b_-, sigma)`` of a 2x2 symmetric matrix from its determinant and trace."""
    if det_E > 0:
        return (0, 2) if tr_E > 0 else (2, -2)
    if det_E < 0:
        return 1, 0
    if tr_E > 0:
        return 0, 1
    if tr_E < 0:
        return 1, -1
    return 0, 0


def two_component_lambda(pres: SurgeryPresentation, cd: ConwayData) -> Fraction:
    """Closed two-component formula (any linking number)."""
    if pres.n != 2:
        raise PreconditionError("two_component_lambda needs exactly two components")
    (p0, q0), (p1, q1) = pres.slopes
    r0, r1 = Fraction(p0, q0), Fraction(p1, q1)
    l = pres.lk(0, 1)
    det_E = r0 * r1 - l * l
    b_minus, sigma = _two_component_signs(det_E, r0 + r1)
    sgn = -1 if b_minus % 2 else 1
    a_0, a_1, a_01 = cd.get((0,)), cd.get((1,)), cd.get((0, 1))
    th0 = Fraction(p0 * p0 + q0 * q0 + 1, q0 * q0)
    th1 = Fraction(p1 * p1 + q1 * q1 + 1, q1 * q1)
    th01 = 2 * l ** 3 + 2 * l * l * (r0 + r1) - 2 * l
    inner = q0 * q1 * ((r1 + l) * a_0 + (r0 + l) * a_1 + a_01)
    inner -= Fraction(q0 * q1, 24) * (r1 * th0 + r0 * th1 - th01)
    return sgn * inner + abs(p0 * p1 - l * l * q0 * q1) * (
        Fraction(sigma, 8) + dedekind_sum(p0, q0) / 2 + dedekind_sum(p1, q1) / 2
    )


def _require_split3(pres: SurgeryPresentation):
    if pres.n != 3:
        raise PreconditionError("need exactly three components")
    if not pres.is_algebraically_split():
        raise PreconditionError("the three-component link must be algebraically split")


def three_component_split_lambda(pres: SurgeryPresentation, cd: ConwayData) -> Fraction:
    _require_split3(pres)
    (p0, q0), (p1, q1), (p2, q2) = pres.slopes
    a = lambda *J: cd.get(J)
    n_neg = sum(1 for p in (p0, p1, p2) if p < 0)
    sigma = sum(_sign(p) for p in (p0, p1, p2))
    sgn = -1 if n_neg % 2 else 1
    conway = (
        q0 * p1 * p2 * a(0) + p0 * q1 * p2 * a(1) + p0 * p1 * q2 * a(2)
        + q0 * q1 * p2 * a(0, 1) + q0 * p1 * q2 * a(0, 2) + p0 * q1 * q2 * a(1, 2)
        + q0 * q1 * q2 * a(0, 1, 2)
    )
    th = (
        -Fraction(p1 * p2, q0) * (p0 * p0 + q0 * q0 + 1)
        - Fraction(p0 * p2, q1) * (p1 * p1 + q1 * q1 + 1)
        - Fraction(p0 * p1, q2) * (p2 * p2 + q2 * q2 + 1)
    )
    ded = dedekind_sum(p0, q0) + dedekind_sum(p1, q1) + dedekind_sum(p2, q2)
    return sgn * conway + sgn * th / 24 + abs(p0 * p1 * p2) * (Fraction(sigma, 8) + ded / 2)


def m0_lambda(pres: SurgeryPresentation, cd: ConwayData) -> Fraction:
    """Split three-component link with slope ``0/1`` on component 2."""
    _require_split3(pres)
    (p0, q0), (p1, q1), (p2, q2) = pres.slopes
    if (p2, q2) != (0, 1):
        raise PreconditionError("m0_lambda needs slope 0/1 on component 2")
    a = lambda *J: cd.get(J)
    sgn = -1 if sum(1 for p in (p0, p1) if p < 0) % 2 else 1
    return sgn * (
        p0 * p1 * a(2) + q0 * p1 * a(0, 2) + p0 * q1 * a(1, 2) + q0 * q1 * a(0, 1, 2)
        - Fraction(p0 * p1, 12)
    )


def m00_lambda(pres: SurgeryPresentation, cd: ConwayData) -> Fraction:
    """Split three-component link with slopes ``0/1`` on components 1 and 2."""
    _require_split3(pres)
    (p0, q0), s1, s2 = pres.slopes
    if tuple(s1) != (0, 1) or tuple(s2) != (0, 1):
        raise PreconditionError("m00_lambda needs slopes 0/1 on components 1 and 2")
    sgn = -1 if p0 < 0 else 1
    return sgn * (p0 * cd.get((1, 2)) + q0 * cd.get((0, 1, 2)))


def walker_from_lescop(pres: SurgeryPresentation, lam) -> Fraction:
    """Casson-Walker ``lambda_w = 2 lambda / |H_1|``."""
    h = pres.h1_order()
    if h == 0:
        raise ZeroOrderHomology("H_1 is infinite (det E = 0); lambda_w is undefined")
    return 2 * as_fraction(lam) / h


def _ito_rhs(pres: SurgeryPresentation, a2_1: int, a2_2: int, a3: int) -> Tuple[Fraction, Fraction]:
    (p1, q1), (p2, q2) = pres.slopes
    l = pres.lk(0, 1)
    r1, r2 = Fraction(p1, q1), Fraction(p2, q2)
    d = r1 * r2 - l * l
    rhs = (
        a2_1 * r2 - Fraction(p2, 24 * q2) - Fraction(p2, 24 * q2 * q1 * q1) + Fraction(p2 * l * l, 24 * q2)
        + a2_2 * r1 - Fraction(p1, 24 * q1) - Fraction(p1, 24 * q1 * q2 * q2) + Fraction(p1 * l * l, 24 * q1)
        - a3 + (a2_1 + a2_2) * l + Fraction(l ** 3 - l, 12)
        + d * (dedekind_sum(p1, q1) / 2 - Fraction(p1, 24 * q1) + dedekind_sum(p2, q2) / 2 - Fraction(p2, 24 * q2))
    )
    return d, rhs


def ito_lambda_walker(pres: SurgeryPresentation, a2_1: int, a2_2: int, a3L: int) -> Fraction:
    """Ito's two-component formula, solved for the Casson-Walker invariant.

    Uses the classical coefficients: ``a_2`` of each component and ``a_3``
    of the link.
    """
    if pres.n != 2:
        raise PreconditionError("Ito's formula is for two-component presentations")
    d, rhs = _ito_rhs(pres, a2_1, a2_2, a3L)
    if d == 0:
        raise ZeroOrderHomology("not a rational homology sphere (det E = 0)")
    sigma = pres.linking_matrix().signature
    return 2 * (rhs / d + Fraction(sigma, 8))


def ito_lambda(pres: SurgeryPresentation, a2_1: int, a2_2: int, a3L: int) -> Fraction:
    """``(-1)^{b_-} q_1 q_2 (p_1 p_2/(q_1 q_2) - l^2) lambda_w / 2`` with Ito's ``lambda_w``.

    Expanded form, without dividing by the determinant.
    """
    if pres.n != 2:
        raise PreconditionError("Ito's formula is for two-component presentations")
    d, rhs = _ito_rhs(pres, a2_1, a2_2, a3L)
    E = pres.linking_matrix()
    sgn = -1 if E.b_minus % 2 else 1
    q1q2 = pres.q_product()
    return sgn * q1q2 * (rhs + d * Fraction(E.signature, 8))


def lescop_two_component_classical(pres: SurgeryPresentation, a2_1: int, a2_2: int, a3L: int) -> Fraction:
    """Lescop's formula for two components rewritten with ``a_2(K_i)`` and ``a_3(L)``."""
    if pres.n != 2:
        raise PreconditionError("need exactly two components")
    (p1, q1), (p2, q2) = pres.slopes
    r1, r2 = Fraction(p1, q1), Fraction(p2, q2)
    l = pres.lk(0, 1)
    E = pres.linking_matrix()
    sgn = -1 if E.b_minus % 2 else 1
    inner = (
        r2 * (a2_1 - Fraction(p1 * p1 + q1 * q1 + 1, 24 * q1 * q1))
        + r1 * (a2_2 - Fraction(p2 * p2 + q2 * q2 + 1, 24 * q2 * q2))
        + l * (a2_1 + a2_2) - a3L + Fraction(l * l, 12) * (r1 + r2) + Fraction(l * (l * l - 1), 12)
    )
    return sgn * q1 * q2 * inner + abs(p1 * p2 - q1 * q2 * l * l) * (
        Fraction(E.signature, 8) + dedekind_sum(p1, q1) / 2 + dedekind_sum(p2, q2) / 2
    )
