"""Conway polynomials of oriented links from planar diagram (PD) codes.

PD convention
-------------
A crossing is ``X[a, b, c, d]``: edge labels read counterclockwise,
starting from the incoming under-strand edge ``a``.  The under-strand runs
``a -> c``; the over-strand runs ``d -> b`` for a positive crossing and
``b -> d`` for a negative one.  Orientation is read off the under-strands,
so a component with no under-crossing is oriented by increasing labels.

Worked example: ``X[1,2,2,1]`` is a one-crossing kink.  The under-strand
enters on edge 1 and leaves on edge 2; edge 2 comes back as the
over-strand at slot ``b`` and leaves at ``d`` as edge 1, so the crossing
is negative and the diagram is an unknot.

Skein algorithm
---------------
Diagrams are reduced to signed Gauss codes.  Walking the components in
order from their basepoints, the first crossing met first from below is
switched and smoothed::

    nabla(L_+) - nabla(L_-) = z nabla(L_0)

Switching only ever makes the walk more descending and smoothing removes a
crossing, so the recursion terminates in descending diagrams, which are
unlinks.  Kinks and bigons are cancelled on the way, split diagrams return
0 at once, and results are memoized on a relabelling-invariant key.
"""
import json
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

__all__ = [
    "CrossingBoundExceeded",
    "Diagram",
    "IntPoly",
    "PDError",
    "DEFAULT_MAX_CROSSINGS",
    "a1hat",
    "a_coeff",
    "ahat_coeff",
    "braid_closure",
    "builtin_link",
    "clear_memo",
    "conway",
    "conway_data_from_diagram",
    "format_poly",
    "gauss_conway",
    "hat_conway",
    "linking_number",
    "linking_matrix",
    "mirror",
    "parse_pd",
    "plat_closure",
    "pd_from_tuples",
    "poly_add",
    "poly_sub",
    "poly_shift",
    "reidemeister_one",
    "reidemeister_two",
    "sublink",
    "switch_crossing",
    "smooth_crossing",
]

DEFAULT_MAX_CROSSINGS = 16

IntPoly = Tuple[int, ...]


class PDError(ValueError):
    """Malformed PD input; ``crossing`` is the 0-based index of the offending tuple."""

    def __init__(self, message: str, crossing: Optional[int] = None, label: Optional[int] = None):
        self.crossing = crossing
        self.label = label
        where = f" (crossing {crossing})" if crossing is not None else ""
        super().__init__(message + where)


class CrossingBoundExceeded(ValueError):
    pass


# ---------------------------------------------------------------- polynomials


def _trim(c) -> IntPoly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def poly_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    return poly_add(a, tuple(-x for x in b))


def poly_shift(a: IntPoly, k: int = 1, scale: int = 1) -> IntPoly:
    """``scale * z^k * a``."""
    if not a or scale == 0:
        return ()
    return (0,) * k + tuple(scale * x for x in a)


def a_coeff(p: IntPoly, k: int) -> int:
    """Coefficient of ``z^k``."""
    return p[k] if 0 <= k < len(p) else 0


def ahat_coeff(p: IntPoly, k: int, mu: int) -> int:
    """Lescop's ``a^_k = (-1)^(mu-1) a_{mu+2k-1}`` for a ``mu``-component link."""
    return (-1) ** (mu - 1) * a_coeff(p, mu + 2 * k - 1)


def format_poly(p: IntPoly, var: str = "z") -> str:
    if not p:
        return "0"
    terms = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and abs(c) == 1:
            coef = "-" if c < 0 else ""
        else:
            coef = str(c)
        terms.append(f"{coef}{mono}" if mono else coef)
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


# ------------------------------------------------------------------ diagrams


@dataclass(frozen=True)
class Diagram:
    """An oriented link diagram with resolved crossing signs.

    ``components`` lists, per component, the crossings passed in order as
    ``(crossing index, passes over)``.  ``free_loops`` counts crossingless
    unknotted circles, which PD text cannot express.
    """

    pd: Tuple[Tuple[int, int, int, int], ...]
    signs: Tuple[int, ...]
    components: Tuple[Tuple[Tuple[int, bool], ...], ...]
    component_edges: Tuple[Tuple[int, ...], ...]
    free_loops: int = 0

    @property
    def mu(self) -> int:
        return len(self.components) + self.free_loops

    @property
    def n_crossings(self) -> int:
        return len(self.pd)

    def crossing_components(self, x: int) -> Tuple[int, int]:
        """``(over component, under component)`` of crossing ``x``."""
        over = under = None
        for ci, comp in enumerate(self.components):
            for (y, is_over) in comp:
                if y == x:
                    if is_over:
                        over = ci
                    else:
                        under = ci
        return over, under

    def to_pd_text(self) -> str:
        return "PD[" + ", ".join("X[%d,%d,%d,%d]" % t for t in self.pd) + "]"

    def gauss(self):
        return _Gauss.from_diagram(self)


_TERM = re.compile(r"X\s*\[\s*([^\]]*)\]")


def _parse_pd_tuples(text: str) -> List[Tuple[int, ...]]:
    s = text.strip()
    if s.startswith("["):
        try:
            data = json.loads(s)
        except json.JSONDecodeError as exc:
            raise PDError(f"bad JSON PD code: {exc}") from None
        if not isinstance(data, list):
            raise PDError("JSON PD code must be a list of 4-element lists")
        out = []
        for i, t in enumerate(data):
            if not isinstance(t, list) or len(t) != 4 or not all(isinstance(v, int) for v in t):
                raise PDError(f"entry {t!r} is not a list of 4 integers", crossing=i)
            out.append(tuple(t))
        return out
    m = re.fullmatch(r"PD\s*\[(.*)\]", s, flags=re.S)
    if m:
        s = m.group(1)
    out = []
    pos = 0
    for i, mt in enumerate(_TERM.finditer(s)):
        gap = s[pos:mt.start()]
        if gap.strip(" \t\r\n,"):
            raise PDError(f"unexpected text {gap.strip()!r}", crossing=i)
        pos = mt.end()
        parts = [p.strip() for p in mt.group(1).split(",")]
        if len(parts) != 4:
            raise PDError(f"X[{mt.group(1)}] does not have 4 labels", crossing=i)
        try:
            out.append(tuple(int(p) for p in parts))
        except ValueError:
            bad = next(p for p in parts if not re.fullmatch(r"[+-]?\d+", p))
            raise PDError(f"malformed edge label {bad!r}", crossing=i) from None
    rest = s[pos:]
    if rest.strip(" \t\r\n,"):
        raise PDError(f"unexpected text {rest.strip()!r}", crossing=len(out))
    return out


def parse_pd(text: str) -> Diagram:
    """Parse ``X[a,b,c,d]`` terms (optionally wrapped in ``PD[...]``) or a
    JSON list of 4-lists, and resolve components, orientation and signs."""
    return pd_from_tuples(_parse_pd_tuples(text))


def pd_from_tuples(tuples: Iterable[Sequence[int]], free_loops: int = 0) -> Diagram:
    pd = tuple(tuple(int(v) for v in t) for t in tuples)
    occ: Dict[int, List[Tuple[int, int]]] = {}
    for ci, t in enumerate(pd):
        if len(t) != 4:
            raise PDError(f"crossing {t!r} does not have 4 labels", crossing=ci)
        for s, lab in enumerate(t):
            if lab <= 0:
                raise PDError(f"malformed edge label {lab} (labels are positive)", crossing=ci, label=lab)
            occ.setdefault(lab, []).append((ci, s))
    for lab, where in sorted(occ.items()):
        if len(where) != 2:
            kind = "duplicate" if len(where) > 2 else "missing partner for"
            raise PDError(f"{kind} edge label {lab} (appears {len(where)} times)", crossing=where[0][0], label=lab)

    def other(lab, here):
        a, b = occ[lab]
        return b if a == here else a

    seen = set()
    comps, comp_edges = [], []
    for ci in range(len(pd)):
        for s0 in range(4):
            if (ci, s0) in seen:
                continue
            # walk: enter crossing ci at slot s0, leave at s0+2
            passes, edges = [], []
            c, s = ci, s0
            while (c, s) not in seen:
                seen.add((c, s))
                out = (c, (s + 2) % 4)
                seen.add(out)
                passes.append((c, s))
                lab = pd[c][out[1]]
                edges.append(lab)
                c, s = other(lab, out)
            if (c, s) != (ci, s0):
                raise PDError("edge cycle does not close", crossing=c)
            under = [(c, s) for (c, s) in passes if s in (0, 2)]
            if under:
                fwd = {s == 0 for (_, s) in under}
                if len(fwd) > 1:
                    bad = next(c for (c, s) in under if s == 2)
                    raise PDError("orientation inconsistency: under-strands disagree", crossing=bad)
                forward = fwd.pop()
            else:
                inc = sum(1 for k in range(len(edges)) if edges[(k + 1) % len(edges)] == edges[k] + 1)
                dec = sum(1 for k in range(len(edges)) if edges[(k + 1) % len(edges)] == edges[k] - 1)
                forward = inc >= dec
            if not forward:
                # reverse the walk: entries become exits
                passes = [(c, (s + 2) % 4) for (c, s) in reversed(passes)]
                edges = [pd[c][(s + 2) % 4] for (c, s) in passes]
            comps.append(passes)
            comp_edges.append(edges)

    signs = [0] * len(pd)
    for passes in comps:
        for (c, s) in passes:
            if s == 3:
                signs[c] = 1
            elif s == 1:
                signs[c] = -1
    components = tuple(tuple((c, s in (1, 3)) for (c, s) in passes) for passes in comps)
    return Diagram(pd, tuple(signs), components, tuple(tuple(e) for e in comp_edges), free_loops)


def _switch_tuple(t, sign):
    a, b, c, d = t
    return (d, a, b, c) if sign > 0 else (b, c, d, a)


def mirror(d: Diagram) -> Diagram:
    """Switch every crossing."""
    pd = [_switch_tuple(t, s) for t, s in zip(d.pd, d.signs)]
    return pd_from_tuples(pd, d.free_loops)


def linking_number(d: Diagram, i: int, j: int) -> int:
    """Half the signed count of crossings between components ``i`` and ``j``."""
    if i == j:
        raise ValueError("linking number needs two distinct components")
    total = 0
    for x, sgn in enumerate(d.signs):
        if set(d.crossing_components(x)) == {i, j}:
            total += sgn
    if total % 2:
        raise PDError("odd signed crossing count between two components (non-planar input?)")
    return total // 2


def linking_matrix(d: Diagram) -> List[List[int]]:
    n = len(d.components)
    out = [[0] * n for _ in range(n)]
    for x, sgn in enumerate(d.signs):
        a, b = d.crossing_components(x)
        if a != b:
            out[a][b] += sgn
            out[b][a] += sgn
    for i in range(n):
        for j in range(n):
            out[i][j] //= 2
    return out


def sublink(d: Diagram, keep: Sequence[int]) -> Diagram:
    """Diagram of the components ``keep`` (in that order), others erased."""
    keep = list(keep)
    if len(set(keep)) != len(keep) or any(not 0 <= k < len(d.components) for k in keep):
        raise ValueError(f"bad component selection {keep!r}")
    comp_of = {}
    for ci, comp in enumerate(d.components):
        for (x, over) in comp:
            comp_of[(x, over)] = ci
    parent: Dict[int, int] = {}

    def find(a):
        while parent.get(a, a) != a:
            a = parent[a]
        return a

    kept_x = []
    for x, t in enumerate(d.pd):
        co, cu = comp_of[(x, True)], comp_of[(x, False)]
        ko, ku = co in keep, cu in keep
        if ko and ku:
            kept_x.append(x)
            continue
        a, b, c, dd = t
        if ku:
            parent[find(a)] = find(c)
        if ko:
            parent[find(b)] = find(dd)
    pd = [tuple(find(v) for v in d.pd[x]) for x in kept_x]
    free = sum(1 for k in keep if not any(comp_of[(x, o)] == k for x in kept_x for o in (True, False)))
    sub = pd_from_tuples(pd, free)
    # reorder components to follow ``keep``
    old_to_new = {}
    for ni, comp in enumerate(sub.components):
        x_new, over = comp[0]
        x_old = kept_x[x_new]
        old_to_new[comp_of[(x_old, over)]] = ni
    order = [old_to_new[k] for k in keep if k in old_to_new]
    return Diagram(
        sub.pd,
        sub.signs,
        tuple(sub.components[i] for i in order),
        tuple(sub.component_edges[i] for i in order),
        sub.free_loops,
    )


# ---------------------------------------------------------------- Gauss codes


@dataclass(frozen=True)
class _Gauss:
    comps: Tuple[Tuple[Tuple[int, bool], ...], ...]
    signs: Tuple[Tuple[int, int], ...]  # sorted (crossing, sign)
    free: int = 0

    @classmethod
    def from_diagram(cls, d: Diagram) -> "_Gauss":
        return cls(d.components, tuple(enumerate(d.signs)), d.free_loops)

    @property
    def mu(self) -> int:
        return len(self.comps) + self.free

    @property
    def n_crossings(self) -> int:
        return len(self.signs)


def _make(comps, signs: Dict[int, int], free: int) -> _Gauss:
    comps = [tuple(c) for c in comps]
    free += sum(1 for c in comps if not c)
    comps = tuple(c for c in comps if c)
    return _Gauss(comps, tuple(sorted(signs.items())), free)


def switch_crossing(g: _Gauss, x: int) -> _Gauss:
    comps = [tuple((y, (not o) if y == x else o) for (y, o) in c) for c in g.comps]
    signs = dict(g.signs)
    signs[x] = -signs[x]
    return _make(comps, signs, g.free)


def smooth_crossing(g: _Gauss, x: int) -> _Gauss:
    """Oriented smoothing at ``x``: splits one component or merges two."""
    where = [(ci, k) for ci, c in enumerate(g.comps) for k, (y, _) in enumerate(c) if y == x]
    (c1, i), (c2, j) = where
    comps = [c for ci, c in enumerate(g.comps) if ci not in (c1, c2)]
    if c1 == c2:
        c = g.comps[c1]
        comps.append(c[i + 1:j])
        comps.append(c[j + 1:] + c[:i])
    else:
        a = g.comps[c1][i + 1:] + g.comps[c1][:i]
        b = g.comps[c2][j + 1:] + g.comps[c2][:j]
        comps.append(a + b)
    signs = dict(g.signs)
    del signs[x]
    return _make(comps, signs, g.free)


def _drop(g: _Gauss, xs) -> _Gauss:
    xs = set(xs)
    comps = [tuple(v for v in c if v[0] not in xs) for c in g.comps]
    signs = {k: v for k, v in g.signs if k not in xs}
    return _make(comps, signs, g.free)


def reidemeister_one(g: _Gauss) -> Optional[_Gauss]:
    """Remove one kink (a crossing met twice in a row), if any."""
    for c in g.comps:
        n = len(c)
        for k in range(n):
            if c[k][0] == c[(k + 1) % n][0]:
                return _drop(g, [c[k][0]])
    return None


def reidemeister_two(g: _Gauss) -> Optional[_Gauss]:
    """Remove one bigon: crossings ``x, y`` adjacent on two strands, one strand over at both."""
    signs = dict(g.signs)
    pairs = {}
    for ci, c in enumerate(g.comps):
        n = len(c)
        if n < 2:
            continue
        for k in range(n):
            (x, ox), (y, oy) = c[k], c[(k + 1) % n]
            if x != y and ox == oy:
                pairs.setdefault(frozenset((x, y)), []).append((ci, k, ox))
    for key, hits in pairs.items():
        overs = {h[2] for h in hits}
        if overs == {True, False}:
            x, y = tuple(key)
            if signs[x] == -signs[y]:
                return _drop(g, key)
    return None


def _simplify(g: _Gauss) -> _Gauss:
    while True:
        h = reidemeister_one(g)
        if h is None:
            h = reidemeister_two(g)
        if h is None:
            return g
        g = h


def _is_split(g: _Gauss) -> bool:
    if g.free and (g.comps or g.free > 1):
        return True
    n = len(g.comps)
    if n <= 1:
        return False
    owner: Dict[int, List[int]] = {}
    for ci, c in enumerate(g.comps):
        for (x, _) in c:
            owner.setdefault(x, []).append(ci)
    adj = {i: set() for i in range(n)}
    for cs in owner.values():
        a, b = cs
        adj[a].add(b)
        adj[b].add(a)
    stack, seen = [0], {0}
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) < n


def _encode(g: _Gauss, first: int, rot: int):
    signs = dict(g.signs)
    label: Dict[int, int] = {}
    out = []
    remaining = set(range(len(g.comps)))
    ci, start = first, rot
    while True:
        c = g.comps[ci]
        remaining.discard(ci)
        seq = c[start:] + c[:start]
        enc = []
        for (x, o) in seq:
            if x not in label:
                label[x] = len(label)
            enc.append((label[x], o, signs[x]))
        out.append(tuple(enc))
        if not remaining:
            return tuple(out)
        best = None
        for cj in remaining:
            for k, (x, _) in enumerate(g.comps[cj]):
                if x in label and (best is None or label[x] < best[0]):
                    best = (label[x], cj, k)
        if best is None:
            # disconnected pieces: callers only encode non-split diagrams
            cj = min(remaining)
            best = (None, cj, 0)
        _, ci, start = best


def _canonical_key(g: _Gauss):
    best = None
    for ci, c in enumerate(g.comps):
        for r in range(len(c)):
            enc = _encode(g, ci, r)
            if best is None or enc < best:
                best = enc
    return best


def _relabel(g: _Gauss, key) -> _Gauss:
    """Gauss code written in the canonical labelling of ``key``."""
    comps = [tuple((lab, o) for (lab, o, _) in c) for c in key]
    signs = {}
    for c in key:
        for (lab, _, s) in c:
            signs[lab] = s
    return _Gauss(tuple(comps), tuple(sorted(signs.items())), g.free)


def _first_ascending(g: _Gauss) -> Optional[int]:
    seen = set()
    for c in g.comps:
        for (x, o) in c:
            if x not in seen:
                if not o:
                    return x
                seen.add(x)
    return None


_MEMO: Dict[object, IntPoly] = {}


def clear_memo() -> None:
    _MEMO.clear()


def _nabla(g: _Gauss, memo: Optional[dict]) -> IntPoly:
    g = _simplify(g)
    if _is_split(g):
        return ()
    if not g.signs:
        return (1,) if g.mu == 1 else ()
    key = _canonical_key(g)
    if memo is not None:
        hit = memo.get(key)
        if hit is not None:
            return hit
    # pick the crossing in the caller's labelling: basepoints must stay put
    # along the switching chain for the recursion to terminate
    x = _first_ascending(g)
    if x is None:
        # descending: an unlink
        res: IntPoly = (1,) if g.mu == 1 else ()
    else:
        sign = dict(g.signs)[x]
        res = poly_add(_nabla(switch_crossing(g, x), memo),
                       poly_shift(_nabla(smooth_crossing(g, x), memo), 1, sign))
    if memo is not None:
        memo.setdefault(key, res)
    return res


def _expand(g: _Gauss, depth: int):
    """Unfold the top ``depth`` skein levels into ``(coefficient poly, leaf)`` terms."""
    terms = [((1,), g)]
    for _ in range(depth):
        nxt = []
        for coef, h in terms:
            h = _simplify(h)
            x = _first_ascending(h) if (h.signs and not _is_split(h)) else None
            if x is None:
                nxt.append((coef, h))
                continue
            sign = dict(h.signs)[x]
            nxt.append((coef, switch_crossing(h, x)))
            nxt.append((poly_shift(coef, 1, sign), smooth_crossing(h, x)))
        terms = nxt
    return terms


def _leaf(g: _Gauss) -> IntPoly:
    return _nabla(g, _MEMO)


def conway(
    d: Diagram,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    memo: bool = True,
    workers: int = 1,
) -> IntPoly:
    """Conway polynomial, integer coefficients lowest degree first.

    Parameters
    ----------
    max_crossings : int
        Refuse larger diagrams; the recursion is exponential.
    memo : bool
        Share the module-level table of already evaluated diagrams.
    workers : int
        Evaluate the first few skein levels' leaves in that many processes.
        The result does not depend on this value.
    """
    if d.n_crossings > max_crossings:
        raise CrossingBoundExceeded(
            f"{d.n_crossings} crossings exceeds the bound of {max_crossings}; raise max_crossings to proceed"
        )
    g = d.gauss()
    if workers <= 1:
        return _nabla(g, _MEMO if memo else None)
    terms = _expand(g, 4)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        leaves = list(pool.map(_leaf if memo else _leaf_nomemo, [h for _, h in terms]))
    total: IntPoly = ()
    for (coef, _), val in zip(terms, leaves):
        total = poly_add(total, _poly_mul(coef, val))
    return total


def gauss_conway(g: "_Gauss", memo: bool = True) -> IntPoly:
    """Conway polynomial of a Gauss code (as produced by :meth:`Diagram.gauss`,
    :func:`switch_crossing` or :func:`smooth_crossing`)."""
    return _nabla(g, _MEMO if memo else None)


def _leaf_nomemo(g: _Gauss) -> IntPoly:
    return _nabla(g, None)


def _poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def hat_conway(d: Diagram, **kw) -> IntPoly:
    """Lescop's normalization: the Conway polynomial of the mirror image."""
    return conway(mirror(d), **kw)


def a1hat(d: Diagram, **kw) -> int:
    return ahat_coeff(conway(d, **kw), 1, d.mu)


def conway_data_from_diagram(d: Diagram, **kw):
    """``ConwayData`` with ``a1hat`` of every nonempty sublink of ``d``."""
    from .surgery import ConwayData, nonempty_subsets

    cd = ConwayData()
    polys = {}
    for J in nonempty_subsets(d.mu):
        sub = sublink(d, J) if len(J) < len(d.components) or d.free_loops else d
        p = conway(sub, **kw)
        polys[J] = p
        cd[J] = ahat_coeff(p, 1, len(J))
    cd.polys.update(polys)
    return cd


# ------------------------------------------------------------------ builtins


def braid_closure(word: Sequence[int], strands: int) -> Diagram:
    """Closure of a braid word; ``k`` is ``sigma_k`` (strand ``k`` over ``k+1``),
    ``-k`` its inverse.  Both are drawn with strands running upward."""
    next_id = [strands]
    cur = list(range(strands))  # edge id currently at each position
    bottom = list(cur)
    crossings = []
    for g in word:
        k = abs(g) - 1
        if not 0 <= k < strands - 1:
            raise ValueError(f"generator {g} out of range for {strands} strands")
        bl, br = cur[k], cur[k + 1]
        tl, tr = next_id[0], next_id[0] + 1
        next_id[0] += 2
        if g > 0:
            crossings.append((br, tr, tl, bl))
        else:
            crossings.append((bl, br, tr, tl))
        cur[k], cur[k + 1] = tl, tr
    # closure: top edge at each position is the bottom edge at that position
    alias = {}
    free = 0
    for pos in range(strands):
        if cur[pos] == bottom[pos]:
            free += 1
        else:
            alias[cur[pos]] = bottom[pos]
    pd = [tuple(alias.get(e, e) for e in t) for t in crossings]
    return _renumber(pd_from_tuples([tuple(e + 1 for e in t) for t in pd], free))


def _renumber(d: Diagram) -> Diagram:
    """Relabel edges ``1..2n`` consecutively along components."""
    new = {}
    for edges in d.component_edges:
        for e in edges:
            new[e] = len(new) + 1
    return pd_from_tuples([tuple(new[e] for e in t) for t in d.pd], d.free_loops)


_CCW = ("BR", "TR", "TL", "BL")  # slots counterclockwise around a crossing
_OPP = {"BL": "TR", "TR": "BL", "BR": "TL", "TL": "BR"}


def plat_closure(word: Sequence[int]) -> Diagram:
    """Four-strand plat: cups join strands 1-2 and 3-4 below and above the
    braid word (same generator convention as :func:`braid_closure`).

    Plats carry no orientation, so each component is oriented by walking
    it once, and the PD tuples are then read off from the walk.
    """
    count = [0]

    def new():
        count[0] += 1
        return count[0]

    a, b = new(), new()
    cur = [a, a, b, b]
    raw = []
    for g in word:
        k = abs(g) - 1
        if not 0 <= k < 3:
            raise ValueError(f"generator {g} out of range for 4 strands")
        slots = {"BL": cur[k], "BR": cur[k + 1], "TL": new(), "TR": new()}
        raw.append((slots, "BLTR" if g > 0 else "BRTL"))
        cur[k], cur[k + 1] = slots["TL"], slots["TR"]
    alias = {cur[1]: cur[0], cur[3]: cur[2]}
    raw = [({s: alias.get(e, e) for s, e in sl.items()}, over) for sl, over in raw]
    occ: Dict[int, List[Tuple[int, str]]] = {}
    for ci, (sl, _) in enumerate(raw):
        for s, e in sl.items():
            occ.setdefault(e, []).append((ci, s))
    if any(len(v) != 2 for v in occ.values()):
        raise ValueError("plat has a strand with no crossing")
    entry = {}
    seen = set()
    for ci in range(len(raw)):
        for s0 in _CCW:
            c, s = ci, s0
            while (c, s) not in seen:
                out = _OPP[s]
                seen.update(((c, s), (c, out)))
                entry[(c, "BLTR" if s in ("BL", "TR") else "BRTL")] = s
                e = raw[c][0][out]
                p, q = occ[e]
                c, s = q if p == (c, out) else p
    pd = []
    for ci, (sl, over) in enumerate(raw):
        under = "BRTL" if over == "BLTR" else "BLTR"
        i = _CCW.index(entry[(ci, under)])
        pd.append(tuple(sl[_CCW[(i + j) % 4]] for j in range(4)))
    return _renumber(pd_from_tuples(pd))


def _twisted_whitehead(m: int) -> Diagram:
    # two-bridge link with continued fraction [-2, 1 - 2m, -2]
    mid = 1 - 2 * m
    word = [-2, -2] + [1 if mid < 0 else -1] * abs(mid) + [-2, -2]
    return plat_closure(word)


def builtin_link(name: str, *params: int) -> Diagram:
    """Diagrams of the example links.

    ``unknot``, ``unlink(mu)``, ``hopf(+1|-1)``, ``trefoil`` (right-handed),
    ``whitehead``, ``L_m(m)`` and ``borromean``.  ``L_m`` is the two-bridge
    link with continued fraction ``[-2, 1 - 2m, -2]``: two clasps and a
    twist region of ``2m - 1`` crossings between antiparallel strands of
    one component.  ``L_1`` is the Whitehead link, ``L_0`` the unlink, and
    both components stay unknotted for every ``m``.
    """
    key = name.lower().replace("-", "_")
    if key == "unknot":
        return pd_from_tuples([(1, 2, 2, 1)])
    if key == "unlink":
        mu = params[0] if params else 2
        if mu < 1:
            raise ValueError("unlink needs at least one component")
        return pd_from_tuples([(2 * k + 1, 2 * k + 2, 2 * k + 2, 2 * k + 1) for k in range(mu)])
    if key == "hopf":
        s = params[0] if params else 1
        if s not in (1, -1):
            raise ValueError("hopf takes +1 or -1")
        return braid_closure([s, s], 2)
    if key == "trefoil":
        return braid_closure([1, 1, 1], 2)
    if key == "whitehead":
        return _twisted_whitehead(1)
    if key in ("l_m", "lm"):
        if not params:
            raise ValueError("L_m needs the twist parameter m")
        return _twisted_whitehead(params[0])
    if key == "borromean":
        return braid_closure([1, -2, 1, -2, 1, -2], 3)
    raise KeyError(f"unknown builtin link {name!r}")
