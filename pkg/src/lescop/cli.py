"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 missing or unsupported data
(the report names the sublink), 4 a cross-check disagreed.
"""
import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product
from typing import Dict, Optional, Sequence, Tuple

from . import conway as cw
from .arith import Slope, format_fraction, parse_fraction
from .checks import format_report, run_checks
from .cosmetic import (
    complement_bound,
    thm21_admissible_p,
    thm22_admissible_q,
    thm22_coefficients,
    thm22_conditions,
    thm3_verdict,
    thm4_verdict,
    thm5_verdict,
)
from .surgery import (
    ConwayData,
    LescopError,
    MissingConwayData,
    PreconditionError,
    SurgeryPresentation,
    ThetaOverrides,
    UnsupportedTheta,
    ZeroOrderHomology,
    boyer_lines_lambda,
    ito_lambda,
    lemma21_lambda,
    lescop_lambda,
    m00_lambda,
    m0_lambda,
    parse_subset_key,
    subset_key,
    three_component_split_lambda,
    two_component_lambda,
    walker_from_lescop,
)

EXIT_OK, EXIT_INVALID, EXIT_DATA, EXIT_MISMATCH = 0, 2, 3, 4


class InputError(ValueError):
    pass


class Mismatch(Exception):
    pass


# ------------------------------------------------------------------- loading


def _int(v, what):
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError(f"{what} must be an integer, got {v!r}")
    return v


def presentation_from_dict(data: dict) -> Tuple[SurgeryPresentation, ConwayData, ThetaOverrides]:
    """Validate a presentation record and derive ``a1hat`` from any ``"pd"`` entries.

    A PD entry for sublink ``J`` lists the components of ``J`` in increasing
    index order; it supplies ``a1hat`` for ``J`` and for every sublink of
    ``J`` not given explicitly, and its linking numbers must agree with the
    linking matrix.
    """
    if not isinstance(data, dict):
        raise InputError("presentation must be a JSON object")
    try:
        n = _int(data["components"], "components")
        linking = data.get("linking", [[0] * n for _ in range(n)])
        slopes = data["slopes"]
    except KeyError as exc:
        raise InputError(f"missing field {exc.args[0]!r}") from None
    if not isinstance(slopes, list) or len(slopes) != n:
        raise InputError(f"slopes must be a list of {n} entries")
    sl = []
    for i, s in enumerate(slopes):
        if not isinstance(s, dict) or "p" not in s:
            raise InputError(f"slope {i} must be an object with 'p' and 'q'")
        try:
            sl.append(Slope.make(_int(s["p"], f"slope {i} p"), _int(s.get("q", 1), f"slope {i} q")))
        except ValueError as exc:
            raise InputError(f"slope {i}: {exc}") from None
    try:
        pres = SurgeryPresentation(tuple(tuple(_int(x, "linking entry") for x in row) for row in linking), tuple(sl))
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from None

    cd = ConwayData()
    for k, v in (data.get("a1hat") or {}).items():
        try:
            key = parse_subset_key(k)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        if any(i >= n for i in key):
            raise InputError(f"a1hat key {k!r} names a component beyond {n - 1}")
        try:
            cd[key] = v
        except (TypeError, ValueError) as exc:
            raise InputError(str(exc)) from None

    derived: Dict[Tuple[int, ...], int] = {}
    for k, text in (data.get("pd") or {}).items():
        key = parse_subset_key(k)
        try:
            d = cw.parse_pd(text)
        except cw.PDError as exc:
            raise InputError(f"pd {k!r}: {exc}") from None
        if d.mu != len(key):
            raise InputError(f"pd {k!r} has {d.mu} components, expected {len(key)}")
        lm = cw.linking_matrix(d) if not d.free_loops else None
        if lm is not None:
            for a in range(len(key)):
                for b in range(a + 1, len(key)):
                    if lm[a][b] != pres.lk(key[a], key[b]):
                        raise InputError(
                            f"pd {k!r}: linking number of components {key[a]},{key[b]} is {lm[a][b]}, "
                            f"file says {pres.lk(key[a], key[b])}"
                        )
        sub = cw.conway_data_from_diagram(d)
        for J, v in sub.a1hat.items():
            full = tuple(key[i] for i in J)
            if full in derived and derived[full] != v:
                raise InputError(f"pd entries disagree on a1hat of {subset_key(full)!r}")
            derived[full] = v
    for J, v in sorted(derived.items()):
        if J in cd:
            if cd.get(J) != v:
                raise InputError(
                    f"a1hat {subset_key(J)!r} is {cd.get(J)} but the PD diagram gives {v}"
                )
        else:
            cd[J] = v

    try:
        th = ThetaOverrides({k: parse_fraction(v) if isinstance(v, str) else v for k, v in (data.get("theta") or {}).items()})
    except (TypeError, ValueError) as exc:
        raise InputError(f"theta: {exc}") from None
    return pres, cd, th


def load_presentation(path: str):
    try:
        with (sys.stdin if path == "-" else open(path)) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None
    return presentation_from_dict(data)


# -------------------------------------------------------------------- lambda

FORMULAS = ("auto", "general", "lemma21", "two", "three-split", "m0", "m00", "boyer-lines")


def _specializations(pres: SurgeryPresentation, cd: ConwayData, th) -> Dict[str, object]:
    """Closed forms whose hypotheses ``pres`` meets, as zero-argument callables."""
    out = {}
    n = pres.n
    if n == 1 and pres.slopes[0].p != 0:
        out["boyer-lines"] = lambda: boyer_lines_lambda(cd.get((0,)), pres.slopes[0])
    if n >= 2 and pres.is_split_component(0) and pres.slopes[0].p != 0:
        out["lemma21"] = lambda: lemma21_lambda(pres, cd, th)
    if n == 2:
        out["two"] = lambda: two_component_lambda(pres, cd)
        out["ito"] = lambda: ito_lambda(pres, cd.get((0,)), cd.get((1,)), -cd.get((0, 1)))
    if n == 3 and pres.is_algebraically_split():
        out["three-split"] = lambda: three_component_split_lambda(pres, cd)
        if tuple(pres.slopes[2]) == (0, 1):
            out["m0"] = lambda: m0_lambda(pres, cd)
            if tuple(pres.slopes[1]) == (0, 1):
                out["m00"] = lambda: m00_lambda(pres, cd)
    return out


def evaluate_lambda(pres, cd, th, formula: str = "auto") -> Tuple[Fraction, Dict[str, Fraction]]:
    """λ by the chosen evaluator; ``auto`` also returns every applicable cross-check."""
    if formula == "general":
        return lescop_lambda(pres, cd, th), {}
    specs = _specializations(pres, cd, th)
    if formula != "auto":
        if formula not in specs:
            raise PreconditionError(f"formula {formula!r} does not apply to this presentation")
        return specs[formula](), {}
    value = lescop_lambda(pres, cd, th)
    checks = {name: f() for name, f in specs.items()}
    bad = {k: v for k, v in checks.items() if v != value}
    if bad:
        detail = ", ".join(f"{k}={format_fraction(v)}" for k, v in sorted(bad.items()))
        raise Mismatch(f"general engine gives {format_fraction(value)} but {detail}")
    return value, checks


def cmd_lambda(args) -> int:
    pres, cd, th = load_presentation(args.file)
    value, checks = evaluate_lambda(pres, cd, th, args.formula)
    rec = {"lambda": format_fraction(value), "formula": args.formula}
    if checks:
        rec["agreeing"] = sorted(checks)
    if args.walker:
        try:
            rec["lambda_w"] = format_fraction(walker_from_lescop(pres, value))
        except ZeroOrderHomology:
            rec["lambda_w"] = None
    if args.json:
        print(json.dumps(rec, sort_keys=True))
    else:
        print(f"lambda = {rec['lambda']}")
        if args.walker:
            print(f"lambda_w = {rec['lambda_w'] if rec['lambda_w'] is not None else 'undefined (H_1 infinite)'}")
        if checks:
            print("agrees with: " + ", ".join(sorted(checks)))
    return EXIT_OK


# -------------------------------------------------------------------- conway


def _diagram_from_args(args) -> cw.Diagram:
    if args.name:
        try:
            return cw.builtin_link(args.name, *args.param)
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
        except (ValueError, IndexError) as exc:
            raise InputError(f"{args.name}: {exc}") from None
    text = args.pd
    if args.pd_file:
        with open(args.pd_file) as fh:
            text = fh.read()
    if not text:
        raise InputError("give --name, --pd or --pd-file")
    try:
        return cw.parse_pd(text)
    except cw.PDError as exc:
        raise InputError(str(exc)) from None


def cmd_conway(args) -> int:
    d = _diagram_from_args(args)
    try:
        nab = cw.conway(d, max_crossings=args.max_crossings)
        hat = cw.hat_conway(d, max_crossings=args.max_crossings)
    except cw.CrossingBoundExceeded as exc:
        raise InputError(str(exc)) from None
    mu = d.mu
    lks = {}
    for i in range(len(d.components)):
        for j in range(i + 1, len(d.components)):
            lks[f"{i},{j}"] = cw.linking_number(d, i, j)
    ahat = {k: cw.ahat_coeff(nab, k, mu) for k in range((len(nab) - mu + 1) // 2 + 1)} if nab else {}
    rec = {
        "mu": mu,
        "crossings": d.n_crossings,
        "conway": cw.format_poly(nab),
        "conway_coefficients": list(nab),
        "hat_conway": cw.format_poly(hat),
        "a": {str(k): c for k, c in enumerate(nab) if c},
        "ahat": {str(k): v for k, v in ahat.items() if v},
        "a1hat": cw.ahat_coeff(nab, 1, mu),
        "linking": lks,
        "pd": d.to_pd_text(),
    }
    if args.json:
        print(json.dumps(rec, sort_keys=True))
        return EXIT_OK
    print(f"components   {mu}")
    print(f"crossings    {d.n_crossings}")
    print(f"nabla        {rec['conway']}")
    print(f"nabla-hat    {rec['hat_conway']}")
    print("a_k          " + (", ".join(f"a{k}={c}" for k, c in rec["a"].items()) or "all zero"))
    print("ahat_k       " + (", ".join(f"ahat{k}={c}" for k, c in rec["ahat"].items()) or "all zero"))
    print(f"a1hat        {rec['a1hat']}")
    for k, v in lks.items():
        print(f"lk({k})     {v}")
    return EXIT_OK


# ------------------------------------------------------------------ cosmetic


def _parse_grid(spec: Optional[str]) -> Dict[str, range]:
    out = {}
    if not spec:
        return out
    for part in spec.split(","):
        try:
            key, rng = part.split("=")
            lo, hi = rng.split(":")
            out[key.strip()] = range(int(lo), int(hi) + 1)
        except ValueError:
            raise InputError(f"bad grid term {part!r}; use name=lo:hi") from None
    return out


def _cosmetic_row(mode: str, pres, cd, opts: dict) -> dict:
    if mode == "thm21":
        v = thm21_admissible_p(pres, cd)
        row = {"poly": v.polys[0].as_dict()}
    elif mode == "thm22":
        v = thm22_admissible_q(pres, cd)
        printed = thm22_coefficients(pres, cd)
        c1, c2 = thm22_conditions(pres)
        row = {
            "coefficients": {"c2": format_fraction(printed.c2), "c1": format_fraction(printed.c1), "c0": format_fraction(printed.c0)},
            "difference_quadratics": {"plus": v.polys[0].as_dict(), "minus": v.polys[1].as_dict()},
            "conditions": [format_fraction(c1), format_fraction(c2)],
        }
    elif mode == "thm3":
        if pres.n != 2 or not pres.is_split_component(0):
            raise PreconditionError("thm3 needs a two-component link with linking number 0")
        if tuple(pres.slopes[1]) != (0, 1):
            raise PreconditionError("thm3 needs slope 0/1 on component 1")
        p0 = pres.slopes[0].p
        v = thm3_verdict(cd.get((0, 1)), opts.get("q0", pres.slopes[0].q), opts.get("q0p", pres.slopes[0].q + 1),
                         same_sign=not opts.get("opposite", False), p0_sign=-1 if p0 < 0 else 1)
        row = {}
    elif mode in ("thm4", "thm5"):
        if pres.n != 3 or not pres.is_algebraically_split():
            raise PreconditionError(f"{mode} needs an algebraically split three-component link")
        p0, q0 = pres.slopes[0]
        if mode == "thm4":
            if tuple(pres.slopes[2]) != (0, 1):
                raise PreconditionError("thm4 needs slope 0/1 on component 2")
            p1, q1 = opts.get("p1", pres.slopes[1].p), opts.get("q1", pres.slopes[1].q)
            v = thm4_verdict(p1, q1, cd.get((0, 2)), cd.get((0, 1, 2)), p0=p0, q0=q0)
        else:
            if tuple(pres.slopes[1]) != (0, 1) or tuple(pres.slopes[2]) != (0, 1):
                raise PreconditionError("thm5 needs slopes 0/1 on components 1 and 2")
            v = thm5_verdict(cd.get((0, 1, 2)), p0=opts.get("p0", p0), q0=opts.get("q0", q0))
        row = {}
    else:
        raise InputError(f"unknown mode {mode!r}")
    row.update(v.as_dict())
    row["complement_bound"] = None if v.unconstrained else complement_bound(len(v.admissible))
    return row


def _grid_job(job):
    mode, pres, cd, opts = job
    try:
        if "p1" in opts and mode in ("thm21", "thm22"):
            pres = pres.with_slope(1, opts["p1"], opts.get("q1", pres.slopes[1].q))
        row = _cosmetic_row(mode, pres, cd, opts)
    except (LescopError, ValueError) as exc:
        row = {"error": str(exc)}
    row["params"] = dict(sorted(opts.items()))
    return row


def cmd_cosmetic(args) -> int:
    pres, cd, _ = load_presentation(args.file)
    opts = {k: getattr(args, k) for k in ("q0", "q0p", "p0", "p1", "q1") if getattr(args, k) is not None}
    if args.opposite:
        opts["opposite"] = True
    grid = _parse_grid(args.grid)
    if not grid:
        row = _cosmetic_row(args.mode, pres, cd, opts)
        rows = [dict(row, params=dict(sorted(opts.items())))]
    else:
        keys = sorted(grid)
        jobs = []
        for vals in product(*(grid[k] for k in keys)):
            o = dict(opts)
            o.update(zip(keys, vals))
            jobs.append((args.mode, pres, cd, o))
        if args.workers > 1:
            with ProcessPoolExecutor(max_workers=args.workers) as pool:
                rows = list(pool.map(_grid_job, jobs))
        else:
            rows = [_grid_job(j) for j in jobs]
        rows.sort(key=lambda r: tuple(r["params"][k] for k in keys))
    if args.json:
        for r in rows:
            print(json.dumps(r, sort_keys=True))
        return EXIT_OK
    for r in rows:
        params = " ".join(f"{k}={v}" for k, v in r["params"].items() if k != "opposite")
        head = f"[{params}] " if params else ""
        if "error" in r:
            print(f"{head}error: {r['error']}")
            continue
        if "poly" in r:
            print(f"{head}difference polynomial: c2={r['poly']['c2']} c1={r['poly']['c1']} c0={r['poly']['c0']}")
        if "coefficients" in r:
            c = r["coefficients"]
            print(f"{head}coefficients: c2={c['c2']} c1={c['c1']} c0={c['c0']}")
            for name, q in r["difference_quadratics"].items():
                print(f"{head}difference quadratic ({name}): c2={q['c2']} c1={q['c1']} c0={q['c0']}")
        if r["witness"] is not None:
            w = r["witness"]
            print(f"{head}witness: " + (", ".join(f"{k}={v}" for k, v in w.items()) if isinstance(w, dict) else str(w)))
        if r["unconstrained"]:
            print(f"{head}admissible: unconstrained")
        elif "poly" in r or "coefficients" in r:
            print(f"{head}admissible: {r['admissible'] or 'none'}")
        print(f"{head}verdict: {r['statement']}")
    return EXIT_OK


# -------------------------------------------------------------------- verify


def cmd_verify(args) -> int:
    results = run_checks(seed=args.seed, cases=args.cases, workers=args.workers)
    sys.stdout.write(format_report(results, args.seed, args.cases))
    return EXIT_OK if all(r.ok for r in results) else EXIT_MISMATCH


# ---------------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lescop", description="Casson-Walker-Lescop invariants of rational surgeries.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lambda", help="evaluate lambda of a presentation file")
    p.add_argument("file", help="presentation JSON ('-' for stdin)")
    p.add_argument("--formula", choices=FORMULAS, default="auto")
    p.add_argument("--walker", action="store_true", help="also print the Casson-Walker normalization")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("conway", help="Conway polynomial of a builtin link or PD code")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--name", help="unknot, unlink, hopf, trefoil, whitehead, L_m, borromean")
    src.add_argument("--pd", help="PD text, e.g. 'X[1,2,2,1]'")
    src.add_argument("--pd-file")
    p.add_argument("--param", type=int, action="append", default=[], help="builtin parameter (repeatable)")
    p.add_argument("--max-crossings", type=int, default=cw.DEFAULT_MAX_CROSSINGS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_conway)

    for name in ("cosmetic", "cosmetic-scan"):
        p = sub.add_parser(name, help="cosmetic surgery obstructions" + (" (grid scan)" if name != "cosmetic" else ""))
        p.add_argument("file", help="presentation JSON; component 0 is the knot")
        p.add_argument("--mode", choices=("thm21", "thm22", "thm3", "thm4", "thm5"), required=True)
        p.add_argument("--q0", type=int)
        p.add_argument("--q0p", type=int, help="the other q0' (thm3)")
        p.add_argument("--p0", type=int)
        p.add_argument("--p1", type=int)
        p.add_argument("--q1", type=int)
        p.add_argument("--opposite", action="store_true", help="thm3: compare p0/q0 with -p0/q0'")
        p.add_argument("--grid", required=name == "cosmetic-scan", help="ranges, e.g. 'q0=1:5,q0p=1:5'")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=cmd_cosmetic)

    p = sub.add_parser("verify", help="run the randomized cross-check battery")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MissingConwayData, UnsupportedTheta) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except Mismatch as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (InputError, PreconditionError, ZeroOrderHomology, cw.PDError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
