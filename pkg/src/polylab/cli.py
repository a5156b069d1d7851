"""Command-line driver: ``polylab <verb> ...``.

Every verb writes canonical JSON (or CSV/SVG where stated) and exits 0 on
success.  Failures exit nonzero with ``{"error": ..., "message": ...}`` on
stderr.  ``POLYLAB_SEED`` overrides ``--seed``.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import io
from .arrangement import LINES, POINTS, Arrangement
from .errors import PolylabError
from .matroid import Rank3Matroid, build_Mn, verify_realization
from .scalar import Field

DEFAULT_SEED = 20240229


@dataclass(frozen=True)
class RunConfig:
    seed: int
    verb: str
    out: str
    verbose: bool

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        return cls(_seed(args), args.verb, args.out, args.verbose)


def _seed(args) -> int:
    env = os.environ.get("POLYLAB_SEED")
    return int(env) if env not in (None, "") else int(args.seed)


class CliError(Exception):
    def __init__(self, kind, message, code=2):
        super().__init__(message)
        self.kind = kind
        self.code = code


# -- artifact helpers ---------------------------------------------------------------

def _load_arrangement(data, keys=("arrangement", "realization", "progression", "result")) -> Arrangement:
    if "kind" in data:
        return io.arrangement_from_json(data)
    for key in keys:
        if key in data:
            return io.arrangement_from_json(data[key])
    raise CliError("BadInput", "no arrangement found in the input file")


def _datum_to_json(datum) -> dict:
    out = datum.to_json()
    if datum.ainvs is not None:
        out["ainvs"] = [datum.field.format(a) for a in datum.ainvs]
    if datum.weierstrass is not None:
        out["weierstrass"] = {"a": datum.weierstrass.a, "b": datum.weierstrass.b, "p": datum.weierstrass.p}
    return out


def _datum_from_json(data):
    from .cubic import CubicGroup, PlaneCubic, TorsionDatum, WeierstrassCurve
    curve = PlaneCubic.from_json(data["curve"])
    field = curve.field
    origin = io.point_from_json(data["origin"], field)
    t = io.point_from_json(data["generator"], field)
    w = data.get("weierstrass")
    ainvs = tuple(field.parse(s) for s in data["ainvs"]) if "ainvs" in data else None
    return TorsionDatum(CubicGroup(curve, origin, check=False), t, int(data["n"]),
                        WeierstrassCurve(w["a"], w["b"], w["p"]) if w else None, ainvs)


def _small_params(limit: int = 6):
    seen = set()
    for h in range(1, limit + 1):
        for d in range(1, h + 1):
            for a in (h, -h) if d == h else (h, -h, d):
                for q in (Fraction(a, d), Fraction(d, a) if a else None):
                    if q is not None and q not in seen:
                        seen.add(q)
                        yield q


# -- verbs ---------------------------------------------------------------------------

def cmd_gen(args, rng):
    from . import modular
    from .cubic import cuspidal_progression, find_rational_base_point, tate_curve
    from .errors import Degenerate, NotFound
    n = args.n
    out = {"n": n, "source": args.source}
    if args.source == "fp-curve":
        field = Field.prime(args.p or 101)
        datum = modular.realization_datum(field, n, rng)
        p = modular.random_valid_point(datum, rng)
        arr = modular.gamma_map(datum, p)
        prog = modular.torsion_progression(datum, p).arrangement()
        out.update(curve=_datum_to_json(datum), base_point=io.point_to_json(p), progression=io.arrangement_to_json(prog))
    elif args.source == "tate":
        params = [Fraction(args.param)] if args.param else list(_small_params())
        for par in params:
            try:
                datum = tate_curve(n, par)
                p = find_rational_base_point(datum, 20)
                break
            except (Degenerate, NotFound, ZeroDivisionError):
                continue
        else:
            raise CliError("NotFound", f"no Tate parameter with a small rational base point for n={n}")
        arr = modular.gamma_map(datum, p)
        prog = modular.torsion_progression(datum, p).arrangement()
        out.update(param=str(par), curve=_datum_to_json(datum), base_point=io.point_to_json(p),
                   progression=io.arrangement_to_json(prog))
    elif args.source == "nodal":
        field = Field.prime(args.p or modular.nodal_prime(n))
        t = field.parse(args.param) if args.param else modular.nodal_parameter(n, field, rng)
        arr = modular.realize_from_nodal(n, t, field)
        out.update(param=field.format(t))
    else:
        if args.p not in (None, n):
            raise CliError("BadInput", "cuspidal realizations need the characteristic to equal n")
        field = Field.quadratic(n)
        p0 = field.parse(args.param) if args.param else field.generator()
        prog = cuspidal_progression(field, p0, 1)
        arr = modular.cuspidal_realization(field, p0, 1)
        out.update(param=field.format(field(p0)), progression=io.arrangement_to_json(prog))
    report = verify_realization(arr, build_Mn(n))
    out.update(realization=io.arrangement_to_json(arr), report=report.to_json())
    io.write_json(args.out, out)
    return 0 if report.ok else 1


def cmd_apply(args, rng):
    from .dynamics import operator
    from .hexagon import lambda23
    data = io.read_json(args.input)
    arr = _load_arrangement(data)
    if args.op == "lambda23":
        img = lambda23(arr)
        io.write_json(args.out, {"arrangement": io.arrangement_to_json(img.lines if not img.is_hexagon else img.labeled),
                                 "hexagon": img.is_hexagon})
        return 0
    result = operator(args.op)(arr)
    io.write_json(args.out, {"arrangement": io.arrangement_to_json(result)})
    return 0


def _matroid(name: str, size: int) -> Rank3Matroid:
    if name == "Mn":
        if size % 2:
            raise CliError("BadInput", "M_n needs an even number of members")
        return build_Mn(size // 2)
    if name == "M6hex":
        from .hexagon import hexagon_matroid
        return hexagon_matroid()
    return Rank3Matroid.from_json(io.read_json(name))


def cmd_verify(args, rng):
    arr = _load_arrangement(io.read_json(args.input))
    report = verify_realization(arr, _matroid(args.matroid, len(arr)))
    io.write_json(args.out, report.to_json())
    return 0 if report.ok else 1


def cmd_fitcubic(args, rng):
    from .cubic import fit_cubic
    arr = _load_arrangement(io.read_json(args.input))
    pts = arr.members if arr.kind == POINTS else arr.dual().members
    fit = fit_cubic(pts)
    out = {"rank": fit.rank, "points": len(pts)}
    if fit.unique:
        out["cubic"] = fit.cubic.to_json()
    else:
        out["pencil"] = [c.to_json() for c in fit.pencil]
    io.write_json(args.out, out)
    return 0


def cmd_mulneg2(args, rng):
    from .modular import multiply_by_minus2_via_psi
    data = io.read_json(args.input)
    prog = _load_arrangement(data, ("progression", "arrangement"))
    result = multiply_by_minus2_via_psi(prog)
    out = {"result": io.arrangement_to_json(result), "crosscheck": None}
    if "curve" in data:
        datum = _datum_from_json(data["curve"])
        g = datum.group
        n = len(prog)
        out["crosscheck"] = all(result[(-2 * j) % n] == g.scalar_mul(-2, prog[j]) for j in range(n))
    io.write_json(args.out, out)
    return 0 if out["crosscheck"] in (None, True) else 1


def cmd_orbit(args, rng):
    from .dynamics import operator, orbit, orbit_union_stats
    arr = _load_arrangement(io.read_json(args.seed_arrangement))
    rec = orbit(arr, operator(args.op), args.max, args.mode, args.op)
    out = rec.to_json()
    if rec.period and arr.kind == LINES:
        out["stats"] = orbit_union_stats(rec).to_json()
    io.write_json(args.out, out)
    return 0


def _parse_ks(text: str) -> list:
    ks = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            a, b = part.split("-")
            ks.extend(range(int(a), int(b) + 1))
        elif part:
            ks.append(int(part))
    return ks


def cmd_periods(args, rng):
    from .dynamics import period_table, table_csv, table_rows
    ks = _parse_ks(args.k)
    if any(k >= 60 for k in ks) and not args.include_60:
        raise CliError("OptInRequired", "periods k >= 60 need --include-60")
    if args.include_60 and 60 not in ks:
        ks.append(60)
    if any(k < 3 for k in ks):
        raise CliError("BadInput", "periods are defined for k >= 3")
    table = period_table(ks)
    if args.format == "csv":
        text = table_csv(table)
        if args.out in (None, "-"):
            sys.stdout.write(text)
        else:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
    else:
        io.write_json(args.out, {"rows": table_rows(table), "summary": [row.to_json() for row in table.values()]})
    return 0


def cmd_fibers(args, rng):
    from .modular import geometric_degree_experiment, lambda_degree_experiment
    n = {"lambda0": 5, "lambda23": 6}[args.map]
    field = Field.prime(args.p)
    report = lambda_degree_experiment(n, field, args.samples, rng)
    out = {"map": args.map, "p": args.p, "rational": report.to_json()}
    if args.geometric:
        out["geometric"] = geometric_degree_experiment(n, field, args.geometric, rng).to_json()
    io.write_json(args.out, out)
    return 0


def cmd_pmap(args, rng):
    from . import hexagon, pentagon
    maps = {"lambda0": pentagon.lambda0_formula, "lambda23": hexagon.lambda23_formula,
            "s": hexagon.s_pentagram, "s1p": hexagon.s1p, "s2p": hexagon.s2p}
    field = Field.prime(args.p) if args.p else Field.rationals()
    w = io.point_from_json(args.point.split(":"), field)
    fn = maps[args.map]
    orbit = [io.point_to_json(w, field)]
    for _ in range(args.steps):
        w = fn(w)
        orbit.append(io.point_to_json(w, field))
    io.write_json(args.out, {"map": args.map, "field": field.to_json(), "orbit": orbit})
    return 0


def cmd_render(args, rng):
    from .render import render_svg
    arr = _load_arrangement(io.read_json(args.input))
    if arr.field.is_finite:
        raise CliError("FieldNotOrderable", "field not orderable")
    svg = render_svg(arr)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polylab", description="Exact line arrangements from cubic torsion.")
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized searches")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="verb", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.add_argument("--out", default="-", help="output path (default stdout)")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("gen", cmd_gen, help="generate a realization of M_n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--source", choices=["fp-curve", "tate", "nodal", "cuspidal"], required=True)
    sp.add_argument("--p", type=int)
    sp.add_argument("--param")

    sp = add("apply", cmd_apply, help="apply an operator to an arrangement")
    sp.add_argument("--op", required=True,
                    choices=["lambda", "psi", "lambda0", "lambda_pm", "lambda_plus", "lambda_minus",
                             "lambda23", "pentagram", "labeled_lambda"])
    sp.add_argument("--in", dest="input", required=True)

    sp = add("verify", cmd_verify, help="check an arrangement against a matroid")
    sp.add_argument("--matroid", default="Mn", help="Mn, M6hex or a matroid JSON path")
    sp.add_argument("--in", dest="input", required=True)

    sp = add("fitcubic", cmd_fitcubic, help="cubics through a point set")
    sp.add_argument("--in", dest="input", required=True)

    sp = add("mulneg2", cmd_mulneg2, help="multiply a progression by -2 through incidences")
    sp.add_argument("--in", dest="input", required=True)

    sp = add("orbit", cmd_orbit, help="iterate an operator until it repeats")
    sp.add_argument("--op", required=True)
    sp.add_argument("--seed-arrangement", required=True)
    sp.add_argument("--mode", choices=["set", "labeled", "projective"], default="set")
    sp.add_argument("--max", type=int, default=64)

    sp = add("periods", cmd_periods, help="order of -2 table")
    sp.add_argument("--k", required=True, help="e.g. 3-13,22,28")
    sp.add_argument("--include-60", action="store_true")
    sp.add_argument("--format", choices=["json", "csv"], default="json")

    sp = add("fibers", cmd_fibers, help="fiber-size histograms of the parameter maps")
    sp.add_argument("--map", choices=["lambda0", "lambda23"], required=True)
    sp.add_argument("--p", type=int, default=101)
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--geometric", type=int, default=0, help="also count this many fibers over the closure")

    sp = add("pmap", cmd_pmap, help="iterate a parameter-space map")
    sp.add_argument("--map", choices=["lambda0", "lambda23", "s", "s1p", "s2p"], required=True)
    sp.add_argument("--point", required=True, help="x:y:z")
    sp.add_argument("--steps", type=int, default=1)
    sp.add_argument("--p", type=int)

    sp = add("render", cmd_render, help="SVG picture of a rational arrangement")
    sp.add_argument("--in", dest="input", required=True)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig.from_args(args)
    rng = random.Random(config.seed)
    try:
        return args.fn(args, rng)
    except CliError as exc:
        sys.stderr.write(json.dumps({"error": exc.kind, "message": str(exc)}) + "\n")
        return exc.code
    except (PolylabError, ValueError, KeyError, OSError) as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())


def main_entry() -> None:
    sys.exit(main())
