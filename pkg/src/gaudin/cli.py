"""Command-line interface: ``gaudin <command> [flags]``.

Exit codes: 0 success, 1 domain error (for example a length that is not
admissible), 2 usage error.  Rationals are written as "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product
from typing import Sequence

import mpmath

from . import __version__
from .bae import BAEInstance, CriticalTuple, casimir_eigenvalue, gaudin_eigenvalue, genericity, is_critical_wronskian
from .closedform import LengthLabel, NotAdmissible, admissible_lengths, decompose, lvector, solve_closed_form
from .deform import DeformConfig, enumerate_chains, generic_completeness_report
from .diffop import ExcludedCase, UnsupportedType, build_operator, exponent_profile, monomial_tuple, kernel_degree_bound
from .polyalg import Poly
from .repr import completeness_check
from .reproduction import rebuild_from_trivial
from .rootsys import LieDatum, RootSystemError, is_dominant, weyl_dim

SCHEMA = "gaudin/1"

COMMANDS = ("solve", "verify", "decompose", "chains", "spectrum", "diffop", "deform", "sweep")


class UsageError(Exception):
    pass


# -- value formatting ------------------------------------------------------------------------

def q(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, mpmath.mpc) and abs(x.imag) <= mpmath.mpf("1e-30") * max(1, abs(x.real)):
        x = x.real
    if isinstance(x, (mpmath.mpf, mpmath.mpc)):
        return mpmath.nstr(x, 20)
    return repr(x) if hasattr(x, "tower") else str(x)


def weight_json(w) -> list:
    return [q(c) for c in w]


def poly_json(p: Poly) -> dict:
    return {"degree": p.degree, "coefficients": p.to_strings(), "polynomial": str(p)}


# -- argument parsing ----------------------------------------------------------------------

def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _fraction_list(text: str) -> tuple:
    if not text.strip():
        return ()
    return tuple(_fraction(s) for s in text.split(","))


def _label(text: str) -> LengthLabel:
    try:
        return LengthLabel.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--precision", type=int, default=128, help="bits for numeric work")

    alg = argparse.ArgumentParser(add_help=False)
    alg.add_argument("--family", required=True, type=str.upper, choices=("B", "C", "D"))
    alg.add_argument("--rank", required=True, type=int)
    alg.add_argument("--lambda", dest="lam", required=True, type=_fraction_list,
                     help="comma-separated fundamental-weight coordinates")

    p = argparse.ArgumentParser(prog="gaudin", description="Bethe ansatz for the Gaudin model of types B, C, D.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common, alg], help="closed-form polynomial tuples")
    s.add_argument("--length", type=_label, help="length label, e.g. 4 or 3bar (default: all admissible)")

    s = sub.add_parser("verify", parents=[common, alg], help="exact criticality and eigenvalue checks")
    s.add_argument("--length", type=_label)
    s.add_argument("--path", action="store_true", help="also rebuild the tuple by reproduction")

    sub.add_parser("decompose", parents=[common, alg], help="summands of V_lambda (x) V_omega1")

    s = sub.add_parser("chains", parents=[common, alg], help="admissible chains of length N")
    s.add_argument("--n-points", type=int, required=True)

    sub.add_parser("spectrum", parents=[common, alg], help="Bethe vectors and eigenvalues at z = (0, 1)")

    s = sub.add_parser("diffop", parents=[common, alg], help="scalar differential operator of a tuple")
    s.add_argument("--length", type=_label, required=True)

    s = sub.add_parser("deform", parents=[common, alg], help="generic-z completeness by eps-deformation")
    s.add_argument("--n-points", type=int, required=True)
    s.add_argument("--z", type=_fraction_list, help="rescaled points zt_1..zt_N (default 1..N)")
    s.add_argument("--eps", type=_fraction, default=Fraction(1, 1000))

    s = sub.add_parser("sweep", parents=[common], help="grid verification from a JSON config")
    s.add_argument("config", help="JSON config file")
    s.add_argument("--jobs", type=int, default=1)
    return p


def _datum(args) -> LieDatum:
    d = LieDatum(args.family, args.rank)
    if len(args.lam) != d.rank:
        raise UsageError(f"--lambda needs {d.rank} entries, got {len(args.lam)}")
    if not is_dominant(args.lam):
        raise UsageError("--lambda must be dominant integral")
    return d


def _labels(d: LieDatum, lam, label) -> list:
    if label is None:
        return admissible_lengths(d, lam)
    if label.bar and d.family != "D":
        raise UsageError("the bar label exists only for type D")
    return [label]


# -- commands --------------------------------------------------------------------------------

def cmd_solve(args) -> dict:
    d = _datum(args)
    out = []
    for lb in _labels(d, args.lam, args.length):
        y = solve_closed_form(d, args.lam, lb)
        out.append({"label": lb.to_json(), "lvector": list(lvector(d, lb)),
                    "y": [poly_json(p) for p in y]})
    return {"family": d.family, "rank": d.rank, "lambda": weight_json(args.lam), "solutions": out}


def cmd_verify(args) -> dict:
    d = _datum(args)
    rows = []
    for lb in _labels(d, args.lam, args.length):
        y = solve_closed_form(d, args.lam, lb)
        inst = BAEInstance.two_point(d, args.lam, lvector(d, lb))
        gen = genericity(inst, y)
        crit = is_critical_wronskian(inst, y, check_generic=False)
        mu = inst.final_weight
        e = gaudin_eigenvalue(inst, y, 1)
        c = casimir_eigenvalue(d, args.lam, mu)
        row = {"label": lb.to_json(), "mu": weight_json(mu), "generic": gen.ok, "critical": crit.critical,
               "reason": crit.reason, "eigenvalue": q(e), "casimir_value": q(c), "eigen_agree": e == c}
        if args.path:
            row["path_agree"] = tuple(rebuild_from_trivial(d, args.lam, lb)) == tuple(y)
        row["ok"] = gen.ok and crit.critical and e == c and row.get("path_agree", True)
        rows.append(row)
    return {"family": d.family, "rank": d.rank, "lambda": weight_json(args.lam), "checks": rows,
            "ok": all(r["ok"] for r in rows)}


def cmd_decompose(args) -> dict:
    d = _datum(args)
    summands = [{"mu": weight_json(mu), "label": lb.to_json(), "dim": weyl_dim(d, mu)}
                for mu, lb in decompose(d, args.lam)]
    return {"family": d.family, "rank": d.rank, "lambda": weight_json(args.lam),
            "dim_lambda": weyl_dim(d, args.lam), "summands": summands}


def cmd_chains(args) -> dict:
    d = _datum(args)
    chains = enumerate_chains(d, args.lam, args.n_points)
    return {"family": d.family, "rank": d.rank, "lambda": weight_json(args.lam), "n_points": args.n_points,
            "count": len(chains), "chains": [c.to_json() for c in chains]}


def cmd_spectrum(args) -> dict:
    d = _datum(args)
    rep = completeness_check(d, args.lam, precision=args.precision)
    vectors = [{"label": str(r.label), "mu": weight_json(r.weight), "nonzero": r.nonzero, "singular": r.singular,
                "eigenvector": r.eigen, "eigenvalue": q(r.eigenvalue), "mode": r.mode} for r in rep.reports]
    return {"family": d.family, "rank": d.rank, "lambda": weight_json(args.lam), "points": ["0", "1"],
            "singular_dim": rep.sing_dim, "rank_of_bethe_vectors": rep.rank, "vectors": vectors,
            "degenerate_pairs": [list(p) for p in rep.degenerate_pairs], "distinct": rep.distinct, "ok": rep.ok}


def cmd_diffop(args) -> dict:
    d = _datum(args)
    lb = _labels(d, args.lam, args.length)[0]
    y = solve_closed_form(d, args.lam, lb)
    op = build_operator(d, args.lam, list(y))
    out = {"family": d.family, "rank": d.rank, "lambda": weight_json(args.lam), "label": lb.to_json(),
           "operator": op.to_json()}
    try:
        prof = exponent_profile(d, args.lam, lb)
    except ExcludedCase as exc:
        out["identity"] = {"checked": False, "reason": str(exc)}
        return out
    mono = build_operator(d, args.lam, monomial_tuple(prof))
    kern = op.polynomial_kernel(kernel_degree_bound(d, args.lam, lb))
    out["identity"] = {"checked": True, "exponents": weight_json(prof), "holds": op == mono}
    out["polynomial_kernel_dim"] = len(kern)
    return out


def cmd_deform(args) -> dict:
    d = _datum(args)
    if args.n_points < 1:
        raise UsageError("--n-points must be positive")
    cfg = DeformConfig(z_tilde=args.z or None, precision=args.precision)
    rep = generic_completeness_report(d, args.lam, args.n_points, cfg, at_eps=args.eps)
    return {"family": d.family, "rank": d.rank, "lambda": weight_json(args.lam), "n_points": args.n_points,
            "z_tilde": [q(Fraction(v)) for v in cfg.validate(args.n_points)], "eps": q(rep.eps),
            "chain_count": rep.chain_count, "singular_dim": rep.sing_dim, "gram_rank": rep.gram_rank,
            "singular": rep.singular_ok, "eigenvectors": rep.eigen_ok, "min_gap": q(rep.min_gap),
            "max_scaled_error": q(max((e for row in rep.scaled_errors for e in row), default=0)),
            "spectra": [[q(e) for e in row] for row in rep.spectra], "ok": rep.ok()}


# -- sweep -------------------------------------------------------------------------------------

def corrupt(y: CriticalTuple) -> CriticalTuple:
    """Negative control: shift the constant term of the first nonconstant polynomial."""
    polys = list(y)
    for i, p in enumerate(polys):
        if p.degree > 0:
            c = list(p.coeffs)
            c[0] += Fraction(1, 1000)
            polys[i] = Poly(c)
            break
    return CriticalTuple(polys, y.label)


def sweep_cell(cell: tuple) -> dict:
    family, rank, lam, label, checks, broken = cell
    d = LieDatum(family, rank)
    lb = LengthLabel.parse(label)
    failures = []
    y = solve_closed_form(d, lam, lb)
    if broken:
        y = corrupt(y)
    inst = BAEInstance.two_point(d, lam, lvector(d, lb))
    if "critical" in checks:
        gen = genericity(inst, y)
        if not gen.ok:
            failures.append("genericity G1-G3")
        crit = is_critical_wronskian(inst, y, check_generic=False)
        if not crit.critical:
            failures.append(f"Wronskian criticality in direction {crit.failed_direction}")
    if "path" in checks and tuple(rebuild_from_trivial(d, lam, lb)) != tuple(y):
        failures.append("reproduction path agreement")
    if "eigen" in checks:
        try:
            e = gaudin_eigenvalue(inst, y, 1)
        except ZeroDivisionError:
            e = None
        if e != casimir_eigenvalue(d, lam, inst.final_weight):
            failures.append("eigenvalue equals Casimir difference")
    if "diffop" in checks and family in ("B", "C") and rank <= 3 and not (family == "B" and lb.value == rank):
        rhs = build_operator(d, lam, monomial_tuple(exponent_profile(d, lam, lb)))
        if build_operator(d, lam, list(y)) != rhs:
            failures.append("operator factorization identity")
    return {"family": family, "rank": rank, "lambda": weight_json(lam), "label": str(lb), "failures": failures}


def load_sweep_config(path: str) -> dict:
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    if not isinstance(cfg, dict):
        raise UsageError("config must be a JSON object")
    known = {"grids", "checks", "corrupt"}
    if set(cfg) - known:
        raise UsageError(f"unknown config keys: {sorted(set(cfg) - known)}")
    return cfg


def sweep_cells(cfg: dict) -> list:
    checks = tuple(cfg.get("checks", ("critical", "path", "eigen", "diffop")))
    bad = set(checks) - {"critical", "path", "eigen", "diffop"}
    if bad:
        raise UsageError(f"unknown checks: {sorted(bad)}")
    broken = bool(cfg.get("corrupt", False))
    cells = []
    for g in cfg.get("grids", []):
        try:
            family, ranks, top = g["family"].upper(), g["ranks"], int(g["lambda_max"])
        except (KeyError, TypeError, ValueError, AttributeError):
            raise UsageError(f"grid entries need family, ranks, lambda_max: {g!r}") from None
        for r in ranks:
            d = LieDatum(family, r)
            for lam in product(range(top + 1), repeat=d.rank):
                lam = tuple(Fraction(c) for c in lam)
                for lb in admissible_lengths(d, lam):
                    cells.append((family, d.rank, lam, str(lb), checks, broken))
    return cells


def cmd_sweep(args) -> dict:
    cfg = load_sweep_config(args.config)
    cells = sweep_cells(cfg)
    if not cells:
        print("warning: sweep grid is empty; nothing checked", file=sys.stderr)
    if args.jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            results = list(ex.map(sweep_cell, cells, chunksize=8))
    else:
        results = [sweep_cell(c) for c in cells]
    failed = [r for r in results if r["failures"]]
    return {"cells": len(results), "failed": len(failed), "failures": failed, "ok": not failed}


HANDLERS = {"solve": cmd_solve, "verify": cmd_verify, "decompose": cmd_decompose, "chains": cmd_chains,
            "spectrum": cmd_spectrum, "diffop": cmd_diffop, "deform": cmd_deform, "sweep": cmd_sweep}


# -- tables ------------------------------------------------------------------------------------

def _cell(v) -> str:
    if isinstance(v, dict) and set(v) == {"length", "bar"}:
        return f"{v['length']}bar" if v["bar"] else str(v["length"])
    if isinstance(v, list):
        return "(" + ", ".join(_cell(x) for x in v) + ")"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_cell(x)}" for k, x in v.items()) + "}"
    return str(v)


def render_table(doc: dict) -> str:
    lines = []
    rows = None
    for key, val in doc.items():
        if isinstance(val, list) and val and all(isinstance(x, dict) for x in val):
            rows = (key, val)
        else:
            lines.append(f"{key}: {_cell(val)}")
    if rows:
        key, val = rows
        cols = list(dict.fromkeys(k for r in val for k in r))
        body = [[_cell(r.get(c, "")) for c in cols] for r in val]
        width = [max(len(c), *(len(b[i]) for b in body)) for i, c in enumerate(cols)]
        lines.append(f"{key}:")
        lines.append("  ".join(c.ljust(w) for c, w in zip(cols, width)).rstrip())
        for b in body:
            lines.append("  ".join(x.ljust(w) for x, w in zip(b, width)).rstrip())
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        doc = HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"gaudin {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except RootSystemError as exc:
        print(f"gaudin {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except NotAdmissible as exc:
        print(f"gaudin {args.command}: not admissible: {exc}", file=sys.stderr)
        return 1
    except (ExcludedCase, UnsupportedType, ArithmeticError, ValueError) as exc:
        print(f"gaudin {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    doc = {"schema": SCHEMA, "command": args.command, **doc}
    if args.format == "json":
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = render_table(doc)
    _emit(text, args.out)
    return 0 if doc.get("ok", True) else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
