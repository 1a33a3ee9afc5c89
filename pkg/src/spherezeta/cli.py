"""Command-line front end.

Subcommands map one-to-one onto the library: spectrum tables, zeta values
(series / closed / hurwitz forms), kernel evaluation, heat traces, the
Mellin consistency check, zeta-pair domination, majorization verdicts,
matrix Kato checks, and raw special functions.

Records are emitted as JSON (one object per line) or CSV; every numeric
record carries its certified error field, floats are printed with 17
significant digits so they round-trip exactly, and output is byte-stable
for a fixed (argv, seed).  Exit codes: 0 on success, 2 when a checked
inequality fails, 1 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import kato, kernels, majorize, spectrum, specfun, zeta
from .truncation import AccuracyError, TruncationError, TruncationPolicy


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage problems; this tool reserves 2
    # for violated inequalities, so route usage failures through code 1.
    def error(self, message):
        raise UsageError(message)


def _fmt(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.17g}"
    return json.dumps(v)


def _emit(records: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for rec in records:
            body = ", ".join(f"{json.dumps(k)}: {_fmt(v)}" for k, v in rec.items())
            out.write("{" + body + "}\n")
        return
    if fmt == "csv":
        if not records:
            return
        keys = list(records[0].keys())
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(keys)
        for rec in records:
            writer.writerow(
                ["" if rec.get(k) is None else _fmt(rec.get(k)).strip('"')
                 for k in keys]
            )
        return
    raise UsageError(f"unknown format {fmt!r}")


def _parse_grid(text: str) -> list[float]:
    try:
        a, b, step = (float(p) for p in text.split(":"))
    except Exception as exc:
        raise UsageError(f"bad grid {text!r}, expected a:b:step") from exc
    if step <= 0 or b < a:
        raise UsageError("grid needs a <= b and step > 0")
    vals, x = [], a
    while x <= b + 1e-9 * step:
        vals.append(x)
        x += step
    return vals


def _parse_csv_floats(text: str, name: str) -> list[float]:
    try:
        return [float(p) for p in text.split(",") if p.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"bad {name}: expected comma-separated reals") from exc


def _load_config(path: str) -> dict:
    known = {
        "tol": float, "max_k": int, "split_point": float,
        "nodes_small": int, "nodes_large": int, "t_cutoff": float,
        "format": str,
    }
    cfg = {}
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{lineno}: expected key=value")
                key, _, val = line.partition("=")
                key, val = key.strip(), val.strip()
                if key not in known:
                    raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
                cfg[key] = known[key](val)
    except OSError as exc:
        raise UsageError(f"cannot read config: {exc}") from exc
    except ValueError as exc:
        raise UsageError(f"bad value in config: {exc}") from exc
    return cfg


def _parse_graph(text: str) -> kato.SymmetricOperator:
    kind, _, arg = text.partition(":")
    if kind == "cycle":
        return kato.cycle_laplacian(int(arg))
    if kind == "complete":
        return kato.complete_laplacian(int(arg))
    if kind == "file":
        return _load_matrix(arg)
    raise UsageError(f"unknown graph spec {text!r}; use cycle:m, complete:m or file:PATH")


def _load_matrix(path: str) -> kato.SymmetricOperator:
    try:
        with open(path) as fh:
            tokens = fh.read().split()
    except OSError as exc:
        raise UsageError(f"cannot read matrix file: {exc}") from exc
    if not tokens:
        raise ValueError("matrix file is empty")
    dim = int(tokens[0])
    vals = [float(t) for t in tokens[1:]]
    if len(vals) != dim * dim:
        raise ValueError(
            f"matrix file promises {dim}x{dim} entries, found {len(vals)}"
        )
    return kato.symmetric_operator(np.array(vals).reshape(dim, dim))


def _global_flags() -> argparse.ArgumentParser:
    # shared by the main parser and every subparser so they may appear on
    # either side of the subcommand; SUPPRESS keeps a subparser from
    # clobbering a value parsed at the top level
    g = argparse.ArgumentParser(add_help=False)
    g.add_argument("--format", choices=("json", "csv"),
                   default=argparse.SUPPRESS)
    g.add_argument("--tol", type=float, default=argparse.SUPPRESS,
                   help="accuracy target / verdict tolerance")
    g.add_argument("--max-k", type=int, default=argparse.SUPPRESS,
                   dest="max_k", help="series term budget")
    g.add_argument("--config", default=argparse.SUPPRESS,
                   help="key=value defaults file")
    g.add_argument("--out", default=argparse.SUPPRESS,
                   help="write records to a file")
    return g


def build_parser() -> _Parser:
    flags = _global_flags()

    class _SubParser(_Parser):
        def __init__(self, **kw):
            kw.setdefault("parents", [flags])
            super().__init__(**kw)

    p = _Parser(prog="spherezeta", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter,
                parents=[flags])
    sub = p.add_subparsers(dest="command", required=True,
                           parser_class=_SubParser)

    q = sub.add_parser("spectrum", help="eigenvalue/multiplicity table")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--kmax", type=int, required=True)

    q = sub.add_parser("zeta", help="shifted sphere zeta Z(s)")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--s", type=float)
    q.add_argument("--s-grid", dest="s_grid")
    q.add_argument("--form", choices=("series", "closed", "hurwitz"),
                   default="series",
                   help="series: direct summation; closed: Riemann-zeta "
                        "reduction (n<=4); hurwitz: multiplicity-free "
                        "shifted sum at c=(n-1)/2")

    q = sub.add_parser("kernel", help="zonal heat or zeta kernel")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--kind", choices=("heat", "zeta"), required=True)
    q.add_argument("--s", type=float)
    q.add_argument("--t", type=float)
    q.add_argument("--cos-gamma", dest="cos_gamma", type=float, required=True)

    q = sub.add_parser("heat-trace", help="heat trace on S^n")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--t", type=float)
    q.add_argument("--t-grid", dest="t_grid")

    q = sub.add_parser("mellin-check",
                       help="zeta kernel via Mellin transform vs direct sum")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--s", type=float, required=True)
    q.add_argument("--cos-gamma", dest="cos_gamma", type=float, required=True)
    q.add_argument("--quad-nodes", dest="quad_nodes", type=int, default=None)

    q = sub.add_parser("dominate",
                       help="shifted vs unshifted zeta partial-sum domination")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--s", type=float, required=True)
    q.add_argument("--kmax", type=int, default=200)

    q = sub.add_parser("majorize", help="majorization verdict for two vectors")
    q.add_argument("--x", required=True)
    q.add_argument("--y", required=True)
    q.add_argument("--weak", action="store_true")

    q = sub.add_parser("kato", help="matrix semigroup inequality checks")
    q.add_argument("check", choices=("pointwise", "pairing", "positivity",
                                     "trace", "duhamel", "commute"))
    q.add_argument("--graph", required=True,
                   help="cycle:m | complete:m | file:PATH")
    q.add_argument("--trials", type=int, default=100)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--t", type=float, default=1.0)
    q.add_argument("--steps", type=int, default=128)

    q = sub.add_parser("specfun", help="raw special function values")
    q.add_argument("fn", choices=("zeta", "hurwitz", "gegenbauer"))
    q.add_argument("--s", type=float)
    q.add_argument("--a", type=float)
    q.add_argument("--k", type=int)
    q.add_argument("--n", type=int)
    q.add_argument("--t", type=float)
    return p


def _policy(args, default_tol=1e-10, default_max_k=200_000) -> TruncationPolicy:
    return TruncationPolicy(
        max_k=args.max_k if args.max_k is not None else default_max_k,
        tol=args.tol if args.tol is not None else default_tol,
    )


def _cmd_spectrum(args):
    rows = spectrum.spectrum_slice(args.n, args.kmax)
    recs = [
        {"command": "spectrum", "n": args.n, "k": e.k, "lambda": e.lam,
         "mu": e.mu, "d": e.d, "tail_bound": 0.0}
        for e in rows
    ]
    return recs, True


def _cmd_zeta(args):
    if (args.s is None) == (args.s_grid is None):
        raise UsageError("zeta needs exactly one of --s or --s-grid")
    svals = [args.s] if args.s is not None else _parse_grid(args.s_grid)
    pol = _policy(args)
    recs = []
    for s in svals:
        if args.form == "series":
            r = zeta.regularized_zeta(s, args.n, pol)
            value, bound, used = r.value, r.tail_bound, r.terms_used
        elif args.form == "closed":
            value, bound, used = zeta._closed_form_terms(s, args.n)
        else:
            c = (args.n - 1) / 2.0
            if c <= 0.0:
                raise ValueError("hurwitz form needs n >= 2 (positive shift)")
            r = zeta.hurwitz_style_Z(s, c, pol)
            value, bound, used = r.value, r.tail_bound, r.terms_used
        recs.append({"command": "zeta", "form": args.form, "n": args.n,
                     "s": s, "value": value, "tail_bound": bound,
                     "terms_used": used})
    return recs, True


def _cmd_kernel(args):
    pol = _policy(args, default_tol=1e-8)
    q = kernels.KernelQuery(n=args.n, cos_gamma=args.cos_gamma, policy=pol)
    if args.kind == "heat":
        if args.t is None:
            raise UsageError("heat kernel needs --t")
        r = kernels.heat_kernel(args.t, q)
        key, param = "t", args.t
    else:
        if args.s is None:
            raise UsageError("zeta kernel needs --s")
        r = kernels.zeta_kernel(args.s, q)
        key, param = "s", args.s
    rec = {"command": "kernel", "kind": args.kind, "n": args.n,
           key: param, "cos_gamma": args.cos_gamma, "value": r.value,
           "tail_bound": r.tail_bound, "terms_used": r.terms_used}
    return [rec], True


def _cmd_heat_trace(args):
    if (args.t is None) == (args.t_grid is None):
        raise UsageError("heat-trace needs exactly one of --t or --t-grid")
    tvals = [args.t] if args.t is not None else _parse_grid(args.t_grid)
    pol = _policy(args)
    recs = []
    for t in tvals:
        r = kernels.heat_trace(t, args.n, pol)
        recs.append({"command": "heat-trace", "n": args.n, "t": t,
                     "value": r.value, "tail_bound": r.tail_bound,
                     "terms_used": r.terms_used})
    return recs, True


def _cmd_mellin_check(args, cfg):
    verdict_tol = args.tol if args.tol is not None else 1e-6
    pol = TruncationPolicy(
        max_k=args.max_k if args.max_k is not None else 2_000_000,
        tol=min(1e-7, verdict_tol / 10.0),
    )
    quad_kwargs = {k: cfg[k] for k in
                   ("split_point", "nodes_small", "nodes_large", "t_cutoff")
                   if k in cfg}
    if args.quad_nodes is not None:
        quad_kwargs["nodes_small"] = args.quad_nodes
        quad_kwargs.setdefault("nodes_large", max(16, args.quad_nodes // 2))
    quad = kernels.QuadraturePolicy(**quad_kwargs)
    q = kernels.KernelQuery(n=args.n, cos_gamma=args.cos_gamma, policy=pol)
    mz = kernels.mellin_zeta_kernel(args.s, q, quad)
    dz = kernels.zeta_kernel(args.s, q)
    diff = mz.value - dz.value
    ok = abs(diff) <= verdict_tol
    rec = {"command": "mellin-check", "n": args.n, "s": args.s,
           "cos_gamma": args.cos_gamma, "mellin": mz.value,
           "direct": dz.value, "diff": diff,
           "mellin_bound": mz.tail_bound, "direct_bound": dz.tail_bound,
           "quad_nodes": mz.terms_used, "verdict": ok}
    return [rec], ok


def _cmd_dominate(args):
    pol = _policy(args)
    pair = zeta.compare_zeta_pair(args.s, args.n, args.kmax, pol)
    rec = {"command": "dominate", "n": args.n, "s": args.s,
           "kmax": args.kmax,
           "zeta_laplace": pair.zeta_laplace.value,
           "laplace_bound": pair.zeta_laplace.tail_bound,
           "zeta_shifted": pair.zeta_shifted.value,
           "shifted_bound": pair.zeta_shifted.tail_bound,
           "dominated": pair.dominated,
           "first_violation": pair.first_violation}
    return [rec], pair.dominated


def _cmd_majorize(args):
    x = _parse_csv_floats(args.x, "--x")
    y = _parse_csv_floats(args.y, "--y")
    rep = majorize.weak_majorizes(x, y, tol=args.tol)
    ok = (rep.verdict != "fails") if args.weak else (rep.verdict == "majorizes")
    rec = {"command": "majorize", "weak": bool(args.weak),
           "verdict": rep.verdict, "total_gap": rep.total_gap,
           "first_violation": rep.first_violation, "tol": rep.tol,
           "ok": ok}
    return [rec], ok


def _cmd_kato(args):
    op = _parse_graph(args.graph)
    tol = args.tol if args.tol is not None else 1e-12
    rng = np.random.default_rng(args.seed)
    rec = {"command": "kato", "check": args.check, "graph": args.graph,
           "seed": args.seed, "t": args.t}
    if args.check in ("pointwise", "pairing", "positivity"):
        worst = math.inf
        ok = True
        for _ in range(args.trials):
            psi = kato.random_state(op.dim, rng)
            if args.check == "pointwise":
                rep = kato.kato_pointwise_check(op, psi, tol)
                worst, ok = min(worst, rep.min_slack), ok and rep.ok
            elif args.check == "pairing":
                phi = np.abs(rng.standard_normal(op.dim))
                rep = kato.generator_pairing_check(op, psi, phi, tol)
                worst, ok = min(worst, rep.slack), ok and rep.ok
            else:
                rep = kato.positivity_domination_check(op, args.t, psi, tol)
                worst, ok = min(worst, rep.min_slack), ok and rep.ok
        rec.update(trials=args.trials, min_slack=worst, tol=tol, verdict=ok)
        return [rec], ok
    if args.check == "trace":
        worst_gap, worst_eig, ok = math.inf, math.inf, True
        for _ in range(args.trials):
            pot = kato.potential(rng.random(op.dim))
            rep = kato.trace_domination_check(op, pot, args.t, max(tol, 1e-10))
            worst_gap = min(worst_gap, rep.trace_gap)
            worst_eig = min(worst_eig, rep.eig_min_gap)
            ok = ok and rep.ok
        rec.update(trials=args.trials, min_trace_gap=worst_gap,
                   min_eig_gap=worst_eig, tol=max(tol, 1e-10), verdict=ok)
        return [rec], ok
    if args.check == "duhamel":
        thresh = args.tol if args.tol is not None else 1e-8
        pot = kato.potential(rng.random(op.dim))
        resid = kato.duhamel_residual(op, pot, args.t, args.steps)
        ok = resid <= thresh
        rec.update(steps=args.steps, residual=resid, tol=thresh, verdict=ok)
        return [rec], ok
    thresh = args.tol if args.tol is not None else 1e-10
    resid = kato.commute_residual(op, args.t)
    ok = resid <= thresh
    rec.update(residual=resid, tol=thresh, verdict=ok)
    return [rec], ok


def _cmd_specfun(args):
    pol = _policy(args)
    if args.fn == "zeta":
        if args.s is None:
            raise UsageError("specfun zeta needs --s")
        r = specfun.riemann_zeta(args.s, pol)
        rec = {"command": "specfun", "fn": "zeta", "s": args.s,
               "value": r.value, "tail_bound": r.tail_bound,
               "terms_used": r.terms_used}
    elif args.fn == "hurwitz":
        if args.s is None or args.a is None:
            raise UsageError("specfun hurwitz needs --s and --a")
        r = specfun.hurwitz_zeta(args.s, args.a, pol)
        rec = {"command": "specfun", "fn": "hurwitz", "s": args.s,
               "a": args.a, "value": r.value, "tail_bound": r.tail_bound,
               "terms_used": r.terms_used}
    else:
        if args.k is None or args.n is None or args.t is None:
            raise UsageError("specfun gegenbauer needs --k, --n and --t")
        val = specfun.gegenbauer_ratio(args.k, args.n, args.t)
        rec = {"command": "specfun", "fn": "gegenbauer", "k": args.k,
               "n": args.n, "t": args.t, "value": val, "tail_bound": 0.0}
    return [rec], True


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        for name in ("format", "tol", "max_k", "config", "out"):
            if not hasattr(args, name):
                setattr(args, name, None)
        cfg = _load_config(args.config) if args.config else {}
        if args.tol is None and "tol" in cfg:
            args.tol = cfg["tol"]
        if args.max_k is None and "max_k" in cfg:
            args.max_k = cfg["max_k"]
        fmt = args.format or cfg.get("format", "json")

        if args.command == "spectrum":
            records, ok = _cmd_spectrum(args)
        elif args.command == "zeta":
            records, ok = _cmd_zeta(args)
        elif args.command == "kernel":
            records, ok = _cmd_kernel(args)
        elif args.command == "heat-trace":
            records, ok = _cmd_heat_trace(args)
        elif args.command == "mellin-check":
            records, ok = _cmd_mellin_check(args, cfg)
        elif args.command == "dominate":
            records, ok = _cmd_dominate(args)
        elif args.command == "majorize":
            records, ok = _cmd_majorize(args)
        elif args.command == "kato":
            records, ok = _cmd_kato(args)
        else:
            records, ok = _cmd_specfun(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, TruncationError, AccuracyError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    buf = io.StringIO()
    _emit(records, fmt, buf)
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 2


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
