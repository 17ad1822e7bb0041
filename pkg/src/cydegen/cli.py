"""Command-line entry point: ``cydegen <subcommand> ...``.

Exit codes: 0 success, 1 verification or regression failure, 2 input
error, 3 resource cap reached.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import invariants, ncd, periodfit, serialize
from .config import DEFAULTS
from .milnor import CapExceeded, SmoothGerm, milnor_number
from .polyparse import PolySyntaxError, parse_poly

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(args, text_lines, payload):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def cmd_milnor(args) -> int:
    variables = [v.strip() for v in args.variables.split(",") if v.strip()]
    try:
        f = parse_poly(args.poly, variables)
    except PolySyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        result = milnor_number(f, args.cap)
    except SmoothGerm:
        _emit(args, ["mu = 0 (smooth germ)"], {"kind": "MilnorResult", "mu": 0, "smooth": True})
        return EXIT_OK
    except CapExceeded as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    lines = [
        f"f = {f}",
        f"mu = {result.mu}",
        f"stabilization degree = {result.stabilization_degree}",
        "basis: " + ", ".join(result.basis_strings()),
    ]
    _emit(args, lines, serialize.to_dict(result))
    return EXIT_OK


def cmd_lct(args) -> int:
    try:
        data = json.loads(Path(args.model).read_text(encoding="utf-8"))
        model = ncd.NCDModel.from_dict(data)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"cannot read model: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ncd.InvalidModel as exc:
        problems = exc.violations
    else:
        problems = ncd.validate(model)
    if problems:
        for p in problems:
            print(f"invalid model: {p}", file=sys.stderr)
        if args.json:
            print(json.dumps({"kind": "violations", "violations": problems}, indent=2))
        return EXIT_INPUT
    report = ncd.theorem_a_report(model)
    lines = [
        f"log-canonical threshold c = {report.lct}",
        f"alpha = {report.alpha}",
        f"beta (degeneracy index) = {report.beta}",
        f"monodromy eigenvalue = exp(-2 pi i * {report.rotation_number})",
        f"weight = {report.weight}",
    ]
    _emit(args, lines, serialize.to_dict(report))
    return EXIT_OK


def cmd_euler(args) -> int:
    if args.N < 1 or args.d < 1:
        print("need N >= 1 and d >= 1", file=sys.stderr)
        return EXIT_INPUT
    chi = invariants.euler_hypersurface(args.N, args.d)
    _emit(args, [f"chi = {chi}"], {"kind": "euler", "N": args.N, "d": args.d, "chi": chi})
    return EXIT_OK


def cmd_yoshikawa(args) -> int:
    n = args.n
    if n < 1:
        print("n must be positive", file=sys.stderr)
        return EXIT_INPUT
    routes = {}
    if args.milnor is not None:
        mus = [int(x) for x in args.milnor.split(",") if x.strip()]
        routes["isolated"] = invariants.yoshikawa_degree_isolated(n, mus)
        delta = invariants.delta_chi_from_milnor(n, mus)
        routes["hypersurface_family"] = invariants.yoshikawa_degree_hypersurface_family(n, delta)
    else:
        delta = args.delta_chi
    if delta is not None:
        routes["hypersurface_family"] = invariants.yoshikawa_degree_hypersurface_family(n, delta)
        if n == 2:
            routes["kulikov_surface"] = invariants.yoshikawa_degree_kulikov_surface(delta)
    if not routes:
        print("give --milnor or --delta-chi", file=sys.stderr)
        return EXIT_INPUT
    agree = len(set(routes.values())) == 1
    lines = [f"delta chi = {delta}"] + [f"deg Y ({k}) = {v}" for k, v in routes.items()]
    lines.append("routes agree" if agree else "ROUTES DISAGREE")
    payload = {
        "kind": "yoshikawa",
        "n": n,
        "delta_chi": delta,
        "routes": {k: serialize.fraction_to_str(v) for k, v in routes.items()},
        "agree": agree,
    }
    _emit(args, lines, payload)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_alpha_bcov(args) -> int:
    if not 0 <= args.alpha < 1:
        print(f"alpha must lie in [0, 1), got {args.alpha}", file=sys.stderr)
        return EXIT_INPUT
    try:
        report = invariants.alpha_bcov(
            args.n, args.chi_general, args.chi_special, args.alpha, args.b_correction, args.beta
        )
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    lines = [
        f"delta chi = {report.delta_chi}",
        f"alpha_BCOV = {report.alpha_bcov}",
        f"log-log coefficient = {report.loglog_coefficient}",
        report.asymptotic_line(),
    ] + [f"warning: {note}" for note in report.notes]
    _emit(args, lines, serialize.to_dict(report))
    return EXIT_OK


def cmd_verify(args) -> int:
    cap = DEFAULTS["verify_hard_cap"]
    if not 1 <= args.n_max <= cap:
        print(f"--n-max must lie in 1..{cap} (cap exceeded: {args.n_max})", file=sys.stderr)
        return EXIT_INPUT
    checks = [
        ("koszul", invariants.verify_koszul),
        ("derivative_classes", invariants.verify_derivative_classes),
        ("omega", invariants.verify_omega),
    ]
    rows = []
    failure = None
    for n in range(1, args.n_max + 1):
        for name, fn in checks:
            t0 = time.perf_counter()
            ok = fn(n)
            rows.append({"identity": name, "n": n, "ok": ok, "seconds": time.perf_counter() - t0})
            if not ok and failure is None:
                failure = (name, n)
    lines = [f"{r['identity']:<20} n={r['n']}  {'ok' if r['ok'] else 'FAIL'}  {r['seconds']:.3f}s" for r in rows]
    if failure:
        lines.append(f"first failure: {failure[0]} at n={failure[1]}")
    _emit(args, lines, {"kind": "verify", "results": rows, "all_ok": failure is None})
    return EXIT_OK if failure is None else EXIT_FAIL


def cmd_fit(args) -> int:
    if args.source == "legendre":
        if not 0 < args.s_min < args.s_max < 0.5:
            print("need 0 < s_min < s_max < 1/2", file=sys.stderr)
            return EXIT_INPUT
        if args.count < 5:
            print("need at least 5 samples", file=sys.stderr)
            return EXIT_INPUT
        samples = periodfit.legendre_samples(args.s_min, args.s_max, args.count)
        if args.samples_out:
            Path(args.samples_out).write_text(periodfit.samples_to_csv(samples), encoding="utf-8")
        pairs = [(p.s, p.neglog) for p in samples]
    else:
        if not args.path:
            print("fit csv needs a path", file=sys.stderr)
            return EXIT_INPUT
        try:
            pairs = periodfit.samples_from_csv(Path(args.path).read_text(encoding="utf-8"))
        except (OSError, ValueError, KeyError) as exc:
            print(f"cannot read samples: {exc}", file=sys.stderr)
            return EXIT_INPUT
    try:
        fit = periodfit.fit_asymptotics(pairs, args.correction_terms)
    except (periodfit.DegenerateDesign, ValueError) as exc:
        print(f"fit failed: {exc}", file=sys.stderr)
        return EXIT_INPUT
    lines = [
        f"alpha_hat = {fit.alpha_hat:.6f}",
        f"beta_hat = {fit.beta_hat:.6f}",
        f"const_hat = {fit.const_hat:.6f}",
        f"residual = {fit.residual_norm:.3e}, condition = {fit.condition_estimate:.3e}",
    ]
    payload = serialize.to_dict(fit)
    status = EXIT_OK
    if args.source == "legendre":
        prediction = ncd.theorem_a_report(ncd.quadratic_model(1, 1))
        ok = (
            abs(fit.alpha_hat - float(prediction.alpha)) <= args.alpha_tol
            and abs(fit.beta_hat - prediction.beta) <= args.beta_tol
        )
        lines.append(
            f"prediction from the n=1 double-point model: alpha = {prediction.alpha}, beta = {prediction.beta}"
        )
        lines.append("PASS" if ok else "FAIL")
        payload["prediction"] = {"alpha": serialize.fraction_to_str(prediction.alpha), "beta": prediction.beta}
        payload["pass"] = ok
        status = EXIT_OK if ok else EXIT_FAIL
    _emit(args, lines, payload)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cydegen", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured (JSON) output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("milnor", parents=[common], help="Milnor number of a germ at the origin")
    p.add_argument("poly")
    p.add_argument("-v", "--variables", default="x,y,z")
    p.add_argument("--cap", type=int, default=DEFAULTS["degree_cap"])
    p.set_defaults(func=cmd_milnor)

    p = sub.add_parser("lct", parents=[common], help="lct, alpha, beta from an NCD model file")
    p.add_argument("model")
    p.set_defaults(func=cmd_lct)

    p = sub.add_parser("euler", parents=[common], help="Euler characteristic of a smooth hypersurface")
    p.add_argument("N", type=int)
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("yoshikawa", parents=[common], help="degree of the Yoshikawa class")
    p.add_argument("-n", type=int, required=True, help="fiber dimension")
    p.add_argument("--milnor", help="comma-separated Milnor numbers")
    p.add_argument("--delta-chi", type=int)
    p.set_defaults(func=cmd_yoshikawa)

    p = sub.add_parser("alpha-bcov", parents=[common], help="BCOV log coefficient")
    p.add_argument("n", type=int)
    p.add_argument("chi_general", type=int)
    p.add_argument("chi_special", type=int)
    p.add_argument("alpha", type=_fraction, nargs="?", default=Fraction(0))
    p.add_argument("beta", type=int, nargs="?", default=0)
    p.add_argument("b_correction", type=_fraction, nargs="?", default=Fraction(0))
    p.set_defaults(func=cmd_alpha_bcov)

    p = sub.add_parser("verify", parents=[common], help="exact characteristic-class identities")
    p.add_argument("--n-max", type=int, default=DEFAULTS["verify_n_max"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fit", parents=[common], help="fit L2 asymptotics")
    p.add_argument("source", choices=["legendre", "csv"])
    p.add_argument("path", nargs="?")
    p.add_argument("--s-min", type=float, default=DEFAULTS["fit_s_min"])
    p.add_argument("--s-max", type=float, default=DEFAULTS["fit_s_max"])
    p.add_argument("-n", "--count", type=int, default=DEFAULTS["fit_count"])
    p.add_argument("--correction-terms", type=int, default=DEFAULTS["fit_correction_terms"])
    p.add_argument("--alpha-tol", type=float, default=DEFAULTS["fit_alpha_tol"])
    p.add_argument("--beta-tol", type=float, default=DEFAULTS["fit_beta_tol"])
    p.add_argument("--samples-out", help="write s,l2_norm,neglog CSV here")
    p.set_defaults(func=cmd_fit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
