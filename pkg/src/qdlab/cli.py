"""Command-line interface: ``qdlab <subcommand>``."""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .config import Campaign, config_for, load_config
from .dispersion import (
    BogoliubovParams,
    DispersionParams,
    bogoliubov_c,
    phi_eps,
    phi_eps_derivatives,
    regime_classify,
)
from .report import Report, emit, to_json, write_csv_stream


def _floats(text: str) -> list:
    return [float(v) for v in text.split(",") if v.strip()]


def _emit_or_print(rep: Report, out: str | None, fmt: str = "csv") -> None:
    if out:
        for p in emit(rep, out, fmt):
            print(p, file=sys.stderr)
        return
    write_csv_stream(sys.stdout, rep.columns, rep.rows)
    print(to_json(rep.to_dict(include_rows=False)), file=sys.stderr)


def cmd_dispersion(args) -> int:
    if args.xi_min <= 0 or args.xi_max < args.xi_min or args.points < 1:
        raise SystemExit("need 0 < xi-min <= xi-max and points >= 1")
    p = DispersionParams(args.eps, args.kappa)
    xi = np.linspace(args.xi_min, args.xi_max, args.points)
    om = phi_eps(xi, p)
    d1, d2 = phi_eps_derivatives(xi, p)
    h = (np.asarray(d1) / xi) ** (args.dim - 1) * np.asarray(d2)
    regimes = regime_classify(xi, p)
    cols = ["xi", "omega", "phi1", "phi2", "h", "h_inv_sqrt", "regime"]
    extra = None
    if args.bogoliubov:
        g, n, m = _floats(args.bogoliubov)
        extra = bogoliubov_c(xi, BogoliubovParams(g, n, m))
        cols.append("bogoliubov_c")
    rows = []
    for i in range(len(xi)):
        row = [xi[i], om[i], d1[i], d2[i], h[i], 1.0 / math.sqrt(h[i]), regimes[i].value]
        if extra is not None:
            row.append(extra[i])
        rows.append(row)
    write_csv_stream(sys.stdout, cols, rows)
    return 0


def cmd_boussinesq(args) -> int:
    if not args.check:
        raise SystemExit("only --check is supported")
    from .experiments import HELMHOLTZ_KEYS, identity_residuals
    from .grid import Grid

    res = identity_residuals(Grid(args.dim, args.n, args.box_length), args.seed)
    ok = all(v < (1e-12 if k in HELMHOLTZ_KEYS else 1e-10) for k, v in res.items())
    print(to_json({"residuals": res, "pass": ok}))
    return 0 if ok else 1


def cmd_decay(args) -> int:
    from .experiments import exit_code, run_decay

    cfg = config_for(Campaign.DECAY, dim=args.dim, kappa=args.kappa, eps=args.eps, R_values=[args.R],
                     t_min=args.t_min, t_max=args.t_max, t_points=args.t_points, delta=args.delta,
                     n_x=args.n_x)
    rep = run_decay(cfg)
    _emit_or_print(rep, args.out)
    return exit_code(rep.status)


def cmd_admissible(args) -> int:
    from .norms import InfeasiblePairError, MuKind, alpha_exponents, prop_b_exponent, solve_admissible

    if (args.q is None) == (args.r is None):
        raise SystemExit("give exactly one of --q, --r")
    kind = MuKind.parse(args.mu_kind)
    try:
        pair = solve_admissible(args.dim, kind, q=args.q, r=args.r, convention=args.convention)
    except InfeasiblePairError as exc:
        print(to_json({"error": "infeasible", "message": str(exc)}))
        return 1
    r1 = pair.r if args.r1 is None else args.r1
    a0, a1 = alpha_exponents(args.dim, pair.r, r1) if args.dim >= 2 else (0.0, 0.0)
    s = prop_b_exponent(float(kind.theta), pair.r) if kind.name == "theta" else 0.0
    print(to_json({"q": pair.q, "r": pair.r, "mu": pair.mu, "convention": pair.convention.value,
                   "beta": pair.beta, "alpha0": a0, "alpha1": a1, "s": s}))
    return 0


def cmd_gpe(args) -> int:
    from .experiments import exit_code, run_gpe_dispersion

    overrides = dict(gpe_modes=_floats(args.modes), amplitude=args.amplitude, dt=args.dt)
    if args.n:
        overrides["grid_n"] = args.n
    if args.box_length:
        overrides["box_length"] = args.box_length
    cfg = config_for(Campaign.GPE_DISPERSION, **overrides)
    rep = run_gpe_dispersion(cfg, horizon=args.horizon)
    _emit_or_print(rep, args.out)
    return exit_code(rep.status)


def cmd_run(args) -> int:
    from .experiments import exit_code, run_campaign

    cfg = load_config(args.config)
    if args.seed is not None:
        cfg.rng_seed = args.seed
    rep = run_campaign(cfg)
    fmt = args.format or cfg.format
    for p in emit(rep, args.out or cfg.output, fmt):
        print(p)
    for a in rep.assertions:
        print(f"{a.status.value.upper():13s} {a.name}", file=sys.stderr)
    return exit_code(rep.status)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qdlab", description="Spectral numerics for the linear quantum-hydrodynamic acoustic system.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dispersion", help="tabulate the dispersion symbol and its derivatives")
    p.add_argument("--eps", type=float, default=1.0)
    p.add_argument("--kappa", type=float, default=0.5)
    p.add_argument("--xi-min", type=float, default=0.01)
    p.add_argument("--xi-max", type=float, default=10.0)
    p.add_argument("--points", type=int, default=100)
    p.add_argument("--dim", type=int, choices=(2, 3), default=3)
    p.add_argument("--bogoliubov", metavar="G,N,M", help="also tabulate c(p) with these parameters")
    p.set_defaults(func=cmd_dispersion)

    p = sub.add_parser("boussinesq", help="exact-evolution identity residuals as JSON")
    p.add_argument("--check", action="store_true")
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--n", type=int, default=16)
    p.add_argument("--box-length", type=float, default=2 * math.pi)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_boussinesq)

    p = sub.add_parser("decay", help="stationary-phase decay scan")
    p.add_argument("--dim", type=int, choices=(2, 3), default=2)
    p.add_argument("--kappa", type=float, default=1.0)
    p.add_argument("--eps", type=float, default=1.0)
    p.add_argument("--R", type=float, default=1.0)
    p.add_argument("--t-min", type=float, default=100.0)
    p.add_argument("--t-max", type=float, default=1e4)
    p.add_argument("--t-points", type=int, default=9)
    p.add_argument("--delta", type=float, default=0.0)
    p.add_argument("--n-x", type=int, default=64)
    p.add_argument("--out", help="directory for decay.csv and decay_summary.json")
    p.set_defaults(func=cmd_decay)

    p = sub.add_parser("admissible", help="complete an admissible exponent pair")
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--mu-kind", default="schroedinger", help="schroedinger | wave | theta:T")
    p.add_argument("--q", type=float)
    p.add_argument("--r", type=float)
    p.add_argument("--r1", type=float)
    p.add_argument("--convention", choices=("paper", "classical"), default="classical")
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("gpe", help="Gross-Pitaevskii dispersion measurement")
    p.add_argument("--modes", default="0.5,1,2,4", help="comma-separated |xi| values")
    p.add_argument("--amplitude", type=float, default=1e-3)
    p.add_argument("--horizon", type=float)
    p.add_argument("--dt", type=float, default=0.01)
    p.add_argument("--n", type=int)
    p.add_argument("--box-length", type=float)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gpe)

    p = sub.add_parser("run", help="run a configured campaign")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_run)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
