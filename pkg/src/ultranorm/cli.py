"""Command line entry point.

    ultranorm <experiment> [--config file.json] [--seed N] [--out dir]
    ultranorm run --config file.json
    ultranorm norm dgi|codiag <n1.json> <n2.json>
    ultranorm vol <n1.json> <n2.json>
    ultranorm metric --chi l2 <n1.json> <n2.json>
    ultranorm toric energy|converge|fekete|pullback [--phi ..] [--psi ..]

Exit status is 0 when every summary passes, 1 on a tolerance failure and 2
on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import UltranormError
from .experiments import EXPERIMENTS, ConfigError, emit_report, fmt, run_experiment
from .metrics import Chi, chi_distance
from .norms import DiagonalNorm, codiagonalize, dGI
from .volumes import relative_volume, successive_minima

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# experiment subcommands and the options each one accepts (dest -> config key)
_EXPERIMENT_OPTS = {
    "theorem-a": ["phi", "psi", "m_max"],
    "theorem-b": ["phi", "psi", "m_max"],
    "fekete": ["phi", "m", "field"],
    "pullback": ["phi", "psi", "d", "instances"],
    "minkowski-fuzz": ["pairs", "field"],
    "triangle-fuzz": ["triples", "retractions", "field"],
}

_TORIC = {
    "energy": ("energy", ["phi", "psi"]),
    "converge": ("theorem-a", ["phi", "psi", "m_max"]),
    "fekete": ("fekete", ["phi", "m"]),
    "pullback": ("pullback", ["phi", "psi", "d"]),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_common(p):
    p.add_argument("--config", help="JSON file with experiment parameters")
    p.add_argument("--seed", type=int, help="PRNG seed (overrides the config)")
    p.add_argument("--out", help="directory for CSV/JSON reports")
    p.add_argument("--gnuplot", action="store_true", help="also write a gnuplot table")


def _add_opts(p, names):
    for name in names:
        flag = "--" + name.replace("_", "-")
        if name in ("phi", "psi"):
            p.add_argument(flag, help="named instance, metric JSON file or 'trivial'")
        elif name == "field":
            p.add_argument(flag, help="TrivialQ, PAdicQ(p) or LaurentQt")
        elif name == "d":
            p.add_argument(flag, type=int, action="append", help="degree (repeatable)")
        else:
            p.add_argument(flag, type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ultranorm", description="Ultrametric norms, building metrics and toric energies.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("run", help="run the experiment named in --config")
    _add_common(p)
    for name, opts in _EXPERIMENT_OPTS.items():
        p = sub.add_parser(name, help=f"run the {name} experiment")
        _add_common(p)
        _add_opts(p, opts)

    p = sub.add_parser("toric", help="toric energies, convergence, Fekete points, pull-backs")
    tsub = p.add_subparsers(dest="toric_command", required=True, parser_class=_Parser)
    for name, (_, opts) in _TORIC.items():
        q = tsub.add_parser(name)
        _add_common(q)
        _add_opts(q, opts)

    p = sub.add_parser("norm", help="distance or joint basis of two norm files")
    p.add_argument("action", choices=["dgi", "codiag"])
    p.add_argument("n1")
    p.add_argument("n2")
    p = sub.add_parser("vol", help="relative volume, successive minima and dGI of two norm files")
    p.add_argument("n1")
    p.add_argument("n2")
    p = sub.add_parser("metric", help="chi-distance of two norm files")
    p.add_argument("--chi", default="linf", help="l1, l2 or linf")
    p.add_argument("n1")
    p.add_argument("n2")
    return parser


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path} is not valid JSON: {exc}") from None


def _load_norm(path) -> DiagonalNorm:
    obj = _load_json(path)
    try:
        return DiagonalNorm.from_json(obj)
    except (KeyError, TypeError) as exc:
        raise ConfigError(f"{path} is not a norm file: {exc}") from None


def _config(args, experiment, opts) -> dict:
    cfg = _load_json(args.config) if args.config else {}
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    if experiment is not None:
        if cfg.get("experiment", experiment) != experiment:
            raise ConfigError(f"config names {cfg['experiment']!r} but the command is {experiment!r}")
        cfg["experiment"] = experiment
    for name in opts:
        val = getattr(args, name, None)
        if val is not None:
            cfg[name] = val
    if args.seed is not None:
        cfg["seed"] = args.seed
    return cfg


def _run(args, experiment, opts) -> int:
    cfg = _config(args, experiment, opts)
    records = run_experiment(cfg)
    for rec in records:
        print(json.dumps({"experiment": rec.experiment, "summary": fmt(rec.summary)}, sort_keys=True))
    if args.out:
        paths = emit_report(records, args.out, name=records[0].experiment, gnuplot=args.gnuplot)
        for p in paths.values():
            print(f"wrote {p}", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in records) else EXIT_FAIL


def _scaled(x, field) -> str:
    return f"{fmt(x)} ({float(x) * field.log_scale:.17g})"


def _norm_command(args) -> int:
    n1, n2 = _load_norm(args.n1), _load_norm(args.n2)
    if args.command == "norm" and args.action == "codiag":
        c = codiagonalize(n1, n2)
        print("# w1 w2 vector")
        for vec, w1, w2 in zip(c.vectors, c.weights1, c.weights2):
            print(fmt(w1), fmt(w2), json.dumps([n1.field.raw_to_json(x) for x in vec]))
    elif args.command == "norm":
        print(f"dGI {_scaled(dGI(n1, n2), n1.field)}")
    elif args.command == "vol":
        print(f"vol {_scaled(relative_volume(n1, n2), n1.field)}")
        print("minima " + " ".join(fmt(x) for x in successive_minima(n1, n2)))
        print(f"dGI {_scaled(dGI(n1, n2), n1.field)}")
    else:
        chi = Chi.parse(args.chi)
        d = chi_distance(n1, n2, chi)
        print(f"dist_{chi.value} {fmt(d)}")
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            if not args.config:
                raise ConfigError("run needs --config")
            return _run(args, None, [])
        if args.command in _EXPERIMENT_OPTS:
            return _run(args, args.command, _EXPERIMENT_OPTS[args.command])
        if args.command == "toric":
            experiment, opts = _TORIC[args.toric_command]
            return _run(args, experiment, opts)
        return _norm_command(args)
    except (ConfigError, UltranormError, ValueError) as exc:
        print(f"ultranorm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
