"""Command-line interface: ``pathramsey <subcommand> ...``.

Exit status is 0 when every requested check passes, 1 when a check fails,
2 for bad input and 3 when an exact computation ran out of budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .certificates import (ARROW_BUDGET, EXACT_LIMIT, arrow_exact, check_bipartite_multi,
                           check_letzter, check_two_holes)
from .constants import DEFAULT_TOLERANCE, constants_table, format_table
from .errors import BudgetError, ParameterError
from .experiments import STRATEGIES, dr_experiment, mono_path_experiment
from .graphs import (RandomSpec, complete_graph, gen_gnnp, gen_gnp, gen_pairing, gen_regular_simple,
                     parse_graph)
from .lower_bounds import (case2_colouring, dichotomy_violations, lower_bound_formula,
                           tree_dichotomy)
from .paths import longest_mono_path

OUT_DIR_ENV = "PATHRAMSEY_OUT_DIR"
OK, FAILED, BAD_INPUT, OUT_OF_BUDGET = 0, 1, 2, 3


class ConfigError(ParameterError):
    pass


def _read_graph(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        return parse_graph(text)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"{path}: line {exc.lineno}: {exc.msg}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# constants


def cmd_constants(args) -> int:
    rows = constants_table(args.tolerance, search=not args.quick)
    if args.json:
        print(json.dumps([r.to_dict() for r in rows], indent=2))
    else:
        print(format_table(rows))
    return OK if all(r.passed for r in rows) else FAILED


# certificates


def cmd_arrow(args) -> int:
    g = _read_graph(args.graph)
    try:
        cert = arrow_exact(g, args.n, args.r, args.budget)
    except BudgetError as exc:
        print(f"undecided: {exc} (explored {exc.spent} search nodes)", file=sys.stderr)
        return OUT_OF_BUDGET
    _emit(cert.to_json() + "\n", args.out)
    if args.out:
        print(cert.verdict)
    return OK if cert.verdict == "holds" else FAILED


def cmd_certify(args) -> int:
    g = _read_graph(args.graph)
    if args.mode == "monte_carlo" and args.seed is None:
        raise ParameterError("--seed is required in monte_carlo mode")
    kw = {"mode": args.mode, "budget": args.budget, "seed": args.seed or 0}
    try:
        if args.kind == "letzter":
            cert = check_letzter(g, args.n, **kw)
        elif args.kind == "two_holes":
            cert = check_two_holes(g, args.n, **kw)
        else:
            cert = check_bipartite_multi(g, args.n, args.r, **kw)
    except BudgetError as exc:
        print(f"undecided: {exc} (examined {exc.spent} candidates)", file=sys.stderr)
        return OUT_OF_BUDGET
    _emit(cert.to_json() + "\n", args.out)
    if args.out:
        print(cert.verdict)
    return OK if cert.verdict == "holds" else FAILED


# generators


def cmd_gen(args) -> int:
    if args.model in ("gnp", "gnnp"):
        spec = RandomSpec(args.model, args.n, args.seed, p=args.p)
        g = gen_gnp(spec) if args.model == "gnp" else gen_gnnp(spec)
    else:
        spec = RandomSpec("pairing", args.n, args.seed, d=args.d)
        g = gen_pairing(spec) if args.model == "pairing" else gen_regular_simple(spec)
    _emit(g.to_json() + "\n" if args.format == "json" else g.to_edgelist(), args.out)
    return OK


# experiments

_CONFIG_KEYS = {
    "dr": {"kind", "n", "p", "r", "strategy", "trials", "seed", "name"},
    "mono_path": {"kind", "model", "n", "p", "d", "r", "trials", "seed", "exact", "name"},
}


def _key_line(text: str, key: str) -> int:
    needle = f'"{key}"'
    for i, line in enumerate(text.splitlines(), start=1):
        if needle in line:
            return i
    return 1


def load_config(text: str) -> dict:
    """Parse and validate an experiment config; errors carry line numbers."""
    try:
        cfg = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError("line 1: config must be a JSON object")

    def fail(key, msg):
        raise ConfigError(f"line {_key_line(text, key)}: {key}: {msg}")

    kind = cfg.get("kind", "dr")
    if kind not in _CONFIG_KEYS:
        fail("kind", f"must be one of {sorted(_CONFIG_KEYS)}")
    for key in cfg:
        if key not in _CONFIG_KEYS[kind]:
            fail(key, f"unknown key for kind {kind!r}")
    if "seed" not in cfg:
        raise ConfigError("line 1: seed: required (no default seed is ever used)")
    for key in ("n", "r", "trials", "seed"):
        if key not in cfg:
            raise ConfigError(f"line 1: {key}: required")
        if not isinstance(cfg[key], int) or isinstance(cfg[key], bool) or cfg[key] < 0:
            fail(key, "must be a non-negative integer")
    if not 0 <= cfg["seed"] < 2**64:
        fail("seed", "must fit in 64 bits")
    if kind == "dr":
        if not isinstance(cfg.get("p"), (int, float)) or not 0 <= cfg["p"] <= 1:
            fail("p", "must be a number in [0, 1]")
        if cfg.get("strategy", "random") not in STRATEGIES:
            fail("strategy", f"must be one of {list(STRATEGIES)}")
    else:
        model = cfg.get("model")
        if model == "gnp":
            if not isinstance(cfg.get("p"), (int, float)) or not 0 <= cfg["p"] <= 1:
                fail("p", "must be a number in [0, 1]")
        elif model == "pairing":
            d = cfg.get("d")
            if not isinstance(d, int) or d < 1:
                fail("d", "must be a positive integer")
            if (d * cfg["n"]) % 2:
                fail("d", f"d*n = {d * cfg['n']} is odd, no pairing exists")
        else:
            fail("model", "must be 'gnp' or 'pairing'")
    return cfg


def run_config(cfg: dict, jobs: int = 1):
    if cfg.get("kind", "dr") == "dr":
        return dr_experiment(cfg["n"], cfg["p"], cfg["r"], cfg.get("strategy", "random"),
                             cfg["trials"], cfg["seed"], jobs=jobs)
    return mono_path_experiment(cfg["model"], cfg["n"], cfg["r"], cfg["trials"], cfg["seed"],
                                p=cfg.get("p"), d=cfg.get("d"), exact=cfg.get("exact", False),
                                jobs=jobs)


def cmd_experiment(args) -> int:
    path = Path(args.config)
    try:
        cfg = load_config(path.read_text())
    except ConfigError as exc:
        raise ConfigError(f"{path}: {exc}") from exc
    out_dir = Path(args.out_dir or os.environ.get(OUT_DIR_ENV) or ".")
    out_dir.mkdir(parents=True, exist_ok=True)
    name = cfg.get("name", path.stem)
    result = run_config(cfg, args.jobs)
    (out_dir / f"{name}.csv").write_text(result.to_csv())
    (out_dir / f"{name}.summary.json").write_text(result.summary_json())
    stats = result.summary["max_ratio"]
    print(f"{name}: {cfg['trials']} trials, max ratio mean {stats['mean']:.4f} min {stats['min']:.4f}")
    print(f"wrote {out_dir / (name + '.csv')} and {out_dir / (name + '.summary.json')}")
    return OK


# lower bounds


def cmd_tree_claim(args) -> int:
    t = _read_graph(args.graph)
    result = tree_dichotomy(t, args.k, args.n)
    problems = dichotomy_violations(t, args.k, args.n, result)
    payload = result.to_dict()
    payload["violations"] = problems
    print(json.dumps(payload, indent=2))
    return OK if not problems else FAILED


def cmd_colour_lower_bound(args) -> int:
    n, r = args.n, args.r
    if args.graph:
        g = _read_graph(args.graph)
    else:
        g = complete_graph((r + 2) * (n - 3) // 2)
    adv = case2_colouring(g, n, r)
    lengths = [len(longest_mono_path(g, adv.colouring, c, exact=True, budget=max(22, g.n)))
               for c in range(r + 1)]
    ok = max(lengths, default=0) < n
    bound = lower_bound_formula(n, r)
    if args.out:
        Path(args.out).write_text(json.dumps(adv.to_dict(g), indent=2) + "\n")
    print(f"graph: {g.n} vertices, {g.m} edges; colours: {r + 1}")
    print(f"longest monochromatic path per colour: {lengths}")
    print(f"no monochromatic P_{n}: {'yes' if ok else 'NO'}")
    print(f"size-Ramsey lower bound for (n={n}, r={r}): {bound} = {float(bound):g}")
    return OK if ok else FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pathramsey", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("constants", help="recompute the constants table")
    s.add_argument("--json", action="store_true")
    s.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    s.add_argument("--quick", action="store_true", help="skip the integer-d search")
    s.set_defaults(func=cmd_constants)

    s = sub.add_parser("arrow", help="decide G -> (P_n)_r exhaustively")
    s.add_argument("graph", help="edge list or JSON file, '-' for stdin")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-r", type=int, default=2)
    s.add_argument("--budget", type=int, default=ARROW_BUDGET)
    s.add_argument("--out", help="write the certificate JSON here")
    s.set_defaults(func=cmd_arrow)

    s = sub.add_parser("certify", help="check a sufficient condition for arrowing")
    s.add_argument("graph")
    s.add_argument("--kind", choices=["letzter", "two_holes", "bipartite"], default="letzter")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-r", type=int, default=2)
    s.add_argument("--mode", choices=["exact", "monte_carlo"], default="exact")
    s.add_argument("--budget", type=int, default=EXACT_LIMIT)
    s.add_argument("--seed", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("gen", help="sample a random graph")
    s.add_argument("--model", choices=["gnp", "gnnp", "pairing", "regular"], required=True)
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-p", type=float)
    s.add_argument("-d", type=int)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--format", choices=["edgelist", "json"], default="edgelist")
    s.add_argument("--out")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("experiment", help="run a Monte Carlo experiment from a JSON config")
    s.add_argument("config")
    s.add_argument("--out-dir", help=f"output directory (default ${OUT_DIR_ENV} or .)")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_experiment)

    s = sub.add_parser("tree-claim", help="k deletable edges or k+2 disjoint subtrees")
    s.add_argument("graph")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("-n", type=int, required=True)
    s.set_defaults(func=cmd_tree_claim)

    s = sub.add_parser("colour-lower-bound", help="build and verify the adversarial colouring")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-r", type=int, default=2)
    s.add_argument("--graph", help="graph to colour (default: the largest allowed complete graph)")
    s.add_argument("--out")
    s.set_defaults(func=cmd_colour_lower_bound)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParameterError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except BudgetError as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return OUT_OF_BUDGET


if __name__ == "__main__":
    sys.exit(main())
