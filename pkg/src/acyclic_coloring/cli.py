"""Command line entry point: ``acyclic-coloring <command> ...``.

Exit codes: 0 success, 1 input error or failed verification, 2 step cap
reached, 3 internal invariant breach.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import bounds
from .bicycle import find_violation
from .engine import DEFAULT_STEP_CAP, run
from .errors import InvariantViolation
from .graph import GraphError, format_graph, generate_random_regular, read_graph
from .palette import ColoringState, format_coloring, num_colors, parse_coloring, quota
from .validator import lemma5_bound, lemma5_simplified_bound, monte_carlo_success, is_admissible
from .witness import AdmissibleTriple, build_forest, check_properties, encode_forest, format_forest

EXIT_OK, EXIT_INPUT, EXIT_TRUNCATED, EXIT_INTERNAL = 0, 1, 2, 3
DEFAULT_GAMMA = 1.569


class InputError(Exception):
    pass


def _dump(obj, path=None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    _write(text, path)


def _write(text: str, path=None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_graph(path):
    try:
        return read_graph(path)
    except OSError as exc:
        raise InputError(f"cannot read graph: {exc}") from None
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _palette(g, gamma, n_override):
    if not gamma > 0:
        raise InputError(f"gamma must be positive, got {gamma}")
    if g.max_degree < 2:
        return None, None
    N, K = num_colors(gamma, g.max_degree), quota(gamma, g.max_degree)
    if n_override is not None:
        floor = 2 * (g.max_degree - 1) + K
        if n_override < floor:
            raise InputError(
                f"--colors {n_override} is below 2(max degree - 1) + K = {floor}; "
                "the quota of available colors could not be guaranteed"
            )
        if n_override != N:
            print(f"warning: palette size overridden: N={n_override} instead of {N}", file=sys.stderr)
        N = n_override
    return N, K


def cmd_color(args) -> int:
    g = _load_graph(args.graph)
    N, K = _palette(g, args.gamma, args.colors)
    if N is None:
        # max degree <= 1: no two edges meet, one color is acyclic
        state = ColoringState.from_colors(g, [1] * g.m)
        stats = dict(n_steps=0, n_phases=0, instants=g.m, terminated=True, verified=True)
        code = EXIT_OK
    else:
        state, record, st = run(g, args.gamma, args.seed, step_cap=args.step_cap,
                                instrumented=args.instrumented, n_colors=N)
        stats = dict(n_steps=st.n_steps, n_phases=st.n_phases, instants=st.instants,
                     terminated=st.terminated, verified=st.verified)
        code = EXIT_OK if st.verified else EXIT_TRUNCATED
    stats.update(seed=args.seed, gamma=args.gamma, N=N, K=K, n=g.n, m=g.m)
    if args.output:
        _write(format_coloring(state), args.output)
    _dump(stats, args.stats)
    return code


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    try:
        with open(args.coloring) as fh:
            colors = parse_coloring(fh.read(), g.m)
    except OSError as exc:
        raise InputError(f"cannot read coloring: {exc}") from None
    except ValueError as exc:
        raise InputError(f"{args.coloring}: {exc}") from None
    state = ColoringState.from_colors(g, colors)
    found = find_violation(state, g)
    if found is None:
        print("acyclic proper coloring")
        return EXIT_OK
    kind, what = found
    if kind == "cherry":
        e, f = what
        print(f"monochromatic cherry: edges {e} {g.edges[e]} and {f} {g.edges[f]} share color {colors[e]}")
    else:
        print(f"bichromatic cycle with colors {list(what.colors)}: edges {list(what.cycle.edges)} "
              f"vertices {list(what.cycle.vertices)}")
    return EXIT_INPUT


def cmd_bound(args) -> int:
    if args.threshold:
        if not args.tol > 0:
            raise InputError("--tol must be positive")
        g_star = bounds.gamma_threshold(args.tol)
        _dump({"gamma_threshold": g_star, "constant": 2 + g_star, "tol": args.tol,
               "rho_at_threshold": bounds.rho(g_star)[0]}, args.output)
        return EXIT_OK
    if not args.gamma > 0:
        raise InputError("--gamma must be positive")
    r, x = bounds.rho(args.gamma)
    out = {"gamma": args.gamma, "rho": r, "xstar": x, "delta": args.delta,
           "N": num_colors(args.gamma, args.delta), "K": quota(args.gamma, args.delta)}
    _dump(out, args.output)
    return EXIT_OK


def _parse_triple(text: str) -> AdmissibleTriple:
    try:
        a, b, k = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected e1,e2,k got {text!r}") from None
    return AdmissibleTriple(a, b, k)


def cmd_colorval_mc(args) -> int:
    g = _load_graph(args.graph)
    if g.max_degree < 2:
        raise InputError("graph needs maximum degree at least 2")
    S = args.triple or []
    for t in S:
        if not (0 <= t.first < g.m and 0 <= t.second < g.m):
            raise InputError(f"triple {t}: edge id out of range")
        try:
            ok = is_admissible(g, t)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        if not ok:
            raise InputError(f"triple ({t.first},{t.second},{t.k}) is not admissible")
    if args.trials < 1:
        raise InputError("--trials must be at least 1")
    est, err = monte_carlo_success(g, S, args.gamma, args.trials, args.seed)
    _dump({
        "triples": [[t.first, t.second, t.k] for t in S],
        "trials": args.trials,
        "estimate": est,
        "stderr": err,
        "bound": lemma5_bound(S, args.gamma, g.max_degree),
        "simplified_bound": lemma5_simplified_bound(S, args.gamma, g.max_degree),
        "gamma": args.gamma,
        "seed": args.seed,
    }, args.output)
    return EXIT_OK


def cmd_forest(args) -> int:
    g = _load_graph(args.graph)
    N, _ = _palette(g, args.gamma, None)
    if N is None:
        raise InputError("graph needs maximum degree at least 2")
    state, record, st = run(g, args.gamma, args.seed, step_cap=args.step_cap)
    if not record.terminated:
        print(f"step cap {args.step_cap} reached", file=sys.stderr)
        return EXIT_TRUNCATED
    F = build_forest(record, g)
    problems = check_properties(F, g, record)
    if problems:
        raise InvariantViolation("; ".join(problems))
    if args.text:
        _write(format_forest(F) + f"encoding {encode_forest(F).hex()}\n", args.output)
    else:
        _dump({"m": g.m, "n_internal": F.internal_count, "n_phases": record.n_phases,
               "tree": format_forest(F), "encoding": encode_forest(F).hex(),
               "seed": args.seed, "gamma": args.gamma}, args.output)
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        g = generate_random_regular(args.n, args.d, args.seed)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    _write(f"# random {args.d}-regular graph, n={args.n}, seed={args.seed}\n" + format_graph(g), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="acyclic-coloring", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("color", help="acyclically color the edges of a graph")
    c.add_argument("graph")
    c.add_argument("--gamma", type=float, default=DEFAULT_GAMMA)
    c.add_argument("--colors", type=int, default=None, help="override the palette size N")
    c.add_argument("--seed", type=int, required=True)
    c.add_argument("--step-cap", type=int, default=DEFAULT_STEP_CAP)
    c.add_argument("--instrumented", action="store_true", help="check invariants after every step (slow)")
    c.add_argument("-o", "--output", help="coloring file ('edge_id color' lines)")
    c.add_argument("--stats", help="stats JSON path (default stdout)")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check that a coloring is proper and acyclic")
    v.add_argument("graph")
    v.add_argument("coloring")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bound", help="generating-function bound rho(gamma) or the gamma threshold")
    b.add_argument("--gamma", type=float, default=DEFAULT_GAMMA)
    b.add_argument("--delta", type=int, default=3, help="max degree used for the reported N and K")
    b.add_argument("--threshold", action="store_true")
    b.add_argument("--tol", type=float, default=1e-4)
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_bound)

    m = sub.add_parser("colorval-mc", help="Monte-Carlo success rate of the validation algorithm")
    m.add_argument("graph")
    m.add_argument("--triple", type=_parse_triple, action="append", help="e1,e2,k (repeatable)")
    m.add_argument("--gamma", type=float, default=DEFAULT_GAMMA)
    m.add_argument("--trials", type=int, default=10_000)
    m.add_argument("--seed", type=int, required=True)
    m.add_argument("-o", "--output")
    m.set_defaults(func=cmd_colorval_mc)

    f = sub.add_parser("forest", help="run the algorithm and dump its witness forest")
    f.add_argument("graph")
    f.add_argument("--gamma", type=float, default=DEFAULT_GAMMA)
    f.add_argument("--seed", type=int, required=True)
    f.add_argument("--step-cap", type=int, default=DEFAULT_STEP_CAP)
    f.add_argument("--text", action="store_true", help="indented tree plus hex encoding instead of JSON")
    f.add_argument("-o", "--output")
    f.set_defaults(func=cmd_forest)

    gn = sub.add_parser("gen", help="random regular graph (pairing model)")
    gn.add_argument("--n", type=int, required=True)
    gn.add_argument("--d", type=int, required=True)
    gn.add_argument("--seed", type=int, required=True)
    gn.add_argument("-o", "--output")
    gn.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
