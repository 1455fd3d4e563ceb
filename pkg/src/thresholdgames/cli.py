"""Command-line interface.

Exit codes: 0 success (or verification pass), 1 verification failure,
2 malformed input or violated precondition.  Machine-readable output is
JSON with sorted keys and exact "num/den" rationals; decimal values are
display-only.  The TG_MAX_COALITIONS environment variable raises the
enumeration cap used by the exact solver.
"""

from __future__ import annotations

import argparse
import sys

from . import jsonio
from .alpha import alpha_bipartite_cg, alpha_brute, alpha_exact
from .decide import decide_alpha_le
from .errors import InvalidInputError, PreconditionError
from .games import SimpleGame, classify, desirability_order
from .generators import (
    cycle_game,
    random_monotone_game,
    strong_product_game,
    weighted_voting_game,
)
from .graphs import Graph, bipartition_of
from .payoffs import (
    contraction_pipeline,
    payoff_all_size3,
    payoff_complete,
    payoff_graph_quarter,
    payoff_no_size3,
    payoff_two_sevenths,
    verify_certificate,
)


def _emit(doc: dict, out: str | None) -> None:
    text = jsonio.dumps(doc)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _graph_of_game(game: SimpleGame) -> Graph:
    oversized = [c for c in game.min_winning if len(c) != 2]
    if oversized:
        raise PreconditionError(
            f"not a graphic game: minimal winning coalition {sorted(oversized[0])} "
            "does not have size 2"
        )
    return Graph(n=game.n, edges=frozenset(tuple(sorted(c)) for c in game.min_winning))


def _cmd_alpha(args: argparse.Namespace) -> int:
    game = jsonio.game_from_dict(jsonio.load_path(args.game))
    if args.method == "exact":
        result = alpha_exact(game)
    elif args.method == "brute":
        result = alpha_brute(game)
    else:
        bipartite = bipartition_of(_graph_of_game(game))
        if bipartite is None:
            raise PreconditionError("the constraint-generation method needs a bipartite graph")
        result = alpha_bipartite_cg(bipartite)
    print(f"alpha = {jsonio.format_fraction(result.alpha)} ({float(result.alpha)})")
    print(f"class = {classify(result.alpha)}")
    if args.out:
        _emit(jsonio.alpha_result_to_dict(result), args.out)
    return 0


def _cmd_certify(args: argparse.Namespace) -> int:
    game = jsonio.game_from_dict(jsonio.load_path(args.game))
    if args.scheme == "quarter-graph":
        cert = payoff_graph_quarter(_graph_of_game(game))
    elif args.scheme == "no-size3":
        cert = payoff_no_size3(game)
    elif args.scheme == "all-size3":
        cert = payoff_all_size3(game)
    elif args.scheme == "two-sevenths":
        cert = payoff_two_sevenths(game)
    else:  # complete
        order = desirability_order(game)
        if order is None:
            raise PreconditionError("the game is not complete: two players are incomparable")
        cert = payoff_complete(game, order)
    print(
        f"scheme {cert.scheme}: bound {jsonio.format_fraction(cert.claimed_bound)} "
        f"({cert.normalization})"
    )
    _emit(jsonio.certificate_to_dict(cert), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    game = jsonio.game_from_dict(jsonio.load_path(args.game))
    cert = jsonio.certificate_from_dict(jsonio.load_path(args.certificate))
    verdict = verify_certificate(game, cert)
    if verdict.ok:
        print("PASS")
        return 0
    print(f"FAIL: {verdict.reason}")
    return 1


def _cmd_decompose(args: argparse.Namespace) -> int:
    graph = jsonio.graph_from_dict(jsonio.load_path(args.graph))
    pipeline = contraction_pipeline(graph)
    doc = jsonio.decomposition_to_dict(
        pipeline.ge, pipeline.decomposition, pipeline.component_of
    )
    _emit(doc, args.out)
    return 0


def _cmd_decide(args: argparse.Namespace) -> int:
    graph = jsonio.graph_from_dict(jsonio.load_path(args.graph))
    a = jsonio.parse_fraction(args.a)
    decision = decide_alpha_le(graph, a, strict=args.strict)
    relation = "<" if args.strict else "<="
    print(f"alpha {relation} {jsonio.format_fraction(a)}: {'yes' if decision.holds else 'no'}")
    if decision.witness is not None:
        pairs = ", ".join(f"({u},{v})" for u, v in decision.witness)
        print(f"witness: {decision.k} independent induced edges {pairs}")
    if decision.alpha is not None:
        print(f"alpha = {jsonio.format_fraction(decision.alpha)}")
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.family == "cycle":
        game = cycle_game(args.n)
    elif args.family == "product":
        base = jsonio.graph_from_dict(jsonio.load_path(args.graph))
        game, expected = strong_product_game(base)
        print(f"expected alpha = {jsonio.format_fraction(expected)}", file=sys.stderr)
    elif args.family == "random":
        game = random_monotone_game(args.n, args.count, args.seed)
    else:  # wvg
        weights = [jsonio.parse_fraction(w) for w in args.weights]
        game = weighted_voting_game(weights, jsonio.parse_fraction(args.quota))
    _emit(jsonio.game_to_dict(game), args.out)
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thresholdgames",
        description="Exact critical threshold values of simple games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alpha", help="compute the exact threshold value")
    p.add_argument("game")
    p.add_argument("--method", choices=("exact", "brute", "cg"), default="exact")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_alpha)

    p = sub.add_parser("certify", help="construct a bound certificate")
    p.add_argument("game")
    p.add_argument(
        "--scheme",
        required=True,
        choices=("quarter-graph", "no-size3", "all-size3", "two-sevenths", "complete"),
    )
    p.add_argument("--out")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("verify", help="check a certificate against a game")
    p.add_argument("game")
    p.add_argument("certificate")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("decompose", help="Gallai-Edmonds + well-spread decomposition")
    p.add_argument("graph")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("decide", help="decide whether the threshold value is <= a")
    p.add_argument("graph")
    p.add_argument("--a", required=True, help="threshold as num/den")
    p.add_argument("--strict", action="store_true", help="decide strict < instead")
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("generate", help="emit a built-in instance family")
    gen = p.add_subparsers(dest="family", required=True)
    q = gen.add_parser("cycle")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--out")
    q = gen.add_parser("product")
    q.add_argument("graph")
    q.add_argument("--out")
    q = gen.add_parser("random")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--count", type=int, required=True)
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--out")
    q = gen.add_parser("wvg")
    q.add_argument("--weights", nargs="+", required=True)
    q.add_argument("--quota", required=True)
    q.add_argument("--out")
    p.set_defaults(func=_cmd_generate)

    return parser


def run(argv: list[str]) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (InvalidInputError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
