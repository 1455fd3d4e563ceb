"""JSON formats for games, graphs, certificates and results.

Rationals are serialized as "num/den" strings (never floats); all
machine-readable output is emitted with sorted keys and canonically sorted
lists so identical inputs give byte-identical files.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .alpha import AlphaResult
from .errors import InvalidInputError
from .games import SimpleGame
from .graphs import GEDecomposition, Graph
from .payoffs import Certificate, MIN_WINNING_GE_1, RATIO
from .wellspread import WellSpreadDecomposition


def format_fraction(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def parse_fraction(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"not a rational: {text!r}") from exc


def _int_list(raw: Any, what: str) -> list[int]:
    if not isinstance(raw, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in raw):
        raise InvalidInputError(f"{what} must be a list of integers, got {raw!r}")
    return raw


def game_to_dict(game: SimpleGame) -> dict:
    return {
        "n": game.n,
        "minimal_winning": [sorted(c) for c in game.min_winning],
    }


def game_from_dict(doc: Any) -> SimpleGame:
    if not isinstance(doc, dict) or set(doc) != {"n", "minimal_winning"}:
        raise InvalidInputError(
            'game files need exactly the keys "n" and "minimal_winning"'
        )
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidInputError(f'"n" must be an integer, got {n!r}')
    raw = doc["minimal_winning"]
    if not isinstance(raw, list):
        raise InvalidInputError('"minimal_winning" must be a list of coalitions')
    coalitions = []
    for entry in raw:
        members = _int_list(entry, "a coalition")
        if len(set(members)) != len(members):
            raise InvalidInputError(f"coalition {entry} has duplicate players")
        coalitions.append(frozenset(members))
    return SimpleGame(n=n, min_winning=tuple(coalitions))


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": sorted([u, v] for u, v in g.edges)}


def graph_from_dict(doc: Any) -> Graph:
    if not isinstance(doc, dict) or set(doc) != {"n", "edges"}:
        raise InvalidInputError('graph files need exactly the keys "n" and "edges"')
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidInputError(f'"n" must be an integer, got {n!r}')
    edges = []
    for entry in doc["edges"]:
        pair = _int_list(entry, "an edge")
        if len(pair) != 2:
            raise InvalidInputError(f"an edge needs exactly two endpoints, got {entry}")
        edges.append((pair[0], pair[1]))
    return Graph(n=n, edges=frozenset(edges))


def certificate_to_dict(cert: Certificate) -> dict:
    return {
        "scheme": cert.scheme,
        "payoff": [format_fraction(v) for v in cert.payoff],
        "bound": format_fraction(cert.claimed_bound),
        "normalization": cert.normalization,
    }


def certificate_from_dict(doc: Any) -> Certificate:
    keys = {"scheme", "payoff", "bound", "normalization"}
    if not isinstance(doc, dict) or set(doc) != keys:
        raise InvalidInputError(f"certificate files need exactly the keys {sorted(keys)}")
    if doc["normalization"] not in (MIN_WINNING_GE_1, RATIO):
        raise InvalidInputError(f"unknown normalization {doc['normalization']!r}")
    return Certificate(
        scheme=str(doc["scheme"]),
        payoff=tuple(parse_fraction(v) for v in doc["payoff"]),
        claimed_bound=parse_fraction(doc["bound"]),
        normalization=doc["normalization"],
    )


def alpha_result_to_dict(result: AlphaResult) -> dict:
    return {
        "alpha": format_fraction(result.alpha),
        "payoff": [format_fraction(v) for v in result.payoff],
        "binding_losing": [sorted(c) for c in result.binding_losing],
        "binding_winning": [sorted(c) for c in result.binding_winning],
    }


def decomposition_to_dict(
    ge: GEDecomposition,
    decomposition: WellSpreadDecomposition,
    component_of: dict[int, frozenset[int]],
) -> dict:
    """Combined report: Gallai-Edmonds structure plus the well-spread parts
    of the contracted bipartite graph (B entries are component vertex
    lists)."""
    parts = []
    for part in decomposition.parts:
        parts.append(
            {
                "A": sorted(part.a_part),
                "B": sorted((sorted(component_of[lbl]) for lbl in part.b_part)),
                "lambda": format_fraction(part.lam),
            }
        )
    return {
        "gallai_edmonds": {
            "tutte_set": sorted(ge.tutte_set),
            "odd_components": sorted(sorted(c) for c in ge.odd_components),
            "even_components": sorted(sorted(c) for c in ge.even_components),
            "exposed": sorted(ge.exposed_set),
        },
        "well_spread": {"parts": parts},
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def load_path(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path} is not valid JSON: {exc}") from exc
