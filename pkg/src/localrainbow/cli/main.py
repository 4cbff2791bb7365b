"""Command line of localrainbow.

Every subcommand prints a short summary on stdout and, when ``--output`` is given,
writes an artifact: JSON reports carry the schema version and the producing
configuration, coloring families are RLCF binaries next to a JSON sidecar.
"""

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from math import comb
from pathlib import Path
from typing import Any, Optional, Union

import numpy as np

from localrainbow.analysis import attack, verify_local
from localrainbow.colorings import (
    ColoringFamily,
    PQColoring,
    constant_family,
    deterministic_family,
    injective_family,
    lll_sample,
    min_pq_colors,
    pq_coloring_search,
    product_lift,
    tce_family,
)
from localrainbow.core import (
    UniformHypergraph,
    VertexOrder,
    cube_bridge,
    find_sunflower,
    parse_family,
)
from localrainbow.locality import classify_all, decide_2ll
from localrainbow.solver import exists_local_coloring, min_colors

from .claims import CLAIMS, run_claim
from .config import SCHEMA_VERSION, RunConfig

logger = logging.getLogger(__name__)

CONSTRUCT_METHODS = ("deterministic", "lll", "constant", "injective", "tce")
"""Methods of ``construct``."""


def _write_json(config: RunConfig, payload: dict[str, Any]) -> None:
    if config.output is None:
        return
    document = {"schema_version": SCHEMA_VERSION, "config": config.to_dict()}
    document.update(payload)
    config.output.write_text(json.dumps(document, indent=2) + "\n")
    logger.info(f"Wrote {config.output}.")


def _sidecar(path: Path) -> Path:
    return path.with_name(path.name + ".json")


def _write_binary(
    config: RunConfig, coloring: Union[ColoringFamily, PQColoring]
) -> Optional[str]:
    """Save a coloring to the output path with its JSON sidecar."""
    if config.output is None:
        return None
    coloring.save(config.output)
    sidecar = {
        "schema_version": SCHEMA_VERSION,
        "config": config.to_dict(),
        "summary": coloring.summary(),
    }
    _sidecar(config.output).write_text(json.dumps(sidecar, indent=2) + "\n")
    logger.info(f"Wrote {config.output} and its sidecar.")
    return str(config.output)


def _pattern(params: dict[str, Any], r: int) -> UniformHypergraph:
    """Pattern from ``--hypergraph`` (a JSON file) or ``--pattern`` (a family id)."""
    if params.get("hypergraph"):
        data = json.loads(Path(params["hypergraph"]).read_text())
        return UniformHypergraph.from_dict(data)
    if not params.get("pattern"):
        raise ValueError("Either --pattern or --hypergraph is required.")
    return parse_family(params["pattern"], r)


def _classify(config: RunConfig) -> int:
    r, m = config.params["r"], config.params["edges"]
    records = classify_all(
        r, m, max_n=config.params.get("max_n"), threads=config.threads, progress=True
    )
    two_ll = [record.hypergraph.edges for record in records if record.is_2ll]
    print(
        f"2-locally-large classification of {r}-graphs with {m} edges: "
        f"{len(records)} classes, {len(two_ll)} 2LL."
    )
    for edges in two_ll:
        print(f"  2LL: {list(map(list, edges))}")
    _write_json(
        config,
        {
            "classes": len(records),
            "two_ll": len(two_ll),
            "records": [record.to_dict() for record in records],
        },
    )
    return 0


def _decide2ll(config: RunConfig) -> int:
    H = _pattern(config.params, config.params["r"])
    record = decide_2ll(H)
    witness = record.witness.sequence() if record.witness is not None else None
    print(f"2-locally-large decision for {list(map(list, H.edges))}: ", end="")
    print(f"{record.status.value}, witness order {witness}.")
    _write_json(config, {"record": record.to_dict()})
    return 0


def _construct(config: RunConfig) -> int:
    params = config.params
    method, n, r = params["method"], params["n"], params["r"]
    if method == "deterministic":
        order = None
        if params.get("shuffle"):
            order = VertexOrder.random(n, np.random.default_rng(config.seed))
        family = deterministic_family(n, r, order)
    elif method == "lll":
        family = lll_sample(
            n,
            r,
            params["h"],
            config.seed,
            k=params.get("k"),
            budget=params.get("budget"),
            progress=True,
        )
    elif method == "constant":
        family = constant_family(n, r)
    elif method == "injective":
        family = injective_family(n, r)
    else:
        if r != 3:
            raise ValueError(f"The tce construction is 3-uniform, got r={r}.")
        budget = params.get("budget") or 200_000
        gamma = pq_coloring_search(
            n, 3, 4, 3, params.get("k") or comb(n, 3), config.seed, budget=budget
        ).coloring
        rho = pq_coloring_search(
            n, 4, 5, 4, params.get("k") or comb(n, 4), config.seed, budget=budget
        ).coloring
        if gamma is None or rho is None:
            print("Construction of the (4,3)- and (5,4)-colorings failed.")
            return 1
        family = tce_family(n, gamma, rho)

    print(f"Constructed {method} family: n={n}, r={r}, k={family.k}.")
    _write_binary(config, family)
    return 0


def _lift(config: RunConfig) -> int:
    base = ColoringFamily.load(config.params["family"])
    anchors = [int(u) for u in config.params["anchors"].split(",")]
    family = product_lift(base, anchors)
    print(f"Product lift over {len(anchors)} anchors: k={base.k} -> k={family.k}.")
    _write_binary(config, family)
    return 0


def _pqsearch(config: RunConfig) -> int:
    params = config.params
    args = (params["n"], params["t"], params["p"], params["q"], params["k_max"])
    search = min_pq_colors if params.get("min") else pq_coloring_search
    result = search(*args, config.seed, budget=params["budget"])
    if result.coloring is None:
        status = "refuted" if result.complete else "not found within budget"
        print(f"(p,q)-coloring with at most {params['k_max']} colors: {status}.")
        return 1
    print(
        f"(p,q)-coloring found with k={result.coloring.k} "
        f"({result.nodes} nodes, complete={result.complete})."
    )
    _write_binary(config, result.coloring)
    return 0


def _verify(config: RunConfig) -> int:
    family = ColoringFamily.load(config.params["family"])
    H = _pattern(config.params, family.r)
    witness = verify_local(family, H)
    if witness is None:
        print(f"Family is local for {list(map(list, H.edges))}: ok.")
    else:
        print(f"Violation on copy {witness.embedding.map}.")
    _write_json(
        config,
        {
            "family": family.summary(),
            "pattern": H.to_dict(),
            "local": witness is None,
            "witness": witness.to_dict() if witness is not None else None,
        },
    )
    return 0 if witness is None else 1


def _attack(config: RunConfig) -> int:
    family = ColoringFamily.load(config.params["family"])
    witness = attack(family, config.params["pattern"])
    if witness is None:
        print(f"Pigeonhole attack '{config.params['pattern']}' did not close.")
    else:
        print(f"Pigeonhole attack found a violation on {witness.embedding.map}.")
    _write_json(
        config,
        {
            "family": family.summary(),
            "attack": config.params["pattern"],
            "witness": witness.to_dict() if witness is not None else None,
        },
    )
    return 0 if witness is None else 1


def _solve(config: RunConfig) -> int:
    params = config.params
    n, r = params["n"], params["r"]
    H = _pattern(params, r)
    family_path = (
        config.output.with_suffix(".rlcf") if config.output is not None else None
    )

    if params.get("min"):
        bracket = min_colors(
            n,
            r,
            H,
            k_max=params.get("k_max"),
            budget=params["budget"],
            threads=config.threads,
        )
        print(f"Minimum local color count: {bracket.lo} <= C <= {bracket.hi}.")
        if family_path is not None and bracket.family is not None:
            bracket.family.save(family_path)
        _write_json(
            config,
            {
                "bracket": bracket.to_dict(),
                "family": str(family_path) if family_path is not None else None,
            },
        )
        return 0 if bracket.exact else 2

    if params.get("k") is None:
        raise ValueError("solve needs --k unless --min is given.")
    certificate = exists_local_coloring(
        n, r, H, params["k"], budget=params["budget"], threads=config.threads
    )
    print(f"Local coloring with k={params['k']}: {certificate.verdict.value}.")
    written = None
    if family_path is not None and certificate.family is not None:
        certificate.family.save(family_path)
        written = str(family_path)
    _write_json(config, {"certificate": certificate.to_dict(written)})
    return certificate.verdict.exit_code


def _sunflower(config: RunConfig) -> int:
    H = _pattern(config.params, config.params["r"])
    witness = find_sunflower(H, config.params["petals"])
    if witness is None:
        print(f"No sunflower with {config.params['petals']} petals.")
    else:
        print(f"Sunflower with core {list(witness.core)}.")
    _write_json(
        config,
        {
            "hypergraph": H.to_dict(),
            "sunflower": witness.to_dict() if witness is not None else None,
        },
    )
    return 0 if witness is not None else 1


def _bridge(config: RunConfig) -> int:
    H = cube_bridge(config.params["vectors"].split(","))
    print(json.dumps(H.to_dict()))
    _write_json(config, {"hypergraph": H.to_dict()})
    return 0


def _reproduce(config: RunConfig) -> int:
    claim = config.params["claim"]
    claim_ids = list(CLAIMS) if claim == "all" else [claim]
    results = [
        run_claim(claim_id, config.seed, config.threads, progress=True)
        for claim_id in claim_ids
    ]
    for result in results:
        print(f"{result.claim_id}: {'pass' if result.passed else 'FAIL'}")
    _write_json(config, {"claims": [result.to_dict() for result in results]})
    return 0 if all(result.passed for result in results) else 1


_COMMANDS: dict[str, Callable[[RunConfig], int]] = {
    "classify": _classify,
    "decide2ll": _decide2ll,
    "construct": _construct,
    "lift": _lift,
    "pqsearch": _pqsearch,
    "verify": _verify,
    "attack": _attack,
    "solve": _solve,
    "sunflower": _sunflower,
    "bridge": _bridge,
    "reproduce": _reproduce,
}


def run(config: RunConfig) -> int:
    """Dispatch a configuration to its subcommand.

    Parameters
    ----------
    config : RunConfig
        The run configuration.

    Returns
    -------
    int
        Exit status of the subcommand.

    Raises
    ------
    ValueError
        If the command is unknown or its parameters are invalid.
    """
    if config.command not in _COMMANDS:
        raise ValueError(f"Unknown command '{config.command}'.")
    logger.debug(f"Running {config.to_dict()}.")
    return _COMMANDS[config.command](config)


def _add_pattern(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--pattern", help="Family id such as sp3 or clique(4).")
    parser.add_argument("--hypergraph", type=Path, help="Hypergraph JSON file.")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="Seed (default 0).")
    common.add_argument("--threads", type=int, default=1, help="Worker processes.")
    common.add_argument("--output", type=Path, help="Artifact path.")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true")
    verbosity.add_argument("-q", "--quiet", action="store_true")

    parser = argparse.ArgumentParser(
        prog="localrainbow",
        description="Local rainbow colorings of complete uniform hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    classify = sub.add_parser(
        "classify", parents=[common], help="Classify all r-graphs with m edges."
    )
    classify.add_argument("--r", type=int, default=3)
    classify.add_argument("--edges", type=int, required=True)
    classify.add_argument("--max-n", type=int)

    decide = sub.add_parser(
        "decide2ll", parents=[common], help="Decide whether a hypergraph is 2LL."
    )
    decide.add_argument("--r", type=int, default=3)
    _add_pattern(decide)

    construct = sub.add_parser(
        "construct", parents=[common], help="Build a coloring family."
    )
    construct.add_argument("--method", choices=CONSTRUCT_METHODS, required=True)
    construct.add_argument("--n", type=int, required=True)
    construct.add_argument("--r", type=int, default=3)
    construct.add_argument("--h", type=int, default=4, help="Clique size for lll.")
    construct.add_argument("--k", type=int, help="Color count override.")
    construct.add_argument("--budget", type=int, help="Resampling or search budget.")
    construct.add_argument(
        "--shuffle", action="store_true", help="Random base order (deterministic)."
    )

    lift = sub.add_parser("lift", parents=[common], help="Product lift of a family.")
    lift.add_argument("--family", type=Path, required=True)
    lift.add_argument("--anchors", required=True, help="Comma-separated vertices.")

    pqsearch = sub.add_parser(
        "pqsearch", parents=[common], help="Search for a (p,q)-coloring."
    )
    for name in ("n", "t", "p", "q", "k-max"):
        pqsearch.add_argument(f"--{name}", type=int, required=True)
    pqsearch.add_argument("--budget", type=int, default=200_000)
    pqsearch.add_argument("--min", action="store_true", help="Minimize k.")

    verify = sub.add_parser(
        "verify", parents=[common], help="Check a family against a pattern."
    )
    verify.add_argument("--family", type=Path, required=True)
    _add_pattern(verify)

    attack_parser = sub.add_parser(
        "attack", parents=[common], help="Run a pigeonhole witness finder."
    )
    attack_parser.add_argument("--family", type=Path, required=True)
    attack_parser.add_argument("--pattern", required=True)

    solve = sub.add_parser(
        "solve", parents=[common], help="Exact search for local colorings."
    )
    solve.add_argument("--n", type=int, required=True)
    solve.add_argument("--r", type=int, default=3)
    solve.add_argument("--k", type=int)
    solve.add_argument("--min", action="store_true", help="Bracket C_r(n, H).")
    solve.add_argument("--k-max", type=int)
    solve.add_argument(
        "--budget", type=int, default=1_000_000, help="SAT conflict budget."
    )
    _add_pattern(solve)

    sunflower = sub.add_parser(
        "sunflower", parents=[common], help="Find a sunflower."
    )
    sunflower.add_argument("--r", type=int, default=3)
    sunflower.add_argument("--petals", type=int, required=True)
    _add_pattern(sunflower)

    bridge = sub.add_parser(
        "bridge", parents=[common], help="Hypergraph of weight-r 0/1 vectors."
    )
    bridge.add_argument("--vectors", required=True, help="Comma-separated vectors.")

    reproduce = sub.add_parser(
        "reproduce", parents=[common], help="Check a registered claim."
    )
    reproduce.add_argument("claim", choices=[*CLAIMS, "all"])

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the ``localrainbow`` console script."""
    namespace = build_parser().parse_args(argv)
    level = logging.INFO
    if namespace.verbose:
        level = logging.DEBUG
    elif namespace.quiet:
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        return run(RunConfig.from_namespace(namespace))
    except (ValueError, OSError) as err:
        print(f"localrainbow: error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
