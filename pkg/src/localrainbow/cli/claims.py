"""Registry of reproducible claims checked by ``localrainbow reproduce``."""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial
from typing import Any, Optional

import numpy as np
from tqdm import tqdm

from localrainbow.analysis import attack, verify_local
from localrainbow.colorings import (
    ColoringFamily,
    deterministic_family,
    lll_color_bound,
    lll_sample,
    pq_coloring_search,
    product_lift,
    tce_family,
)
from localrainbow.core import (
    UniformHypergraph,
    VertexOrder,
    complete_edges,
    enumerate_hypergraphs,
    find_sunflower,
    is_isomorphic,
    make_family,
)
from localrainbow.locality import (
    classify_all,
    count_witness_orders,
    is_2ll_under,
    random_orders_fail,
)
from localrainbow.solver import (
    SolveVerdict,
    backtrack_exists,
    brute_force_exists,
    exists_local_coloring,
)

logger = logging.getLogger(__name__)

Outcome = tuple[bool, dict[str, Any]]

WITNESS_ORDERS: dict[str, tuple[int, ...]] = {
    "tp3": (2, 3, 0, 1, 4),
    "sp3": (5, 4, 2, 1, 3, 0),
    "lc3": (0, 4, 3, 2, 1, 5),
}
"""Orders, lowest rank first, under which the three exceptions are 2LL."""


@dataclass(frozen=True)
class Claim:
    """A finite statement with a scripted check."""

    claim_id: str
    """Registry key."""

    description: str
    """What the check establishes."""

    check: Callable[[int, int, bool], Outcome]
    """Function of `(seed, threads, progress)` returning `(passed, details)`."""


@dataclass(frozen=True)
class ClaimResult:
    """Pass/fail record of one claim."""

    claim_id: str
    """Registry key."""

    description: str
    """What the check establishes."""

    passed: bool
    """Whether the check matched its expectation."""

    details: dict[str, Any]
    """Check-specific numbers, JSON-serializable."""

    def to_dict(self) -> dict[str, Any]:
        """Result JSON."""
        return {
            "claim": self.claim_id,
            "description": self.description,
            "passed": self.passed,
            "details": self.details,
        }


def _two_ll(r: int, m: int, threads: int, progress: bool) -> tuple[int, list]:
    records = classify_all(r, m, threads=threads, progress=progress)
    return len(records), [rec.hypergraph for rec in records if rec.is_2ll]


def _same_classes(found: list[UniformHypergraph], expected: list) -> bool:
    return len(found) == len(expected) and all(
        any(is_isomorphic(f, e) for f in found) for e in expected
    )


def _three_edge_exceptions(seed: int, threads: int, progress: bool) -> Outcome:
    total, found = _two_ll(3, 3, threads, progress)
    expected = [make_family(name) for name in WITNESS_ORDERS]
    return _same_classes(found, expected), {
        "classes": total,
        "two_ll": [H.to_dict() for H in found],
    }


def _four_edge_all_2ll(seed: int, threads: int, progress: bool) -> Outcome:
    records = classify_all(3, 4, threads=threads, progress=progress)
    missing = [rec.hypergraph.to_dict() for rec in records if not rec.is_2ll]
    return not missing, {"classes": len(records), "not_two_ll": missing}


def _graph_exceptions(seed: int, threads: int, progress: bool) -> Outcome:
    total, found = _two_ll(2, 3, threads, progress)
    expected = [make_family("lp", 3, r=2)]
    return _same_classes(found, expected), {
        "classes": total,
        "two_ll": [H.to_dict() for H in found],
    }


def _two_edges(seed: int, threads: int, progress: bool) -> Outcome:
    counts = {}
    passed = True
    for r in (2, 3, 4):
        for m in (1, 2):
            total, found = _two_ll(r, m, threads, progress)
            counts[f"r={r},m={m}"] = total
            passed = passed and not found
    return passed, {"classes": counts}


def _witness_orders(seed: int, threads: int, progress: bool) -> Outcome:
    accepted = {
        name: is_2ll_under(make_family(name), VertexOrder.from_sequence(sequence))
        for name, sequence in WITNESS_ORDERS.items()
    }
    return all(accepted.values()), {"accepted": accepted}


def _m3_exhaustion(seed: int, threads: int, progress: bool) -> Outcome:
    H = make_family("matching", 3)
    witnesses = count_witness_orders(H)
    spot_check = random_orders_fail(H, trials=10_000, seed=seed)
    return witnesses == 0 and spot_check, {
        "orders": factorial(H.n),
        "witness_orders": witnesses,
        "random_orders_fail": spot_check,
    }


def _not_2ll_three_edge(threads: int, progress: bool) -> list[UniformHypergraph]:
    records = classify_all(3, 3, threads=threads, progress=progress)
    return [rec.hypergraph for rec in records if not rec.is_2ll]


def _deterministic_construction(seed: int, threads: int, progress: bool) -> Outcome:
    n = 10
    family = deterministic_family(n, 3)
    patterns = _not_2ll_three_edge(threads, progress)
    failures = [
        H.to_dict()
        for H in tqdm(patterns, disable=not progress, desc="Verifying")
        if verify_local(family, H) is not None
    ]
    return family.k == 7 and not failures, {
        "n": n,
        "k": family.k,
        "patterns": len(patterns),
        "failures": failures,
    }


def _lll_constructive(seed: int, threads: int, progress: bool) -> Outcome:
    n, r, h, runs = 8, 3, 4, 100
    expected_k = lll_color_bound(n, r, h)
    clique = make_family("clique", h, r=r)
    failures = []
    for s in tqdm(range(seed, seed + runs), disable=not progress, desc="Sampling"):
        family = lll_sample(n, r, h, seed=s)
        if family.k != expected_k or verify_local(family, clique) is not None:
            failures.append(s)
    return not failures, {"runs": runs, "k": expected_k, "failed_seeds": failures}


def _lift(seed: int, threads: int, progress: bool) -> Outcome:
    rng = np.random.default_rng(seed)
    patterns = [H for H in _not_2ll_three_edge(threads, progress) if H.n <= 7]
    trials, failures = 20, []
    for trial in range(trials):
        T = patterns[int(rng.integers(len(patterns)))]
        c = int(rng.integers(1, 8 - T.n + 1))
        h = T.n + c
        n = int(rng.integers(max(h, 7), 9))
        base = deterministic_family(n, 3, VertexOrder.random(n, rng))
        if verify_local(base, T.with_isolated_vertices(c)) is not None:
            failures.append({"trial": trial, "reason": "base"})
            continue
        anchors = [int(u) for u in rng.choice(n, size=h, replace=False)]
        lifted = product_lift(base, anchors)
        if lifted.k > base.k ** (h + 1) or verify_local(lifted, T) is not None:
            failures.append({"trial": trial, "reason": "lift", "anchors": anchors})
    return not failures, {"trials": trials, "failures": failures}


def _tce_construction(seed: int, threads: int, progress: bool) -> Outcome:
    hosts = list(range(9, 4, -1))
    for n in hosts:
        gamma = pq_coloring_search(n, 3, 4, 3, 6, seed, budget=50_000).coloring
        rho = pq_coloring_search(n, 4, 5, 4, 8, seed, budget=50_000).coloring
        if gamma is not None and rho is not None:
            break
    else:
        logger.warning("No host admitted both colorings within the search budget.")
        return False, {"n": None, "hosts_tried": hosts}

    family = tce_family(n, gamma, rho)
    witness = verify_local(family, make_family("tce"))
    return witness is None and gamma.is_valid() and rho.is_valid(), {
        "n": n,
        "gamma_k": gamma.k,
        "rho_k": rho.k,
        "k": family.k,
    }


def _erdos_rado(seed: int, threads: int, progress: bool) -> Outcome:
    rng = np.random.default_rng(seed)
    n, m, instances = 12, 163, 500
    edges = complete_edges(n, 3)
    failures = []
    for i in tqdm(range(instances), disable=not progress, desc="Sunflowers"):
        chosen = edges[rng.choice(len(edges), size=m, replace=False)]
        H = UniformHypergraph(3, n, tuple(map(tuple, chosen.tolist())))
        witness = find_sunflower(H, 4)
        if (
            witness is None
            or not witness.is_valid()
            or len(witness.petals) != 4
            or not set(witness.petals) <= H.edge_set
        ):
            failures.append(i)
    return not failures, {"instances": instances, "edges": m, "failures": failures}


_SOUNDNESS_PATTERNS = (
    "sp3",
    "sp4_1",
    "sp4_2",
    "sunflower(1,4)",
    "sunflower(2,4)",
    "clique",
)


def _attack_soundness(seed: int, threads: int, progress: bool) -> Outcome:
    rng = np.random.default_rng(seed)
    families, successes, contradictions = 1000, 0, []
    for i in tqdm(range(families), disable=not progress, desc="Attacking"):
        n, k = int(rng.integers(8, 13)), int(rng.integers(1, 5))
        colors = rng.integers(1, k, size=(n, comb(n, 3)), endpoint=True)
        family = ColoringFamily(n, 3, k, colors, provenance="random", seed=seed)
        pattern = str(rng.choice(_SOUNDNESS_PATTERNS))
        if pattern == "clique":
            pattern = f"clique({int(rng.integers(4, n + 1))})"
        witness = attack(family, pattern)
        if witness is None:
            continue
        successes += 1
        exhaustive = verify_local(family, witness.embedding.pattern)
        if (
            not witness.recheck(family)
            or exhaustive is None
            or not exhaustive.recheck(family)
        ):
            contradictions.append({"family": i, "pattern": pattern})
    return not contradictions, {
        "families": families,
        "attack_successes": successes,
        "contradictions": contradictions,
    }


def _crosscheck_instances() -> list[tuple[int, int, UniformHypergraph, int]]:
    instances = []
    for r in (2, 3):
        for m in (1, 2, 3):
            max_n = 5 if m <= 2 else 4
            for H in enumerate_hypergraphs(r, m, max_n):
                for n in range(H.n, max_n + 1):
                    instances.extend((n, r, H, k) for k in range(1, m + 2))
    return instances


def _exhaustive(n: int, r: int, H: UniformHypergraph, k: int) -> Optional[bool]:
    expected = brute_force_exists(n, r, H, k) if H.m <= k <= 2 else None
    if expected is None:
        expected = backtrack_exists(n, r, H, k)
    return expected


def _solver_crosscheck(seed: int, threads: int, progress: bool) -> Outcome:
    sat_verified, unsat_confirmed = 0, 0
    unresolved, disagreements = [], []
    instances = _crosscheck_instances()
    for n, r, H, k in tqdm(instances, disable=not progress, desc="Solving"):
        entry = {"pattern": H.to_dict(), "n": n, "k": k}
        certificate = exists_local_coloring(n, r, H, k)
        if certificate.verdict is SolveVerdict.INCONCLUSIVE:
            unresolved.append(entry)
        elif certificate.verdict is SolveVerdict.SAT:
            if verify_local(certificate.family, H) is None:
                sat_verified += 1
            else:
                disagreements.append(entry)
        else:
            expected = _exhaustive(n, r, H, k)
            if expected is None:
                unresolved.append(entry)
            elif expected:
                disagreements.append(entry)
            else:
                unsat_confirmed += 1
    return not disagreements and not unresolved, {
        "instances": len(instances),
        "sat_verified": sat_verified,
        "unsat_confirmed": unsat_confirmed,
        "unresolved": unresolved,
        "disagreements": disagreements,
    }


CLAIMS: dict[str, Claim] = {
    claim.claim_id: claim
    for claim in (
        Claim(
            "thm1-3edge-exceptions",
            "Exactly TP3, SP3 and LC3 are 2LL among 3-graphs with three edges.",
            _three_edge_exceptions,
        ),
        Claim(
            "four-edge-all-2ll",
            "Every 3-graph with four edges is 2LL.",
            _four_edge_all_2ll,
        ),
        Claim(
            "r2-3edge-exceptions",
            "Exactly the path is 2LL among graphs with three edges.",
            _graph_exceptions,
        ),
        Claim(
            "prop3-two-edges",
            "No hypergraph with at most two edges is 2LL.",
            _two_edges,
        ),
        Claim(
            "witness-orders",
            "The listed orders make TP3, SP3 and LC3 2LL.",
            _witness_orders,
        ),
        Claim(
            "m3-exhaustion",
            "No order of the 3-matching makes it 2LL.",
            _m3_exhaustion,
        ),
        Claim(
            "deterministic-construction",
            "The 7-color deterministic family on 10 vertices is local for every "
            "3-graph with three edges that is not 2LL.",
            _deterministic_construction,
        ),
        Claim(
            "lll-constructive",
            "Resampling terminates and yields local families for K_4 on 8 vertices.",
            _lll_constructive,
        ),
        Claim(
            "lift",
            "Lifting by anchor colorings turns families local for a pattern plus "
            "isolated vertices into families local for the pattern.",
            _lift,
        ),
        Claim(
            "tce-construction",
            "Combining a (4,3)- and a (5,4)-coloring gives a family local for TC_e.",
            _tce_construction,
        ),
        Claim(
            "erdos-rado-163",
            "Every 3-graph with 163 edges has a sunflower with four petals.",
            _erdos_rado,
        ),
        Claim(
            "attack-soundness",
            "Every attack witness re-verifies and agrees with exhaustive checking.",
            _attack_soundness,
        ),
        Claim(
            "solver-crosscheck",
            "Every SAT answer of the solver verifies and every UNSAT answer is "
            "confirmed by exhaustive search, on patterns with at most three edges.",
            _solver_crosscheck,
        ),
    )
}
"""Every reproducible claim, by id."""


def run_claim(
    claim_id: str, seed: int = 0, threads: int = 1, progress: bool = False
) -> ClaimResult:
    """Run the check of a registered claim.

    Parameters
    ----------
    claim_id : str
        Key of `CLAIMS`.
    seed : int, default=0
        Seed of the randomized checks.
    threads : int, default=1
        Worker processes of the classification sweeps.
    progress : bool, default=False
        Show progress bars.

    Returns
    -------
    ClaimResult
        The pass/fail record.

    Raises
    ------
    ValueError
        If the claim id is unknown.
    """
    if claim_id not in CLAIMS:
        raise ValueError(
            f"Unknown claim '{claim_id}', expected one of {', '.join(CLAIMS)}."
        )
    claim = CLAIMS[claim_id]
    passed, details = claim.check(seed, threads, progress)
    logger.info(f"Claim {claim_id}: {'pass' if passed else 'FAIL'}.")
    return ClaimResult(claim_id, claim.description, passed, details)
