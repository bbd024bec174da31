"""Exact local antimagic chromatic number by exhaustive labeled search.

For k = best_lower, best_lower+1, ... the solver runs a depth-first search
assigning labels to edges (most-constrained edge first); a vertex weight
finalizes when its last incident edge is labeled.  The first k admitting a
valid labeling is exact.  This is the independent oracle every
construction is checked against at desk scale.
"""
from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (BudgetExceeded, InfeasibleParameters,
                     NoValidLabelingFound, TooLarge)
from .graphs import Graph
from .verify import bounds_report, induced_weights, is_local_antimagic

PRUNE_ADJACENT = "adjacent"      # adjacent finalized weights equal
PRUNE_COLORS = "colors"          # more than k distinct finalized weights
PRUNE_LOOKAHEAD = "lookahead"    # one-edge-left vertices with no viable label
ALL_PRUNES = frozenset({PRUNE_ADJACENT, PRUNE_COLORS, PRUNE_LOOKAHEAD})


@dataclass
class SolveResult:
    chi_la: int
    witness: Optional[tuple[int, ...]]
    nodes_explored: int
    status: str  # "exact" | "bound-only" | "budget-exceeded"

    def to_json_dict(self) -> dict:
        return {
            "chi_la": self.chi_la,
            "status": self.status,
            "witness": list(self.witness) if self.witness else None,
            "nodes": self.nodes_explored,
        }


def _workers_from_env() -> int:
    try:
        return max(1, int(os.environ.get("ANTIMAGIC_THREADS", "1")))
    except ValueError:
        return 1


class _Search:
    """One DFS over label assignments for a fixed color budget k."""

    def __init__(self, g: Graph, k: int, prunes: frozenset,
                 deadline: Optional[float]):
        self.g = g
        self.k = k
        self.prunes = prunes
        self.deadline = deadline
        self.E = g.num_edges
        self.adj = g.adjacency()
        self.incident = g.incident_edges()
        self.edges = g.edges
        self.nodes = 0

    def run(self, first_labels: Optional[Sequence[int]] = None
            ) -> Optional[tuple[int, ...]]:
        E = self.E
        self.assigned = [0] * E
        self.is_set = [False] * E
        self.weight = [0] * self.g.num_vertices
        self.left = [len(inc) for inc in self.incident]
        self.used = [False] * (E + 1)
        first_edge = self._pick_edge()
        if first_edge is None:
            return tuple()
        labels = first_labels if first_labels is not None else range(1, E + 1)
        for lab in labels:
            got = self._try(first_edge, lab, 0)
            if got is not None:
                return got
        return None

    def _pick_edge(self) -> Optional[int]:
        best, best_key = None, None
        for idx in range(self.E):
            if self.is_set[idx]:
                continue
            u, v = self.edges[idx]
            key = (min(self.left[u], self.left[v]), idx)
            if best_key is None or key < best_key:
                best, best_key = idx, key
        return best

    def _conflict(self, done: list[int]) -> bool:
        w, adj = self.weight, self.adj
        if PRUNE_ADJACENT in self.prunes:
            for v in done:
                for u in adj[v]:
                    if self.left[u] == 0 and w[u] == w[v]:
                        return True
        if PRUNE_COLORS in self.prunes:
            distinct = {w[v] for v in range(self.g.num_vertices)
                        if self.left[v] == 0}
            if len(distinct) > self.k:
                return True
        if PRUNE_LOOKAHEAD in self.prunes:
            for v in set(u for d in done for u in adj[d]) | set(done):
                if self.left[v] != 1:
                    continue
                banned = {w[u] - w[v] for u in adj[v] if self.left[u] == 0}
                if all(lab in banned or self.used[lab]
                       for lab in range(1, self.E + 1)):
                    return True
        return False

    def _try(self, idx: int, lab: int, depth: int) -> Optional[tuple[int, ...]]:
        if self.used[lab]:
            return None
        self.nodes += 1
        if self.deadline is not None and self.nodes % 2048 == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExceeded("time budget exhausted")
        u, v = self.edges[idx]
        self.assigned[idx] = lab
        self.is_set[idx] = True
        self.used[lab] = True
        self.weight[u] += lab
        self.weight[v] += lab
        self.left[u] -= 1
        self.left[v] -= 1
        done = [x for x in (u, v) if self.left[x] == 0]
        try:
            if not self._conflict(done):
                if depth + 1 == self.E:
                    ok, _ = is_local_antimagic(self.g, tuple(self.assigned))
                    if ok:
                        wc = induced_weights(self.g, tuple(self.assigned))
                        if wc.num_colors <= self.k:
                            return tuple(self.assigned)
                else:
                    nxt = self._pick_edge()
                    for nlab in range(1, self.E + 1):
                        got = self._try(nxt, nlab, depth + 1)
                        if got is not None:
                            return got
        finally:
            self.left[u] += 1
            self.left[v] += 1
            self.weight[u] -= lab
            self.weight[v] -= lab
            self.used[lab] = False
            self.is_set[idx] = False
            self.assigned[idx] = 0
        return None


def chi_la_exact(g: Graph, max_edges: int = 12,
                 time_budget_s: Optional[float] = None,
                 workers: Optional[int] = None,
                 prunes: frozenset = ALL_PRUNES) -> SolveResult:
    """Exact chi_la by iterative deepening over the color budget.

    Workers (or ANTIMAGIC_THREADS) fan the first edge's label choices out
    over threads; the combined result is bit-identical to the sequential
    run because the smallest successful first label wins.
    """
    if g.has_k2_component():
        raise InfeasibleParameters("chi_la is undefined on graphs with a K_2 component")
    if g.num_edges > max_edges:
        raise TooLarge(f"{g.num_edges} edges exceeds max_edges={max_edges}")
    if g.num_edges == 0:
        return SolveResult(1 if g.num_vertices else 0, tuple(), 0, "exact")
    if workers is None:
        workers = _workers_from_env()
    deadline = time.monotonic() + time_budget_s if time_budget_s else None
    lower = max(bounds_report(g).best_lower, 1)
    total_nodes = 0
    for k in range(lower, g.num_vertices + 1):
        try:
            if workers <= 1:
                search = _Search(g, k, prunes, deadline)
                witness = search.run()
                total_nodes += search.nodes
            else:
                witness, nodes = _parallel_round(g, k, prunes, deadline, workers)
                total_nodes += nodes
        except BudgetExceeded:
            return SolveResult(k, None, total_nodes, "budget-exceeded")
        if witness is not None:
            return SolveResult(k, witness, total_nodes, "exact")
    return SolveResult(g.num_vertices, None, total_nodes, "bound-only")


def _parallel_round(g: Graph, k: int, prunes: frozenset,
                    deadline: Optional[float], workers: int
                    ) -> tuple[Optional[tuple[int, ...]], int]:
    """Split the first edge's labels across threads; the witness from the
    smallest successful first label is returned, matching sequential order."""
    E = g.num_edges

    def branch(lab: int) -> Optional[tuple[int, ...]]:
        search = _Search(g, k, prunes, deadline)
        got = search.run(first_labels=[lab])
        branch_nodes[lab] = search.nodes
        return got

    branch_nodes: dict[int, int] = {}
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(branch, range(1, E + 1)))
    nodes = sum(branch_nodes.values())
    for lab, got in enumerate(results, start=1):
        if got is not None:
            return got, nodes
    return None, nodes


def chi_la_upper_heuristic(g: Graph, iterations: int, seed: int) -> SolveResult:
    """Randomized-restart hill climbing on (violations, colors); the best
    valid labeling found gives an upper bound (status bound-only)."""
    if g.has_k2_component():
        raise InfeasibleParameters("chi_la is undefined on graphs with a K_2 component")
    E = g.num_edges
    rng = random.Random(seed)
    best: Optional[tuple[int, ...]] = None
    best_colors = None
    swaps = 0

    def score(labels: list[int]) -> tuple[int, int]:
        wc = induced_weights(g, labels)
        bad = sum(1 for u, v in g.edges if wc.weights[u] == wc.weights[v])
        return bad, wc.num_colors

    for _ in range(iterations):
        labels = list(range(1, E + 1))
        rng.shuffle(labels)
        cur = score(labels)
        improved = True
        while improved:
            improved = False
            for i in range(E):
                for j in range(i + 1, E):
                    labels[i], labels[j] = labels[j], labels[i]
                    swaps += 1
                    cand = score(labels)
                    if cand < cur:
                        cur = cand
                        improved = True
                    else:
                        labels[i], labels[j] = labels[j], labels[i]
        if cur[0] == 0 and (best_colors is None or cur[1] < best_colors):
            best, best_colors = tuple(labels), cur[1]
    if best is None:
        raise NoValidLabelingFound(
            f"no valid labeling found in {iterations} restarts")
    return SolveResult(best_colors, best, swaps, "bound-only")


def verify_claim(g: Graph, claimed: int, max_edges: int = 12,
                 time_budget_s: Optional[float] = None) -> str:
    """'confirmed' | 'refuted' | 'unknown' against the exact oracle."""
    try:
        result = chi_la_exact(g, max_edges=max_edges, time_budget_s=time_budget_s)
    except (TooLarge, BudgetExceeded):
        return "unknown"
    if result.status != "exact":
        return "unknown"
    return "confirmed" if result.chi_la == claimed else "refuted"
