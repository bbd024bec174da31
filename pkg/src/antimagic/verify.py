"""Ground truth: induced weights, local antimagic validity, and bounds.

A labeling assigns {1..|E|} bijectively to edges; the weight of a vertex
is the sum of labels on its incident edges.  The labeling is local
antimagic when adjacent vertices get distinct weights, so the weights form
a proper coloring and every lower bound on that coloring bounds the
local antimagic chromatic number from below.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import BudgetExceeded, InfeasibleParameters, LengthMismatch, NotBipartite
from .graphs import Graph


@dataclass(frozen=True)
class WeightColoring:
    weights: tuple[int, ...]
    num_colors: int


@dataclass
class BoundsReport:
    chromatic: Optional[int] = None
    chromatic_exceeded: bool = False
    pendant: int = 1
    clique: Optional[int] = None
    clique_exceeded: bool = False
    parity: int = 0
    bipartite_obstruction: Optional[bool] = None
    star_subgraph: Optional[int] = None  # not a lower bound on the graph
    best_lower: int = 1
    provenance: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "chromatic": self.chromatic,
            "chromatic_exceeded": self.chromatic_exceeded,
            "pendant": self.pendant,
            "clique": self.clique,
            "clique_exceeded": self.clique_exceeded,
            "parity": self.parity,
            "bipartite_obstruction": self.bipartite_obstruction,
            "star_subgraph": self.star_subgraph,
            "best_lower": self.best_lower,
            "provenance": dict(self.provenance),
        }


def induced_weights(g: Graph, labels: Sequence[int]) -> WeightColoring:
    """Weight per vertex under the labeling, plus the distinct count."""
    if len(labels) != g.num_edges:
        raise LengthMismatch(
            f"{len(labels)} labels for {g.num_edges} edges")
    w = [0] * g.num_vertices
    for (u, v), lab in zip(g.edges, labels):
        w[u] += lab
        w[v] += lab
    return WeightColoring(tuple(w), len(set(w)) if w else 0)


def is_bijection(g: Graph, labels: Sequence[int]) -> bool:
    return sorted(labels) == list(range(1, g.num_edges + 1))


def is_local_antimagic(g: Graph, labels: Sequence[int]
                       ) -> tuple[bool, Optional[tuple[int, int]]]:
    """(valid, first offending adjacent pair or None).

    Not a bijection onto {1..|E|} also yields (False, None).
    """
    if len(labels) != g.num_edges or not is_bijection(g, labels):
        return False, None
    w = induced_weights(g, labels).weights
    for u, v in g.edges:
        if w[u] == w[v]:
            return False, (u, v)
    return True, None


def pendant_lower_bound(g: Graph) -> int:
    """Number of degree-1 vertices plus one; 1 when pendant-free so the
    bound composes vacuously."""
    k = sum(1 for d in g.degrees() if d == 1)
    return k + 1 if k else 1


def clique_lower_bound(g: Graph, limit: int = 64) -> int:
    """Maximum clique size via Bron-Kerbosch with pivoting."""
    if g.num_vertices > limit:
        raise BudgetExceeded(f"{g.num_vertices} vertices exceeds clique limit {limit}")
    adj = g.adjacency()
    best = [0]

    def expand(r_size: int, p: set[int], x: set[int]) -> None:
        if not p and not x:
            best[0] = max(best[0], r_size)
            return
        if r_size + len(p) <= best[0]:
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in list(p - adj[pivot]):
            expand(r_size + 1, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    expand(0, set(range(g.num_vertices)), set())
    return best[0]


def _greedy_coloring_bound(g: Graph) -> int:
    adj = g.adjacency()
    order = sorted(range(g.num_vertices), key=lambda v: -len(adj[v]))
    color: dict[int, int] = {}
    for v in order:
        used = {color[u] for u in adj[v] if u in color}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return max(color.values()) + 1 if color else 0


def chromatic_number_exact(g: Graph, limit: int = 30) -> int:
    """Exact chromatic number by k-colorability backtracking, seeded by the
    clique bound (clique vertices are pre-colored to break symmetry)."""
    if g.num_vertices > limit:
        raise BudgetExceeded(f"{g.num_vertices} vertices exceeds chromatic limit {limit}")
    n = g.num_vertices
    if n == 0:
        return 0
    if g.num_edges == 0:
        return 1
    adj = g.adjacency()

    # recover one maximum clique for symmetry breaking
    best_clique: list[int] = []

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        nonlocal best_clique
        if not p and not x:
            if len(r) > len(best_clique):
                best_clique = r[:]
            return
        if len(r) + len(p) <= len(best_clique):
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in list(p - adj[pivot]):
            r.append(v)
            expand(r, p & adj[v], x & adj[v])
            r.pop()
            p.remove(v)
            x.add(v)

    expand([], set(range(n)), set())
    lb = max(2, len(best_clique))
    ub = _greedy_coloring_bound(g)

    def colorable(k: int) -> bool:
        color = [-1] * n
        for i, v in enumerate(best_clique[:k]):
            color[v] = i
        order = sorted((v for v in range(n) if color[v] == -1),
                       key=lambda v: -len(adj[v]))

        def assign(idx: int) -> bool:
            if idx == len(order):
                return True
            # most-constrained remaining vertex
            best_i, best_free = idx, None
            for i in range(idx, len(order)):
                v = order[i]
                used = {color[u] for u in adj[v] if color[u] != -1}
                free = k - len(used)
                if best_free is None or free < best_free:
                    best_i, best_free = i, free
                    if free <= 1:
                        break
            order[idx], order[best_i] = order[best_i], order[idx]
            v = order[idx]
            used = {color[u] for u in adj[v] if color[u] != -1}
            for c in range(k):
                if c in used:
                    continue
                color[v] = c
                if assign(idx + 1):
                    return True
                color[v] = -1
            order[idx], order[best_i] = order[best_i], order[idx]
            return False

        return assign(0)

    for k in range(lb, ub):
        if colorable(k):
            return k
    return ub


def bipartite_two_color_obstruction(g: Graph) -> bool:
    """True when a 2-weight-class labeling is arithmetically impossible:
    q(q+1)/2 must split as x|X| = y|Y| over the bipartition classes."""
    if not g.is_connected():
        raise NotBipartite("obstruction requires a connected bipartite graph")
    parts = g.bipartition()
    if parts is None:
        raise NotBipartite("graph is not bipartite")
    q = g.num_edges
    tot = q * (q + 1) // 2
    nx, ny = len(parts[0]), len(parts[1])
    return tot % nx != 0 or tot % ny != 0


def cycle_parity_lower_bound(g: Graph) -> int:
    """3 with an odd cycle present, 2 with any edge, 0 when edgeless."""
    if g.num_edges == 0:
        return 0
    return 2 if g.bipartition() is not None else 3


def union_lower_bound(component_values: Sequence[int]) -> int:
    """A disjoint union is at least as hard as its hardest component."""
    return max(component_values) if component_values else 0


def star_subgraph_bound(g: Graph) -> int:
    """Delta(G) + 1: the chi_la of the star subgraph at a max-degree vertex.

    Not a lower bound for chi_la(G); it witnesses that subgraphs can need
    more colors than the host graph.
    """
    deg = g.degrees()
    delta = max(deg) if deg else 0
    if delta < 2:
        raise InfeasibleParameters("star subgraph bound needs a vertex of degree >= 2")
    return delta + 1


def bounds_report(g: Graph, chromatic_limit: int = 30, clique_limit: int = 64) -> BoundsReport:
    """Aggregate every applicable lower bound with provenance."""
    rep = BoundsReport()
    rep.pendant = pendant_lower_bound(g)
    rep.provenance["pendant"] = "pendant count + 1"
    try:
        rep.clique = clique_lower_bound(g, limit=clique_limit)
        rep.provenance["clique"] = "maximum clique (Bron-Kerbosch)"
    except BudgetExceeded:
        rep.clique_exceeded = True
    try:
        rep.chromatic = chromatic_number_exact(g, limit=chromatic_limit)
        rep.provenance["chromatic"] = "exact chromatic number"
    except BudgetExceeded:
        rep.chromatic_exceeded = True
    rep.parity = cycle_parity_lower_bound(g)
    rep.provenance["parity"] = "odd cycle => 3, any edge => 2"
    try:
        rep.bipartite_obstruction = bipartite_two_color_obstruction(g)
        rep.provenance["bipartite_obstruction"] = "q(q+1)/2 divisibility over classes"
    except NotBipartite:
        rep.bipartite_obstruction = None
    try:
        rep.star_subgraph = star_subgraph_bound(g)
    except InfeasibleParameters:
        rep.star_subgraph = None
    candidates = [1, rep.pendant, rep.parity]
    if rep.clique is not None:
        candidates.append(rep.clique)
    if rep.chromatic is not None:
        candidates.append(rep.chromatic)
    if rep.bipartite_obstruction:
        candidates.append(3)
    rep.best_lower = max(candidates)
    return rep


def labeling_report(g: Graph, labels: Sequence[int]) -> dict:
    """Full verification report (JSON-shaped) for a graph plus labeling."""
    bijection = len(labels) == g.num_edges and is_bijection(g, labels)
    weights: Optional[WeightColoring] = None
    proper = False
    violation = None
    if len(labels) == g.num_edges:
        weights = induced_weights(g, labels)
        proper = True
        for u, v in g.edges:
            if weights.weights[u] == weights.weights[v]:
                proper = False
                violation = [u, v]
                break
    bounds = bounds_report(g)
    return {
        "bijection": bijection,
        "proper": proper,
        "weights": list(weights.weights) if weights else None,
        "num_colors": weights.num_colors if weights else None,
        "bounds": bounds.to_json_dict(),
        "first_violation": violation,
    }
