"""Graph model and generators for every labeled family.

Vertices are 0-based integers.  Edges are stored as (u, v) pairs with
u < v, in a fixed canonical order; labelings are index-aligned lists over
that order.  Base generators emit lexicographically sorted edge lists.
The corona and join products instead keep the original edges first (so an
existing labeling of the base graph embeds as a prefix) followed by the
new edges in a documented grouped order.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .errors import InfeasibleParameters

Edge = tuple[int, int]


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph with a canonical edge order.

    ``tags`` maps vertex index to a role string ("center", "pendant",
    "shared", ...).  ``tour`` (necklaces only) lists edge indices in
    Eulerian tour order.  Instances are treated as immutable.
    """

    num_vertices: int
    edges: tuple[Edge, ...]
    tags: Mapping[int, str] = field(default_factory=dict)
    tour: Optional[tuple[int, ...]] = None

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def validate(self) -> None:
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < v < self.num_vertices):
                raise ValueError(f"bad edge ({u}, {v}) for n={self.num_vertices}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        for x in self.tags:
            if not 0 <= x < self.num_vertices:
                raise ValueError(f"tag on unknown vertex {x}")
        if self.tour is not None:
            if sorted(self.tour) != list(range(len(self.edges))):
                raise ValueError("tour is not a permutation of edge indices")

    def degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def incident_edges(self) -> list[list[int]]:
        """Edge indices incident to each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return inc

    def components(self) -> list[list[int]]:
        adj = self.adjacency()
        seen = [False] * self.num_vertices
        comps = []
        for s in range(self.num_vertices):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def has_k2_component(self) -> bool:
        deg = self.degrees()
        return any(len(c) == 2 and deg[c[0]] == 1 and deg[c[1]] == 1
                   for c in self.components())

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def bipartition(self) -> Optional[tuple[list[int], list[int]]]:
        """Two color classes if bipartite (graph-wide), else None."""
        adj = self.adjacency()
        color = [-1] * self.num_vertices
        for s in range(self.num_vertices):
            if color[s] != -1:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if color[y] == -1:
                        color[y] = 1 - color[x]
                        stack.append(y)
                    elif color[y] == color[x]:
                        return None
        left = [i for i in range(self.num_vertices) if color[i] == 0]
        right = [i for i in range(self.num_vertices) if color[i] == 1]
        return left, right

    def graph_hash(self) -> str:
        payload = json.dumps({"n": self.num_vertices, "edges": list(map(list, self.edges))},
                             separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()

    def to_json_dict(self) -> dict:
        out: dict = {
            "n": self.num_vertices,
            "edges": [list(e) for e in self.edges],
            "tags": {str(v): role for v, role in sorted(self.tags.items())},
        }
        if self.tour is not None:
            out["tour"] = list(self.tour)
        return out

    @staticmethod
    def from_json_dict(data: dict) -> "Graph":
        g = Graph(
            num_vertices=int(data["n"]),
            edges=tuple((int(u), int(v)) for u, v in data["edges"]),
            tags={int(k): str(v) for k, v in data.get("tags", {}).items()},
            tour=tuple(data["tour"]) if "tour" in data else None,
        )
        g.validate()
        return g


def _sorted_edges(edges: Iterable[Edge]) -> tuple[Edge, ...]:
    return tuple(sorted((min(u, v), max(u, v)) for u, v in edges))


@dataclass(frozen=True)
class NecklaceSpec:
    """Chain of t >= 2 cycles, consecutive ones sharing one vertex.

    ``splits[i]`` gives the (upper, lower) edge counts of cycle i along the
    two tour passes; middle cycles need both >= 2 so no two degree-4
    vertices become adjacent.
    """

    cycle_lengths: tuple[int, ...]
    splits: tuple[tuple[int, int], ...] = ()

    def with_default_splits(self) -> "NecklaceSpec":
        if self.splits:
            return self
        splits = tuple(((n + 1) // 2, n // 2) for n in self.cycle_lengths)
        return NecklaceSpec(self.cycle_lengths, splits)

    def validate(self) -> None:
        t = len(self.cycle_lengths)
        if t < 2:
            raise InfeasibleParameters("necklace needs at least 2 cycles")
        if len(self.splits) != t:
            raise InfeasibleParameters("one (upper, lower) split per cycle required")
        for i, (n, (up, lo)) in enumerate(zip(self.cycle_lengths, self.splits)):
            if n < 3:
                raise InfeasibleParameters(f"cycle {i} shorter than 3")
            if up + lo != n or up < 1 or lo < 1:
                raise InfeasibleParameters(f"bad split {up}+{lo} for cycle of length {n}")
            if 0 < i < t - 1 and (up < 2 or lo < 2):
                raise InfeasibleParameters(
                    "middle cycle splits must be >= 2 (adjacent degree-4 vertices)")

    @property
    def length(self) -> int:
        return sum(self.cycle_lengths)


def build_union_paths(r: int, n: int) -> Graph:
    """r disjoint paths on n vertices each; vertex i of path j is j*n+i."""
    if r < 1 or n < 2:
        raise InfeasibleParameters("need r >= 1 and n >= 2")
    edges = [(j * n + i, j * n + i + 1) for j in range(r) for i in range(n - 1)]
    g = Graph(r * n, _sorted_edges(edges))
    g.validate()
    return g


def build_union_cycles(r: int, n: int) -> Graph:
    """r disjoint cycles of length n; vertex i of cycle j is j*n+i."""
    if r < 1 or n < 3:
        raise InfeasibleParameters("cycles need n >= 3")
    edges = []
    for j in range(r):
        base = j * n
        for i in range(n):
            edges.append((base + i, base + (i + 1) % n))
    g = Graph(r * n, _sorted_edges(edges))
    g.validate()
    return g


def build_union_stars(r: int, n: int) -> Graph:
    """r copies of K_{1,n}; centers tagged "center", leaves "pendant"."""
    if r < 1 or n < 2:
        raise InfeasibleParameters("stars need n >= 2 (n = 1 gives K_2 components)")
    edges = []
    tags = {}
    for j in range(r):
        c = j * (n + 1)
        tags[c] = "center"
        for i in range(1, n + 1):
            edges.append((c, c + i))
            tags[c + i] = "pendant"
    g = Graph(r * (n + 1), _sorted_edges(edges), tags)
    g.validate()
    return g


def build_complete(n: int) -> Graph:
    if n < 3:
        raise InfeasibleParameters("complete graphs need n >= 3")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    g = Graph(n, tuple(edges))
    g.validate()
    return g


def build_union_complete_bipartite(r: int, m: int, n: int) -> Graph:
    """r disjoint copies of K_{m,n}; partite sets tagged part0/part1."""
    if r < 1 or m < 1 or n < 1 or (m, n) == (1, 1):
        raise InfeasibleParameters("need r >= 1 and (m, n) != (1, 1)")
    edges = []
    tags = {}
    for k in range(r):
        base = k * (m + n)
        for i in range(m):
            tags[base + i] = "part0"
        for j in range(n):
            tags[base + m + j] = "part1"
        for i in range(m):
            for j in range(n):
                edges.append((base + i, base + m + j))
    g = Graph(r * (m + n), _sorted_edges(edges), tags)
    g.validate()
    return g


def build_complete_multipartite(parts: list[int]) -> Graph:
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise InfeasibleParameters("need at least 2 positive parts")
    offsets = [0]
    for p in parts:
        offsets.append(offsets[-1] + p)
    tags = {}
    for k, p in enumerate(parts):
        for i in range(offsets[k], offsets[k] + p):
            tags[i] = f"part{k}"
    edges = []
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            for u in range(offsets[a], offsets[a + 1]):
                for v in range(offsets[b], offsets[b + 1]):
                    edges.append((u, v))
    g = Graph(offsets[-1], _sorted_edges(edges), tags)
    g.validate()
    return g


def build_necklace(spec: NecklaceSpec) -> Graph:
    """u,v-necklace with an Eulerian tour attached.

    The tour starts at u, runs along the upper path of each cycle left to
    right to v, then back along the lower paths right to left.  Vertices
    are numbered in order of first visit; ``tour`` holds canonical edge
    indices in tour order.
    """
    spec = spec.with_default_splits()
    spec.validate()
    t = len(spec.cycle_lengths)
    next_id = 0

    def fresh() -> int:
        nonlocal next_id
        next_id += 1
        return next_id - 1

    u = fresh()
    shared = [u]
    walk = [u]
    for i in range(t):
        up, _ = spec.splits[i]
        for _ in range(up - 1):
            walk.append(fresh())
        s = fresh()
        shared.append(s)
        walk.append(s)
    v = shared[-1]
    for i in range(t - 1, -1, -1):
        _, lo = spec.splits[i]
        for _ in range(lo - 1):
            walk.append(fresh())
        walk.append(shared[i])
    assert walk[-1] == u
    tour_edges = [(walk[k], walk[k + 1]) for k in range(len(walk) - 1)]
    edges = _sorted_edges(tour_edges)
    index = {e: i for i, e in enumerate(edges)}
    tour = tuple(index[(min(a, b), max(a, b))] for a, b in tour_edges)
    tags = {u: "u", v: "v"}
    for s in shared[1:-1]:
        tags[s] = "shared"
    g = Graph(next_id, edges, tags, tour=tour)
    g.validate()
    return g


def corona_with_empty(g: Graph, m: int) -> Graph:
    """G with m new pendant neighbors per vertex.

    Original edges keep their positions; pendant edges follow grouped by
    base vertex then pendant index, so a labeling of G embeds as a prefix.
    """
    if m < 1:
        raise InfeasibleParameters("corona needs m >= 1")
    p = g.num_vertices
    edges = list(g.edges)
    tags = dict(g.tags)
    for i in range(p):
        for j in range(m):
            w = p + i * m + j
            edges.append((i, w))
            tags[w] = "pendant"
    out = Graph(p + m * p, tuple(edges), tags)
    out.validate()
    return out


def join_with_empty(g: Graph, q: int) -> Graph:
    """G + empty graph on q vertices: each new vertex adjacent to all of G.

    Old edges first; join edges grouped by new vertex then old index.
    """
    if q < 1:
        raise InfeasibleParameters("join needs q >= 1")
    p = g.num_vertices
    edges = list(g.edges)
    for j in range(q):
        for i in range(p):
            edges.append((i, p + j))
    out = Graph(p + q, tuple(edges), dict(g.tags))
    out.validate()
    return out


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; g2's vertices shifted, canonical lex order restored."""
    shift = g1.num_vertices
    edges = list(g1.edges) + [(u + shift, v + shift) for u, v in g2.edges]
    tags = dict(g1.tags)
    tags.update({v + shift: role for v, role in g2.tags.items()})
    out = Graph(g1.num_vertices + g2.num_vertices, _sorted_edges(edges), tags)
    out.validate()
    return out
