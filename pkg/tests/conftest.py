"""Shared desk graphs, brute-force oracles, and corpus builders.

The oracles re-derive answers by exhaustive enumeration with none of the
library's pruning, so agreement is meaningful: perfect matchings by direct
recursion, simple paths via networkx, elementary subgraphs by scanning every
edge subset.
"""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
from hypothesis import settings

from hermix import (
    GraphDocument,
    Matching,
    MixedGraph,
    canonical_cycle,
    generate_instance,
    is_co_augmenting,
)
from hermix.errors import GenerationFailed

settings.register_profile("pkg", deadline=None, max_examples=60)
settings.load_profile("pkg")


# -- desk graphs ------------------------------------------------------------


def k2_digon() -> MixedGraph:
    return MixedGraph(2, digons=[(0, 1)])


def k2_arc() -> MixedGraph:
    return MixedGraph(2, arcs=[(0, 1)])


def p4() -> MixedGraph:
    return MixedGraph(4, digons=[(0, 1), (1, 2), (2, 3)])


def c6_two_pendants(cycle_arcs=()) -> MixedGraph:
    """Hexagon 0..5 with pendants 6 on 0 and 7 on 3; two pegs.

    cycle_arcs replaces those digons by arcs, e.g. ((0, 1),) or ((1, 0),).
    """
    cycle = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]
    keyed = {tuple(sorted(e)) for e in cycle_arcs}
    digons = [e for e in cycle if e not in keyed] + [(0, 6), (3, 7)]
    return MixedGraph(8, digons=digons, arcs=list(cycle_arcs))


def c4_four_pendants() -> MixedGraph:
    return MixedGraph(
        8, digons=[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 5), (2, 6), (3, 7)]
    )


def c6_four_pendants() -> MixedGraph:
    return MixedGraph(
        10,
        digons=[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (0, 5),
            (0, 6),
            (1, 7),
            (2, 8),
            (3, 9),
        ],
    )


def c8_two_adjacent_pendants(cycle_arcs=()) -> MixedGraph:
    cycle = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 7)]
    keyed = {tuple(sorted(e)) for e in cycle_arcs}
    digons = [e for e in cycle if e not in keyed] + [(0, 8), (1, 9)]
    return MixedGraph(10, digons=digons, arcs=list(cycle_arcs))


def pentagon_tail() -> MixedGraph:
    """Non-bipartite, unique perfect matching, determinant 1 at any order.

    Pentagon 1-2-3-4-5 with the single arc 1->2, pendant 0 on 1, tail 5-6-7.
    """
    return MixedGraph(
        8,
        digons=[(0, 1), (2, 3), (3, 4), (4, 5), (1, 5), (5, 6), (6, 7)],
        arcs=[(1, 2)],
    )


# -- brute-force oracles ------------------------------------------------------


def all_perfect_matchings(x: MixedGraph) -> list[frozenset]:
    """Every perfect matching of the underlying graph, by direct recursion."""
    out: list[frozenset] = []

    def grow(free: frozenset, acc: list):
        if not free:
            out.append(frozenset(acc))
            return
        v = min(free)
        for w in x.neighbors(v):
            if w in free:
                acc.append((v, w) if v < w else (w, v))
                grow(free - {v, w}, acc)
                acc.pop()

    grow(frozenset(range(x.n)), [])
    return out


def to_networkx(x: MixedGraph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(x.n))
    g.add_edges_from(x.underlying_edges())
    return g


def simple_paths_oracle(x: MixedGraph, i: int, j: int) -> list[tuple[int, ...]]:
    return sorted(tuple(p) for p in nx.all_simple_paths(to_networkx(x), i, j))


def coaug_paths_oracle(x: MixedGraph, m: Matching, i: int, j: int):
    return [p for p in simple_paths_oracle(x, i, j) if is_co_augmenting(p, m)]


def spanning_elementary_oracle(x: MixedGraph) -> set:
    """Canonical decompositions of every spanning elementary subgraph,
    found by checking all 2^|E| edge subsets."""
    edges = x.underlying_edges()
    found = set()
    for r in range(len(edges) + 1):
        for subset in combinations(edges, r):
            deg = [0] * x.n
            adj = [[] for _ in range(x.n)]
            for u, v in subset:
                deg[u] += 1
                deg[v] += 1
                adj[u].append(v)
                adj[v].append(u)
            if any(d not in (1, 2) for d in deg):
                continue
            seen = [False] * x.n
            singles, cycles = [], []
            ok = True
            for root in range(x.n):
                if seen[root]:
                    continue
                comp = [root]
                seen[root] = True
                stack = [root]
                while stack:
                    v = stack.pop()
                    for w in adj[v]:
                        if not seen[w]:
                            seen[w] = True
                            comp.append(w)
                            stack.append(w)
                comp_edges = [e for e in subset if e[0] in comp and e[1] in comp]
                if len(comp) == 2 and len(comp_edges) == 1:
                    singles.append(comp_edges[0])
                elif len(comp) >= 3 and all(deg[v] == 2 for v in comp):
                    walk = [comp[0]]
                    prev = None
                    while len(walk) < len(comp):
                        nxt = [w for w in adj[walk[-1]] if w != prev]
                        prev = walk[-1]
                        walk.append(nxt[0])
                    cycles.append(canonical_cycle(walk).vertices)
                else:
                    ok = False
                    break
            if ok:
                found.add((frozenset(singles), frozenset(cycles)))
    return found


def library_elementary_canonical(subs) -> set:
    return {
        (frozenset(s.edges), frozenset(c.vertices for c in s.cycles)) for s in subs
    }


# -- random samplers and corpora ---------------------------------------------


def random_mixed_graph(rng: random.Random, n: int, p: float = 0.45) -> MixedGraph:
    digons, arcs = [], []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() >= p:
                continue
            kind = rng.randrange(3)
            if kind == 0:
                digons.append((u, v))
            elif kind == 1:
                arcs.append((u, v))
            else:
                arcs.append((v, u))
    return MixedGraph(n, digons, arcs)


def h_corpus(
    count: int, sizes, unicyclic: bool, seed0: int = 0
) -> list[GraphDocument]:
    """Deterministic list of generated instances; skips seeds the generator
    rejects so the corpus is stable."""
    docs = []
    seed = seed0
    k = 0
    while len(docs) < count:
        n = sizes[k % len(sizes)]
        try:
            docs.append(generate_instance(seed, n, unicyclic))
        except GenerationFailed:
            pass
        seed += 1
        k += 1
    return docs


def two_peg_instance(m: int, r: int, seed: int, chain: bool = False) -> MixedGraph:
    """Cycle of length 2m, pendant matching edges at cycle positions 0 and r
    (r odd), remaining cycle vertices tiled by matching edges; non-matching
    cycle edges become arcs by seeded coin flips.

    chain appends one extra matched pair beyond the first pendant.
    """
    if r % 2 == 0:
        raise ValueError("pegs must sit an odd distance apart on the cycle")
    size = 2 * m
    rng = random.Random(seed)
    cycle_edges = [(t, (t + 1) % size) for t in range(size)]
    matched = set()
    t = 1
    while t < r:
        matched.add((t, t + 1))
        t += 2
    t = r + 1
    while t < size:
        matched.add((t, (t + 1) % size))
        t += 2
    digons = [(0, size), (r, size + 1)]
    n = size + 2
    if chain:
        digons += [(size, size + 2), (size + 2, size + 3)]
        n += 2
    arcs = []
    for u, v in cycle_edges:
        if (u, v) in matched:
            digons.append((u, v))
        elif rng.random() < 0.5:
            digons.append((u, v))
        else:
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return MixedGraph(n, digons, arcs)


def cycle_with_pendants(half: int, pendant_at, cycle_arcs=()) -> MixedGraph:
    """Cycle of length 2*half with a pendant matching edge on each listed
    cycle vertex; remaining cycle vertices must tile into matching edges."""
    size = 2 * half
    cycle = [(t, (t + 1) % size) for t in range(size)]
    keyed = {tuple(sorted(e)) for e in cycle_arcs}
    digons = [e if e[0] < e[1] else (e[1], e[0]) for e in cycle]
    digons = [e for e in digons if e not in keyed]
    n = size
    for v in pendant_at:
        digons.append((v, n))
        n += 1
    return MixedGraph(n, digons=digons, arcs=list(cycle_arcs))
