"""Mixed graphs: undirected digons plus directed arcs on dense vertex ids 0..n-1."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import (
    BadVertexId,
    DuplicateEdge,
    NotUnicyclic,
    SameVertex,
    SelfLoop,
)


class MixedGraph:
    """Immutable mixed graph. At most one edge (digon or arc) per vertex pair."""

    __slots__ = ("n", "digons", "arcs", "_adj", "_kind")

    def __init__(self, n: int, digons: Iterable = (), arcs: Iterable = ()):
        if not isinstance(n, int) or n < 0:
            raise BadVertexId(f"vertex count must be a nonnegative integer, got {n!r}")
        self.n = n
        seen: set[tuple[int, int]] = set()
        kind: dict[tuple[int, int], int] = {}
        digon_set = set()
        for u, v in digons:
            key = self._edge_key(u, v)
            if key in seen:
                raise DuplicateEdge(f"pair {key} used more than once")
            seen.add(key)
            digon_set.add(key)
            kind[key] = 0
        arc_set = set()
        for u, v in arcs:
            key = self._edge_key(u, v)
            if key in seen:
                raise DuplicateEdge(f"pair {key} used more than once")
            seen.add(key)
            arc_set.add((u, v))
            kind[key] = 1 if (u, v) == key else -1
        self.digons = frozenset(digon_set)
        self.arcs = frozenset(arc_set)
        self._kind = kind
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    def _edge_key(self, u, v) -> tuple[int, int]:
        for w in (u, v):
            if not isinstance(w, int) or not 0 <= w < self.n:
                raise BadVertexId(f"vertex {w!r} outside 0..{self.n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        return (u, v) if u < v else (v, u)

    # -- structure queries ----------------------------------------------------

    def check_vertex(self, v) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise BadVertexId(f"vertex {v!r} outside 0..{self.n - 1}")
        return v

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[self.check_vertex(v)]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return self.hermitian_exponent(u, v) is not None

    def hermitian_exponent(self, u: int, v: int) -> int | None:
        """Power of alpha at matrix position (u, v): 0 digon, +1 arc u->v,
        -1 arc v->u, None when the pair carries no edge."""
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            return None
        key = (u, v) if u < v else (v, u)
        k = self._kind.get(key)
        if k is None:
            return None
        return k if u < v else -k

    def underlying_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._kind))

    @property
    def edge_count(self) -> int:
        return len(self._kind)

    def underlying(self) -> "MixedGraph":
        """Forget orientations: every arc becomes a digon."""
        return MixedGraph(self.n, self.underlying_edges(), ())

    # -- value semantics --------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.digons == other.digons
            and self.arcs == other.arcs
        )

    def __hash__(self):
        return hash((self.n, self.digons, self.arcs))

    def __repr__(self):
        return (
            f"MixedGraph(n={self.n}, digons={sorted(self.digons)}, "
            f"arcs={sorted(self.arcs)})"
        )


class InducedSubgraph(NamedTuple):
    graph: MixedGraph
    kept: tuple[int, ...]  # kept[new_id] = old_id


def remove_vertices(x: MixedGraph, drop: Iterable[int]) -> InducedSubgraph:
    """Induced subgraph on the complement of ``drop``, ids remapped densely."""
    dropped = {x.check_vertex(v) for v in drop}
    kept = tuple(v for v in range(x.n) if v not in dropped)
    new_id = {old: i for i, old in enumerate(kept)}
    digons = [
        (new_id[u], new_id[v])
        for u, v in x.digons
        if u not in dropped and v not in dropped
    ]
    arcs = [
        (new_id[u], new_id[v])
        for u, v in x.arcs
        if u not in dropped and v not in dropped
    ]
    return InducedSubgraph(MixedGraph(len(kept), digons, arcs), kept)


def enumerate_paths(x: MixedGraph, i: int, j: int) -> list[tuple[int, ...]]:
    """All simple paths i..j in the underlying graph, lexicographic order."""
    x.check_vertex(i)
    x.check_vertex(j)
    if i == j:
        raise SameVertex(f"need two distinct endpoints, got {i} twice")
    out: list[tuple[int, ...]] = []
    path = [i]
    on_path = {i}

    def walk(cur: int) -> None:
        for w in x.neighbors(cur):
            if w == j:
                out.append(tuple(path) + (j,))
            elif w not in on_path:
                path.append(w)
                on_path.add(w)
                walk(w)
                on_path.remove(w)
                path.pop()

    walk(i)
    return out


def is_connected(x: MixedGraph) -> bool:
    if x.n == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in x.neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == x.n


@dataclass(frozen=True)
class Cycle:
    """A cycle given by its canonical vertex rotation.

    Canonical means: smallest vertex first, second vertex is the smaller of the
    first vertex's two cycle neighbors.
    """

    vertices: tuple[int, ...]

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.vertices

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        vs = self.vertices
        pairs = []
        for k in range(len(vs)):
            u, v = vs[k], vs[(k + 1) % len(vs)]
            pairs.append((u, v) if u < v else (v, u))
        return tuple(sorted(pairs))

    def closed_walk(self) -> tuple[int, ...]:
        return self.vertices + (self.vertices[0],)


def canonical_cycle(vertices: Iterable[int]) -> Cycle:
    """Rotate/reflect a cyclic vertex sequence into canonical form."""
    vs = list(vertices)
    k = vs.index(min(vs))
    vs = vs[k:] + vs[:k]
    if len(vs) > 2 and vs[-1] < vs[1]:
        vs = [vs[0]] + vs[:0:-1]
    return Cycle(tuple(vs))


def unique_cycle(x: MixedGraph) -> Cycle:
    """The single cycle of a connected unicyclic graph (|E| = |V|)."""
    if x.n == 0 or not is_connected(x):
        raise NotUnicyclic("underlying graph is not connected")
    if x.edge_count != x.n:
        raise NotUnicyclic(
            f"connected unicyclic needs |E| = |V|, got {x.edge_count} edges on {x.n} vertices"
        )
    alive = [True] * x.n
    deg = [x.degree(v) for v in range(x.n)]
    queue = deque(v for v in range(x.n) if deg[v] == 1)
    while queue:
        v = queue.popleft()
        if not alive[v]:
            continue
        alive[v] = False
        for w in x.neighbors(v):
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    core = [v for v in range(x.n) if alive[v]]
    start = min(core)
    core_nbrs = {v: [w for w in x.neighbors(v) if alive[w]] for v in core}
    prev, cur = start, min(core_nbrs[start])
    seq = [start]
    while cur != start:
        seq.append(cur)
        a, b = core_nbrs[cur]
        prev, cur = cur, b if a == prev else a
    return Cycle(tuple(seq))
