"""Unicyclic bipartite graphs with unique perfect matching: pegs, walk signs,
two-peg inverse entries, and +-1 diagonal similarity to an adjacency matrix."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

from .cyclotomic import (
    OTHER,
    ZERO,
    CyclotomicContext,
    CyclotomicNumber,
    classify_entry,
)
from .errors import (
    Disconnected,
    DimensionTooLarge,
    InternalCheckFailed,
    InvalidParameter,
    NoDoublePath,
    NotAWalk,
    NotInClassH,
    NotTwoPegs,
    OddCycleParity,
)
from .graph import MixedGraph, unique_cycle
from .inverse import inverse_bipartite_upm, orient_nonmatching
from .matching import Matching, co_augmenting_paths, ensure_class_h
from .spectral import ExactHermitianMatrix, h_alpha_matrix, walk_value


@dataclass(frozen=True)
class PegInfo:
    """Cycle bookkeeping: pegs are matching edges hanging off the cycle.

    A peg is a matching edge that is not a cycle edge and touches exactly one
    cycle vertex. half_length is m with |C| = 2m; every graph in the class has
    an even cycle and at least two pegs.
    """

    pegs: tuple[tuple[int, int], ...]
    cycle_vertices: tuple[int, ...]
    unmatched_cycle_edge_count: int
    half_length: int


def peg_info(x: MixedGraph, m: Matching) -> PegInfo:
    certified = ensure_class_h(x)
    if certified != m:
        raise InvalidParameter("supplied matching is not the unique perfect matching")
    cycle = unique_cycle(x)
    cyc_set = set(cycle.vertices)
    cyc_edges = set(cycle.edges)
    pegs = tuple(
        sorted(
            e
            for e in m.edges
            if e not in cyc_edges and (e[0] in cyc_set) != (e[1] in cyc_set)
        )
    )
    matched = sum(1 for e in cyc_edges if e in m)
    return PegInfo(
        pegs=pegs,
        cycle_vertices=cycle.vertices,
        unmatched_cycle_edge_count=len(cyc_edges) - matched,
        half_length=len(cycle.vertices) // 2,
    )


def f_walk(g: MixedGraph, m: Matching, walk) -> list[int]:
    """Walk signs: start at +1, flip across each non-matching edge."""
    verts = tuple(walk)
    if not verts:
        raise NotAWalk("empty walk")
    g.check_vertex(verts[0])
    signs = [1]
    for u, v in zip(verts, verts[1:]):
        if not g.has_edge(u, v):
            raise NotAWalk(f"step ({u}, {v}) is not an edge")
        signs.append(signs[-1] if (u, v) in m else -signs[-1])
    return signs


@dataclass(frozen=True)
class DiagonalSigns:
    """A +-1 sign per vertex, anchored at a basepoint with sign +1."""

    signs: tuple[int, ...]
    basepoint: int


def sign_assignment(g: MixedGraph, m: Matching, basepoint: int) -> DiagonalSigns:
    """Propagate f_walk signs from the basepoint over the whole graph.

    Well-defined only when every cycle carries an even number of unmatched
    edges; a parity conflict on any non-tree edge raises OddCycleParity.
    """
    g.check_vertex(basepoint)
    signs: list[int | None] = [None] * g.n
    signs[basepoint] = 1
    queue = deque([basepoint])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            expected = signs[v] * (1 if (v, w) in m else -1)
            if signs[w] is None:
                signs[w] = expected
                queue.append(w)
            elif signs[w] != expected:
                raise OddCycleParity(
                    f"edge ({v}, {w}) closes a cycle with odd unmatched-edge count"
                )
    if any(s is None for s in signs):
        raise Disconnected("sign propagation did not reach every vertex")
    return DiagonalSigns(tuple(signs), basepoint)


def check_her(g: MixedGraph, m: Matching, basepoint: int) -> bool:
    """Does D A(g) D equal the order-2 hermitian matrix of the oriented graph?

    A(g) is the plain adjacency matrix (all-digon graph), D the sign assignment
    from the basepoint, and the right side puts -1 on every oriented
    non-matching edge.
    """
    d = sign_assignment(g, m, basepoint)
    ctx2 = CyclotomicContext(2)
    adjacency = h_alpha_matrix(g, ctx2)  # all-digon: exponent 0 everywhere
    oriented = h_alpha_matrix(orient_nonmatching(g, m), ctx2)
    return adjacency.conjugated_by_signs(d.signs) == oriented


def two_peg_entry(
    x: MixedGraph,
    ctx: CyclotomicContext,
    i: int,
    j: int,
    path: tuple[int, ...] | None = None,
) -> CyclotomicNumber:
    """Closed form for an inverse entry joined by exactly two co-augmenting paths.

    With the passed path split as i..v (tree), F = v..v' (cycle portion),
    v'..j (tree), the entry equals

        (-1)^((|E(P)|-1)/2) * h(i..v) * h(F) * h(v'..j) * (1 + (-1)^(m+1) * h(C))

    where h(C) = conj(h(F)) * h(F^c) closes the cycle through the complementary
    portion and 2m is the cycle length. Equal, by construction, to the two-term
    co-augmenting path sum.
    """
    m = ensure_class_h(x)
    info = peg_info(x, m)
    if len(info.pegs) != 2:
        raise NotTwoPegs(f"graph has {len(info.pegs)} pegs, need exactly 2")
    paths = co_augmenting_paths(x, m, i, j)
    if len(paths) != 2:
        raise NoDoublePath(
            f"{len(paths)} co-augmenting paths between {i} and {j}, need exactly 2"
        )
    if path is None:
        path = paths[0]
    elif tuple(path) not in paths:
        raise InvalidParameter("path is not one of the two co-augmenting paths")
    path = tuple(path)

    cyc = info.cycle_vertices
    cyc_set = set(cyc)
    hit = [k for k, v in enumerate(path) if v in cyc_set]
    assert hit == list(range(hit[0], hit[-1] + 1)), "cycle portion must be contiguous"
    a, b = hit[0], hit[-1]
    prefix, portion, suffix = path[: a + 1], path[a : b + 1], path[b:]
    v_in, v_out = path[a], path[b]

    # complementary route around the cycle, from v_in to v_out
    pos_in, pos_out = cyc.index(v_in), cyc.index(v_out)
    L = len(cyc)
    forward = tuple(cyc[(pos_in + t) % L] for t in range((pos_out - pos_in) % L + 1))
    backward = tuple(cyc[(pos_in - t) % L] for t in range((pos_in - pos_out) % L + 1))
    complement = backward if portion == forward else forward
    assert portion in (forward, backward), "path portion must follow the cycle"

    h_pre = walk_value(x, ctx, prefix)
    h_f = walk_value(x, ctx, portion)
    h_suf = walk_value(x, ctx, suffix)
    h_cycle = h_f.conj() * walk_value(x, ctx, complement)

    half = info.half_length
    bracket = ctx.one() + (h_cycle if half % 2 else -h_cycle)
    value = h_pre * h_f * h_suf * bracket
    return value if _coaug_prefactor(path) == 1 else -value


def _coaug_prefactor(path: tuple[int, ...]) -> int:
    return -1 if ((len(path) - 2) // 2) % 2 else 1


def exhaustive_diag_similarity(hinv: ExactHermitianMatrix) -> DiagonalSigns | None:
    """Search all +-1 diagonals (first sign fixed +1) for one making every
    entry of D * Hinv * D classify as Zero or a positive power of alpha.

    A test oracle by design: no structure theory, just the 2^(dim-1) sweep.
    Entry classifications are precomputed; conjugation only flips signs, so an
    entry classified as Other rules out every diagonal.
    """
    dim = hinv.dim
    if dim > 16:
        raise DimensionTooLarge(f"exhaustive search capped at dim 16, got {dim}")
    constraints: list[tuple[int, int, int]] = []
    for i in range(dim):
        for j in range(i, dim):
            kind = classify_entry(hinv.entry(i, j))
            if kind is ZERO:
                continue
            if kind is OTHER:
                return None
            if i == j:
                # diagonal is untouched by conjugation
                if kind.sign != 1:
                    return None
                continue
            constraints.append((i, j, kind.sign))
    for bits in range(1 << max(dim - 1, 0)):
        signs = [1] * dim
        for p in range(1, dim):
            if (bits >> (p - 1)) & 1:
                signs[p] = -1
        if all(signs[i] * signs[j] == want for i, j, want in constraints):
            return DiagonalSigns(tuple(signs), 0)
    return None


class Obstruction(enum.Enum):
    TWO_PEGS = "exactly two pegs"
    ODD_PARITY = "odd number of unmatched cycle edges"


@dataclass(frozen=True)
class Similar:
    """Certificate: D * Hinv * D is the gamma-hermitian matrix of ``graph``."""

    signs: DiagonalSigns
    graph: MixedGraph
    conjugated: ExactHermitianMatrix


@dataclass(frozen=True)
class NotSimilar:
    reason: Obstruction


def _consistent_signs(
    hinv: ExactHermitianMatrix, basepoint: int
) -> DiagonalSigns | None:
    """Two-color the sign constraints read off the matrix entries.

    Entries classifying as +alpha^k demand sign product +1 across their pair,
    -alpha^k demands -1, Zero demands nothing, and Other admits no diagonal at
    all. Colors spread from the basepoint; each untouched constraint component
    starts fresh at +1.
    """
    dim = hinv.dim
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(dim)]
    for i in range(dim):
        for j in range(i, dim):
            kind = classify_entry(hinv.entry(i, j))
            if kind is ZERO:
                continue
            if kind is OTHER:
                return None
            if i == j:
                # diagonal is untouched by conjugation
                if kind.sign != 1:
                    return None
                continue
            adjacency[i].append((j, kind.sign))
            adjacency[j].append((i, kind.sign))
    signs = [0] * dim
    for root in (basepoint, *range(dim)):
        if signs[root]:
            continue
        signs[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, want in adjacency[u]:
                target = signs[u] * want
                if signs[v] == 0:
                    signs[v] = target
                    queue.append(v)
                elif signs[v] != target:
                    return None
    return DiagonalSigns(tuple(signs), basepoint)


def classify_gamma_similarity(x: MixedGraph, basepoint: int = 0):
    """Decide whether the order-3 inverse is +-1 diagonally similar to a
    gamma-hermitian adjacency matrix; produce the certificate when it is.

    Conjugation by a sign diagonal never changes an entry's magnitude, so
    similarity holds exactly when no inverse entry classifies as Other and the
    pairwise sign constraints (product +1 across entries +gamma^k, -1 across
    -gamma^k) admit a global 2-coloring. The coloring spreads from the
    basepoint and the certificate is re-verified entry by entry.

    When no coloring exists the reported reason is the structural obstruction.
    With more than two pegs every vertex pair is joined by at most one
    co-augmenting path, and failure happens exactly on odd unmatched cycle
    parity: chaining the pegs around the cycle forces a sign product of -1
    over a loop of constraints. With exactly two pegs the double-path bracket
    or the split parities of the two cycle routes conflict; that obstruction
    is usually decisive, but not always. A two-peg graph whose peg attachment
    vertices are adjacent on the cycle leaves the short route without interior
    matched edges, dropping one of the conflicting constraints, and its
    inverse can be genuinely Similar.
    """
    x.check_vertex(basepoint)
    m = ensure_class_h(x)
    info = peg_info(x, m)
    ctx = CyclotomicContext(3)
    report = inverse_bipartite_upm(x, ctx)
    d = _consistent_signs(report.matrix, basepoint)
    many_pegs = len(info.pegs) > 2
    even_parity = info.unmatched_cycle_edge_count % 2 == 0
    if d is None:
        if not many_pegs:
            return NotSimilar(Obstruction.TWO_PEGS)
        if not even_parity:
            return NotSimilar(Obstruction.ODD_PARITY)
        raise InternalCheckFailed(
            "no consistent diagonal despite more than two pegs and even parity"
        )
    if many_pegs and not even_parity:
        raise InternalCheckFailed(
            "consistent diagonal found despite odd unmatched cycle parity"
        )
    conj = report.matrix.conjugated_by_signs(d.signs)
    graph = _gamma_matrix_graph(conj)
    return Similar(signs=d, graph=graph, conjugated=conj)


def _gamma_matrix_graph(mat: ExactHermitianMatrix) -> MixedGraph:
    """Read a mixed graph off a matrix whose entries are 0, 1, gamma, gamma^2."""
    order = mat.ctx.order
    digons = []
    arcs = []
    for i in range(mat.dim):
        for j in range(i, mat.dim):
            kind = classify_entry(mat.entry(i, j))
            if kind is ZERO:
                continue
            if kind is OTHER or kind.sign != 1 or i == j:
                raise InternalCheckFailed(
                    f"certificate entry ({i}, {j}) is not an adjacency value"
                )
            if kind.exponent == 0:
                digons.append((i, j))
            elif kind.exponent == 1:
                arcs.append((i, j))
            elif kind.exponent == order - 1:
                arcs.append((j, i))
            else:
                raise InternalCheckFailed(
                    f"certificate entry ({i}, {j}) is not an adjacency value"
                )
    return MixedGraph(mat.dim, digons, arcs)
