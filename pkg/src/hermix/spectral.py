"""Hermitian adjacency matrices, elementary subgraphs, and determinants."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cyclotomic import CyclotomicContext, CyclotomicNumber
from .errors import (
    ContextMismatch,
    DimensionTooLarge,
    NotAWalk,
    NumericallySingular,
)
from .graph import Cycle, MixedGraph

DEFAULT_LEIBNIZ_CAP = 10
PIVOT_TOLERANCE = 1e-10
RESIDUAL_TOLERANCE = 1e-9


class ExactHermitianMatrix:
    """Square matrix over one cyclotomic field, hermitian by checked invariant."""

    __slots__ = ("ctx", "dim", "rows")

    def __init__(self, ctx: CyclotomicContext, rows):
        self.ctx = ctx
        self.rows = tuple(tuple(row) for row in rows)
        self.dim = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != self.dim:
                raise ValueError("matrix is not square")
            for j in range(i, self.dim):
                a, b = self.rows[i][j], self.rows[j][i]
                if a.ctx.order != ctx.order or b.ctx.order != ctx.order:
                    raise ContextMismatch("entry from a different cyclotomic field")
                if a != b.conj():
                    raise ValueError(f"not hermitian at ({i}, {j})")

    def entry(self, i: int, j: int) -> CyclotomicNumber:
        return self.rows[i][j]

    @classmethod
    def identity(cls, ctx: CyclotomicContext, dim: int) -> "ExactHermitianMatrix":
        one, zero = ctx.one(), ctx.zero()
        return cls(ctx, [[one if i == j else zero for j in range(dim)] for i in range(dim)])

    def multiply(self, other: "ExactHermitianMatrix"):
        """Plain matrix product as a nested tuple (not hermitian in general)."""
        if other.dim != self.dim or other.ctx.order != self.ctx.order:
            raise ContextMismatch("operands do not match")
        zero = self.ctx.zero()
        out = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                acc = zero
                for k in range(self.dim):
                    a = self.rows[i][k]
                    if a.is_zero():
                        continue
                    b = other.rows[k][j]
                    if b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    def conjugated_by_signs(self, signs) -> "ExactHermitianMatrix":
        """D * M * D for a +-1 diagonal D."""
        if len(signs) != self.dim or any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be +-1 of matching length")
        rows = [
            [
                self.rows[i][j] if signs[i] * signs[j] == 1 else -self.rows[i][j]
                for j in range(self.dim)
            ]
            for i in range(self.dim)
        ]
        return ExactHermitianMatrix(self.ctx, rows)

    def to_complex(self) -> np.ndarray:
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for i in range(self.dim):
            for j in range(self.dim):
                out[i, j] = self.rows[i][j].to_complex()
        return out

    def __eq__(self, other):
        if not isinstance(other, ExactHermitianMatrix):
            return NotImplemented
        return (
            self.ctx.order == other.ctx.order
            and self.dim == other.dim
            and all(
                self.rows[i][j] == other.rows[i][j]
                for i in range(self.dim)
                for j in range(self.dim)
            )
        )

    def __repr__(self):
        return f"ExactHermitianMatrix(order={self.ctx.order}, dim={self.dim})"


def h_alpha_matrix(x: MixedGraph, ctx: CyclotomicContext) -> ExactHermitianMatrix:
    """Entry (u, v): 1 for a digon, alpha for arc u->v, conj(alpha) for arc v->u."""
    zero = ctx.zero()
    rows = []
    for u in range(x.n):
        row = []
        for v in range(x.n):
            e = x.hermitian_exponent(u, v)
            row.append(zero if e is None else ctx.root_power(e))
        rows.append(row)
    return ExactHermitianMatrix(ctx, rows)


def walk_value(x: MixedGraph, ctx: CyclotomicContext, walk) -> CyclotomicNumber:
    """Product of matrix entries along the walk; a single power of alpha."""
    verts = tuple(walk)
    if not verts:
        raise NotAWalk("empty walk")
    total = 0
    for u, v in zip(verts, verts[1:]):
        e = x.hermitian_exponent(u, v)
        if e is None:
            raise NotAWalk(f"step ({u}, {v}) is not an edge")
        total += e
    return ctx.root_power(total)


@dataclass(frozen=True)
class ElementarySubgraph:
    """Components are single edges or cycles; here always spanning its host."""

    edges: tuple[tuple[int, int], ...]
    cycles: tuple[Cycle, ...]

    @property
    def component_count(self) -> int:
        return len(self.edges) + len(self.cycles)

    @property
    def vertex_count(self) -> int:
        return 2 * len(self.edges) + sum(len(c) for c in self.cycles)

    @property
    def edge_total(self) -> int:
        return len(self.edges) + sum(len(c) for c in self.cycles)

    @property
    def rank(self) -> int:
        return self.vertex_count - self.component_count

    @property
    def corank(self) -> int:
        return self.edge_total - self.rank  # equals len(self.cycles)


def enumerate_spanning_elementary(x: MixedGraph) -> list[ElementarySubgraph]:
    """Every spanning subgraph whose components are single edges or cycles.

    Recursion: cover the lowest uncovered vertex either by one incident edge or
    by one cycle through it (cycles listed once, canonical direction).
    """
    covered = bytearray(x.n)
    out: list[ElementarySubgraph] = []
    edges_acc: list[tuple[int, int]] = []
    cycles_acc: list[Cycle] = []

    def cycles_through(v: int) -> list[tuple[int, ...]]:
        # simple cycles v..v of length >= 3 inside the uncovered region;
        # requiring second < last keeps one traversal direction per cycle
        found: list[tuple[int, ...]] = []
        path = [v]
        on_path = {v}

        def crawl(cur: int) -> None:
            for w in x.neighbors(cur):
                if w == v:
                    if len(path) >= 3 and path[1] < path[-1]:
                        found.append(tuple(path))
                    continue
                if covered[w] or w in on_path:
                    continue
                path.append(w)
                on_path.add(w)
                crawl(w)
                on_path.remove(w)
                path.pop()

        crawl(v)
        return found

    def cover(lowest_hint: int) -> None:
        v = lowest_hint
        while v < x.n and covered[v]:
            v += 1
        if v == x.n:
            out.append(
                ElementarySubgraph(tuple(sorted(edges_acc)), tuple(cycles_acc))
            )
            return
        for u in x.neighbors(v):
            if not covered[u]:
                covered[v] = covered[u] = 1
                edges_acc.append((v, u) if v < u else (u, v))
                cover(v + 1)
                edges_acc.pop()
                covered[v] = covered[u] = 0
        for cyc in cycles_through(v):
            for w in cyc:
                covered[w] = 1
            cycles_acc.append(Cycle(cyc))
            cover(v + 1)
            cycles_acc.pop()
            for w in cyc:
                covered[w] = 0

    cover(0)
    return out


def det_via_elementary(x: MixedGraph, ctx: CyclotomicContext) -> CyclotomicNumber:
    """Exact determinant of h_alpha_matrix(x) from spanning elementary subgraphs.

    Each subgraph contributes (-1)^rank times the product over its cycle
    components of 2*Re(h_alpha(C)); the factor 2 accounts for the two
    traversal directions of each cycle.
    """
    total = ctx.zero()
    for sub in enumerate_spanning_elementary(x):
        term = ctx.from_rational(Fraction((-1) ** sub.rank))
        for cyc in sub.cycles:
            term = term * (walk_value(x, ctx, cyc.closed_walk()).real_part() * 2)
        total = total + term
    return total


def _leibniz_cap(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    raw = os.environ.get("HERMIX_MAX_LEIBNIZ")
    return int(raw) if raw else DEFAULT_LEIBNIZ_CAP


def det_leibniz(h: ExactHermitianMatrix, max_dim: int | None = None) -> CyclotomicNumber:
    """Exact determinant by signed permutation expansion.

    Organized as Laplace expansion memoized on the free-column subset, which
    sums exactly the nonzero permutation terms. Guarded by a dimension cap
    (default 10, overridable via max_dim or HERMIX_MAX_LEIBNIZ).
    """
    cap = _leibniz_cap(max_dim)
    if h.dim > cap:
        raise DimensionTooLarge(f"dim {h.dim} exceeds permutation-expansion cap {cap}")
    ctx = h.ctx
    full = (1 << h.dim) - 1
    memo: dict[int, CyclotomicNumber] = {0: ctx.one()}

    def minor(free: int) -> CyclotomicNumber:
        got = memo.get(free)
        if got is not None:
            return got
        row = h.dim - bin(free).count("1")
        acc = ctx.zero()
        sign = 1
        rest = free
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            a = h.rows[row][j]
            if not a.is_zero():
                sub = minor(free ^ low)
                if not sub.is_zero():
                    contrib = a * sub
                    acc = acc + (contrib if sign == 1 else -contrib)
            sign = -sign
            rest ^= low
        memo[free] = acc
        return acc

    return minor(full)


def numeric_inverse(h: ExactHermitianMatrix) -> np.ndarray:
    """Floating inverse by Gaussian elimination with partial pivoting.

    Raises NumericallySingular when a pivot magnitude drops below 1e-10 or the
    residual max |H * Hinv - I| exceeds 1e-9.
    """
    n = h.dim
    a = h.to_complex()
    work = np.hstack([a.copy(), np.eye(n, dtype=complex)])
    for col in range(n):
        p = col + int(np.argmax(np.abs(work[col:, col])))
        if abs(work[p, col]) < PIVOT_TOLERANCE:
            raise NumericallySingular(f"pivot {abs(work[p, col]):.3e} at column {col}")
        if p != col:
            work[[col, p]] = work[[p, col]]
        work[col] /= work[col, col]
        for r in range(n):
            if r != col and work[r, col] != 0:
                work[r] -= work[r, col] * work[col]
    inv = work[:, n:]
    if n:
        residual = np.abs(a @ inv - np.eye(n)).max()
        if residual > RESIDUAL_TOLERANCE:
            raise NumericallySingular(f"residual {residual:.3e} exceeds tolerance")
    return inv
