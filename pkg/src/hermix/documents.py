"""Graph documents: a small JSON format, parsing, rendering, and the instance
generator for bipartite unique-perfect-matching graphs."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .errors import GenerationFailed, InvalidParameter, ParseError
from .graph import MixedGraph
from .matching import is_unique_perfect_matching

_REQUIRED = ("n", "digons", "arcs", "alpha_order")
_OPTIONAL = ("labels",)


@dataclass(frozen=True)
class GraphDocument:
    """Serializable description of a mixed graph plus its root order.

    Edge lists are normalized (digons low-high, both lists sorted) so that
    structurally equal documents compare equal and render identically.
    """

    n: int
    digons: tuple[tuple[int, int], ...]
    arcs: tuple[tuple[int, int], ...]
    alpha_order: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(
            self,
            "digons",
            tuple(sorted(tuple(sorted(map(int, e))) for e in self.digons)),
        )
        object.__setattr__(
            self, "arcs", tuple(sorted((int(u), int(v)) for u, v in self.arcs))
        )
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))

    def to_graph(self) -> MixedGraph:
        return MixedGraph(self.n, self.digons, self.arcs)

    @classmethod
    def from_graph(
        cls, x: MixedGraph, alpha_order: int, labels=None
    ) -> "GraphDocument":
        return cls(
            n=x.n,
            digons=tuple(x.digons),
            arcs=tuple(x.arcs),
            alpha_order=alpha_order,
            labels=labels,
        )


def parse_graph(text: str) -> GraphDocument:
    """Parse document text; ParseError carries a position or field diagnostic."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(raw, dict):
        raise ParseError("top level must be an object")
    unknown = sorted(set(raw) - set(_REQUIRED) - set(_OPTIONAL))
    if unknown:
        raise ParseError(f"unknown fields: {', '.join(unknown)}")
    missing = sorted(set(_REQUIRED) - set(raw))
    if missing:
        raise ParseError(f"missing fields: {', '.join(missing)}")
    n = raw["n"]
    if not isinstance(n, int) or n < 0:
        raise ParseError("field 'n' must be a nonnegative integer")
    order = raw["alpha_order"]
    if not isinstance(order, int) or order < 1:
        raise ParseError("field 'alpha_order' must be a positive integer")
    digons = _pair_list(raw["digons"], "digons")
    arcs = _pair_list(raw["arcs"], "arcs")
    labels = raw.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
            raise ParseError("field 'labels' must be a list of strings")
        if len(labels) != n:
            raise ParseError(f"expected {n} labels, got {len(labels)}")
        labels = tuple(labels)
    return GraphDocument(n=n, digons=digons, arcs=arcs, alpha_order=order, labels=labels)


def _pair_list(raw, name: str) -> tuple[tuple[int, int], ...]:
    if not isinstance(raw, list):
        raise ParseError(f"field '{name}' must be a list of vertex pairs")
    out = []
    for k, item in enumerate(raw):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(w, int) for w in item)
        ):
            raise ParseError(f"{name}[{k}] must be a pair of integers")
        out.append((item[0], item[1]))
    return tuple(out)


def _render_pairs(pairs) -> str:
    if not pairs:
        return "[]"
    inner = ", ".join(f"[{u}, {v}]" for u, v in pairs)
    return f"[{inner}]"


def render_document(doc: GraphDocument) -> str:
    """Canonical text form; parse(render(doc)) == doc."""
    lines = ["{", f'  "n": {doc.n},']
    if doc.labels is not None:
        lines.append(f'  "labels": {json.dumps(list(doc.labels))},')
    lines.append(f'  "digons": {_render_pairs(doc.digons)},')
    lines.append(f'  "arcs": {_render_pairs(doc.arcs)},')
    lines.append(f'  "alpha_order": {doc.alpha_order}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def generate_instance(seed: int, n: int, unicyclic: bool = False) -> GraphDocument:
    """Random bipartite graph with a unique perfect matching, n vertices.

    Grows a tree by attaching matched pairs (so pendant elimination certifies
    uniqueness by construction), optionally adds one bipartition-respecting
    extra edge that keeps the matching unique, then orients a random subset of
    the non-matching edges. Deterministic per seed.
    """
    if not isinstance(n, int) or n < 2 or n % 2:
        raise InvalidParameter(f"vertex count must be even and >= 2, got {n!r}")
    rng = random.Random(seed)
    matching = {(0, 1)}
    edges = {(0, 1)}
    for k in range(1, n // 2):
        a, b = 2 * k, 2 * k + 1
        anchor = rng.randrange(2 * k)
        edges.add((min(anchor, a), max(anchor, a)))
        edges.add((a, b))
        matching.add((a, b))
    if unicyclic:
        color = _tree_coloring(n, edges)
        candidates = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if (u, v) not in edges and color[u] != color[v]
        ]
        rng.shuffle(candidates)
        for extra in candidates:
            trial = MixedGraph(n, sorted(edges | {extra}), ())
            if is_unique_perfect_matching(trial):
                edges.add(extra)
                break
        else:
            raise GenerationFailed(
                f"seed {seed}: no unicyclic extension keeps the matching unique"
            )
    digons = []
    arcs = []
    for u, v in sorted(edges):
        if (u, v) in matching or rng.random() < 0.5:
            digons.append((u, v))
        elif rng.random() < 0.5:
            arcs.append((u, v))
        else:
            arcs.append((v, u))
    doc = GraphDocument(n=n, digons=tuple(digons), arcs=tuple(arcs), alpha_order=3)
    if not is_unique_perfect_matching(doc.to_graph().underlying()):
        raise GenerationFailed(f"seed {seed}: generated graph failed verification")
    return doc


def _tree_coloring(n: int, edges: set[tuple[int, int]]) -> list[int]:
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    color = [-1] * n
    color[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for w in nbrs[v]:
            if color[w] < 0:
                color[w] = color[v] ^ 1
                stack.append(w)
    return color
