"""Partial and complete vertex labelings, legality, and exact enumeration.

A complete labeling of a graph with m edges is *graceful* when it is an
injection into {0..m} and the m induced edge labels |f(u)-f(v)| are all
distinct (hence exactly {1..m}).  Label and edge-label membership is kept
in bitmasks so legality checks are O(deg).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .budget import Budget
from .errors import IllegalMoveError, NotGracefulError, SizeMismatchError
from .graphs import Graph, automorphisms

Labels = tuple  # tuple[int | None, ...] indexed by vertex

RAW = "raw"
UP_TO_AUTOMORPHISM = "up_to_automorphism"


@dataclass(frozen=True)
class PartialLabeling:
    """Injective partial vertex -> label map plus induced edge-label set."""

    graph: Graph
    labels: Labels
    used_labels: int = 0
    used_edge_labels: int = 0

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def free_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, l in enumerate(self.labels) if l is None)

    @property
    def is_total(self) -> bool:
        return None not in self.labels

    def label_of(self, v: int) -> int | None:
        return self.labels[v]

    def vertex_with_label(self, l: int) -> int | None:
        for v, lab in enumerate(self.labels):
            if lab == l:
                return v
        return None

    def label_used(self, l: int) -> bool:
        return bool(self.used_labels >> l & 1)

    def edge_label_used(self, d: int) -> bool:
        return bool(self.used_edge_labels >> d & 1)

    def to_json(self) -> dict:
        return {"labels": list(self.labels)}


def empty_labeling(g: Graph) -> PartialLabeling:
    return PartialLabeling(g, (None,) * g.n_vertices)


def _new_diffs(pl: PartialLabeling, v: int, l: int) -> int | None:
    """Bitmask of edge labels the move (v, l) would create, or None on a clash."""
    mask = 0
    for u in pl.graph.adjacency[v]:
        lu = pl.labels[u]
        if lu is None:
            continue
        bit = 1 << abs(lu - l)
        if (pl.used_edge_labels | mask) & bit:
            return None
        mask |= bit
    return mask


def is_legal_move(pl: PartialLabeling, v: int, l: int) -> bool:
    """True iff v is free, l unused, and all new edge labels stay distinct."""
    if not (0 <= v < pl.graph.n_vertices and 0 <= l <= pl.m):
        return False
    if pl.labels[v] is not None or pl.used_labels >> l & 1:
        return False
    return _new_diffs(pl, v, l) is not None


def apply_move(pl: PartialLabeling, v: int, l: int) -> PartialLabeling:
    """Extend the labeling with v -> l; the input is left untouched."""
    if not (0 <= v < pl.graph.n_vertices and 0 <= l <= pl.m):
        raise IllegalMoveError("out-of-range", f"move ({v},{l}) out of range")
    if pl.labels[v] is not None:
        raise IllegalMoveError("vertex-occupied", f"vertex {v} already labeled")
    if pl.used_labels >> l & 1:
        raise IllegalMoveError("label-used", f"label {l} already used")
    diffs = _new_diffs(pl, v, l)
    if diffs is None:
        raise IllegalMoveError("edge-label-clash", f"move ({v},{l}) duplicates an edge label")
    labels = pl.labels[:v] + (l,) + pl.labels[v + 1 :]
    return PartialLabeling(pl.graph, labels, pl.used_labels | 1 << l, pl.used_edge_labels | diffs)


def legal_labels_for(pl: PartialLabeling, v: int) -> tuple[int, ...]:
    return tuple(l for l in range(pl.m + 1) if is_legal_move(pl, v, l))


# ---------------------------------------------------------------------------
# complete labelings


def is_graceful(g: Graph, labels) -> bool:
    """Injective into 0..m with all m induced edge labels distinct."""
    if len(labels) != g.n_vertices:
        raise SizeMismatchError(f"labeling has {len(labels)} entries for {g.n_vertices} vertices")
    m = g.m
    seen = 0
    for l in labels:
        if l is None or not 0 <= l <= m or seen >> l & 1:
            return False
        seen |= 1 << l
    diffs = 0
    for u, v in g.edges:
        bit = 1 << abs(labels[u] - labels[v])
        if diffs & bit:
            return False
        diffs |= bit
    return True


def complement(labels, m: int) -> Labels:
    """The labeling v -> m - f(v); gracefulness is preserved."""
    return tuple(None if l is None else m - l for l in labels)


def is_alpha(g: Graph, labels) -> bool:
    """Graceful labeling with a threshold k separating every edge's endpoints."""
    if not is_graceful(g, labels):
        raise NotGracefulError("alpha predicate requires a graceful labeling")
    for k in range(g.m + 1):
        if all(min(labels[u], labels[v]) <= k < max(labels[u], labels[v]) for u, v in g.edges):
            return True
    return False


def apply_permutation(labels, perm) -> Labels:
    """Relabel vertices: result(perm[v]) = labels[v], i.e. f composed with perm^-1."""
    out = [None] * len(labels)
    for v, l in enumerate(labels):
        out[perm[v]] = l
    return tuple(out)


def canonical_form(labels, autos) -> Labels:
    """Lexicographically least image of the labeling under the automorphisms."""
    return min(apply_permutation(labels, p) for p in autos)


# ---------------------------------------------------------------------------
# exhaustive enumeration


def _search_order(g: Graph) -> list[int]:
    """BFS from a max-degree vertex: keeps each new vertex attached to the
    labeled region so legality pruning bites early."""
    if g.n_vertices == 0:
        return []
    start = max(range(g.n_vertices), key=g.degree)
    order, seen = [start], {start}
    i = 0
    while i < len(order):
        for w in sorted(g.adjacency[order[i]], key=g.degree, reverse=True):
            if w not in seen:
                seen.add(w)
                order.append(w)
        i += 1
    for v in range(g.n_vertices):  # disconnected leftovers, if any
        if v not in seen:
            order.append(v)
            seen.add(v)
    return order


def enumerate_graceful(
    g: Graph,
    mode: str = RAW,
    budget: Budget | None = None,
) -> frozenset[Labels]:
    """Every graceful labeling of g (``raw``), or one canonical representative
    per orbit of the automorphism group (``up_to_automorphism``).

    Complements are never quotiented out; a labeling and its complement count
    separately unless an automorphism happens to relate them.
    """
    if mode not in (RAW, UP_TO_AUTOMORPHISM):
        raise ValueError(f"unknown enumeration mode {mode!r}")
    budget = budget or Budget()
    n, m = g.n_vertices, g.m
    order = _search_order(g)
    adj = g.adjacency
    labels: list[int | None] = [None] * n
    found: list[Labels] = []

    def extend(depth: int, used: int, diffs: int):
        budget.tick()
        if depth == n:
            found.append(tuple(labels))
            return
        v = order[depth]
        nbr_labels = [labels[u] for u in adj[v] if labels[u] is not None]
        for l in range(m + 1):
            if used >> l & 1:
                continue
            new = 0
            ok = True
            for lu in nbr_labels:
                bit = 1 << abs(lu - l)
                if (diffs | new) & bit:
                    ok = False
                    break
                new |= bit
            if not ok:
                continue
            labels[v] = l
            extend(depth + 1, used | 1 << l, diffs | new)
            labels[v] = None

    if n <= m + 1:  # more vertices than labels can never be injective
        extend(0, 0, 0)
    if mode == RAW:
        return frozenset(found)
    autos = automorphisms(g)
    return frozenset(canonical_form(f, autos) for f in found)


@lru_cache(maxsize=None)
def _cached_raw_enumeration(g: Graph) -> frozenset[Labels]:
    """Shared cache for strategy scripts that consult full labeling tables."""
    return enumerate_graceful(g, RAW)


def graceful_labelings(g: Graph) -> frozenset[Labels]:
    return _cached_raw_enumeration(g)
