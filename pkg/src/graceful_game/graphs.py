"""Graph families and structural helpers.

Vertex index layouts are fixed per family because the scripted strategies
address vertices by role:

* path / path power: ``v0..v{n-1}`` along the linear sequence
* cycle:             ``v0..v{n-1}`` around the ring
* complete bipartite: part X first, then part Y
* star:              center at index 0, leaves after
* caterpillar:       spine first (one index per spine vertex), then the
                     leaves of each spine vertex in spine order
* wheel:             ring ``v0..v{n-1}``, center *last* at index n
* gear:              ring ``v0..v{n-1}``, center at index n, subdivision
                     vertex ``w_j`` (between ``v_j`` and ``v_{j+1}``) at
                     index ``n+1+j``
* helm:              center *first* at index 0, ring ``v1..vn``, pendant of
                     ``v_k`` at index ``n+k``
* web W(t,n):        center 0, pendants ``1..n``, outer ring ``n+1..2n``,
                     then inner rings layer by layer; pendant k, ring
                     vertices ``n+k, 2n+k, ...`` and the center lie on one
                     radial line
* hypercube:         vertex i is the bit string of i, edges flip one bit
* prism:             ``(p, q)`` maps to index ``q*r + p`` (two rings of r)
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .errors import InvalidParamsError, TooLargeError

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "star",
    "caterpillar",
    "wheel",
    "gear",
    "helm",
    "web",
    "hypercube",
    "prism",
    "path_power",
)

AUTOMORPHISM_VERTEX_CAP = 16


@dataclass(frozen=True)
class FamilySpec:
    """A graph family name plus its integer parameters."""

    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParamsError(f"unknown family {self.family!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))

    @property
    def label(self) -> str:
        """Short human label, e.g. ``P4``, ``K{2,3}``, ``W(2,3)``."""
        p = self.params
        return {
            "path": lambda: f"P{p[0]}",
            "cycle": lambda: f"C{p[0]}",
            "complete": lambda: f"K{p[0]}",
            "complete_bipartite": lambda: f"K{{{p[0]},{p[1]}}}",
            "star": lambda: f"K{{1,{p[0]}}}",
            "caterpillar": lambda: f"cat({','.join(map(str, p))})",
            "wheel": lambda: f"W{p[0]}",
            "gear": lambda: f"G{p[0]}",
            "helm": lambda: f"H{p[0]}",
            "web": lambda: f"W({p[0]},{p[1]})",
            "hypercube": lambda: f"Q{p[0]}",
            "prism": lambda: f"P{{{p[0]},2}}",
            "path_power": lambda: f"P{p[0]}^{p[1]}",
        }[self.family]()

    def encode(self) -> str:
        return f"{self.family}:{','.join(map(str, self.params))}"

    @staticmethod
    def decode(text: str) -> "FamilySpec":
        name, _, rest = text.partition(":")
        params = tuple(int(x) for x in rest.split(",") if x != "")
        return FamilySpec(name, params)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with optional family provenance."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    family: FamilySpec | None = None
    names: tuple[str, ...] = ()

    @staticmethod
    def from_edges(n_vertices, edges, family=None, names=None) -> "Graph":
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise InvalidParamsError(f"self-loop at vertex {u}")
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise InvalidParamsError(f"edge ({u},{v}) out of range")
            norm.add((min(u, v), max(u, v)))
        if names is None:
            names = tuple(f"v{i}" for i in range(n_vertices))
        else:
            names = tuple(names)
            if len(names) != n_vertices:
                raise InvalidParamsError("names length != n_vertices")
        return Graph(n_vertices, tuple(sorted(norm)), family, names)

    @property
    def m(self) -> int:
        """Edge count; labels live in 0..m."""
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbr: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for u, v in self.edges:
            nbr[u].append(v)
            nbr[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbr)

    def neighbors(self, v) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u, v) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def name_of(self, v) -> str:
        return self.names[v]

    def vertex_named(self, name: str) -> int:
        return self.names.index(name)


# ---------------------------------------------------------------------------
# family constructors


def _require(cond: bool, msg: str):
    if not cond:
        raise InvalidParamsError(msg)


def _path(n):
    _require(n >= 1, "path needs n >= 1")
    return n, [(i, i + 1) for i in range(n - 1)], [f"path:{i}" for i in range(n)]


def _cycle(n):
    _require(n >= 3, "cycle needs n >= 3")
    return n, [(i, (i + 1) % n) for i in range(n)], [f"cycle:{i}" for i in range(n)]


def _complete(n):
    _require(n >= 1, "complete graph needs n >= 1")
    return n, list(combinations(range(n), 2)), [f"v{i}" for i in range(n)]


def _complete_bipartite(p, q):
    _require(p >= 1 and q >= 1, "complete bipartite needs p,q >= 1")
    edges = [(i, p + j) for i in range(p) for j in range(q)]
    names = [f"x:{i}" for i in range(p)] + [f"y:{j}" for j in range(q)]
    return p + q, edges, names


def _star(q):
    _require(q >= 1, "star needs q >= 1")
    edges = [(0, j) for j in range(1, q + 1)]
    return q + 1, edges, ["center"] + [f"leaf:{j}" for j in range(1, q + 1)]


def _caterpillar(*ks):
    s = len(ks)
    _require(s >= 1, "caterpillar needs a spine of length >= 1")
    _require(all(k >= 0 for k in ks), "leaf counts must be >= 0")
    edges = [(j, j + 1) for j in range(s - 1)]
    names = [f"spine:{j + 1}" for j in range(s)]
    nxt = s
    for j, k in enumerate(ks):
        for c in range(k):
            edges.append((j, nxt))
            names.append(f"leaf:{j + 1}:{c + 1}")
            nxt += 1
    return nxt, edges, names


def _wheel(n):
    _require(n >= 3, "wheel needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return n + 1, edges, [f"cycle:{i}" for i in range(n)] + ["center"]


def _gear(n):
    _require(n >= 3, "gear needs n >= 3")
    center = n
    edges = [(j, center) for j in range(n)]
    for j in range(n):
        w = n + 1 + j
        edges += [(j, w), (w, (j + 1) % n)]
    names = [f"cycle:{j}" for j in range(n)] + ["center"] + [f"sub:{j}" for j in range(n)]
    return 2 * n + 1, edges, names


def _helm(n):
    _require(n >= 3, "helm needs n >= 3")
    edges = [(0, k) for k in range(1, n + 1)]
    edges += [(k, k % n + 1) for k in range(1, n + 1)]
    edges += [(k, n + k) for k in range(1, n + 1)]
    names = ["center"] + [f"cycle:{k}" for k in range(1, n + 1)]
    names += [f"pendant:{k}" for k in range(1, n + 1)]
    return 2 * n + 1, edges, names


def _web(t, n):
    _require(t >= 2, "web needs t >= 2")
    _require(n >= 3, "web needs n >= 3")
    edges = [(k, n + k) for k in range(1, n + 1)]  # pendant to outer ring
    for layer in range(1, t + 1):
        base = layer * n
        edges += [(base + k, base + k % n + 1) for k in range(1, n + 1)]
        if layer < t:
            edges += [(base + k, base + n + k) for k in range(1, n + 1)]
    edges += [(t * n + k, 0) for k in range(1, n + 1)]  # inner ring to center
    names = ["center"] + [f"pendant:{k}" for k in range(1, n + 1)]
    for layer in range(1, t + 1):
        names += [f"cycle:{layer}:{k}" for k in range(1, n + 1)]
    return n * (t + 1) + 1, edges, names


def _hypercube(n):
    _require(n >= 1, "hypercube needs n >= 1")
    size = 1 << n
    edges = [(i, i | (1 << b)) for i in range(size) for b in range(n) if not i & (1 << b)]
    return size, edges, [f"bits:{i:0{n}b}" for i in range(size)]


def _prism(r):
    _require(r >= 3, "prism needs r >= 3")
    edges = []
    for q in (0, 1):
        edges += [(q * r + p, q * r + (p + 1) % r) for p in range(r)]
    edges += [(p, r + p) for p in range(r)]
    names = [f"ring:{q}:{p}" for q in (0, 1) for p in range(r)]
    return 2 * r, edges, names


def _path_power_edges(n, k):
    _require(n >= 1 and k >= 1, "path power needs n >= 1 and k >= 1")
    edges = [(i, j) for i in range(n) for j in range(i + 1, min(i + k + 1, n))]
    return n, edges, [f"path:{i}" for i in range(n)]


_BUILDERS = {
    "path": _path,
    "cycle": _cycle,
    "complete": _complete,
    "complete_bipartite": _complete_bipartite,
    "star": _star,
    "caterpillar": _caterpillar,
    "wheel": _wheel,
    "gear": _gear,
    "helm": _helm,
    "web": _web,
    "hypercube": _hypercube,
    "prism": _prism,
    "path_power": _path_power_edges,
}


def build_family(spec: FamilySpec) -> Graph:
    """Construct the graph for ``spec`` with the fixed vertex layout."""
    try:
        n, edges, names = _BUILDERS[spec.family](*spec.params)
    except TypeError as exc:
        raise InvalidParamsError(f"bad parameter count for {spec.family}: {spec.params}") from exc
    return Graph.from_edges(n, edges, family=spec, names=names)


def path_power(n: int, k: int) -> Graph:
    """The k-th power of a path: edge {i,j} iff 0 < |i-j| <= k."""
    return build_family(FamilySpec("path_power", (n, k)))


# ---------------------------------------------------------------------------
# structure queries


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """2-coloring by BFS, or None if the graph is not bipartite."""
    color = [-1] * g.n_vertices
    for start in range(g.n_vertices):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return (
        frozenset(v for v in range(g.n_vertices) if color[v] == 0),
        frozenset(v for v in range(g.n_vertices) if color[v] == 1),
    )


def distances_from(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n_vertices
    dist[src] = 0
    queue = [src]
    while queue:
        nxt = []
        for u in queue:
            for w in g.adjacency[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        queue = nxt
    return dist


def diameter(g: Graph) -> int:
    best = 0
    for v in range(g.n_vertices):
        best = max(best, max(distances_from(g, v)))
    return best


def _match_search(g: Graph, h: Graph, find_all: bool):
    """Backtracking vertex-bijection search from g to h preserving adjacency."""
    n = g.n_vertices
    if h.n_vertices != n or h.m != g.m:
        return []
    deg_g = [g.degree(v) for v in range(n)]
    deg_h = [h.degree(v) for v in range(n)]
    if sorted(deg_g) != sorted(deg_h):
        return []
    # map rare-degree vertices first to fail fast
    order = sorted(range(n), key=lambda v: (deg_g.count(deg_g[v]), -deg_g[v], v))
    mapping = [-1] * n
    used = [False] * n
    found: list[tuple[int, ...]] = []

    def extend(d: int) -> bool:
        if d == n:
            found.append(tuple(mapping))
            return not find_all
        v = order[d]
        for w in range(n):
            if used[w] or deg_h[w] != deg_g[v]:
                continue
            ok = True
            for u in g.adjacency[v]:
                mu = mapping[u]
                if mu != -1 and not h.has_edge(w, mu):
                    ok = False
                    break
            if ok:
                # non-edges must also be preserved (degrees make this cheap)
                for u in order[:d]:
                    if not g.has_edge(v, u) and h.has_edge(w, mapping[u]):
                        ok = False
                        break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(d + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    extend(0)
    return found


def automorphisms(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All adjacency-preserving vertex bijections, identity included."""
    if g.n_vertices > AUTOMORPHISM_VERTEX_CAP:
        raise TooLargeError(
            f"automorphism search capped at {AUTOMORPHISM_VERTEX_CAP} vertices, got {g.n_vertices}"
        )
    return tuple(sorted(_match_search(g, g, find_all=True)))


def find_isomorphism(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """One vertex bijection g -> h preserving adjacency, or None."""
    if max(g.n_vertices, h.n_vertices) > AUTOMORPHISM_VERTEX_CAP:
        raise TooLargeError("isomorphism search capped at 16 vertices")
    found = _match_search(g, h, find_all=False)
    return found[0] if found else None


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """(p . q)(v) = p(q(v))."""
    return tuple(p[q[v]] for v in range(len(p)))


def invert(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for v, w in enumerate(p):
        inv[w] = v
    return tuple(inv)


# ---------------------------------------------------------------------------
# serialization


def graph_to_json(g: Graph) -> dict:
    return {
        "n": g.n_vertices,
        "edges": [list(e) for e in g.edges],
        "family": g.family.encode() if g.family else None,
        "names": list(g.names),
    }


def graph_from_json(data: dict | str) -> Graph:
    if isinstance(data, str):
        data = json.loads(data)
    family = FamilySpec.decode(data["family"]) if data.get("family") else None
    return Graph.from_edges(
        data["n"],
        [tuple(e) for e in data["edges"]],
        family=family,
        names=data.get("names"),
    )


def to_dot(g: Graph, labeling=None) -> str:
    """DOT text: one line per edge, vertices labeled by their role names."""
    lines = ["graph G {"]
    for v in range(g.n_vertices):
        text = g.names[v]
        if labeling is not None and labeling[v] is not None:
            text += f" = {labeling[v]}"
        lines.append(f'  {v} [label="{text}"];')
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# display layouts (consumed by the play service / web board)


def layout(g: Graph) -> list[tuple[float, float]]:
    """Per-family fixed 2D coordinates in [0,1]^2 for drawing the board."""
    import math

    n = g.n_vertices

    def ring(count, radius, offset=0, phase=-math.pi / 2):
        return [
            (
                0.5 + radius * math.cos(phase + 2 * math.pi * i / count),
                0.5 + radius * math.sin(phase + 2 * math.pi * i / count),
            )
            for i in range(count)
        ]

    fam = g.family.family if g.family else None
    p = g.family.params if g.family else ()
    if fam in ("path", "path_power"):
        if n == 1:
            return [(0.5, 0.5)]
        return [(0.06 + 0.88 * i / (n - 1), 0.5) for i in range(n)]
    if fam == "cycle" or fam == "complete":
        return ring(n, 0.42)
    if fam in ("complete_bipartite",):
        pp, qq = p
        xs = [(0.25, 0.1 + 0.8 * (i + 0.5) / pp) for i in range(pp)]
        ys = [(0.75, 0.1 + 0.8 * (j + 0.5) / qq) for j in range(qq)]
        return xs + ys
    if fam == "star":
        return [(0.5, 0.5)] + ring(p[0], 0.4)
    if fam == "caterpillar":
        s = len(p)
        pts = [(0.08 + 0.84 * (j + 0.5) / s, 0.4) for j in range(s)]
        for j, k in enumerate(p):
            for c in range(k):
                pts.append((0.08 + 0.84 * (j + 0.5) / s + 0.05 * (c - (k - 1) / 2), 0.72))
        return pts
    if fam == "wheel":
        return ring(p[0], 0.42) + [(0.5, 0.5)]
    if fam == "gear":
        nn = p[0]
        outer = ring(2 * nn, 0.42)
        return outer[0::2] + [(0.5, 0.5)] + outer[1::2]
    if fam == "helm":
        nn = p[0]
        return [(0.5, 0.5)] + ring(nn, 0.26) + ring(nn, 0.44)
    if fam == "web":
        t, nn = p
        pts = [(0.5, 0.5)] + ring(nn, 0.46)
        for layer in range(1, t + 1):
            pts += ring(nn, 0.46 - 0.36 * layer / (t + 1))
        return pts
    if fam == "hypercube":
        bits = p[0]
        cols: dict[int, list[int]] = {}
        for v in range(n):
            cols.setdefault(bin(v).count("1"), []).append(v)
        pts = [(0.0, 0.0)] * n
        for level in range(bits + 1):
            group = cols.get(level, [])
            for idx, v in enumerate(sorted(group)):
                pts[v] = (0.08 + 0.84 * level / bits, 0.1 + 0.8 * (idx + 0.5) / len(group))
        return pts
    if fam == "prism":
        r = p[0]
        return ring(r, 0.44) + ring(r, 0.24)
    return ring(n, 0.42)
