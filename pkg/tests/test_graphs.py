from __future__ import annotations

import itertools

import pytest

from graceful_game.errors import InvalidParamsError, TooLargeError
from graceful_game.graphs import (
    FamilySpec,
    Graph,
    automorphisms,
    bipartition,
    build_family,
    compose,
    diameter,
    find_isomorphism,
    graph_from_json,
    graph_to_json,
    invert,
    layout,
    path_power,
    to_dot,
)


def spec(family, *params):
    return FamilySpec(family, params)


# counts per the families' closed forms
COUNT_CASES = []
for n in range(1, 9):
    COUNT_CASES.append((spec("path", n), n, n - 1))
for n in range(3, 12):
    COUNT_CASES.append((spec("cycle", n), n, n))
for n in range(1, 6):
    COUNT_CASES.append((spec("complete", n), n, n * (n - 1) // 2))
for p, q in itertools.product(range(1, 5), range(1, 5)):
    COUNT_CASES.append((spec("complete_bipartite", p, q), p + q, p * q))
for q in range(1, 7):
    COUNT_CASES.append((spec("star", q), q + 1, q))
for ks in [(1, 2), (2, 2), (2, 0, 2), (1, 0, 3), (3,)]:
    COUNT_CASES.append((spec("caterpillar", *ks), len(ks) + sum(ks), len(ks) - 1 + sum(ks)))
for n in range(3, 8):
    COUNT_CASES.append((spec("wheel", n), n + 1, 2 * n))
    COUNT_CASES.append((spec("gear", n), 2 * n + 1, 3 * n))
    COUNT_CASES.append((spec("helm", n), 2 * n + 1, 3 * n))
for t, n in itertools.product((2, 3), (3, 4, 5)):
    COUNT_CASES.append((spec("web", t, n), n * (t + 1) + 1, n * (2 * t + 1)))
for n in range(1, 5):
    COUNT_CASES.append((spec("hypercube", n), 2**n, n * 2 ** (n - 1)))
for r in range(3, 7):
    COUNT_CASES.append((spec("prism", r), 2 * r, 3 * r))
for n, k in itertools.product(range(1, 9), (1, 2, 3)):
    COUNT_CASES.append(
        (spec("path_power", n, k), n, sum(max(0, n - d) for d in range(1, k + 1)))
    )


@pytest.mark.parametrize("fspec,nv,ne", COUNT_CASES, ids=lambda c: getattr(c, "label", c))
def test_family_counts(fspec, nv, ne):
    g = build_family(fspec)
    assert g.n_vertices == nv
    assert g.m == ne
    # adjacency consistent with the edge set
    for u, v in g.edges:
        assert v in g.adjacency[u] and u in g.adjacency[v]
    assert sum(g.degree(v) for v in range(g.n_vertices)) == 2 * g.m


def test_headline_count_examples():
    assert (build_family(spec("wheel", 4)).n_vertices, build_family(spec("wheel", 4)).m) == (5, 8)
    assert (build_family(spec("web", 2, 4)).n_vertices, build_family(spec("web", 2, 4)).m) == (13, 20)
    assert (build_family(spec("path", 1)).n_vertices, build_family(spec("path", 1)).m) == (1, 0)
    assert (build_family(spec("hypercube", 3)).n_vertices, build_family(spec("hypercube", 3)).m) == (8, 12)


def test_invalid_params():
    for bad in [spec("cycle", 2), spec("wheel", 2), spec("gear", 1), spec("helm", 0),
                spec("web", 1, 4), spec("web", 2, 2), spec("hypercube", 0),
                spec("prism", 2), spec("path_power", 0, 2), spec("path_power", 3, 0),
                spec("path", 0), spec("complete_bipartite", 0, 3)]:
        with pytest.raises(InvalidParamsError):
            build_family(bad)
    with pytest.raises(InvalidParamsError):
        FamilySpec("triangle_zoo", (3,))
    with pytest.raises(InvalidParamsError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(InvalidParamsError):
        Graph.from_edges(2, [(0, 5)])


def test_vertex_naming_conventions():
    w = build_family(spec("wheel", 4))
    assert w.names[4] == "center" and w.degree(4) == 4  # hub last
    h = build_family(spec("helm", 3))
    assert h.names[0] == "center"  # hub first
    assert h.has_edge(1, 4) and h.has_edge(2, 5) and h.has_edge(3, 6)  # pendant k at n+k
    g = build_family(spec("gear", 3))
    assert g.names[3] == "center"
    for j in range(3):
        w_j = 4 + j
        assert g.has_edge(j, w_j) and g.has_edge(w_j, (j + 1) % 3)
        assert not g.has_edge(j, (j + 1) % 3)  # ring edges are all subdivided
    web = build_family(spec("web", 2, 4))
    for k in range(1, 5):
        assert web.has_edge(k, 4 + k)        # pendant to outer ring
        assert web.has_edge(4 + k, 8 + k)    # outer ring to inner ring (radial)
        assert web.has_edge(8 + k, 0)        # inner ring to hub
        assert not web.has_edge(k, 0)


def test_path_power():
    assert path_power(4, 2).m == 5
    assert path_power(5, 1).edges == build_family(spec("path", 5)).edges
    iso = find_isomorphism(path_power(3, 2), build_family(spec("cycle", 3)))
    assert iso is not None


def test_automorphism_groups():
    assert len(automorphisms(build_family(spec("complete", 4)))) == 24
    assert len(automorphisms(build_family(spec("path", 2)))) == 2
    assert len(automorphisms(build_family(spec("cycle", 4)))) == 8
    assert len(automorphisms(build_family(spec("cycle", 5)))) == 10
    assert len(automorphisms(build_family(spec("hypercube", 3)))) == 48


def test_automorphisms_form_a_group():
    for fspec in [spec("wheel", 4), spec("gear", 3), spec("helm", 3), spec("star", 4),
                  spec("prism", 3), spec("path", 5), spec("cycle", 6),
                  spec("caterpillar", 1, 2), spec("hypercube", 3)]:
        g = build_family(fspec)
        if g.n_vertices > 8:
            continue
        autos = set(automorphisms(g))
        assert tuple(range(g.n_vertices)) in autos
        for a, b in itertools.product(autos, repeat=2):
            assert compose(a, b) in autos
        for a in autos:
            assert invert(a) in autos


def test_automorphism_cap():
    with pytest.raises(TooLargeError):
        automorphisms(build_family(spec("web", 2, 6)))  # 19 vertices


def test_hypercube_structure():
    for n in range(1, 5):
        q = build_family(spec("hypercube", n))
        parts = bipartition(q)
        assert parts is not None
        assert all(q.degree(v) == n for v in range(q.n_vertices))
    assert find_isomorphism(build_family(spec("hypercube", 2)), build_family(spec("cycle", 4)))


def test_caterpillar_diameter():
    assert diameter(build_family(spec("caterpillar", 1, 2))) == 3
    assert diameter(build_family(spec("caterpillar", 2, 0, 2))) == 4
    assert diameter(build_family(spec("star", 4))) == 2


def test_json_round_trip():
    g = build_family(spec("gear", 4))
    data = graph_to_json(g)
    assert data["n"] == 9 and len(data["edges"]) == 12
    h = graph_from_json(data)
    assert h.edges == g.edges and h.names == g.names and h.family == g.family


def test_dot_export():
    g = build_family(spec("wheel", 3))
    dot = to_dot(g)
    assert dot.count(" -- ") == g.m  # one line per edge
    assert 'label="center"' in dot
    labeled = to_dot(g, labeling=(1, 2, None, 0))
    assert "= 1" in labeled and "= 0" in labeled


def test_layouts_cover_every_family():
    for fspec in [spec("path", 4), spec("cycle", 5), spec("complete", 4),
                  spec("complete_bipartite", 2, 3), spec("star", 4),
                  spec("caterpillar", 1, 2), spec("wheel", 4), spec("gear", 3),
                  spec("helm", 3), spec("web", 2, 3), spec("hypercube", 3),
                  spec("prism", 4), spec("path_power", 5, 2)]:
        g = build_family(fspec)
        pts = layout(g)
        assert len(pts) == g.n_vertices
        assert all(0 <= x <= 1 and 0 <= y <= 1 for x, y in pts)
        assert len(set(pts)) == g.n_vertices  # no overlapping vertices
