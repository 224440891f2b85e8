from __future__ import annotations

from pathlib import Path

import pytest

from graceful_game.graphs import FamilySpec, build_family

GOLDEN = Path(__file__).parent / "golden"

# column order of each golden file: which of our vertex indices each column holds
GOLDEN_COLUMNS = {
    "p4.txt": [0, 1, 2, 3],
    "k4.txt": [0, 1, 2, 3],
    "c4.txt": [0, 1, 2, 3],
    "w4.txt": [0, 1, 2, 3, 4],
    "w5_center0.txt": [0, 1, 2, 3, 4, 5],
    # ring-edge file order: hub, then alternating ring/subdivision vertices
    "g3_ring_edge_m.txt": [3, 0, 4, 1, 5, 2, 6],
    "p32.txt": [0, 1, 2, 3, 4, 5],
}


def load_golden(name: str) -> list[tuple[int, ...]]:
    cols = GOLDEN_COLUMNS[name]
    out = []
    for line in (GOLDEN / name).read_text().splitlines():
        if not line.strip():
            continue
        row = [int(x) for x in line.split(",")]
        labels = [None] * len(cols)
        for col, value in zip(cols, row):
            labels[col] = value
        out.append(tuple(labels))
    return out


@pytest.fixture(scope="session")
def graphs():
    """The graphs that appear throughout the suite, built once."""
    specs = {
        "P2": FamilySpec("path", (2,)),
        "P3": FamilySpec("path", (3,)),
        "P4": FamilySpec("path", (4,)),
        "P5": FamilySpec("path", (5,)),
        "K3": FamilySpec("complete", (3,)),
        "K4": FamilySpec("complete", (4,)),
        "C4": FamilySpec("cycle", (4,)),
        "C5": FamilySpec("cycle", (5,)),
        "K13": FamilySpec("star", (3,)),
        "K23": FamilySpec("complete_bipartite", (2, 3)),
        "W4": FamilySpec("wheel", (4,)),
        "W5": FamilySpec("wheel", (5,)),
        "G3": FamilySpec("gear", (3,)),
        "H3": FamilySpec("helm", (3,)),
        "Q3": FamilySpec("hypercube", (3,)),
        "P32": FamilySpec("prism", (3,)),
    }
    return {k: build_family(s) for k, s in specs.items()}
