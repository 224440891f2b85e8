"""
Perfect play at desk scale
==========================

The solver explores the game tree with a transposition table keyed on
symmetry-reduced positions and prunes any position whose partial labeling
has no graceful completion (no line from there can end in an Alice win).
"""

from graceful_game import ACCEPTANCE_SPECS, FamilySpec, Player, build_family, solve, solve_table

# One instance in detail: the 4-wheel.
w4 = build_family(FamilySpec("wheel", (4,)))
res = solve(w4, Player.BOB)
print(f"W4, Bob first: {res.winner.value} wins "
      f"({res.nodes_expanded} nodes expanded)")
print("Bob's winning openings include the hub with label 4:",
      (4, 4) in res.optimal_moves)
print("one optimal line:", res.principal_variation)

# The whole winners table.
print(f"\n{'instance':<10}{'Alice first':<13}{'Bob first':<10}")
for row in solve_table(ACCEPTANCE_SPECS):
    a = "A" if row.alice_first is Player.ALICE else "B"
    b = "A" if row.bob_first is Player.ALICE else "B"
    print(f"{row.label:<10}{a:<13}{b:<10}")
