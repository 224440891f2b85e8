"""
Scripted strategies and exhaustive verification
===============================================

Each known winning line is transcribed as a deterministic script.  The
verifier plays the script against every legal opponent reply; branches
whose partial labeling admits no graceful completion close immediately,
and states the script does not cover fall back to the solver (counted in
the verdict).
"""

from graceful_game import (
    FamilySpec,
    Move,
    Player,
    StrategyId,
    build_family,
    new_game,
    play_move,
    scripted_move,
    verify_strategy,
)

# Watch the helm script react: Alice grabs the hub with 1, Bob answers by
# dropping the top label on a pendant, threatening an edge the hub's 1
# can never serve.
h3 = build_family(FamilySpec("helm", (3,)))
st = play_move(new_game(h3, Player.ALICE), Move(0, 1))
print("Alice: hub <- 1; Bob's scripted answer:", scripted_move(StrategyId.BOB_HELM, st))

# Exhaustive verification of a few headline instances.
for sid, spec, first in [
    (StrategyId.BOB_PATH, FamilySpec("path", (6,)), Player.ALICE),
    (StrategyId.BOB_GEAR, FamilySpec("gear", (3,)), Player.ALICE),
    (StrategyId.BOB_WEB, FamilySpec("web", (2, 3)), Player.BOB),
    (StrategyId.BOB_HYPERCUBE, FamilySpec("hypercube", (3,)), Player.BOB),
    (StrategyId.ALICE_STAR_FIRST, FamilySpec("star", (4,)), Player.ALICE),
]:
    v = verify_strategy(sid, spec, first)
    print(
        f"{sid.value:<16} on {spec.label:<8} ({first.value} first): "
        f"holds={v.holds} lines={v.lines_checked} solver-fallbacks={v.offscript_count}"
    )
