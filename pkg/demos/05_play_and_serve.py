"""
Playing against the engine
==========================

A full game, driven through the same code paths the HTTP service uses:
human Alice on the 5-path against the scripted breaker.  Bob opens with 0
on an end vertex, Alice is forced to answer with the top label next door,
and Bob then cuts off the second-highest edge difference for good.
"""

from graceful_game import (
    FamilySpec,
    Move,
    Player,
    Status,
    StrategyId,
    best_move,
    build_family,
    legal_moves,
    new_game,
    play_move,
    scripted_move,
    status,
)

p5 = build_family(FamilySpec("path", (5,)))
state = new_game(p5, Player.BOB)

while status(state) is Status.IN_PROGRESS:
    if state.to_move is Player.BOB:
        mv = scripted_move(StrategyId.BOB_PATH, state)
        who = "Bob (scripted)"
    else:
        mv = best_move(state)  # Alice defends as well as possible
        who = "Alice (solver)"
    state = play_move(state, mv)
    print(f"{who}: vertex {mv.vertex} <- {mv.label}   board={list(state.labeling.labels)}")

print("\nresult:", status(state).value)
print("moves that were still legal at the end:", legal_moves(state))

# The HTTP service wraps exactly this loop; start it with
#   graceful-game serve --port 8000
# and drive it from the browser board in frontend/ or with curl:
#   curl -s -X POST localhost:8000/games \
#        -d '{"family":"path","n":5,"first":"bob","human":"alice","engine":"scripted:bob-path"}'
