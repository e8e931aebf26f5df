import random
from dataclasses import replace

import pytest

from narrowdots.analysis import DoubleDealOpportunity, classify_edge_direct
from narrowdots.core import (
    Boundary,
    Game,
    GameSpec,
    Position,
    apply_move,
    initial_position,
    inner,
    leg,
    legal_moves,
)
from narrowdots.errors import UnsupportedSpecError
from narrowdots.solver import MemoTable, solve
from narrowdots.strategy import (
    Agent,
    AgentMode,
    AgentState,
    DoubleDealChoice,
    Phase,
    double_deal_choice,
    first_move,
    supports,
)


def test_supported_specs():
    assert supports(GameSpec(Game.TRIANGLES, Boundary.CLOSED, 1))
    assert supports(GameSpec(Game.TRIANGLES, Boundary.CLOSED, 5))
    assert not supports(GameSpec(Game.TRIANGLES, Boundary.CLOSED, 2))
    assert not supports(GameSpec(Game.TRIANGLES, Boundary.OPEN, 3))
    assert supports(GameSpec(Game.BOXES, Boundary.CLOSED, 4))
    assert supports(GameSpec(Game.BOXES, Boundary.OPEN, 8))
    assert not supports(GameSpec(Game.BOXES, Boundary.CLOSED, 5))
    assert not supports(GameSpec(Game.BOXES, Boundary.CLOSED, 2))


def test_first_move_targets_the_center():
    assert first_move(GameSpec(Game.TRIANGLES, Boundary.CLOSED, 5)) == leg(4)
    assert first_move(GameSpec(Game.TRIANGLES, Boundary.CLOSED, 4)) == inner(3)
    assert first_move(GameSpec(Game.BOXES, Boundary.CLOSED, 6)) == inner(2)
    assert first_move(GameSpec(Game.BOXES, Boundary.OPEN, 4)) == inner(1)
    with pytest.raises(UnsupportedSpecError):
        first_move(GameSpec(Game.TRIANGLES, Boundary.CLOSED, 2))
    with pytest.raises(UnsupportedSpecError):
        first_move(GameSpec(Game.BOXES, Boundary.CLOSED, 7))


def _dd(p):
    from narrowdots.analysis import find_double_deals

    opps = find_double_deals(p)
    assert len(opps) == 1
    return opps[0]


def test_double_deal_choice_empty_remainder():
    p = Position((1, 0), (True,))
    assert double_deal_choice(p, _dd(p)) is DoubleDealChoice.TAKE_BOTH


def test_double_deal_choice_tie_takes_both():
    # remainder [1,1] is worth -2 to the mover: 2+v = 0 = -(2+v)
    p = Position((1, 0, 0, 1, 1), (True, False, False, True))
    assert double_deal_choice(p, _dd(p)) is DoubleDealChoice.TAKE_BOTH


def test_double_deal_choice_declines_on_bad_remainder():
    # remainder [1,0,1] is worth -3 to the mover: -1 vs +1
    p = Position((1, 0, 0, 1, 0, 1), (True, False, False, True, True))
    assert double_deal_choice(p, _dd(p)) is DoubleDealChoice.DOUBLE_DEAL


def test_opening_turn_plays_the_center_cut():
    spec = GameSpec(Game.TRIANGLES, Boundary.CLOSED, 5)
    agent = Agent()
    plan, state = agent.take_turn(initial_position(spec),
                                  AgentState(spec=spec, mode=AgentMode.CONSTRUCTIVE))
    assert plan.cuts == (leg(4),)
    assert state.phase is Phase.MIRRORING


def test_mirroring_turn_mirrors_a_good_cut():
    spec = GameSpec(Game.TRIANGLES, Boundary.CLOSED, 5)
    agent = Agent()
    state = AgentState(spec=spec, mode=AgentMode.CONSTRUCTIVE)
    p = initial_position(spec)
    plan, state = agent.take_turn(p, state)
    p = apply_move(p, plan.cuts[0]).resulting
    opp_cut = leg(2)
    p = apply_move(p, opp_cut).resulting
    state = replace(state, opp_last_base_move=opp_cut)
    plan, state = agent.take_turn(p, state)
    assert plan.cuts == (leg(6),)  # mirror of leg(2) on the 9-coin strip


def test_medium_chain_outer_cut_takes_freed_coins_not_the_mirror():
    spec = GameSpec(Game.TRIANGLES, Boundary.CLOSED, 5)
    agent = Agent()
    state = AgentState(spec=spec, mode=AgentMode.CONSTRUCTIVE)
    p = initial_position(spec)
    plan, state = agent.take_turn(p, state)  # Leg(4)
    p = apply_move(p, plan.cuts[0]).resulting
    opp_cut = inner(1)  # outer edge of the left medium chain
    p = apply_move(p, opp_cut).resulting
    state = replace(state, opp_last_base_move=opp_cut)
    plan, state = agent.take_turn(p, state)
    # the two freed coins are taken; the reply is a good cut, never the
    # bad mirror Inner(6) of the opponent's cut
    assert plan.cuts[:2] == (inner(0), leg(0))
    assert len(plan.cuts) == 3
    assert plan.cuts[2] != inner(6)
    assert state.phase is Phase.CONTROL
    final = p
    for cut in plan.cuts:
        final = apply_move(final, cut).resulting
    assert solve(final).value <= 0  # nothing left on the table for B


def test_turn_plan_shape():
    # every cut but the last captures
    rng = random.Random(30)
    memo = MemoTable()
    for _ in range(60):
        spec = GameSpec(Game.TRIANGLES, Boundary.CLOSED, rng.choice([3, 4]))
        agent = Agent(memo=memo)
        state = AgentState(spec=spec, mode=AgentMode.CONSTRUCTIVE)
        p = initial_position(spec)
        while not p.is_terminal():
            if p.to_move == "A":
                plan, state = agent.take_turn(p, state)
                for i, cut in enumerate(plan.cuts):
                    out = apply_move(p, cut)
                    if i < len(plan.cuts) - 1:
                        assert out.captured
                    p = out.resulting
                assert p.is_terminal() or p.to_move == "B"
            else:
                e = rng.choice(legal_moves(p))
                out = apply_move(p, e)
                if not out.captured:
                    state = replace(state, opp_last_base_move=e)
                p = out.resulting


def test_phase_moves_forward_only():
    rng = random.Random(31)
    order = {Phase.OPENING: 0, Phase.MIRRORING: 1, Phase.CONTROL: 2}
    for _ in range(40):
        spec = GameSpec(Game.BOXES, Boundary.CLOSED, 4)
        agent = Agent()
        state = AgentState(spec=spec, mode=AgentMode.CONSTRUCTIVE)
        p = initial_position(spec)
        seen = 0
        while not p.is_terminal():
            if p.to_move == "A":
                plan, state = agent.take_turn(p, state)
                assert order[state.phase] >= seen
                seen = order[state.phase]
                for cut in plan.cuts:
                    p = apply_move(p, cut).resulting
            else:
                e = rng.choice(legal_moves(p))
                out = apply_move(p, e)
                if not out.captured:
                    state = replace(state, opp_last_base_move=e)
                p = out.resulting


def test_no_gifts_while_mirroring():
    # every non-capturing agent cut in the mirroring phase is a good edge
    rng = random.Random(32)
    memo = MemoTable()
    for _ in range(80):
        spec = GameSpec(*rng.choice([
            (Game.TRIANGLES, Boundary.CLOSED, 4),
            (Game.TRIANGLES, Boundary.CLOSED, 5),
            (Game.BOXES, Boundary.CLOSED, 4),
            (Game.BOXES, Boundary.OPEN, 4),
        ]))
        agent = Agent(memo=memo)
        state = AgentState(spec=spec, mode=AgentMode.CONSTRUCTIVE)
        p = initial_position(spec)
        while not p.is_terminal():
            if p.to_move == "A":
                pre_phase = state.phase
                if pre_phase is not Phase.CONTROL:
                    # bounded deficit before the endgame
                    assert p.captured_net >= -1
                plan, state = agent.take_turn(p, state)
                for cut in plan.cuts:
                    out = apply_move(p, cut)
                    if (pre_phase is Phase.MIRRORING
                            and state.phase is Phase.MIRRORING
                            and not out.captured):
                        assert classify_edge_direct(p, cut).value == "good", \
                            (spec, p.legs, p.inner, cut)
                    p = out.resulting
            else:
                e = rng.choice(legal_moves(p))
                out = apply_move(p, e)
                if not out.captured:
                    state = replace(state, opp_last_base_move=e)
                p = out.resulting


def test_solver_assisted_mode_plays_optimally():
    rng = random.Random(33)
    memo = MemoTable()
    for _ in range(40):
        spec = GameSpec(Game.BOXES, Boundary.CLOSED, rng.choice([2, 3, 5]))
        agent = Agent(memo=memo)
        state = AgentState(spec=spec, mode=AgentMode.SOLVER_ASSISTED)
        p = initial_position(spec)
        value = solve(p, memo).value
        guaranteed = 0
        while not p.is_terminal():
            if p.to_move == "A":
                plan, state = agent.take_turn(p, state)
                for cut in plan.cuts:
                    out = apply_move(p, cut)
                    guaranteed += len(out.captured)
                    p = out.resulting
            else:
                out = apply_move(p, solve(p, memo).best)
                guaranteed -= len(out.captured)
                p = out.resulting
        # optimal vs optimal lands exactly on the game value
        assert p.captured_net == value
