"""The constructive first-player agent: center opening, quasi-mirroring,
and the controlled endgame with the double-deal decision.

The agent is Markov in (position, opponent's last base-graph cut, phase).
Phases only move forward: OPENING -> MIRRORING -> CONTROL.  In CONTROL,
base-graph decisions are solver-exact; free captures stay rule-based.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .analysis import (
    ChainCategory,
    DoubleDealOpportunity,
    chain_containing,
    decompose,
    find_double_deals,
    max_capturable,
)
from .core import (
    EdgeKind,
    EdgeRef,
    Game,
    GameSpec,
    Boundary,
    Position,
    apply_move,
    inner,
    is_legal,
    leg,
    legal_moves,
    mirror_edge,
    restore_edge,
)
from .errors import StrategyViolationError, UnsupportedSpecError
from .solver import MemoTable, solve


class Phase(enum.Enum):
    OPENING = "opening"
    MIRRORING = "mirroring"
    CONTROL = "control"


class AgentMode(enum.Enum):
    CONSTRUCTIVE = "constructive"
    SOLVER_ASSISTED = "solver_assisted"


class DoubleDealChoice(enum.Enum):
    TAKE_BOTH = "take_both"
    DOUBLE_DEAL = "double_deal"


@dataclass(frozen=True)
class AgentState:
    spec: GameSpec
    mode: AgentMode
    phase: Phase = Phase.OPENING
    opp_last_base_move: EdgeRef | None = None


@dataclass(frozen=True)
class TurnPlan:
    """Cuts the agent executes within one turn.  All but the last capture."""

    cuts: tuple[EdgeRef, ...]


def supports(spec: GameSpec) -> bool:
    """Specs covered by the constructive strategy (the two theorems)."""
    if spec.game is Game.TRIANGLES:
        return spec.boundary is Boundary.CLOSED and spec.n != 2
    return spec.n >= 4 and spec.n % 2 == 0


def first_move(spec: GameSpec) -> EdgeRef:
    """Opening cut closest to the middle of the strip.

    Odd-n triangles take the center interior leg; even-n triangles the
    center-right inner string (the one removed in the paper's opening
    diagram); even-n boxes the self-mirrored center inner string.
    """
    if not supports(spec):
        raise UnsupportedSpecError(
            f"no covered constructive strategy for {spec.game.value} "
            f"{spec.boundary.value} n={spec.n}")
    if spec.game is Game.TRIANGLES:
        if spec.n % 2 == 1:
            return leg(spec.n - 1)
        return inner(spec.n - 1)
    return inner(spec.n // 2 - 1)


def double_deal_choice(p: Position, opp: DoubleDealOpportunity,
                       memo: MemoTable | None = None) -> DoubleDealChoice:
    """Take both coins iff 2 + v >= -(2 + v), where v is the mover-relative
    value of the remainder once x, y and the pair are gone; ties take both."""
    v = solve(_remainder_after_pair(p, opp), memo).value
    return (DoubleDealChoice.TAKE_BOTH if 2 + v >= -(2 + v)
            else DoubleDealChoice.DOUBLE_DEAL)


def _remainder_after_pair(p: Position, opp: DoubleDealOpportunity) -> Position:
    legs = list(p.legs)
    inner_ = list(p.inner)
    for e in (opp.x, opp.y):
        if e.kind is EdgeKind.LEG:
            legs[e.index] -= 1
        else:
            inner_[e.index] = False
    return Position(tuple(legs), tuple(inner_), p.captured_net, p.to_move)


class Agent:
    """Stateless decision engine; all game state travels in AgentState."""

    def __init__(self, memo: MemoTable | None = None):
        self.memo = memo if memo is not None else MemoTable()

    def take_turn(self, p: Position, state: AgentState) -> tuple[TurnPlan, AgentState]:
        if state.mode is AgentMode.SOLVER_ASSISTED:
            return self._solver_turn(p, state)
        if state.phase is Phase.OPENING:
            cut = first_move(state.spec)
            return TurnPlan(cuts=(cut,)), replace(
                state, phase=Phase.MIRRORING, opp_last_base_move=None)
        if state.phase is Phase.MIRRORING and self._enter_control(p):
            state = replace(state, phase=Phase.CONTROL)
        if state.phase is Phase.CONTROL:
            return self._control_turn(p, state)
        return self._mirroring_turn(p, state)

    # -- phase logic -------------------------------------------------

    def _enter_control(self, p: Position) -> bool:
        return bool(find_double_deals(p)) or max_capturable(p) >= 3

    def _solver_turn(self, p, state):
        cuts = []
        while not p.is_terminal():
            e = solve(p, self.memo).best
            cuts.append(e)
            out = apply_move(p, e)
            p = out.resulting
            if not out.extra_turn:
                break
        return TurnPlan(cuts=tuple(cuts)), replace(
            state, phase=Phase.CONTROL, opp_last_base_move=None)

    def _control_turn(self, p, state):
        cuts = []
        while not p.is_terminal():
            opps = find_double_deals(p)
            pair_coins = {c for o in opps for c in o.pair}
            capture = self._leftmost_capture(p, exclude=pair_coins)
            if capture is not None:
                cuts.append(capture)
                out = apply_move(p, capture)
                p = out.resulting
                if not out.extra_turn:
                    break
                continue
            if len(opps) == 1:
                opp = opps[0]
                if double_deal_choice(p, opp, self.memo) is DoubleDealChoice.TAKE_BOTH:
                    e = opp.x
                else:
                    e = opp.y
            else:
                e = solve(p, self.memo).best
            cuts.append(e)
            out = apply_move(p, e)
            p = out.resulting
            if not out.extra_turn:
                break
        return TurnPlan(cuts=tuple(cuts)), replace(
            state, opp_last_base_move=None)

    def _mirroring_turn(self, p, state):
        # The response is chosen from the turn-start frame: the opponent's
        # turn-ending cut captured nothing, so restoring it reproduces the
        # position they faced, before our own captures disturb it.
        response = self._mirroring_response(p, state)
        cuts = []
        while True:
            capture = self._leftmost_capture(p)
            if capture is None:
                break
            cuts.append(capture)
            out = apply_move(p, capture)
            p = out.resulting
            if p.is_terminal():
                return TurnPlan(cuts=tuple(cuts)), state
        if not is_legal(p, response):
            raise StrategyViolationError(
                f"mirroring response {response} is not available", line=cuts)
        cuts.append(response)
        out = apply_move(p, response)
        if out.captured and not out.resulting.is_terminal():
            raise StrategyViolationError(
                f"mirroring response {response} captured unexpectedly", line=cuts)
        return TurnPlan(cuts=tuple(cuts)), replace(state, opp_last_base_move=None)

    def _mirroring_response(self, p: Position, state: AgentState) -> EdgeRef:
        e = state.opp_last_base_move
        if e is None:
            raise StrategyViolationError(
                "no opponent base-graph cut to respond to")
        q = restore_edge(p, e)
        dec = decompose(q)
        if e not in dec.base_edges:
            raise StrategyViolationError(
                f"opponent's turn-ending cut {e} was not a base-graph edge")
        chain = chain_containing(q, e)
        if chain.category is ChainCategory.LONG:
            raise StrategyViolationError(
                f"opponent opened a long chain with {e} without triggering "
                "control entry")
        if chain.category is ChainCategory.MEDIUM and e != chain.edges[1]:
            # Outer edge of a medium chain: take the good middle edge of the
            # chain's mirror image instead of the (bad) mirror edge.
            return mirror_edge(q, chain.edges[1])
        return mirror_edge(q, e)

    def _leftmost_capture(self, p: Position, exclude=frozenset()) -> EdgeRef | None:
        best = None
        best_coin = None
        for e in legal_moves(p):
            out = apply_move(p, e)
            if not out.captured or any(c in exclude for c in out.captured):
                continue
            coin = min(out.captured)
            if best_coin is None or coin < best_coin:
                best, best_coin = e, coin
        return best


def play_turn(agent: Agent, p: Position, state: AgentState):
    """Apply the agent's plan; returns (plan, new state, resulting position)."""
    plan, new_state = agent.take_turn(p, state)
    for e in plan.cuts:
        p = apply_move(p, e).resulting
    return plan, new_state, p
