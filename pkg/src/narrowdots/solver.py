"""Exact optimal net-score search with mover-relative memoization.

Values are stored per canonical component multiset (captured coins and the
identity of the player to move are factored out).  A capturing cut keeps
the same mover, so within-turn chains of captures fold into the recursion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    EdgeRef,
    GameSpec,
    Position,
    apply_move,
    component_legs,
    initial_position,
    legal_moves,
)
from .errors import MemoLimitExceeded

Comp = tuple[int, ...]
State = tuple[Comp, ...]


@dataclass(frozen=True)
class SolveResult:
    value: int
    best: EdgeRef | None
    nodes: int


class MemoTable:
    """Value table with an explicit entry budget; overflow fails fast."""

    def __init__(self, max_entries: int | None = None):
        self.values: dict[State, int] = {}
        self.max_entries = max_entries
        self._expansions: dict[Comp, tuple[tuple[int, State], ...]] = {}

    def __len__(self):
        return len(self.values)

    def store(self, state: State, value: int):
        if self.max_entries is not None and len(self.values) >= self.max_entries:
            raise MemoLimitExceeded(
                f"memo table exceeded budget of {self.max_entries} entries")
        self.values[state] = value


def _canon(comp: Comp) -> Comp:
    rev = comp[::-1]
    return comp if comp <= rev else rev


def canonical_state(p: Position) -> State:
    return tuple(sorted(_canon(c) for c in component_legs(p)))


def _expand_component(comp: Comp, memo: MemoTable) -> tuple[tuple[int, State], ...]:
    """Distinct cut effects on one component: (captures, replacement comps)."""
    cached = memo._expansions.get(comp)
    if cached is not None:
        return cached
    effects = set()
    L = len(comp)
    for i, mult in enumerate(comp):
        if mult < 1:
            continue
        if L == 1:
            effects.add((1, ()) if mult == 1 else (0, ((mult - 1,),)))
        else:
            repl = comp[:i] + (mult - 1,) + comp[i + 1:]
            effects.add((0, (_canon(repl),)))
    for i in range(L - 1):
        sides = (comp[:i + 1], comp[i + 1:])
        captured = 0
        keep = []
        for side in sides:
            if len(side) == 1 and side[0] == 0:
                captured += 1
            else:
                keep.append(_canon(side))
        effects.add((captured, tuple(sorted(keep))))
    result = tuple(sorted(effects))
    memo._expansions[comp] = result
    return result


def _children(state: State, memo: MemoTable):
    seen = set()
    for ci, comp in enumerate(state):
        if ci > 0 and state[ci - 1] == comp:
            continue
        rest = state[:ci] + state[ci + 1:]
        for captured, repl in _expand_component(comp, memo):
            child = tuple(sorted(rest + repl))
            key = (captured, child)
            if key not in seen:
                seen.add(key)
                yield captured, child


def _value(state: State, memo: MemoTable) -> int:
    if not state:
        return 0
    hit = memo.values.get(state)
    if hit is not None:
        return hit
    best = None
    stack_val = None
    for captured, child in _children(state, memo):
        if not child:
            v = captured
        elif captured:
            v = captured + _value(child, memo)
        else:
            v = -_value(child, memo)
        if stack_val is None or v > stack_val:
            stack_val = v
    best = stack_val
    memo.store(state, best)
    return best


def solve(p: Position, memo: MemoTable | None = None) -> SolveResult:
    """Optimal net score for the player to move, plus a first maximizing move.

    Ties break to the first move in the fixed EdgeRef order (component,
    then kind, then index) so results are fully deterministic.
    """
    memo = memo if memo is not None else MemoTable()
    before = len(memo)
    if p.is_terminal():
        return SolveResult(value=0, best=None, nodes=0)
    value = _value(canonical_state(p), memo)
    best = None
    for e in legal_moves(p):
        out = apply_move(p, e)
        captured = len(out.captured)
        child = canonical_state(out.resulting)
        if not child:
            v = captured
        elif captured:
            v = captured + _value(child, memo)
        else:
            v = -_value(child, memo)
        if v == value:
            best = e
            break
    assert best is not None
    return SolveResult(value=value, best=best, nodes=len(memo) - before)


def score_table(game, boundary, n_max: int,
                memo: MemoTable | None = None) -> list[tuple[int, int]]:
    """solve() applied to each initial position, n = 1..n_max, sharing one memo."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    memo = memo if memo is not None else MemoTable()
    rows = []
    for n in range(1, n_max + 1):
        p = initial_position(GameSpec(game=game, boundary=boundary, n=n))
        rows.append((n, solve(p, memo).value))
    return rows


def principal_variation(p: Position, memo: MemoTable | None = None) -> list[EdgeRef]:
    """A move sequence realizing solve(p).value under the fixed tie-breaking."""
    memo = memo if memo is not None else MemoTable()
    line = []
    while not p.is_terminal():
        e = solve(p, memo).best
        line.append(e)
        p = apply_move(p, e).resulting
    return line
