"""Strings-and-Coins engine for narrow (1xn) Dots-and-Boxes and Dots-and-Triangles.

A position is a strip of coins in a fixed global coordinate frame
(coin indices 0..m-1 of the original board).  Each coin carries a
ground-leg multiplicity; consecutive coins may be joined by one inner
string.  Coins whose degree reaches zero are captured and removed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import IllegalMoveError

PLAYER_A = "A"
PLAYER_B = "B"


class Game(str, enum.Enum):
    BOXES = "boxes"
    TRIANGLES = "triangles"


class Boundary(str, enum.Enum):
    OPEN = "open"
    CLOSED = "closed"


class EdgeKind(enum.IntEnum):
    LEG = 0
    INNER = 1


@dataclass(frozen=True)
class GameSpec:
    """Variant descriptor; fixes the initial strip."""

    game: Game
    boundary: Boundary
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("board length n must be >= 1")

    @property
    def coin_count(self) -> int:
        return self.n if self.game is Game.BOXES else 2 * self.n - 1


@dataclass(frozen=True, order=True)
class EdgeRef:
    """Names a string in global strip coordinates.

    LEG(i) is the ground-leg bundle at coin i; INNER(i) is the string
    between coins i and i+1.  Multiple legs at one coin are a single
    weighted bundle: a LEG cut decrements the multiplicity by one.
    """

    kind: EdgeKind
    index: int

    def __repr__(self):
        name = "Leg" if self.kind is EdgeKind.LEG else "Inner"
        return f"{name}({self.index})"


def leg(i: int) -> EdgeRef:
    return EdgeRef(EdgeKind.LEG, i)


def inner(i: int) -> EdgeRef:
    return EdgeRef(EdgeKind.INNER, i)


@dataclass(frozen=True)
class Position:
    """Immutable game state: leg multiplicities, inner strings, score, turn.

    legs[i] is coin i's remaining ground-leg multiplicity (0..4); a coin
    with total degree zero has been captured.  inner[i] is True when the
    string between coins i and i+1 is uncut.  captured_net is coins taken
    by A minus coins taken by B.
    """

    legs: tuple[int, ...]
    inner: tuple[bool, ...]
    captured_net: int = 0
    to_move: str = PLAYER_A

    def __post_init__(self):
        if len(self.inner) != max(len(self.legs) - 1, 0):
            raise ValueError("inner string count must be coin count - 1")

    @property
    def coin_count(self) -> int:
        return len(self.legs)

    def degree(self, i: int) -> int:
        d = self.legs[i]
        if i > 0 and self.inner[i - 1]:
            d += 1
        if i + 1 < len(self.legs) and self.inner[i]:
            d += 1
        return d

    def alive(self, i: int) -> bool:
        return self.degree(i) > 0

    def coins_remaining(self) -> int:
        return sum(1 for i in range(len(self.legs)) if self.degree(i) > 0)

    def is_terminal(self) -> bool:
        return self.coins_remaining() == 0

    def string_count(self) -> int:
        return sum(self.legs) + sum(self.inner)


@dataclass(frozen=True)
class MoveOutcome:
    captured: tuple[int, ...]
    extra_turn: bool
    resulting: Position


def initial_position(spec: GameSpec) -> Position:
    """Initial strip for the four variants (see the per-variant leg layouts)."""
    n = spec.n
    if spec.game is Game.BOXES:
        if spec.boundary is Boundary.CLOSED:
            legs = (1,) * n
        elif n == 1:
            legs = (4,)  # top, bottom and both sides of the lone box
        else:
            legs = (3,) + (2,) * (n - 2) + (3,)
    else:
        m = 2 * n - 1
        if spec.boundary is Boundary.CLOSED:
            legs = tuple(1 if i % 2 == 0 else 0 for i in range(m))
        elif n == 1:
            legs = (3,)  # base plus both slanted sides
        else:
            legs = (2,) + (1,) * (m - 2) + (2,)
    return Position(legs=legs, inner=(True,) * (len(legs) - 1))


def components(p: Position) -> list[tuple[int, int]]:
    """Maximal runs [a, b] of coins joined by inner strings; captured coins excluded."""
    runs = []
    m = p.coin_count
    i = 0
    while i < m:
        if not p.alive(i):
            i += 1
            continue
        a = i
        while i + 1 < m and p.inner[i]:
            i += 1
        runs.append((a, i))
        i += 1
    return runs


def component_of(p: Position, e: EdgeRef) -> int:
    """Index (in components(p) order) of the component containing edge e."""
    coin = e.index
    for ci, (a, b) in enumerate(components(p)):
        if a <= coin <= b:
            return ci
    raise IllegalMoveError(f"{e} is not in any component")


def move_sort_key(p: Position, e: EdgeRef):
    return (component_of(p, e), int(e.kind), e.index)


def legal_moves(p: Position) -> list[EdgeRef]:
    """One entry per distinct cut effect: each inner string, each leg bundle."""
    moves = []
    for i, (count, alive) in enumerate(zip(p.legs, map(p.alive, range(p.coin_count)))):
        if alive and count >= 1:
            moves.append(leg(i))
    for i, present in enumerate(p.inner):
        if present:
            moves.append(inner(i))
    moves.sort(key=lambda e: move_sort_key(p, e))
    return moves


def is_legal(p: Position, e: EdgeRef) -> bool:
    if e.kind is EdgeKind.LEG:
        return 0 <= e.index < p.coin_count and p.legs[e.index] >= 1
    return 0 <= e.index < len(p.inner) and p.inner[e.index]


def apply_move(p: Position, e: EdgeRef) -> MoveOutcome:
    """Cut string e; capture any coin whose degree reaches zero, crediting the mover."""
    if not is_legal(p, e):
        raise IllegalMoveError(f"{e} is not a legal cut")
    legs = list(p.legs)
    inner_ = list(p.inner)
    if e.kind is EdgeKind.LEG:
        legs[e.index] -= 1
        endpoints = (e.index,)
    else:
        inner_[e.index] = False
        endpoints = (e.index, e.index + 1)

    probe = Position(tuple(legs), tuple(inner_), p.captured_net, p.to_move)
    captured = tuple(i for i in endpoints if probe.degree(i) == 0 and _was_alive(p, i))
    sign = 1 if p.to_move == PLAYER_A else -1
    net = p.captured_net + sign * len(captured)
    resulting = Position(tuple(legs), tuple(inner_), net, p.to_move)
    terminal = resulting.is_terminal()
    extra = bool(captured) and not terminal
    if not extra:
        resulting = Position(
            tuple(legs), tuple(inner_), net,
            PLAYER_B if p.to_move == PLAYER_A else PLAYER_A,
        )
    return MoveOutcome(captured=captured, extra_turn=extra, resulting=resulting)


def _was_alive(p: Position, i: int) -> bool:
    return p.degree(i) > 0


def mirror(p: Position) -> Position:
    """Reflect the whole strip; an involution."""
    return Position(p.legs[::-1], p.inner[::-1], p.captured_net, p.to_move)


def mirror_edge(p: Position, e: EdgeRef) -> EdgeRef:
    """Reflected edge in the full-strip frame; an involution."""
    m = p.coin_count
    if e.kind is EdgeKind.LEG:
        return leg(m - 1 - e.index)
    return inner(m - 2 - e.index)


def restore_edge(p: Position, e: EdgeRef) -> Position:
    """Undo a non-capturing cut of e (both endpoints must still be alive)."""
    if e.kind is EdgeKind.LEG:
        if not p.alive(e.index):
            raise IllegalMoveError(f"cannot restore {e}: coin was captured")
        legs = list(p.legs)
        legs[e.index] += 1
        return Position(tuple(legs), p.inner, p.captured_net, p.to_move)
    if not (p.alive(e.index) and p.alive(e.index + 1)):
        raise IllegalMoveError(f"cannot restore {e}: endpoint was captured")
    inner_ = list(p.inner)
    inner_[e.index] = True
    return Position(p.legs, tuple(inner_), p.captured_net, p.to_move)


def component_legs(p: Position) -> list[tuple[int, ...]]:
    """Leg-multiplicity sequences of the components, in strip order."""
    return [tuple(p.legs[a:b + 1]) for a, b in components(p)]


def canonical_key(p: Position):
    """Equal keys iff positions match up to permuting/reversing components.

    captured_net and to_move are excluded; the solver stores mover-relative
    values keyed on the remaining graph only.
    """
    return tuple(sorted(min(c, c[::-1]) for c in component_legs(p)))
