"""Structural analysis: base graph, pendants, chains, and edge quality.

Two classifiers are provided.  classify_edge_direct is the ground truth:
it simulates a cut and asks whether the opponent can now reach a
double-dealing opportunity during their capture run.  classify_edge_structural
is the fast structural rule the agent uses (short chains and medium-chain
middles are good, everything else bad, pendant-incident edges bad).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import (
    EdgeKind,
    EdgeRef,
    Position,
    apply_move,
    components,
    inner,
    leg,
    legal_moves,
)
from .errors import IllegalMoveError


class EdgeClass(str, Enum):
    GOOD = "good"
    BAD = "bad"


class ChainCategory(str, Enum):
    SHORT = "short"
    MEDIUM = "medium"
    LONG = "long"


@dataclass(frozen=True)
class Chain:
    """A unit of the base-graph edge partition; length k means k+1 edges."""

    edges: tuple[EdgeRef, ...]
    length: int
    category: ChainCategory


@dataclass(frozen=True)
class Decomposition:
    base_edges: frozenset[EdgeRef]
    pendant_edges: frozenset[EdgeRef]
    pendant_coins: frozenset[int]
    exterior_legs: frozenset[EdgeRef]
    interior_legs: frozenset[EdgeRef]


@dataclass(frozen=True)
class DoubleDealOpportunity:
    """A degree-1 coin joined by x to a degree-2 coin whose other edge is y."""

    x: EdgeRef
    y: EdgeRef
    pair: tuple[int, int]


def _category(length: int) -> ChainCategory:
    if length <= 1:
        return ChainCategory.SHORT
    if length == 2:
        return ChainCategory.MEDIUM
    return ChainCategory.LONG


def _edges_of_component(p: Position, a: int, b: int) -> list[EdgeRef]:
    out = [leg(i) for i in range(a, b + 1) if p.legs[i] >= 1]
    out += [inner(i) for i in range(a, b)]
    return out


def decompose(p: Position) -> Decomposition:
    """Split every edge into base graph vs pendant, per the leg-span rule.

    Within a component, the base graph spans the outermost leg positions;
    coins and inner strings beyond that span are pendant.  Components with
    fewer than two legs (counting bundle multiplicity) are entirely pendant.
    """
    base: set[EdgeRef] = set()
    pend: set[EdgeRef] = set()
    pend_coins: set[int] = set()
    exterior: set[EdgeRef] = set()
    interior: set[EdgeRef] = set()
    for a, b in components(p):
        positions = [i for i in range(a, b + 1) if p.legs[i] >= 1]
        total_legs = sum(p.legs[i] for i in positions)
        if total_legs < 2:
            pend.update(_edges_of_component(p, a, b))
            pend_coins.update(range(a, b + 1))
            continue
        first, last = positions[0], positions[-1]
        for i in range(a, b + 1):
            if first <= i <= last:
                if p.legs[i] >= 1:
                    base.add(leg(i))
            else:
                pend_coins.add(i)
        for i in range(a, b):
            if first <= i and i + 1 <= last:
                base.add(inner(i))
            else:
                pend.add(inner(i))
        exterior.add(leg(first))
        exterior.add(leg(last))
        for i in positions:
            extra = p.legs[i] - (1 if i in (first, last) else 0)
            if extra >= 1:
                interior.add(leg(i))
    return Decomposition(
        base_edges=frozenset(base),
        pendant_edges=frozenset(pend),
        pendant_coins=frozenset(pend_coins),
        exterior_legs=frozenset(exterior),
        interior_legs=frozenset(interior),
    )


def chains(p: Position) -> list[Chain]:
    """Partition the base graph into chains.

    Leg bundles are handled unit by unit: every interior leg unit is its
    own length-0 chain, and each exterior unit anchors the path to the
    nearest interior leg position (or, with no interior legs, the single
    chain joining the two exterior legs).
    """
    out: list[Chain] = []
    for a, b in components(p):
        positions = [i for i in range(a, b + 1) if p.legs[i] >= 1]
        total_legs = sum(p.legs[i] for i in positions)
        if total_legs < 2:
            continue
        first, last = positions[0], positions[-1]
        # Interior leg units: extras at the span ends plus all strictly-inside legs.
        interior_positions: list[int] = []
        for i in positions:
            extra = p.legs[i] - (1 if i in (first, last) else 0)
            interior_positions.extend([i] * extra)
        if first == last:
            # Single leg position holding the whole bundle: the two exterior
            # units form one chain; any further units are length-0 chains.
            edges = (leg(first), leg(first))
            out.append(Chain(edges=edges, length=1, category=_category(1)))
            for _ in range(p.legs[first] - 2):
                out.append(Chain(edges=(leg(first),), length=0,
                                 category=ChainCategory.SHORT))
            continue
        if not interior_positions:
            edges = tuple([leg(first)]
                          + [inner(i) for i in range(first, last)]
                          + [leg(last)])
            length = len(edges) - 1
            out.append(Chain(edges=edges, length=length, category=_category(length)))
            continue
        g, h = interior_positions[0], interior_positions[-1]
        left = tuple([leg(first)] + [inner(i) for i in range(first, g)])
        out.append(Chain(edges=left, length=len(left) - 1,
                         category=_category(len(left) - 1)))
        right = tuple([inner(i) for i in range(h, last)] + [leg(last)])
        right = (right[-1],) + right[:-1][::-1]  # exterior leg first, walking inward
        out.append(Chain(edges=right, length=len(right) - 1,
                         category=_category(len(right) - 1)))
        for unit in interior_positions:
            out.append(Chain(edges=(leg(unit),), length=0,
                             category=ChainCategory.SHORT))
        for g, h in zip(interior_positions, interior_positions[1:]):
            if g == h:
                continue
            edges = tuple(inner(i) for i in range(g, h))
            out.append(Chain(edges=edges, length=len(edges) - 1,
                             category=_category(len(edges) - 1)))
    return out


def chain_containing(p: Position, e: EdgeRef) -> Chain:
    for chain in chains(p):
        if e in chain.edges:
            return chain
    raise IllegalMoveError(f"{e} is not a base-graph edge of any chain")


def _incident_coins(p: Position, e: EdgeRef) -> tuple[int, ...]:
    if e.kind is EdgeKind.LEG:
        return (e.index,)
    return (e.index, e.index + 1)


def is_pendant_incident(p: Position, e: EdgeRef, dec: Decomposition | None = None) -> bool:
    dec = dec or decompose(p)
    for coin in _incident_coins(p, e):
        if any(coin in _incident_coins(p, pe) for pe in dec.pendant_edges):
            return True
    return False


def classify_edge_structural(p: Position, e: EdgeRef) -> EdgeClass:
    """Structural rule: good iff not pendant-incident and (short chain or
    middle edge of a medium chain)."""
    dec = decompose(p)
    if e not in dec.base_edges:
        raise IllegalMoveError(f"{e} is not a base-graph edge")
    if is_pendant_incident(p, e, dec):
        return EdgeClass.BAD
    chain = chain_containing(p, e)
    if chain.category is ChainCategory.SHORT:
        return EdgeClass.GOOD
    if chain.category is ChainCategory.MEDIUM and e == chain.edges[1]:
        return EdgeClass.GOOD
    return EdgeClass.BAD


def find_double_deals(p: Position) -> list[DoubleDealOpportunity]:
    """All instances of the unified pattern: degree-1 coin c whose single
    edge x is an inner string to a coin d of degree exactly two."""
    out = []
    m = p.coin_count
    for c in range(m):
        if p.degree(c) != 1 or p.legs[c] >= 1:
            continue
        # c's single edge is an inner string; find the neighbour d.
        if c > 0 and p.inner[c - 1]:
            d, x = c - 1, inner(c - 1)
        else:
            d, x = c + 1, inner(c)
        if p.degree(d) != 2:
            continue
        y = _other_edge(p, d, x)
        out.append(DoubleDealOpportunity(x=x, y=y, pair=(min(c, d), max(c, d))))
    return out


def _other_edge(p: Position, d: int, x: EdgeRef) -> EdgeRef:
    if p.legs[d] >= 1:
        return leg(d)
    if d > 0 and p.inner[d - 1] and inner(d - 1) != x:
        return inner(d - 1)
    return inner(d)


def reachable_double_deals(p: Position, _memo=None) -> frozenset[DoubleDealOpportunity]:
    """Opportunities the player to move can face this turn: those present now
    plus any reachable by a sequence of capturing cuts."""
    memo = _memo if _memo is not None else {}
    key = (p.legs, p.inner)
    hit = memo.get(key)
    if hit is not None:
        return hit
    found = set(find_double_deals(p))
    for e in legal_moves(p):
        out = apply_move(p, e)
        if out.captured:
            found |= reachable_double_deals(out.resulting, memo)
    result = frozenset(found)
    memo[key] = result
    return result


def classify_edge_direct(p: Position, e: EdgeRef, _memo=None) -> EdgeClass:
    """Ground truth by simulation: bad iff cutting e lets the opponent reach
    a double-dealing opportunity they could not already reach."""
    out = apply_move(p, e)
    before = reachable_double_deals(p, _memo)
    after = reachable_double_deals(out.resulting, _memo)
    return EdgeClass.BAD if after - before else EdgeClass.GOOD


def max_capturable(p: Position, _memo=None) -> int:
    """Most coins the player to move can capture this turn before having to
    make a non-capturing cut (or ending the game)."""
    memo = _memo if _memo is not None else {}
    key = (p.legs, p.inner)
    hit = memo.get(key)
    if hit is not None:
        return hit
    best = 0
    for e in legal_moves(p):
        out = apply_move(p, e)
        if out.captured:
            best = max(best, len(out.captured) + max_capturable(out.resulting, memo))
    memo[key] = best
    return best
