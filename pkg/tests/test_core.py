import random

import pytest

from narrowdots.core import (
    Boundary,
    EdgeKind,
    Game,
    GameSpec,
    Position,
    apply_move,
    canonical_key,
    components,
    initial_position,
    inner,
    is_legal,
    leg,
    legal_moves,
    mirror,
    mirror_edge,
    move_sort_key,
    restore_edge,
)
from narrowdots.errors import IllegalMoveError


def spec(game, boundary, n):
    return GameSpec(Game(game), Boundary(boundary), n)


def test_initial_positions():
    assert initial_position(spec("boxes", "closed", 4)).legs == (1, 1, 1, 1)
    assert initial_position(spec("boxes", "open", 4)).legs == (3, 2, 2, 3)
    assert initial_position(spec("boxes", "open", 1)).legs == (4,)
    assert initial_position(spec("triangles", "closed", 3)).legs == (1, 0, 1, 0, 1)
    assert initial_position(spec("triangles", "open", 3)).legs == (2, 1, 1, 1, 2)
    assert initial_position(spec("triangles", "open", 1)).legs == (3,)
    p = initial_position(spec("triangles", "closed", 4))
    assert p.inner == (True,) * 6 and p.captured_net == 0 and p.to_move == "A"


def test_spec_validation():
    with pytest.raises(ValueError):
        GameSpec(Game.BOXES, Boundary.CLOSED, 0)


def test_leg_cut_decrements_bundle():
    p = Position((3, 2), (True,))
    q = apply_move(p, leg(0)).resulting
    assert q.legs == (2, 2) and q.inner == (True,)
    assert q.to_move == "B"


def test_capture_gives_extra_turn_and_score():
    p = Position((1, 0, 1), (True, True))  # closed triangles n=2 start
    out = apply_move(p, leg(0))
    assert out.captured == () and not out.extra_turn
    q = out.resulting
    assert q.to_move == "B"
    out = apply_move(q, inner(0))  # B isolates coin 0
    assert out.captured == (0,) and out.extra_turn
    assert out.resulting.captured_net == -1
    assert out.resulting.to_move == "B"


def test_final_capture_has_no_extra_turn():
    p = Position((1,), ())
    out = apply_move(p, leg(0))
    assert out.captured == (0,) and not out.extra_turn
    assert out.resulting.is_terminal()
    assert out.resulting.captured_net == 1


def test_inner_cut_can_capture_both_ends():
    p = Position((0, 0), (True,))
    out = apply_move(p, inner(0))
    assert out.captured == (0, 1)
    assert out.resulting.captured_net == 2


def test_legal_moves_sorted_and_deduped():
    p = Position((2, 0, 1), (True, True))
    moves = legal_moves(p)
    assert moves == sorted(moves, key=lambda e: move_sort_key(p, e))
    assert len(set(moves)) == len(moves)
    assert leg(0) in moves and inner(0) in moves and leg(1) not in moves


def test_illegal_moves_rejected():
    p = Position((1, 0), (True,))
    assert not is_legal(p, leg(1))
    with pytest.raises(IllegalMoveError):
        apply_move(p, leg(1))
    q = apply_move(p, inner(0)).resulting  # captures coin 1
    with pytest.raises(IllegalMoveError):
        apply_move(q, inner(0))


def test_components_are_maximal_runs():
    p = Position((1, 0, 1, 2, 1), (True, False, True, False))
    assert components(p) == [(0, 1), (2, 3), (4, 4)]
    q = apply_move(p, leg(4)).resulting  # kills the singleton
    assert components(q) == [(0, 1), (2, 3)]


def test_mirror_is_an_involution():
    rng = random.Random(0)
    for _ in range(200):
        m = rng.randint(1, 7)
        legs = tuple(rng.randint(0, 3) for _ in range(m))
        inn = tuple(rng.random() < 0.7 for _ in range(m - 1))
        p = Position(legs, inn, rng.randint(-3, 3), rng.choice("AB"))
        assert mirror(mirror(p)) == p
        assert mirror(p).legs == legs[::-1]


def test_mirror_edge_maps_cuts_consistently():
    p = Position((1, 0, 1, 0, 1), (True,) * 4)
    assert mirror_edge(p, leg(0)) == leg(4)
    assert mirror_edge(p, leg(2)) == leg(2)
    assert mirror_edge(p, inner(0)) == inner(3)
    assert mirror_edge(p, inner(1)) == inner(2)


def test_mirror_apply_commutes():
    rng = random.Random(1)
    done = 0
    while done < 300:
        m = rng.randint(1, 7)
        legs = tuple(rng.randint(0, 3) for _ in range(m))
        inn = tuple(rng.random() < 0.7 for _ in range(m - 1))
        p = Position(legs, inn)
        moves = legal_moves(p)
        if not moves:
            continue
        e = rng.choice(moves)
        a = mirror(apply_move(p, e).resulting)
        b = apply_move(mirror(p), mirror_edge(p, e)).resulting
        assert a == b
        done += 1


def test_restore_edge_inverts_non_capturing_cuts():
    rng = random.Random(2)
    done = 0
    while done < 300:
        m = rng.randint(1, 7)
        legs = tuple(rng.randint(0, 3) for _ in range(m))
        inn = tuple(rng.random() < 0.7 for _ in range(m - 1))
        p = Position(legs, inn)
        moves = legal_moves(p)
        if not moves:
            continue
        e = rng.choice(moves)
        out = apply_move(p, e)
        if out.captured:
            continue
        q = restore_edge(out.resulting, e)
        assert (q.legs, q.inner) == (p.legs, p.inner)
        done += 1


def test_restore_edge_refuses_captured_endpoints():
    p = Position((1, 0), (True,))
    q = apply_move(p, inner(0)).resulting
    with pytest.raises(IllegalMoveError):
        restore_edge(q, inner(0))


def test_canonical_key_quotients_mirror_and_order():
    p = Position((2, 1, 0, 0, 3), (True, False, False, True))
    flipped = mirror(p)
    assert canonical_key(p) == canonical_key(flipped)
    swapped = Position((3, 0, 0, 1, 2), (True, False, False, True), 5, "B")
    assert canonical_key(p) == canonical_key(swapped)
    other = Position((2, 1, 0, 0, 2), (True, False, False, True))
    assert canonical_key(p) != canonical_key(other)


def test_playout_conservation_and_termination():
    rng = random.Random(3)
    for _ in range(500):
        s = GameSpec(rng.choice(list(Game)), rng.choice(list(Boundary)),
                     rng.randint(1, 5))
        p = initial_position(s)
        taken = {"A": 0, "B": 0}
        steps = 0
        budget = p.string_count()
        while not p.is_terminal():
            mover = p.to_move
            out = apply_move(p, rng.choice(legal_moves(p)))
            taken[mover] += len(out.captured)
            p = out.resulting
            steps += 1
            assert steps <= budget
        assert taken["A"] + taken["B"] == s.coin_count
        assert p.captured_net == taken["A"] - taken["B"]
        assert p.string_count() == 0
