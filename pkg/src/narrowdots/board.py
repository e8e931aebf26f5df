"""Primal (dots) board model and the primal<->dual edge mapping.

Face indexing runs left to right; for triangles the faces alternate
up/down so coin index equals face index.  Boundary (non-shared) primal
edges map to ground legs; shared edges map to inner strings.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .core import (
    Boundary,
    EdgeKind,
    EdgeRef,
    Game,
    GameSpec,
    PLAYER_A,
    Position,
    initial_position,
    inner,
    leg,
    legal_moves,
)
from .errors import EncodingError, IllegalMoveError

# Primal edge ids are strings like "top:2", "vert:0", "base:1", "side:left".
# Boxes: top:i / bottom:i (i = box), vert:j (j = 0..n, dot column).
# Triangles: base:i (up triangle), top:j (down triangle), slant:s
# (s = 0..2n-3, shared edge between faces s and s+1), side:left / side:right.


def all_primal_edges(spec: GameSpec) -> list[str]:
    n = spec.n
    if spec.game is Game.BOXES:
        edges = [f"top:{i}" for i in range(n)]
        edges += [f"bottom:{i}" for i in range(n)]
        edges += [f"vert:{j}" for j in range(n + 1)]
    else:
        edges = [f"base:{i}" for i in range(n)]
        edges += [f"top:{j}" for j in range(n - 1)]
        edges += [f"slant:{s}" for s in range(2 * n - 2)]
        edges += ["side:left", "side:right"]
    return sorted(edges)


def initially_drawn(spec: GameSpec) -> frozenset[str]:
    """Closed variants start with top and side exterior edges drawn."""
    if spec.boundary is Boundary.OPEN:
        return frozenset()
    n = spec.n
    if spec.game is Game.BOXES:
        return frozenset({f"top:{i}" for i in range(n)} | {"vert:0", f"vert:{n}"})
    return frozenset({f"top:{j}" for j in range(n - 1)}
                     | {"side:left", "side:right"})


@dataclass(frozen=True)
class PrimalBoard:
    spec: GameSpec
    drawn: frozenset[str]
    owner: tuple[tuple[int, str], ...] = ()  # (face, player), sorted by face

    def owner_map(self) -> dict[int, str]:
        return dict(self.owner)


def initial_board(spec: GameSpec) -> PrimalBoard:
    return PrimalBoard(spec=spec, drawn=initially_drawn(spec))


def face_edges(spec: GameSpec, face: int) -> list[str]:
    """Primal edges bounding a face, boundary edges first in leg-cut
    priority order (top, then bottom/base, then sides), shared edges last."""
    n = spec.n
    if spec.game is Game.BOXES:
        return [f"top:{face}", f"bottom:{face}", f"vert:{face}", f"vert:{face + 1}"]
    if face % 2 == 0:  # up triangle i = face // 2
        i = face // 2
        out = [f"base:{i}"]
        if i == 0:
            out.append("side:left")
        if i == n - 1:
            out.append("side:right")
        if face - 1 >= 0:
            out.append(f"slant:{face - 1}")
        if face + 1 <= 2 * n - 2:
            out.append(f"slant:{face}")
        return out
    j = face // 2  # down triangle
    return [f"top:{j}", f"slant:{face - 1}", f"slant:{face}"]


def _shared_edge_faces(spec: GameSpec, edge: str) -> tuple[int, int] | None:
    kind, _, idx = edge.partition(":")
    if spec.game is Game.BOXES:
        if kind == "vert":
            j = int(idx)
            if 1 <= j <= spec.n - 1:
                return (j - 1, j)
        return None
    if kind == "slant":
        s = int(idx)
        return (s, s + 1)
    return None


def primal_to_dual(spec: GameSpec, edge: str) -> EdgeRef:
    """The string cut by drawing this primal edge."""
    if edge not in all_primal_edges(spec):
        raise EncodingError(f"unknown primal edge {edge!r} for this board")
    shared = _shared_edge_faces(spec, edge)
    if shared is not None:
        return inner(shared[0])
    for face in range(spec.coin_count):
        if edge in face_edges(spec, face):
            return leg(face)
    raise EncodingError(f"primal edge {edge!r} bounds no face")


def dual_to_primal(board: PrimalBoard, e: EdgeRef) -> str:
    """Pick the undrawn primal edge realizing the cut.  Leg bundles collapse
    in the dual, so a fixed priority (top, bottom/base, then sides) picks
    the drawn edge deterministically."""
    spec = board.spec
    if e.kind is EdgeKind.INNER:
        if spec.game is Game.BOXES:
            edge = f"vert:{e.index + 1}"
        else:
            edge = f"slant:{e.index}"
        if edge in board.drawn:
            raise IllegalMoveError(f"{edge} is already drawn")
        return edge
    for edge in face_edges(spec, e.index):
        if _shared_edge_faces(spec, edge) is None and edge not in board.drawn:
            return edge
    raise IllegalMoveError(f"no undrawn boundary edge left at face {e.index}")


def position_from_board(board: PrimalBoard, to_move: str = PLAYER_A) -> Position:
    """Rebuild the dual position implied by the drawn edge set."""
    spec = board.spec
    m = spec.coin_count
    legs = []
    for face in range(m):
        boundary = [x for x in face_edges(spec, face)
                    if _shared_edge_faces(spec, x) is None]
        legs.append(sum(1 for x in boundary if x not in board.drawn))
    inner_ = []
    for i in range(m - 1):
        if spec.game is Game.BOXES:
            edge = f"vert:{i + 1}"
        else:
            edge = f"slant:{i}"
        inner_.append(edge not in board.drawn)
    owners = board.owner_map()
    net = sum(1 if pl == PLAYER_A else -1 for pl in owners.values())
    return Position(tuple(legs), tuple(inner_), net, to_move)


def sync(board: PrimalBoard, p: Position,
         owners: dict[int, str] | None = None) -> PrimalBoard:
    """Board whose drawn set mirrors the cuts made to reach p.

    owners maps captured face -> player; required whenever captures have
    happened (the dual position does not remember who took which coin).
    """
    spec = board.spec
    fresh = initial_position(spec)
    drawn = set(initially_drawn(spec))
    work = initial_board(spec)
    for i in range(spec.coin_count):
        cut = fresh.legs[i] - p.legs[i]
        if cut < 0:
            raise IllegalMoveError("position is not reachable from this board")
        for _ in range(cut):
            work = replace(work, drawn=frozenset(drawn))
            drawn.add(dual_to_primal(work, leg(i)))
    for i in range(spec.coin_count - 1):
        if fresh.inner[i] and not p.inner[i]:
            work = replace(work, drawn=frozenset(drawn))
            drawn.add(dual_to_primal(work, inner(i)))
    owners = owners or {}
    captured = {i for i in range(spec.coin_count) if p.degree(i) == 0}
    if set(owners) != captured:
        raise IllegalMoveError(
            "owner map does not match the captured coins of the position")
    net = sum(1 if pl == PLAYER_A else -1 for pl in owners.values())
    if net != p.captured_net:
        raise IllegalMoveError("owner map net score disagrees with position")
    return PrimalBoard(spec=spec, drawn=frozenset(drawn),
                       owner=tuple(sorted(owners.items())))


# -- serialization -------------------------------------------------------


def encode_state(board: PrimalBoard, to_move: str) -> str:
    """One-line canonical form:
    <game>:<boundary>:<n>/<drawn,sorted>/<owners>/<to_move>."""
    spec = board.spec
    drawn = ",".join(sorted(board.drawn)) or "-"
    owners = ",".join(f"{f}={pl}" for f, pl in sorted(board.owner)) or "-"
    return f"{spec.game.value}:{spec.boundary.value}:{spec.n}/{drawn}/{owners}/{to_move}"


def decode_state(text: str) -> tuple[PrimalBoard, Position]:
    parts = text.strip().split("/")
    if len(parts) != 4:
        raise EncodingError("state must have 4 /-separated segments")
    head, drawn_part, owner_part, to_move = parts
    try:
        game, boundary, n = head.split(":")
        spec = GameSpec(Game(game), Boundary(boundary), int(n))
    except (ValueError, KeyError) as exc:
        raise EncodingError(f"bad spec segment {head!r}") from exc
    known = set(all_primal_edges(spec))
    drawn = set() if drawn_part == "-" else set(drawn_part.split(","))
    if not drawn >= initially_drawn(spec):
        raise EncodingError("initially drawn edges are missing")
    if not drawn <= known:
        raise EncodingError(f"unknown edges: {sorted(drawn - known)}")
    owners: dict[int, str] = {}
    if owner_part != "-":
        for item in owner_part.split(","):
            face, _, player = item.partition("=")
            if player not in ("A", "B"):
                raise EncodingError(f"bad owner entry {item!r}")
            owners[int(face)] = player
    if to_move not in ("A", "B"):
        raise EncodingError(f"bad to_move {to_move!r}")
    board = PrimalBoard(spec=spec, drawn=frozenset(drawn),
                        owner=tuple(sorted(owners.items())))
    p = position_from_board(board, to_move)
    captured = {i for i in range(spec.coin_count) if p.degree(i) == 0}
    if set(owners) != captured:
        raise EncodingError("owners do not match the faces enclosed by drawn edges")
    return board, p


def load_fixture(text: str) -> list[tuple[PrimalBoard, Position]]:
    """Parse a fixture file: one encoded state per line, '#' comments."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(decode_state(line))
    return out


def wire_state(board: PrimalBoard, p: Position) -> dict:
    """Structured wire form shared by the CLI service and web client."""
    spec = board.spec
    return {
        "spec": {"game": spec.game.value, "boundary": spec.boundary.value,
                 "n": spec.n},
        "drawn": sorted(board.drawn),
        "owners": [{"face": f, "player": pl} for f, pl in sorted(board.owner)],
        "to_move": p.to_move,
        "net_score": p.captured_net,
        "legal_moves": sorted(dual_to_primal_all(board, p)),
    }


def dual_to_primal_all(board: PrimalBoard, p: Position) -> list[str]:
    """Every undrawn primal edge (each one is a legal draw)."""
    return [x for x in all_primal_edges(board.spec) if x not in board.drawn]


# -- ascii rendering -----------------------------------------------------


def render_ascii(board: PrimalBoard) -> str:
    if board.spec.game is Game.BOXES:
        return _render_boxes(board)
    return _render_triangles(board)


def _render_boxes(board: PrimalBoard) -> str:
    n = board.spec.n
    drawn = board.drawn
    owners = board.owner_map()
    top = ""
    mid = ""
    bot = ""
    for i in range(n):
        top += "*" + ("---" if f"top:{i}" in drawn else "   ")
        mid += ("|" if f"vert:{i}" in drawn else " ")
        mid += f" {owners.get(i, ' ')} "
        bot += "*" + ("---" if f"bottom:{i}" in drawn else "   ")
    top += "*"
    mid += "|" if f"vert:{n}" in drawn else " "
    bot += "*"
    return "\n".join([top, mid, bot])


def _render_triangles(board: PrimalBoard) -> str:
    n = board.spec.n
    drawn = board.drawn
    owners = board.owner_map()
    width = 4 * n + 1
    rows = [[" "] * width for _ in range(3)]
    for i in range(n):  # top dots and top edges
        rows[0][4 * i + 2] = "*"
    for j in range(n - 1):
        if f"top:{j}" in drawn:
            for c in range(4 * j + 3, 4 * j + 6):
                rows[0][c] = "-"
    for j in range(n + 1):  # bottom dots
        rows[2][4 * j] = "*"
    for i in range(n):
        if f"base:{i}" in drawn:
            for c in range(4 * i + 1, 4 * i + 4):
                rows[2][c] = "-"
    if "side:left" in drawn:
        rows[1][1] = "/"
    if "side:right" in drawn:
        rows[1][width - 2] = "\\"
    for s in range(2 * n - 2):
        if f"slant:{s}" in drawn:
            col = 2 * s + 3
            rows[1][col] = "\\" if s % 2 == 0 else "/"
    for face, pl in owners.items():
        if face % 2 == 0:  # up triangle, centered between its slants
            rows[1][4 * (face // 2) + 2] = pl
        else:
            rows[1][4 * (face // 2) + 4] = pl
    return "\n".join("".join(r).rstrip() for r in rows)
