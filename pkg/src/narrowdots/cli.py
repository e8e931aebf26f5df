"""Command line front end: solve, table, verify, analyze, play, serve."""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import chains, classify_edge_structural, decompose, find_double_deals
from .board import (
    decode_state,
    dual_to_primal,
    encode_state,
    initial_board,
    primal_to_dual,
    render_ascii,
    wire_state,
)
from .core import (
    Boundary,
    Game,
    GameSpec,
    initial_position,
    legal_moves,
)
from .errors import MemoLimitExceeded, NarrowDotsError, UnsupportedSpecError
from .solver import MemoTable, solve
from .strategy import AgentMode, supports
from .verifier import guaranteed_score, scenario_check


def _spec_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--game", choices=[g.value for g in Game], required=True)
    sub.add_argument("--boundary", choices=[b.value for b in Boundary],
                     default=Boundary.CLOSED.value)
    sub.add_argument("--n", type=int, required=True)


def _spec_of(args) -> GameSpec:
    return GameSpec(Game(args.game), Boundary(args.boundary), args.n)


def cmd_solve(args) -> int:
    if args.state:
        _, p = decode_state(args.state)
    else:
        p = initial_position(_spec_of(args))
    res = solve(p)
    print(f"value={res.value} best={res.best!r} nodes={res.nodes}")
    return 0


def cmd_table(args) -> int:
    if args.n_max < 1:
        raise ValueError("n_max must be >= 1")
    game, boundary = Game(args.game), Boundary(args.boundary)
    memo = MemoTable(max_entries=args.max_memo)
    lines = []
    for n in range(1, args.n_max + 1):
        try:
            value = solve(initial_position(GameSpec(game, boundary, n)),
                          memo).value
            lines.append(f"{n},{value}\n")
        except MemoLimitExceeded:
            # report the overflow for this row and keep going
            lines.append(f"{n},error:memo-budget-exceeded\n")
    text = "".join(lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    game = Game.TRIANGLES if args.theorem == 1 else Game.BOXES
    boundaries = ([Boundary(args.boundary)] if args.boundary
                  else ([Boundary.CLOSED] if args.theorem == 1
                        else [Boundary.CLOSED, Boundary.OPEN]))
    threshold = 1 if args.theorem == 1 else 0
    mode = (AgentMode.CONSTRUCTIVE if args.mode == "constructive"
            else AgentMode.SOLVER_ASSISTED)
    memo = MemoTable()
    results = []
    ok = True
    for boundary in boundaries:
        for n in args.n:
            spec = GameSpec(game, boundary, n)
            entry = {"game": game.value, "boundary": boundary.value, "n": n}
            try:
                rep = guaranteed_score(spec, mode, solver_memo=memo)
            except UnsupportedSpecError as exc:
                value = solve(initial_position(spec), memo).value
                entry |= {"supported": False, "reason": str(exc),
                          "exact_value": value}
                ok = False
            else:
                entry |= {"supported": True, "worst_net": rep.worst_net,
                          "holds": rep.worst_net >= threshold,
                          "states_visited": rep.states_visited,
                          "witness": [repr(e) for e in rep.witness_line]}
                ok = ok and rep.worst_net >= threshold
            results.append(entry)
            print(json.dumps({k: v for k, v in entry.items()
                              if k != "witness"}, sort_keys=True))
    report = {"theorem": args.theorem, "threshold": threshold,
              "mode": args.mode, "all_hold": ok, "results": results}
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0 if ok else 1


def cmd_scenario(args) -> int:
    out = scenario_check(args.name)
    print(json.dumps(out, default=repr, sort_keys=True))
    return 0 if out["passed"] else 1


def cmd_analyze(args) -> int:
    if args.state:
        board, p = decode_state(args.state)
    else:
        spec = _spec_of(args)
        board, p = initial_board(spec), initial_position(spec)
    print(render_ascii(board))
    dec = decompose(p)
    print(f"pendant coins: {sorted(dec.pendant_coins)}")
    for ch in chains(p):
        print(f"chain {ch.category.value} length={ch.length} "
              f"edges={[repr(e) for e in ch.edges]}")
    for e in legal_moves(p):
        print(f"{e!r}: {classify_edge_structural(p, e).value}")
    for opp in find_double_deals(p):
        print(f"double-deal: x={opp.x!r} y={opp.y!r} pair={opp.pair}")
    if not p.is_terminal():
        res = solve(p)
        print(f"value for {p.to_move}: {res.value} (best {res.best!r})")
    return 0


def cmd_play(args) -> int:
    from .strategy import Agent, AgentState

    spec = _spec_of(args)
    engine_player = {"first": "A", "second": "B", "none": None}[args.engine]
    mode = (AgentMode.CONSTRUCTIVE if args.mode == "constructive"
            else AgentMode.SOLVER_ASSISTED)
    if engine_player and mode is AgentMode.CONSTRUCTIVE and not supports(spec):
        print("constructive strategy does not cover this variant; "
              "pass --mode solver", file=sys.stderr)
        return 2
    from dataclasses import replace

    board = initial_board(spec)
    p = initial_position(spec)
    owners: dict[int, str] = {}
    agent = Agent() if engine_player else None
    state = AgentState(spec=spec, mode=mode) if engine_player else None

    def draw(edge: str) -> None:
        nonlocal board, p
        from .core import apply_move
        from .board import PrimalBoard

        e = primal_to_dual(spec, edge)
        mover = p.to_move
        out = apply_move(p, e)
        for c in out.captured:
            owners[c] = mover
        board = PrimalBoard(spec, board.drawn | {edge},
                            tuple(sorted(owners.items())))
        p = out.resulting

    while not p.is_terminal():
        print()
        print(render_ascii(board))
        if p.to_move == engine_player:
            plan, state = agent.take_turn(p, state)
            for cut in plan.cuts:
                edge = dual_to_primal(board, cut)
                print(f"engine draws {edge}")
                draw(edge)
            continue
        prompt = f"player {p.to_move}, edge to draw: "
        try:
            line = input(prompt).strip()
        except EOFError:
            print()
            return 1
        if line in ("q", "quit"):
            return 1
        try:
            e = primal_to_dual(spec, line)
        except NarrowDotsError as exc:
            print(f"  {exc}")
            continue
        if line in board.drawn:
            print("  already drawn")
            continue
        if engine_player and state is not None:
            from .core import apply_move as _am

            out = _am(p, e)
            if not out.captured:
                state = replace(state, opp_last_base_move=e)
        draw(line)
    print()
    print(render_ascii(board))
    print(f"final net score (A minus B): {p.captured_net}")
    print(encode_state(board, p.to_move))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(frontend_dir=args.frontend),
                host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="narrowdots",
        description="1xn dots-and-boxes / dots-and-triangles engine")
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("solve", help="exact value of a position")
    _spec_args(s)
    s.add_argument("--state", help="encoded state line instead of the start")
    s.set_defaults(func=cmd_solve)

    s = subs.add_parser("table", help="optimal net scores for n=1..n_max")
    s.add_argument("--game", choices=[g.value for g in Game], required=True)
    s.add_argument("--boundary", choices=[b.value for b in Boundary],
                   default=Boundary.CLOSED.value)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--out")
    s.add_argument("--max-memo", type=int,
                   help="memo table entry budget; overflow is reported per row")
    s.set_defaults(func=cmd_table)

    s = subs.add_parser(
        "verify",
        help="certify the first-player guarantee against every opponent line")
    s.add_argument("--theorem", type=int, choices=[1, 2], required=True)
    s.add_argument("--n", type=int, nargs="+", required=True)
    s.add_argument("--boundary", choices=[b.value for b in Boundary])
    s.add_argument("--mode", choices=["constructive", "solver"],
                   default="constructive")
    s.add_argument("--out", help="write a JSON report")
    s.set_defaults(func=cmd_verify)

    s = subs.add_parser("scenario", help="replay a documented failure scenario")
    s.add_argument("name", choices=["fig9_unmirrorable", "fig10_zugzwang"])
    s.set_defaults(func=cmd_scenario)

    s = subs.add_parser("analyze", help="structure and value of a position")
    s.add_argument("--game", choices=[g.value for g in Game])
    s.add_argument("--boundary", choices=[b.value for b in Boundary],
                   default=Boundary.CLOSED.value)
    s.add_argument("--n", type=int)
    s.add_argument("--state", help="encoded state line")
    s.set_defaults(func=cmd_analyze)

    s = subs.add_parser("play", help="play in the terminal")
    _spec_args(s)
    s.add_argument("--engine", choices=["first", "second", "none"],
                   default="second")
    s.add_argument("--mode", choices=["constructive", "solver"],
                   default="solver")
    s.set_defaults(func=cmd_play)

    s = subs.add_parser("serve", help="run the HTTP play service")
    s.add_argument("--host", default="127.0.0.1")
    s.add_argument("--port", type=int, default=8000)
    s.add_argument("--frontend",
                   help="directory with the built web client; served at /app")
    s.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NarrowDotsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
