"""Command line interface.

Subcommands:
  generate   export oracle datasets (behavior-cloning text + archives)
  eval       run an agent over a split and print score/steps means
  play       interactive terminal episode for debugging
  stats      valid-action-count statistics under a random agent
  serve      line-delimited JSON session protocol on stdin/stdout

Exit codes: 0 success, 2 usage error, 3 runtime failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .dataset import export_dataset
from .episode import Episode
from .errors import EngineError, SessionClosed
from .games import GAME_IDS, SPLITS, VARIATIONS_PER_SPLIT, get_game
from .harness import (
    action_stats,
    align_action,
    evaluate,
    oracle_factory,
    random_factory,
)

GAME_CHOICES = (*GAME_IDS, "all")


def _games(choice: str) -> tuple[str, ...]:
    return GAME_IDS if choice == "all" else (choice,)


def _add_modules_flag(parser: argparse.ArgumentParser, default: bool = True) -> None:
    parser.add_argument(
        "--modules",
        action=argparse.BooleanOptionalAction,
        default=default,
        help="attach the game's solver module (default: %(default)s)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pickplace",
        description="Procedural pick-and-place text games with symbolic solver modules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="export oracle datasets")
    gen.add_argument("--game", required=True, choices=GAME_CHOICES)
    gen.add_argument("--split", default="train", choices=(*SPLITS, "all"))
    _add_modules_flag(gen)
    gen.add_argument("--out", default="datasets", help="output directory")
    gen.set_defaults(func=cmd_generate)

    ev = sub.add_parser("eval", help="evaluate an agent")
    ev.add_argument("--agent", default="oracle", choices=("oracle", "oracle-nomods", "random"))
    ev.add_argument("--game", required=True, choices=GAME_CHOICES)
    ev.add_argument("--split", default="test", choices=SPLITS)
    _add_modules_flag(ev)
    ev.add_argument("--episodes", type=int, default=VARIATIONS_PER_SPLIT)
    ev.add_argument("--seed", type=int, default=0, help="random-agent run seed")
    ev.add_argument("--out", help="also write the summary as a jsonl file")
    ev.set_defaults(func=cmd_eval)

    play = sub.add_parser("play", help="play one episode interactively")
    play.add_argument("--game", required=True, choices=GAME_IDS)
    play.add_argument("--split", default="train", choices=SPLITS)
    play.add_argument("--index", type=int, default=0)
    _add_modules_flag(play)
    play.set_defaults(func=cmd_play)

    st = sub.add_parser("stats", help="valid-action statistics under a random agent")
    st.add_argument("--game", required=True, choices=GAME_CHOICES)
    _add_modules_flag(st)
    st.add_argument("--episodes", type=int, default=10)
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--out", help="also write the rows as a text file")
    st.set_defaults(func=cmd_stats)

    srv = sub.add_parser("serve", help="JSON session protocol on stdin/stdout")
    srv.set_defaults(func=cmd_serve)

    return parser


def cmd_generate(args: argparse.Namespace) -> int:
    splits = SPLITS if args.split == "all" else (args.split,)
    for game_id in _games(args.game):
        for split in splits:
            result = export_dataset(game_id, split, modules=args.modules, out_dir=args.out)
            print(
                f"{game_id} {split}: {result.records} records -> "
                f"{result.bc_path}, {result.trajectories_path}, {result.variations_path}"
            )
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    if args.agent == "oracle":
        factory, modules = oracle_factory(modules=args.modules), args.modules
    elif args.agent == "oracle-nomods":
        factory, modules = oracle_factory(modules=False), False
    else:
        factory, modules = random_factory(args.seed), args.modules
    rows = []
    print(f"{'Game':<12} {'Score':>6} {'Steps':>6}")
    for game_id in _games(args.game):
        summary = evaluate(
            factory, game_id, split=args.split, modules=modules, episodes=args.episodes
        )
        print(f"{game_id:<12} {summary.mean_score:>6.2f} {summary.mean_steps:>6.1f}")
        rows.append(
            {
                "game": game_id,
                "split": args.split,
                "agent": args.agent,
                "modules": modules,
                "episodes": summary.episodes,
                "mean_score": summary.mean_score,
                "mean_steps": summary.mean_steps,
            }
        )
    if args.out:
        Path(args.out).write_text(
            "".join(json.dumps(row) + "\n" for row in rows), encoding="utf-8"
        )
    return 0


def cmd_play(args: argparse.Namespace) -> int:
    variation = get_game(args.game).generate(args.split, args.index)
    episode = Episode(variation, modules=args.modules)
    print(episode.task_description)
    print()
    print(episode.observation.text)
    while not episode.over:
        try:
            line = input("> ")
        except EOFError:
            print()
            break
        line = line.strip()
        if not line:
            continue
        if line in ("quit", "exit"):
            break
        surfaces = episode.valid_actions().surfaces()
        if line == "valid":
            for i, surface in enumerate(surfaces, 1):
                print(f"{i:3d}. {surface}")
            continue
        observation = episode.step(align_action(line, surfaces))
        print(observation.text)
    print(f"Score: {episode.score}  Steps: {episode.steps}")
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    lines = [f"{'Game':<12} {'Modules':<8} {'Min':>5} {'Mean':>8} {'Max':>5}"]
    for game_id in _games(args.game):
        stats = action_stats(
            game_id, modules=args.modules, episodes=args.episodes, run_seed=args.seed
        )
        lines.append(
            f"{game_id:<12} {'yes' if args.modules else 'no':<8} "
            f"{stats.minimum:>5d} {stats.mean:>8.1f} {stats.maximum:>5d}"
        )
    report = "\n".join(lines)
    print(report)
    if args.out:
        Path(args.out).write_text(report + "\n", encoding="utf-8")
    return 0


def _serve_reset(request: dict) -> tuple[Episode, dict]:
    game_id = request["game"]
    split = request.get("split", "test")
    index = int(request.get("index", 0))
    modules = bool(request.get("modules", True))
    variation = get_game(game_id).generate(split, index)
    episode = Episode(variation, modules=modules)
    return episode, {
        "ok": True,
        "observation": episode.observation.text,
        "inventory": episode.observation.inv_text,
        "look": episode.observation.look_text,
        "task": episode.task_description,
        "valid": episode.valid_actions().surfaces(),
        "score": episode.score,
        "done": episode.over,
        "steps": episode.steps,
    }


def cmd_serve(args: argparse.Namespace) -> int:
    episode: Episode | None = None
    for raw in sys.stdin:
        raw = raw.strip()
        if not raw:
            continue
        try:
            request = json.loads(raw)
            op = request.get("op")
            if op == "reset":
                episode, reply = _serve_reset(request)
            elif op == "step":
                if episode is None:
                    raise SessionClosed("no episode; send a reset first")
                if episode.over:
                    raise SessionClosed("the episode is over")
                surfaces = episode.valid_actions().surfaces()
                aligned = align_action(str(request["action"]), surfaces)
                observation = episode.step(aligned)
                reply = {
                    "ok": True,
                    "action": aligned,
                    "observation": observation.text,
                    "inventory": observation.inv_text,
                    "look": observation.look_text,
                    "valid": episode.valid_actions().surfaces(),
                    "score": episode.score,
                    "done": episode.over,
                    "steps": episode.steps,
                }
            elif op == "valid":
                if episode is None:
                    raise SessionClosed("no episode; send a reset first")
                reply = {"ok": True, "valid": episode.valid_actions().surfaces()}
            elif op == "close":
                episode = None
                reply = {"ok": True}
            else:
                reply = {"ok": False, "kind": "BadRequest", "error": f"unknown op {op!r}"}
        except (EngineError, KeyError, ValueError) as error:
            reply = {"ok": False, "kind": type(error).__name__, "error": str(error)}
        print(json.dumps(reply, ensure_ascii=False), flush=True)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        return 3
    except EngineError as error:
        print(f"error: {error}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
