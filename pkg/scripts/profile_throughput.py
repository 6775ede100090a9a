#!/usr/bin/env python3
"""Measure engine throughput per game.

Runs the random agent (full 50-step episodes unless the game ends early)
and the oracle, and reports episodes/sec and steps/sec. The plumbing
budget is 100 random episodes per game in under five seconds.

Run from anywhere once the package is installed:
  python scripts/profile_throughput.py [--episodes N]
"""

from __future__ import annotations

import argparse
import time

from pickplace import GAME_IDS, get_game, oracle_factory, random_factory, run_episode


def profile(game_id: str, factory, episodes: int) -> tuple[float, int, float]:
    game = get_game(game_id)
    start = time.perf_counter()
    steps = 0
    for index in range(episodes):
        variation = game.generate("train", index % 100)
        result = run_episode(variation, factory(variation))
        steps += result.steps
    return time.perf_counter() - start, steps, episodes


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--episodes", type=int, default=100)
    args = parser.parse_args()

    print(f"{'Game':<12} {'Agent':<8} {'Episodes':>8} {'Steps':>8} {'Sec':>7} {'Ep/s':>8} {'Steps/s':>9}")
    for game_id in GAME_IDS:
        for name, factory in (("random", random_factory(0)), ("oracle", oracle_factory())):
            elapsed, steps, episodes = profile(game_id, factory, args.episodes)
            print(
                f"{game_id:<12} {name:<8} {episodes:>8} {steps:>8} "
                f"{elapsed:>7.2f} {episodes / elapsed:>8.1f} {steps / elapsed:>9.1f}"
            )


if __name__ == "__main__":
    main()
