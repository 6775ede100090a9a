"""Acceptance gate: the package's headline guarantees, one test each.

Each test prints a single [PASS]/[FAIL] line (visible under pytest -s)
before asserting, so a full run doubles as a checklist report.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from pathlib import Path

from pickplace.episode import Episode
from pickplace.dataset import bc_line, record_to_json
from pickplace.games import GAME_IDS, GAMES, SPLITS, VARIATIONS_PER_SPLIT
from pickplace.games.mapreader import MapReaderGame, adjacency, map_text
from pickplace.harness import (
    OracleReplayAgent,
    action_stats,
    evaluate,
    oracle_factory,
    random_factory,
    run_episode,
)
from pickplace.modules import NavigationModule
from pickplace.actions import parse
from pickplace.pathing import bfs_parents
from pickplace.world import placement_snapshot

GOLDEN = Path(__file__).parent / "data" / "arithmetic_playthrough.bc.txt"


def report(name: str, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, f"{name}: {detail}"


def test_oracle_ceiling():
    """Oracle agents solve every test variation perfectly, in budget."""
    started = time.perf_counter()
    summaries = {
        game_id: evaluate(oracle_factory(), game_id, split="test", modules=True)
        for game_id in GAME_IDS
    }
    elapsed = time.perf_counter() - started
    scores_ok = all(s.mean_score == 1.0 for s in summaries.values())
    expected_mapreader = sum(
        3 + 4 * GAMES["mapreader"].generate("test", i).params.distance
        for i in range(VARIATIONS_PER_SPLIT)
    ) / VARIATIONS_PER_SPLIT
    steps = {g: s.mean_steps for g, s in summaries.items()}
    steps_ok = (
        steps["arithmetic"] == 5.0
        and steps["twc"] == 3.0
        and 7.0 <= steps["sorting"] <= 11.0
        and steps["mapreader"] == expected_mapreader
    )
    report(
        "oracle ceiling",
        scores_ok and steps_ok and elapsed < 60,
        f"scores {[round(s.mean_score, 3) for s in summaries.values()]}, "
        f"steps {steps}, {elapsed:.1f}s",
    )


def test_action_space_statistics():
    """Valid-action counts under a random agent sit in the expected bands."""
    started = time.perf_counter()
    reference = {"mapreader": 6.2, "arithmetic": 14.3, "sorting": 9.3, "twc": 6.3}
    module_ceiling = {"arithmetic": 6, "sorting": 2, "mapreader": 15, "twc": 546}
    plain = {g: action_stats(g, modules=False, episodes=10) for g in GAME_IDS}
    with_modules = {g: action_stats(g, modules=True, episodes=10) for g in GAME_IDS}
    elapsed = time.perf_counter() - started
    bands_ok = all(
        0.5 * reference[g] <= plain[g].mean <= 1.5 * reference[g] for g in GAME_IDS
    )
    twc_ok = with_modules["twc"].mean >= 500
    deltas = {g: with_modules[g].mean - plain[g].mean for g in GAME_IDS}
    deltas_ok = all(0 < deltas[g] <= module_ceiling[g] for g in GAME_IDS)
    report(
        "action-space statistics",
        bands_ok and twc_ok and deltas_ok and elapsed < 60,
        f"means {({g: round(s.mean, 1) for g, s in plain.items()})}, "
        f"deltas {({g: round(d, 1) for g, d in deltas.items()})}, {elapsed:.1f}s",
    )


def test_determinism():
    """Replaying any variation twice produces byte-identical archives."""
    rng = random.Random(1234)
    pairs = [(rng.choice(GAME_IDS), rng.randrange(300)) for _ in range(20)]

    def archive(game_id: str, seed: int) -> bytes:
        split, index = SPLITS[seed // 100], seed % 100
        variation = GAMES[game_id].generate(split, index)
        result = run_episode(
            variation, OracleReplayAgent(variation.gold_with_modules), modules=True
        )
        lines = [record_to_json(r) for r in result.records]
        return "\n".join(lines).encode()

    mismatches = [
        (game_id, seed)
        for game_id, seed in pairs
        if archive(game_id, seed) != archive(game_id, seed)
    ]
    report(
        "determinism",
        not mismatches,
        f"20 pairs replayed twice, {len(mismatches)} mismatches",
    )


def _problem_key(game_id: str, params) -> object:
    if game_id == "arithmetic":
        return (params.op, params.a, params.b)
    if game_id == "sorting":
        return tuple(sorted(Fraction(q.normalized) for q in params.items))
    if game_id == "twc":
        return params.target
    return (
        params.start,
        params.target,
        frozenset(frozenset((u, v)) for u, _, v in params.edges),
    )


def test_split_disjointness():
    """No defining problem appears in more than one split."""
    collisions = []
    for game_id in GAME_IDS:
        seen: dict[object, str] = {}
        for split in SPLITS:
            for index in range(VARIATIONS_PER_SPLIT):
                key = _problem_key(game_id, GAMES[game_id].generate(split, index).params)
                if key in seen and seen[key] != split:
                    collisions.append((game_id, split, index))
                seen.setdefault(key, split)
        if len(seen) != len(SPLITS) * VARIATIONS_PER_SPLIT:
            collisions.append((game_id, "duplicate-in-split", len(seen)))
    report(
        "split disjointness",
        not collisions,
        f"1200 variations checked, collisions: {collisions or 'none'}",
    )


def test_navigation_oracle_equivalence():
    """Scraped-map next-step replies always lie on a true shortest path."""
    game = MapReaderGame()
    rng = random.Random(818)
    houses = 0
    failures = 0
    while houses < 100:
        built = game._try_build_map(rng)
        if built is None or len(built[0]) > 12:
            continue
        rooms, edges, start, target = built
        adj = adjacency(edges)
        params = game.build_params(built, random.Random(0))
        nav = NavigationModule()
        nav.observe(map_text(params))

        def distance(a: str, b: str) -> int:
            parents = bfs_parents(adj, a)
            hops, node = 0, b
            while node != a:
                node = parents[node]
                hops += 1
            return hops

        for here in rooms:
            nav.observe(f"You are in the {here}.")
            for there in rooms:
                if there == here:
                    continue
                reply = nav.respond(parse(f"next step to {there}"))
                hop = reply.removeprefix("The next location to go to is: ")
                if hop not in adj[here] or distance(hop, there) != distance(here, there) - 1:
                    failures += 1
        houses += 1
    report(
        "navigation oracle equivalence",
        failures == 0,
        f"100 houses, every (current, target) pair checked, {failures} bad hops",
    )


def test_module_purity():
    """Module chatter never changes where anything is."""
    rng = random.Random(99)
    checked, impure = 0, 0
    for game_id in GAME_IDS:
        game = GAMES[game_id]
        for _ in range(50):
            variation = game.generate("train", rng.randrange(VARIATIONS_PER_SPLIT))
            episode = Episode(variation, modules=True)
            chosen: list[str] = []
            for _ in range(12):
                if episode.over:
                    break
                valid = episode.valid_actions()
                env = [a.surface for a in valid.env]
                mod = [a.surface for a in valid.module]
                pool = mod if (mod and rng.random() < 0.5) else env
                surface = rng.choice(pool)
                chosen.append(surface)
                episode.step(surface)
            with_modules = placement_snapshot(episode.state)

            replay = Episode(variation, modules=False)
            for surface in chosen:
                if game.is_module_action(surface) or replay.over:
                    continue
                replay.step(surface)
            if with_modules != placement_snapshot(replay.state):
                impure += 1
            checked += 1
    report(
        "module purity",
        impure == 0,
        f"{checked} mixed sequences replayed without modules, {impure} diverged",
    )


def test_imitation_golden_file(arithmetic_playthrough):
    """The serialized reference playthrough matches the hand-written file."""
    result = run_episode(
        arithmetic_playthrough,
        OracleReplayAgent(arithmetic_playthrough.gold_with_modules),
    )
    rendered = "".join(bc_line(r) + "\n" for r in result.records)
    golden = GOLDEN.read_text(encoding="utf-8")
    report(
        "imitation-format golden file",
        rendered == golden,
        f"{len(result.records)} lines, byte-equal: {rendered == golden}",
    )


def test_random_floor():
    """A random agent stays near the floor on every game."""
    means = {
        game_id: evaluate(
            random_factory(0), game_id, split="test", modules=True
        ).mean_score
        for game_id in GAME_IDS
    }
    report(
        "random-agent floor",
        all(mean <= 0.2 for mean in means.values()),
        f"means {({g: round(m, 3) for g, m in means.items()})} (bound 0.2)",
    )


def test_throughput():
    """100 random episodes per game finish inside five seconds each."""
    timings = {}
    for game_id in GAME_IDS:
        started = time.perf_counter()
        evaluate(random_factory(1), game_id, split="test", modules=True)
        timings[game_id] = time.perf_counter() - started
    report(
        "throughput",
        all(t < 5.0 for t in timings.values()),
        f"{({g: round(t, 2) for g, t in timings.items()})} seconds per 100 episodes",
    )
