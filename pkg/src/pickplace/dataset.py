"""Dataset files: behavior-cloning text, trajectory archives, variations.

The behavior-cloning input template is a single line of fields separated
by the literal token "</s>":

    d </s> OBS o_t </s> INV inv </s> LOOK look </s> <extra_id_0> </s>
    PACT a_prev </s> POBS o_prev </s>

joined with single spaces; empty history slots at the first step leave a
double space behind.  The separator tokens are emitted as plain text.
"""

from __future__ import annotations

import dataclasses
import json
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import AgentFailure
from .games import VARIATIONS_PER_SPLIT, EpisodeVariation, get_game
from .harness import OracleReplayAgent, TrajectoryRecord, run_episode

_BC_PATTERN = re.compile(
    r"^(?P<task>.*?) </s> OBS (?P<obs>.*?) </s> INV (?P<inv>.*?) </s> "
    r"LOOK (?P<look>.*?) </s> <extra_id_0> </s> "
    r"PACT (?P<prev_action>.*?) </s> POBS (?P<prev_obs>.*?) </s>$",
    re.DOTALL,
)


def serialize_bc(record: TrajectoryRecord) -> str:
    """Input side of one behavior-cloning example."""
    return " ".join(
        [
            record.task,
            "</s>",
            "OBS",
            record.obs,
            "</s>",
            "INV",
            record.inv,
            "</s>",
            "LOOK",
            record.look,
            "</s>",
            "<extra_id_0>",
            "</s>",
            "PACT",
            record.prev_action,
            "</s>",
            "POBS",
            record.prev_obs,
            "</s>",
        ]
    )


def parse_bc(text: str) -> dict[str, str]:
    """Invert serialize_bc.

    Exact for any field values that do not themselves contain the "</s>"
    separator token, which engine text never does.
    """
    match = _BC_PATTERN.match(text)
    if match is None:
        raise ValueError("text does not match the behavior-cloning template")
    return match.groupdict()


def _flatten(text: str) -> str:
    # one record per line; multi-line fields (inventories, maps) keep their
    # newlines only in the jsonl archive
    return text.replace("\n", " ")


def bc_line(record: TrajectoryRecord) -> str:
    return f"{_flatten(serialize_bc(record))}\t{_flatten(record.target)}"


def write_bc_file(records: list[TrajectoryRecord], path: Path) -> None:
    path.write_text("".join(bc_line(r) + "\n" for r in records), encoding="utf-8")


def record_to_json(record: TrajectoryRecord) -> str:
    payload = {
        "game": record.game_id,
        "split": record.split,
        "index": record.index,
        "step": record.step,
        "task": record.task,
        "obs": record.obs,
        "inv": record.inv,
        "look": record.look,
        "prev_action": record.prev_action,
        "prev_obs": record.prev_obs,
        "target": record.target,
        "score": record.score,
        "valid_actions": record.valid_actions,
        "input": serialize_bc(record),
    }
    return json.dumps(payload, ensure_ascii=False)


def write_trajectories_jsonl(records: list[TrajectoryRecord], path: Path) -> None:
    path.write_text(
        "".join(record_to_json(r) + "\n" for r in records), encoding="utf-8"
    )


def variation_to_json(variation: EpisodeVariation) -> str:
    payload = {
        "game": variation.game_id,
        "split": variation.split,
        "index": variation.index,
        "seed": variation.seed,
        "task": variation.task_description,
        "params": dataclasses.asdict(variation.params),
        "gold_with_modules": variation.gold_with_modules,
        "gold_no_modules": variation.gold_no_modules,
    }
    return json.dumps(payload, ensure_ascii=False)


def write_variations_jsonl(variations: list[EpisodeVariation], path: Path) -> None:
    path.write_text(
        "".join(variation_to_json(v) + "\n" for v in variations), encoding="utf-8"
    )


@dataclass
class ExportResult:
    game_id: str
    split: str
    modules: bool
    records: int
    bc_path: Path
    trajectories_path: Path
    variations_path: Path


def export_dataset(
    game_id: str,
    split: str,
    modules: bool = True,
    out_dir: Path | str = "datasets",
    episodes: int = VARIATIONS_PER_SPLIT,
) -> ExportResult:
    """Replay the oracle over a whole split and write the dataset files.

    Every replay must finish at score 1.0 and every recorded target must be
    a member of its step's valid action set; anything else is a bug in the
    generator and aborts the export.
    """
    game = get_game(game_id)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    records: list[TrajectoryRecord] = []
    variations: list[EpisodeVariation] = []
    for index in range(episodes):
        variation = game.generate(split, index)
        plan = variation.gold_with_modules if modules else variation.gold_no_modules
        result = run_episode(variation, OracleReplayAgent(plan), modules=modules)
        if result.score != 1.0:
            raise AgentFailure(
                f"{game_id} {split} {index}: gold replay scored {result.score}",
                partial=result,
            )
        for record in result.records:
            if record.target not in record.valid_actions:
                raise AgentFailure(
                    f"{game_id} {split} {index} step {record.step}: "
                    f"gold action {record.target!r} not in the valid set",
                    partial=result,
                )
        records.extend(result.records)
        variations.append(variation)

    tag = "mods" if modules else "nomods"
    bc_path = out / f"{game_id}.{split}.{tag}.bc.txt"
    trajectories_path = out / f"{game_id}.{split}.{tag}.jsonl"
    variations_path = out / f"{game_id}.{split}.variations.jsonl"
    write_bc_file(records, bc_path)
    write_trajectories_jsonl(records, trajectories_path)
    write_variations_jsonl(variations, variations_path)
    return ExportResult(
        game_id=game_id,
        split=split,
        modules=modules,
        records=len(records),
        bc_path=bc_path,
        trajectories_path=trajectories_path,
        variations_path=variations_path,
    )
