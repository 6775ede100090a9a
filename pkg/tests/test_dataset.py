"""Dataset serialization tests: the imitation-learning line format and the
exported file trio."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pickplace.dataset import (
    bc_line,
    export_dataset,
    parse_bc,
    record_to_json,
    serialize_bc,
    variation_to_json,
    write_bc_file,
)
from pickplace.errors import AgentFailure
from pickplace.harness import OracleReplayAgent, TrajectoryRecord, run_episode

GOLDEN = Path(__file__).parent / "data" / "arithmetic_playthrough.bc.txt"


def record(**overrides) -> TrajectoryRecord:
    fields = dict(
        game_id="arithmetic",
        split="test",
        index=0,
        step=0,
        task="solve it",
        obs="you see a thing",
        inv="empty",
        look="a room",
        prev_action="",
        prev_obs="",
        target="take thing",
        score=0.0,
        valid_actions=["take thing", "look around"],
    )
    fields.update(overrides)
    return TrajectoryRecord(**fields)


class TestSerialize:
    def test_template_shape(self):
        assert serialize_bc(record()) == (
            "solve it </s> OBS you see a thing </s> INV empty </s> "
            "LOOK a room </s> <extra_id_0> </s> PACT  </s> POBS  </s>"
        )

    def test_history_fields_fill_in(self):
        text = serialize_bc(record(prev_action="look around", prev_obs="a room"))
        assert "PACT look around </s>" in text
        assert "POBS a room </s>" in text

    def test_empty_history_leaves_double_spaces(self):
        text = serialize_bc(record())
        assert "PACT  </s>" in text
        assert "POBS  </s>" in text

    def test_parse_inverts_serialize(self):
        fields = parse_bc(serialize_bc(record(prev_action="x", prev_obs="y z")))
        assert fields == {
            "task": "solve it",
            "obs": "you see a thing",
            "inv": "empty",
            "look": "a room",
            "prev_action": "x",
            "prev_obs": "y z",
        }

    def test_parse_rejects_other_text(self):
        with pytest.raises(ValueError):
            parse_bc("just some text")

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(
            st.text(
                alphabet=st.characters(blacklist_characters="<>", blacklist_categories=("Cs",)),
                max_size=40,
            ).filter(lambda s: "</s>" not in s),
            min_size=6,
            max_size=6,
        )
    )
    def test_round_trip_for_any_separator_free_fields(self, fields):
        task, obs, inv, look, pa, po = fields
        rec = record(task=task, obs=obs, inv=inv, look=look, prev_action=pa, prev_obs=po)
        parsed = parse_bc(serialize_bc(rec))
        assert parsed["task"] == task
        assert parsed["obs"] == obs
        assert parsed["inv"] == inv
        assert parsed["look"] == look
        assert parsed["prev_action"] == pa
        assert parsed["prev_obs"] == po


class TestBcLines:
    def test_line_is_input_tab_target(self):
        line = bc_line(record())
        inp, _, target = line.partition("\t")
        assert target == "take thing"
        assert parse_bc(inp)["task"] == "solve it"

    def test_newlines_flatten_but_separators_survive(self):
        rec = record(inv="a map\na coin")
        line = bc_line(rec)
        assert "\n" not in line
        assert "INV a map a coin </s>" in line
        assert line.count("</s>") == 7

    def test_write_bc_file(self, tmp_path):
        path = tmp_path / "x.bc.txt"
        write_bc_file([record(), record(step=1)], path)
        assert path.read_text().count("\n") == 2


class TestGoldenPlaythrough:
    def test_reference_episode_matches_the_golden_file(self, arithmetic_playthrough):
        result = run_episode(
            arithmetic_playthrough,
            OracleReplayAgent(arithmetic_playthrough.gold_with_modules),
        )
        rendered = "".join(bc_line(r) + "\n" for r in result.records)
        assert rendered == GOLDEN.read_text(encoding="utf-8")


class TestJsonArchives:
    def test_record_json_is_lossless(self):
        rec = record(prev_action="look around", score=0.5)
        payload = json.loads(record_to_json(rec))
        assert payload["game"] == "arithmetic"
        assert payload["step"] == 0
        assert payload["prev_action"] == "look around"
        assert payload["score"] == 0.5
        assert payload["valid_actions"] == ["take thing", "look around"]
        assert payload["input"] == serialize_bc(rec)

    def test_variation_json_carries_the_gold_plans(self, arithmetic_playthrough):
        payload = json.loads(variation_to_json(arithmetic_playthrough))
        assert payload["game"] == "arithmetic"
        assert payload["gold_with_modules"] == arithmetic_playthrough.gold_with_modules
        assert payload["gold_no_modules"] == arithmetic_playthrough.gold_no_modules
        assert payload["params"]["op"] == "div"


class TestExport:
    def test_arithmetic_split_exports_five_records_per_episode(self, tmp_path):
        result = export_dataset(
            "arithmetic", "dev", modules=True, out_dir=tmp_path, episodes=6
        )
        assert result.records == 30
        assert result.bc_path.name == "arithmetic.dev.mods.bc.txt"
        lines = result.bc_path.read_text().splitlines()
        assert len(lines) == 30
        for line in lines:
            assert "\t" in line and "<extra_id_0>" in line

    def test_trajectory_archive_lines_match_the_bc_lines(self, tmp_path):
        result = export_dataset(
            "twc", "dev", modules=True, out_dir=tmp_path, episodes=4
        )
        jl = [json.loads(l) for l in result.trajectories_path.read_text().splitlines()]
        bc = result.bc_path.read_text().splitlines()
        assert len(jl) == len(bc) == result.records == 12
        for payload, line in zip(jl, bc):
            flattened = payload["input"].replace("\n", " ")
            assert line == f"{flattened}\t{payload['target'].replace(chr(10), ' ')}"

    def test_variations_file_has_one_line_per_episode(self, tmp_path):
        result = export_dataset(
            "sorting", "dev", modules=False, out_dir=tmp_path, episodes=5
        )
        assert result.variations_path.name == "sorting.dev.variations.jsonl"
        lines = result.variations_path.read_text().splitlines()
        assert len(lines) == 5
        assert result.trajectories_path.name == "sorting.dev.nomods.jsonl"

    def test_exports_are_byte_stable(self, tmp_path):
        a = export_dataset("mapreader", "dev", out_dir=tmp_path / "a", episodes=5)
        b = export_dataset("mapreader", "dev", out_dir=tmp_path / "b", episodes=5)
        assert a.bc_path.read_bytes() == b.bc_path.read_bytes()
        assert a.trajectories_path.read_bytes() == b.trajectories_path.read_bytes()
        assert a.variations_path.read_bytes() == b.variations_path.read_bytes()

    def test_export_rejects_a_plan_that_cannot_score(self, tmp_path, monkeypatch):
        from pickplace.games import GAMES

        game = GAMES["arithmetic"]
        original = game.generate

        def sabotage(split, index):
            variation = original(split, index)
            variation.gold_with_modules = ["look around"]
            return variation

        monkeypatch.setattr(game, "generate", sabotage)
        with pytest.raises(AgentFailure):
            export_dataset("arithmetic", "dev", out_dir=tmp_path, episodes=1)
