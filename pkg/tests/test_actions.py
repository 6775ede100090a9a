"""Parser and executor tests: grammar shapes, enumeration soundness."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pickplace import actions as A
from pickplace.errors import InvalidAction, UnrecognizedCommand
from pickplace.games import GAMES
from pickplace.world import placement_snapshot
from tests.conftest import (
    make_arithmetic_playthrough_params,
    make_mapreader_playthrough_params,
    make_sorting_playthrough_params,
)

PLAYTHROUGH_PARAMS = {
    "arithmetic": make_arithmetic_playthrough_params,
    "sorting": make_sorting_playthrough_params,
    "mapreader": make_mapreader_playthrough_params,
}


class TestParse:
    def test_take(self):
        action = A.parse("take white coat")
        assert (action.verb, action.args) == (A.TAKE, ("white coat",))
        assert action.surface == "take white coat"

    def test_put_splits_on_the_last_in(self):
        action = A.parse("put 25g of tin in box")
        assert action.args == ("25g of tin", "box")

    def test_read(self):
        assert A.parse("read math problem").verb == A.READ

    def test_move(self):
        assert A.parse("move north").args == ("north",)

    def test_look_and_inventory_are_fixed_phrases(self):
        assert A.parse("look around").verb == A.LOOK
        assert A.parse("inventory").verb == A.INVENTORY

    def test_case_and_whitespace_are_normalized(self):
        assert A.parse("  TAKE   Coin ").surface == "take coin"

    @pytest.mark.parametrize(
        "surface,args",
        [
            ("query white coat", ("query", "white coat")),
            ("next step to laundry room", ("next_step", "laundry room")),
            ("add 22 11", ("add", "22", "11")),
            ("div 22 11", ("div", "22", "11")),
            ("sort ascending", ("sort", "ascending")),
            ("sort descending", ("sort", "descending")),
        ],
    )
    def test_module_commands(self, surface, args):
        action = A.parse(surface)
        assert action.verb == A.MODULE
        assert action.args == args
        assert action.surface == surface

    @pytest.mark.parametrize(
        "bad",
        [
            "",
            "   ",
            "dance",
            "take",
            "take the coin",       # commands use bare names, no articles
            "put a coin in box",
            "put coin box",        # missing " in "
            "move up",
            "add 22",              # calculator needs two operands
            "add twenty two",
            "sort sideways",
            "look",
        ],
    )
    def test_rejects_unknown_shapes(self, bad):
        with pytest.raises(UnrecognizedCommand):
            A.parse(bad)


@settings(max_examples=40, deadline=None)
@given(
    name=st.lists(
        st.text(alphabet="abcdefghij", min_size=1, max_size=5),
        min_size=1,
        max_size=3,
    )
    .map(" ".join)
    .filter(lambda s: not s.startswith(("the ", "a ", "an "))),
    container=st.sampled_from(["box", "counter", "key holder"]),
)
def test_surfaces_round_trip_through_the_parser(name, container):
    for action in (A.take(name), A.put(name, container), A.read(name)):
        again = A.parse(action.surface)
        assert again == action


@pytest.mark.parametrize("game_id", sorted(PLAYTHROUGH_PARAMS))
def test_every_enumerated_action_round_trips(game_id):
    state = GAMES[game_id].build_world(PLAYTHROUGH_PARAMS[game_id]())
    for action in A.enumerate_env_actions(state):
        assert A.parse(action.surface) == action


@pytest.mark.parametrize("game_id", sorted(PLAYTHROUGH_PARAMS))
def test_every_enumerated_action_executes(game_id):
    """Enumeration soundness: nothing offered can fail."""
    import copy

    base = GAMES[game_id].build_world(PLAYTHROUGH_PARAMS[game_id]())
    for action in A.enumerate_env_actions(base):
        state = copy.deepcopy(base)
        feedback = A.execute_env(state, action)
        assert isinstance(feedback, str) and feedback


class TestExecute:
    def setup_method(self):
        game = GAMES["arithmetic"]
        self.state = game.build_world(make_arithmetic_playthrough_params())

    def test_take_feedback(self):
        assert A.execute_env(self.state, A.parse("take 2 bananas")) == (
            "You take the 2 bananas."
        )

    def test_put_feedback(self):
        A.execute_env(self.state, A.parse("take 2 bananas"))
        assert A.execute_env(self.state, A.parse("put 2 bananas in box")) == (
            "You put the 2 bananas in the box."
        )

    def test_read_returns_the_text(self):
        A.execute_env(self.state, A.parse("take math problem"))
        feedback = A.execute_env(self.state, A.parse("read math problem"))
        assert feedback.startswith("Your task is to solve the following math problem:")

    def test_take_requires_visibility(self):
        with pytest.raises(InvalidAction):
            A.execute_env(self.state, A.parse("take unicorn"))

    def test_put_requires_holding(self):
        with pytest.raises(InvalidAction):
            A.execute_env(self.state, A.parse("put 2 bananas in box"))

    def test_put_requires_an_open_receptacle(self):
        A.execute_env(self.state, A.parse("take 2 bananas"))
        with pytest.raises(InvalidAction):
            A.execute_env(self.state, A.parse("put 2 bananas in fridge"))

    def test_read_requires_readable(self):
        A.execute_env(self.state, A.parse("take 2 bananas"))
        with pytest.raises(InvalidAction):
            A.execute_env(self.state, A.parse("read 2 bananas"))

    def test_move_feedback_is_the_new_room(self):
        game = GAMES["mapreader"]
        state = game.build_world(make_mapreader_playthrough_params())
        feedback = A.execute_env(state, A.parse("move east"))
        assert feedback.startswith("You are in the corridor.")
        assert state.agent_location == "corridor"

    def test_move_needs_a_connection(self):
        game = GAMES["mapreader"]
        state = game.build_world(make_mapreader_playthrough_params())
        with pytest.raises(InvalidAction):
            A.execute_env(state, A.parse("move north"))

    def test_look_does_not_change_the_world(self):
        before = placement_snapshot(self.state)
        A.execute_env(self.state, A.parse("look around"))
        A.execute_env(self.state, A.parse("inventory"))
        assert placement_snapshot(self.state) == before

    def test_done_state_enumerates_nothing_and_executes_nothing(self):
        self.state.done = True
        assert A.enumerate_env_actions(self.state) == []
        with pytest.raises(InvalidAction):
            A.execute_env(self.state, A.parse("look around"))


def test_enumeration_covers_the_expected_openers():
    state = GAMES["arithmetic"].build_world(make_arithmetic_playthrough_params())
    surfaces = [a.surface for a in A.enumerate_env_actions(state)]
    assert "take math problem" in surfaces
    assert "take 2 bananas" in surfaces
    assert "look around" in surfaces
    assert "inventory" in surfaces
    # nothing held yet, so no put or read
    assert not any(s.startswith(("put ", "read ")) for s in surfaces)
    A.execute_env(state, A.parse("take 2 bananas"))
    surfaces = [a.surface for a in A.enumerate_env_actions(state)]
    assert "put 2 bananas in box" in surfaces
    assert "put 2 bananas in counter" in surfaces
    assert "put 2 bananas in fridge" not in surfaces
