/**
 * Environment bindings for the pickplace engine.
 *
 * Gives scripting-runtime agents a reset/step session over the games
 * without linking the engine in-process: each session drives a
 * `pickplace serve` subprocess and exchanges plain strings.
 *
 *   const session = make("arithmetic", { split: "test", index: 0 });
 *   const { observation, taskDescription, validActions } = await session.reset();
 *   const result = await session.step("take math problem");
 *   await session.close();
 */

export {
  Session,
  type GameId,
  type ResetOptions,
  type ResetResult,
  type SessionOptions,
  type Split,
  type StepResult,
} from "./session.js";
export { EngineError, ProtocolError, SessionClosed } from "./errors.js";

import { Session, type GameId, type SessionOptions } from "./session.js";

/** All game ids the engine serves. */
export const GAMES: readonly GameId[] = ["arithmetic", "mapreader", "sorting", "twc"];

/**
 * Open a session for one game. The handle owns its subprocess; call
 * close() when done. Options become the session's reset defaults.
 */
export function make(game: GameId, options: SessionOptions = {}): Session {
  return new Session(game, options);
}
