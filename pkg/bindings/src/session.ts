/**
 * Session handle over the engine's line-JSON subprocess protocol.
 *
 * Each session owns one `pickplace serve` subprocess and speaks
 * newline-delimited JSON over its stdin/stdout. The protocol is strictly
 * request/reply in order, so replies are matched to callers with a FIFO
 * queue. Actions and observations cross the boundary as plain strings;
 * no engine state lives on this side of the pipe.
 */

import { spawn, type ChildProcessWithoutNullStreams } from "node:child_process";
import { createInterface, type Interface } from "node:readline";

import { EngineError, ProtocolError, SessionClosed, mapEngineError } from "./errors.js";

export type GameId = "arithmetic" | "mapreader" | "sorting" | "twc";
export type Split = "train" | "dev" | "test";

export interface SessionOptions {
  /** Variation split to reset into. Default "test". */
  split?: Split;
  /** Variation index within the split (0-99). Default 0. */
  index?: number;
  /** Attach the game's solver module. Default true. */
  modules?: boolean;
  /** Python interpreter running the engine. Default $PICKPLACE_PYTHON or "python3". */
  python?: string;
}

export type ResetOptions = Pick<SessionOptions, "split" | "index" | "modules">;

export interface ResetResult {
  /** Opening observation o_0 (the rendered start room). */
  observation: string;
  /** The episode's task text. */
  taskDescription: string;
  /** Valid action surfaces at step 0, environment and module actions unioned. */
  validActions: string[];
}

export interface StepResult {
  /** Feedback for the action just taken. */
  observation: string;
  /** Episode score after the action. */
  score: number;
  /** True once the episode ended (success, forfeit, or step cap). */
  done: boolean;
  /** Valid action surfaces for the next step; empty once done. */
  validActions: string[];
  /** Actions consumed so far this episode. */
  stepsUsed: number;
}

interface Pending {
  resolve: (reply: Record<string, unknown>) => void;
  reject: (error: Error) => void;
}

const STDERR_TAIL = 2000;

export class Session {
  readonly game: GameId;

  private readonly defaults: ResetOptions;
  private readonly child: ChildProcessWithoutNullStreams;
  private readonly lines: Interface;
  private readonly pending: Pending[] = [];
  private stderrTail = "";
  private failure: Error | null = null;
  private closed = false;
  private exited: Promise<void>;

  constructor(game: GameId, options: SessionOptions = {}) {
    this.game = game;
    this.defaults = {
      split: options.split,
      index: options.index,
      modules: options.modules,
    };
    const python = options.python ?? process.env.PICKPLACE_PYTHON ?? "python3";
    this.child = spawn(python, ["-m", "pickplace", "serve"], {
      stdio: ["pipe", "pipe", "pipe"],
    });
    // a write after subprocess death must surface via fail(), not crash node
    this.child.stdin.on("error", () => {});
    this.child.stderr.setEncoding("utf-8");
    this.child.stderr.on("data", (chunk: string) => {
      this.stderrTail = (this.stderrTail + chunk).slice(-STDERR_TAIL);
    });
    this.lines = createInterface({ input: this.child.stdout });
    this.lines.on("line", (line) => this.onLine(line));
    this.exited = new Promise((resolve) => {
      this.child.on("error", (error) => {
        this.fail(new ProtocolError(`engine process failed to start: ${error.message}`));
        resolve();
      });
      this.child.on("exit", (code) => {
        const detail = this.stderrTail.trim();
        const error = this.closed
          ? new SessionClosed("session is closed")
          : new ProtocolError(
              `engine process exited with code ${code}` + (detail ? `: ${detail}` : "")
            );
        this.fail(error);
        resolve();
      });
    });
  }

  /** Start a fresh episode. Later calls discard the previous episode. */
  async reset(overrides: ResetOptions = {}): Promise<ResetResult> {
    const opts = { ...this.defaults, ...overrides };
    const reply = await this.request({
      op: "reset",
      game: this.game,
      split: opts.split ?? "test",
      index: opts.index ?? 0,
      modules: opts.modules ?? true,
    });
    return {
      observation: reply.observation as string,
      taskDescription: reply.task as string,
      validActions: reply.valid as string[],
    };
  }

  /**
   * Take one action. Free text is accepted; the engine aligns it to the
   * nearest valid action before dispatch. Throws SessionClosed once the
   * episode is over or before the first reset.
   */
  async step(action: string): Promise<StepResult> {
    const reply = await this.request({ op: "step", action });
    return {
      observation: reply.observation as string,
      score: reply.score as number,
      done: reply.done as boolean,
      validActions: reply.valid as string[],
      stepsUsed: reply.steps as number,
    };
  }

  /** Current valid action surfaces without advancing the episode. */
  async validActions(): Promise<string[]> {
    const reply = await this.request({ op: "valid" });
    return reply.valid as string[];
  }

  /** Spec-named alias for validActions(). */
  valid_actions(): Promise<string[]> {
    return this.validActions();
  }

  /** Shut the subprocess down. Idempotent; the handle is unusable after. */
  async close(): Promise<void> {
    if (this.closed) {
      return;
    }
    this.closed = true;
    if (!this.failure) {
      try {
        await this.request({ op: "close" }, true);
      } catch {
        // already dead; nothing to release
      }
    }
    this.fail(new SessionClosed("session is closed"));
    this.child.stdin.end();
    const killer = setTimeout(() => this.child.kill(), 2000);
    await this.exited;
    clearTimeout(killer);
    this.lines.close();
  }

  private request(
    payload: Record<string, unknown>,
    closing = false
  ): Promise<Record<string, unknown>> {
    if (this.failure && !closing) {
      return Promise.reject(this.failure);
    }
    if (this.closed && !closing) {
      return Promise.reject(new SessionClosed("session is closed"));
    }
    return new Promise((resolve, reject) => {
      this.pending.push({ resolve, reject });
      this.child.stdin.write(JSON.stringify(payload) + "\n");
    });
  }

  private onLine(line: string): void {
    const waiter = this.pending.shift();
    if (!waiter) {
      return;
    }
    let reply: Record<string, unknown>;
    try {
      reply = JSON.parse(line) as Record<string, unknown>;
    } catch {
      waiter.reject(new ProtocolError(`engine wrote a non-JSON line: ${line.slice(0, 200)}`));
      return;
    }
    if (reply.ok === true) {
      waiter.resolve(reply);
    } else {
      waiter.reject(mapEngineError(String(reply.kind), String(reply.error)));
    }
  }

  private fail(error: Error): void {
    if (!this.failure) {
      this.failure = error;
    }
    while (this.pending.length > 0) {
      this.pending.shift()!.reject(this.failure);
    }
  }
}

export { EngineError, ProtocolError, SessionClosed };
